"""
Utility Functions for Markdown Reports
"""

# Python Standard Library
from typing import Any, Dict

# Third-Party Libraries
from jinja2 import Template

# Local
from src.config import ConfigManager










def render_report(config: ConfigManager, data: Dict[str, Any], template_name: str = 'law_report.md') -> str:
    """
    Render a report through a Jinja2 template.

    Parameters
    ----------
    config : ConfigManager
        Custom container for validating, storing and retrieving application settings
    data : Dict[str, Any]
        Report dictionary; its keys are the template variables
    template_name : str
        File name inside TEMPLATES_DIR

    Returns
    -------
    str
        Rendered markdown
    """
    with open(f'{config.get("TEMPLATES_DIR")}/{template_name}', 'r', encoding='utf-8') as file:
        template_content = file.read()

    template = Template(template_content, trim_blocks=True, lstrip_blocks=True)

    return template.render(data)
