"""
Handler Functions Module

This module provides one handler per command-line verb. Every handler takes
the ConfigManager and the parsed arguments, reads its input documents, runs
the models and returns an exit status with the documents to print:

1. Validation: validating documents of every kind
2. Conversion: the functors F, G, H, K, the Cartan map, T0 and round trips
3. Morphisms: checking, composing and taking adjoints
4. Entities: compiling unital product entities
5. Products: products, mediating morphisms and the universal property
6. Generation: seeded instances and the category-law harness

Components
----------
Functions:
    handle_validate, handle_convert, handle_cartan, handle_t0, handle_roundtrip,
    handle_check_morphism, handle_compose, handle_adjoint, handle_entity_compile,
    handle_product, handle_mediate, handle_verify_universal, handle_gen, handle_laws

The handler functions act as entry points for the verbs routed by src.app.
"""

from .handle_validate import handle_validate
from .handle_convert import handle_convert
from .handle_convert import handle_cartan
from .handle_convert import handle_t0
from .handle_convert import handle_roundtrip
from .handle_morphisms import handle_check_morphism
from .handle_morphisms import handle_compose
from .handle_morphisms import handle_adjoint
from .handle_entity import handle_entity_compile
from .handle_product import handle_product
from .handle_product import handle_mediate
from .handle_product import handle_verify_universal
from .handle_generate import handle_gen
from .handle_generate import handle_laws


__all__ = [
    'handle_validate',
    'handle_convert',
    'handle_cartan',
    'handle_t0',
    'handle_roundtrip',
    'handle_check_morphism',
    'handle_compose',
    'handle_adjoint',
    'handle_entity_compile',
    'handle_product',
    'handle_mediate',
    'handle_verify_universal',
    'handle_gen',
    'handle_laws'
]
