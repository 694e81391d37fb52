"""Exact verification engine for a trivector stratification catalog.

The package recomputes, in rational arithmetic, the combinatorial and
invariant-theoretic claims stored in the packaged 183-record catalog:
closest-point indices, critical and strict cone splittings, relative
invariant values at representatives, stabilizer tangent dimensions,
unipotent orbit expansions, and destabilizing certificates.
"""

from .catalog import (
    Catalog,
    CatalogParseError,
    CatalogReport,
    CatalogSchemaError,
    StratumRecord,
    default_catalog,
    load_catalog,
    parse_catalog,
    serialize_catalog,
    verify_all,
    verify_record,
)
from .convex import nearest_point, positive_functional
from .exterior import (
    Multivector,
    gl_apply,
    index_of,
    parse_multivector,
    serialize_multivector,
    triple_of,
    wedge3,
)
from .strata import blocks_of, decompose, verify_beta
from .torus import ops_weight, pair, weight_of

__all__ = [
    "Catalog",
    "CatalogParseError",
    "CatalogReport",
    "CatalogSchemaError",
    "Multivector",
    "StratumRecord",
    "blocks_of",
    "decompose",
    "default_catalog",
    "gl_apply",
    "index_of",
    "load_catalog",
    "nearest_point",
    "ops_weight",
    "pair",
    "parse_catalog",
    "parse_multivector",
    "positive_functional",
    "serialize_catalog",
    "serialize_multivector",
    "triple_of",
    "verify_all",
    "verify_beta",
    "verify_record",
    "weight_of",
    "wedge3",
]

__version__ = "0.1.0"
