from .backend import backend_name
from .fields import QQ, PrimeField, RationalField, field_from_json
from .matrix import Matrix
from .subspace import Subspace

__all__ = [
    "QQ",
    "PrimeField",
    "RationalField",
    "Matrix",
    "Subspace",
    "backend_name",
    "field_from_json",
]
