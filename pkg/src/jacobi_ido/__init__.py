"""Exact algebra for the Jacobi Lie algebra, its enveloping algebra and the algebras D_k."""

from .coeffs import K, GaussianRational, ParamScalar, scalar
from .ido import Ido, IdoElement
from .lie import make_jacobi, make_sl2
from .pbw import UEA, jacobi_algebra, sl2_algebra

__all__ = [
    "GaussianRational",
    "Ido",
    "IdoElement",
    "K",
    "ParamScalar",
    "UEA",
    "jacobi_algebra",
    "make_jacobi",
    "make_sl2",
    "scalar",
    "sl2_algebra",
]

__version__ = "0.1.0"
