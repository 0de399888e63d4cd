"""Wire formats for CLI output.

Exact rationals are always emitted as strings ("p/q", or "p" when q = 1) so
downstream consumers never coerce them to floats; floats are emitted as
17-significant-digit strings for byte-determinism across platforms.
"""

from __future__ import annotations

from dataclasses import asdict, is_dataclass
from fractions import Fraction

from .exactnum import PiScalar, QuadNum
from .qseries import IntQSeries, QSeries24

__all__ = [
    "rat_str",
    "float_str",
    "quadnum_dict",
    "piscalar_dict",
    "qseries_dict",
    "int_series_dict",
    "jsonable",
]


def rat_str(x: Fraction) -> str:
    return str(x)


def float_str(x: float) -> str:
    return format(x, ".17g")


def quadnum_dict(z: QuadNum) -> dict:
    return {"a": rat_str(z.a), "b": rat_str(z.b), "d": z.d}


def piscalar_dict(x: PiScalar) -> dict:
    return {"coeff": rat_str(x.coeff), "halfPiPow": x.half_pi_pow}


def qseries_dict(s: QSeries24) -> dict:
    return {
        "offset24": s.offset24,
        "prec24": s.prec24,
        "coeffs": [rat_str(c) for c in s.coeffs],
    }


def int_series_dict(s: IntQSeries) -> dict:
    return {
        "offset": s.offset,
        "prec": s.prec,
        "coeffs": [rat_str(c) for c in s.coeffs],
    }


def jsonable(obj):
    """Recursively convert package values to JSON-ready structures."""
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, float):
        return float_str(obj)
    if isinstance(obj, QuadNum):
        return quadnum_dict(obj)
    if isinstance(obj, PiScalar):
        return piscalar_dict(obj)
    if isinstance(obj, QSeries24):
        return qseries_dict(obj)
    if isinstance(obj, IntQSeries):
        return int_series_dict(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": float_str(obj.real), "im": float_str(obj.imag)}
    return obj
