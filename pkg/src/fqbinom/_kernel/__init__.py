"""Kernel backend selection.

The compiled Cython backend is used when it importable and the operands fit
its int64 accumulation bounds; otherwise calls fall back to the pure-Python
backend. Set FQBINOM_KERNEL=pure or FQBINOM_KERNEL=compiled to force a
backend (forcing "compiled" raises if the extension is missing).
"""

from __future__ import annotations

import os

from . import pure

_fast = None
_choice = os.environ.get("FQBINOM_KERNEL", "auto")
if _choice not in ("auto", "pure", "compiled"):
    raise RuntimeError(f"FQBINOM_KERNEL must be auto, pure or compiled, not {_choice!r}")
if _choice != "pure":
    try:
        from . import _fastpoly as _fast  # type: ignore[attr-defined]
    except ImportError:
        if _choice == "compiled":
            raise
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"


def backend_name() -> str:
    return BACKEND


def _fits_compiled(p, outer, t):
    return p <= _fast.P_LIMIT and outer * t <= _fast.ACC_LIMIT


def _t_of(fmod):
    return 1 if fmod is None or len(fmod) == 2 else len(fmod) - 1


def poly_mul(a, b, p, fmod=None):
    if _fast is not None:
        t = _t_of(fmod)
        if _fits_compiled(p, min(len(a), len(b)) // t + 1, t):
            return _fast.poly_mul(a, b, p, fmod)
    return pure.poly_mul(a, b, p, fmod)


def poly_rem(a, m, p, fmod=None):
    if _fast is not None:
        t = _t_of(fmod)
        if _fits_compiled(p, len(m) // t + 1, t):
            return _fast.poly_rem(a, m, p, fmod)
    return pure.poly_rem(a, m, p, fmod)


def poly_mulmod(a, b, m, p, fmod=None):
    if _fast is not None:
        t = _t_of(fmod)
        if _fits_compiled(p, min(len(a), len(b)) // t + 1, t):
            return _fast.poly_mulmod(a, b, m, p, fmod)
    return pure.poly_mulmod(a, b, m, p, fmod)


def poly_powmod(a, e, m, p, fmod=None):
    if _fast is not None:
        t = _t_of(fmod)
        if _fits_compiled(p, len(m) // t + 1, t):
            return _fast.poly_powmod(a, e, m, p, fmod)
    return pure.poly_powmod(a, e, m, p, fmod)
