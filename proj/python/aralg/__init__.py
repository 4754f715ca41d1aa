"""Auslander-Reiten theory over finite-dimensional algebras (exact arithmetic)."""

import json as _json

from ._aralg import (
    Algebra,
    AralgError,
    InvalidAlgebra,
    InvalidModule,
    Module,
    NotSelfInjective,
    ParseError,
    ProjectiveInput,
    UnsupportedCharacteristic,
    WindowTooSmall,
    ar_middle,
    decompose,
    dtr,
    dtr_via_tensor,
    ext1_dim,
    is_isomorphic,
    quiver_dot,
    stable_hom_dim,
)
from . import _aralg


def ar_sequence(n, extension=0, matrices=False):
    """Certified almost split sequence ending at n, as a dict."""
    return _json.loads(_aralg._ar_sequence(n, extension, matrices))


def ar_triangle(n, window=(-6, 6), guard=2, matrices=False):
    return _json.loads(_aralg._ar_triangle(n, window[0], window[1], guard, matrices))


def verify(suite, algebra, window=(-6, 6), guard=2):
    """Runs a suite; returns (passed, report)."""
    rep = _json.loads(_aralg._verify(suite, algebra, window[0], window[1], guard))
    return rep["passed"], rep


def happel_compare(n, a=-2, b=2):
    return _json.loads(_aralg._happel_compare(n, a, b))


__all__ = [
    "Algebra", "Module", "AralgError", "ParseError", "InvalidAlgebra", "InvalidModule",
    "UnsupportedCharacteristic", "ProjectiveInput", "WindowTooSmall", "NotSelfInjective",
    "ar_sequence", "ar_triangle", "ar_middle", "verify", "happel_compare", "quiver_dot",
    "dtr", "dtr_via_tensor", "ext1_dim", "stable_hom_dim", "decompose", "is_isomorphic",
]
