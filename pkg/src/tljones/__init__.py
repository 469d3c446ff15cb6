"""Temperley-Lieb diagram calculus and vacuum coefficients of Thompson's group F.

Submodules
----------
scalars    exact rational / quadratic-irrational scalar arithmetic
forests    binary trees, forests, and tree-pair elements of Thompson's group F
tl         Temperley-Lieb diagrams, their linear combinations, and the tree functor
coeffs     vacuum coefficients, closed forms, decay and symmetry checks
graphpoly  Thompson graphs, chromatic/Tutte polynomials, graph-side evaluations
subgroups  dyadic parity subgroups, the PL action, stabilizer and membership tests
cli        command-line interface (entry point ``tljones``)
"""

from __future__ import annotations

import importlib

__version__ = "0.1.0"

_SUBMODULES = (
    "scalars",
    "forests",
    "tl",
    "coeffs",
    "graphpoly",
    "subgroups",
    "cli",
)

__all__ = list(_SUBMODULES)


def __getattr__(name: str):
    if name in _SUBMODULES:
        return importlib.import_module(f".{name}", __name__)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
