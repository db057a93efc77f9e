"""Generalized Riemann-Lebesgue decomposition integrals over pairs of
non-additive set functions, backed by an exact rational C++ engine.

Compound inputs and outputs are plain dicts mirroring the JSON file formats
of the ``grlint`` CLI; rationals travel as ``"p/q"`` strings.
"""

import json as _json
from fractions import Fraction

from . import _core
from ._core import __version__

__all__ = [
    "Fraction",
    "choquet",
    "classify",
    "integrate",
    "random_capacity",
    "survival",
    "variation",
    "verify",
    "__version__",
]


def _dumps(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _rat(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return str(x)


def integrate(scenario, probe=False):
    """Integrate a scenario (dict or JSON string); returns the report dict."""
    return _json.loads(_core.integrate(_dumps(scenario), probe))


def classify(capacity):
    """Classification flags of a capacity (dict or JSON string)."""
    return _json.loads(_core.classify(_dumps(capacity)))


def variation(capacity, subset):
    """Exact variation on the subset given as a list of point indices."""
    return Fraction(_core.variation(_dumps(capacity), list(subset)))


def choquet(f, capacity, subset):
    """Sorting-oracle Choquet integral of f over the subset."""
    return Fraction(_core.choquet([_rat(v) for v in f], _dumps(capacity), list(subset)))


def survival(f, capacity, subset):
    """Survival function of f over the subset, as a step-function dict."""
    return _json.loads(_core.survival([_rat(v) for v in f], _dumps(capacity), list(subset)))


def verify(theorems="all", instances=50, seed=42):
    """Run the theorem suite; returns the report dict."""
    return _json.loads(_core.verify(theorems, instances, seed))


def random_capacity(size, kind, seed):
    """Seeded random capacity of the requested kind, as a capacity dict."""
    return _json.loads(_core.random_capacity(size, kind, seed))
