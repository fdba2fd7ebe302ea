"""Max-plus linear algebra and closed-form tropical optimization.

Matrices are lists of rows (or {"rows", "cols", "data"} dicts); the zero
element is float("-inf") or the string "-inf". Pass exact=True to compute
over rationals, in which case non-integer results come back as "a/b".
"""

import json
import math

from ._core import TropicalError
from . import _core

__all__ = ["TropicalError", "spectral_radius", "kleene_star", "solve_schedule", "solve"]


def _encode(value):
    if isinstance(value, float) and math.isinf(value) and value < 0:
        return "-inf"
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value):
    if value == "-inf":
        return float("-inf")
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


def _call(fn, payload, **kwargs):
    return _decode(json.loads(fn(json.dumps(_encode(payload)), **kwargs)))


def spectral_radius(matrix, exact=False):
    """Maximum cycle mean of a square matrix."""
    return _call(_core.spectral_radius_json, matrix, exact=exact)["spectralRadius"]


def kleene_star(matrix, exact=False):
    """I + A + ... + A^(n-1) as a list of rows."""
    return _call(_core.kleene_star_json, matrix, exact=exact)["star"]["data"]


def solve_schedule(spec, exact=False, intermediates=False, eps=1e-9):
    """Minimum maximum flow time schedule; same fields as the CLI output."""
    return _call(_core.solve_schedule_json, spec, exact=exact, intermediates=intermediates, eps=eps)


def solve(problem, exact=False, eps=1e-9):
    """Closed-form minimum of an optimization problem given as a dict."""
    return _call(_core.solve_json, problem, exact=exact, eps=eps)
