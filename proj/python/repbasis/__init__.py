"""Sets with prescribed representation functions for binary linear forms."""

import json as _json

from . import _repbasis
from ._repbasis import (
    RepbasisError,
    bezout,
    gadic_decode,
    gadic_set,
    rep_count,
    rep_table,
    seven_coefficients,
)

__all__ = [
    "RepbasisError",
    "bezout",
    "construct",
    "density_profile",
    "explain_t",
    "find_t",
    "gadic_decode",
    "gadic_set",
    "is_b_f_g",
    "rep_count",
    "rep_table",
    "seven_coefficients",
]


def _dump(spec):
    return "" if spec is None else _json.dumps(spec)


def construct(form, target=None, window=10, rounds=1, radius=10_000, explain=False):
    """Run the greedy construction for ``form = (u1, u2)``.

    ``target`` is a target-spec dict such as ``{"default": 1}``; ``None``
    means f = 1 everywhere. Returns the construction as a dict with a
    ``certificate`` entry.
    """
    u1, u2 = form
    return _json.loads(_repbasis.construct(u1, u2, _dump(target), window, rounds, radius, explain))


def explain_t(form, a_prime, b, t, zero_set=None):
    u1, u2 = form
    return _json.loads(_repbasis.explain_t(u1, u2, sorted(set(a_prime)), b, t, _dump(zero_set)))


def find_t(form, a_prime, b, zero_set=None, radius=10_000):
    """First admissible t in scan order, as ``(t, (x, y))``."""
    u1, u2 = form
    return _repbasis.find_t(u1, u2, sorted(set(a_prime)), b, _dump(zero_set), radius)


def is_b_f_g(a, coeffs, g=1, lo=0, hi=100, cap=100_000_000):
    """``(holds, witness, count)`` for the predicate R_{A,F}(n) <= g on [lo, hi]."""
    return _repbasis.is_b_f_g(sorted(set(a)), list(coeffs), g, lo, hi, cap)


def density_profile(zero_set, radii=(10, 100, 1000)):
    return _json.loads(_repbasis.density_profile(_dump(zero_set), list(radii)))
