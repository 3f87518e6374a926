"""Shared builders for the test suite.

Tests draw random curves through ascart.sweep.random_curve with fixed
seeds, so every run exercises identical inputs.
"""

import random

import pytest

from ascart import GF, CurveSpec, PoleDatum
from ascart.sweep import random_curve


def curve(p, inf_coeffs, finite=(), k=1):
    """CurveSpec over GF(p^k) from integer coefficient lists.

    finite is a sequence of (location, coeffs-degrees-1..d) pairs.
    """
    field = GF(p, k)
    poles = [PoleDatum.at_infinity(field, inf_coeffs)]
    for loc, coeffs in finite:
        poles.append(PoleDatum.finite(field, loc, coeffs))
    return CurveSpec(field, tuple(poles))


@pytest.fixture
def rng():
    return random.Random(20240501)


def random_specs(p, orders, count, seed, k=1):
    """Deterministic stream of random curves with the given pole orders."""
    field = GF(p, k)
    r = random.Random(seed)
    return [random_curve(field, orders, r) for _ in range(count)]
