from __future__ import annotations

import math

import pytest

from sombor.errors import QuadratureFailure
from sombor.quadrature import gauss_kronrod, integrate


@pytest.mark.parametrize("f,a,b,exact", [
    (lambda x: x ** 5, 0.0, 1.0, 1 / 6),
    (math.exp, -1.0, 2.0, math.e ** 2 - math.exp(-1)),
    (math.sin, 0.0, math.pi, 2.0),
])
def test_single_rule(f, a, b, exact):
    value, err = gauss_kronrod(f, a, b)
    assert value == pytest.approx(exact, rel=1e-12)
    assert err < 1e-8


def test_polynomial_exactness():
    # K15 integrates degree 22 exactly
    value, _ = gauss_kronrod(lambda x: x ** 22, -1.0, 1.0)
    assert value == pytest.approx(2 / 23, rel=1e-13)


@pytest.mark.parametrize("f,pts,exact", [
    (math.sqrt, (0.0, 1.0), 2 / 3),
    (lambda x: 1 / (1 + 25 * x * x), (-1.0, 1.0), 0.4 * math.atan(5)),
    (abs, (-1.0, 0.0, 2.0), 2.5),
])
def test_adaptive(f, pts, exact):
    res = integrate(f, pts, rel_tol=1e-10)
    assert res.value == pytest.approx(exact, rel=1e-9)
    assert res.intervals >= len(pts) - 1


def test_log_endpoint_singularity():
    res = integrate(math.log, (0.0, 1.0), rel_tol=1e-7)
    assert res.value == pytest.approx(-1.0, rel=1e-7)
    assert res.levels > 5


def test_failure_after_level_cap():
    with pytest.raises(QuadratureFailure):
        integrate(lambda x: 1 / math.sqrt(x) if x > 0 else 0.0, (0.0, 1.0), rel_tol=1e-14,
                  max_levels=3)
