import math

import numpy as np
import pytest

from fockbound.field import (
    FieldError,
    exp_field,
    expm_hermitian,
    field_matrix,
    norm_bound,
    truncated_field_norm,
    truncation_error_bound,
    unitarity_defect,
)

scipy_linalg = pytest.importorskip("scipy.linalg")


def test_single_mode_field_is_the_harmonic_oscillator_position(zz):
    x = zz.action.basepoint
    mat, degrees = field_matrix(zz.action, x, [x], 5)
    expected = np.diag(np.sqrt(np.arange(1, 6)), -1)
    assert np.allclose(mat, expected + expected.T)
    assert list(degrees) == [0, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("m", range(0, 6))
def test_truncated_norm_against_scipy(zz, m):
    x = zz.action.basepoint
    letters = zz.action.ball(1)
    got = truncated_field_norm(zz.action, x, letters, m)
    mat, degrees = field_matrix(zz.action, x, letters, m + 1)
    oracle = scipy_linalg.svdvals(mat[:, degrees <= m]).max()
    assert got == pytest.approx(oracle, abs=1e-12)
    assert got <= norm_bound(m) + 1e-9


def test_expm_against_scipy():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(12, 12))
    h = a + a.T
    for t in (0.1, 1.3, -2.0):
        assert np.allclose(expm_hermitian(h, t), scipy_linalg.expm(1j * t * h), atol=1e-12)


def test_error_bound_behaviour():
    assert truncation_error_bound(0.0, 3, 10) == 0.0
    assert truncation_error_bound(0.5, 3, 2) == math.inf
    assert truncation_error_bound(0.5, 3, 30) < truncation_error_bound(0.5, 3, 20)


def test_exp_field_unitary_on_safe_block(zz):
    x = zz.action.basepoint
    plus = exp_field(0.5, zz.action, x, 30)
    minus = exp_field(-0.5, zz.action, x, 30, safe_degree=plus.safe_degree)
    assert plus.safe_degree >= 5
    assert plus.error_bound <= 1e-9
    assert unitarity_defect(plus, minus) <= 1e-8


def test_exp_field_truncation_too_small(zz):
    x = zz.action.basepoint
    with pytest.raises(FieldError, match="raise the truncation"):
        exp_field(3.0, zz.action, x, 4)
    with pytest.raises(FieldError):
        exp_field(0.5, zz.action, x, 10, safe_degree=9)
