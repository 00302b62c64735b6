import pytest
from hypothesis import given, strategies as st

from pgatlas.fp import (
    FpScalar,
    Mat2,
    UnsupportedPrimeError,
    all_mat2,
    eta,
    gl2_enumerate,
    gl2_order,
    is_square,
    square_class,
    squares,
)


def test_is_square_examples():
    assert is_square(0, 5)  # 0 counts among the squares
    assert is_square(4, 5)
    assert not is_square(2, 5)


def test_square_counts():
    for p in (3, 5, 7):
        assert sum(1 for x in range(p) if is_square(x, p)) == (p + 1) // 2
    assert sum(1 for x in range(2) if is_square(x, 2)) == 2


def test_eta_values():
    assert eta(3) == 2
    assert eta(5) == 2
    assert eta(7) == 3
    with pytest.raises(ValueError):
        eta(2)


def test_square_class():
    for p in (3, 5, 7):
        for x in range(1, p):
            cls = square_class(x, p)
            assert cls in (1, eta(p))
            assert is_square(x * pow(cls, -1, p), p)


def test_unsupported_prime():
    with pytest.raises(UnsupportedPrimeError):
        squares(13)


def test_gl2_counts():
    assert gl2_order(2) == 6
    assert gl2_order(3) == 48
    for p in (2, 3, 5):
        mats = gl2_enumerate(p)
        assert len(mats) == gl2_order(p)
        assert all(m.det() != 0 for m in mats)


def test_identity_det():
    assert Mat2.identity(5).det() == 1


def test_inverse_and_product_closure():
    for p in (2, 3):
        mats = set(m.entries for m in gl2_enumerate(p))
        sample = gl2_enumerate(p)[:: max(1, len(mats) // 8)]
        for m in sample:
            assert m.inverse().entries in mats
            assert m.mul(m.inverse()).entries == Mat2.identity(p).entries
            for k in sample:
                assert m.mul(k).entries in mats


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Mat2(((1, 1), (1, 1)), 3).inverse()


@given(st.sampled_from([3, 5, 7]), st.integers(0, 48), st.integers(0, 48))
def test_scalar_field_laws(p, a, b):
    x, y = FpScalar(a, p), FpScalar(b, p)
    assert (x + y).value == (a + b) % p
    assert (x * y).value == (a * b) % p
    if y.value:
        assert (y * y.inverse()).value == 1


@given(st.sampled_from([2, 3, 5]), st.integers(0, 10**6))
def test_mat2_det_multiplicative(p, seed):
    import random

    rng = random.Random(seed)
    mats = gl2_enumerate(p)
    a, b = rng.choice(mats), rng.choice(mats)
    assert a.mul(b).det() == (a.det() * b.det()) % p


def test_rank():
    assert Mat2.zero(3).rank() == 0
    assert Mat2(((0, 1), (0, 0)), 3).rank() == 1
    assert Mat2.identity(3).rank() == 2


def test_all_mat2_count():
    assert sum(1 for _ in all_mat2(3)) == 81
