import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclehull.census import (
    ONE,
    T,
    TMatrix,
    TPoly,
    ZERO,
    BadParity,
    an_bn,
    circcirc_count,
    circcirc_trace,
    corner_enumerator,
    count_band,
    face_count,
    face_polynomial,
    generating_series_check,
    matrix_A,
    matrix_S,
    matrix_Z,
    sequences,
)
from cyclehull.moebius import enumerate_band_partitions, enumerate_circ
from cyclehull.partitions import enumerate_YN


def test_tpoly_str():
    assert str(face_polynomial(7)) == "29 + 56*t + 35*t^2 + 7*t^3"
    assert str((TPoly.const(2) + T) ** 3) == "8 + 12*t + 6*t^2 + t^3"
    assert str(ZERO) == "0"
    assert str(ONE - T) == "1 - t"
    assert str(T ** 4) == "t^4"


def test_tpoly_arithmetic():
    p = (ONE + T) * (ONE - T)
    assert p == ONE - T * T
    assert p(3) == -8
    assert (T ** 2).compose(ONE + T) == ONE + 2 * T + T ** 2
    assert (ONE + T).subs_t_plus_1() == TPoly.const(2) + T


@given(st.integers(0, 6), st.integers(0, 6))
def test_tpoly_eval_commutes_with_product(a, b):
    p = ONE + a * T
    q = TPoly.const(b) + T ** 2
    assert (p * q)(5) == p(5) * q(5)


def test_transfer_matrix_identities():
    s = matrix_S()
    z = matrix_Z()
    a = matrix_A()
    assert z * a == s * s - s.scale(T)
    assert s.trace() == ONE + 2 * T


def test_power_decomposition():
    s = matrix_S()
    corr = s * s - s.scale(ONE + T)
    for n in range(1, 8):
        a_n, b_n = an_bn(n)
        assert s.power(n) == s.scale(a_n) + corr.scale(b_n)


def test_an_bn_recursion():
    for n in range(1, 10):
        a_n, b_n = an_bn(n)
        a_next, b_next = an_bn(n + 1)
        assert a_next == (ONE + T) * a_n + T * b_n
        assert b_next == a_n + T * b_n


def test_corner_enumerator_counts_corners():
    from cyclehull.moebius import circ_inner_corners

    for n in (3, 5, 7, 9):
        poly = corner_enumerator(n)
        hist = [0] * (n // 2 + 1)
        for lam in enumerate_circ(n):
            hist[len(circ_inner_corners(lam, n))] += 1
        while hist and hist[-1] == 0:
            hist.pop()
        assert list(poly.coeffs) == hist


def test_corner_enumerator_parity():
    with pytest.raises(BadParity):
        corner_enumerator(6)
    with pytest.raises(ValueError):
        corner_enumerator(1)


def test_face_polynomial_small():
    assert face_polynomial(1) == ONE
    assert str(face_polynomial(5)) == "11 + 15*t + 5*t^2"
    assert face_polynomial(6) == (TPoly.const(2) + T) ** 3


def test_face_count_matches_polynomial():
    for n in (5, 7, 9, 11):
        poly = face_polynomial(n)
        for v, c in enumerate(poly.coeffs):
            assert face_count(n, v) == c


def test_sequences():
    lucas = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199]
    fib = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    for n in range(10):
        l, f, c = sequences(n)
        assert (l, f, c) == (lucas[n], fib[n], cat[n])


def test_count_band_agrees_with_enumeration():
    for n in range(2, 12):
        for m in range(1, n // 2 + 1):
            assert count_band(n, m) == len(enumerate_band_partitions(n, m))


def test_count_band_extremes():
    assert count_band(11, 5) == len(enumerate_YN(11))
    assert count_band(13, 1) == sequences(13)[0]


def test_circcirc():
    want = [1, 4, 6, 15, 31, 67, 144, 309, 664, 1426]
    for k in range(10):
        assert circcirc_count(k) == want[k]
        assert circcirc_trace(k) == want[k]
    for k in range(3, 10):
        assert circcirc_count(k) == (
            circcirc_count(k - 1)
            + 2 * circcirc_count(k - 2)
            + circcirc_count(k - 3)
        )


def test_generating_series():
    assert generating_series_check(20)


def test_matrix_power_identity():
    m = TMatrix.from_rows([[1, 0], [1, 1]])
    assert m.power(0) == TMatrix.identity(2)
    assert m.power(5) == TMatrix.from_rows([[1, 0], [5, 1]])
