import pytest
from hypothesis import given
import hypothesis.strategies as st

from cyclehull.partitions import (
    Corners,
    IndexOutOfRange,
    ModelSpace,
    NotInYN,
    NotWeaklyDecreasing,
    alpha,
    corners,
    cycle_distance,
    enumerate_YN,
    format_partition,
    in_YN,
    make_partition,
    max_hook,
    parse_partition,
    rectangular,
    size,
    tau,
    tau_orbit,
    xn_distance,
    young_distance,
)

Y9 = enumerate_YN(9)
pairs9 = st.tuples(st.sampled_from(Y9), st.sampled_from(Y9))


def test_make_partition_strips_zeros():
    assert make_partition([3, 2, 0, 0]) == (3, 2)
    assert make_partition([]) == ()


def test_make_partition_rejects_increasing():
    with pytest.raises(NotWeaklyDecreasing):
        make_partition([1, 2])


def test_format_parse_round_trip():
    for lam in Y9:
        assert parse_partition(format_partition(lam)) == lam
    assert format_partition(()) == ""
    assert parse_partition("5,4,2,1") == (5, 4, 2, 1)


def test_enumerate_sizes():
    for n in range(1, 10):
        assert len(enumerate_YN(n)) == 2 ** (n - 1)


def test_in_YN_is_max_hook_bound():
    for lam in Y9:
        assert max_hook(lam) < 9
        assert in_YN(lam, 9)
    assert not in_YN((9,), 9)
    assert not in_YN((1,) * 9, 9)


def test_enumerate_is_sorted_and_distinct():
    assert list(Y9) == sorted(set(Y9))


@given(pairs9)
def test_young_distance_is_a_metric(pair):
    a, b = pair
    d = young_distance(a, b)
    assert d >= 0
    assert (d == 0) == (a == b)
    assert d == young_distance(b, a)


@given(pairs9, st.sampled_from(Y9))
def test_young_distance_triangle(pair, c):
    a, b = pair
    assert young_distance(a, b) <= young_distance(a, c) + young_distance(c, b)


@given(pairs9)
def test_tau_is_an_isometry(pair):
    a, b = pair
    assert young_distance(tau(a, 9), tau(b, 9)) == young_distance(a, b)


def test_tau_has_order_n():
    for n in range(2, 9):
        for lam in enumerate_YN(n):
            seq = tau_orbit(lam, n)
            assert len(seq) == n
            assert tau(seq[-1], n) == lam
            assert n % len(set(seq)) == 0


def test_staircase_is_fixed():
    for k in range(1, 5):
        n = 2 * k + 1
        stair = tuple(range(k, 0, -1))
        assert tau(stair, n) == stair


def test_rectangular_distance_closed_form():
    n = 8
    for i in range(n + 1):
        for j in range(n + 1):
            assert xn_distance(i, j, n) == young_distance(
                rectangular(i, n), rectangular(j, n)
            )
            assert xn_distance(i, j, n) == abs(i - j) * (n - abs(i - j))


def test_alpha_points_realize_cycle_distance():
    for n in (5, 7, 9):
        for i in range(n):
            for j in range(n):
                assert cycle_distance(i, j, n) == young_distance(
                    alpha(i, n), alpha(j, n)
                )


def test_cycle_distance_step():
    assert cycle_distance(0, 1, 7) == 2
    assert cycle_distance(0, 3, 7) == 6
    assert cycle_distance(0, 3, 6) == 3
    assert cycle_distance(2, 2, 9) == 0


def test_corners_add_and_remove():
    got = corners((3, 1), 6)
    assert isinstance(got, Corners)
    for r in got.inner:
        lam = list((3, 1))
        lam[r - 1] -= 1
        assert in_YN(make_partition(lam), 6)
    for r in got.outer:
        lam = list((3, 1)) + [0]
        lam[r - 1] += 1
        assert in_YN(make_partition(lam), 6)


def test_require_errors():
    from cyclehull.partitions import require_YN

    with pytest.raises(NotInYN):
        require_YN((4,), 4)
    with pytest.raises(IndexOutOfRange):
        alpha(9, 9)
    with pytest.raises(IndexOutOfRange):
        rectangular(9, 4)
    with pytest.raises(ValueError):
        ModelSpace("torus", 5)


def test_model_space_matrices_are_metrics():
    for kind, n in (("xn", 6), ("cycle", 6), ("cycle", 7)):
        m = ModelSpace(kind, n).matrix()
        npts = len(m)
        for i in range(npts):
            assert m[i][i] == 0
            for j in range(npts):
                assert m[i][j] == m[j][i]
                for l in range(npts):
                    assert m[i][j] <= m[i][l] + m[l][j]
