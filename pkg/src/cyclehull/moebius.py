"""A discrete Moebius strip, outer rims of partitions, and the fold map.

Sites are pairs (i, j) with 0 <= i <= j <= N, glued by the rule that a
position (i, N) is the same site as (0, i).  Canonical representatives
therefore satisfy 0 <= i <= j <= N - 1, and there are N(N+1)/2 sites in
total.  The deck transformation of the orientation double cover is
T(i, j) = (j, N + i); it reverses the level coordinate delta = j - i via
delta(T p) = N - delta(p), which is what makes the strip one-sided.

Every partition in Y_N traces an outer rim: a monotone staircase of N
sites following the boundary of its diagram, closing up into a loop that
wraps the strip once.  The central band of half-width m consists of the
sites with k - m <= delta <= N - k + m where k = N // 2; partitions whose
rim stays inside the band m = 1 form the subfamily written Y_N° here
(`enumerate_circ`).  The fold map pushes an arbitrary rim into that band
by repeatedly flipping extremal corner sites inward, line by line, and is
the vertex-level shadow of a retraction of one injective hull onto the
other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    IndexOutOfRange,
    NotInYN,
    Partition,
    enumerate_YN,
    make_partition,
    require_YN,
    size,
    tau,
)

Site = tuple[int, int]


class InvalidRim(ValueError):
    """Point sequence is not the lift of an outer rim."""


class BadBandIndex(ValueError):
    """Band half-width m outside 1 <= m <= N // 2."""


class NotInYNCirc(ValueError):
    """Partition's rim leaves the central band of half-width 1."""


class ParameterizationFailure(ValueError):
    """Partition does not fit the two-row doubling parameterization."""


def canon_site(i: int, j: int, n: int) -> Site:
    """Canonical representative of a strip position.

    The gluing (i, j) ~ (j - N, i) folds any position with j >= N back
    into the triangle 0 <= i <= j <= N - 1; in particular (i, N) ~ (0, i).
    """
    if not (0 <= i <= j <= i + n):
        raise IndexOutOfRange(f"({i},{j}) is not a strip position for N={n}")
    while j >= n:
        i, j = j - n, i
    if not 0 <= i <= j:
        raise IndexOutOfRange(f"({i},{j}) does not reduce to a site for N={n}")
    return (i, j)


def site_str(s: Site) -> str:
    return f"({s[0]},{s[1]})"


def delta(s: Site) -> int:
    return s[1] - s[0]


@dataclass(frozen=True)
class RimPath:
    """Outer rim of a partition: an N-step staircase lift plus its sites.

    lift holds the N+1 lattice points from (0, lam_1) to (lam_1, N); the
    last point is the glued image of the first, so the loop has exactly N
    distinct sites.
    """

    n: int
    lift: tuple[tuple[int, int], ...]
    sites: tuple[Site, ...]

    def site_set(self) -> frozenset[Site]:
        return frozenset(self.sites)


def outer_rim(lam: Partition, n: int) -> RimPath:
    """Boundary staircase of the diagram of lam, read inside the strip.

    The diagram is padded to N - lam_1 rows; the path starts at (0, lam_1)
    and, scanning rows bottom to top, walks right along each row's lower
    edge and then up one step, ending at (lam_1, N).
    """
    require_YN(lam, n)
    width = lam[0] if lam else 0
    rows = n - width
    p = list(lam) + [0] * (rows + 1 - len(lam))
    i, j = 0, width
    pts = [(i, j)]
    for r in range(rows, 0, -1):
        for _ in range(p[r - 1] - p[r]):
            i += 1
            pts.append((i, j))
        j += 1
        pts.append((i, j))
    assert len(pts) == n + 1 and pts[-1] == (width, n)
    sites = tuple(canon_site(a, b, n) for a, b in pts[:n])
    return RimPath(n, tuple(pts), sites)


def rim_to_partition(rim: RimPath, n: int) -> Partition:
    """Recover the partition from its rim; validates the lift thoroughly."""
    lift = rim.lift
    if rim.n != n or len(lift) != n + 1:
        raise InvalidRim(f"lift must have {n + 1} points")
    c = lift[0][1]
    if lift[0] != (0, c) or lift[-1] != (c, n):
        raise InvalidRim("lift must run from (0,c) to (c,N)")
    for (a, b), (a2, b2) in zip(lift, lift[1:]):
        if not (0 <= a <= b <= n):
            raise InvalidRim(f"point ({a},{b}) leaves the strip")
        if (a2 - a, b2 - b) not in ((1, 0), (0, 1)):
            raise InvalidRim(f"({a},{b}) -> ({a2},{b2}) is not a unit step")
    lam = _partition_from_sites(frozenset(rim.sites), n)
    if outer_rim(lam, n).lift != lift:
        raise InvalidRim("lift is not the outer rim of any partition")
    return lam


def _partition_from_sites(sites: frozenset[Site], n: int) -> Partition:
    # row r of the partition is the largest i with site (i, N - r) present
    best: dict[int, int] = {}
    for i, j in sites:
        if i > best.get(j, -1):
            best[j] = i
    parts = []
    for r in range(1, n + 1):
        if n - r not in best:
            break
        parts.append(best[n - r])
    lam = make_partition(parts)
    assert len(sites) == n
    return lam


def in_band(s: Site, n: int, m: int) -> bool:
    """Is the site inside the central band of half-width m?

    The band is k - m <= delta <= N - k + m with k = N // 2.  For odd N it
    spans 2m + 2 levels, for even N the symmetric 2m + 1.
    """
    k = n // 2
    if not 1 <= m <= k:
        raise BadBandIndex(f"band index {m} not in [1, {k}]")
    s = canon_site(s[0], s[1], n)
    return k - m <= delta(s) <= n - k + m


def _rim_delta_range(lam: Partition, n: int) -> tuple[int, int]:
    ds = [delta(s) for s in outer_rim(lam, n).sites]
    return min(ds), max(ds)


def in_circ(lam: Partition, n: int) -> bool:
    """Membership in Y_N°: the rim stays in the band m = 1."""
    require_YN(lam, n)
    if n < 2:
        return True
    k = n // 2
    lo, hi = _rim_delta_range(lam, n)
    return k - 1 <= lo and hi <= n - k + 1


def require_circ(lam: Partition, n: int) -> None:
    if not in_circ(lam, n):
        raise NotInYNCirc(f"{lam or '()'} has a rim outside the band m=1")


@lru_cache(maxsize=None)
def enumerate_band_partitions(n: int, m: int) -> tuple[Partition, ...]:
    """All lam in Y_N whose rim stays in the band of half-width m."""
    k = n // 2
    if not 1 <= m <= k:
        raise BadBandIndex(f"band index {m} not in [1, {k}]")
    out = []
    for lam in enumerate_YN(n):
        lo, hi = _rim_delta_range(lam, n)
        if k - m <= lo and hi <= n - k + m:
            out.append(lam)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_circ(n: int) -> tuple[Partition, ...]:
    if n < 2:
        return enumerate_YN(n)
    return enumerate_band_partitions(n, 1)


def circ_inner_corners(lam: Partition, n: int) -> frozenset[int]:
    """Rows whose corner box can be removed without leaving Y_N°."""
    require_circ(lam, n)
    from .partitions import corners

    keep = set()
    for r in corners(lam, n).inner:
        mu = list(lam)
        mu[r - 1] -= 1
        if in_circ(make_partition(mu), n):
            keep.add(r)
    return frozenset(keep)


FoldStep = tuple[str, Site]


def fold_trace(lam: Partition, n: int) -> tuple[Partition, tuple[FoldStep, ...]]:
    """Fold lam into Y_N° and report every site that was flipped.

    The rim is swept in rounds u = 0 .. k-2.  In round u the line delta = u
    is scanned left to right and every rim site that is a local minimum of
    delta (entered by an i-step, left by a j-step) is flipped to the
    opposite corner of its unit square, two levels up.  Then the line
    delta = N - u is scanned the same way and every local maximum is
    flipped two levels down.  Each flip moves one boundary box of the
    diagram; after the last round the rim lies inside the band m = 1.
    """
    require_YN(lam, n)
    k = n // 2
    sites = set(outer_rim(lam, n).sites)
    trace: list[FoldStep] = []

    def flip(old: Site, new_i: int, new_j: int, part: str) -> None:
        new = canon_site(new_i, new_j, n)
        assert new not in sites
        sites.remove(old)
        sites.add(new)
        trace.append((part, old))

    for u in range(0, k - 1):
        for a in range(1, n - u):
            s = (a, a + u)
            if s not in sites:
                continue
            if canon_site(a - 1, a + u, n) in sites and canon_site(a, a + u + 1, n) in sites:
                flip(s, a - 1, a + u + 1, "upper")
        dp = n - u
        for c in range(0, u + 1):
            s = canon_site(c, c + dp, n)
            if s not in sites:
                continue
            if canon_site(c, c + dp - 1, n) in sites and canon_site(c + 1, c + dp, n) in sites:
                flip(s, c + 1, c + dp - 1, "lower")

    out = _partition_from_sites(frozenset(sites), n)
    assert in_circ(out, n)
    return out, tuple(trace)


def fold(lam: Partition, n: int) -> Partition:
    """The retraction Y_N -> Y_N°; identity on Y_N° and tau-equivariant."""
    return fold_trace(lam, n)[0]


_FIBRE_CAP = 15


@lru_cache(maxsize=None)
def _fold_map(n: int) -> dict[Partition, Partition]:
    return {lam: fold(lam, n) for lam in enumerate_YN(n)}


def fold_fibre(lam0: Partition, n: int) -> tuple[Partition, ...]:
    """All mu in Y_N with fold(mu) = lam0, by exhaustive search.

    Enumeration is capped at N = 15 (2**14 folds); beyond that use
    fold_fibre_size, which needs only the rim of lam0.
    """
    require_circ(lam0, n)
    if n > _FIBRE_CAP:
        raise ValueError(
            f"fibre enumeration is capped at N={_FIBRE_CAP}; "
            "use fold_fibre_size for larger N"
        )
    return tuple(sorted(m for m, f in _fold_map(n).items() if f == lam0))


def boundary_loop(n: int) -> tuple[Site, ...]:
    """The N boundary sites of the band m = 1, in cyclic order.

    Position x carries the site glued from (x, x + k - 1); as x sweeps
    0..N-1 the loop runs once along the lower edge of the band and, after
    the wrap, once along the upper edge.
    """
    k = n // 2
    if k < 1:
        return ()
    return tuple(canon_site(x, x + k - 1, n) for x in range(n))


def _boundary_runs(lam0: Partition, n: int) -> list[int]:
    # lengths of maximal cyclic runs of boundary positions on the rim
    marks = []
    rim = set(outer_rim(lam0, n).sites)
    for s in boundary_loop(n):
        marks.append(s in rim)
    if not marks or all(not x for x in marks):
        return []
    assert not all(marks)
    runs = []
    # rotate so the word starts right after an unmarked position
    start = next(x for x in range(len(marks)) if not marks[x])
    run = 0
    for t in range(1, len(marks) + 1):
        if marks[(start + t) % len(marks)]:
            run += 1
        elif run:
            runs.append(run)
            run = 0
    if run:
        runs.append(run)
    return runs


def fold_fibre_size(lam0: Partition, n: int) -> int:
    """Size of the fold fibre over lam0, as a product of Catalan numbers.

    Each maximal cyclic run of rim sites along the band boundary of length
    r contributes a factor C_r.
    """
    require_circ(lam0, n)
    out = 1
    for r in _boundary_runs(lam0, n):
        out *= math.comb(2 * r, r) // (r + 1)
    return out


def fibre_factorization(lam0: Partition, n: int) -> str:
    """The cyclic Catalan word of lam0, e.g. 'C_2*C_0*C_2*C_0^6'."""
    require_circ(lam0, n)
    marks = []
    rim = set(outer_rim(lam0, n).sites)
    loop = boundary_loop(n)
    for s in loop:
        marks.append(s in rim)
    if not loop:
        return "C_0^%d" % n if n else ""
    if not any(marks):
        return f"C_0^{n}" if n > 1 else "C_0"
    nn = len(marks)
    start = next(x for x in range(nn) if marks[x] and not marks[(x - 1) % nn])
    word: list[str] = []
    t = 0
    while t < nn:
        val = marks[(start + t) % nn]
        g = 1
        while t + g < nn and marks[(start + t + g) % nn] == val:
            g += 1
        if val:
            word.append(f"C_{g}")
        else:
            word.append(f"C_0^{g}" if g > 1 else "C_0")
        t += g
    return "*".join(word)


@lru_cache(maxsize=None)
def enumerate_circcirc(n: int) -> tuple[Partition, ...]:
    """Partitions of Y_N° whose fold fibre is a singleton."""
    return tuple(
        lam for lam in enumerate_circ(n) if fold_fibre_size(lam, n) == 1
    )


def double_embed(lam: Partition, n: int) -> Partition:
    """Embed Y_N° into Y_2N° (N odd) compatibly with the squared shift.

    The rim of lam, which lives in the four-level band of the odd strip,
    is encoded by column increments over the staircase (k-1, ..., 1): pad
    lam to k+1 parts p_1..p_{k+1} and set c_i = p_i - (k - i) for
    i <= k - 1, c_k = p_k, c_(k+1) = p_(k+1).  Each c_i in {0,1,2} splits
    into bits (eps_i, delta_i) and the image is the double staircase
    (2k, ..., 1) fattened by (eps_1, delta_1, ..., eps_k, delta_k) with an
    extra final row when eps_(k+1) = 1.
    """
    if n % 2 == 0:
        raise ValueError(f"doubling is defined for odd N, got {n}")
    require_circ(lam, n)
    k = n // 2
    p = list(lam) + [0] * (k + 1 - len(lam))
    if len(p) > k + 1:
        raise ParameterizationFailure(f"{lam} has more than {k + 1} parts")
    c = [0] * (k + 2)
    for i in range(1, k):
        c[i] = p[i - 1] - (k - i)
    if k >= 1:
        c[k] = p[k - 1]
    c[k + 1] = p[k]
    eps = [0] * (k + 2)
    dlt = [0] * (k + 1)
    for i in range(1, k + 1):
        if c[i] not in (0, 1, 2):
            raise ParameterizationFailure(f"column increment c_{i}={c[i]}")
        dlt[i] = 1 if c[i] >= 1 else 0
        eps[i] = 1 if c[i] == 2 else 0
    if c[k + 1] not in (0, 1):
        raise ParameterizationFailure(f"tail increment c_{k + 1}={c[k + 1]}")
    eps[k + 1] = c[k + 1]
    for i in range(1, k + 1):
        if c[i] == 0 and eps[i + 1]:
            raise ParameterizationFailure("eps after an empty column")
    if eps[1] + eps[k + 1] > 1:
        raise ParameterizationFailure("eps_1 and eps_(k+1) both set")
    out = []
    for i in range(1, k + 1):
        out.append((2 * k - (2 * i - 2)) + eps[i])
        out.append((2 * k - (2 * i - 1)) + dlt[i])
    out.append(eps[k + 1])
    image = make_partition(out)
    require_circ(image, 2 * n)
    return image


def tau_equivariance_defect(lam: Partition, n: int) -> int:
    """young_distance(fold(tau lam), tau(fold lam)); zero when equivariant."""
    from .partitions import young_distance

    return young_distance(fold(tau(lam, n), n), tau(fold(lam, n), n))
