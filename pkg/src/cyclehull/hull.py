"""Explicit polyhedral models of the two injective hulls.

Vertices of the hull of X_N are indexed by all of Y_N, vertices of the
hull of C_N by the band partitions Y_N°; in both cases the vertex at lam
is the function j -> |tau^j(lam)| (shifted down by the constant
o = k(k-1)/2 in the cycle case).  A v-face is stored combinatorially as
(top, removed): the interval of partitions obtained from top by deleting
any subset of the v marked corner boxes.  Faces are cubes; the whole
complex is determined by its vertex partitions and corner sets, and the
census module predicts every f-vector that is assembled here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .partitions import (
    ModelSpace,
    Partition,
    corners,
    cycle_distance,
    enumerate_YN,
    format_partition,
    make_partition,
    require_YN,
    size,
    tau,
    tau_orbit,
    xn_distance,
)
from .moebius import (
    NotInYNCirc,
    circ_inner_corners,
    enumerate_circ,
    fold,
    outer_rim,
    require_circ,
)

VertexFunction = tuple[int, ...]


def f_vertex(lam: Partition, n: int) -> VertexFunction:
    """Vertex of the hull of X_N at lam: values[j] = |tau^j(lam)|."""
    require_YN(lam, n)
    return tuple(size(mu) for mu in tau_orbit(lam, n))


def g_vertex(lam: Partition, n: int) -> VertexFunction:
    """Vertex of the hull of C_N at lam: the f-values minus o = k(k-1)/2."""
    require_circ(lam, n)
    k = n // 2
    o = k * (k - 1) // 2
    return tuple(v - o for v in f_vertex(lam, n))


def _remove_boxes(top: Partition, rows: frozenset[int]) -> Partition:
    mu = list(top)
    for r in rows:
        mu[r - 1] -= 1
    return make_partition(mu)


@dataclass(frozen=True)
class Face:
    """Combinatorial cube face: top partition and removed corner rows."""

    top: Partition
    removed: frozenset[int]

    @property
    def dim(self) -> int:
        return len(self.removed)

    @property
    def bottom(self) -> Partition:
        return _remove_boxes(self.top, self.removed)

    def members(self) -> frozenset[Partition]:
        """The 2^dim vertex partitions of the face."""
        out = set()
        rows = tuple(self.removed)
        for t in range(len(rows) + 1):
            for sub in combinations(rows, t):
                out.add(_remove_boxes(self.top, frozenset(sub)))
        return frozenset(out)

    def sort_key(self):
        return (self.dim, self.top, tuple(sorted(self.removed)))


@dataclass
class HullComplex:
    space: ModelSpace
    vertices: dict[Partition, VertexFunction]
    faces: tuple[Face, ...]

    def f_vector(self) -> tuple[int, ...]:
        top = max((f.dim for f in self.faces), default=0)
        out = [0] * (top + 1)
        for f in self.faces:
            out[f.dim] += 1
        return tuple(out)

    def faces_of_dim(self, v: int) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.dim == v)

    def edges(self) -> tuple[tuple[Partition, Partition], ...]:
        out = []
        for f in self.faces_of_dim(1):
            a, b = sorted((f.top, f.bottom))
            out.append((a, b))
        return tuple(sorted(out))


def build_hull(kind: str, n: int) -> HullComplex:
    """Assemble the hull complex of X_N ('xn') or C_N ('cycle').

    Faces with top lam are in bijection with subsets of lam's inner
    corners (X_N) or of its removable-in-band corners (C_N); the even
    cycle runs through the identical band machinery and comes out a cube.
    """
    space = ModelSpace(kind, n)
    if kind == "xn":
        pool = enumerate_YN(n)
        vertices = {lam: f_vertex(lam, n) for lam in pool}
        corner_rows = {lam: corners(lam, n).inner for lam in pool}
    else:
        pool = enumerate_circ(n)
        vertices = {lam: g_vertex(lam, n) for lam in pool}
        corner_rows = {lam: circ_inner_corners(lam, n) for lam in pool}
    faces = []
    for lam in pool:
        rows = tuple(sorted(corner_rows[lam]))
        for t in range(len(rows) + 1):
            for sub in combinations(rows, t):
                faces.append(Face(lam, frozenset(sub)))
    faces.sort(key=Face.sort_key)
    return HullComplex(space, vertices, tuple(faces))


def retract_face(face: Face, n: int) -> Face:
    """Image of a face of the X_N hull under the folding retraction.

    The top vertex folds; a removed direction survives only when the very
    corner box it deletes is still present in the fold (the row kept its
    length) and is still removable inside the band.  The face collapses
    along all other directions: fold(top minus W) equals the fold of top
    minus (W intersect surviving rows), box by box.
    """
    top0 = fold(face.top, n)
    pad = list(top0) + [0] * (len(face.top) - len(top0))
    circ = circ_inner_corners(top0, n)
    keep = frozenset(
        r
        for r in face.removed
        if face.top[r - 1] == pad[r - 1] and r in circ
    )
    return Face(top0, keep)


@dataclass
class Graph:
    """1-skeleton with nodes named by partition strings."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    labels: dict[str, VertexFunction]


def skeleton(complex_: HullComplex) -> Graph:
    names = sorted(format_partition(lam) for lam in complex_.vertices)
    labels = {
        format_partition(lam): vals for lam, vals in complex_.vertices.items()
    }
    edges = sorted(
        tuple(sorted((format_partition(a), format_partition(b))))
        for a, b in complex_.edges()
    )
    return Graph(tuple(names), tuple(edges), labels)


def to_dot(graph: Graph, roles: dict[str, str] | None = None) -> str:
    """Deterministic DOT text; nodes in lexicographic label order."""
    ident = {name: f"n{i}" for i, name in enumerate(graph.nodes)}
    lines = ["graph hull {"]
    for name in graph.nodes:
        vals = " ".join(str(v) for v in graph.labels[name])
        attrs = [f'label="{name}"', f'values="{vals}"']
        if roles and name in roles:
            attrs.append(f'role="{roles[name]}"')
        lines.append(f'  {ident[name]} [{", ".join(attrs)}];')
    for a, b in graph.edges:
        lines.append(f"  {ident[a]} -- {ident[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(complex_: HullComplex) -> str:
    doc = {
        "space": complex_.space.kind,
        "n": complex_.space.n,
        "vertices": {
            format_partition(lam): list(vals)
            for lam, vals in sorted(complex_.vertices.items(), key=lambda kv: format_partition(kv[0]))
        },
        "faces": [
            {
                "top": format_partition(f.top),
                "removed": sorted(f.removed),
            }
            for f in complex_.faces
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=1)


@lru_cache(maxsize=None)
def max_cube_decomposition(n: int) -> tuple[tuple[Face, ...], tuple[Partition, ...]]:
    """The N maximal k-cubes of the odd cycle hull, plus leftover vertices.

    The base cube is the interval between the staircases (k-1, .., 1) and
    (k, .., 1); the others are its translates under the shift.  Returns
    (cubes, extras) where extras are the hull vertices on no maximal cube.
    """
    assert n % 2 == 1 and n >= 3
    k = n // 2
    staircase = tuple(range(k, 0, -1))
    base = Face(staircase, frozenset(range(1, k + 1)))
    assert base.removed <= circ_inner_corners(staircase, n)
    cubes = []
    current = base.members()
    for j in range(n):
        if j:
            current = frozenset(tau(v, n) for v in current)
        top = max(current, key=size)
        bottom = min(current, key=size)
        pad = list(bottom) + [0] * (len(top) - len(bottom))
        rows = frozenset(
            r for r in range(1, len(top) + 1) if top[r - 1] != pad[r - 1]
        )
        face = Face(top, rows)
        assert face.members() == current, (n, j)
        assert rows <= circ_inner_corners(top, n), (n, j)
        cubes.append(face)
    assert len(set(cubes)) == n
    incident = frozenset().union(*(c.members() for c in cubes))
    assert len(incident) == 1 + n * 2 ** (k - 1)
    extras = tuple(sorted(set(enumerate_circ(n)) - incident))
    return tuple(cubes), extras


def rim_vertex_solution(lam: Partition, n: int, kind: str) -> tuple[Fraction, ...]:
    """Solve the tight linear system read off the rim of lam.

    One equation per rim site (i, j): f_i + f_j = d(point_i, point_j) in
    the chosen model space.  The system is square; it must be regular and
    its solution is asserted to exist uniquely.
    """
    require_YN(lam, n)
    dist = xn_distance if kind == "xn" else cycle_distance
    rows = []
    for i, j in outer_rim(lam, n).sites:
        coeff = [Fraction(0)] * n
        coeff[i % n] += 1
        coeff[j % n] += 1
        rows.append(coeff + [Fraction(dist(i % n, j % n, n))])
    # Gauss-Jordan over exact rationals
    m = len(rows)
    assert m == n
    col = 0
    pivots = []
    for col in range(n):
        piv = next((r for r in range(len(pivots), m) if rows[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError(f"rim system of {lam} is singular")
        r0 = len(pivots)
        rows[r0], rows[piv] = rows[piv], rows[r0]
        fac = rows[r0][col]
        rows[r0] = [x / fac for x in rows[r0]]
        for r in range(m):
            if r != r0 and rows[r][col] != 0:
                f2 = rows[r][col]
                rows[r] = [x - f2 * y for x, y in zip(rows[r], rows[r0])]
        pivots.append(col)
    sol = tuple(rows[r][n] for r in range(n))
    return sol
