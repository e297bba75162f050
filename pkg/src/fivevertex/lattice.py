"""
Colored five-vertex lattice models: grids, boundary conditions, vertex
classification, state enumeration, Boltzmann weights, partition functions,
and the map from states to crystal tableaux.

Grid conventions (frozen; the JSON state documents use them verbatim):

- rows are labeled 1..r top to bottom, columns 0..N-1 right to left, with
  N = lam_1 + r; vertex (i, j) sits in row i, column j;
- horizontal[i-1][j] is the spin of the horizontal edge whose right
  neighbor is vertex (i, j-1): slot N is the left boundary of row i, slot 0
  the right boundary, and vertex (i, j) has left edge slot j+1 and right
  edge slot j;
- vertical[k][j] is the spin of the vertical edge at column j between rows
  k and k+1; v-slot 0 is the top boundary, v-slot r the bottom;
- spins are ints: 0 is the uncolored '+', and m >= 1 is color m; colors
  rank 1 highest, so "greater color" means smaller int.

Boundary data for a model with partition lam and flag w: the top boundary
carries color m at column lam_m + r - m, the right boundary carries color
m at row w(m), and every other boundary edge is uncolored.

Four vertex families share the grid: "generalized" admits all nine local
configurations; "open" forbids a22, a23, b1; "closed" forbids a22, a24,
b1; "reduced" forbids b1 and additionally caps every pair of colored
paths at one crossing.
"""

import functools
from dataclasses import dataclass

from . import laurent, weyl
from .crystal import schuetzenberger
from .patterns import (Pattern, Tableau, check_pattern, gt_to_tableau,
                       is_left_strict, staircase, subtract_staircase)

__all__ = [
    "FAMILIES", "NonAdmissibleError", "ModelSpec", "LatticeState",
    "VertexConfig", "classify_vertex", "admissible_for", "enumerate_states",
    "open_state_of_pattern", "gtp_of_state", "boltzmann",
    "partition_function", "pattern_tableau", "crystal_tableau",
    "color_path", "pair_intersections", "pair_crossings", "state_flag",
]

FAMILIES = ("open", "closed", "generalized", "reduced")

_FORBIDDEN = {
    "open": frozenset({"a22", "a23", "b1"}),
    "closed": frozenset({"a22", "a24", "b1"}),
    "generalized": frozenset(),
    "reduced": frozenset({"b1"}),
}

# weight of every other configuration is z_i on row i
_WEIGHT_ONE = frozenset({"a1", "c2"})


class NonAdmissibleError(ValueError):
    """A local spin configuration matches none of the nine patterns."""


@dataclass(frozen=True)
class VertexConfig:
    kind: str
    colors: tuple[int, ...]  # () for a1; (c,) for b/c kinds; (hi, lo) pair


def classify_vertex(left: int, top: int, right: int, bottom: int) -> VertexConfig:
    """Match the four spins around a vertex against the nine local
    patterns.  Color conservation (in-multiset equals out-multiset) is a
    consequence of matching; anything else raises."""
    quad = (left, top, right, bottom)
    if quad == (0, 0, 0, 0):
        return VertexConfig("a1", ())
    colors = {s for s in quad if s}
    if len(colors) == 1:
        c = colors.pop()
        kind = {
            (c, 0, c, 0): "b2",
            (0, c, 0, c): "b1",
            (c, 0, 0, c): "c1",
            (0, c, c, 0): "c2",
        }.get(quad)
        if kind is None:
            raise NonAdmissibleError(f"bad one-color configuration {quad}")
        return VertexConfig(kind, (c,))
    if len(colors) == 2 and 0 not in quad:
        pair = tuple(sorted(colors))  # (greater, lesser) by rank
        if (right, bottom) == (left, top):
            kind = "a21" if left < top else "a22"
        elif (right, bottom) == (top, left):
            kind = "a23" if left < top else "a24"
        else:
            raise NonAdmissibleError(f"colors not conserved at {quad}")
        return VertexConfig(kind, pair)
    raise NonAdmissibleError(f"bad configuration {quad}")


def admissible_for(kind: str, family: str) -> bool:
    if family not in _FORBIDDEN:
        raise ValueError(f"unknown family {family!r}")
    return kind not in _FORBIDDEN[family]


@dataclass(frozen=True)
class ModelSpec:
    lam: tuple[int, ...]
    w: tuple[int, ...]
    family: str

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "w", weyl.check_permutation(self.w))
        lam = self.lam
        if len(lam) != len(self.w):
            raise ValueError("partition and flag must have the same rank")
        if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
            raise ValueError(f"not a partition: {lam!r}")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def r(self) -> int:
        return len(self.lam)

    @property
    def n(self) -> int:
        return self.lam[0] + self.r

    @property
    def top_columns(self) -> tuple[int, ...]:
        """Column of color m at index m-1; strictly decreasing."""
        return tuple(p + s for p, s in zip(self.lam, staircase(self.r)))

    @property
    def flag_spins(self) -> tuple[int, ...]:
        """Right-boundary color at row i, index i-1."""
        return weyl.boundary_flag(self.w)

    def top_boundary(self) -> tuple[int, ...]:
        row = [0] * self.n
        for m, col in enumerate(self.top_columns, start=1):
            row[col] = m
        return tuple(row)


@dataclass(frozen=True)
class LatticeState:
    spec: ModelSpec
    horizontal: tuple[tuple[int, ...], ...]
    vertical: tuple[tuple[int, ...], ...]

    def vertex_spins(self, i: int, j: int) -> tuple[int, int, int, int]:
        """(left, top, right, bottom) at vertex (i, j)."""
        return (self.horizontal[i - 1][j + 1], self.vertical[i - 1][j],
                self.horizontal[i - 1][j], self.vertical[i][j])

    def vertices(self):
        n = self.spec.n
        for i in range(1, self.spec.r + 1):
            for j in range(n - 1, -1, -1):
                yield i, j

    def config(self, i: int, j: int) -> VertexConfig:
        return classify_vertex(*self.vertex_spins(i, j))


def _choices(left: int, top: int, family: str):
    """Admissible (right, bottom, kind, pair) completions of a vertex whose
    left and top spins are known; pair is set for the crossing kinds."""
    if left == 0 and top == 0:
        return [(0, 0, "a1", None)]
    if left and top == 0:
        return [(left, 0, "b2", None), (0, left, "c1", None)]
    if left == 0 and top:
        out = [(top, 0, "c2", None)]
        if admissible_for("b1", family):
            out.append((0, top, "b1", None))
        return out
    if left == top:
        return []
    pair = (min(left, top), max(left, top))
    out = []
    pass_kind = "a21" if left < top else "a22"
    if admissible_for(pass_kind, family):
        out.append((left, top, pass_kind, pair))
    turn_kind = "a23" if left < top else "a24"
    if admissible_for(turn_kind, family):
        out.append((top, left, turn_kind, pair))
    return out


@functools.lru_cache(maxsize=None)
def enumerate_states(spec: ModelSpec) -> tuple[LatticeState, ...]:
    """All admissible states, depth-first over vertices in row-major order
    (deterministic).  The reduced family's one-crossing cap is enforced
    incrementally while descending."""
    r, n = spec.r, spec.n
    flag = spec.flag_spins
    horizontal = [[0] * (n + 1) for _ in range(r)]
    vertical = [list(spec.top_boundary())] + [[0] * n for _ in range(r)]
    crossings: dict[tuple[int, int], int] = {}
    out = []

    def place(i: int, j: int):
        left, top = horizontal[i - 1][j + 1], vertical[i - 1][j]
        for right, bottom, kind, pair in _choices(left, top, spec.family):
            if j == 0 and right != flag[i - 1]:
                continue
            if i == r and bottom != 0:
                continue
            crossing = kind in ("a21", "a22")
            if crossing and spec.family == "reduced":
                if crossings.get(pair, 0) >= 1:
                    continue
                crossings[pair] = crossings.get(pair, 0) + 1
            horizontal[i - 1][j] = right
            vertical[i][j] = bottom
            if j > 0:
                place(i, j - 1)
            elif i < r:
                place(i + 1, n - 1)
            else:
                out.append(LatticeState(
                    spec,
                    tuple(tuple(row) for row in horizontal),
                    tuple(tuple(row) for row in vertical)))
            if crossing and spec.family == "reduced":
                crossings[pair] -= 1

    place(1, n - 1)
    return tuple(out)


def state_flag(horizontal) -> tuple[int, ...]:
    """Read the flag permutation w off the right-boundary column: color m
    exits at row w(m)."""
    r = len(horizontal)
    w = [0] * r
    for i in range(1, r + 1):
        m = horizontal[i - 1][0]
        if m == 0:
            raise ValueError(f"right boundary of row {i} is uncolored")
        w[m - 1] = i
    return weyl.check_permutation(w)


def open_state_of_pattern(lam, pattern: Pattern):
    """The unique open state whose pattern this is, with its forced flag.

    Open-model rows propagate deterministically: a color entering from the
    top turns right; when a traveling color meets an entering one, the
    greater of the two keeps moving right and the lesser drops; a traveling
    color otherwise drops exactly at the columns the next pattern row
    prescribes.  Returns (flag, state).
    """
    pattern = check_pattern(pattern)
    lam = tuple(lam)
    r = len(pattern)
    if len(lam) != r:
        raise ValueError("partition length must equal the pattern size")
    if not is_left_strict(pattern):
        raise ValueError("pattern is not left-strict")
    top = tuple(p + s for p, s in zip(lam, staircase(r)))
    if pattern[0] != top:
        raise ValueError(f"top row {pattern[0]} != partition plus staircase {top}")
    n = lam[0] + r
    horizontal = []
    vertical = [[0] * n for _ in range(r + 1)]
    incoming = {col: m for m, col in enumerate(top, start=1)}
    w = [0] * r
    for i in range(1, r + 1):
        out_cols = set(pattern[i]) if i < r else set()
        hrow = [0] * (n + 1)
        for col, m in incoming.items():
            vertical[i - 1][col] = m
        dropped = {}
        cur = 0
        for j in range(n - 1, -1, -1):
            t = incoming.get(j, 0)
            if t and cur == 0:
                cur = t
            elif t:
                keep, drop = min(cur, t), max(cur, t)
                dropped[j] = drop
                cur = keep
            elif cur and j in out_cols:
                dropped[j] = cur
                cur = 0
            hrow[j] = cur
        if cur == 0 or set(dropped) != out_cols:
            raise RuntimeError("open propagation failed; pattern invalid")
        w[cur - 1] = i
        horizontal.append(tuple(hrow))
        incoming = dropped
    w = tuple(w)
    spec = ModelSpec(lam, w, "open")
    state = LatticeState(spec, tuple(horizontal),
                         tuple(tuple(row) for row in vertical))
    validate_state(state)
    return w, state


def validate_state(state: LatticeState):
    """Check boundary conditions and classify every vertex against the
    family table; raises on any violation."""
    spec = state.spec
    r, n = spec.r, spec.n
    if len(state.horizontal) != r or any(len(row) != n + 1 for row in state.horizontal):
        raise ValueError("horizontal grid has the wrong shape")
    if len(state.vertical) != r + 1 or any(len(row) != n for row in state.vertical):
        raise ValueError("vertical grid has the wrong shape")
    if state.vertical[0] != spec.top_boundary():
        raise ValueError("top boundary does not match the model")
    if any(state.vertical[r][j] != 0 for j in range(n)):
        raise ValueError("bottom boundary must be uncolored")
    if any(state.horizontal[i][n] != 0 for i in range(r)):
        raise ValueError("left boundary must be uncolored")
    if state_flag(state.horizontal) != spec.w:
        raise ValueError("right boundary does not match the flag")
    for i, j in state.vertices():
        cfg = state.config(i, j)
        if not admissible_for(cfg.kind, spec.family):
            raise ValueError(
                f"vertex ({i},{j}) is {cfg.kind}, not allowed in {spec.family}")
    if spec.family == "reduced":
        for a in range(1, r + 1):
            for b in range(a + 1, r + 1):
                if len(pair_crossings(state, a, b)) > 1:
                    raise ValueError(f"paths {a},{b} cross more than once")


def gtp_of_state(state: LatticeState) -> Pattern:
    """Row i lists the columns of the colored vertical edges above row i,
    left to right (so in decreasing column label)."""
    rows = []
    for k in range(state.spec.r):
        cols = sorted((j for j, s in enumerate(state.vertical[k]) if s), reverse=True)
        rows.append(tuple(cols))
    pattern = check_pattern(rows)
    if state.spec.family != "generalized" and not is_left_strict(pattern):
        raise RuntimeError("state without b1 vertices must give a left-strict pattern")
    return pattern


def boltzmann(state: LatticeState) -> laurent.LaurentPoly:
    """Product of the local weights: a vertex contributes z_i on row i
    unless its configuration is a1 or c2.  Open and closed families only."""
    spec = state.spec
    if spec.family not in ("open", "closed"):
        raise ValueError(f"weights are undefined for family {spec.family!r}")
    expo = [0] * spec.r
    for i, j in state.vertices():
        if state.config(i, j).kind not in _WEIGHT_ONE:
            expo[i - 1] += 1
    return laurent.monomial(expo)


def partition_function(spec: ModelSpec) -> laurent.LaurentPoly:
    """Sum of Boltzmann weights over all admissible states."""
    total = laurent.zero(spec.r)
    for state in enumerate_states(spec):
        total = total + boltzmann(state)
    return total


def pattern_tableau(state: LatticeState) -> Tableau:
    """Tableau of the staircase-lowered pattern of the state."""
    return gt_to_tableau(subtract_staircase(gtp_of_state(state)))


def crystal_tableau(state: LatticeState) -> Tableau:
    """The crystal embedding of a state: evacuation of pattern_tableau.
    Sends the unique flag-identity state family to highest weight."""
    return schuetzenberger(pattern_tableau(state), state.spec.r)


def color_path(state: LatticeState, m: int):
    """Ordered edge list of color m, from its top-boundary edge to its
    right-boundary edge.  Edges are ('v', k, j) or ('h', i, slot).  Raises
    if the colored edges do not form one connected down-right path."""
    spec = state.spec
    col = spec.top_columns[m - 1]
    edges = [("v", 0, col)]
    while True:
        kind, a, b = edges[-1]
        if kind == "v":
            i, j = a + 1, b  # enters vertex (a+1, b) from the top
        else:
            if b == 0:
                break  # exited the right boundary
            i, j = a, b - 1  # enters vertex (a, b-1) from the left
        right = state.horizontal[i - 1][j]
        bottom = state.vertical[i][j]
        if right == m:
            edges.append(("h", i, j))
        elif bottom == m:
            edges.append(("v", i, j))
        else:
            raise ValueError(f"path of color {m} vanishes at vertex ({i},{j})")
    expected = {("v", k, j) for k in range(spec.r + 1)
                for j in range(spec.n) if state.vertical[k][j] == m}
    expected |= {("h", i, s) for i in range(1, spec.r + 1)
                 for s in range(spec.n + 1) if state.horizontal[i - 1][s] == m}
    if set(edges) != expected:
        raise ValueError(f"color {m} edges are not a single connected path")
    return edges


def pair_intersections(state: LatticeState, a: int, b: int):
    """Vertices where the paths of colors a and b meet, in path order
    (row ascending, then column descending)."""
    hits = []
    for i, j in state.vertices():
        spins = set(state.vertex_spins(i, j))
        if a in spins and b in spins:
            hits.append((i, j))
    return sorted(hits, key=lambda v: (v[0], -v[1]))


def pair_crossings(state: LatticeState, a: int, b: int):
    """The subset of pair_intersections where the two paths pass through
    each other transversally (left spin equals right spin)."""
    return [v for v in pair_intersections(state, a, b)
            if state.config(*v).kind in ("a21", "a22")]
