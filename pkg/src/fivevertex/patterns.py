"""
Gelfand-Tsetlin patterns, semistandard Young tableaux, and the bijections
between them.

A pattern of size r is a tuple of r rows, row i (1-indexed from the top)
holding r-i+1 integers, each row weakly decreasing and adjacent rows
interleaving.  Two variants appear throughout:

- weak patterns with top row a partition lam, in bijection with the
  semistandard tableaux of shape lam in alphabet {1..r}: row k of the
  pattern is the shape left after deleting all boxes with entries > r-k+1;
- left-strict patterns (entry strictly greater than its lower-left
  neighbor) with top row lam + staircase, which index lattice states.

Subtracting the staircase (r-i+1-j from entry A[i][j]) takes the second
family bijectively onto the first.

A tableau is a tuple of weakly increasing integer rows of strictly
decreasing-or-equal lengths; trailing zero parts of the shape are dropped,
so the alphabet bound r must be passed where it matters.  Partitions keep
their trailing zeros so the rank is always recoverable from them.
"""

import itertools

__all__ = [
    "staircase", "is_pattern", "check_pattern", "is_left_strict",
    "gt_to_tableau", "tableau_to_gt", "subtract_staircase", "add_staircase",
    "shape_of", "weight", "is_ssyt", "check_tableau", "enumerate_ssyt",
    "enumerate_left_strict", "enumerate_patterns", "dominant_partitions",
]

Pattern = tuple[tuple[int, ...], ...]
Tableau = tuple[tuple[int, ...], ...]


def staircase(r: int) -> tuple[int, ...]:
    return tuple(range(r - 1, -1, -1))


def is_pattern(rows) -> bool:
    """Valid triangular interleaving array."""
    r = len(rows)
    if r == 0 or any(len(rows[i]) != r - i for i in range(r)):
        return False
    for row in rows:
        if any(a < b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        for j in range(len(lower)):
            if not upper[j] >= lower[j] >= upper[j + 1]:
                return False
    return True


def check_pattern(rows) -> Pattern:
    rows = tuple(tuple(row) for row in rows)
    if not is_pattern(rows):
        raise ValueError(f"not a Gelfand-Tsetlin pattern: {rows!r}")
    return rows


def is_left_strict(pattern: Pattern) -> bool:
    """True iff every entry strictly exceeds its lower-left neighbor."""
    for upper, lower in zip(pattern, pattern[1:]):
        if any(upper[j] <= lower[j] for j in range(len(lower))):
            return False
    return True


def gt_to_tableau(pattern: Pattern) -> Tableau:
    """Tableau whose truncated shapes are the pattern rows read bottom-up.

    Row k of the pattern (top row is k=1) is the shape of the boxes holding
    entries <= r-k+1, so entry m fills the horizontal strip between the
    shapes in rows r-m+2 and r-m+1.
    """
    pattern = check_pattern(pattern)
    r = len(pattern)
    rows = [[] for _ in range(len(pattern[0]))]
    prev = (0,) * r
    for m in range(1, r + 1):
        shape = pattern[r - m]  # m parts: shape of entries <= m
        for ell in range(m):
            below = prev[ell] if ell < len(prev) else 0
            rows[ell].extend([m] * (shape[ell] - below))
        prev = shape
    return tuple(tuple(row) for row in rows if row)


def tableau_to_gt(tab: Tableau, r: int) -> Pattern:
    """Inverse of gt_to_tableau; r fixes the pattern size since the tableau
    does not carry trailing zero parts."""
    tab = check_tableau(tab)
    if tab and max(max(row) for row in tab) > r:
        raise ValueError("tableau entries exceed the requested rank")
    if len(tab) > r:
        raise ValueError("tableau has more rows than the requested rank")
    out = []
    for k in range(1, r + 1):
        bound = r - k + 1  # keep entries <= bound
        shape = []
        for ell in range(bound):
            row = tab[ell] if ell < len(tab) else ()
            shape.append(sum(1 for x in row if x <= bound))
        out.append(tuple(shape))
    return check_pattern(out)


def subtract_staircase(pattern: Pattern) -> Pattern:
    """Shift a left-strict pattern down by the rowwise staircase, giving a
    weak pattern whose top row drops from lam+staircase to lam."""
    pattern = check_pattern(pattern)
    if not is_left_strict(pattern):
        raise ValueError("pattern is not left-strict")
    r = len(pattern)
    return check_pattern(tuple(
        tuple(entry - (r - i + 1 - j) for j, entry in enumerate(row, start=1))
        for i, row in enumerate(pattern, start=1)))


def add_staircase(pattern: Pattern) -> Pattern:
    """Inverse of subtract_staircase; the result is left-strict."""
    pattern = check_pattern(pattern)
    r = len(pattern)
    return check_pattern(tuple(
        tuple(entry + (r - i + 1 - j) for j, entry in enumerate(row, start=1))
        for i, row in enumerate(pattern, start=1)))


def shape_of(tab: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in tab)


def weight(tab: Tableau, r: int) -> tuple[int, ...]:
    """Entry i of the result counts the occurrences of i in the tableau."""
    counts = [0] * r
    for row in tab:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def is_ssyt(tab) -> bool:
    lengths = [len(row) for row in tab]
    if any(n == 0 for n in lengths) or any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    for row in tab:
        if any(a > b for a, b in zip(row, row[1:])) or (row and row[0] < 1):
            return False
    for upper, lower in zip(tab, tab[1:]):
        if any(upper[j] >= lower[j] for j in range(len(lower))):
            return False
    return True


def check_tableau(tab) -> Tableau:
    tab = tuple(tuple(row) for row in tab)
    if not is_ssyt(tab):
        raise ValueError(f"not a semistandard tableau: {tab!r}")
    return tab


def enumerate_ssyt(lam, r: int) -> set[Tableau]:
    """All semistandard tableaux of shape lam with entries in 1..r."""
    lam = tuple(lam)
    shape = [p for p in lam if p > 0]
    if len(shape) > r:
        return set()
    if not shape:
        return {()}
    out = set()

    def fill(rows):
        i = len(rows)
        if i == len(shape):
            out.add(tuple(rows))
            return
        above = rows[-1] if rows else None

        def extend(row):
            j = len(row)
            if j == shape[i]:
                fill(rows + [tuple(row)])
                return
            lo = row[j - 1] if j else 1
            if above is not None:
                lo = max(lo, above[j] + 1)
            for x in range(lo, r + 1):
                extend(row + [x])

        extend([])

    fill([])
    return out


def enumerate_left_strict(lam, r: int) -> set[Pattern]:
    """All left-strict patterns with top row lam + staircase."""
    lam = tuple(lam)
    if len(lam) != r:
        raise ValueError("partition length must equal the rank")
    top = tuple(p + s for p, s in zip(lam, staircase(r)))
    out = set()

    def descend(rows):
        row = rows[-1]
        if len(row) == 1:
            out.add(tuple(rows))
            return
        # entry j of the next row ranges freely in [row[j+1], row[j] - 1]
        ranges = [range(row[j + 1], row[j]) for j in range(len(row) - 1)]
        for nxt in itertools.product(*ranges):
            descend(rows + [nxt])

    descend([top])
    return out


def enumerate_patterns(top_row) -> set[Pattern]:
    """All weak patterns with the given (weakly decreasing) top row."""
    top = tuple(top_row)
    out = set()

    def descend(rows):
        row = rows[-1]
        if len(row) == 1:
            out.add(tuple(rows))
            return
        ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
        for nxt in itertools.product(*ranges):
            if all(a >= b for a, b in zip(nxt, nxt[1:])):
                descend(rows + [nxt])

    descend([top])
    return out


def dominant_partitions(r: int, max_part: int, strict: bool = False):
    """Weakly decreasing nonnegative vectors of length r with parts at most
    max_part, in graded-lex order (sweeps meet small cases first).  With
    strict=True only vectors with pairwise distinct parts are kept."""
    out = []
    for parts in itertools.product(range(max_part, -1, -1), repeat=r):
        if any(a < b for a, b in zip(parts, parts[1:])):
            continue
        if strict and len(set(parts)) != r:
            continue
        out.append(parts)
    out.sort(key=lambda p: (sum(p), p))
    return out
