"""
The type-A crystal structure on semistandard Young tableaux: raising and
lowering operators, string statistics, the evacuation (Schuetzenberger)
involution, Demazure subsets and their atoms, key tableaux, and a
pattern-level shortcut for the raising operator conjugated by evacuation.

Operators use the row reading word (rows bottom to top, each left to
right) with the matching bracket rule: scanning the subword of letters
i and i+1, each i+1 opens and a later i closes; e_i lifts the leftmost
unmatched i+1, f_i drops the rightmost unmatched i.
"""

import functools
from dataclasses import dataclass

from . import laurent, patterns, weyl
from .patterns import Pattern, Tableau

__all__ = [
    "raising", "lowering", "eps", "phi", "reading_word",
    "highest_weight_tableau", "lowest_weight_tableau", "schuetzenberger",
    "demazure_closure", "demazure_crystal", "demazure_atom_set",
    "DemazureSet", "character", "is_key", "gtp_raise",
]


def reading_word(tab: Tableau) -> tuple[int, ...]:
    return tuple(x for row in reversed(tab) for x in row)


def _cells_in_reading_order(tab: Tableau):
    return [(i, j) for i in reversed(range(len(tab))) for j in range(len(tab[i]))]


def _unmatched(tab: Tableau, i: int):
    """Positions (cell coordinates) of the unmatched letters i and i+1 in
    the reading word, each list in reading order."""
    open_i1 = []   # unmatched i+1 so far
    lone_i = []    # i with no i+1 before it
    for cell in _cells_in_reading_order(tab):
        x = tab[cell[0]][cell[1]]
        if x == i + 1:
            open_i1.append(cell)
        elif x == i:
            if open_i1:
                open_i1.pop()
            else:
                lone_i.append(cell)
    return lone_i, open_i1


def eps(tab: Tableau, i: int) -> int:
    """Number of times the raising operator applies."""
    return len(_unmatched(tab, i)[1])


def phi(tab: Tableau, i: int) -> int:
    """Number of times the lowering operator applies."""
    return len(_unmatched(tab, i)[0])


def _replace(tab: Tableau, cell, value) -> Tableau:
    i, j = cell
    row = tab[i][:j] + (value,) + tab[i][j + 1:]
    return tab[:i] + (row,) + tab[i + 1:]


def raising(tab: Tableau, i: int):
    """e_i: turn the leftmost unmatched i+1 into an i, or None."""
    open_i1 = _unmatched(tab, i)[1]
    if not open_i1:
        return None
    return _replace(tab, open_i1[0], i)


def lowering(tab: Tableau, i: int):
    """f_i: turn the rightmost unmatched i into an i+1, or None."""
    lone_i = _unmatched(tab, i)[0]
    if not lone_i:
        return None
    return _replace(tab, lone_i[-1], i + 1)


def highest_weight_tableau(lam) -> Tableau:
    """Row i filled with the entry i."""
    return tuple((i,) * p for i, p in enumerate(lam, start=1) if p > 0)


def lowest_weight_tableau(lam, r: int) -> Tableau:
    return schuetzenberger(highest_weight_tableau(lam), r)


def schuetzenberger(tab: Tableau, r: int) -> Tableau:
    """Evacuation: rotate the tableau a half turn, complement every entry
    to r+1-entry, and rectify the resulting skew tableau by jeu de taquin.

    An involution; reverses the weight and swaps the raising operator at i
    with the lowering operator at r-i.
    """
    if not tab:
        return tab
    nrows, ncols = len(tab), len(tab[0])
    grid = [[None] * ncols for _ in range(nrows)]
    for i in range(nrows):
        src = tab[nrows - 1 - i]
        for j in range(ncols):
            oj = ncols - 1 - j
            if oj < len(src):
                grid[i][j] = r + 1 - src[oj]
    inner = [ncols - len(tab[nrows - 1 - i]) for i in range(nrows)]
    outer = [ncols] * nrows
    while any(inner):
        # bottom-most inner corner (any choice rectifies to the same tableau)
        c = max(i for i in range(nrows)
                if inner[i] and (i + 1 == nrows or inner[i + 1] < inner[i]))
        hole = (c, inner[c] - 1)
        inner[c] -= 1
        while True:
            hi, hj = hole
            below = grid[hi + 1][hj] if hi + 1 < nrows and hj < outer[hi + 1] else None
            right = grid[hi][hj + 1] if hj + 1 < outer[hi] else None
            if below is None and right is None:
                outer[hi] = hj
                break
            if right is None or (below is not None and below <= right):
                grid[hi][hj] = below
                hole = (hi + 1, hj)
            else:
                grid[hi][hj] = right
                hole = (hi, hj + 1)
            grid[hole[0]][hole[1]] = None
    return tuple(tuple(grid[i][:outer[i]]) for i in range(nrows) if outer[i])


def demazure_closure(elements, i: int) -> frozenset[Tableau]:
    """Close a set of tableaux downward along i-strings: everything whose
    iterated raising lands in the set, i.e. the lowering orbits of it."""
    out = set(elements)
    for tab in elements:
        cur = tab
        while True:
            cur = lowering(cur, i)
            if cur is None:
                break
            out.add(cur)
    return frozenset(out)


@dataclass(frozen=True)
class DemazureSet:
    lam: tuple[int, ...]
    w: tuple[int, ...]
    elements: frozenset[Tableau]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@functools.lru_cache(maxsize=None)
def _demazure_elements(lam, w) -> frozenset[Tableau]:
    r = len(w)
    if w == weyl.identity(r):
        return frozenset({highest_weight_tableau(lam)})
    winv = weyl.inverse(w)
    i = next(i for i in range(1, r) if winv[i - 1] > winv[i])  # left descent
    shorter = weyl.compose(weyl.simple_reflection(i, r), w)
    return demazure_closure(_demazure_elements(lam, shorter), i)


def demazure_crystal(lam, w) -> DemazureSet:
    """The subset of the shape-lam crystal generated from the highest
    weight element by string closures along a reduced word of w.  Grows
    monotonically with w in Bruhat order; its character is demazure_char."""
    lam, w = _check_args(lam, w)
    return DemazureSet(lam, w, _demazure_elements(lam, w))


@functools.lru_cache(maxsize=None)
def _atom_elements(lam, w) -> frozenset[Tableau]:
    out = set(_demazure_elements(lam, w))
    for y in weyl.all_permutations(len(w)):
        if y != w and weyl.bruhat_leq(y, w):
            out -= _demazure_elements(lam, y)
    return frozenset(out)


def demazure_atom_set(lam, w) -> DemazureSet:
    """What the Demazure set at w adds over everything strictly below it;
    the atoms are pairwise disjoint and tile each Demazure set along the
    Bruhat interval."""
    lam, w = _check_args(lam, w)
    return DemazureSet(lam, w, _atom_elements(lam, w))


def _check_args(lam, w):
    w = weyl.check_permutation(w)
    lam = tuple(lam)
    if len(lam) != len(w):
        raise ValueError("partition length must equal the permutation rank")
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise ValueError(f"not weakly decreasing and nonnegative: {lam!r}")
    return lam, w


def character(elements, r: int) -> laurent.LaurentPoly:
    """Sum of z^weight over a set of tableaux."""
    total = laurent.zero(r)
    for tab in elements:
        total = total + laurent.monomial(patterns.weight(tab, r))
    return total


def is_key(tab: Tableau) -> bool:
    """True iff, left to right, each column's entry set contains the next
    column's.  Exactly one key tableau lives in every atom."""
    cols = []
    width = len(tab[0]) if tab else 0
    for j in range(width):
        cols.append({row[j] for row in tab if j < len(row)})
    return all(cols[j + 1] <= cols[j] for j in range(len(cols) - 1))


def gtp_raise(pattern: Pattern, i: int):
    """Raising operator conjugated by evacuation, computed directly on the
    weak Gelfand-Tsetlin pattern of a tableau.

    With rows i, i+1, i+2 of the pattern written x_1..x_k, y_1..y_{k-1},
    z_1..z_{k-2} (zero-padded at the right ends), form the running scores
    E_1 = y_{k-1} - x_k and E_{j+1} = (y_{k-j-1} - z_{k-j-1}) -
    (x_{k-j} - y_{k-j}) + E_j.  If no score is positive the operator
    vanishes; otherwise decrement y_{k-t} where t is the smallest index
    attaining the positive maximum.

    Agrees with: convert pattern to tableau, evacuate, raise at i,
    evacuate, convert back.
    """
    pattern = patterns.check_pattern(pattern)
    r = len(pattern)
    if not 1 <= i <= r - 1:
        raise ValueError(f"simple index {i} out of range for rank {r}")
    k = r - i + 1
    x = pattern[i - 1]
    y = pattern[i] + (0,)
    z = (pattern[i + 1] if i + 1 < r else ()) + (0,)
    scores = []
    e = 0
    for j in range(1, k):
        e += (y[k - j - 1] - z[k - j - 1]) - (x[k - j] - y[k - j])
        scores.append(e)
    best = max(scores)
    if best <= 0:
        return None
    t = scores.index(best) + 1
    new_row = list(pattern[i])
    new_row[k - t - 1] -= 1
    return patterns.check_pattern(
        pattern[:i] + (tuple(new_row),) + pattern[i + 1:])
