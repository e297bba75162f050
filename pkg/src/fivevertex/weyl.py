"""
Permutations of {1, ..., r} in one-line notation, with lengths, the Bruhat
order, reduced words, coset representatives, and the boundary-color
bookkeeping used by the lattice models.

Conventions:

- a permutation w is the tuple (w(1), ..., w(r)) of the integers 1..r;
- composition acts on the left: compose(u, v)(i) = u(v(i));
- s_i is the adjacent transposition swapping i and i+1, so multiplying by
  s_i on the right swaps the one-line entries at positions i and i+1, and
  multiplying on the left swaps the values i and i+1 wherever they occur;
- cycles from the combinatorics literature translate as: the 3-cycle
  sending 1->2->3->1 is the one-line tuple (2, 3, 1), and the transposition
  exchanging 1 and 3 is (3, 2, 1) in S_3.

All values are plain tuples; nothing here is mutated after construction.
"""

import itertools

__all__ = [
    "is_permutation", "check_permutation", "identity", "inverse", "compose",
    "simple_reflection", "transposition", "mult_simple_right", "length",
    "longest_element", "reduced_word", "all_reduced_words", "bruhat_leq",
    "bruhat_less", "coset_longest", "stabilizer", "boundary_flag",
    "all_permutations", "permutations_by_length",
]

Perm = tuple[int, ...]


def is_permutation(w) -> bool:
    """True iff w is a rearrangement of (1, ..., len(w))."""
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w: Perm) -> Perm:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return w


def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def compose(u: Perm, v: Perm) -> Perm:
    """(u*v)(i) = u(v(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(u) != len(v):
        raise ValueError("rank mismatch")
    return tuple(u[vi - 1] for vi in v)


def simple_reflection(i: int, r: int) -> Perm:
    """s_i in S_r, swapping i and i+1."""
    if not 1 <= i <= r - 1:
        raise ValueError(f"simple index {i} out of range for rank {r}")
    return transposition(i, i + 1, r)


def transposition(i: int, j: int, r: int) -> Perm:
    if not (1 <= i <= r and 1 <= j <= r and i != j):
        raise ValueError(f"bad transposition ({i},{j}) for rank {r}")
    out = list(range(1, r + 1))
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def mult_simple_right(w: Perm, i: int) -> Perm:
    """w * s_i: swap the one-line entries at positions i, i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions, i.e. pairs i < j with w(i) > w(j).

    >>> length((3, 2, 1))
    3
    >>> length((2, 3, 1))
    2
    """
    r = len(w)
    return sum(1 for i in range(r) for j in range(i + 1, r) if w[i] > w[j])


def longest_element(r: int) -> Perm:
    """The reversal (r, r-1, ..., 1), of length r(r-1)/2."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    return tuple(range(r, 0, -1))


def reduced_word(w: Perm) -> tuple[int, ...]:
    """A reduced word (a_1, ..., a_k) with w = s_{a_1} * s_{a_2} * ... * s_{a_k}.

    Selection rule: repeatedly factor off the smallest left descent.  Any
    reduced word would do; downstream operators are word-independent.

    >>> reduced_word((2, 1, 3))
    (1,)
    >>> reduced_word((1, 2, 3))
    ()
    """
    w = tuple(w)
    winv = inverse(w)
    word = []
    while True:
        for i in range(1, len(w)):
            if winv[i - 1] > winv[i]:  # s_i * w is shorter
                break
        else:
            return tuple(word)
        word.append(i)
        # left-multiply by s_i: swap the values i, i+1 in w
        w = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
        winv = inverse(w)


def all_reduced_words(w: Perm):
    """Yield every reduced word of w, in the same left-to-right convention
    as reduced_word."""
    if length(w) == 0:
        yield ()
        return
    winv = inverse(w)
    for i in range(1, len(w)):
        if winv[i - 1] > winv[i]:
            shorter = tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)
            for rest in all_reduced_words(shorter):
                yield (i,) + rest


def bruhat_leq(y: Perm, w: Perm) -> bool:
    """Bruhat order on S_r, by the dot/tableau criterion: y <= w iff for
    every k the increasing sort of (y(1)..y(k)) is entrywise <= that of
    (w(1)..w(k)).

    >>> bruhat_leq((2, 3, 1), (3, 2, 1))
    True
    >>> bruhat_leq((2, 3, 1), (3, 1, 2))
    False
    """
    if len(y) != len(w):
        raise ValueError("rank mismatch")
    for k in range(1, len(y)):
        ys = sorted(y[:k])
        ws = sorted(w[:k])
        if any(a > b for a, b in zip(ys, ws)):
            return False
    return True


def bruhat_less(y: Perm, w: Perm) -> bool:
    return y != w and bruhat_leq(y, w)


def stabilizer(lam: tuple[int, ...]):
    """All u in S_r with lam(u(i)) = lam(i) for every i, i.e. the product of
    symmetric groups on the blocks of equal parts."""
    r = len(lam)
    blocks = []
    start = 0
    for i in range(1, r + 1):
        if i == r or lam[i] != lam[start]:
            blocks.append(list(range(start + 1, i + 1)))
            start = i
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        u = [0] * r
        for block, image in zip(blocks, parts):
            for pos, val in zip(block, image):
                u[pos - 1] = val
        yield tuple(u)


def coset_longest(w: Perm, lam: tuple[int, ...]) -> Perm:
    """The longest element of the coset w * W_lam, where W_lam stabilizes lam.

    >>> coset_longest((1, 2), (0, 0))
    (2, 1)
    >>> coset_longest((1, 2, 3), (1, 1, 0))
    (2, 1, 3)
    """
    if len(lam) != len(w):
        raise ValueError("rank mismatch")
    return max((compose(w, u) for u in stabilizer(lam)), key=length)


def boundary_flag(w: Perm) -> Perm:
    """Right-boundary colors of the model with flag w: entry at row i is the
    color index sitting on row i, i.e. w^{-1}(i).

    >>> boundary_flag((2, 3, 1))
    (3, 1, 2)
    """
    return inverse(w)


def all_permutations(r: int) -> list[Perm]:
    """All of S_r in lexicographic order."""
    return [tuple(p) for p in itertools.permutations(range(1, r + 1))]


def permutations_by_length(r: int) -> list[Perm]:
    """All of S_r ordered by (length, one-line lex); used to make the first
    counterexample found by a sweep the minimal one."""
    return sorted(all_permutations(r), key=lambda w: (length(w), w))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
