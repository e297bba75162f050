import pytest

from fivevertex import patterns


PAPER_PATTERN = ((5, 3, 0), (3, 1), (1,))
PAPER_TABLEAU = ((1, 2, 2, 3, 3), (2, 3, 3))


def test_is_left_strict():
    assert patterns.is_left_strict(PAPER_PATTERN)
    assert not patterns.is_left_strict(((2, 0), (2,)))
    assert patterns.is_left_strict(((2, 0), (0,)))


def test_pattern_validation():
    assert patterns.is_pattern(((3, 1), (2,)))
    assert not patterns.is_pattern(((1, 3), (2,)))     # row not decreasing
    assert not patterns.is_pattern(((3, 1), (4,)))     # not interleaving
    assert not patterns.is_pattern(((3, 1),))          # wrong row count
    with pytest.raises(ValueError):
        patterns.check_pattern(((3, 1), (4,)))


def test_gt_to_tableau_examples():
    assert patterns.gt_to_tableau(PAPER_PATTERN) == PAPER_TABLEAU
    # rows that truncate the top partition give the highest-weight filling
    assert patterns.gt_to_tableau(((2, 1, 0), (2, 1), (2,))) == ((1, 1), (2,))
    assert patterns.gt_to_tableau(((1, 0), (0,))) == ((2,),)


def test_tableau_to_gt_examples():
    assert patterns.tableau_to_gt(PAPER_TABLEAU, 3) == PAPER_PATTERN
    assert patterns.tableau_to_gt(((1, 1), (2,)), 3) == ((2, 1, 0), (2, 1), (2,))
    assert patterns.tableau_to_gt(((2,),), 2) == ((1, 0), (0,))


@pytest.mark.parametrize("lam,r", [
    ((1, 0), 2), ((2, 1), 2), ((3, 2, 0), 3), ((2, 1, 0), 3), ((2, 2, 2), 3),
])
def test_bijection_roundtrip_exhaustive(lam, r):
    tabs = patterns.enumerate_ssyt(lam, r)
    seen = set()
    for tab in tabs:
        pat = patterns.tableau_to_gt(tab, r)
        assert pat[0] == tuple(lam)[:r] + (0,) * (r - len(lam))
        assert patterns.gt_to_tableau(pat) == tab
        seen.add(pat)
    assert len(seen) == len(tabs)
    assert seen == patterns.enumerate_patterns(tuple(lam))


def test_subtract_staircase_examples():
    assert patterns.subtract_staircase(PAPER_PATTERN) == ((3, 2, 0), (2, 1), (1,))
    assert patterns.subtract_staircase(((2, 0), (0,))) == ((1, 0), (0,))
    for lam in [(3, 2, 0), (2, 1, 0)]:
        for pat in patterns.enumerate_left_strict(lam, 3):
            assert patterns.subtract_staircase(pat)[0] == lam


@pytest.mark.parametrize("lam,r", [((1, 0), 2), ((2, 1, 0), 3), ((2, 2, 0), 3)])
def test_staircase_shift_is_bijection(lam, r):
    strict = patterns.enumerate_left_strict(lam, r)
    weak = patterns.enumerate_patterns(lam)
    shifted = {patterns.subtract_staircase(p) for p in strict}
    assert shifted == weak
    for pat in strict:
        assert patterns.add_staircase(patterns.subtract_staircase(pat)) == pat


def test_subtract_staircase_requires_left_strict():
    with pytest.raises(ValueError):
        patterns.subtract_staircase(((2, 0), (2,)))


def test_weight():
    assert patterns.weight(PAPER_TABLEAU, 3) == (1, 3, 4)
    assert patterns.weight(((1, 1), (2,)), 3) == (2, 1, 0)
    assert patterns.weight(((2,),), 2) == (0, 1)


def test_partial_row_sums_give_weights():
    for tab in patterns.enumerate_ssyt((2, 1, 0), 3):
        pat = patterns.tableau_to_gt(tab, 3)
        wt = patterns.weight(tab, 3)
        sums = [sum(row) for row in pat] + [0]
        for k in range(1, 4):
            assert sums[k - 1] - sums[k] == wt[3 - k]


def test_enumerate_ssyt_counts():
    assert patterns.enumerate_ssyt((1, 0), 2) == {((1,),), ((2,),)}
    assert len(patterns.enumerate_ssyt((2, 1, 0), 3)) == 8
    assert patterns.enumerate_ssyt((0, 0, 0), 3) == {()}


def test_enumerate_left_strict_examples():
    assert patterns.enumerate_left_strict((1, 0), 2) == {((2, 0), (0,)), ((2, 0), (1,))}
    assert patterns.enumerate_left_strict((0, 0), 2) == {((1, 0), (0,))}
    for lam in [(2, 1, 0), (3, 2, 0)]:
        assert len(patterns.enumerate_left_strict(lam, 3)) == \
            len(patterns.enumerate_ssyt(lam, 3))


def test_dominant_partitions():
    parts = patterns.dominant_partitions(2, 2)
    assert parts == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    strict = patterns.dominant_partitions(3, 3, strict=True)
    assert strict == [(2, 1, 0), (3, 1, 0), (3, 2, 0), (3, 2, 1)]
