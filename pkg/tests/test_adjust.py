import pytest

from fivevertex import adjust, crystal, lattice, laurent, patterns, weyl
from fivevertex.lattice import ModelSpec

FIG_PATTERN = ((5, 3, 0), (3, 1), (1,))


def _fig4_open():
    w, state = lattice.open_state_of_pattern((3, 2, 0), FIG_PATTERN)
    assert w == (2, 3, 1)
    return state


def test_worked_example_open_and_closed_vertices():
    open_state = _fig4_open()
    assert open_state.config(1, 3).kind == "a21"
    assert open_state.config(2, 1).kind == "a24"
    closed = adjust.to_closed(open_state)
    assert closed.config(1, 3).kind == "a23"
    assert closed.config(2, 1).kind == "a21"
    assert lattice.gtp_of_state(closed) == FIG_PATTERN
    assert closed.spec.w == (2, 3, 1)


def test_move_crossing_fixed_point():
    # the identity-flag bootstrap state: the single meeting is the crossing
    (state,) = lattice.enumerate_states(ModelSpec((1, 0), (1, 2), "closed"))
    target = lattice.pair_crossings(state, 1, 2)[0]
    moved = adjust.move_crossing(state, 1, 2, target)
    assert (moved.horizontal, moved.vertical) == (state.horizontal, state.vertical)


def test_move_crossing_worked_example():
    open_state = _fig4_open()
    last = lattice.pair_intersections(open_state, 1, 2)[-1]
    moved = adjust.move_crossing(open_state, 1, 2, last)
    closed = adjust.to_closed(open_state)
    assert (moved.horizontal, moved.vertical) == (closed.horizontal, closed.vertical)


def test_move_crossing_rejects():
    open_state = _fig4_open()
    with pytest.raises(ValueError):
        adjust.move_crossing(open_state, 1, 3, (1, 1))  # paths do not cross
    with pytest.raises(ValueError):
        adjust.move_crossing(open_state, 1, 2, (3, 0))  # not a meeting vertex


@pytest.mark.parametrize("lam", [(1, 0), (2, 0), (2, 1, 0), (2, 2, 0)])
def test_move_crossing_preserves_everything(lam):
    r = len(lam)
    for w in weyl.all_permutations(r):
        for state in lattice.enumerate_states(ModelSpec(lam, w, "reduced")):
            for a in range(1, r + 1):
                for b in range(a + 1, r + 1):
                    if len(lattice.pair_crossings(state, a, b)) != 1:
                        continue
                    for target in lattice.pair_intersections(state, a, b):
                        moved = adjust.move_crossing(state, a, b, target)
                        assert moved.spec.w == w
                        assert lattice.gtp_of_state(moved) == \
                            lattice.gtp_of_state(state)
                        assert lattice.pair_crossings(moved, a, b) == [target]
                        # move back: recoloring is reversible
                        back = adjust.move_crossing(
                            moved, a, b, lattice.pair_crossings(state, a, b)[0])
                        assert (back.horizontal, back.vertical) == \
                            (state.horizontal, state.vertical)


def test_to_closed_idempotent_and_correct():
    for lam in [(1, 0), (2, 1, 0)]:
        r = len(lam)
        for w in weyl.all_permutations(r):
            for state in lattice.enumerate_states(ModelSpec(lam, w, "closed")):
                again = adjust.to_closed(state)
                assert (again.horizontal, again.vertical) == \
                    (state.horizontal, state.vertical)


def test_open_closed_round_trip():
    fig4 = _fig4_open()
    closed = adjust.to_closed(fig4)
    back = adjust.to_open(closed)
    assert back == fig4
    for lam in [(1, 0), (2, 1, 0), (2, 2, 0)]:
        r = len(lam)
        for w in weyl.all_permutations(r):
            for state in lattice.enumerate_states(ModelSpec(lam, w, "open")):
                closed = adjust.to_closed(state)
                assert closed.spec.w == w
                assert lattice.gtp_of_state(closed) == lattice.gtp_of_state(state)
                assert adjust.to_open(closed) == state
                assert adjust.to_open(state) == state


def test_to_closed_matches_enumeration():
    # the closed-up open state is the unique closed state with that
    # flag and pattern
    lam = (2, 1, 0)
    for w in weyl.all_permutations(3):
        for state in lattice.enumerate_states(ModelSpec(lam, w, "open")):
            closed = adjust.to_closed(state)
            matches = [s for s in lattice.enumerate_states(ModelSpec(lam, w, "closed"))
                       if lattice.gtp_of_state(s) == lattice.gtp_of_state(state)]
            assert matches == [closed]


def test_raise_flag_bootstrap():
    (state,) = lattice.enumerate_states(ModelSpec((1, 0), (1, 2), "closed"))
    raised = adjust.to_closed(adjust.raise_flag(state, 1, 2))
    assert raised.spec.w == (2, 1)
    assert lattice.gtp_of_state(raised) == ((2, 0), (0,))
    assert lattice.boltzmann(raised) == laurent.monomial((2, 0))


def test_raise_flag_worked_example_chain():
    closed = adjust.to_closed(_fig4_open())          # flag (2,3,1)
    raised = adjust.raise_flag(closed, 1, 2)
    assert raised.spec.w == (3, 2, 1)
    assert not lattice.pair_crossings(raised, 1, 2)
    final = adjust.to_closed(raised)
    assert final.spec.w == (3, 2, 1)
    assert lattice.gtp_of_state(final) == FIG_PATTERN
    # flags compose by swapping one-line entries; equivalently the
    # boundary colors of the two rows trade places
    assert weyl.boundary_flag((3, 2, 1)) != weyl.boundary_flag((2, 3, 1))
    assert weyl.compose((2, 3, 1), weyl.transposition(1, 2, 3)) == (3, 2, 1)


def test_raise_flag_rejects():
    (state,) = lattice.enumerate_states(ModelSpec((1, 0), (1, 2), "closed"))
    raised = adjust.to_closed(adjust.raise_flag(state, 1, 2))
    with pytest.raises(ValueError):
        adjust.raise_flag(raised, 1, 2)  # length would drop, not rise


def test_path_diagram():
    closed = adjust.to_closed(_fig4_open())
    diagram = adjust.path_diagram(closed)
    assert set(diagram.paths) == {1, 2, 3}
    for pair, crossings in diagram.crossings.items():
        assert set(crossings) <= set(diagram.intersections[pair])
    assert diagram.crossings[1, 2] == [(2, 1)]
    assert diagram.intersections[1, 2] == [(1, 3), (2, 1)]
    assert diagram.intersections[1, 3] == []
    # each path is a connected monotone walk: rows never decrease and the
    # column label never increases along it
    for path in diagram.paths.values():
        rows = [a if kind == "v" else a for kind, a, _ in path]
        assert rows == sorted(rows)


def test_exit_colors_examples():
    assert adjust.exit_colors(((8, 6, 5, 0), (8, 5, 0), (6, 2), (4,))) == (2, 4, 3, 1)
    assert adjust.exit_colors(FIG_PATTERN) == (3, 1, 2)
    assert weyl.inverse((3, 1, 2)) == (2, 3, 1)
    assert adjust.exit_colors(((2, 0), (0,))) == (1, 2)


def test_exit_colors_staircase_invariance():
    for lam in [(1, 0), (2, 1, 0), (3, 2, 0)]:
        for pat in patterns.enumerate_left_strict(lam, len(lam)):
            assert adjust.exit_colors(pat) == \
                adjust.exit_colors(patterns.subtract_staircase(pat))


def test_exit_colors_inverts_flag_for_paper_shape():
    lam = (8, 6, 5, 0)
    shifted = ((8, 6, 5, 0), (8, 5, 0), (6, 2), (4,))
    pattern = patterns.add_staircase(shifted)
    w, _ = lattice.open_state_of_pattern(lam, pattern)
    assert weyl.inverse(w) == (2, 4, 3, 1)


def test_closed_state_of_examples():
    built = adjust.closed_state_of((2, 1), (1, 0), ((2, 0), (0,)))
    assert built is not None and built.spec.w == (2, 1)
    assert lattice.boltzmann(built) == laurent.monomial((2, 0))
    assert adjust.closed_state_of((1, 2), (1, 0), ((2, 0), (1,))) is None
    # flag equal to the forced flag: just the closed-up open state
    w, open_state = lattice.open_state_of_pattern((3, 2, 0), FIG_PATTERN)
    built = adjust.closed_state_of(w, (3, 2, 0), FIG_PATTERN)
    expected = adjust.to_closed(open_state)
    assert (built.horizontal, built.vertical) == \
        (expected.horizontal, expected.vertical)


def test_closed_state_of_path_independence():
    # walk the two maximal chains id -> w0 in ranks' worth of orders by
    # raising transpositions manually; both land on the same state
    lam = (2, 1, 0)
    pattern = ((4, 2, 0), (2, 0), (0,))
    w_a, state = lattice.open_state_of_pattern(lam, pattern)
    assert w_a == (1, 2, 3)
    base = adjust.to_closed(state)
    results = set()
    for chain in [((1, 2), (1, 3), (2, 3)), ((2, 3), (1, 3), (1, 2))]:
        cur = base
        for a, b in chain:
            cur = adjust.to_closed(adjust.raise_flag(cur, a, b))
        assert cur.spec.w == (3, 2, 1)
        results.add(cur)
    assert len(results) == 1
    assert results.pop() == adjust.closed_state_of((3, 2, 1), lam, pattern)


def test_raising_chain_is_injective_and_pattern_preserving():
    # mapping closed states of flag y into flag w >= y by raising chains
    lam = (2, 1, 0)
    for y in weyl.all_permutations(3):
        for w in weyl.all_permutations(3):
            if not weyl.bruhat_less(y, w):
                continue
            images = {}
            for state in lattice.enumerate_states(ModelSpec(lam, y, "closed")):
                pat = lattice.gtp_of_state(state)
                image = adjust.closed_state_of(w, lam, pat)
                assert image is not None
                assert lattice.gtp_of_state(image) == pat
                assert pat not in images
                images[pat] = image


def test_tau_monotone_under_vanishing_raise():
    # when the raising operator kills the embedded tableau of a closed
    # state whose flag covers via s_i, the exit colors increase at i
    for lam in [(1, 0), (2, 0), (2, 1, 0), (2, 2, 0), (3, 2, 0)]:
        r = len(lam)
        for y in weyl.all_permutations(r):
            for i in range(1, r):
                siy = weyl.compose(weyl.simple_reflection(i, r), y)
                if weyl.length(siy) <= weyl.length(y):
                    continue
                for state in lattice.enumerate_states(ModelSpec(lam, siy, "closed")):
                    if crystal.raising(lattice.crystal_tableau(state), i) is None:
                        tau = adjust.exit_colors(lattice.gtp_of_state(state))
                        assert tau[i - 1] < tau[i]
