from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithsets.errors import BadParameters, HypothesesViolated, InsufficientCoverage, NotConnected, WordParseError
from arithsets.freegrp import (
    IDENTITY,
    SAT,
    UNKNOWN,
    FGSet,
    PartialTiling,
    ball,
    ball_words,
    bounded_nonperiodic_solution,
    check_parity_balance,
    cover_search,
    distinct_values_on_spheres,
    format_word,
    greedy_tiling,
    inv,
    is_connected,
    mul,
    parity_example_set,
    parity_solution,
    parse_word,
    reduce_word,
    shortlex_key,
    sphere,
    tiling_to_solution_fg,
    verify_partial_tiling,
    verify_solution_patch,
)
from arithsets.freegrp.solutions import SolutionPatch

reduced2 = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8).map(reduce_word)


def test_word_examples():
    a, b = (1,), (2,)
    assert mul(a, inv(a)) == IDENTITY
    assert mul(mul(a, b), mul(inv(b), inv(a))) == IDENTITY
    assert parse_word("aBA") == (1, -2, -1)
    assert format_word((1, -2, -1)) == "aBA"
    assert parse_word("aA") == IDENTITY
    with pytest.raises(WordParseError):
        parse_word("a1")


def test_ball_sizes():
    assert len(ball(2, 1)) == 5
    assert len(ball(2, 2)) == 17 and len(sphere(2, 2)) == 12
    for r in range(5):
        assert len(ball(1, r)) == 2 * r + 1
        assert len(ball(2, r)) == 2 * 3**r - 1


def test_shortlex_order():
    assert [format_word(w) for w in ball_words(2, 1)] == ["1", "a", "A", "b", "B"]


def test_connectivity():
    assert is_connected(ball(2, 2))
    assert not is_connected(FGSet.parse(2, "a,b"))
    assert is_connected(FGSet.parse(2, "1,a,ab"))


@given(reduced2, reduced2, reduced2)
def test_group_axioms(u, v, w):
    assert mul(mul(u, v), w) == mul(u, mul(v, w))
    assert mul(u, inv(u)) == IDENTITY
    assert len(mul(u, v)) <= len(u) + len(v)
    assert len(mul(u, v)) % 2 == (len(u) + len(v)) % 2
    assert parse_word(format_word(u)) == u


@pytest.mark.parametrize(
    "text,radius",
    [("1,a,A,b,B", 3), ("1,a", 3), ("1", 2), ("a,ab", 3), ("1,a,A,b,B,aa,ab,aB,AA,Ab,AB,ba,bA,bb,Ba,BA,BB", 4)],
)
def test_greedy_tilings_verify(text, radius):
    k = FGSet.parse(2, text)
    t = greedy_tiling(k, radius)
    rep = verify_partial_tiling(k, t.shifts, radius)
    assert rep.ok, rep.violation


def test_trivial_tile_enumerates_ball():
    t = greedy_tiling(FGSet.parse(2, "1"), 2)
    assert set(t.shifts) == set(ball_words(2, 2))


def test_greedy_rejects_disconnected():
    with pytest.raises(NotConnected):
        greedy_tiling(FGSet.parse(2, "a,b"), 2)


def test_verify_tiling_violations():
    k = ball(2, 2)
    assert verify_partial_tiling(k, [IDENTITY], 2).ok
    rep = verify_partial_tiling(k, [IDENTITY, IDENTITY], 2)
    assert not rep.ok and rep.violation["kind"] == "overlap"
    rep = verify_partial_tiling(ball(2, 1), [IDENTITY], 2)
    assert rep.violation["kind"] == "uncovered"


def test_tiling_solutions():
    k = ball(2, 1)
    t = greedy_tiling(k, 3)
    patch = tiling_to_solution_fg(k, t, 2)
    assert set(patch.assignment.values()) == {4, -1}
    assert verify_solution_patch(k, patch).ok
    k = FGSet.parse(2, "1,a")
    patch = tiling_to_solution_fg(k, greedy_tiling(k, 4), 3)
    assert set(patch.assignment.values()) == {1, -1}
    assert verify_solution_patch(k, patch).ok
    with pytest.raises(BadParameters):
        tiling_to_solution_fg(FGSet.parse(2, "1"), greedy_tiling(FGSet.parse(2, "1"), 2), 2)
    with pytest.raises(InsufficientCoverage):
        tiling_to_solution_fg(ball(2, 1), PartialTiling(ball(2, 1), (IDENTITY,), 1), 2)


def _ball_minus_identity(rank, r):
    return FGSet(rank, ball(rank, r).elements - {IDENTITY})


def test_bounded_nonperiodic_b2():
    k = _ball_minus_identity(2, 2)
    patch = bounded_nonperiodic_solution(k, 5)
    rep = verify_solution_patch(k, patch)
    assert rep.ok and not rep.degenerate
    assert all(s.distinct for s in patch.log)
    counts = distinct_values_on_spheres(patch)
    assert counts[3] >= 2 and counts[5] >= 2
    assert patch.max_abs() <= 1


def test_bounded_nonperiodic_b3():
    k = _ball_minus_identity(2, 3)
    assert verify_solution_patch(k, bounded_nonperiodic_solution(k, 4)).ok


def test_bounded_hypotheses():
    with pytest.raises(HypothesesViolated):
        bounded_nonperiodic_solution(ball(2, 2), 3)
    with pytest.raises(HypothesesViolated):
        bounded_nonperiodic_solution(_ball_minus_identity(1, 2), 3)
    with pytest.raises(HypothesesViolated):
        bounded_nonperiodic_solution(sphere(2, 1), 3)


def test_parity():
    k = parity_example_set()
    assert len(k) == 24 and check_parity_balance(k)
    assert sum(1 for w in k.elements if len(w) % 2) == 12
    assert _ball_minus_identity(2, 2).elements <= k.elements
    assert verify_solution_patch(k, parity_solution(2, 5)).ok
    b1 = ball(2, 1)
    assert not check_parity_balance(b1)
    assert not verify_solution_patch(b1, parity_solution(2, 5)).ok
    k4 = FGSet.parse(2, "a,A,ab,AB")
    assert check_parity_balance(k4)
    assert verify_solution_patch(k4, parity_solution(2, 4)).ok


def test_verify_patch_zero_and_perturbed():
    k = parity_example_set()
    zero = SolutionPatch(2, 4, {w: Fraction(0) for w in ball_words(2, 4)})
    rep = verify_solution_patch(k, zero)
    assert rep.ok and rep.degenerate
    good = parity_solution(2, 5)
    bad = dict(good.assignment)
    bad[(1,)] += 1
    rep = verify_solution_patch(k, SolutionPatch(2, 5, bad))
    assert not rep.ok and rep.first_failure is not None


@given(st.integers(1, 3), st.data())
@settings(max_examples=25, deadline=None)
def test_parity_iff_balanced(rank, data):
    pool = ball_words(rank, 3)[1:]
    ws = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=6, unique=True))
    k = FGSet(rank, frozenset(ws))
    assert verify_solution_patch(k, parity_solution(rank, 4)).ok == check_parity_balance(k)


@given(st.integers(0, 5))
def test_left_translate_preserves_size(i):
    k = ball(2, 1)
    h = ball_words(2, 2)[i]
    assert len(k.left_translate(h)) == len(k)


def test_cover_search():
    assert cover_search(sphere(2, 1), 2).status == SAT
    r = cover_search(ball(2, 1), 2)
    assert r.status == SAT
    cells = [mul(h, w) for h in r.shifts for w in ball(2, 1).elements]
    assert len(cells) == len(set(cells))
    assert set(ball_words(2, 2)) <= set(cells)
    assert cover_search(sphere(2, 2), 2, budget=50).status == UNKNOWN


def test_shortlex_key_total():
    ws = ball_words(2, 3)
    assert ws == sorted(ws, key=shortlex_key)


def test_partial_tiling_json():
    t = greedy_tiling(ball(2, 1), 2)
    assert isinstance(t, PartialTiling)
    assert t.to_json()["shifts"][0] == "1"
