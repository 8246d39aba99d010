import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialization import braidperm as bp

letters = st.integers(-3, 3).filter(lambda a: a != 0)
words = st.lists(letters, max_size=12).map(tuple)


# -- free words ----------------------------------------------------------------------


@given(words)
def test_reduce_is_idempotent_and_free_of_cancellations(w):
    r = bp.reduce_word(w)
    assert bp.reduce_word(r) == r
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(words, words)
def test_inverse_and_concatenation(u, v):
    assert bp.reduce_word(u + bp.invert_word(u)) == ()
    assert bp.invert_word(bp.reduce_word(u + v)) == bp.reduce_word(bp.invert_word(v) + bp.invert_word(u))


@given(words, words)
def test_substitution_is_a_homomorphism(u, v):
    images = {1: (1, 2, -1), 2: (1,), 3: (3,)}
    assert bp.substitute(u + v, images) == bp.reduce_word(bp.substitute(u, images) + bp.substitute(v, images))


@given(words, words)
def test_erasing_is_a_homomorphism(u, v):
    keep = {1, 3}
    assert bp.erase_letters(u + v, keep) == bp.reduce_word(bp.erase_letters(u, keep) + bp.erase_letters(v, keep))


def test_conjugate_parts():
    assert bp.conjugate_parts((1, 2, -1)) == ((1,), 2)
    assert bp.conjugate_parts((3,)) == ((), 3)
    for bad in [(1, 2), (1, -2, -1), (1, 2, 1)]:
        with pytest.raises(ValueError):
            bp.conjugate_parts(bad)
    assert bp.fmt_word((1, -2)) == "x1 x2^-1"
    assert bp.fmt_word(()) == "1"


# -- group generators -----------------------------------------------------------------


def test_generator_images():
    g = bp.bp_generator("s", 1, 2)
    assert g.images == ((1, 2, -1), (1,))
    assert g.perm == (2, 1) and g.conjugators == ((1,), ())
    assert bp.bp_generator("t", 1, 3).images == ((2,), (1,), (3,))
    assert bp.bp_generator("s", 1, 2, flipped=True) == bp.bp_generator("S", 1, 2)


def test_sigma_and_tau_do_not_commute():
    s1, t1 = bp.parse_word("s1"), bp.parse_word("t1")
    assert bp.evaluate_bp(s1 + t1, 2) != bp.evaluate_bp(t1 + s1, 2)


def test_sigma_inverse():
    for i in (1, 2):
        assert bp.evaluate_bp((("s", i), ("S", i)), 3) == bp.aut_identity(3)
        assert bp.evaluate_bp((("S", i), ("s", i)), 3) == bp.aut_identity(3)


def test_generator_errors():
    with pytest.raises(ValueError):
        bp.bp_generator("s", 2, 2)
    with pytest.raises(ValueError):
        bp.bp_generator("q", 1, 2)
    with pytest.raises(ValueError):
        bp.parse_word("s1 x2")
    with pytest.raises(ValueError):
        bp.parse_word("s")
    with pytest.raises(ValueError):
        bp.evaluate_bp(bp.parse_word("e1"), 2)
    with pytest.raises(ValueError):
        bp.generator_element(("e", 3), 2)
    with pytest.raises(ValueError):
        bp.aut_compose(bp.aut_identity(2), bp.aut_identity(3))


def test_parse_and_format():
    w = bp.parse_word("s1 S2 t1 e3")
    assert w == (("s", 1), ("S", 2), ("t", 1), ("e", 3))
    assert bp.format_word(w) == "s1 S2 t1 e3"
    assert bp.format_word(()) == "1"


def test_automorphism_action_matches_composition():
    g, f = bp.bp_generator("s", 1, 3), bp.bp_generator("t", 2, 3)
    gf = bp.aut_compose(g, f)
    for w in [(1,), (2, -3), (3, 1, 2)]:
        assert gf(w) == g(f(w))
    assert bp.aut_equal(bp.aut_compose(bp.aut_identity(3), g), g)


# -- relations ---------------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_group_relations_hold(n):
    results = bp.verify_bp_relations(n)
    assert results and all(r.holds for r in results)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monoid_relations_hold(n):
    results = bp.verify_ibp_relations(n)
    assert {r.family for r in results} == {f for f, rels in bp.IBP_FAMILIES.items() if rels(n)}
    assert all(r.holds for r in results), [str(r) for r in results if not r.holds]


@pytest.mark.parametrize("n", [3, 4])
def test_flipped_sigma_breaks_mixed_relations(n):
    bad = [r for r in bp.verify_bp_relations(n, flipped=True) if not r.holds]
    assert bad and {r.family for r in bad} == {"mixed"}
    assert str(bad[0]).startswith("FAIL [mixed]")


def test_relation_check_size_limits():
    with pytest.raises(ValueError):
        bp.verify_bp_relations(1)
    with pytest.raises(ValueError):
        bp.verify_ibp_relations(5)


def test_literal_reading_of_action_condition_fails():
    # commuting e2 past s1 would need j outside {1, 2}
    lhs, rhs = bp.parse_word("s1 e2"), bp.parse_word("e2 s1")
    assert bp.evaluate(lhs, 3) != bp.evaluate(rhs, 3)
    assert bp.evaluate(lhs, 3) == bp.evaluate(bp.parse_word("e1 s1"), 3)


# -- partial elements ------------------------------------------------------------------------


def test_epsilon_examples():
    n = 3
    eps = {Y: bp.epsilon(Y, n) for r in range(n + 1) for Y in itertools.combinations(range(1, n + 1), r)}
    assert len(set(eps.values())) == 8
    assert bp.iwb_compose(bp.epsilon({1}, 2), bp.epsilon({2}, 2)) == bp.epsilon(set(), 2)
    assert bp.epsilon({1, 2}, 2) == bp.iwb_identity(2)
    with pytest.raises(ValueError):
        bp.epsilon({4}, 3)


def test_partial_composition_erases_dropped_strands():
    x = bp.evaluate(bp.parse_word("e2 s1"), 2)
    # s1 first: x1 -> x1 x2 x1^-1 lands on strand 2, which e2 drops
    assert x.domain == frozenset({2}) and x.table == {2: (1,)}
    y = bp.evaluate(bp.parse_word("e1 s1"), 2)
    assert y.table == {1: (2,)}
    assert str(y) == "{x1->x2}"
    assert y.codomain == frozenset({2}) and y.conjugators == {1: ()}


def test_identity_and_rank_mismatch():
    x = bp.evaluate(bp.parse_word("s1 e2 t2"), 3)
    one = bp.iwb_identity(3)
    assert bp.iwb_compose(one, x) == x == bp.iwb_compose(x, one)
    with pytest.raises(ValueError):
        bp.iwb_compose(bp.iwb_identity(2), x)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(list(bp.all_words(3, 1))[1:]), max_size=4),
       st.lists(st.sampled_from(list(bp.all_words(3, 1))[1:]), max_size=4),
       st.lists(st.sampled_from(list(bp.all_words(3, 1))[1:]), max_size=4))
def test_partial_composition_associative(a, b, c):
    x, y, z = (bp.evaluate(tuple(tok for (tok,) in w), 3) for w in (a, b, c))
    assert bp.iwb_compose(x, bp.iwb_compose(y, z)) == bp.iwb_compose(bp.iwb_compose(x, y), z)


def test_evaluate_respects_concatenation():
    for u in bp.all_words(2, 2):
        for v in bp.all_words(2, 2):
            assert bp.evaluate(u + v, 2) == bp.iwb_compose(bp.evaluate(u, 2), bp.evaluate(v, 2))


def test_extend_to_total_round_trip():
    for w in bp.all_words(3, 2):
        x = bp.evaluate(w, 3)
        g, Y = bp.extend_to_total(x)
        assert sorted(g.perm) == [1, 2, 3]
        assert bp.restrict_total(g, Y) == x
        # the group part of the word is another witness
        assert bp.restrict_total(bp.evaluate_bp(bp.strip_idempotents(w), 3), x.domain) == x


def test_idempotents_are_strand_droppers():
    found = {x for w in bp.all_words(2, 3) if bp.is_idempotent(x := bp.evaluate(w, 2))}
    assert found == {bp.epsilon(Y, 2) for Y in [(), (1,), (2,), (1, 2)]}


# -- rewriting ---------------------------------------------------------------------------------


def _ibp_rules(n):
    return [r for fam in bp.IBP_FAMILIES.values() for r in fam(n)]


def test_derived_identity():
    rules = bp.permutation_relations(2) + bp.inverse_relations(2) + bp.kernel_relations(2)
    res = bp.bounded_rewrite_equal(bp.parse_word("e1 t1 s1"), bp.parse_word("e1"), rules, 6)
    assert res.equal and res.steps <= 6
    assert res.path[0] == bp.parse_word("e1 t1 s1") and res.path[-1] == bp.parse_word("e1")
    for a, b in zip(res.path, res.path[1:]):
        assert b in set(bp._neighbours(a, rules, 20))
    assert bp.evaluate(bp.parse_word("e1 t1 s1"), 2) == bp.evaluate(bp.parse_word("e1"), 2)


def test_unknown_verdict_for_distinct_elements():
    u, v = bp.parse_word("e1 s1"), bp.parse_word("e1")
    res = bp.bounded_rewrite_equal(u, v, _ibp_rules(2), 4)
    assert res.verdict == "unknown" and not res.equal and res.steps is None
    assert bp.evaluate(u, 2) != bp.evaluate(v, 2)


def test_rewrite_edge_cases():
    w = bp.parse_word("s1 t1")
    res = bp.bounded_rewrite_equal(w, w, [], 1)
    assert res.equal and res.steps == 0
    for depth in (0, -1):
        with pytest.raises(ValueError):
            bp.bounded_rewrite_equal(w, w, [], depth)
    assert bp.bounded_rewrite_equal(w, (), [], 3).verdict == "unknown"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(list(bp.all_words(2, 1))[1:]), min_size=1, max_size=3),
       st.lists(st.sampled_from(list(bp.all_words(2, 1))[1:]), min_size=1, max_size=3))
def test_rewriting_is_sound(a, b):
    u, v = tuple(t for (t,) in a), tuple(t for (t,) in b)
    res = bp.bounded_rewrite_equal(u, v, _ibp_rules(2), 3)
    if res.equal:
        assert bp.evaluate(u, 2) == bp.evaluate(v, 2)


# -- factorization --------------------------------------------------------------------------------


def test_find_factorization():
    x = bp.evaluate(bp.parse_word("e2 s1 t1"), 2)
    found = bp.find_factorization(x, 4)
    assert found is not None
    word, Y = found
    assert bp.restrict_total(bp.evaluate_bp(word, 2), Y) == x
    assert bp.find_factorization(bp.iwb_identity(2), 0) == ((), frozenset({1, 2}))


def test_group_elements_by_length_are_distinct():
    seen = list(bp.bp_elements_by_length(2, 3))
    assert len({g for _, g in seen}) == len(seen)
    assert all(bp.evaluate_bp(w, 2) == g for w, g in seen)


def test_all_words_counts():
    assert sum(1 for _ in bp.all_words(2, 2)) == 1 + 5 + 25
    assert list(bp.all_words(2, 1, [("t", 1)])) == [(), (("t", 1),)]
