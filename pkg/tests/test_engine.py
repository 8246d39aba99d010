import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partialization import (
    NotMonoError,
    canonicalize_p,
    finset_instance,
    fininj_instance,
    finsurjop_instance,
    inclusion,
    lift_P,
    make_map,
    p_compose,
    q_filter,
)
from partialization.semigroup import end_monoid, idempotents_commute, is_regular
from partialization.sets import CATEGORIES
from partialization.universal import verify_complement, verify_pullback

S = frozenset
FULL2, FULL3 = S({1, 2}), S({1, 2, 3})


def span(cat, src, dst, mapping):
    """Partial map ``mapping`` on ``src`` as a canonical span."""
    dom = S(mapping)
    return cat.canonicalize(S(src), S(dst), dom, inclusion(dom, S(src)), make_map(dom, S(dst), mapping))


def partial_injections(n):
    pts = range(1, n + 1)
    out = []
    for dom_size in range(n + 1):
        for dom in itertools.combinations(pts, dom_size):
            for img in itertools.permutations(pts, dom_size):
                out.append(dict(zip(dom, img)))
    return out


def test_canonicalize_pushes_relabelling_into_f():
    P = lift_P(fininj_instance(3))
    a = make_map(S({1}), FULL3, {1: 3})
    f = make_map(S({1}), FULL3, {1: 1})
    x = canonicalize_p(P, FULL3, FULL3, S({1}), a, f)
    assert x.sub == S({3})
    assert x.alpha == inclusion(S({3}), FULL3)
    assert x.f == make_map(S({3}), FULL3, {3: 1})


def test_canonicalize_fixed_point_and_relabelling_invariance():
    P = lift_P(fininj_instance(3))
    x = span(P, FULL3, FULL3, {3: 1})
    assert canonicalize_p(P, FULL3, FULL3, x.sub, x.alpha, x.f) == x
    # same partial injection through a different intermediate object
    a = make_map(S({2}), FULL3, {2: 3})
    f = make_map(S({2}), FULL3, {2: 1})
    assert canonicalize_p(P, FULL3, FULL3, S({2}), a, f) == x


def test_canonicalize_rejects_non_mono():
    P = lift_P(finset_instance(2))
    a = make_map(FULL2, S({1}), {1: 1, 2: 1})
    with pytest.raises(NotMonoError):
        canonicalize_p(P, S({1}), FULL2, FULL2, a, P.base.identity(FULL2))


def test_compose_examples():
    P = lift_P(fininj_instance(2))
    x, y = span(P, FULL2, FULL2, {1: 2}), span(P, FULL2, FULL2, {2: 1})
    assert p_compose(P, y, x) == span(P, FULL2, FULL2, {1: 1})
    assert p_compose(P, x, x).sub == S()
    e = P.identity(FULL2)
    assert p_compose(P, e, x) == x == p_compose(P, x, e)


def test_compose_matches_partial_injection_oracle():
    P = lift_P(fininj_instance(3))
    maps = partial_injections(3)
    for f, g in itertools.product(maps, repeat=2):
        want = {x: g[f[x]] for x in f if f[x] in g}
        assert p_compose(P, span(P, FULL3, FULL3, g), span(P, FULL3, FULL3, f)) == span(P, FULL3, FULL3, want)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_compose_associative_property(data):
    name = data.draw(st.sampled_from(sorted(CATEGORIES)))
    P = lift_P(CATEGORIES[name](3))
    objs = P.objects()
    a, b, c, d = (data.draw(st.sampled_from(objs)) for _ in range(4))
    homs = [P.hom(a, b), P.hom(b, c), P.hom(c, d)]
    if not all(homs):
        return
    f, g, h = (data.draw(st.sampled_from(hs)) for hs in homs)
    assert P.compose(h, P.compose(g, f)) == P.compose(P.compose(h, g), f)


@pytest.mark.parametrize("name,sizes", [
    ("fininj", [2, 7, 34, 209]),
    ("finsurj-op", [1, 3, 25]),
    ("finset", [2, 9, 64]),
])
def test_end_sizes(name, sizes):
    for n, want in enumerate(sizes, start=1):
        P = lift_P(CATEGORIES[name](n))
        assert len(P.hom(S(range(1, n + 1)), S(range(1, n + 1)))) == want


@pytest.mark.parametrize("name,n", [("fininj", 3), ("finsurj-op", 3)])
def test_inverse_monoid_law(name, n):
    S_ = end_monoid(lift_P(CATEGORIES[name](n)), S(range(1, n + 1)))
    assert is_regular(S_) and idempotents_commute(S_)
    # idempotents are exactly the spans with f = alpha
    for i, x in enumerate(S_.elements):
        assert (S_.mul(i, i) == i) == (x.f == x.alpha)


def test_partial_maps_not_inverse():
    S_ = end_monoid(lift_P(finset_instance(2)), FULL2)
    assert is_regular(S_) and not idempotents_commute(S_)


def test_q_filter_examples():
    P = lift_P(fininj_instance(2))
    x = span(P, FULL2, FULL2, {1: 2})
    q = q_filter(P, x)
    assert q is not None and q.extension == make_map(FULL2, FULL2, {1: 2, 2: 1})
    total = P.include(make_map(FULL2, FULL2, {1: 1, 2: 2}))
    assert q_filter(P, total).extension == total.f
    for y in P.hom(FULL2, S({1})):
        assert q_filter(P, y) is None


def test_q_filter_extension_witness():
    for name in sorted(CATEGORIES):
        P = lift_P(CATEGORIES[name](3))
        for x in P.hom(FULL3, FULL3):
            q = q_filter(P, x)
            if q is not None:
                assert P.base.compose(q.extension, x.alpha) == x.f


def test_q_equals_p_for_injections():
    P = lift_P(fininj_instance(3))
    assert all(q_filter(P, x) is not None for x in P.hom(FULL3, FULL3))


def test_finsurjop_q_size():
    P = lift_P(finsurjop_instance(3))
    assert sum(q_filter(P, x) is not None for x in P.hom(FULL3, FULL3)) == 16


def test_monos_of_lift_are_injections():
    P = lift_P(fininj_instance(2))
    for a in P.objects():
        for b in P.objects():
            monos = [x for x in P.hom(a, b) if P.is_mono(x)]
            assert {P.underlying_mono(x) for x in monos} == set(P.base.hom(a, b))


def test_lift_pullbacks_and_complements_universal():
    P = lift_P(fininj_instance(2))
    objs = P.objects()
    for a, z, y in itertools.product(objs, repeat=3):
        for alpha in P.hom(a, z):
            if not P.is_mono(alpha):
                continue
            for f in P.hom(y, z):
                assert verify_pullback(P, f, alpha, P.pullback_along_mono(f, alpha))
    for i, j, k in itertools.product(objs, repeat=3):
        for a in P.hom(i, j):
            if not P.is_mono(a):
                continue
            for b in P.hom(j, k):
                if P.is_mono(b):
                    assert verify_complement(P, a, b, P.complement(a, b))


def test_double_lift_size():
    PP = lift_P(lift_P(fininj_instance(2)))
    assert len(PP.hom(FULL2, FULL2)) == 14
