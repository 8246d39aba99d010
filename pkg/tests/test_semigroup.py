import itertools

import numpy as np
import pytest

from partialization import fininj_instance, iterate_P, lift_P, quasi_iterate_P
from partialization.semigroup import (
    AssociativityError,
    FiniteSemigroup,
    SizeCapExceeded,
    analyze,
    class_of,
    closure,
    end_monoid,
    factorization,
    is_factorizable,
    is_inverse,
    is_orthodox,
    is_regular,
    max_subgroups,
    restrict,
)

S = frozenset


def transformation_monoid(n):
    maps = list(itertools.product(range(n), repeat=n))
    # (g . f)(x) = g(f(x))
    return FiniteSemigroup.from_elements(maps, lambda g, f: tuple(g[f[x]] for x in range(n)))


def symmetric_group(n):
    perms = list(itertools.permutations(range(n)))
    return FiniteSemigroup.from_elements(perms, lambda g, f: tuple(g[f[x]] for x in range(n)))


def is2():
    return end_monoid(lift_P(fininj_instance(2)), S({1, 2}))


def rs22():
    return end_monoid(iterate_P(fininj_instance(2), 2), S({1, 2}))


def naive_green(M):
    """Green's relations straight from principal ideals with an identity adjoined."""
    n = len(M)
    els = range(n)
    one = [None, *els]

    def mul(a, b):
        return b if a is None else a if b is None else M.mul(a, b)

    right = [{mul(a, s) for s in one} for a in els]
    left = [{mul(s, a) for s in one} for a in els]
    two = [{mul(mul(s, a), t) for s in one for t in one} for a in els]

    def part(key):
        return sorted(sorted(b for b in els if key(a, b)) for a in els)

    L = part(lambda a, b: left[a] == left[b])
    R = part(lambda a, b: right[a] == right[b])
    H = part(lambda a, b: left[a] == left[b] and right[a] == right[b])
    J = part(lambda a, b: two[a] == two[b])
    # D = L o R
    D = part(lambda a, b: any(left[a] == left[c] and right[c] == right[b] for c in els))
    return {k: [list(c) for c in dict.fromkeys(map(tuple, v))] for k, v in
            {"L": L, "R": R, "H": H, "D": D, "J": J}.items()}


def quasi22():
    return end_monoid(quasi_iterate_P(fininj_instance(2), 2), S({1, 2}))


@pytest.mark.parametrize("make", [is2, rs22, quasi22, lambda: transformation_monoid(3)])
def test_green_matches_naive_oracle(make):
    M = make()
    got = M.green().as_dict()
    want = naive_green(M)
    for rel in "LRHDJ":
        assert got[rel] == want[rel], rel
    assert got["D"] == got["J"]


def test_is2_classes_and_subgroups():
    M = is2()
    assert sorted(len(c) for c in M.green().D) == [1, 2, 4]
    assert sorted(g.order for g in max_subgroups(M)) == [1, 1, 1, 2]
    top = [g for g in max_subgroups(M) if g.order == 2][0]
    assert top.abelian and top.element_orders == (1, 2)


def test_group_is_one_class():
    G = symmetric_group(3)
    classes = G.green()
    for rel in (classes.L, classes.R, classes.H, classes.D, classes.J):
        assert len(rel) == 1
    (sub,) = max_subgroups(G)
    assert sub.order == 6 and not sub.abelian
    assert sub.element_orders == (1, 2, 2, 2, 3, 3)


def test_transformation_monoids():
    T2, T3 = transformation_monoid(2), transformation_monoid(3)
    assert is_regular(T2) and is_orthodox(T2) and not is_inverse(T2)
    assert is_regular(T3) and not is_orthodox(T3)
    # every transformation is an idempotent after a permutation
    assert is_factorizable(T2) and is_factorizable(T3)


def test_rs22_is_orthodox_not_inverse():
    M = rs22()
    report = analyze(M)
    assert report.size == 14 and len(report.idempotents) == 9
    assert report.regular and report.orthodox and not report.inverse


def test_inverse_monoid_is_factorizable():
    M = is2()
    assert is_factorizable(M)
    for a in range(len(M)):
        e, g = factorization(M, a)
        assert M.mul(e, g) == a and M.mul(e, e) == e and g in M.units()


def test_trivial_monoid():
    M = FiniteSemigroup(["1"], [[0]])
    report = analyze(M)
    assert M.identity == 0 and report.idempotents == [0] and report.units == [0]
    assert all(report.verdicts().values())


def test_bad_tables_rejected():
    # left-zero-like table that is not associative
    with pytest.raises(AssociativityError):
        FiniteSemigroup(["a", "b"], [[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        FiniteSemigroup(["a"], [[1]])
    with pytest.raises(ValueError):
        FiniteSemigroup(["a", "b"], [[0]])


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        end_monoid(lift_P(fininj_instance(3)), S({1, 2, 3}), cap=10)


def test_closure_and_restrict():
    M = is2()
    units = M.units()
    assert closure(M, units) == sorted(units)
    E = closure(M, M.idempotents())
    assert E == sorted(M.idempotents())  # commuting idempotents form a subsemilattice
    sub = restrict(M, E)
    assert len(sub) == 4 and sub.identity is not None
    assert all(sub.mul(a, a) == a for a in range(len(sub)))
    assert closure(M, [a for a in range(len(M))]) == list(range(len(M)))


def test_idempotents_per_class():
    M = is2()
    E = set(M.idempotents())
    g = M.green()
    assert all(len(E & set(c)) == 1 for c in g.L)
    assert all(len(E & set(c)) == 1 for c in g.R)
    N = rs22()
    E = set(N.idempotents())
    g = N.green()
    assert all(len(E & set(c)) == 1 for c in g.L)
    counts = sorted(len(E & set(c)) for c in g.R)
    assert max(counts) > 1 and min(counts) == 1


def test_table_is_composition_order():
    M = transformation_monoid(2)
    const0, swap = M.index[(0, 0)], M.index[(1, 0)]
    # swap after const0 is const1; const0 after swap is const0
    assert M.elements[M.mul(swap, const0)] == (1, 1)
    assert M.elements[M.mul(const0, swap)] == (0, 0)


def test_class_of_and_products():
    M = is2()
    cls = class_of(M.green().H)
    assert set(cls) == set(range(len(M)))
    e = M.identity
    assert M.products([e], range(len(M))) == set(range(len(M)))
    assert M.products([], [e]) == set()
    assert isinstance(M.table, np.ndarray)


def test_semigroup_without_identity():
    M = quasi22()
    report = analyze(M)
    assert M.identity is None and report.units == []
    assert not report.regular and not report.factorizable
    assert len(M.green().D) > 1
