"""Named verification suites.  Each returns a list of checks, one per claim instance."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from . import braidperm as bp
from .chains import (
    chain_compose,
    iterate_P,
    nat_f,
    nat_t,
    quasi_compose,
    quasi_iterate_P,
    retraction_a,
)
from .constructions import (
    RunConfig,
    block_bijection_bruteforce,
    block_bijection_formula,
    build_monoid,
    partial_bijection_count,
    partial_map_count,
)
from .rsnk import (
    all_flags,
    decompose,
    enumerate_rs,
    flag_element,
    flag_product,
    from_chain,
    is_rs_idempotent,
    oprime_act,
    oprime_elements,
    oprime_monoid,
    oprime_multiply,
    rs_cardinality,
    rs_green,
    rs_idempotent_count,
    rs_multiply,
    select_flags,
    to_chain,
    word_picks,
)
from .semigroup import (
    DEFAULT_CAP,
    class_of,
    closure,
    factorization,
    idempotents_closed,
    idempotents_commute,
    is_factorizable,
    is_regular,
    restrict,
)
from .sets import fininj_instance, subsets


@dataclass
class Check:
    claim: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.claim}{tail}"


def _expect(claim: str, got, want) -> Check:
    return Check(claim, got == want, f"got {got}, expected {want}")


def _full(n: int) -> frozenset:
    return frozenset(range(1, n + 1))


# -- P over the three base categories ---------------------------------------


def factorizable_constructively(S) -> bool:
    return all(factorization(S, a) is not None for a in range(len(S)))


def isn_suite(max_n: int = 4, max_k: int = 1) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        S = build_monoid(RunConfig("fininj", "P", n))
        out.append(_expect(f"partial bijections of {n} points: size", len(S), partial_bijection_count(n)))
        out.append(Check(f"partial bijections of {n} points: regular", is_regular(S)))
        out.append(Check(f"partial bijections of {n} points: idempotents commute", idempotents_commute(S)))
        out.append(_expect(f"partial bijections of {n} points: idempotents", len(S.idempotents()), 2 ** n))
        Q = build_monoid(RunConfig("fininj", "Q", n))
        out.append(Check(f"partial bijections of {n} points: Q filter keeps everything", Q.elements == S.elements))
    return out


def dual_suite(max_n: int = 3, max_k: int = 1) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        S = build_monoid(RunConfig("finsurj-op", "P", n))
        out.append(_expect(f"block bijections of {n} points: size", len(S), block_bijection_formula(n)))
        if n <= 3:
            out.append(_expect(f"block bijections of {n} points: brute-force count",
                               len(S), block_bijection_bruteforce(n)))
        out.append(Check(f"block bijections of {n} points: inverse monoid",
                         is_regular(S) and idempotents_commute(S)))
        Q = build_monoid(RunConfig("finsurj-op", "Q", n))
        out.append(Check(f"block bijections of {n} points: Q part factorizable", factorizable_constructively(Q)))
        if n == 3:
            out.extend(maximality_checks(S, Q, f"block bijections of {n} points"))
    return out


def maximality_checks(S, Q, label: str) -> list[Check]:
    """The Q elements are E.G of the whole monoid, and nothing larger is factorizable."""
    members = [S.index[x] for x in Q.elements]
    eg = S.products(S.idempotents(), S.units())
    out = [Check(f"{label}: Q part equals idempotents times units", set(members) == eg)]
    spoilers = 0
    for x in range(len(S)):
        if x in eg:
            continue
        T = restrict(S, closure(S, members + [x]))
        if is_factorizable(T):
            spoilers += 1
    out.append(Check(f"{label}: no element extends Q to a factorizable submonoid", spoilers == 0,
                     f"{len(S) - len(eg)} extensions tried"))
    return out


def ptn_suite(max_n: int = 3, max_k: int = 1) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        S = build_monoid(RunConfig("finset", "P", n))
        out.append(_expect(f"partial maps of {n} points: size", len(S), partial_map_count(n)))
        out.append(Check(f"partial maps of {n} points: regular", is_regular(S)))
        Q = build_monoid(RunConfig("finset", "Q", n))
        out.append(Check(f"partial maps of {n} points: Q part factorizable", factorizable_constructively(Q)))
    return out


# -- RS(n, k) ----------------------------------------------------------------------


def rs_grid(max_n: int, max_k: int, cap: int = DEFAULT_CAP):
    return [(n, k) for n in range(1, max_n + 1) for k in range(1, max_k + 1) if rs_cardinality(n, k) <= cap]


def cardinality_checks(max_n: int, max_k: int, cap: int = DEFAULT_CAP) -> list[Check]:
    """Engine enumeration of End over the k-fold iterate against both closed forms."""
    out = []
    for n, k in rs_grid(max_n, max_k, cap):
        cat = iterate_P(fininj_instance(n), k)
        els = cat.hom(_full(n), _full(n))
        out.append(_expect(f"RS({n},{k}) size", len(els), rs_cardinality(n, k)))
        idem = sum(1 for x in els if cat.compose(x, x) == x)
        out.append(_expect(f"RS({n},{k}) idempotents", idem, rs_idempotent_count(n, k)))
    return out


def rs_monoid(n: int, k: int):
    """Engine-built End of {1..n} in the k-fold iterate, with elements in flat form."""
    return build_monoid(RunConfig("fininj", f"Piter:{k}", n))


def green_checks(n: int, k: int) -> list[Check]:
    S = rs_monoid(n, k)
    flat = [from_chain(x) for x in S.elements]
    G = S.green()
    out = []
    for rel in "LRHDJ":
        cls = class_of(getattr(G, rel))
        agree = all(
            (cls[a] == cls[b]) == rs_green(flat[a], flat[b], rel)
            for a in range(len(S)) for b in range(len(S))
        )
        out.append(Check(f"RS({n},{k}) {rel}-relation matches predicate", agree))
    idem = set(S.idempotents())
    ok = all(
        sum(1 for a in cls if a in idem) == k ** (n - len(flat[cls[0]].flags[0]))
        for cls in G.R
    )
    out.append(Check(f"RS({n},{k}) idempotents per R-class", ok))
    return out


def flag_checks(n: int, k: int) -> list[Check]:
    cat = iterate_P(fininj_instance(n), k)
    flags = all_flags(n, k)
    agree = True
    for a in flags:
        for b in flags:
            got = from_chain(chain_compose(cat, to_chain(cat, flag_element(n, b)), to_chain(cat, flag_element(n, a))))
            agree &= got == flag_element(n, flag_product(b, a))
    out = [Check(f"RS({n},{k}) flag product formula matches engine", agree)]
    idem = [flag_element(n, f) for f in flags]
    hom = all(rs_multiply(x, y).flags[0] == x.flags[0] & y.flags[0] for x in idem for y in idem)
    onto = {x.flags[0] for x in idem} == set(subsets(_full(n)))
    fibers = all(rs_multiply(x, y) == y for x in idem for y in idem if x.flags[0] == y.flags[0])
    out.append(Check(f"RS({n},{k}) bottom-stage projection is a homomorphism onto subsets", hom and onto))
    out.append(Check(f"RS({n},{k}) projection fibers are right-zero bands", fibers))
    return out


def oracle_checks(n: int, k: int) -> list[Check]:
    cat = iterate_P(fininj_instance(n), k)
    els = enumerate_rs(n, k)
    chains = {x: to_chain(cat, x) for x in els}
    bad = sum(
        1 for a in els for b in els
        if from_chain(chain_compose(cat, chains[b], chains[a])) != rs_multiply(b, a)
    )
    return [Check(f"RS({n},{k}) flat product equals staircase product", bad == 0, f"{bad} mismatches")]


def rsnk_suite(max_n: int = 3, max_k: int = 2) -> list[Check]:
    out = []
    for n, k in rs_grid(max_n, max_k):
        flat = enumerate_rs(n, k)
        out.append(_expect(f"RS({n},{k}) flat enumeration size", len(flat), rs_cardinality(n, k)))
        out.append(_expect(f"RS({n},{k}) flat idempotents",
                           sum(map(is_rs_idempotent, flat)), rs_idempotent_count(n, k)))
    small = [(n, k) for n, k in rs_grid(max_n, max_k) if rs_cardinality(n, k) <= 200]
    for n, k in small:
        out += green_checks(n, k) + flag_checks(n, k) + oracle_checks(n, k)
    return out


# -- chains: orthodoxy, retraction and the transformations ---------------------------


def orthodox_checks(max_n: int, max_k: int) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            S = rs_monoid(n, k)
            out.append(Check(f"RS({n},{k}) orthodox", is_regular(S) and idempotents_closed(S)))
    return out


def retraction_checks(n: int, k: int) -> list[Check]:
    base = fininj_instance(n)
    cat, quasi = iterate_P(base, k), quasi_iterate_P(base, k)
    els = cat.hom(_full(n), _full(n))
    ret = {x: retraction_a(base, x) for x in els}
    idem = all(ret[ret[x]] == ret[x] for x in els)
    hom = all(ret[chain_compose(cat, x, y)] == chain_compose(cat, ret[x], ret[y]) for x in els for y in els)
    bridge = all(quasi_compose(quasi, x, y) == chain_compose(cat, x, ret[y]) for x in els for y in els)
    return [
        Check(f"RS({n},{k}) retraction is idempotent", idem),
        Check(f"RS({n},{k}) retraction is a homomorphism", hom),
        Check(f"RS({n},{k}) quasi product equals product with retracted right factor", bridge),
    ]


def quasi_regularity_checks(max_n: int, max_k: int) -> list[Check]:
    """Regular elements of the quasi-iterate are exactly the constant chains.

    The stages of a quasi product lie inside the bottom stage of the factor
    applied first, so ``x y x = x`` forces the chain of ``x`` to be constant.
    """
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            S = build_monoid(RunConfig("fininj", f"Pquasi:{k}", n))
            reg = {a for a in range(len(S)) if S.weak_inverse(a) is not None}
            const = {a for a in range(len(S)) if len(set(S.elements[a].subs)) == 1}
            out.append(Check(f"quasi RS({n},{k}) regular elements are the constant chains", reg == const,
                             f"{len(reg)} of {len(S)} regular"))
    return out


def orthodox_suite(max_n: int = 3, max_k: int = 3) -> list[Check]:
    out = orthodox_checks(max_n, max_k)
    for n, k in ((2, 2), (3, 2)):
        if n <= max_n and k <= max_k:
            out += retraction_checks(n, k)
    out += quasi_regularity_checks(min(max_n, 3), min(max_k, 2))
    return out


def transformation_checks(N: int, n: int) -> list[Check]:
    """Insertion/deletion identities on every endomorphism chain of length ``n``."""
    base = fininj_instance(N)
    els = iterate_P(base, n).hom(_full(N), _full(N))
    F = lambda s, x: nat_f(base, s, x)  # noqa: E731
    T = lambda s, x: nat_t(base, s, x)  # noqa: E731
    tag = f"universe {N}, length {n}"
    ok_id = all(_retract_identity(T, F, x, n) for x in els)
    out = [Check(f"{tag}: deleting an inserted stage is the identity", ok_id)]
    if n >= 2:
        ok4 = all(
            T(r, F(s, x)) == F(s, T(r - 1, x))
            for x in els for s in range(1, n + 2) for r in range(s + 2, n + 2)
        )
        ok5 = all(
            T(r, F(s, x)) == F(s - 1, T(r, x))
            for x in els for s in range(1, n + 2) for r in range(2, s)
        )
        out.append(Check(f"{tag}: deletion above an insertion commutes past it", ok4))
        out.append(Check(f"{tag}: deletion below an insertion commutes past it", ok5))
    return out


def _retract_identity(T, F, x, n) -> bool:
    for s in range(1, n + 2):
        y = F(s, x)
        if s >= 2 and T(s, y) != x:
            return False
        if s + 1 <= n + 1 and T(s + 1, y) != x:
            return False
    return True


def quasi_retract_checks(N: int, k: int) -> list[Check]:
    """Bottom insertion and stage-2 deletion between quasi-iterates of adjacent length."""
    base = fininj_instance(N)
    small = quasi_iterate_P(base, k)
    els = small.hom(_full(N), _full(N))
    ok = all(nat_t(base, 2, nat_f(base, 1, x)) == x for x in els)
    return [Check(f"quasi universe {N}, length {k}: projection after inclusion is the identity", ok)]


def homomorphism_checks(N: int, n: int) -> list[Check]:
    base = fininj_instance(N)
    cat, up = iterate_P(base, n), iterate_P(base, n + 1)
    els = cat.hom(_full(N), _full(N))
    ok_f = all(
        nat_f(base, s, chain_compose(cat, x, y)) == chain_compose(up, nat_f(base, s, x), nat_f(base, s, y))
        for s in range(1, n + 2) for x in els for y in els
    )
    out = [Check(f"universe {N}, length {n}: insertions are homomorphisms", ok_f)]
    if n >= 2:
        down = iterate_P(base, n - 1)
        ok_t = all(
            nat_t(base, s, chain_compose(cat, x, y)) == chain_compose(down, nat_t(base, s, x), nat_t(base, s, y))
            for s in range(2, n + 1) for x in els for y in els
        )
        out.append(Check(f"universe {N}, length {n}: deletions are homomorphisms", ok_t))
    return out


def nat_suite(max_n: int = 3, max_k: int = 3) -> list[Check]:
    out = []
    for N in range(1, max_n + 1):
        for n in range(1, max_k + 1):
            out += transformation_checks(N, n)
            out += quasi_retract_checks(N, n)
    for N in range(1, min(max_n, 2) + 1):
        for n in range(1, min(max_k, 2) + 1):
            out += homomorphism_checks(N, n)
    out += faithfulness_checks(max_k)
    return out


# -- the monoid of order-preserving maps and its action --------------------------------


def faithfulness_checks(max_m: int) -> list[Check]:
    out = []
    for m in range(1, max_m + 1):
        xs = enumerate_rs(m + 1, m)
        maps = oprime_elements(m)
        images = {tuple(oprime_act(phi, x) for x in xs) for phi in maps}
        out.append(Check(f"order-preserving maps on {m} stages act faithfully on RS({m + 1},{m})",
                         len(images) == len(maps), f"{len(images)} distinct actions of {len(maps)} maps"))
    return out


def oprime_suite(max_n: int = 3, max_k: int = 3) -> list[Check]:
    out = []
    for m in range(1, max_k + 1):
        M = oprime_monoid(m)
        out.append(_expect(f"order-preserving maps on {m} stages: size", len(M), comb(2 * m - 1, m - 1)))
        maps = oprime_elements(m)
        words = all(word_picks(decompose(phi), m) == phi.values for phi in maps)
        out.append(Check(f"order-preserving maps on {m} stages: generator words realize each map", words))
        xs = enumerate_rs(min(max_n, 2), m)
        direct = all(oprime_act(phi, x) == select_flags(x, phi.values) for phi in maps for x in xs)
        out.append(Check(f"order-preserving maps on {m} stages: generator action equals stage selection", direct))
        law = all(
            oprime_act(oprime_multiply(p, q), x) == oprime_act(p, oprime_act(q, x))
            for p in maps for q in maps for x in xs
        )
        out.append(Check(f"order-preserving maps on {m} stages: action law", law))
        hom = all(
            oprime_act(phi, rs_multiply(a, b)) == rs_multiply(oprime_act(phi, a), oprime_act(phi, b))
            for phi in maps for a in xs for b in xs
        )
        out.append(Check(f"order-preserving maps on {m} stages: act by homomorphisms", hom))
    out += faithfulness_checks(max_k)
    return out


# -- braid-permutation models ----------------------------------------------------------------


def derived_identity_check(depth: int = 6) -> Check:
    n = 2
    rules = bp.permutation_relations(n) + bp.inverse_relations(n) + bp.kernel_relations(n)
    res = bp.bounded_rewrite_equal(bp.parse_word("e1 t1 s1"), bp.parse_word("e1"), rules, depth)
    return Check("e1 t1 s1 = e1 derived by rewriting", res.equal,
                 f"{res.steps} steps" if res.equal else "not found")


def ibp_suite(max_n: int = 4, max_k: int = 1) -> list[Check]:
    out = []
    top = min(max_n, 4)
    for n in range(2, top + 1):
        for fam_results, label in ((bp.verify_bp_relations(n), "group"), (bp.verify_ibp_relations(n), "monoid")):
            fams: dict = {}
            for r in fam_results:
                fams.setdefault(r.family, []).append(r.holds)
            for fam, oks in fams.items():
                out.append(Check(f"n={n} {label} {fam} relations", all(oks), f"{len(oks)} instances"))
        if n >= 3:
            flipped = bp.verify_bp_relations(n, flipped=True)
            out.append(Check(f"n={n} flipped sigma breaks a mixed relation",
                             any(not r.holds for r in flipped if r.family == "mixed")))
    out.append(derived_identity_check())
    for n in range(2, min(top, 3) + 1):
        out += ibp_structure_checks(n, 3)
    return out


def ibp_structure_checks(n: int, length: int) -> list[Check]:
    Ys = subsets(range(1, n + 1))
    eps = {Y: bp.epsilon(Y, n) for Y in Ys}
    semilattice = all(bp.iwb_compose(eps[Y], eps[Z]) == eps[Y & Z] for Y in Ys for Z in Ys)
    round_trip = True
    idempotents = set()
    for w in bp.all_words(n, length):
        x = bp.evaluate(w, n)
        g = bp.evaluate_bp(bp.strip_idempotents(w), n)
        h, Y = bp.extend_to_total(x)
        round_trip &= bp.restrict_total(g, x.domain) == x and bp.restrict_total(h, Y) == x
        if bp.is_idempotent(x):
            idempotents.add(x)
    return [
        Check(f"n={n} strand-dropping idempotents multiply by intersection", semilattice),
        Check(f"n={n} words up to length {length} factor as total times idempotent", round_trip),
        Check(f"n={n} idempotents from words are exactly the strand-dropping ones",
              idempotents == set(eps.values())),
    ]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "isn": isn_suite,
    "dual": dual_suite,
    "ptn": ptn_suite,
    "rsnk": rsnk_suite,
    "nat": nat_suite,
    "orthodox": orthodox_suite,
    "ibp": ibp_suite,
    "oprime": oprime_suite,
}


def run_suite(name: str, max_n: Optional[int] = None, max_k: Optional[int] = None) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_k is not None:
        kwargs["max_k"] = max_k
    return SUITES[name](**kwargs)
