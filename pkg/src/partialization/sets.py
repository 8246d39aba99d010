"""The three set-based categories: injections, opposite surjections, all maps.

Objects are frozensets drawn from the universe {1..N}.
"""
from __future__ import annotations

from itertools import combinations, permutations, product

from .category import (
    Category,
    ComplementSquare,
    CompositionError,
    FinMap,
    PullbackSquare,
    Subobject,
    fmt_pairs,
    fmt_set,
    make_map,
)


def subsets(s) -> list[frozenset]:
    items = sorted(s)
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def set_partitions(items: list) -> list[list[list]]:
    """All set partitions of ``items`` with blocks in order of their minima."""
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for part in set_partitions(rest):
        out.append([[first]] + part)
        for i in range(len(part)):
            out.append(part[:i] + [[first] + part[i]] + part[i + 1:])
    return out


def inclusion(sub: frozenset, ambient: frozenset) -> FinMap:
    return FinMap(sub, ambient, tuple((x, x) for x in sorted(sub)))


class FinSetCategory(Category):
    """Finite subsets of {1..N} with all maps between them."""

    name = "finset"
    supports_complement = True

    def __init__(self, N: int):
        if N < 1:
            raise ValueError(f"universe size must be positive, got {N}")
        self.N = N
        self.universe = frozenset(range(1, N + 1))

    def objects(self) -> list:
        return subsets(self.universe)

    def hom(self, a, b) -> list:
        dom = sorted(a)
        return [
            FinMap(frozenset(a), frozenset(b), tuple(zip(dom, vals)))
            for vals in product(sorted(b), repeat=len(dom))
        ]

    def identity(self, a):
        return inclusion(frozenset(a), frozenset(a))

    def compose(self, g, f):
        self.check_composable(g, f)
        gt = g.table
        return FinMap(f.dom, g.cod, tuple((x, gt[y]) for x, y in f.pairs))

    def is_mono(self, f) -> bool:
        return len(f.image) == len(f.dom)

    def is_iso(self, f) -> bool:
        return self.is_mono(f) and f.image == f.cod

    def inverse(self, f):
        if not self.is_iso(f):
            raise CompositionError(f"not invertible: {f}")
        return make_map(f.cod, f.dom, {y: x for x, y in f.pairs})

    def pullback_along_mono(self, f, alpha) -> PullbackSquare:
        if f.cod != alpha.cod:
            raise CompositionError("pullback needs a cospan with a common codomain")
        self.require_mono(alpha)
        back = {y: z for z, y in alpha.pairs}
        apex = frozenset(x for x, y in f.pairs if y in back)
        top = make_map(apex, alpha.dom, {x: back[f(x)] for x in apex})
        return PullbackSquare(apex, inclusion(apex, f.dom), top)

    def complement(self, alpha, beta) -> ComplementSquare:
        # keep the image of beta.alpha and everything outside the image of beta
        self.require_mono(alpha)
        self.require_mono(beta)
        if alpha.cod != beta.dom:
            raise CompositionError("complement needs composable monos")
        ba = self.compose(beta, alpha)
        mid = ba.image | (beta.cod - beta.image)
        lower = FinMap(alpha.dom, mid, ba.pairs)
        return ComplementSquare(mid, lower, inclusion(mid, beta.cod))

    def canonical_subobject(self, alpha) -> Subobject:
        self.require_mono(alpha)
        k0 = alpha.image
        theta = FinMap(alpha.dom, k0, alpha.pairs)
        return Subobject(k0, inclusion(k0, alpha.cod), theta)

    def subobjects(self, a) -> list:
        return [inclusion(s, frozenset(a)) for s in subsets(a)]

    def describe(self, f) -> str:
        return fmt_pairs(f.pairs)

    def describe_subobject(self, iota) -> str:
        return fmt_set(iota.dom)


class FinInjCategory(FinSetCategory):
    """Finite subsets of {1..N} with injective maps."""

    name = "fininj"

    def hom(self, a, b) -> list:
        dom = sorted(a)
        return [
            FinMap(frozenset(a), frozenset(b), tuple(zip(dom, vals)))
            for vals in permutations(sorted(b), len(dom))
        ]


class FinSurjOpCategory(Category):
    """Opposite of finite sets with surjections.

    A morphism ``X -> Y`` is stored as the surjection ``Y -> X`` with
    ``op=True``.  Every morphism is mono, and pullbacks are pushouts of the
    underlying surjections.  Quotients are labelled by block minima, so every
    object stays a subset of the universe.
    """

    name = "finsurj-op"
    supports_complement = False

    def __init__(self, N: int):
        if N < 1:
            raise ValueError(f"universe size must be positive, got {N}")
        self.N = N
        self.universe = frozenset(range(1, N + 1))

    def objects(self) -> list:
        return subsets(self.universe)

    def hom(self, a, b) -> list:
        a, b = frozenset(a), frozenset(b)
        src = sorted(b)
        out = []
        for vals in product(sorted(a), repeat=len(src)):
            if set(vals) == a:
                out.append(FinMap(a, b, tuple(zip(src, vals)), op=True))
        return out

    def identity(self, a):
        a = frozenset(a)
        return FinMap(a, a, tuple((x, x) for x in sorted(a)), op=True)

    def compose(self, g, f):
        self.check_composable(g, f)
        ft = f.table
        return FinMap(f.dom, g.cod, tuple((z, ft[y]) for z, y in g.pairs), op=True)

    def is_mono(self, f) -> bool:
        return f.image == f.dom

    def is_iso(self, f) -> bool:
        return f.image == f.dom and len(f.dom) == len(f.cod)

    def inverse(self, f):
        if not self.is_iso(f):
            raise CompositionError(f"not invertible: {f}")
        return make_map(f.cod, f.dom, {x: y for y, x in f.pairs}, op=True)

    def pullback_along_mono(self, f, alpha) -> PullbackSquare:
        if f.cod != alpha.cod:
            raise CompositionError("pullback needs a cospan with a common codomain")
        shared = sorted(f.cod)
        parent = {y: y for y in shared}

        def find(y):
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            return y

        for surj in (f, alpha):
            first = {}
            for y, x in surj.pairs:
                if x in first:
                    ra, rb = find(first[x]), find(y)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
                else:
                    first[x] = y
        # label each block by the least point of its image in dom(f)
        label = {}
        for y in shared:
            r = find(y)
            label[r] = min(label.get(r, f(y)), f(y))
        apex = frozenset(label.values())
        left = make_map(apex, f.dom, {x: label[find(y)] for y, x in f.pairs}, op=True)
        top = make_map(apex, alpha.dom, {z: label[find(y)] for y, z in alpha.pairs}, op=True)
        return PullbackSquare(apex, left, top)

    def canonical_subobject(self, alpha) -> Subobject:
        blocks: dict = {}
        for x, k in alpha.pairs:
            blocks.setdefault(k, []).append(x)
        rep = {k: min(xs) for k, xs in blocks.items()}
        k0 = frozenset(rep.values())
        iota = make_map(k0, alpha.cod, {x: rep[k] for x, k in alpha.pairs}, op=True)
        theta = make_map(alpha.dom, k0, {m: k for k, m in rep.items()}, op=True)
        return Subobject(k0, iota, theta)

    def subobjects(self, a) -> list:
        a = frozenset(a)
        out = []
        for part in set_partitions(sorted(a)):
            k0 = frozenset(b[0] for b in part)
            out.append(make_map(k0, a, {x: b[0] for b in part for x in b}, op=True))
        return out

    def describe(self, f) -> str:
        return fmt_pairs(f.pairs)

    def describe_subobject(self, iota) -> str:
        blocks: dict = {}
        for x, k in iota.pairs:
            blocks.setdefault(k, []).append(x)
        return "/".join(fmt_set(b) for _, b in sorted(blocks.items()))


def fininj_instance(N: int) -> FinInjCategory:
    return FinInjCategory(N)


def finsurjop_instance(N: int) -> FinSurjOpCategory:
    return FinSurjOpCategory(N)


def finset_instance(N: int) -> FinSetCategory:
    return FinSetCategory(N)


CATEGORIES = {
    "fininj": fininj_instance,
    "finsurj-op": finsurjop_instance,
    "finset": finset_instance,
}
