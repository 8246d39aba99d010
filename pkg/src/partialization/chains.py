"""Iterated partialization in flat form.

A morphism of the n-fold iterate from ``src`` to ``dst`` is a chain of monos

    src <-a_n- k_n <- ... <-a_1- k_1 -f-> dst

up to isomorphism of the intermediate objects.  ``subs[s-1]`` is ``k_s`` and
``alphas[s-1]`` is ``a_s: k_s -> k_{s+1}`` (with ``k_{n+1} = src``).

Two products live on the same chains: the true iterate (a staircase of one
pullback per row followed by complement squares) and the quasi-iterate
(pullbacks only).  The recursive nest ``P(P(...))`` from ``engine`` is kept as
an oracle and is reachable through :func:`flatten` and :func:`unflatten`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .category import (
    Category,
    CategoryError,
    ComplementSquare,
    ComplementUnsupported,
    CompositionError,
    NotMonoError,
    PullbackSquare,
    Subobject,
)
from .engine import PCategory, PMorphism
from .sets import inclusion

INF = None  # stage selector meaning "the source object itself"


@dataclass(frozen=True)
class ChainMorphism:
    src: Any
    dst: Any
    subs: tuple
    alphas: tuple
    f: Any

    @property
    def dom(self):
        return self.src

    @property
    def cod(self):
        return self.dst

    @property
    def length(self) -> int:
        return len(self.subs)


class ChainCategory(Category):
    """The n-fold iterate of P over ``base`` (or its quasi-iterate)."""

    def __init__(self, base: Category, n: int, quasi: bool = False):
        if n < 1:
            raise ValueError(f"chain length must be positive, got {n}")
        if not quasi and n >= 2 and not base.supports_complement:
            raise ComplementUnsupported(
                f"{base.name} has no complement squares; iterating P {n} times is undefined"
            )
        self.base = base
        self.n = n
        self.quasi = quasi
        self.supports_complement = base.supports_complement and not quasi
        self.name = f"P{'q' if quasi else ''}^{n}({base.name})"
        self._levels = None

    @property
    def levels(self) -> list[Category]:
        """``levels[t]`` is P applied t times recursively."""
        if self._levels is None:
            levels = [self.base]
            for _ in range(self.n):
                levels.append(PCategory(levels[-1]))
            self._levels = levels
        return self._levels

    # -- construction -----------------------------------------------------

    def canonicalize(self, src, dst, subs, alphas, f) -> ChainMorphism:
        b = self.base
        subs, alphas = list(subs), list(alphas)
        if len(subs) != self.n or len(alphas) != self.n:
            raise CompositionError(f"expected a chain of length {self.n}")
        theta = None
        for s in range(self.n - 1, -1, -1):
            a = alphas[s] if theta is None else b.compose(theta, alphas[s])
            if not b.is_mono(a):
                raise NotMonoError(f"chain leg {s + 1} is not a mono")
            subs[s], alphas[s], theta = b.canonical_subobject(a)
        if theta != b.identity(theta.dom):
            f = b.compose(f, b.inverse(theta))
        return ChainMorphism(src, dst, tuple(subs), tuple(alphas), f)

    def make(self, src, dst, subs, f) -> ChainMorphism:
        """Chain of inclusions ``subs[0] <= ... <= subs[-1] <= src`` (set categories)."""
        tops = list(subs[1:]) + [src]
        alphas = [inclusion(frozenset(lo), frozenset(hi)) for lo, hi in zip(subs, tops)]
        return self.canonicalize(src, dst, subs, alphas, f)

    def identity(self, a):
        ida = self.base.identity(a)
        return ChainMorphism(a, a, (a,) * self.n, (ida,) * self.n, ida)

    def include(self, f) -> ChainMorphism:
        b = self.base
        a = f.dom
        return ChainMorphism(a, f.cod, (a,) * self.n, (b.identity(a),) * self.n, f)

    def objects(self) -> list:
        return self.base.objects()

    def hom(self, a, b) -> list:
        base = self.base
        out = []

        def walk(top, subs, alphas):
            if len(subs) == self.n:
                k1 = subs[0]
                for f in base.hom(k1, b):
                    out.append(ChainMorphism(a, b, tuple(subs), tuple(alphas), f))
                return
            for iota in base.subobjects(top):
                walk(iota.dom, [iota.dom] + subs, [iota] + alphas)

        walk(a, [], [])
        return out

    def compose(self, g, f):
        if self.quasi:
            return quasi_compose(self, g, f)
        return chain_compose(self, g, f)

    # -- structure delegated to the recursive nest -------------------------

    def _require_true(self):
        if self.quasi:
            raise CategoryError("quasi-iterations are not given pullbacks or complements")

    def is_mono(self, x) -> bool:
        b = self.base
        return all(b.is_iso(a) for a in x.alphas) and b.is_mono(x.f)

    def is_iso(self, x) -> bool:
        b = self.base
        return all(b.is_iso(a) for a in x.alphas) and b.is_iso(x.f)

    def underlying_mono(self, x):
        if not self.is_mono(x):
            raise NotMonoError("chain is not a monomorphism")
        b = self.base
        return b.compose(x.f, b.inverse(b.compose_all(*reversed(x.alphas))))

    def inverse(self, x):
        return self.include(self.base.inverse(self.underlying_mono(x)))

    def pullback_along_mono(self, x, beta) -> PullbackSquare:
        self._require_true()
        top = self.levels[-1]
        apex, left, up = top.pullback_along_mono(flatten(self, x), flatten(self, beta))
        return PullbackSquare(apex, unflatten(self, left), unflatten(self, up))

    def complement(self, alpha, beta) -> ComplementSquare:
        self._require_true()
        mid, lower, upper = self.base.complement(
            self.underlying_mono(alpha), self.underlying_mono(beta)
        )
        return ComplementSquare(mid, self.include(lower), self.include(upper))

    def canonical_subobject(self, alpha) -> Subobject:
        k0, iota, theta = self.base.canonical_subobject(self.underlying_mono(alpha))
        return Subobject(k0, self.include(iota), self.include(theta))

    def subobjects(self, a) -> list:
        return [self.include(iota) for iota in self.base.subobjects(a)]

    def describe(self, x) -> str:
        b = self.base
        stages = []
        into_src = None
        for s in range(self.n - 1, -1, -1):
            into_src = x.alphas[s] if into_src is None else b.compose(into_src, x.alphas[s])
            stages.append(b.describe_subobject(into_src))
        return "[" + "|".join(reversed(stages)) + "];" + b.describe(x.f)

    def describe_subobject(self, iota) -> str:
        return self.base.describe_subobject(self.underlying_mono(iota))


def iterate_P(cat: Category, k: int):
    """``cat`` for k == 0, otherwise the flat k-fold iterate of P."""
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    if k == 0:
        return cat
    return ChainCategory(cat, k)


def quasi_iterate_P(cat: Category, k: int):
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    if k == 0:
        return cat
    return ChainCategory(cat, k, quasi=True)


def _check_pair(cat: ChainCategory, second, first):
    if second.length != first.length or first.length != cat.n:
        raise CompositionError("chains of different lengths")
    if first.dst != second.src:
        raise CompositionError(f"cannot compose: {first.dst!r} != {second.src!r}")


def chain_compose(cat: ChainCategory, second: ChainMorphism, first: ChainMorphism) -> ChainMorphism:
    """Product in the true iterate, evaluated row by row on a staircase.

    Each row pulls the current right map back along one leg of ``second``
    and then walks left through complement squares.  The last object of a
    row becomes the next stage of the result.
    """
    _check_pair(cat, second, first)
    b = cat.base
    n = cat.n
    row = list(first.subs)
    hor = list(first.alphas[:-1])
    fin = first.alphas[-1]
    right = first.f
    subs, alphas = [None] * n, [None] * n
    for r in range(n - 1, -1, -1):
        q1, down, right = b.pullback_along_mono(right, second.alphas[r])
        objs, downs, new_hor = [q1], [down], []
        for c in range(len(row) - 1):
            mid, lower, upper = b.complement(downs[c], hor[c])
            objs.append(mid)
            new_hor.append(lower)
            downs.append(upper)
        subs[r] = objs[-1]
        alphas[r] = b.compose(fin, downs[-1])
        row, hor = objs[:-1], new_hor[:-1]
        fin = new_hor[-1] if new_hor else None
    h = b.compose(second.f, right)
    return cat.canonicalize(first.src, second.dst, subs, alphas, h)


def quasi_compose(cat: ChainCategory, second: ChainMorphism, first: ChainMorphism) -> ChainMorphism:
    """Product in the quasi-iterate: a single row of pullbacks."""
    _check_pair(cat, second, first)
    b = cat.base
    n = cat.n
    subs, alphas = [None] * n, [None] * n
    right = first.f
    for r in range(n - 1, -1, -1):
        subs[r], alphas[r], right = b.pullback_along_mono(right, second.alphas[r])
    alphas[n - 1] = b.compose_all(*reversed(first.alphas), alphas[n - 1])
    h = b.compose(second.f, right)
    return cat.canonicalize(first.src, second.dst, subs, alphas, h)


# -- stage selection and the natural transformations -----------------------


def select_stages(base: Category, x: ChainMorphism, picks) -> ChainMorphism:
    """New stage p is old stage ``picks[p-1]`` (``INF`` picks the source).

    ``picks`` must start at 1 and be weakly increasing; the legs of the new
    chain are composites of the old legs.
    """
    n = x.length
    vals = [n + 1 if p is INF else p for p in picks]
    if not vals or vals[0] != 1 or any(a > c for a, c in zip(vals, vals[1:])):
        raise ValueError(f"stage selection must start at 1 and increase weakly: {picks}")
    if any(not 1 <= v <= n + 1 for v in vals):
        raise ValueError(f"stage selection out of range for length {n}: {picks}")

    def stage(v):
        return x.src if v == n + 1 else x.subs[v - 1]

    def leg(lo, hi):
        out = base.identity(stage(lo))
        for t in range(lo, hi):
            out = base.compose(x.alphas[t - 1], out)
        return out

    tops = vals[1:] + [n + 1]
    return ChainMorphism(
        x.src,
        x.dst,
        tuple(stage(v) for v in vals),
        tuple(leg(lo, hi) for lo, hi in zip(vals, tops)),
        x.f,
    )


def nat_f(base: Category, s: int, x: ChainMorphism) -> ChainMorphism:
    """Insert a copy of stage ``s`` (stage ``n+1`` is the source)."""
    n = x.length
    if n < 1 or not 1 <= s <= n + 1:
        raise ValueError(f"insertion index {s} out of range for length {n}")
    picks = [p if p <= s else p - 1 for p in range(1, n + 2)]
    return select_stages(base, x, [INF if p == n + 1 else p for p in picks])


def nat_t(base: Category, s: int, x: ChainMorphism) -> ChainMorphism:
    """Drop stage ``s``, composing the two legs around it."""
    n = x.length
    if n < 2 or not 2 <= s <= n:
        raise ValueError(f"deletion index {s} out of range for length {n}")
    return select_stages(base, x, [p for p in range(1, n + 1) if p != s])


def retraction_a(base: Category, x: ChainMorphism) -> ChainMorphism:
    """Collapse every stage onto the bottom one, via deletions then insertions."""
    n = x.length
    for s in range(n, 1, -1):
        x = nat_t(base, s, x)
    for _ in range(1, n):
        x = nat_f(base, 1, x)
    return x


def is_idempotent_chain(base: Category, x: ChainMorphism) -> bool:
    if x.src != x.dst:
        raise CompositionError("idempotency needs an endomorphism")
    return x.f == base.compose_all(*reversed(x.alphas))


def inverse_pairs(base: Category, x: ChainMorphism, y: ChainMorphism) -> bool:
    """Decide whether ``x`` and ``y`` are mutually inverse via the iso criterion."""
    if x.src != y.dst or x.dst != y.src or x.length != y.length:
        raise CompositionError("chains are not shaped as a candidate inverse pair")
    ax = base.compose_all(*reversed(x.alphas))
    ay = base.compose_all(*reversed(y.alphas))
    for gamma in base.hom(x.subs[0], y.subs[0]):
        if not base.is_iso(gamma):
            continue
        if ax == base.compose(y.f, gamma) and x.f == base.compose(ay, gamma):
            return True
    return False


# -- bridge to the recursive nest -------------------------------------------


def flatten(cat: ChainCategory, x: ChainMorphism):
    """The nested ``P(...P(base))`` morphism corresponding to a chain."""
    levels = cat.levels

    def go(src, subs, alphas, f):
        t = len(subs)
        if t == 0:
            return f
        mono = alphas[-1]
        for u in range(1, t):
            mono = levels[u].include(mono)
        inner = go(subs[-1], subs[:-1], alphas[:-1], f)
        return PMorphism(src, x.dst, subs[-1], mono, inner)

    return go(x.src, x.subs, x.alphas, x.f)


def unflatten(cat: ChainCategory, y) -> ChainMorphism:
    levels = cat.levels

    def go(z, t):
        if t == 0:
            return (), (), z
        mono = z.alpha
        for u in range(t - 1, 0, -1):
            mono = levels[u].underlying_mono(mono)
        subs, alphas, f = go(z.f, t - 1)
        return subs + (z.sub,), alphas + (mono,), f

    subs, alphas, f = go(y, cat.n)
    return ChainMorphism(y.src, y.dst, subs, alphas, f)
