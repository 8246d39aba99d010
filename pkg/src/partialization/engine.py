"""The partialization P of a category and its subcategory Q.

A morphism of P(C) from ``i`` to ``j`` is a span ``i <-alpha- k -f-> j``
with ``alpha`` a mono, taken up to isomorphism of ``k``.  Spans are kept in
canonical form (``alpha`` is the category's chosen representative of its
subobject), so equality of classes is plain equality of values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .category import (
    Category,
    ComplementSquare,
    CompositionError,
    NotMonoError,
    PullbackSquare,
    Subobject,
)


@dataclass(frozen=True)
class PMorphism:
    src: Any
    dst: Any
    sub: Any
    alpha: Any
    f: Any

    @property
    def dom(self):
        return self.src

    @property
    def cod(self):
        return self.dst


@dataclass(frozen=True)
class QMorphism:
    """A span together with a total map ``extension`` with ``f == extension . alpha``."""

    base: PMorphism
    extension: Any


class PCategory(Category):
    """P(base): same objects, morphisms are canonical spans."""

    def __init__(self, base: Category):
        self.base = base
        self.name = f"P({base.name})"
        self.supports_complement = base.supports_complement

    def objects(self) -> list:
        return self.base.objects()

    def canonicalize(self, i, j, k, alpha, f) -> PMorphism:
        b = self.base
        if not b.is_mono(alpha):
            raise NotMonoError(f"span leg is not a mono: {b.describe(alpha)}")
        if alpha.dom != k or f.dom != k or alpha.cod != i or f.cod != j:
            raise CompositionError("span legs do not match the given objects")
        k0, iota, theta = b.canonical_subobject(alpha)
        if theta != b.identity(k):
            f = b.compose(f, b.inverse(theta))
        return PMorphism(i, j, k0, iota, f)

    def identity(self, a):
        ida = self.base.identity(a)
        return PMorphism(a, a, a, ida, ida)

    def include(self, f) -> PMorphism:
        """The total morphism ``f`` viewed as a span with trivial left leg."""
        return self.canonicalize(f.dom, f.cod, f.dom, self.base.identity(f.dom), f)

    def compose(self, g, f):
        """``g . f``: pull ``f``'s right leg back along ``g``'s left leg."""
        if f.dst != g.src:
            raise CompositionError(f"cannot compose: {f.dst!r} != {g.src!r}")
        b = self.base
        _, gamma, h = b.pullback_along_mono(f.f, g.alpha)
        return self.canonicalize(
            f.src, g.dst, gamma.dom, b.compose(f.alpha, gamma), b.compose(g.f, h)
        )

    def hom(self, a, b) -> list:
        base = self.base
        return [
            PMorphism(a, b, iota.dom, iota, f)
            for iota in base.subobjects(a)
            for f in base.hom(iota.dom, b)
        ]

    def is_mono(self, x) -> bool:
        return self.base.is_iso(x.alpha) and self.base.is_mono(x.f)

    def is_iso(self, x) -> bool:
        return self.base.is_iso(x.alpha) and self.base.is_iso(x.f)

    def underlying_mono(self, x):
        """The base morphism ``f . alpha^-1`` of a mono span."""
        if not self.is_mono(x):
            raise NotMonoError(f"not a monomorphism: {self.describe(x)}")
        b = self.base
        return b.compose(x.f, b.inverse(x.alpha))

    def inverse(self, x):
        if not self.is_iso(x):
            raise CompositionError(f"not invertible: {self.describe(x)}")
        return self.include(self.base.inverse(self.underlying_mono(x)))

    def pullback_along_mono(self, x, beta) -> PullbackSquare:
        """Pull back the span ``x`` along a mono of P.

        First the right leg of ``x`` is pulled back in the base, then the
        complement of the resulting mono against ``x.alpha`` supplies the
        new left object.
        """
        b = self.base
        if x.dst != beta.dst:
            raise CompositionError("pullback needs a cospan with a common codomain")
        beta0 = self.underlying_mono(beta)
        _, beta1, f1 = b.pullback_along_mono(x.f, beta0)
        _, alpha1, beta2 = b.complement(beta1, x.alpha)
        n0, iota, theta = b.canonical_subobject(beta2)
        top = self.canonicalize(n0, beta0.dom, f1.dom, b.compose(theta, alpha1), f1)
        return PullbackSquare(n0, self.include(iota), top)

    def complement(self, alpha, beta) -> ComplementSquare:
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
        return f"{self.base.describe_subobject(x.alpha)};{self.base.describe(x.f)}"

    def describe_subobject(self, iota) -> str:
        return self.base.describe_subobject(self.underlying_mono(iota))

    def q_filter(self, x) -> Optional[QMorphism]:
        """Return ``x`` with a total extension of its right leg, if one exists."""
        b = self.base
        for fbar in b.hom(x.src, x.dst):
            if b.compose(fbar, x.alpha) == x.f:
                return QMorphism(x, fbar)
        return None


def lift_P(cat: Category) -> PCategory:
    return PCategory(cat)


def canonicalize_p(cat: PCategory, i, j, k, alpha, f) -> PMorphism:
    return cat.canonicalize(i, j, k, alpha, f)


def p_compose(cat: PCategory, second: PMorphism, first: PMorphism) -> PMorphism:
    return cat.compose(second, first)


def q_filter(cat: PCategory, x: PMorphism) -> Optional[QMorphism]:
    return cat.q_filter(x)
