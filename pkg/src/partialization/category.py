"""Finite concrete categories with pullbacks along monomorphisms.

A category here is a Python object exposing a small set of operations
(hom-set enumeration, composition, identities, mono tests, pullbacks along
monos, complement squares and a canonical choice of subobjects).  Everything
is finite: objects live inside a bounded universe, so all enumerations are
total.

Morphisms of the set-based categories are :class:`FinMap` values.  The
partialized categories built on top of these (see ``engine`` and ``chains``)
use their own morphism types but the same interface, which is what lets the
partialization be iterated.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, NamedTuple


class CategoryError(ValueError):
    pass


class CompositionError(CategoryError):
    pass


class NotMonoError(CategoryError):
    pass


class ComplementUnsupported(CategoryError):
    """The category has no complement squares, so iterating P is refused."""


def fmt_set(s: Iterable) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def fmt_pairs(pairs) -> str:
    if not pairs:
        return "-"
    return ",".join(f"{x}->{y}" for x, y in pairs)


@dataclass(frozen=True)
class FinMap:
    """A morphism ``dom -> cod`` of a finite set-based category.

    ``pairs`` is the graph of the underlying function, sorted.  For ordinary
    categories the function goes ``dom -> cod``.  With ``op=True`` the
    morphism lives in an opposite category and ``pairs`` is the graph of the
    underlying function ``cod -> dom``.
    """

    dom: frozenset
    cod: frozenset
    pairs: tuple
    op: bool = False

    @cached_property
    def table(self) -> dict:
        return dict(self.pairs)

    def __call__(self, x):
        return self.table[x]

    @cached_property
    def image(self) -> frozenset:
        return frozenset(y for _, y in self.pairs)

    def __str__(self) -> str:
        arrow = "<-" if self.op else "->"
        return f"{fmt_set(self.dom)}{arrow}{fmt_set(self.cod)}:{fmt_pairs(self.pairs)}"


def make_map(dom, cod, mapping, op: bool = False) -> FinMap:
    """Build a FinMap from a dict (or pair iterable) of the underlying function."""
    if isinstance(mapping, dict):
        mapping = mapping.items()
    return FinMap(frozenset(dom), frozenset(cod), tuple(sorted(mapping)), op)


class PullbackSquare(NamedTuple):
    """Completion ``apex --left--> dom(f)``, ``apex --top--> dom(alpha)`` of a cospan."""

    apex: Any
    left: Any
    top: Any


class ComplementSquare(NamedTuple):
    """Output ``(l, gamma: i -> l, delta: l -> k)`` for monos ``i -> j -> k``."""

    mid: Any
    lower: Any
    upper: Any


class Subobject(NamedTuple):
    obj: Any
    mono: Any
    iso: Any


class Category:
    """Interface shared by all categories the engine can partialize.

    Subclasses implement the methods below.  ``compose(g, f)`` is ``g`` after
    ``f``.  ``canonical_subobject(alpha)`` returns ``(k0, iota, theta)`` with
    ``iota`` the chosen representative of the subobject given by ``alpha``
    and ``theta`` the unique isomorphism with ``iota . theta == alpha``.
    """

    name = "category"
    supports_complement = False

    def objects(self) -> list:
        raise NotImplementedError

    def hom(self, a, b) -> list:
        raise NotImplementedError

    def identity(self, a):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def is_mono(self, f) -> bool:
        raise NotImplementedError

    def is_iso(self, f) -> bool:
        raise NotImplementedError

    def inverse(self, f):
        raise NotImplementedError

    def pullback_along_mono(self, f, alpha) -> PullbackSquare:
        raise NotImplementedError

    def complement(self, alpha, beta) -> ComplementSquare:
        raise ComplementUnsupported(f"{self.name} has no complement squares")

    def canonical_subobject(self, alpha) -> Subobject:
        raise NotImplementedError

    def subobjects(self, a) -> list:
        raise NotImplementedError

    def describe(self, f) -> str:
        return str(f)

    def describe_subobject(self, iota) -> str:
        return str(iota)

    def compose_all(self, *maps):
        """``compose_all(h, g, f) == h . g . f``."""
        out = maps[-1]
        for m in reversed(maps[:-1]):
            out = self.compose(m, out)
        return out

    def check_composable(self, g, f) -> None:
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose: cod {f.cod!r} != dom {g.dom!r}")

    def require_mono(self, alpha) -> None:
        if not self.is_mono(alpha):
            raise NotMonoError(f"not a monomorphism: {self.describe(alpha)}")
