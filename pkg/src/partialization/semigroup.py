"""Finite semigroups from Cayley tables, and their structure.

Tables follow composition order: ``table[a, b]`` is the index of ``a . b``,
the product in which ``b`` acts first.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .category import Category, CategoryError

ASSOC_LIMIT = 700
DEFAULT_CAP = 20000


class SizeCapExceeded(CategoryError):
    pass


class AssociativityError(CategoryError):
    pass


@dataclass
class GreenClasses:
    L: list
    R: list
    H: list
    D: list
    J: list

    def as_dict(self) -> dict:
        return {"L": self.L, "R": self.R, "H": self.H, "D": self.D, "J": self.J}


@dataclass
class SubgroupInfo:
    idempotent: int
    order: int
    abelian: bool
    element_orders: tuple


@dataclass
class AnalysisReport:
    size: int
    idempotents: list
    units: list
    regular: bool
    inverse: bool
    orthodox: bool
    factorizable: bool
    subgroups: list = field(default_factory=list)

    def verdicts(self) -> dict:
        return {
            "regular": self.regular,
            "inverse": self.inverse,
            "orthodox": self.orthodox,
            "factorizable": self.factorizable,
        }


class FiniteSemigroup:
    def __init__(self, elements: Sequence, table, names: Optional[Sequence[str]] = None,
                 check: bool = True):
        self.elements = list(elements)
        self.table = np.asarray(table, dtype=np.int64)
        n = len(self.elements)
        if self.table.shape != (n, n):
            raise ValueError(f"table shape {self.table.shape} does not match {n} elements")
        if n and (self.table.min() < 0 or self.table.max() >= n):
            raise ValueError("table is not closed")
        self.names = list(names) if names is not None else [str(e) for e in self.elements]
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._green: Optional[GreenClasses] = None
        if check and n <= ASSOC_LIMIT:
            self.check_associative()
        self.identity = self._find_identity()

    @classmethod
    def from_elements(cls, elements: Sequence, mul: Callable, names=None, check=True):
        """Tabulate ``mul(a, b)`` over ``elements``; the set must be closed."""
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        table = np.empty((n, n), dtype=np.int64)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                p = mul(a, b)
                if p not in index:
                    raise CategoryError(f"product leaves the element set: {p}")
                table[i, j] = index[p]
        return cls(elements, table, names, check)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def check_associative(self) -> None:
        T = self.table
        for a in range(len(self)):
            # (a.b).c against a.(b.c) for all b, c at once
            if not np.array_equal(T[T[a]], T[a][T]):
                raise AssociativityError(f"associativity fails at element {self.names[a]}")

    def _find_identity(self) -> Optional[int]:
        ar = np.arange(len(self))
        for e in range(len(self)):
            if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar):
                return e
        return None

    # -- elementary sets ---------------------------------------------------

    def idempotents(self) -> list[int]:
        return [a for a in range(len(self)) if self.table[a, a] == a]

    def units(self) -> list[int]:
        e = self.identity
        if e is None:
            return []
        T = self.table
        return [a for a in range(len(self)) if np.any((T[a] == e) & (T[:, a] == e))]

    def weak_inverse(self, a: int) -> Optional[int]:
        hits = np.nonzero(self.table[self.table[a], a] == a)[0]
        return int(hits[0]) if len(hits) else None

    def products(self, left: Sequence[int], right: Sequence[int]) -> set:
        if not len(left) or not len(right):
            return set()
        return set(np.unique(self.table[np.ix_(list(left), list(right))]).tolist())

    # -- Green's relations ---------------------------------------------------

    def green(self) -> GreenClasses:
        if self._green is None:
            self._green = green(self)
        return self._green


def _classes(keys) -> list[list[int]]:
    groups: dict = {}
    for i, k in enumerate(keys):
        groups.setdefault(k, []).append(i)
    return sorted(groups.values())


def green(S: FiniteSemigroup) -> GreenClasses:
    """Green's classes from principal one-sided and two-sided ideals.

    Ideals are taken with an identity adjoined, so ``aS^1`` is the row of
    ``a`` plus ``a`` itself.  D is the join of L and R.
    """
    T = S.table
    n = len(S)
    right = [frozenset(np.unique(T[a]).tolist()) | {a} for a in range(n)]
    left = [frozenset(np.unique(T[:, a]).tolist()) | {a} for a in range(n)]
    two = [frozenset(np.unique(T[sorted(left[a])]).tolist()) | left[a] for a in range(n)]
    L = _classes(left)
    R = _classes(right)
    H = _classes(list(zip(left, right)))
    J = _classes(two)

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cls in L + R:
        for x in cls[1:]:
            ra, rb = find(cls[0]), find(x)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    D = _classes([find(x) for x in range(n)])
    return GreenClasses(L, R, H, D, J)


def class_of(partition: list[list[int]]) -> dict:
    return {x: i for i, cls in enumerate(partition) for x in cls}


def is_regular(S: FiniteSemigroup) -> bool:
    return all(S.weak_inverse(a) is not None for a in range(len(S)))


def idempotents_commute(S: FiniteSemigroup) -> bool:
    E = S.idempotents()
    sub = S.table[np.ix_(E, E)]
    return bool(np.array_equal(sub, sub.T))


def idempotents_closed(S: FiniteSemigroup) -> bool:
    E = S.idempotents()
    return S.products(E, E) <= set(E)


def is_inverse(S: FiniteSemigroup) -> bool:
    return is_regular(S) and idempotents_commute(S)


def is_orthodox(S: FiniteSemigroup) -> bool:
    return is_regular(S) and idempotents_closed(S)


def factorization(S: FiniteSemigroup, a: int) -> Optional[tuple[int, int]]:
    """A pair ``(e, g)`` of an idempotent and a unit with ``e . g == a``."""
    for g in S.units():
        for e in S.idempotents():
            if S.table[e, g] == a:
                return e, g
    return None


def is_factorizable(S: FiniteSemigroup) -> bool:
    if S.identity is None:
        return False
    return S.products(S.idempotents(), S.units()) == set(range(len(S)))


def element_order(S: FiniteSemigroup, a: int, e: int) -> int:
    k, p = 1, a
    while p != e:
        p = S.mul(p, a)
        k += 1
        if k > len(S):
            raise CategoryError("element has no finite order at this idempotent")
    return k


def max_subgroups(S: FiniteSemigroup) -> list[SubgroupInfo]:
    """The group H-class of each idempotent, described by order and element orders."""
    cls = class_of(S.green().H)
    H = S.green().H
    out = []
    for e in S.idempotents():
        members = H[cls[e]]
        sub = S.table[np.ix_(members, members)]
        out.append(
            SubgroupInfo(
                idempotent=e,
                order=len(members),
                abelian=bool(np.array_equal(sub, sub.T)),
                element_orders=tuple(sorted(element_order(S, a, e) for a in members)),
            )
        )
    return out


def analyze(S: FiniteSemigroup) -> AnalysisReport:
    reg = is_regular(S)
    return AnalysisReport(
        size=len(S),
        idempotents=S.idempotents(),
        units=S.units(),
        regular=reg,
        inverse=reg and idempotents_commute(S),
        orthodox=reg and idempotents_closed(S),
        factorizable=is_factorizable(S),
        subgroups=max_subgroups(S),
    )


def closure(S: FiniteSemigroup, generators) -> list[int]:
    """Indices of the submonoid generated by ``generators``."""
    gens = sorted(set(generators))
    seen = set(gens)
    if S.identity is not None:
        seen.add(S.identity)
    todo = deque(seen)
    while todo:
        a = todo.popleft()
        for g in gens:
            p = S.mul(a, g)
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return sorted(seen)


def restrict(S: FiniteSemigroup, members: Sequence[int]) -> FiniteSemigroup:
    """The subsemigroup on ``members`` (which must be closed)."""
    members = sorted(members)
    pos = {m: i for i, m in enumerate(members)}
    sub = S.table[np.ix_(members, members)]
    try:
        table = np.vectorize(pos.__getitem__)(sub) if len(members) else sub
    except KeyError as exc:
        raise CategoryError("subset is not closed under the product") from exc
    return FiniteSemigroup(
        [S.elements[m] for m in members], table, [S.names[m] for m in members], check=False
    )


# -- enumeration of endomorphism monoids ------------------------------------


def enumerate_end(cat: Category, obj, cap: int = DEFAULT_CAP, keep=None) -> list:
    """All endomorphisms of ``obj`` (optionally filtered), sorted by description."""
    els = cat.hom(obj, obj)
    if keep is not None:
        els = [x for x in els if keep(x)]
    if len(els) > cap:
        raise SizeCapExceeded(f"{len(els)} elements exceed the cap of {cap}")
    return sorted(els, key=cat.describe)


def end_monoid(cat: Category, obj, cap: int = DEFAULT_CAP, keep=None) -> FiniteSemigroup:
    """Endomorphism monoid of ``obj`` with a full Cayley table."""
    els = enumerate_end(cat, obj, cap, keep)
    names = [cat.describe(x) for x in els]
    return FiniteSemigroup.from_elements(els, cat.compose, names)


def idempotent_count(cat: Category, obj, cap: int = DEFAULT_CAP) -> int:
    return sum(1 for x in enumerate_end(cat, obj, cap) if cat.compose(x, x) == x)
