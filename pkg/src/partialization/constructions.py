"""Named constructions over the registered categories, with size formulas."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Callable, Optional

from .category import Category, CategoryError
from .chains import iterate_P, quasi_iterate_P
from .engine import lift_P
from .rsnk import rs_cardinality
from .semigroup import DEFAULT_CAP, FiniteSemigroup, SizeCapExceeded, end_monoid
from .sets import CATEGORIES

CONSTRUCTION_HELP = "P | Q | Piter:k | Pquasi:k"


@dataclass(frozen=True)
class RunConfig:
    category: str
    construction: str = "P"
    n: int = 2
    fmt: str = "json"
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.category not in CATEGORIES:
            raise CategoryError(
                f"unknown category {self.category!r}; choose from {', '.join(sorted(CATEGORIES))}"
            )
        if self.n < 1:
            raise ValueError("object size must be positive")
        if self.fmt not in ("json", "cayley-csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        parse_construction(self.construction)


def parse_construction(text: str) -> tuple[str, int]:
    """``P`` -> (P, 1), ``Piter:3`` -> (Piter, 3)."""
    if text in ("P", "Q"):
        return text, 1
    kind, sep, num = text.partition(":")
    if kind in ("Piter", "Pquasi") and sep and num.isdigit() and int(num) >= 1:
        return kind, int(num)
    raise ValueError(f"bad construction {text!r}; expected {CONSTRUCTION_HELP}")


def build(cfg: RunConfig) -> tuple[Category, frozenset, Optional[Callable]]:
    """The category, the object {1..n} and an element filter (for Q)."""
    base = CATEGORIES[cfg.category](cfg.n)
    obj = frozenset(range(1, cfg.n + 1))
    kind, k = parse_construction(cfg.construction)
    if kind == "P":
        return lift_P(base), obj, None
    if kind == "Q":
        cat = lift_P(base)
        return cat, obj, lambda x: cat.q_filter(x) is not None
    if kind == "Piter":
        return iterate_P(base, k), obj, None
    return quasi_iterate_P(base, k), obj, None


def build_monoid(cfg: RunConfig) -> FiniteSemigroup:
    pred = predicted_size(cfg)
    if pred is not None and pred > cfg.cap:
        raise SizeCapExceeded(f"closed form predicts {pred} elements, above the cap of {cfg.cap}")
    cat, obj, keep = build(cfg)
    try:
        return end_monoid(cat, obj, cfg.cap, keep)
    except SizeCapExceeded as exc:
        pred = predicted_size(cfg)
        hint = f"; closed form predicts {pred}" if pred is not None else ""
        raise SizeCapExceeded(f"{exc}{hint}") from None


# -- closed forms and independent counts -------------------------------------


def partial_bijection_count(n: int) -> int:
    return sum(comb(n, i) ** 2 * factorial(i) for i in range(n + 1))


def stirling2(n: int, s: int) -> int:
    table = [[0] * (n + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for a in range(1, n + 1):
        for b in range(1, a + 1):
            table[a][b] = b * table[a - 1][b] + table[a - 1][b - 1]
    return table[n][s] if s <= n else 0


def block_bijection_formula(n: int) -> int:
    return sum(stirling2(n, s) ** 2 * factorial(s) for s in range(n + 1))


def block_bijection_bruteforce(n: int) -> int:
    """Count relations on an n-set that are total, onto and difunctional.

    These are exactly the block bijections; the count scans all 2^(n*n)
    relations, so keep ``n`` small.
    """
    cells = [(a, b) for a in range(n) for b in range(n)]
    count = 0
    for bits in product((0, 1), repeat=len(cells)):
        rel = {c for c, on in zip(cells, bits) if on}
        if {a for a, _ in rel} != set(range(n)) or {b for _, b in rel} != set(range(n)):
            continue
        # difunctional: a~b, c~b, c~d imply a~d
        if all((a, d) in rel for a, b in rel for c, b2 in rel if b2 == b for c2, d in rel if c2 == c):
            count += 1
    return count


def partial_map_count(n: int) -> int:
    return (n + 1) ** n


def predicted_size(cfg: RunConfig) -> Optional[int]:
    kind, k = parse_construction(cfg.construction)
    n = cfg.n
    if cfg.category == "fininj":
        if kind in ("P", "Q"):
            return partial_bijection_count(n)
        return rs_cardinality(n, k)
    if cfg.category == "finsurj-op" and kind == "P":
        return block_bijection_formula(n)
    if cfg.category == "finset" and kind == "P":
        return partial_map_count(n)
    return None
