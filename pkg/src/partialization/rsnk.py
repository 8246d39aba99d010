"""Flat model of the orthodox monoids RS(n, k).

An element is a flag ``A_1 <= ... <= A_k <= {1..n}`` together with an
injection ``f: A_1 -> {1..n}``.  These are the endomorphisms of {1..n} in the
k-fold iterate of P over finite injections, written in normal form; the
generic engine in ``chains`` is the reference implementation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import comb, factorial

from .category import fmt_pairs, fmt_set
from .chains import ChainCategory, ChainMorphism
from .sets import FinMap, inclusion


@dataclass(frozen=True)
class RSElement:
    n: int
    k: int
    flags: tuple  # frozensets A_1 .. A_k
    f: tuple  # sorted (x, f(x)) pairs for x in A_1

    def __post_init__(self):
        if len(self.flags) != self.k:
            raise ValueError(f"expected {self.k} flag components, got {len(self.flags)}")
        full = frozenset(range(1, self.n + 1))
        chain = list(self.flags) + [full]
        if any(not lo <= hi for lo, hi in zip(chain, chain[1:])):
            raise ValueError(f"flags are not nested in {{1..{self.n}}}: {self.flags}")
        dom = frozenset(x for x, _ in self.f)
        vals = [y for _, y in self.f]
        if dom != self.flags[0] or len(set(vals)) != len(vals) or not set(vals) <= full:
            raise ValueError("f must be an injection from A_1 into {1..n}")

    @property
    def image(self) -> frozenset:
        return frozenset(y for _, y in self.f)

    @property
    def table(self) -> dict:
        return dict(self.f)

    def __str__(self) -> str:
        return "[" + "|".join(fmt_set(a) for a in self.flags) + "];" + fmt_pairs(self.f)


def rs_element(n: int, flags, f) -> RSElement:
    flags = tuple(frozenset(a) for a in flags)
    pairs = f.items() if isinstance(f, dict) else f
    return RSElement(n, len(flags), flags, tuple(sorted(pairs)))


def parse_rs(text: str, n: int) -> RSElement:
    """Inverse of ``str``: ``[{1}|{1,2}];1->2``."""
    flag_part, map_part = text.strip().split(";")
    blocks = flag_part.strip()[1:-1].split("|")
    flags = []
    for b in blocks:
        inner = b.strip()[1:-1]
        flags.append(frozenset(int(t) for t in inner.split(",") if t))
    pairs = []
    if map_part.strip() != "-":
        for item in map_part.split(","):
            x, y = item.split("->")
            pairs.append((int(x), int(y)))
    return rs_element(n, flags, pairs)


def flags_of_levels(n: int, k: int, levels) -> tuple:
    """Flag whose stage ``s`` holds every point with level <= s."""
    return tuple(frozenset(x for x in range(1, n + 1) if levels[x - 1] <= s) for s in range(1, k + 1))


def all_flags(n: int, k: int) -> list[tuple]:
    return [flags_of_levels(n, k, lv) for lv in product(range(1, k + 2), repeat=n)]


def enumerate_rs(n: int, k: int) -> list[RSElement]:
    out = []
    full = list(range(1, n + 1))
    for flags in all_flags(n, k):
        dom = sorted(flags[0])
        for vals in permutations(full, len(dom)):
            out.append(RSElement(n, k, flags, tuple(zip(dom, vals))))
    return sorted(out, key=str)


def rs_identity(n: int, k: int) -> RSElement:
    full = frozenset(range(1, n + 1))
    return RSElement(n, k, (full,) * k, tuple((x, x) for x in sorted(full)))


def rs_multiply(b: RSElement, a: RSElement) -> RSElement:
    """``b . a`` with ``a`` acting first.

    Stage r of the product is the preimage of ``B_r`` under ``f_a`` together
    with the part of ``A_r`` lying outside ``A_1``.
    """
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError("factors come from different RS(n, k)")
    fa, gb = a.table, b.table
    base = a.flags[0]
    flags = tuple(
        frozenset(x for x in base if fa[x] in b.flags[r]) | (a.flags[r] - base) for r in range(a.k)
    )
    h = tuple(sorted((x, gb[fa[x]]) for x in flags[0]))
    return RSElement(a.n, a.k, flags, h)


def rs_cardinality(n: int, k: int) -> int:
    return sum(comb(n, i) ** 2 * factorial(i) * k ** (n - i) for i in range(n + 1))


def rs_idempotent_count(n: int, k: int) -> int:
    return (k + 1) ** n


def is_rs_idempotent(x: RSElement) -> bool:
    return all(a == b for a, b in x.f)


def flag_element(n: int, flags) -> RSElement:
    """The idempotent carried by a flag (``f`` is the inclusion of ``A_1``)."""
    flags = tuple(frozenset(a) for a in flags)
    return RSElement(n, len(flags), flags, tuple((x, x) for x in sorted(flags[0])))


def flag_product(b, a) -> tuple:
    """Product ``b . a`` of two flags, componentwise."""
    if len(a) != len(b):
        raise ValueError("flags of different lengths")
    a1 = frozenset(a[0])
    return tuple((a1 & frozenset(bi)) | (frozenset(ai) - a1) for ai, bi in zip(a, b))


def rs_green(a: RSElement, b: RSElement, rel: str) -> bool:
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError("elements come from different RS(n, k)")
    same_image = a.image == b.image
    same_flags = a.flags == b.flags
    if rel == "R":
        return same_image
    if rel == "L":
        return same_flags
    if rel == "H":
        return same_image and same_flags
    if rel in ("D", "J"):
        return len(a.flags[0]) == len(b.flags[0])
    raise ValueError(f"unknown Green relation {rel!r}")


def boolean_projection(x: RSElement) -> frozenset:
    """The bottom flag component; a homomorphism on idempotents onto (2^n, ∩)."""
    return x.flags[0]


# -- bridge to the generic engine ---------------------------------------------


def to_chain(cat: ChainCategory, x: RSElement) -> ChainMorphism:
    full = frozenset(range(1, x.n + 1))
    tops = list(x.flags[1:]) + [full]
    alphas = tuple(inclusion(lo, hi) for lo, hi in zip(x.flags, tops))
    f = FinMap(x.flags[0], full, x.f)
    return ChainMorphism(full, full, x.flags, alphas, f)


def from_chain(x: ChainMorphism) -> RSElement:
    n = max(x.src) if x.src else 0
    if x.src != frozenset(range(1, n + 1)) or x.dst != x.src:
        raise ValueError("chain is not an endomorphism of {1..n}")
    return RSElement(n, x.length, tuple(x.subs), x.f.pairs)


# -- the monoid O'_m of order-preserving maps and its action -------------------


@dataclass(frozen=True)
class OPrimeMap:
    """Weakly increasing map on {1..m, inf} fixing 1 and inf.

    ``values[p-1]`` is the image of ``p``; ``m + 1`` stands for ``inf``.
    """

    m: int
    values: tuple

    def __post_init__(self):
        v = self.values
        if len(v) != self.m or not v or v[0] != 1:
            raise ValueError(f"map must send 1 to 1: {v}")
        if any(a > b for a, b in zip(v, v[1:])) or any(not 1 <= a <= self.m + 1 for a in v):
            raise ValueError(f"map is not weakly increasing into 1..m,inf: {v}")

    def __call__(self, p: int) -> int:
        return self.m + 1 if p == self.m + 1 else self.values[p - 1]

    def __str__(self) -> str:
        inf = self.m + 1
        return "(" + ",".join("inf" if a == inf else str(a) for a in self.values) + ")"


def oprime_multiply(phi: OPrimeMap, psi: OPrimeMap) -> OPrimeMap:
    """``phi * psi``: apply ``phi`` first, then ``psi``.

    With this order the stage-selection action is a left action.
    """
    if phi.m != psi.m:
        raise ValueError("maps on different chains")
    return OPrimeMap(phi.m, tuple(psi(phi(p)) for p in range(1, phi.m + 1)))


def oprime_elements(m: int) -> list[OPrimeMap]:
    out = []
    for rest in product(range(1, m + 2), repeat=m - 1):
        vals = (1,) + rest
        if all(a <= b for a, b in zip(vals, vals[1:])):
            out.append(OPrimeMap(m, vals))
    return out


def oprime_monoid(m: int):
    from .semigroup import FiniteSemigroup

    if m < 1:
        raise ValueError("chain size must be positive")
    els = oprime_elements(m)
    return FiniteSemigroup.from_elements(els, oprime_multiply, [str(e) for e in els])


def select_flags(x: RSElement, picks) -> RSElement:
    """New stage p is old stage ``picks[p-1]``; ``k+1`` picks the whole set."""
    full = frozenset(range(1, x.n + 1))
    chain = list(x.flags) + [full]
    flags = tuple(chain[p - 1] for p in picks)
    return RSElement(x.n, len(flags), flags, x.f)


def rs_nat_f(s: int, x: RSElement) -> RSElement:
    k = x.k
    if not 1 <= s <= k + 1:
        raise ValueError(f"insertion index {s} out of range for length {k}")
    return select_flags(x, generator_picks("f", s, k))


def rs_nat_t(s: int, x: RSElement) -> RSElement:
    k = x.k
    if k < 2 or not 2 <= s <= k:
        raise ValueError(f"deletion index {s} out of range for length {k}")
    return select_flags(x, generator_picks("t", s, k))


def generator_picks(kind: str, s: int, length: int) -> tuple:
    """Stage selection of one generator applied to chains of ``length``.

    ``("f", s)`` inserts a copy of stage ``s``; ``("t", s)`` deletes stage
    ``s``.  The value ``length + 1`` denotes the source object.
    """
    if kind == "f":
        if not 1 <= s <= length + 1:
            raise ValueError("insertion index out of range")
        return tuple(p if p <= s else p - 1 for p in range(1, length + 2))
    if kind == "t":
        if length < 2 or not 2 <= s <= length:
            raise ValueError("deletion index out of range")
        return tuple(p for p in range(1, length + 1) if p != s)
    raise ValueError(f"unknown generator kind {kind!r}")


def decompose(phi: OPrimeMap) -> list[tuple[str, int]]:
    """Generator word (applied left to right) realizing ``phi`` on length-m chains."""
    m = phi.m
    inf = m + 1
    kept = sorted({a for a in phi.values if a != inf})
    word = [("t", s) for s in range(m, 1, -1) if s not in kept]
    length = len(kept)
    rank = {a: i + 1 for i, a in enumerate(kept)}
    target = [rank.get(a, length + 1) for a in phi.values]
    for _ in range(target.count(length + 1)):
        word.append(("f", length + 1))
        length += 1
    for j in range(len(kept), 0, -1):
        for _ in range(target.count(j) - 1):
            word.append(("f", j))
    return word


def word_picks(word, m: int) -> tuple:
    """Compose the stage selections of a generator word starting at length ``m``."""
    picks = tuple(range(1, m + 1))  # selection relative to the original chain
    length = m
    for kind, s in word:
        step = generator_picks(kind, s, length)
        picks = tuple(m + 1 if p == length + 1 else picks[p - 1] for p in step)
        length = len(step)
    return picks


def oprime_act(phi: OPrimeMap, x: RSElement) -> RSElement:
    """Act by the generator word of ``phi`` using stage insertions and deletions."""
    if phi.m != x.k:
        raise ValueError(f"map on a chain of size {phi.m} cannot act on RS(n, {x.k})")
    for kind, s in decompose(phi):
        x = rs_nat_f(s, x) if kind == "f" else rs_nat_t(s, x)
    return x
