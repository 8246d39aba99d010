"""Braid-permutation groups and their inverse monoids, modelled on free groups.

A total element acts on the free group on x_1..x_n by sending each
generator to a conjugate of a generator.  Partial elements forget some
strands: their generators live only on a domain, and letters of strands that
disappear are erased from the conjugating words.

Words in generators are written with tokens ``s1`` (sigma_1), ``S1`` (its
inverse), ``t1`` (tau_1) and ``e1`` (the idempotent dropping strand 1).
A product ``u v`` of monoid elements applies ``v`` first, as with composition
of maps.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

# -- free words -------------------------------------------------------------


def reduce_word(word: Iterable[int]) -> tuple:
    out: list[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert_word(word) -> tuple:
    return tuple(-a for a in reversed(word))


def erase_letters(word, keep) -> tuple:
    return reduce_word(a for a in word if abs(a) in keep)


def substitute(word, images: dict) -> tuple:
    """Replace each letter by its image (inverted for inverse letters)."""
    out: list[int] = []
    for a in word:
        out.extend(images[a] if a > 0 else invert_word(images[-a]))
    return reduce_word(out)


def conjugate_parts(image) -> tuple[tuple, int]:
    """Split a reduced ``w x_j w^-1`` into ``(w, j)``."""
    if len(image) % 2 == 0:
        raise ValueError(f"not a conjugate of a generator: {image}")
    h = len(image) // 2
    w, mid = image[:h], image[h]
    if mid < 0 or image[h + 1:] != invert_word(w):
        raise ValueError(f"not a conjugate of a generator: {image}")
    return w, mid


def fmt_word(word) -> str:
    if not word:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in word)


# -- total elements -----------------------------------------------------------


@dataclass(frozen=True)
class PermConjAut:
    """``images[i-1]`` is the reduced image of ``x_i``."""

    n: int
    images: tuple

    @property
    def perm(self) -> tuple:
        return tuple(conjugate_parts(w)[1] for w in self.images)

    @property
    def conjugators(self) -> tuple:
        return tuple(conjugate_parts(w)[0] for w in self.images)

    def __call__(self, word) -> tuple:
        return substitute(word, {i + 1: w for i, w in enumerate(self.images)})


def aut_identity(n: int) -> PermConjAut:
    return PermConjAut(n, tuple((i,) for i in range(1, n + 1)))


def aut_compose(g: PermConjAut, f: PermConjAut) -> PermConjAut:
    """``g . f``: ``f`` acts first, so ``x_i`` goes to ``f``'s image rewritten by ``g``."""
    if g.n != f.n:
        raise ValueError("automorphisms of different rank")
    return PermConjAut(f.n, tuple(g(w) for w in f.images))


def aut_equal(g: PermConjAut, f: PermConjAut) -> bool:
    return g == f


def bp_generator(kind: str, i: int, n: int, flipped: bool = False) -> PermConjAut:
    """``sigma_i`` (``kind='s'``), its inverse (``'S'``) or ``tau_i`` (``'t'``).

    ``sigma_i`` sends ``x_i`` to ``x_i x_{i+1} x_i^-1`` and ``x_{i+1}`` to
    ``x_i``; ``tau_i`` swaps the two.  ``flipped=True`` swaps the roles of
    ``sigma_i`` and its inverse; it exists only as a negative control.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    imgs = [(j,) for j in range(1, n + 1)]
    a, b = i, i + 1
    forward = {a: (a, b, -a), b: (a,)}
    backward = {a: (b,), b: (-b, a, b)}
    if kind == "t":
        imgs[a - 1], imgs[b - 1] = (b,), (a,)
    elif kind in ("s", "S"):
        use = forward if (kind == "s") != flipped else backward
        imgs[a - 1], imgs[b - 1] = use[a], use[b]
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return PermConjAut(n, tuple(imgs))


# -- partial elements -----------------------------------------------------------


@dataclass(frozen=True)
class PartialWeldedBraid:
    """A partial element: ``images`` holds ``(i, image of x_i)`` for ``i`` in the domain."""

    n: int
    images: tuple

    @property
    def table(self) -> dict:
        return dict(self.images)

    @property
    def domain(self) -> frozenset:
        return frozenset(i for i, _ in self.images)

    @property
    def strands(self) -> dict:
        return {i: conjugate_parts(w)[1] for i, w in self.images}

    @property
    def codomain(self) -> frozenset:
        return frozenset(self.strands.values())

    @property
    def conjugators(self) -> dict:
        return {i: conjugate_parts(w)[0] for i, w in self.images}

    def __str__(self) -> str:
        parts = [f"x{i}->{fmt_word(w)}" for i, w in self.images]
        return "{" + "; ".join(parts) + "}"


def embed_total(g: PermConjAut) -> PartialWeldedBraid:
    return PartialWeldedBraid(g.n, tuple((i + 1, w) for i, w in enumerate(g.images)))


def epsilon(Y, n: int) -> PartialWeldedBraid:
    Y = sorted(set(Y))
    if any(not 1 <= y <= n for y in Y):
        raise ValueError(f"{Y} is not a subset of 1..{n}")
    return PartialWeldedBraid(n, tuple((y, (y,)) for y in Y))


def iwb_identity(n: int) -> PartialWeldedBraid:
    return epsilon(range(1, n + 1), n)


def iwb_compose(second: PartialWeldedBraid, first: PartialWeldedBraid) -> PartialWeldedBraid:
    """``second . first``; strands leaving the domain of ``second`` are erased."""
    if second.n != first.n:
        raise ValueError("elements of different rank")
    t1, t2 = first.table, second.table
    pi1 = first.strands
    pi2 = second.strands
    survivors = {j for j in first.codomain if j in t2}
    new_cod = {pi2[j] for j in survivors}
    out = []
    for i, w in first.images:
        if pi1[i] not in survivors:
            continue
        w = erase_letters(w, survivors)
        w = substitute(w, t2)
        out.append((i, erase_letters(w, new_cod)))
    return PartialWeldedBraid(first.n, tuple(out))


def restrict_total(g: PermConjAut, Y) -> PartialWeldedBraid:
    """``g . eps_Y``."""
    return iwb_compose(embed_total(g), epsilon(Y, g.n))


def extend_to_total(x: PartialWeldedBraid) -> tuple[PermConjAut, frozenset]:
    """Split ``x`` as ``g . eps_Y`` with ``Y`` its domain.

    The strand map is extended to a permutation by sending the missing
    strands to the missing targets in increasing order; conjugators are kept.
    """
    Y = x.domain
    missing_src = sorted(set(range(1, x.n + 1)) - Y)
    missing_dst = sorted(set(range(1, x.n + 1)) - x.codomain)
    imgs = dict(x.images)
    for i, j in zip(missing_src, missing_dst):
        imgs[i] = (j,)
    return PermConjAut(x.n, tuple(imgs[i] for i in range(1, x.n + 1))), Y


def is_idempotent(x: PartialWeldedBraid) -> bool:
    return iwb_compose(x, x) == x


# -- words ----------------------------------------------------------------------

Token = tuple  # (kind, index) with kind in "sSte"


def parse_word(text: str) -> tuple:
    out = []
    for tok in text.split():
        kind, idx = tok[0], tok[1:]
        if kind not in "sSte" or not idx.isdigit():
            raise ValueError(f"bad token {tok!r}")
        out.append((kind, int(idx)))
    return tuple(out)


def format_word(word) -> str:
    return " ".join(f"{k}{i}" for k, i in word) if word else "1"


def generator_element(tok, n: int, flipped: bool = False) -> PartialWeldedBraid:
    kind, i = tok
    if kind == "e":
        if not 1 <= i <= n:
            raise ValueError(f"idempotent index {i} out of range for n={n}")
        return epsilon([j for j in range(1, n + 1) if j != i], n)
    return embed_total(bp_generator(kind, i, n, flipped))


def evaluate(word, n: int, flipped: bool = False) -> PartialWeldedBraid:
    out = iwb_identity(n)
    for tok in word:
        out = iwb_compose(out, generator_element(tok, n, flipped))
    return out


def evaluate_bp(word, n: int, flipped: bool = False) -> PermConjAut:
    out = aut_identity(n)
    for kind, i in word:
        if kind == "e":
            raise ValueError("idempotents do not belong to the group")
        out = aut_compose(out, bp_generator(kind, i, n, flipped))
    return out


# -- relation families ------------------------------------------------------------


def s(i):
    return ("s", i)


def S(i):
    return ("S", i)


def t(i):
    return ("t", i)


def e(i):
    return ("e", i)


def _far(n):
    return [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) > 1]


def braid_relations(n: int) -> list:
    rels = [((s(i), s(j)), (s(j), s(i))) for i, j in _far(n)]
    rels += [((s(i), s(i + 1), s(i)), (s(i + 1), s(i), s(i + 1))) for i in range(1, n - 1)]
    return rels


def permutation_relations(n: int) -> list:
    rels = [((t(i), t(i)), ()) for i in range(1, n)]
    rels += [((t(i), t(j)), (t(j), t(i))) for i, j in _far(n)]
    rels += [((t(i), t(i + 1), t(i)), (t(i + 1), t(i), t(i + 1))) for i in range(1, n - 1)]
    return rels


def mixed_relations(n: int) -> list:
    rels = [((s(i), t(j)), (t(j), s(i))) for i, j in _far(n)]
    rels += [((t(i), t(i + 1), s(i)), (s(i + 1), t(i), t(i + 1))) for i in range(1, n - 1)]
    rels += [((s(i), s(i + 1), t(i)), (t(i + 1), s(i), s(i + 1))) for i in range(1, n - 1)]
    return rels


def inverse_relations(n: int) -> list:
    rels = [((s(i), S(i)), ()) for i in range(1, n)]
    rels += [((S(i), s(i)), ()) for i in range(1, n)]
    return rels


def semilattice_relations(n: int) -> list:
    rels = [((e(i), e(i)), (e(i),)) for i in range(1, n + 1)]
    rels += [((e(i), e(j)), (e(j), e(i))) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
    return rels


def action_relations(n: int) -> list:
    rels = []
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(((s(i), e(j)), (e(j), s(i))))
                rels.append(((t(i), e(j)), (e(j), t(i))))
        rels.append(((s(i), e(i)), (e(i + 1), s(i))))
        rels.append(((s(i), e(i + 1)), (e(i), s(i))))
        rels.append(((t(i), e(i)), (e(i + 1), t(i))))
    return rels


def kernel_relations(n: int) -> list:
    rels = []
    for i in range(1, n):
        rels.append(((e(i), e(i + 1), s(i)), (e(i), e(i + 1))))
        rels.append(((e(i), e(i + 1), t(i)), (e(i), e(i + 1))))
        rels.append(((e(i), s(i), s(i)), (e(i),)))
        rels.append(((e(i), s(i), t(i)), (e(i),)))
    return rels


def reduced_relations(n: int) -> list:
    """Extra relations when the only idempotent generator is ``e1``."""
    eps = e(1)
    rels = [
        ((eps, eps), (eps,)),
        ((eps, s(1), s(1)), (eps,)),
        ((s(1), s(1), eps), (eps,)),
        ((eps, s(1), t(1)), (eps,)),
    ]
    for i in range(2, n):
        rels.append(((eps, s(i)), (s(i), eps)))
        rels.append(((eps, t(i)), (t(i), eps)))
    rels.append(((eps, s(1), eps), (eps, s(1), eps, s(1))))
    rels.append(((eps, s(1), eps), (s(1), eps, s(1), eps)))
    return rels


BP_FAMILIES = {
    "braid": braid_relations,
    "permutation": permutation_relations,
    "mixed": mixed_relations,
}

IBP_FAMILIES = {
    **BP_FAMILIES,
    "inverse": inverse_relations,
    "semilattice": semilattice_relations,
    "action": action_relations,
    "kernel": kernel_relations,
    "reduced-generators": reduced_relations,
}


@dataclass
class RelationResult:
    family: str
    lhs: tuple
    rhs: tuple
    holds: bool

    def __str__(self) -> str:
        mark = "ok" if self.holds else "FAIL"
        return f"{mark} [{self.family}] {format_word(self.lhs)} = {format_word(self.rhs)}"


def verify_bp_relations(n: int, flipped: bool = False) -> list[RelationResult]:
    if n < 2:
        raise ValueError("need at least two strands")
    out = []
    for fam, rels in BP_FAMILIES.items():
        for lhs, rhs in rels(n):
            holds = evaluate_bp(lhs, n, flipped) == evaluate_bp(rhs, n, flipped)
            out.append(RelationResult(fam, lhs, rhs, holds))
    return out


def verify_ibp_relations(n: int, flipped: bool = False) -> list[RelationResult]:
    if not 2 <= n <= 4:
        raise ValueError("relation check is sized for 2 <= n <= 4")
    out = []
    for fam, rels in IBP_FAMILIES.items():
        for lhs, rhs in rels(n):
            holds = evaluate(lhs, n, flipped) == evaluate(rhs, n, flipped)
            out.append(RelationResult(fam, lhs, rhs, holds))
    return out


# -- bounded rewriting ------------------------------------------------------------


@dataclass
class RewriteVerdict:
    verdict: str  # "equal" or "unknown"
    steps: Optional[int] = None
    path: tuple = ()

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"


def _neighbours(word: tuple, rules, max_len: int):
    for lhs, rhs in rules:
        for a, b in ((lhs, rhs), (rhs, lhs)):
            la = len(a)
            if len(word) - la + len(b) > max_len:
                continue
            if la == 0:
                for p in range(len(word) + 1):
                    yield word[:p] + b + word[p:]
                continue
            for p in range(len(word) - la + 1):
                if word[p:p + la] == a:
                    yield word[:p] + b + word[p + la:]


def bounded_rewrite_equal(u, v, rules, depth: int, max_len: Optional[int] = None) -> RewriteVerdict:
    """Search for a chain of at most ``depth`` relation applications from ``u`` to ``v``.

    Both ends are expanded breadth first.  A failed search says nothing about
    inequality, so the only verdicts are ``equal`` and ``unknown``.
    """
    if depth <= 0:
        raise ValueError("search depth must be positive")
    u, v = tuple(u), tuple(v)
    if u == v:
        return RewriteVerdict("equal", 0, (u,))
    if max_len is None:
        max_len = max(len(u), len(v)) + 2 * max((len(a) + len(b) for a, b in rules), default=0)
    parents = [{u: None}, {v: None}]
    frontiers = [[u], [v]]
    dist = [0, 0]
    while dist[0] + dist[1] < depth:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        seen, other = parents[side], parents[1 - side]
        nxt = []
        for w in frontiers[side]:
            for x in _neighbours(w, rules, max_len):
                if x in seen:
                    continue
                seen[x] = w
                if x in other:
                    path = _join(parents, x, side)
                    return RewriteVerdict("equal", len(path) - 1, path)
                nxt.append(x)
        dist[side] += 1
        frontiers[side] = nxt
        if not nxt:
            break
    return RewriteVerdict("unknown")


def _join(parents, meet, side) -> tuple:
    def trail(table, w):
        out = []
        while w is not None:
            out.append(w)
            w = table[w]
        return out

    a = trail(parents[side], meet)
    b = trail(parents[1 - side], meet)
    path = list(reversed(a)) + b[1:]
    return tuple(path) if side == 0 else tuple(reversed(path))


# -- factorization search -----------------------------------------------------------


def bp_elements_by_length(n: int, max_len: int):
    """Yield ``(word, element)`` for distinct group elements in order of word length."""
    gens = [(k, i) for i in range(1, n) for k in "sSt"]
    seen = {aut_identity(n): ()}
    layer = deque([((), aut_identity(n))])
    yield (), aut_identity(n)
    for _ in range(max_len):
        nxt = deque()
        for word, g in layer:
            for tok in gens:
                h = aut_compose(g, bp_generator(tok[0], tok[1], n))
                if h not in seen:
                    seen[h] = word + (tok,)
                    nxt.append((word + (tok,), h))
                    yield word + (tok,), h
        layer = nxt


def find_factorization(x: PartialWeldedBraid, max_len: int) -> Optional[tuple]:
    """A group word ``g`` of length <= ``max_len`` with ``g . eps_Y == x``."""
    Y = x.domain
    for word, g in bp_elements_by_length(x.n, max_len):
        if restrict_total(g, Y) == x:
            return word, Y
    return None


def strip_idempotents(word) -> tuple:
    return tuple(tok for tok in word if tok[0] != "e")


def all_words(n: int, length: int, alphabet: Optional[list] = None):
    if alphabet is None:
        alphabet = [(k, i) for i in range(1, n) for k in "sSt"] + [("e", i) for i in range(1, n + 1)]
    for L in range(length + 1):
        yield from product(alphabet, repeat=L)
