"""Brute-force checks of universal properties at desk scale.

These are the oracles for ``pullback_along_mono`` and ``complement``: they
enumerate test objects and morphisms instead of trusting any formula.
"""
from __future__ import annotations

from .category import Category, ComplementSquare, PullbackSquare


def _by_composite(cat: Category, outer, maps) -> dict:
    """Group ``maps`` by ``outer . m``."""
    out: dict = {}
    for m in maps:
        out.setdefault(cat.compose(outer, m), []).append(m)
    return out


def verify_pullback(cat: Category, f, alpha, square: PullbackSquare, test_objects=None) -> bool:
    """Check that ``square`` is a pullback of the cospan ``(f, alpha)``.

    Every cone from every test object must factor through the square in
    exactly one way.
    """
    apex, left, top = square
    if left.dom != apex or top.dom != apex:
        return False
    if left.cod != f.dom or top.cod != alpha.dom:
        return False
    if cat.compose(alpha, top) != cat.compose(f, left) or not cat.is_mono(left):
        return False
    for w in cat.objects() if test_objects is None else test_objects:
        through_alpha = _by_composite(cat, alpha, cat.hom(w, alpha.dom))
        through_left = _by_composite(cat, left, cat.hom(w, apex))
        for u in cat.hom(w, f.dom):
            for v in through_alpha.get(cat.compose(f, u), []):
                hits = [h for h in through_left.get(u, []) if cat.compose(top, h) == v]
                if len(hits) != 1:
                    return False
    return True


def is_pullback_square(cat: Category, f, alpha, left, top) -> bool:
    """Check a commuting square against the category's own pullback, up to iso."""
    if cat.compose(alpha, top) != cat.compose(f, left):
        return False
    apex, left0, top0 = cat.pullback_along_mono(f, alpha)
    for h in cat.hom(left.dom, apex):
        if cat.is_iso(h) and cat.compose(left0, h) == left and cat.compose(top0, h) == top:
            return True
    return False


def verify_complement(cat: Category, alpha, beta, square: ComplementSquare, test_objects=None) -> bool:
    """Check both clauses of the complement condition for ``i -> j -> k``.

    Clause (a): the square formed by ``alpha, beta, lower, upper`` is a
    pullback.  Clause (b): whenever a mono ``zeta: n -> k`` pulls back along
    ``beta`` to something factoring through ``alpha``, ``zeta`` factors
    through ``upper`` compatibly.
    """
    mid, lower, upper = square
    if not (cat.is_mono(lower) and cat.is_mono(upper)):
        return False
    if lower.dom != alpha.dom or lower.cod != mid or upper.dom != mid or upper.cod != beta.cod:
        return False
    if cat.compose(upper, lower) != cat.compose(beta, alpha):
        return False
    if not is_pullback_square(cat, upper, beta, lower, alpha):
        return False
    for n in cat.objects() if test_objects is None else test_objects:
        phis = _by_composite(cat, upper, cat.hom(n, mid))
        for zeta in cat.hom(n, beta.cod):
            if not cat.is_mono(zeta):
                continue
            m, eta, top = cat.pullback_along_mono(zeta, beta)
            xis = [xi for xi in cat.hom(m, alpha.dom) if cat.compose(alpha, xi) == top]
            if not xis:
                continue
            target = cat.compose(lower, xis[0])
            if not any(cat.compose(phi, eta) == target for phi in phis.get(zeta, [])):
                return False
    return True


def find_complements(cat: Category, alpha, beta, test_objects=None) -> list[ComplementSquare]:
    """Search every candidate square and keep the ones passing both clauses."""
    goal = cat.compose(beta, alpha)
    found = []
    for mid in cat.objects():
        for upper in cat.hom(mid, beta.cod):
            if not cat.is_mono(upper):
                continue
            for lower in cat.hom(alpha.dom, mid):
                if cat.compose(upper, lower) != goal:
                    continue
                sq = ComplementSquare(mid, lower, upper)
                if verify_complement(cat, alpha, beta, sq, test_objects):
                    found.append(sq)
    return found
