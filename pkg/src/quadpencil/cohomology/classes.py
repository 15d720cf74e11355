"""Total Stiefel-Whitney classes via the splitting principle, and spin verdicts.

Classes of bundles built from the tautological bundle V (rank k) are first
written as products over formal roots x_1..x_k, then converted to
elementary symmetric polynomials e_i = w_i by leading-term elimination.
Over GF(2), V and its dual have the same classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .poly import GradedMod2Poly, inverse_class, monomial_str
from .ring import GrassmannRing


def _toggle(acc: set, mono: tuple):
    if mono in acc:
        acc.remove(mono)
    else:
        acc.add(mono)


def _xmul(p: frozenset, q: frozenset, dmax: int) -> frozenset:
    """Product of GF(2) polynomials in the roots (each of degree 1)."""
    acc = set()
    qd = [(b, sum(b)) for b in q]
    for a in p:
        da = sum(a)
        for b, db in qd:
            if da + db <= dmax:
                _toggle(acc, tuple(x + y for x, y in zip(a, b)))
    return frozenset(acc)


def _root_factor(k: int, i: int, j: int) -> frozenset:
    """1 + x_i + x_j as a set of exponent vectors."""
    acc = {(0,) * k}
    for idx in (i, j):
        _toggle(acc, tuple(int(t == idx) for t in range(k)))
    return frozenset(acc)


def root_product(k: int, pairs, dmax: int) -> frozenset:
    result = frozenset({(0,) * k})
    for i, j in pairs:
        result = _xmul(result, _root_factor(k, i, j), dmax)
    return result


@lru_cache(maxsize=None)
def _elementary(k: int, i: int) -> frozenset:
    return frozenset(tuple(int(t in c) for t in range(k)) for c in combinations(range(k), i))


@lru_cache(maxsize=None)
def _e_monomial(k: int, exps: tuple, dmax: int) -> frozenset:
    """prod e_i^exps[i-1] expanded in the roots."""
    result = frozenset({(0,) * k})
    for i, e in enumerate(exps, 1):
        for _ in range(e):
            result = _xmul(result, _elementary(k, i), dmax)
    return result


def to_elementary(sym: frozenset, k: int, dmax: int) -> GradedMod2Poly:
    """Rewrite a symmetric GF(2) polynomial in the roots in terms of w_1..w_k.

    The lexicographically largest monomial x^a of a symmetric polynomial has
    a_1 >= ... >= a_k and is the leading term of prod e_i^(a_i - a_{i+1});
    subtracting that product strictly lowers the leading term.
    """
    remaining = set(sym)
    out = []
    while remaining:
        lead = max(remaining)
        if any(lead[i] < lead[i + 1] for i in range(k - 1)):
            raise ValueError("polynomial is not symmetric")
        exps = tuple(lead[i] - (lead[i + 1] if i + 1 < k else 0) for i in range(k))
        out.append(exps)
        remaining ^= _e_monomial(k, exps, dmax)
    return GradedMod2Poly(out, k, dmax)


def tensor_class(k: int, dmax: int) -> GradedMod2Poly:
    """w(V (x) V*) for rank-k V: product of (1 + x_i + x_j) over all ordered pairs."""
    pairs = [(i, j) for i in range(k) for j in range(k)]
    return to_elementary(root_product(k, pairs, dmax), k, dmax)


def sym2_class(k: int, dmax: int) -> GradedMod2Poly:
    """w(S^2 V*): product of (1 + x_i + x_j) over i <= j."""
    pairs = [(i, j) for i in range(k) for j in range(i, k)]
    return to_elementary(root_product(k, pairs, dmax), k, dmax)


def tangent_class(g: int, dmax=None, ring: GrassmannRing = None) -> GradedMod2Poly:
    """w(V*)^(2g+2) w(V (x) V*)^-1 w(S^2 V*)^-2 in H*(Gr_{g-1}(R^{2g+2}); Z/2)."""
    ring = ring or GrassmannRing.for_genus(g, dmax)
    k, d = ring.k, ring.dmax
    wv = GradedMod2Poly.total_class(k, d)
    tensor_inv = inverse_class(tensor_class(k, d))
    sym2_inv = inverse_class(sym2_class(k, d))
    return ring.reduce(wv ** (2 * g + 2) * tensor_inv * sym2_inv * sym2_inv)


@dataclass(frozen=True)
class SWReport:
    genus: int
    dmax: int
    total: GradedMod2Poly
    w1: GradedMod2Poly
    w2: GradedMod2Poly
    orientable: bool
    spin: bool
    relatively_spin: bool

    def to_record(self) -> dict:
        return {
            "genus": self.genus,
            "dmax": self.dmax,
            "w_TN": self.total.to_strings(),
            "w1": str(self.w1),
            "w2": str(self.w2),
            "orientable": self.orientable,
            "spin": self.spin,
            "relatively_spin": self.relatively_spin,
        }


def sw_report(g: int, dmax=None) -> SWReport:
    if g < 2:
        raise ValueError("genus must be at least 2")
    ring = GrassmannRing.for_genus(g, dmax)
    total = tangent_class(g, ring=ring)
    w1, w2 = total.part(1), total.part(2)
    w1_squared = ring.reduce(ring.gen(1) * ring.gen(1))
    orientable = not w1
    spin = orientable and not w2
    # w1^2 is pulled back from the complex Grassmannian, so any multiple of it
    # lies in the image of restriction
    relatively_spin = orientable and (not w2 or w2 == w1_squared.part(2))
    return SWReport(g, ring.dmax, total, w1, w2, orientable, spin, relatively_spin)


__all__ = ["tensor_class", "sym2_class", "tangent_class", "sw_report", "SWReport",
           "to_elementary", "root_product", "monomial_str"]
