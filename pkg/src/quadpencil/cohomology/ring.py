"""Mod-2 cohomology of the real Grassmannian Gr_k(R^n) as a quotient ring.

H*(Gr_k(R^n); Z/2) = Z/2[w_1..w_k] / (wbar_{n-k+1}, ..., wbar_n), where the
dual classes are defined by (1 + w_1 + ... + w_k)(1 + wbar_1 + ...) = 1.
Reduction works degree by degree: the degree-d part of the ideal is spanned
by monomial multiples of the relations, kept in reduced row echelon form as
integer bitsets over the degree-d monomials.
"""

from __future__ import annotations

from .poly import GradedMod2Poly, inverse_class, monomials_of_degree, weighted_degree


class GrassmannRing:
    def __init__(self, k: int, n: int, dmax: int):
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        dim = k * (n - k)
        if dmax < 1:
            raise ValueError("dmax must be positive")
        if dmax > dim:
            raise ValueError(f"dmax={dmax} exceeds the Grassmannian dimension {dim}")
        self.k, self.n, self.dmax = k, n, dmax
        self.dual = inverse_class(GradedMod2Poly.total_class(k, dmax))
        self.relations = [self.dual.part(j) for j in range(n - k + 1, min(n, dmax) + 1)]
        self._monos = {}
        self._index = {}
        self._rows = {}
        for d in range(dmax + 1):
            self._build_degree(d)

    @classmethod
    def for_genus(cls, g: int, dmax=None) -> "GrassmannRing":
        """Ring of Gr_{g-1}(R^{2g+2}); default dmax = min((g-1)(g+3), 12)."""
        if g < 2:
            raise ValueError("genus must be at least 2")
        full = (g - 1) * (g + 3)
        return cls(g - 1, 2 * g + 2, min(full, 12) if dmax is None else dmax)

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    def _build_degree(self, d):
        monos = monomials_of_degree(d, self.k)
        index = {m: i for i, m in enumerate(monos)}
        rows = []
        for j, rel in zip(range(self.n - self.k + 1, self.n + 1), self.relations):
            if j > d:
                break
            for mult in monomials_of_degree(d - j, self.k):
                vec = 0
                for t in rel.terms:
                    vec ^= 1 << index[tuple(a + b for a, b in zip(mult, t))]
                rows.append(vec)
        self._monos[d] = monos
        self._index[d] = index
        self._rows[d] = _rref(rows)

    def basis(self, d: int) -> list:
        """Standard monomials (non-pivots) spanning the quotient in degree d."""
        pivots = {row.bit_length() - 1 for row in self._rows[d]}
        return [m for i, m in enumerate(self._monos[d]) if i not in pivots]

    def rank(self, d: int) -> int:
        return len(self.basis(d))

    def element(self, terms) -> GradedMod2Poly:
        return GradedMod2Poly(terms, self.k, self.dmax)

    def one(self) -> GradedMod2Poly:
        return GradedMod2Poly.one(self.k, self.dmax)

    def gen(self, i: int) -> GradedMod2Poly:
        return GradedMod2Poly.gen(i, self.k, self.dmax)

    def reduce(self, p: GradedMod2Poly) -> GradedMod2Poly:
        if p.k != self.k:
            raise ValueError("generator count mismatch")
        by_degree = {}
        for m in p.terms:
            d = weighted_degree(m)
            if d <= self.dmax:
                by_degree[d] = by_degree.get(d, 0) ^ (1 << self._index[d][m])
        out = []
        for d, vec in by_degree.items():
            for row in self._rows[d]:
                if vec >> (row.bit_length() - 1) & 1:
                    vec ^= row
            monos = self._monos[d]
            out.extend(monos[i] for i in range(vec.bit_length()) if vec >> i & 1)
        return GradedMod2Poly(out, self.k, min(self.dmax, p.dmax))

    def mul(self, a: GradedMod2Poly, b: GradedMod2Poly) -> GradedMod2Poly:
        return self.reduce(a * b)


def _rref(rows: list) -> list:
    """Reduced row echelon form over GF(2); rows sorted by descending pivot."""
    pivots = {}
    for row in rows:
        for p in sorted(pivots, reverse=True):
            if row >> p & 1:
                row ^= pivots[p]
        if row:
            p = row.bit_length() - 1
            for q in pivots:
                if pivots[q] >> p & 1:
                    pivots[q] ^= row
            pivots[p] = row
    return [pivots[p] for p in sorted(pivots, reverse=True)]
