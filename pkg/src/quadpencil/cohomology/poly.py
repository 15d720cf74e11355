"""Sparse graded polynomials over GF(2) in generators w_1..w_k, deg w_i = i."""

from __future__ import annotations

from typing import Iterable


def weighted_degree(mono: tuple) -> int:
    return sum((i + 1) * e for i, e in enumerate(mono))


def monomial_str(mono: tuple) -> str:
    if not any(mono):
        return "1"
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"w{i + 1}")
        elif e > 1:
            parts.append(f"w{i + 1}^{e}")
    return " ".join(parts)


def monomials_of_degree(d: int, k: int) -> list:
    """All exponent vectors of weighted degree d over k generators."""
    out = []

    def rec(i, remaining, acc):
        if i == 0:
            if remaining == 0:
                out.append(tuple(acc))
            return
        weight = i
        for e in range(remaining // weight, -1, -1):
            acc[i - 1] = e
            rec(i - 1, remaining - e * weight, acc)
        acc[i - 1] = 0

    rec(k, d, [0] * k)
    return out


class GradedMod2Poly:
    """Element of GF(2)[w_1..w_k] truncated above weighted degree dmax.

    Terms are stored as a frozenset of exponent tuples; every stored
    coefficient is 1.
    """

    __slots__ = ("terms", "k", "dmax")

    def __init__(self, terms: Iterable[tuple], k: int, dmax: int):
        self.k = k
        self.dmax = dmax
        acc = set()
        for mono in terms:
            mono = tuple(mono)
            if len(mono) != k:
                raise ValueError(f"monomial {mono} has wrong number of exponents for k={k}")
            if weighted_degree(mono) <= dmax:
                if mono in acc:
                    acc.remove(mono)
                else:
                    acc.add(mono)
        self.terms = frozenset(acc)

    @classmethod
    def one(cls, k, dmax):
        return cls([(0,) * k], k, dmax)

    @classmethod
    def zero(cls, k, dmax):
        return cls([], k, dmax)

    @classmethod
    def gen(cls, i, k, dmax):
        """w_i (1-based)."""
        mono = [0] * k
        mono[i - 1] = 1
        return cls([tuple(mono)], k, dmax)

    @classmethod
    def total_class(cls, k, dmax):
        """1 + w_1 + ... + w_k."""
        return cls([(0,) * k] + [tuple(int(j == i) for j in range(k)) for i in range(k)], k, dmax)

    def _check(self, other):
        if not isinstance(other, GradedMod2Poly):
            return NotImplemented
        if other.k != self.k:
            raise ValueError("generator count mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return GradedMod2Poly(self.terms ^ other.terms, self.k, min(self.dmax, other.dmax))

    __sub__ = __add__

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        dmax = min(self.dmax, other.dmax)
        acc = set()
        right = [(b, weighted_degree(b)) for b in other.terms]
        for a in self.terms:
            da = weighted_degree(a)
            for b, db in right:
                if da + db <= dmax:
                    m = tuple(x + y for x, y in zip(a, b))
                    if m in acc:
                        acc.remove(m)
                    else:
                        acc.add(m)
        return GradedMod2Poly(acc, self.k, dmax)

    def __pow__(self, e: int):
        if e < 0:
            return inverse_class(self) ** (-e)
        result, base = GradedMod2Poly.one(self.k, self.dmax), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, GradedMod2Poly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def constant_term(self) -> int:
        return int((0,) * self.k in self.terms)

    def part(self, d: int) -> "GradedMod2Poly":
        return GradedMod2Poly([m for m in self.terms if weighted_degree(m) == d], self.k, self.dmax)

    def truncate(self, dmax: int) -> "GradedMod2Poly":
        return GradedMod2Poly(self.terms, self.k, min(dmax, self.dmax))

    def sorted_terms(self) -> list:
        return sorted(self.terms, key=lambda m: (weighted_degree(m), tuple(-e for e in m)))

    def to_strings(self) -> list:
        return [monomial_str(m) for m in self.sorted_terms()]

    def __str__(self):
        return " + ".join(self.to_strings()) if self.terms else "0"

    def __repr__(self):
        return f"GradedMod2Poly({self}; k={self.k}, dmax={self.dmax})"


def inverse_class(c: GradedMod2Poly) -> GradedMod2Poly:
    """Inverse of a class with constant term 1, truncated at c.dmax."""
    if not c.constant_term():
        raise ZeroDivisionError("class with zero constant term has no inverse")
    one = GradedMod2Poly.one(c.k, c.dmax)
    x = c + one  # positive-degree part; over GF(2), c^-1 = sum x^j
    result, power = one, one
    # x^j vanishes once j exceeds dmax because x has no degree-0 part
    for _ in range(c.dmax):
        power = power * x
        if not power:
            break
        result = result + power
    return result
