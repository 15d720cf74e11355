"""The diagonal pencil attached to (W, D) and its real normal form.

In the basis ``u_w`` of sections evaluated at the Weierstrass points both
quadratic forms are diagonal, with

    Q0(u_w^2) = prod_i (t_w - alpha_i)^m_i * prod_{w' != w} (t_w - t_w')
    Q1(u_w^2) = t_w * Q0(u_w^2).

A conjugation-fixed rescaling of this basis turns the pair into the real
normal form returned by :func:`real_normal_form`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .curve import (RealDivisor, WeierstrassSet, check_divisor, interval_parities,
                    partition_weierstrass)
from .errors import InternalError, VerificationError
from .qqi import QQi, fraction_str

NF_TOLERANCE = 1e-9


@dataclass(frozen=True)
class DiagonalPencil:
    """Diagonal values of Q0 on the ordered basis (W0 ascending, W+, conj(W+))."""

    points: tuple
    q0: tuple
    nu: tuple  # index of the conjugate basis vector

    @property
    def dim(self) -> int:
        return len(self.points)

    @property
    def n_real(self) -> int:
        return sum(1 for p in self.points if p.is_real)

    @property
    def q1(self) -> tuple:
        return tuple(t * c for t, c in zip(self.points, self.q0))

    def polar(self, index: int):
        """(R_w, theta_w) with R_w > 0 and theta_w in [0, 2 pi)."""
        z = complex(self.q0[index])
        r, theta = abs(z), cmath.phase(z)
        if theta < 0:
            theta += 2 * math.pi
        if self.q0[index].im == 0:
            theta = 0.0 if self.q0[index].re > 0 else math.pi
        return r, theta

    def scaled(self, factor: Fraction) -> "DiagonalPencil":
        """Pencil of the section ``factor * u`` (each Q0 value picks up factor**2)."""
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        return DiagonalPencil(self.points, tuple(c * factor * factor for c in self.q0), self.nu)

    def gram_matrices(self):
        q0 = np.diag([complex(c) for c in self.q0])
        q1 = np.diag([complex(c) for c in self.q1])
        return q0, q1


def _ordered_points(W: WeierstrassSet) -> list:
    w0, wplus, wminus = partition_weierstrass(W)
    return [QQi(r) for r in w0] + list(wplus) + list(wminus)


def q0_value(t_w: QQi, W_points: Sequence[QQi], D: RealDivisor) -> QQi:
    value = QQi(1)
    for alpha, m in D.entries:
        value = value * (t_w - alpha) ** m
    for t in W_points:
        if t != t_w:
            value = value * (t_w - t)
    return value


def build_pencil(W: WeierstrassSet, D: RealDivisor) -> DiagonalPencil:
    check_divisor(W, D)
    pts = _ordered_points(W)
    q0 = tuple(q0_value(t, pts, D) for t in pts)
    index = {p: i for i, p in enumerate(pts)}
    nu = tuple(index[p.conjugate()] for p in pts)
    for i, j in enumerate(nu):
        if q0[j] != q0[i].conjugate():
            raise InternalError(f"Q0 not conjugation equivariant at {pts[i]}")
    return DiagonalPencil(tuple(pts), q0, nu)


def sign_exponent(t_w: Fraction, W: WeierstrassSet, D: RealDivisor) -> int:
    """N = #{real w' > t_w} + sum of m_i over real alpha_i > t_w."""
    return (sum(1 for r in W.real_points if r > t_w)
            + sum(m for a, m in D.real_entries() if a > t_w))


def epsilon_from_counts(W: WeierstrassSet, D: RealDivisor) -> list:
    """Signs read off at r_1, r_3, ... from the sign of Q0 there, (-1)**N."""
    w0 = W.real_points
    return [(-1) ** (sign_exponent(w0[2 * i], W, D) % 2) for i in range(len(w0) // 2)]


def epsilon_from_intervals(profile, w0: Sequence[Fraction]) -> list:
    """eps_i = (-1)**(N_i + 1), N_i = number of odd tau-intervals right of r_{2i-1}."""
    eps = []
    for i in range(len(w0) // 2):
        r = w0[2 * i]
        count = sum(1 for iv in profile.odd_intervals if iv.lo is not None and iv.lo >= r)
        eps.append((-1) ** ((count + 1) % 2))
    return eps


def epsilon_signs(W: WeierstrassSet, D: RealDivisor) -> list:
    profile = interval_parities(W, D)
    if W.n and profile.negative_half_parity:
        raise ValueError("chart is not normalized: negative half-infinite interval is odd")
    eps = epsilon_from_counts(W, D)
    cross = epsilon_from_intervals(profile, W.real_points)
    if eps != cross:
        raise InternalError(f"sign rules disagree: (-1)^N gives {eps}, interval count gives {cross}")
    if eps and eps[0] != 1:
        raise InternalError("first sign is not +1 on a normalized chart")
    return eps


@dataclass(frozen=True)
class RealNormalForm:
    genus: int
    eps: tuple
    real_eigs: tuple
    complex_pairs: tuple  # ((a_j, b_j), ...) with b_j > 0

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def s(self) -> int:
        return len(self.complex_pairs)

    @property
    def dim(self) -> int:
        return 2 * self.n + 2 * self.s

    def exact_matrices(self):
        """Symmetric matrices (lists of Fractions) of q0 and q1 in (x, z_1, w_1, ...) order."""
        size = self.dim
        A = [[Fraction(0)] * size for _ in range(size)]
        B = [[Fraction(0)] * size for _ in range(size)]
        for i, e in enumerate(self.eps):
            r_odd, r_even = self.real_eigs[2 * i], self.real_eigs[2 * i + 1]
            A[2 * i][2 * i], A[2 * i + 1][2 * i + 1] = Fraction(e), Fraction(-e)
            B[2 * i][2 * i], B[2 * i + 1][2 * i + 1] = e * r_odd, -e * r_even
        base = 2 * self.n
        for j, (a, b) in enumerate(self.complex_pairs):
            z, w = base + 2 * j, base + 2 * j + 1
            A[z][z], A[w][w] = Fraction(1), Fraction(-1)
            B[z][z], B[w][w] = a, -a
            B[z][w] = B[w][z] = b
        return A, B

    def to_record(self) -> dict:
        return {
            "genus": self.genus,
            "n": self.n,
            "s": self.s,
            "eps": list(self.eps),
            "real_eigs": [fraction_str(r) for r in self.real_eigs],
            "complex_pairs": [{"a": float(a), "b": float(b)} for a, b in self.complex_pairs],
        }

    def polynomials(self) -> tuple:
        """Human-readable q0 and q1."""
        A, B = self.exact_matrices()
        names = [f"x{i + 1}" for i in range(2 * self.n)]
        for j in range(1, self.s + 1):
            names += [f"z{j}", f"w{j}"]
        return _format_form(A, names), _format_form(B, names)


def _format_form(M, names) -> str:
    terms = []
    for i, name in enumerate(names):
        if M[i][i]:
            terms.append((M[i][i], f"{name}^2"))
        for j in range(i + 1, len(names)):
            if M[i][j]:
                terms.append((2 * M[i][j], f"{name} {names[j]}"))
    if not terms:
        return "0"
    out = []
    for coef, mono in terms:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        body = mono if mag == 1 else f"{fraction_str(mag)} {mono}"
        out.append(f"{sign} {body}")
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def real_normal_form(W: WeierstrassSet, D: RealDivisor) -> RealNormalForm:
    eps = epsilon_signs(W, D)
    _, wplus, _ = partition_weierstrass(W)
    return RealNormalForm(W.genus, tuple(eps), W.real_points,
                          tuple((p.re, p.im) for p in wplus))


def normal_form_from_pencil(pencil: DiagonalPencil, genus: int) -> RealNormalForm:
    """Read the normal form off the signs of Q0 at the real points of a pencil."""
    n_real = pencil.n_real
    eps = []
    for i in range(0, n_real, 2):
        sign = 1 if pencil.q0[i].re > 0 else -1
        if (1 if pencil.q0[i + 1].re > 0 else -1) != -sign:
            raise InternalError("signs at r_{2i-1} and r_{2i} are not opposite")
        eps.append(sign)
    half = (pencil.dim - n_real) // 2
    pairs = tuple((p.re, p.im) for p in pencil.points[n_real:n_real + half])
    return RealNormalForm(genus, tuple(eps),
                          tuple(p.re for p in pencil.points[:n_real]), pairs)


@dataclass(frozen=True)
class BasisChange:
    """Columns are the real basis vectors expressed in the u_w basis."""

    matrix: np.ndarray

    def conjugation_defect(self, pencil: DiagonalPencil) -> float:
        """max |conj-image - vector| over basis vectors."""
        M = self.matrix
        image = np.conj(M)[list(pencil.nu), :]
        return float(np.max(np.abs(image - M)))


def basis_change(pencil: DiagonalPencil) -> BasisChange:
    dim, n_real = pencil.dim, pencil.n_real
    half = (dim - n_real) // 2
    M = np.zeros((dim, dim), dtype=complex)
    for i in range(n_real):
        R, _ = pencil.polar(i)
        M[i, i] = 1 / math.sqrt(R)
    col = n_real
    for j in range(half):
        w = n_real + j
        nw = pencil.nu[w]
        R, theta = pencil.polar(w)
        scale = 1 / math.sqrt(2 * R)
        a = cmath.exp(-0.5j * theta) * scale
        b = cmath.exp(0.5j * theta) * scale
        M[w, col], M[nw, col] = a, b
        M[w, col + 1], M[nw, col + 1] = -1j * a, 1j * b
        col += 2
    return BasisChange(M)


@dataclass(frozen=True)
class NormalFormCheck:
    residual_q0: float
    residual_q1: float
    max_imag: float

    @property
    def residual(self) -> float:
        return max(self.residual_q0, self.residual_q1)

    def to_record(self) -> dict:
        return {"residual_q0": self.residual_q0, "residual_q1": self.residual_q1,
                "max_imag": self.max_imag}


def verify_normal_form(pencil: DiagonalPencil, basis: BasisChange, nf: RealNormalForm,
                       tol: float = NF_TOLERANCE) -> NormalFormCheck:
    """Congruence-transform the diagonal Gram matrices and compare with the normal form."""
    M = basis.matrix
    if M.shape != (pencil.dim, pencil.dim) or nf.dim != pencil.dim:
        raise ValueError("dimension mismatch between pencil, basis and normal form")
    G0, G1 = pencil.gram_matrices()
    T0 = M.T @ G0 @ M
    T1 = M.T @ G1 @ M
    A, B = (np.array(m, dtype=float) for m in nf.exact_matrices())
    max_imag = float(max(np.max(np.abs(T0.imag)), np.max(np.abs(T1.imag))))
    d0 = np.abs(T0 - A)
    d1 = np.abs(T1 - B)
    check = NormalFormCheck(float(d0.max()), float(d1.max()), max_imag)
    if check.residual >= tol or max_imag > tol:
        which, d = ("q0", d0) if check.residual_q0 >= check.residual_q1 else ("q1", d1)
        idx = np.unravel_index(int(np.argmax(d)), d.shape)
        raise VerificationError(
            f"normal form mismatch in {which} at entry {tuple(int(i) for i in idx)}: "
            f"residual {d[idx]:.3e}, imaginary part {max_imag:.3e}",
            witness={"form": which, "entry": [int(i) for i in idx], "residual": float(d[idx])})
    return check


def genericity_check(points) -> bool:
    """True iff the pencil eigenvalues (the Weierstrass coordinates) are distinct."""
    pts = [QQi.parse(p) for p in points]
    return len(set(pts)) == len(pts)
