"""Real hyperelliptic curves given by their Weierstrass configuration.

The curve is the affine model ``y**2 = P(t)`` with ``P(t) = prod(t - t_w)``
over the 2g+2 Weierstrass points, real structure ``tau(t, y) = (conj t,
conj y)`` and hyperelliptic involution ``iota(t, y) = (t, -y)``.  Since ``P``
is monic of even degree it is positive near infinity, so infinity always lies
under the tau-real locus.  Over the real line the tau-locus sits where
``P >= 0`` and the (tau o iota)-locus where ``P <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InputError, InternalError
from .qqi import QQi, fraction_str

TAU = "tau"
TAU_IOTA = "tau_iota"


@dataclass(frozen=True)
class WeierstrassSet:
    genus: int
    points: tuple

    def __init__(self, genus: int, points: Iterable):
        pts = tuple(QQi.parse(p) for p in points)
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "points", pts)
        self._validate()

    def _validate(self):
        g = self.genus
        if g < 2:
            raise InputError(f"genus must be at least 2, got {g}")
        if len(self.points) != 2 * g + 2:
            raise InputError(
                f"genus {g} needs exactly {2 * g + 2} Weierstrass points, got {len(self.points)}")
        if len(set(self.points)) != len(self.points):
            raise InputError("Weierstrass points must be pairwise distinct")
        conj = sorted((p.conjugate() for p in self.points), key=QQi.sort_key)
        if conj != sorted(self.points, key=QQi.sort_key):
            raise InputError("Weierstrass points are not closed under complex conjugation")

    @property
    def real_points(self) -> tuple:
        return tuple(sorted(p.re for p in self.points if p.is_real))

    @property
    def upper_points(self) -> tuple:
        return tuple(sorted((p for p in self.points if p.im > 0), key=QQi.sort_key))

    @property
    def n(self) -> int:
        return len(self.real_points) // 2

    def sign_at(self, t: Fraction) -> int:
        """Sign of P at a real non-Weierstrass point."""
        if any(t == r for r in self.real_points):
            raise ValueError(f"{t} is a Weierstrass point")
        # complex conjugate pairs contribute |t - w|^2 > 0
        return -1 if sum(1 for r in self.real_points if r > t) % 2 else 1

    def locus_of(self, t: Fraction) -> str:
        return TAU if self.sign_at(t) > 0 else TAU_IOTA

    def to_record(self) -> dict:
        return {"genus": self.genus,
                "weierstrass": [p.to_record() for p in sorted(self.points, key=QQi.sort_key)]}


def partition_weierstrass(W: WeierstrassSet):
    """Split W into sorted real points, upper half-plane points and their conjugates."""
    w0 = W.real_points
    wplus = W.upper_points
    wminus = tuple(p.conjugate() for p in wplus)
    return w0, wplus, wminus


@dataclass(frozen=True)
class CurveTopology:
    genus: int
    n: int
    components_tau: int
    components_tau_iota: int
    dividing_tau: bool
    dividing_tau_iota: bool

    def to_record(self) -> dict:
        return {
            "genus": self.genus,
            "n": self.n,
            "components_tau": self.components_tau,
            "components_tau_iota": self.components_tau_iota,
            "dividing_tau": self.dividing_tau,
            "dividing_tau_iota": self.dividing_tau_iota,
        }


def classify_topology(W: WeierstrassSet) -> CurveTopology:
    g, n = W.genus, W.n
    if n == 0:
        return CurveTopology(g, 0, 1, 0, True, False)
    dividing = n == g + 1
    return CurveTopology(g, n, n, n, dividing, dividing)


@dataclass(frozen=True)
class RealDivisor:
    """Conjugation-symmetric weighted points ``(alpha, m)`` of pi(D)."""

    entries: tuple

    def __init__(self, entries: Iterable):
        parsed = []
        for alpha, m in entries:
            alpha = QQi.parse(alpha)
            if isinstance(m, bool) or int(m) != m:
                raise InputError(f"multiplicity {m!r} is not an integer")
            parsed.append((alpha, int(m)))
        parsed.sort(key=lambda e: e[0].sort_key())
        object.__setattr__(self, "entries", tuple(parsed))
        self._validate()

    def _validate(self):
        seen = {}
        for alpha, m in self.entries:
            if m == 0:
                raise InputError(f"zero multiplicity at {alpha}")
            if alpha in seen:
                raise InputError(f"divisor point {alpha} listed twice")
            seen[alpha] = m
        for alpha, m in self.entries:
            if seen.get(alpha.conjugate()) != m:
                raise InputError(
                    f"divisor is not conjugation symmetric: ({alpha}, {m}) has no matching conjugate")

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.entries)

    def real_entries(self):
        return [(a.re, m) for a, m in self.entries if a.is_real]

    def mass_between(self, lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
        """Sum of multiplicities of real points in the open interval (lo, hi); None is infinite."""
        return sum(m for a, m in self.real_entries()
                   if (lo is None or a > lo) and (hi is None or a < hi))

    def to_record(self) -> list:
        return [{"point": a.to_record(), "mult": m} for a, m in self.entries]


def check_divisor(W: WeierstrassSet, D: RealDivisor) -> None:
    """Raise InputError unless D is a valid real divisor for the curve of W.

    Besides the degree and Weierstrass-avoidance constraints, a real point of
    the (tau o iota)-locus must carry even multiplicity: its two preimages on
    the curve are swapped by tau, so an invariant divisor weights them equally.
    """
    g = W.genus
    if D.degree != -(2 * g + 1):
        raise InputError(
            f"divisor multiplicities must sum to -(2g+1) = {-(2 * g + 1)}, got {D.degree}")
    wset = set(W.points)
    for alpha, m in D.entries:
        if alpha in wset:
            raise InputError(f"divisor point {alpha} coincides with a Weierstrass point")
    for a, m in D.real_entries():
        if W.locus_of(a) == TAU_IOTA and m % 2:
            raise InputError(
                f"real divisor point {fraction_str(a)} lies in the tau-iota locus with odd "
                f"multiplicity {m}; a tau-invariant divisor has even multiplicity there")


@dataclass(frozen=True)
class Interval:
    lo: Optional[Fraction]  # None = -infinity
    hi: Optional[Fraction]  # None = +infinity
    locus: str
    parity: Optional[int] = None

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def contains(self, t: Fraction) -> bool:
        return (self.lo is None or t >= self.lo) and (self.hi is None or t <= self.hi)

    def to_record(self) -> dict:
        rec = {
            "lo": "-inf" if self.lo is None else fraction_str(self.lo),
            "hi": "+inf" if self.hi is None else fraction_str(self.hi),
            "locus": self.locus,
        }
        if self.parity is not None:
            rec["parity"] = "odd" if self.parity else "even"
        return rec

    def __str__(self):
        lo = "(-inf" if self.lo is None else f"[{fraction_str(self.lo)}"
        hi = "+inf)" if self.hi is None else f"{fraction_str(self.hi)}]"
        return f"{lo},{hi}"


def real_locus_intervals(W: WeierstrassSet):
    """Return (tau_intervals, tau_iota_intervals), ordered left to right."""
    w0 = W.real_points
    if not w0:
        return [Interval(None, None, TAU)], []
    bounds = [None, *w0, None]
    tau, tau_iota = [], []
    for j in range(len(bounds) - 1):
        # j real roots lie left of the gap, len(w0) - j lie right of it
        locus = TAU if (len(w0) - j) % 2 == 0 else TAU_IOTA
        piece = Interval(bounds[j], bounds[j + 1], locus)
        (tau if locus == TAU else tau_iota).append(piece)
    return tau, tau_iota


@dataclass(frozen=True)
class IntervalProfile:
    intervals: tuple  # every piece of both loci, left to right, with parity
    k: int
    infinity_parity: int
    n: int

    @property
    def tau_intervals(self):
        return [iv for iv in self.intervals if iv.locus == TAU]

    @property
    def odd_intervals(self):
        return [iv for iv in self.tau_intervals if iv.parity]

    @property
    def negative_half_parity(self) -> Optional[int]:
        if self.n == 0:
            return None
        return self.tau_intervals[0].parity

    def to_record(self) -> dict:
        return {
            "intervals": [iv.to_record() for iv in self.intervals],
            "k": self.k,
            "infinity_circle": "odd" if self.infinity_parity else "even",
        }


def interval_parities(W: WeierstrassSet, D: RealDivisor) -> IntervalProfile:
    check_divisor(W, D)
    tau, tau_iota = real_locus_intervals(W)
    pieces = sorted(tau + tau_iota, key=lambda iv: (iv.lo is not None, iv.lo))
    tagged = tuple(
        Interval(iv.lo, iv.hi, iv.locus, D.mass_between(iv.lo, iv.hi) % 2) for iv in pieces)
    tau_tagged = [iv for iv in tagged if iv.locus == TAU]
    if W.n == 0:
        inf_parity = tau_tagged[0].parity
        k = inf_parity
    else:
        inf_parity = (tau_tagged[0].parity + tau_tagged[-1].parity) % 2
        k = inf_parity + sum(iv.parity for iv in tau_tagged[1:-1])
    if k % 2 != 1:
        raise InternalError(f"even number of odd circles ({k}) for an odd-degree divisor")
    return IntervalProfile(tagged, k, inf_parity, W.n)


@dataclass(frozen=True)
class Mobius:
    """Real fractional linear map t -> (a t + b) / (c t + d) with rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("degenerate Moebius transformation")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def negation(cls):
        return cls(-1, 0, 0, 1)

    @classmethod
    def shift(cls, c):
        return cls(1, c, 0, 1)

    @classmethod
    def inversion(cls, c):
        """t -> 1 / (c - t)."""
        return cls(0, 1, -1, c)

    @property
    def pole(self) -> Optional[Fraction]:
        """The finite point sent to infinity, if any."""
        return None if self.c == 0 else -self.d / self.c

    def __call__(self, z: QQi) -> QQi:
        den = self.c * z + self.d
        if den == 0:
            raise ZeroDivisionError(f"{z} is sent to infinity")
        return (self.a * z + self.b) / den

    def compose(self, other: "Mobius") -> "Mobius":
        """self after other."""
        return Mobius(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def to_record(self) -> dict:
        return {k: fraction_str(getattr(self, k)) for k in "abcd"}

    def __str__(self):
        return (f"t -> ({fraction_str(self.a)} t + {fraction_str(self.b)}) / "
                f"({fraction_str(self.c)} t + {fraction_str(self.d)})")


def apply_mobius(W: WeierstrassSet, D: RealDivisor, phi: Mobius):
    pole = phi.pole
    if pole is not None:
        if W.sign_at(pole) < 0:
            raise ValueError("transform would send a tau-iota point to infinity")
        if any(a == QQi(pole) for a, _ in D.entries):
            raise ValueError("transform would send a divisor point to infinity")
    W2 = WeierstrassSet(W.genus, [phi(p) for p in W.points])
    D2 = RealDivisor([(phi(a), m) for a, m in D.entries])
    return W2, D2


def _is_normalized(W: WeierstrassSet, D: RealDivisor) -> bool:
    return W.n == 0 or interval_parities(W, D).negative_half_parity == 0


def _inversion_centres(W: WeierstrassSet, D: RealDivisor) -> list:
    special = sorted(set(W.real_points) | {a for a, _ in D.real_entries()})
    if not special:
        return []
    candidates = [special[0] - 1]
    candidates += [(x + y) / 2 for x, y in zip(special, special[1:])]
    candidates.append(special[-1] + 1)
    return [c for c in candidates if W.sign_at(c) > 0]


def normalize_chart(W: WeierstrassSet, D: RealDivisor):
    """Change affine chart so the negative half-infinite tau-interval is even.

    Returns (W', D', transform).  Candidates are tried in a fixed order:
    identity, t -> -t, then t -> 1/(c - t) for rational c in the tau-locus.
    """
    check_divisor(W, D)
    if _is_normalized(W, D):
        return W, D, Mobius.identity()
    candidates = [Mobius.negation()] + [Mobius.inversion(c) for c in _inversion_centres(W, D)]
    for phi in candidates:
        W2, D2 = apply_mobius(W, D, phi)
        if _is_normalized(W2, D2):
            return W2, D2, phi
    raise InputError("no rational chart change normalizes this configuration")
