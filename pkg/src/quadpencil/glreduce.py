"""Combinatorial invariant of a generic pair of real quadrics.

Each real eigen-coordinate contributes a planar point ``lambda = (a, b)``
(its q0 and q1 coefficients).  Points may be deformed freely as long as no
two ever sit on opposite rays through the origin.  Cyclically adjacent
groups of points are merged while that stays possible; what remains is an
odd number of groups whose multiplicities, read cyclically, form the
invariant partition.

All directions are exact rational vectors; merged groups are placed at the
multiplicity-weighted sum of their (max-norm normalised) directions, which
lies strictly inside the free arc.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Optional

from .errors import InputError, InternalError


@dataclass(frozen=True)
class LambdaConfig:
    points: tuple  # ((a, b, multiplicity), ...)
    s: int

    @property
    def r(self) -> int:
        return sum(m for _, _, m in self.points)

    def to_record(self) -> dict:
        return {"s": self.s,
                "points": [{"a": str(a), "b": str(b), "mult": m} for a, b, m in self.points]}


def lambda_config(nf) -> LambdaConfig:
    counts = {}
    for i, e in enumerate(nf.eps):
        for pt in ((Fraction(e), e * Fraction(nf.real_eigs[2 * i])),
                   (Fraction(-e), -e * Fraction(nf.real_eigs[2 * i + 1]))):
            counts[pt] = counts.get(pt, 0) + 1
    return LambdaConfig(tuple((a, b, m) for (a, b), m in counts.items()), nf.s)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _half(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = _cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(_angle_cmp)


def _same_ray(u, v) -> bool:
    return _cross(u, v) == 0 and _dot(u, v) > 0


def _opposite(u, v) -> bool:
    return _cross(u, v) == 0 and _dot(u, v) < 0


def _normalize(v):
    scale = max(abs(v[0]), abs(v[1]))
    return (v[0] / scale, v[1] / scale)


def check_generic(cfg) -> bool:
    """No point at the origin and no two points on opposite rays."""
    pts = [(Fraction(a), Fraction(b)) for a, b, *_ in _points_of(cfg)]
    if any(p == (0, 0) for p in pts):
        return False
    return not any(_opposite(p, q) for i, p in enumerate(pts) for q in pts[i + 1:])


def _points_of(cfg):
    return cfg.points if isinstance(cfg, LambdaConfig) else [tuple(p) for p in cfg]


def _initial_groups(cfg) -> tuple:
    """Coalesce points on a common ray and sort by angle."""
    groups = []
    for a, b, *rest in _points_of(cfg):
        m = rest[0] if rest else 1
        d = _normalize((Fraction(a), Fraction(b)))
        for idx, (gd, gm) in enumerate(groups):
            if _same_ray(gd, d):
                groups[idx] = (gd, gm + m)
                break
        else:
            groups.append((d, m))
    groups.sort(key=lambda g: angle_key(g[0]))
    return tuple(groups)


def _can_merge(groups, i) -> bool:
    """Whether group i and its counter-clockwise neighbour can be brought together."""
    j = (i + 1) % len(groups)
    u, v = groups[i][0], groups[j][0]
    if _cross(u, v) <= 0:
        # arc of at least a half-turn: u's own antipode is in the way
        return False
    for d, _ in groups:
        p = (-d[0], -d[1])
        if _cross(u, p) > 0 and _cross(p, v) > 0:
            return False
    return True


def _merge(groups, i) -> tuple:
    j = (i + 1) % len(groups)
    (u, mu), (v, mv) = groups[i], groups[j]
    d = _normalize((mu * u[0] + mv * v[0], mu * u[1] + mv * v[1]))
    rest = [g for k, g in enumerate(groups) if k not in (i, j)]
    rest.append((d, mu + mv))
    rest.sort(key=lambda g: angle_key(g[0]))
    return tuple(rest)


def canonical_partition(parts) -> tuple:
    """Lexicographically least rotation of the cyclic sequence or of its reverse."""
    parts = tuple(parts)
    if not parts:
        return ()
    variants = []
    for seq in (parts, parts[::-1]):
        variants.extend(seq[k:] + seq[:k] for k in range(len(seq)))
    return min(variants)


@dataclass(frozen=True)
class GLInvariant:
    s: int
    l: int
    partition: tuple

    @property
    def r(self) -> int:
        return sum(self.partition)

    def partition_str(self) -> str:
        return "+".join(str(x) for x in self.partition) if self.partition else "0"

    def to_record(self) -> dict:
        return {"s": self.s, "l": self.l, "partition": self.partition_str()}


def _finish(groups, s) -> GLInvariant:
    parts = tuple(m for _, m in groups)
    if not parts:
        return GLInvariant(s, 0, ())
    if len(parts) % 2 == 0:
        raise InternalError(f"reduction ended with an even number of groups: {parts}")
    return GLInvariant(s, (len(parts) - 1) // 2, canonical_partition(parts))


def _s_of(cfg, s):
    if s is not None:
        return s
    return cfg.s if isinstance(cfg, LambdaConfig) else 0


def _require_generic(cfg):
    if not check_generic(cfg):
        raise InputError("lambda configuration is not generic")


def reduce_greedy(cfg, s: Optional[int] = None) -> GLInvariant:
    """Apply the first available merge (in angular order) until none is left."""
    _require_generic(cfg)
    s = _s_of(cfg, s)
    groups = _initial_groups(cfg)
    while len(groups) > 1:
        for i in range(len(groups)):
            if _can_merge(groups, i):
                groups = _merge(groups, i)
                break
        else:
            break
    return _finish(groups, s)


def reduce(cfg, s: Optional[int] = None) -> GLInvariant:
    """Exhaustive search over merge orders, keeping the fewest terminal groups."""
    _require_generic(cfg)
    s = _s_of(cfg, s)

    @lru_cache(maxsize=None)
    def best(groups):
        if len(groups) <= 1:
            return groups
        options = [best(_merge(groups, i)) for i in range(len(groups)) if _can_merge(groups, i)]
        if not options:
            return groups
        return min(options, key=lambda g: (len(g), canonical_partition(m for _, m in g)))

    return _finish(best(_initial_groups(cfg)), s)


def run_partition(cfg) -> tuple:
    """Cyclic run lengths of points between antipodes.

    Walk once around the circle marking every group and every antipode.
    Points in the same maximal antipode-free run can be merged; distinct
    runs never can.  Independent of the merge machinery above.
    """
    groups = _initial_groups(cfg)
    if not groups:
        return ()
    marks = [(d, m) for d, m in groups] + [((-d[0], -d[1]), 0) for d, _ in groups]
    marks.sort(key=lambda g: angle_key(g[0]))
    # rotate so the walk starts just after an antipode
    start = next(i for i, (_, m) in enumerate(marks) if m == 0)
    marks = marks[start + 1:] + marks[:start + 1]
    runs, current = [], 0
    for _, m in marks:
        if m:
            current += m
        elif current:
            runs.append(current)
            current = 0
    if current:
        runs.append(current)
    return canonical_partition(runs)


@dataclass(frozen=True)
class DiffeoType:
    cover_type: Optional[str]
    base_type: Optional[str]

    @property
    def classified(self) -> bool:
        return self.cover_type is not None

    def to_record(self) -> dict:
        if not self.classified:
            return {"cover": None, "base": None, "note": "unclassified"}
        return {"cover": self.cover_type, "base": self.base_type}


S1xS2 = "S¹×S²"

GENUS2_TABLE = {
    (3, ()): ("ℝP³", "L(4,1)"),
    (2, (2,)): (S1xS2, S1xS2),
    (1, (1, 1, 2)): (f"#₃({S1xS2})", f"#₂({S1xS2})"),
    (0, (1, 1, 1, 1, 2)): (f"#₅({S1xS2})", f"#₃({S1xS2})"),
    (0, (2, 2, 2)): ("T³", "T³"),
}

# (n, k) of the curve selecting each row of the table above
GENUS2_ROWS = {
    (0, 1): (3, ()),
    (1, 1): (2, (2,)),
    (2, 1): (1, (1, 1, 2)),
    (3, 1): (0, (1, 1, 1, 1, 2)),
    (3, 3): (0, (2, 2, 2)),
}


def genus2_lookup(inv: GLInvariant) -> DiffeoType:
    if inv.r + 2 * inv.s != 6:
        raise ValueError(f"not a genus-2 invariant: r + 2s = {inv.r + 2 * inv.s}")
    row = GENUS2_TABLE.get((inv.s, canonical_partition(inv.partition)))
    if row is None:
        return DiffeoType(None, None)
    return DiffeoType(*row)
