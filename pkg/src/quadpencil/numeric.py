"""Floating-point checks on the real quadric intersection.

Points are sampled on the unit sphere S^{2g+1} (the double cover of the
projective intersection) by a minimum-norm Newton iteration on
``v -> (q0(v), q1(v), |v|^2 - 1)`` started from random unit vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from scipy.spatial import cKDTree

from .errors import VerificationError

RESIDUAL_TOL = 1e-10
NEWTON_TOL = 1e-12
MAX_ITER = 100
RANK_TOL = 1e-6


@dataclass(frozen=True)
class QuadricPair:
    A: np.ndarray
    B: np.ndarray

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    def values(self, V: np.ndarray):
        """q0 and q1 at the rows of V."""
        return (np.einsum("ij,jk,ik->i", V, self.A, V),
                np.einsum("ij,jk,ik->i", V, self.B, V))

    def is_generic(self, tol: float = 1e-9) -> bool:
        """det(xA + yB) has dim distinct roots on P^1 (checked for A invertible)."""
        if abs(np.linalg.det(self.A)) < tol:
            return False
        eig = np.linalg.eigvals(np.linalg.solve(self.A, self.B))
        gaps = np.abs(eig[:, None] - eig[None, :]) + np.eye(len(eig))
        return bool(gaps.min() > tol)


def quadric_matrices(nf) -> QuadricPair:
    A, B = nf.exact_matrices()
    return QuadricPair(np.array(A, dtype=float), np.array(B, dtype=float))


@dataclass
class SampleCloud:
    points: np.ndarray  # (m, N) unit vectors
    jacobians: np.ndarray  # (m, 2, N) tangential Jacobians of (q0, q1)
    singular_values: np.ndarray  # (m, 2)
    residuals: np.ndarray  # (m, 2): |q0|, |q1|
    seed: int
    attempts: int

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def success_ratio(self) -> float:
        return self.count / self.attempts if self.attempts else 0.0

    def export_rows(self) -> list:
        return [" ".join(f"{x:.17g}" for x in row) for row in self.points]


def _tangent_jacobians(qp: QuadricPair, V: np.ndarray):
    grads = np.stack([2 * V @ qp.A, 2 * V @ qp.B], axis=1)  # (m, 2, N), A and B symmetric
    proj = np.eye(qp.dim)[None, :, :] - V[:, :, None] * V[:, None, :]
    J = grads @ proj
    sv = np.linalg.svd(J, compute_uv=False)
    return J, sv


def cloud_from_points(qp: QuadricPair, points, seed: int = -1) -> SampleCloud:
    """Wrap given points (normalised to the sphere) as a cloud, without filtering."""
    V = np.atleast_2d(np.asarray(points, dtype=float))
    V = V / np.linalg.norm(V, axis=1, keepdims=True)
    q0, q1 = qp.values(V)
    J, sv = _tangent_jacobians(qp, V)
    return SampleCloud(V, J, sv, np.abs(np.stack([q0, q1], axis=1)), seed, len(V))


def _starts(dim: int, count: int, seed: int) -> np.ndarray:
    streams = np.random.SeedSequence(seed).spawn(count)
    X = np.array([np.random.default_rng(s).standard_normal(dim) for s in streams])
    return X / np.linalg.norm(X, axis=1, keepdims=True)


def _system(qp: QuadricPair, V):
    q0, q1 = qp.values(V)
    F = np.stack([q0, q1, np.einsum("ij,ij->i", V, V) - 1.0], axis=1)
    J = 2 * np.stack([V @ qp.A, V @ qp.B, V], axis=1)
    return F, J


def newton_project(qp: QuadricPair, V0: np.ndarray):
    """Batched minimum-norm Newton with step halving; returns (V, converged mask)."""
    V = V0.copy()
    F, J = _system(qp, V)
    res = np.linalg.norm(F, axis=1)
    active = np.ones(len(V), dtype=bool)
    for _ in range(MAX_ITER):
        active &= res > NEWTON_TOL
        if not active.any():
            break
        idx = np.flatnonzero(active)
        Ja, Fa = J[idx], F[idx]
        JJt = Ja @ np.transpose(Ja, (0, 2, 1))
        try:
            y = np.linalg.solve(JJt, Fa[:, :, None])
        except np.linalg.LinAlgError:
            y = (np.linalg.pinv(JJt) @ Fa[:, :, None])
        step = (np.transpose(Ja, (0, 2, 1)) @ y)[:, :, 0]
        t = np.ones(len(idx))
        for _ in range(30):
            trial = V[idx] - t[:, None] * step
            Ft, _ = _system(qp, trial)
            rt = np.linalg.norm(Ft, axis=1)
            worse = rt > res[idx]
            if not worse.any():
                break
            t = np.where(worse, t / 2, t)
        V[idx] = trial
        F[idx], J[idx] = _system(qp, trial)
        res[idx] = np.linalg.norm(F[idx], axis=1)
    V = V / np.linalg.norm(V, axis=1, keepdims=True)
    q0, q1 = qp.values(V)
    ok = (np.abs(q0) <= RESIDUAL_TOL) & (np.abs(q1) <= RESIDUAL_TOL)
    return V, ok


def sample(qp: QuadricPair, count: int, seed: int, min_ratio: float = 0.1) -> SampleCloud:
    """Project ``count`` seeded random unit vectors onto the intersection.

    Raises VerificationError (inconclusive, not a proof of emptiness) when
    fewer than ``min_ratio * count`` starts converge.
    """
    if count <= 0:
        raise ValueError("count must be positive")
    V, ok = newton_project(qp, _starts(qp.dim, count, seed))
    cloud = cloud_from_points(qp, V[ok], seed)
    cloud.attempts = count
    if cloud.count < min_ratio * count:
        raise VerificationError(
            f"sampling inconclusive: {cloud.count}/{count} starts converged",
            witness={"converged": cloud.count, "attempts": count, "cloud": cloud})
    return cloud


@dataclass(frozen=True)
class SmoothnessReport:
    min_singular_value: float
    points_checked: int
    cover_dimension: int
    projective_dimension: int

    def to_record(self) -> dict:
        return {"min_second_singular_value": self.min_singular_value,
                "points_checked": self.points_checked,
                "cover_dimension": self.cover_dimension,
                "projective_dimension": self.projective_dimension}


def smoothness(cloud: SampleCloud, tol: float = RANK_TOL) -> SmoothnessReport:
    """Rank-2 check of the tangential Jacobian at every sample."""
    if cloud.count == 0:
        raise ValueError("empty cloud")
    second = cloud.singular_values[:, 1]
    worst = int(np.argmin(second))
    if second[worst] < tol:
        raise VerificationError(
            f"Jacobian rank deficient at sample {worst}: second singular value {second[worst]:.3e}",
            witness=cloud.points[worst].tolist())
    dim = cloud.points.shape[1] - 1 - 2  # sphere S^{N-1} cut by two equations
    return SmoothnessReport(float(second[worst]), cloud.count, dim, dim)


@dataclass(frozen=True)
class ComponentReport:
    components: int
    radius: float
    isolated: int
    inconclusive: bool

    def to_record(self) -> dict:
        return {"components": self.components, "radius": self.radius,
                "isolated": self.isolated, "inconclusive": self.inconclusive}


def default_radius(points: np.ndarray, factor: float = 3.0) -> float:
    dist, _ = cKDTree(points).query(points, k=2)
    return factor * float(np.median(dist[:, 1]))


def components(cloud_or_points, radius=None, min_points: int = 100,
               isolated_fraction: float = 0.05) -> ComponentReport:
    """Connected components of the proximity graph (edges below ``radius``)."""
    P = cloud_or_points.points if isinstance(cloud_or_points, SampleCloud) else np.asarray(
        cloud_or_points, dtype=float)
    if len(P) < min_points:
        raise ValueError(f"need at least {min_points} points, got {len(P)}")
    # sort rows so the union order does not depend on sampling order
    P = P[np.lexsort(P.T[::-1])]
    if radius is None:
        radius = default_radius(P)
    ds = DisjointSet(range(len(P)))
    for i, j in sorted(cKDTree(P).query_pairs(radius)):
        ds.merge(i, j)
    sizes = [len(s) for s in ds.subsets()]
    isolated = sum(1 for s in sizes if s == 1)
    inconclusive = isolated > isolated_fraction * len(P)
    return ComponentReport(len(sizes), float(radius), isolated, inconclusive)


@dataclass
class VerifyReport:
    attempts: int
    converged: int
    success_ratio: float
    max_residual: float
    smooth: SmoothnessReport = None
    components: ComponentReport = None
    status: str = "ok"
    message: str = ""
    extra: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        rec = {"attempts": self.attempts, "converged": self.converged,
               "success_ratio": self.success_ratio, "max_residual": self.max_residual,
               "status": self.status}
        if self.smooth is not None:
            rec["smoothness"] = self.smooth.to_record()
        if self.components is not None:
            rec["components"] = self.components.to_record()
        if self.message:
            rec["message"] = self.message
        return rec


def verify(qp: QuadricPair, count: int = 500, seed: int = 0) -> VerifyReport:
    """Sample, check smoothness and count components; never raises on data failures."""
    try:
        cloud = sample(qp, count, seed)
    except VerificationError as exc:
        return VerifyReport(count, exc.witness["converged"], exc.witness["converged"] / count,
                            float("nan"), status="inconclusive",
                            message="no points found" if exc.witness["converged"] == 0 else str(exc))
    report = VerifyReport(count, cloud.count, cloud.success_ratio,
                          float(cloud.residuals.max()))
    try:
        report.smooth = smoothness(cloud)
    except VerificationError as exc:
        report.status, report.message = "singular", str(exc)
        return report
    if cloud.count >= 100:
        report.components = components(cloud)
        if report.components.inconclusive:
            report.status = "inconclusive"
            report.message = "proximity graph too sparse for a component count"
    return report
