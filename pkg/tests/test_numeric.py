import numpy as np
import pytest

from helpers import GENUS2_CONFIGS, load_config
from quadpencil.curve import normalize_chart
from quadpencil.errors import VerificationError
from quadpencil.numeric import (QuadricPair, cloud_from_points, components, quadric_matrices,
                                sample, smoothness, verify)
from quadpencil.pencil import real_normal_form

RANK_MIN = 1e-6


def _qp(nk):
    W, D, _ = normalize_chart(*load_config(nk))
    return quadric_matrices(real_normal_form(W, D))


class TestMatrices:
    def test_all_real_three_odd(self):
        qp = _qp((3, 3))
        assert np.array_equal(np.diag(qp.A), [1, -1, -1, 1, 1, -1])
        assert np.array_equal(np.diag(qp.B), [0, -1, -2, 3, 4, -5])
        assert np.count_nonzero(qp.A - np.diag(np.diag(qp.A))) == 0

    def test_complex_block(self):
        qp = _qp((0, 1))
        assert qp.B[0, 1] == qp.B[1, 0] == 1  # b = Im(i)
        assert qp.is_generic()

    def test_explicit_point_oracle(self):
        # x = (sqrt2, sqrt3, 0, 1, 0, 0)/sqrt6: q0 = (2 - 3 + 1)/6, q1 = (-3 + 3)/6
        qp = _qp((3, 3))
        v = np.array([np.sqrt(2), np.sqrt(3), 0, 1, 0, 0]) / np.sqrt(6)
        q0, q1 = qp.values(v[None, :])
        assert abs(q0[0]) < 1e-15 and abs(q1[0]) < 1e-15
        assert smoothness(cloud_from_points(qp, [v])).min_singular_value > RANK_MIN


class TestSampling:
    @pytest.mark.parametrize("nk", sorted(GENUS2_CONFIGS))
    def test_converges_on_genus2(self, nk):
        cloud = sample(_qp(nk), 500, seed=0)
        assert cloud.count >= 450
        assert cloud.residuals.max() <= 1e-10
        assert np.allclose(np.linalg.norm(cloud.points, axis=1), 1)

    def test_deterministic(self):
        a = sample(_qp((3, 3)), 200, seed=11)
        b = sample(_qp((3, 3)), 200, seed=11)
        assert np.array_equal(a.points, b.points)
        assert a.export_rows() == b.export_rows()
        c = sample(_qp((3, 3)), 200, seed=12)
        assert not np.array_equal(a.points, c.points)

    def test_empty_intersection(self):
        # q0 positive definite: no real points at all
        qp = QuadricPair(np.eye(6), np.eye(6))
        with pytest.raises(VerificationError, match="inconclusive") as info:
            sample(qp, 100, seed=0)
        assert info.value.witness["converged"] == 0

    def test_bad_count(self):
        with pytest.raises(ValueError):
            sample(_qp((3, 3)), 0, seed=0)


class TestSmoothness:
    def test_rank_two_on_generic(self):
        rep = smoothness(sample(_qp((2, 1)), 200, seed=3))
        assert rep.min_singular_value >= 1e-6
        assert rep.cover_dimension == 3

    def test_singular_point_detected(self):
        A = np.diag([1.0, -1, 1, -1, 1, -1])
        B = np.diag([0.0, 0, 2, -3, 4, -5])  # repeated eigenvalue 0
        qp = QuadricPair(A, B)
        assert not qp.is_generic()
        v = np.array([1.0, 1, 0, 0, 0, 0]) / np.sqrt(2)
        q0, q1 = qp.values(v[None, :])
        assert q0[0] == 0 and q1[0] == 0
        with pytest.raises(VerificationError, match="rank deficient") as info:
            smoothness(cloud_from_points(qp, [v]))
        assert np.allclose(info.value.witness, v)


class TestComponents:
    def test_two_antipodal_clusters(self):
        rng = np.random.default_rng(5)
        blob = np.zeros((150, 6))
        blob[:, 0] = 1
        blob[:, 1:] = 0.05 * rng.standard_normal((150, 5))
        pts = np.vstack([blob, -blob])
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        rep = components(pts)
        assert rep.components == 2 and not rep.inconclusive

    def test_order_independent(self):
        cloud = sample(_qp((3, 1)), 300, seed=4)
        perm = np.random.default_rng(0).permutation(cloud.count)
        assert components(cloud) == components(cloud.points[perm])

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            components(np.eye(6))

    @pytest.mark.parametrize("nk", sorted(GENUS2_CONFIGS))
    def test_genus2_connected(self, nk):
        assert components(sample(_qp(nk), 500, seed=0)).components == 1


class TestVerify:
    def test_ok(self):
        rep = verify(_qp((3, 3)), 500, seed=0)
        assert rep.status == "ok"
        assert rep.to_record()["components"]["components"] == 1

    def test_no_points(self):
        rep = verify(QuadricPair(np.eye(6), np.eye(6)), 50, seed=0)
        assert rep.status == "inconclusive" and rep.message == "no points found"
