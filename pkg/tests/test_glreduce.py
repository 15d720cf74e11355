import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import GENUS2_CONFIGS, load_config
from quadpencil.curve import normalize_chart
from quadpencil.errors import InputError
from quadpencil.glreduce import (GENUS2_ROWS, GENUS2_TABLE, GLInvariant,
                                 canonical_partition, check_generic, genus2_lookup,
                                 lambda_config, reduce, reduce_greedy, run_partition)
from quadpencil.pencil import real_normal_form

F = Fraction
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _random_generic(rng, r_max=8):
    """Random rational points, none at the origin and no antipodal pair."""
    while True:
        pts = []
        for _ in range(rng.randint(1, r_max)):
            a, b = rng.randint(-6, 6), rng.randint(-6, 6)
            if (a, b) != (0, 0):
                pts.append((F(a), F(b), 1))
        if check_generic(pts):
            return pts


def _rotate(pts, c=F(3, 5), s=F(4, 5)):
    return [(c * a - s * b, s * a + c * b, m) for a, b, m in pts]


def _reflect(pts):
    return [(a, -b, m) for a, b, m in pts]


class TestLambdaConfig:
    def test_all_real(self):
        nf = real_normal_form(*load_config((3, 3)))
        cfg = lambda_config(nf)
        assert cfg.s == 0 and cfg.r == 6
        assert {(a, b) for a, b, _ in cfg.points} == {
            (1, 0), (-1, -1), (-1, -2), (1, 3), (1, 4), (-1, -5)}

    def test_no_real(self):
        cfg = lambda_config(real_normal_form(*load_config((0, 1))))
        assert cfg.points == () and cfg.s == 3


class TestCheckGeneric:
    def test_generic(self):
        assert check_generic([(1, 0), (0, 1), (1, 1)])

    def test_antipodal_pair(self):
        assert not check_generic([(1, 2), (-2, -4)])

    def test_origin(self):
        assert not check_generic([(0, 0), (1, 1)])

    def test_reduce_rejects(self):
        with pytest.raises(InputError):
            reduce([(1, 0, 1), (-1, 0, 1)])


class TestReduceExamples:
    @pytest.mark.parametrize("nk", sorted(GENUS2_CONFIGS))
    def test_genus2_rows(self, nk):
        W, D = normalize_chart(*load_config(nk))[:2]
        nf = real_normal_form(W, D)
        inv = reduce(lambda_config(nf))
        assert (inv.s, inv.partition) == GENUS2_ROWS[nk]

    def test_three_separated_pairs(self):
        # two points per sector, sectors separated by antipodes
        pts = [(1, 0, 1), (1, 1, 1), (-1, 2, 1), (-2, 1, 1), (-1, -3, 1), (0, -1, 1)]
        assert check_generic(pts)
        assert reduce(pts).partition == (2, 2, 2)

    def test_single_cluster(self):
        assert reduce([(1, 0, 1), (1, 1, 1)], s=2).partition == (2,)

    def test_weights_on_one_ray(self):
        assert reduce([(2, 2, 3)]).partition == (3,)

    def test_empty(self):
        inv = reduce([], s=3)
        assert inv == GLInvariant(3, 0, ())
        assert inv.partition_str() == "0"


class TestReduceProperties:
    def test_200_random_configurations(self):
        rng = random.Random(2024)
        for _ in range(200):
            pts = _random_generic(rng)
            greedy, full = reduce_greedy(pts, 0), reduce(pts, 0)
            assert greedy == full
            assert full.partition == run_partition(pts)
            assert len(full.partition) % 2 == 1
            assert full.r == len(pts)

    @given(seeds)
    @settings(max_examples=60, deadline=None)
    def test_rotation_and_reflection(self, seed):
        pts = _random_generic(random.Random(seed))
        base = reduce(pts, 0)
        assert reduce(_rotate(pts), 0) == base
        assert reduce(_reflect(pts), 0) == base
        # positive scaling of any single point changes nothing
        scaled = [(3 * a, 3 * b, m) if i == 0 else (a, b, m) for i, (a, b, m) in enumerate(pts)]
        assert reduce(scaled, 0) == base

    def test_canonical_partition(self):
        assert canonical_partition((2, 1, 1)) == (1, 1, 2)
        assert canonical_partition((1, 2, 1, 1, 1)) == (1, 1, 1, 1, 2)
        assert canonical_partition(()) == ()


class TestGenus2Lookup:
    @pytest.mark.parametrize("key", sorted(GENUS2_TABLE))
    def test_table(self, key):
        s, parts = key
        d = genus2_lookup(GLInvariant(s, (len(parts) - 1) // 2 if parts else 0, parts))
        assert (d.cover_type, d.base_type) == GENUS2_TABLE[key]

    def test_named_rows(self):
        assert genus2_lookup(GLInvariant(0, 1, (2, 2, 2))).cover_type == "T³"
        d = genus2_lookup(GLInvariant(3, 0, ()))
        assert (d.cover_type, d.base_type) == ("ℝP³", "L(4,1)")

    def test_unclassified(self):
        d = genus2_lookup(GLInvariant(0, 1, (1, 2, 3)))
        assert not d.classified
        assert d.to_record()["note"] == "unclassified"

    def test_wrong_size(self):
        with pytest.raises(ValueError):
            genus2_lookup(GLInvariant(0, 0, (1,)))
