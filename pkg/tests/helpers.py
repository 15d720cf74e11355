"""Shared fixtures data and random configuration generators for the tests."""

import json
import random
from fractions import Fraction
from pathlib import Path

from quadpencil.curve import TAU, RealDivisor, WeierstrassSet
from quadpencil.qqi import QQi

CONFIG_DIR = Path(__file__).resolve().parents[1] / "configs"

# (n, k) -> config file, in table order
GENUS2_CONFIGS = {
    (0, 1): "config_0_1.json",
    (1, 1): "config_1_1.json",
    (2, 1): "config_2_1.json",
    (3, 1): "config_3_1.json",
    (3, 3): "config_3_3.json",
}


def config_path(nk):
    return CONFIG_DIR / GENUS2_CONFIGS[nk]


def load_config(nk):
    from quadpencil.pipeline import parse_input

    spec = parse_input(json.loads(config_path(nk).read_text()))
    return spec.W, spec.D


def random_configuration(rng: random.Random, g=None):
    """A random valid (W, D): symmetric W, divisor of degree -(2g+1) obeying the locus rules."""
    g = g or rng.randint(2, 4)
    n = rng.randint(0, g + 1)
    denom = rng.choice([1, 2, 3])
    reals = [Fraction(x, denom) for x in sorted(rng.sample(range(-30, 31), 2 * n))]
    uppers = set()
    while len(uppers) < g + 1 - n:
        uppers.add(QQi(Fraction(rng.randint(-10, 10), rng.choice([1, 2])),
                       Fraction(rng.randint(1, 8), rng.choice([1, 3]))))
    points = [QQi(r) for r in reals] + list(uppers) + [p.conjugate() for p in uppers]
    rng.shuffle(points)
    W = WeierstrassSet(g, points)

    used = set(W.points)
    entries = []

    def fresh_real(lo=-60, hi=60):
        while True:
            a = QQi(Fraction(rng.randint(lo * 7, hi * 7), 7))
            if a not in used:
                used.add(a)
                return a

    for _ in range(rng.randint(0, 4)):
        a = fresh_real()
        m = rng.choice([-3, -2, -1, 1, 2, 3])
        if W.locus_of(a.re) != TAU:
            m *= 2
        entries.append((a, m))
    for _ in range(rng.randint(0, 2)):
        z = QQi(Fraction(rng.randint(-20, 20), 5), Fraction(rng.randint(1, 20), 5))
        if z in used:
            continue
        used.update({z, z.conjugate()})
        m = rng.choice([-2, -1, 1, 2])
        entries += [(z, m), (z.conjugate(), m)]
    total = sum(m for _, m in entries)
    need = -(2 * g + 1) - total
    # points beyond every real Weierstrass point lie in the tau-locus
    right = max([float(r) for r in reals] + [0.0]) + 1
    if need == 0:
        a = fresh_real(int(right) + 1, int(right) + 40)
        entries.append((a, 1))
        need = -1
    a = fresh_real(int(right) + 1, int(right) + 40)
    entries.append((a, need))
    return W, RealDivisor(entries)
