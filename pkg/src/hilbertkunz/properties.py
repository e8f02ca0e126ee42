"""Randomized consistency checks on the quotient engine.

Each instance is a random form f of degree d in n+1 variables over F_p
together with a q.  The checks are the structural facts every profile must
satisfy; none of them uses a closed formula for the answer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .polynomial import MultiPoly, random_homogeneous
from .quotient import BRUTE_FORCE_LIMIT, brute_force_colength, hk_profile, is_in_frobenius_power
from .series import theta_dim

PRIMES = (3, 5)
NS = (2, 3)
DEGREES = (2, 3, 4)
QS = (3, 5, 9)


@dataclass
class Instance:
    p: int
    n: int
    d: int
    q: int
    f: MultiPoly


@dataclass
class InstanceResult:
    p: int
    n: int
    d: int
    q: int
    poly: str
    hk: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def random_instances(count: int, seed: int) -> list[Instance]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p, n, d, q = rng.choice(PRIMES), rng.choice(NS), rng.choice(DEGREES), rng.choice(QS)
        # sparse forms are far more often not of maximal rank
        density = rng.choice((1.0, 0.5, 0.25))
        out.append(Instance(p, n, d, q, random_homogeneous(n + 1, d, p, rng, density)))
    return out


def reciprocal_unimodal(n: int, q: int) -> bool:
    top = (n + 1) * (q - 1)
    alpha = [theta_dim(n, q, i) for i in range(top + 1)]
    recip = all(alpha[i] == alpha[top - i] for i in range(top + 1))
    unimodal = all(alpha[i] < alpha[i + 1] for i in range(top // 2))
    return recip and unimodal and sum(alpha) == q ** (n + 1)


def check_instance(inst: Instance, brute_force: bool = True) -> InstanceResult:
    f, q, n, d = inst.f, inst.q, inst.n, inst.d
    prof = hk_profile(f, q)
    top = (n + 1) * (q - 1)
    checks = {
        "duality": prof.a_q + prof.iota_q == top,
        "theta_reciprocal_unimodal": reciprocal_unimodal(n, q),
        "lower_bound": prof.hk_value >= prof.L_q,
        "upper_bound": (prof.hk_value == q ** (n + 1)) == is_in_frobenius_power(f, q),
    }
    if d <= top:
        maps = prof.all_maps_maximal_rank()
        socle = prof.a_q == prof.m_q
        initial = prof.iota_q == top - prof.m_q
        minimal = prof.hk_value == prof.L_q
        checks["socle_at_least_m"] = prof.a_q >= prof.m_q
        checks["maximal_rank_equivalence"] = maps == socle == initial == minimal == prof.maximal_rank
    if brute_force and q ** (n + 1) <= BRUTE_FORCE_LIMIT:
        checks["brute_force"] = brute_force_colength(f, q) == prof.hk_value
    return InstanceResult(inst.p, n, d, q, str(f), prof.hk_value, checks)


def run_suite(count: int, seed: int, brute_force: bool = True) -> list[InstanceResult]:
    return [check_instance(inst, brute_force) for inst in random_instances(count, seed)]
