"""Closed-form Hilbert-Kunz functions of plane cubics and Cayley's cubic surface,
and a harness that checks them against the quotient engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import CharacteristicMismatch, NonIntegralFormula, PreconditionViolated
from .field import is_power_of, is_prime
from .polynomial import MultiPoly, parse_poly
from .quotient import hk_profile


class CubicFamily(str, Enum):
    CUSPIDAL = "cuspidal"
    NODAL = "nodal"
    ELLIPTIC_ODD = "elliptic_odd"
    ELLIPTIC_CHAR2_J0 = "elliptic_char2_j0"
    ELLIPTIC_CHAR2_JNZ = "elliptic_char2_jnz"
    CAYLEY = "cayley"

    @property
    def generalized(self) -> bool:
        """Formula holds for every q >= 1, not only for powers of p."""
        return self in (CubicFamily.CUSPIDAL, CubicFamily.CAYLEY)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralFormula(f"{what} evaluates to {value}, not an integer")
    return value.numerator


def check_characteristic(family: CubicFamily, p: int) -> None:
    if not is_prime(p):
        raise PreconditionViolated(f"{p} is not prime")
    family = CubicFamily(family)
    if family is CubicFamily.ELLIPTIC_ODD and p == 2:
        raise CharacteristicMismatch("elliptic_odd needs an odd characteristic")
    if family in (CubicFamily.ELLIPTIC_CHAR2_J0, CubicFamily.ELLIPTIC_CHAR2_JNZ) and p != 2:
        raise CharacteristicMismatch(f"{family.value} needs characteristic 2")


def hk_formula(family: CubicFamily, p: int, q: int) -> int:
    family = CubicFamily(family)
    check_characteristic(family, p)
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    Q = Fraction(q)
    if family is CubicFamily.CUSPIDAL:
        # generalized form; on powers of p the split q = 0 mod 3 is the split p = 3
        value = Fraction(7, 3) * Q**2 - (0 if q % 3 == 0 else Fraction(4, 3))
        if is_power_of(q, p) and q > 1:
            assert (q % 3 == 0) == (p == 3)
    elif family is CubicFamily.NODAL:
        if q % 3 == 2:
            value = Fraction(7, 3) * Q**2 - Q / 3 - Fraction(5, 3)
        else:
            value = Fraction(7, 3) * Q**2 - Q / 3 - 1
    elif family is CubicFamily.ELLIPTIC_ODD:
        value = Fraction(9, 4) * Q**2 - Fraction(5, 4)
    elif family is CubicFamily.ELLIPTIC_CHAR2_J0:
        value = Fraction(9, 4) * Q**2
    elif family is CubicFamily.ELLIPTIC_CHAR2_JNZ:
        value = Fraction(9, 4) * Q**2 - 1
    else:
        value = 2 * Q**3 - Q
    return _integral(value, f"{family.value} formula at q={q}")


def cayley_socle(q: int) -> int:
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    return 0 if q == 1 else 2 * q - 1


def reference_polynomial(family: CubicFamily, p: int) -> MultiPoly:
    family = CubicFamily(family)
    check_characteristic(family, p)
    xyz = ["x", "y", "z"]
    if family is CubicFamily.CUSPIDAL:
        return parse_poly("z*y^2 - x^3", xyz, p)
    if family is CubicFamily.NODAL:
        if p == 2:
            return parse_poly("z*y^2 + x*y*z - x^3", xyz, p)
        return parse_poly("z*y^2 - z*x^2 - x^3", xyz, p)
    if family is CubicFamily.ELLIPTIC_ODD:
        return parse_poly("y^2*z - x^3 - x*z^2", xyz, p)
    if family is CubicFamily.ELLIPTIC_CHAR2_J0:
        return parse_poly("y^2*z + y*z^2 - x^3", xyz, p)
    if family is CubicFamily.ELLIPTIC_CHAR2_JNZ:
        return parse_poly("y^2*z + x*y*z - x^3 - z^3", xyz, p)
    return parse_poly("x*y*z + x*y*w + x*z*w + y*z*w", ["x", "y", "z", "w"], p)


def default_q_list(family: CubicFamily, p: int, qmax: int) -> list[int]:
    """1..qmax for the generalized families, else p, p^2, ... up to qmax."""
    family = CubicFamily(family)
    if family.generalized:
        return list(range(1, qmax + 1))
    qs, q = [], p
    while q <= qmax:
        qs.append(q)
        q *= p
    return qs


@dataclass
class VerificationRow:
    q: int
    hk: int
    a: int
    iota: int
    m: int
    L: int
    maximal_rank: bool
    formula: int
    match: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class FamilyReport:
    family: str
    p: int
    polynomial: str
    rows: list[VerificationRow] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list[int]:
        return [r.q for r in self.rows if not r.match]


def verify_family(family: CubicFamily, p: int, q_list) -> FamilyReport:
    family = CubicFamily(family)
    q_list = sorted(set(q_list))
    if not q_list:
        raise PreconditionViolated("q_list must be nonempty")
    f = reference_polynomial(family, p)
    for q in q_list:
        if q < 1:
            raise PreconditionViolated("q must be >= 1")
        if not family.generalized and not is_power_of(q, p):
            raise PreconditionViolated(f"{family.value} formula needs q a power of {p}, got {q}")
    report = FamilyReport(family.value, p, str(f))
    for q in q_list:
        expected = hk_formula(family, p, q)
        prof = hk_profile(f, q)
        ok = prof.hk_value == expected
        if family is CubicFamily.CAYLEY:
            ok = ok and prof.a_q == cayley_socle(q)
        report.rows.append(VerificationRow(
            q=q, hk=prof.hk_value, a=prof.a_q, iota=prof.iota_q, m=prof.m_q, L=prof.L_q,
            maximal_rank=prof.maximal_rank, formula=expected, match=ok,
        ))
    return report
