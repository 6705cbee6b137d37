"""Explicit thresholds and emptiness decision procedures.

Everything here is straight-line exact arithmetic over the field invariants
(d, d_K, h_K^+) and the representation-family parameters (n, ell0, r, w or
w_bar).  A decision either certifies emptiness with a hypothesis trace or
returns NotDecided; no procedure ever asserts non-emptiness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import EllEqualsEll0, WEven


@dataclass(frozen=True)
class FieldInvariants:
    """Degree, discriminant and narrow class number of the base field."""

    d: int
    disc: int
    h_plus: int
    galois_odd_degree: bool = False

    def __post_init__(self) -> None:
        if self.d < 1 or self.h_plus < 1:
            raise ValueError("d and h_plus must be positive")
        if self.disc == 0:
            raise ValueError("discriminant must be nonzero")
        if self.galois_odd_degree and self.d % 2 == 0:
            raise ValueError("galois_odd_degree requires odd d")


@dataclass(frozen=True)
class PrimeSituation:
    """Caller-supplied splitting data for a prime ell in the base field.

    For d = 1 both flags are forced to False: over the rationals there is a
    unique place above ell and the discriminant is 1.
    """

    ell: int
    divides_disc: bool = False
    splits_in_K: bool = False

    @staticmethod
    def rational(ell: int) -> "PrimeSituation":
        return PrimeSituation(ell, divides_disc=False, splits_in_K=False)


@dataclass(frozen=True)
class RepFamilyParams:
    """Family parameters: dimension n, auxiliary prime ell0, Hodge-Tate bound
    r, and either a uniform weight w (bullet) or a weight budget w_bar
    (circle).  cyclotomic flags the subfamily with cyclotomic-power graded
    pieces."""

    n: int
    ell0: int
    r: int
    variant: Literal["bullet", "circle"]
    w: int | None = None
    w_bar: int | None = None
    cyclotomic: bool = False

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 0:
            raise ValueError("need n >= 1 and r >= 0")
        if self.variant == "bullet":
            if self.w is None or self.w_bar is not None:
                raise ValueError("bullet variant takes w only; w_bar is derived")
            if self.w < 0:
                raise ValueError("w must be non-negative")
        elif self.variant == "circle":
            if self.w_bar is None or self.w is not None:
                raise ValueError("circle variant takes w_bar only")
            if self.w_bar < 0:
                raise ValueError("w_bar must be non-negative")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def weight_budget(self) -> int:
        # bullet feeds the constant formulas with the tight budget n*w
        return self.n * self.w if self.variant == "bullet" else self.w_bar


@dataclass(frozen=True)
class DerivedConstants:
    M: Fraction
    c_n: int
    eps1: Fraction
    eps2: Fraction
    eps1p: Fraction
    eps2p: Fraction
    C1: int
    C2: int
    C1p: int
    C2p: int


Conclusion = Literal["Empty", "NotDecided"]


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    theorem: str
    situation: str | None
    threshold: int
    trace: tuple[tuple[str, bool], ...]


def central_binomial(n: int) -> int:
    """max over m of binom(n, m): binom(n, n//2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.comb(n, n // 2)


def _ceil_pow(base: int, exponent: Fraction) -> int:
    return base ** math.ceil(exponent)


def derived_constants(inv: FieldInvariants, p: RepFamilyParams) -> DerivedConstants:
    """The size exponent M, the binomial peak c_n, and the four thresholds.

    M = max{n*r, w_bar/2}; eps1 = d*M, eps2 = d*eps1, and the primed versions
    carry the narrow class number.  Each C is 2*c_n*ell0^ceil(eps): a
    fractional exponent is rounded up, which only enlarges the threshold.
    """
    M = max(Fraction(p.n * p.r), Fraction(p.weight_budget, 2))
    c_n = central_binomial(p.n)
    eps1 = inv.d * M
    eps2 = inv.d * eps1
    eps1p = inv.d * inv.h_plus * M
    eps2p = inv.d * eps1p
    return DerivedConstants(
        M=M, c_n=c_n, eps1=eps1, eps2=eps2, eps1p=eps1p, eps2p=eps2p,
        C1=2 * c_n * _ceil_pow(p.ell0, eps1),
        C2=2 * c_n * _ceil_pow(p.ell0, eps2),
        C1p=2 * c_n * _ceil_pow(p.ell0, eps1p),
        C2p=2 * c_n * _ceil_pow(p.ell0, eps2p),
    )


def _five_situations(
    theorem: str,
    p: RepFamilyParams,
    ps: PrimeSituation,
    d: int,
    c_small: int,
    c_large: int,
    require_nonsplit: bool,
) -> Verdict:
    """Shared situation ladder (a)-(e) for the two emptiness theorems.

    Earlier situations take priority; an Empty verdict carries only the
    firing situation's hypotheses (all true), a NotDecided verdict carries
    the full trace of everything evaluated.
    """
    ell = ps.ell
    w, r, n = p.w, p.r, p.n
    w_odd = w % 2 == 1
    w_big = w > 2 * r
    standing = w_odd or w_big
    nonsplit = not ps.splits_in_K

    full_trace: list[tuple[str, bool]] = [("w_odd_or_w_gt_2r", standing)]
    if require_nonsplit:
        full_trace.append(("ell_does_not_split_in_K", nonsplit))
    situations = [
        ("a", [("w_odd", w_odd), ("ell_not_dividing_disc", not ps.divides_disc),
               ("ell_gt_threshold", ell > c_small)], c_small),
        ("b", [("w_odd", w_odd), ("degree_odd", d % 2 == 1),
               ("ell_gt_threshold", ell > c_large)], c_large),
        ("c", [("w_gt_2r", w_big), ("ell_not_dividing_disc", not ps.divides_disc),
               ("ell_gt_threshold", ell > c_small)], c_small),
        ("d", [("w_gt_2r", w_big), ("ell_gt_threshold", ell > c_large)], c_large),
        ("e", [("w_odd", w_odd), ("n_odd", n % 2 == 1),
               ("ell_gt_threshold", ell > c_large)], c_large),
    ]
    if standing:
        for label, hyps, threshold in situations:
            gate_hyps = list(hyps)
            if require_nonsplit:
                gate_hyps.insert(0, ("ell_does_not_split_in_K", nonsplit))
            if all(v for _, v in gate_hyps):
                trace = (("w_odd_or_w_gt_2r", True), *gate_hyps)
                return Verdict("Empty", theorem, label, threshold, trace)
    for label, hyps, _ in situations:
        full_trace.extend((f"{label}:{name}", v) for name, v in hyps)
    return Verdict("NotDecided", theorem, None, 0, tuple(full_trace))


def _check_bullet(p: RepFamilyParams) -> None:
    if p.variant != "bullet":
        raise ValueError("this decision requires the bullet (uniform weight) variant")


def _check_ell(p: RepFamilyParams, ell: int) -> None:
    if ell == p.ell0:
        raise EllEqualsEll0(f"ell = ell0 = {ell} is outside the framework")


def decide_cor1(inv: FieldInvariants, p: RepFamilyParams, ps: PrimeSituation) -> Verdict:
    """Emptiness for the cyclotomic-graded uniform-weight family, via the
    unprimed thresholds C1/C2."""
    _check_bullet(p)
    if not p.cyclotomic:
        raise ValueError("this decision applies to the cyclotomic subfamily only")
    _check_ell(p, ps.ell)
    consts = derived_constants(inv, p)
    return _five_situations("Cor1", p, ps, inv.d, consts.C1, consts.C2,
                            require_nonsplit=False)


def decide_cor2(inv: FieldInvariants, p: RepFamilyParams, ps: PrimeSituation) -> Verdict:
    """Emptiness for the residually-Borel uniform-weight family, via the
    primed thresholds C1'/C2'; requires ell non-split in K."""
    _check_bullet(p)
    _check_ell(p, ps.ell)
    consts = derived_constants(inv, p)
    return _five_situations("Cor2", p, ps, inv.d, consts.C1p, consts.C2p,
                            require_nonsplit=True)


def decide_trivial(inv: FieldInvariants, p: RepFamilyParams, ell: int) -> Verdict:
    """Parity shortcut: the Frobenius determinant has absolute value
    q^{n*w/2} and must be a rational integer; when n and w are odd and K/Q
    is Galois of odd degree every residue degree is odd, so q^{n*w/2} is
    never an integer and the family is empty for every ell != ell0."""
    _check_bullet(p)
    trace = (
        ("n_odd", p.n % 2 == 1),
        ("w_odd", p.w % 2 == 1),
        ("galois_odd_degree", inv.galois_odd_degree),
        ("ell_ne_ell0", ell != p.ell0),
    )
    if all(v for _, v in trace):
        return Verdict("Empty", "Trivial", "trivial", 0, trace)
    return Verdict("NotDecided", "Trivial", None, 0, trace)


def rt_thresholds(
    inv: FieldInvariants,
    g: int,
    variant: Literal["st", "st_with_ell0"],
    ell0: int | None = None,
) -> tuple[int, int]:
    """(situation-a, situation-b) thresholds for the torsion-tower family."""
    if g < 1:
        raise ValueError("g must be positive")
    binom = math.comb(2 * g, g)
    d, h = inv.d, inv.h_plus
    if variant == "st":
        return (2 ** (2 * d * g + 1) * binom, 2 ** (2 * d * d * g + 1) * binom)
    if variant == "st_with_ell0":
        if ell0 is None:
            raise ValueError("st_with_ell0 requires ell0")
        return (2 * ell0 ** (2 * d * g * h) * binom,
                2 * ell0 ** (2 * d * d * g * h) * binom)
    raise ValueError(f"unknown variant {variant!r}")


def ec_irred_thresholds(inv: FieldInvariants, ell_E: int) -> tuple[int, int]:
    """(situation-a, situation-b) thresholds for ell-torsion irreducibility."""
    d, h = inv.d, inv.h_plus
    return (4 * ell_E ** (2 * d * h), 4 * ell_E ** (2 * d * d * h))


def etale_thresholds(inv: FieldInvariants, b_w: int, ell_X: int, w: int) -> tuple[int, int]:
    """(situation-a, situation-b) thresholds for residual-Borel exclusion."""
    if w % 2 == 0:
        raise WEven(f"w must be odd, got {w}")
    if b_w < 1:
        raise ValueError("b_w must be positive")
    d, h = inv.d, inv.h_plus
    c = central_binomial(b_w)
    return (2 * c * ell_X ** (b_w * d * h * w), 2 * c * ell_X ** (b_w * d * d * h * w))


def decide_rt(
    inv: FieldInvariants,
    g: int,
    ell: int,
    ps: PrimeSituation,
    variant: Literal["st", "st_with_ell0"] = "st",
    ell0: int | None = None,
) -> Verdict:
    """Emptiness of the semistable torsion-tower family of g-dimensional
    abelian varieties.

    st: thresholds 2^(2dg+1)*binom(2g,g) and 2^(2d^2g+1)*binom(2g,g).
    st_with_ell0: thresholds 2*ell0^(2dgh+)*binom(2g,g) and
    2*ell0^(2d^2gh+)*binom(2g,g), gated on ell non-split in K and ell != ell0.
    """
    thr_a, thr_b = rt_thresholds(inv, g, variant, ell0)
    if variant == "st":
        theorem = "RTst"
        gate: list[tuple[str, bool]] = []
    else:
        if ell == ell0:
            raise EllEqualsEll0(f"ell = ell0 = {ell} is outside the framework")
        theorem = "GRTst"
        gate = [("ell_does_not_split_in_K", not ps.splits_in_K)]
    return _two_situations(theorem, ell, ps, thr_a, thr_b, inv.d, gate)


def decide_ec_irred(
    inv: FieldInvariants, ell_E: int, ell: int, ps: PrimeSituation
) -> Verdict:
    """Irreducibility of the ell-torsion of a semistable elliptic curve with
    good reduction above ell_E.  Empty here reads "E[ell] is irreducible"."""
    thr_a, thr_b = ec_irred_thresholds(inv, ell_E)
    gate = [("ell_does_not_split_in_K", not ps.splits_in_K)]
    return _two_situations("Ell", ell, ps, thr_a, thr_b, inv.d, gate)


def decide_etale(
    inv: FieldInvariants, b_w: int, ell_X: int, w: int, ell: int, ps: PrimeSituation
) -> Verdict:
    """Residual-Borel exclusion for odd-degree etale cohomology of Betti
    number b_w with good reduction above ell_X.  Empty here reads "the
    cohomology group is not residually Borel"."""
    thr_a, thr_b = etale_thresholds(inv, b_w, ell_X, w)
    gate = [("ell_does_not_split_in_K", not ps.splits_in_K)]
    return _two_situations("Et", ell, ps, thr_a, thr_b, inv.d, gate)


def _two_situations(
    theorem: str,
    ell: int,
    ps: PrimeSituation,
    thr_a: int,
    thr_b: int,
    d: int,
    gate: list[tuple[str, bool]],
) -> Verdict:
    situations = [
        ("a", [("ell_not_dividing_disc", not ps.divides_disc),
               ("ell_gt_threshold", ell > thr_a)], thr_a),
        ("b", [("degree_odd", d % 2 == 1),
               ("ell_gt_threshold", ell > thr_b)], thr_b),
    ]
    for label, hyps, threshold in situations:
        all_hyps = gate + hyps
        if all(v for _, v in all_hyps):
            return Verdict("Empty", theorem, label, threshold, tuple(all_hyps))
    full = list(gate)
    for label, hyps, _ in situations:
        full.extend((f"{label}:{name}", v) for name, v in hyps)
    return Verdict("NotDecided", theorem, None, 0, tuple(full))


def parity_obstruction(e: int, w: int, r: int, n: int) -> str:
    """Which contradiction refutes a hypothetical uniform tame weight e*w/2.

    NonIntegral: e*w odd, so e*w/2 is not an integer.
    RangeExceeded: w/2 > r, outside the semistable weight range [0, e*r].
    DivisibilityFails: the weight sum n*e*w/2 is not divisible by e.
    """
    if e < 1:
        raise ValueError("e must be positive")
    if (e * w) % 2 == 1:
        return "NonIntegral"
    if Fraction(w, 2) > r:
        return "RangeExceeded"
    if (n * e * w // 2) % e != 0:
        return "DivisibilityFails"
    return "None"
