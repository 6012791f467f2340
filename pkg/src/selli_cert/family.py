"""The superelliptic curve family

    y^d2 = a*x^d1 + m*x*y - m^2 - b,    d2 = 2d with d prime,

and its torsion-candidate pipeline: hypothesis validation, the discriminant
profile Delta(f)(y), the finite candidate box for torsion y-coordinates, and
rational-point elimination for each surviving candidate.

Two readings of the x-coefficient are implemented.  Under the `standard`
convention the defining polynomial is the cubic-in-x (a, 0, m*y, -(m^2+b)),
so for d1 = 3 the discriminant is c3*y^3 + c0 with c3 = -4a*m^3.  The
`paper-ex2` convention reads the x-coefficient as y alone (c3 = -4a), which
reproduces the published worked example for m = 2; neither reading is
asserted as canonical, and certificates record which one was used plus a
comparison block whenever the two diverge.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import jacobian
from .arith import factorize, is_prime
from .errors import HypothesisError, ParameterError
from .polyring import IntPolynomial, Rational, discriminant, rational_roots

__all__ = [
    "FamilyParams",
    "DiscriminantProfile",
    "CandidateSet",
    "CandidateRecord",
    "EliminationRecord",
    "validate_params",
    "discriminant_profile",
    "delta_of_y",
    "y_bound",
    "y_candidates",
    "fixed_delta_candidates",
    "eliminate_points",
    "torsion_report",
]

CONVENTIONS = ("standard", "paper-ex2")

# Structural hypotheses on the family, validated all-at-once.  H6 (the
# assumed integrality property of torsion points on the quotient curve) is
# not checkable and surfaces as an assumption tag instead of a violation.
ASSUMPTION_NL = "NL-property-C1"
ASSUMPTION_INFINITY = "INFINITY-MODEL"
ASSUMPTION_GENUS = "GENUS-USER"


@dataclass(frozen=True)
class FamilyParams:
    a: int
    m: int
    d1: int
    d2: int
    b: int
    d: int
    b_explicit: bool = False


def _odd_power_of_three_exponent(t: int) -> int | None:
    """Exponent m' if t = 3^m' with m' odd and >= 1, else None."""
    if t < 3:
        return None
    e = 0
    while t % 3 == 0:
        t //= 3
        e += 1
    if t != 1 or e % 2 == 0:
        return None
    return e


def validate_params(
    a: int, m: int, d1: int, d2: int, b_override: int | None = None
) -> FamilyParams:
    """Check every structural hypothesis, reporting all violations at once.

    H1  d1 >= 3, odd, divisible by 3
    H2  d2 = 2d with d prime and gcd(d1, d) = 1
    H3  a == 1 (mod 12)
    H4  b = 2^d1*a - 3, or an explicit override of the form 2^d1*a - 3^m'
        with odd m' >= 1
    H5  discriminant not identically zero: a != 0 and m^2 + b != 0
    """
    violations: list[tuple[str, str]] = []
    if d1 < 3 or d1 % 2 == 0 or d1 % 3 != 0:
        violations.append(("H1", f"d1 = {d1} must be an odd multiple of 3, at least 3"))
    d = d2 // 2
    if d2 < 4 or d2 % 2 != 0 or not is_prime(d):
        violations.append(("H2", f"d2 = {d2} must equal 2d with d prime"))
    elif gcd(d1, d) != 1:
        violations.append(("H2", f"gcd(d1, d) = gcd({d1}, {d}) must be 1"))
    if a % 12 != 1:
        violations.append(("H3", f"a = {a} must be congruent to 1 mod 12"))
    if b_override is None:
        b = 2**d1 * a - 3
    else:
        b = b_override
        exponent = _odd_power_of_three_exponent(2**d1 * a - b)
        if exponent is None:
            violations.append(
                ("H4", f"b = {b} is not of the form 2^{d1}*{a} - 3^m' with odd m'")
            )
    if a == 0 or m * m + b == 0:
        violations.append(("H5", "discriminant vanishes identically (a = 0 or m^2 + b = 0)"))
    if violations:
        raise HypothesisError(violations)
    return FamilyParams(
        a=a, m=m, d1=d1, d2=d2, b=b, d=d, b_explicit=b_override is not None
    )


@dataclass(frozen=True)
class DiscriminantProfile:
    params: FamilyParams
    convention: str
    c3: int | None  # closed form c3*y^3 + c0, only for d1 = 3
    c0: int | None
    lead_abs: int  # |leading coefficient| of Delta(f)(y) as polynomial in y
    const_abs: int  # |constant term|
    y_degree: int  # degree of Delta(f)(y) in y (= d1)


def _xcoeff_scale(params: FamilyParams, convention: str) -> int:
    """Multiplier s in the x-coefficient s*y of the defining cubic."""
    if convention == "standard":
        return params.m
    if convention == "paper-ex2":
        return 1
    raise ParameterError(f"unknown convention {convention!r}")


def discriminant_profile(
    params: FamilyParams, convention: str = "standard"
) -> DiscriminantProfile:
    a, m, b, d1 = params.a, params.m, params.b, params.d1
    s = _xcoeff_scale(params, convention)
    const = m * m + b
    if const == 0 or a == 0:
        raise ParameterError("discriminant vanishes identically")
    if d1 == 3:
        c3 = -4 * a * s**3
        c0 = -27 * a * a * const * const
        return DiscriminantProfile(
            params=params,
            convention=convention,
            c3=c3,
            c0=c0,
            lead_abs=abs(c3),
            const_abs=abs(c0),
            y_degree=3,
        )
    # d1 > 3: the trinomial a*x^d1 + (s*y)*x - const has discriminant
    # sign * (d1^d1 * (-const)^(d1-1) * a^(d1-1)
    #         + (-1)^(d1-1) * (d1-1)^(d1-1) * (s*y)^d1 * a^(d1-2))
    # with sign = (-1)^(d1(d1-1)/2); only the extreme coefficients are
    # needed for the growth bound, values come from the resultant per y.
    sign = (-1) ** (d1 * (d1 - 1) // 2)
    lead = sign * (-1) ** (d1 - 1) * (d1 - 1) ** (d1 - 1) * s**d1 * a ** (d1 - 2)
    c0_general = sign * d1**d1 * (-const) ** (d1 - 1) * a ** (d1 - 1)
    return DiscriminantProfile(
        params=params,
        convention=convention,
        c3=None,
        c0=None,
        lead_abs=abs(lead),
        const_abs=abs(c0_general),
        y_degree=d1,
    )


def _specialized_poly(profile: DiscriminantProfile, y: int) -> IntPolynomial:
    p = profile.params
    s = _xcoeff_scale(p, profile.convention)
    coeffs = [0] * (p.d1 + 1)
    coeffs[0] = -(p.m * p.m + p.b)
    coeffs[1] = s * y
    coeffs[p.d1] = p.a
    return IntPolynomial.from_coefficients(coeffs)


def delta_of_y(profile: DiscriminantProfile, y: int) -> int:
    """Exact Delta(f)(y): closed form for d1 = 3, resultant route otherwise."""
    if profile.c3 is not None:
        return profile.c3 * y**3 + profile.c0
    return discriminant(_specialized_poly(profile, y))


def y_bound(profile: DiscriminantProfile) -> int:
    """Minimal Y with |y|^d2 > |Delta(f)(y)| for every |y| > Y.

    Uses the majorant h(t) = t^d2 - L*t^deg - C with L = |leading|,
    C = |constant| of Delta as a polynomial in y.  Since d2 > deg and
    C > 0, h has exactly one sign change on t > 0; the largest integer t
    with h(t) <= 0 is found by doubling then bisection.
    """
    d2 = profile.params.d2
    if d2 <= 3:
        raise ParameterError("growth bound needs d2 >= 4")
    if d2 <= profile.y_degree:
        raise ParameterError(
            f"growth bound needs d2 > deg_y Delta = {profile.y_degree}"
        )
    lead, const, deg = profile.lead_abs, profile.const_abs, profile.y_degree

    def h(t: int) -> int:
        return t**d2 - lead * t**deg - const

    hi = 1
    while h(hi) <= 0:
        hi *= 2
    lo = hi // 2  # h(lo) <= 0 < h(hi); also handles hi == 1 (lo=0, h(0) = -C <= 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if h(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class CandidateRecord:
    y: int
    delta_value: int
    passes_divisibility: bool


@dataclass(frozen=True)
class CandidateSet:
    y_max: int
    candidates: tuple[CandidateRecord, ...]
    surviving: tuple[int, ...]
    boundary_y: int  # witness |y| = y_max + 1
    boundary_lhs: int  # |y|^d2 at the witness
    boundary_rhs: int  # |Delta(f)(y)| at the witness (max over both signs)
    zero_reason: str


def y_candidates(profile: DiscriminantProfile) -> CandidateSet:
    """Test y^d2 | Delta(f)(y) for every 0 < |y| <= y_bound.

    y = 0 is excluded with an explicit reason: Delta(f)(0) != 0 while
    0^d2 divides only 0.  Divisibility is on signed values; the sign is
    irrelevant and normalized away.
    """
    d2 = profile.params.d2
    y_max = y_bound(profile)
    records = []
    surviving = []
    for y in range(-y_max, y_max + 1):
        if y == 0:
            continue
        value = delta_of_y(profile, y)
        passes = value % y**d2 == 0  # 0 is divisible by anything nonzero
        records.append(CandidateRecord(y=y, delta_value=value, passes_divisibility=passes))
        if passes:
            surviving.append(y)
    witness = y_max + 1
    rhs = max(abs(delta_of_y(profile, witness)), abs(delta_of_y(profile, -witness)))
    return CandidateSet(
        y_max=y_max,
        candidates=tuple(records),
        surviving=tuple(sorted(surviving)),
        boundary_y=witness,
        boundary_lhs=witness**d2,
        boundary_rhs=rhs,
        zero_reason="Delta(f)(0) != 0 and 0^d2 divides only 0",
    )


def fixed_delta_candidates(delta: int, d2: int, *, budget: int = 10**6) -> list[int]:
    """All y with y^d2 | delta for a fixed nonzero delta.

    From the factorization of |delta|, each prime may appear in y with
    exponent at most floor(v_p(delta) / d2); candidates are all signed
    products within those caps, sorted ascending.
    """
    if delta == 0:
        raise ParameterError("delta must be nonzero")
    if d2 < 1:
        raise ParameterError("d2 must be positive")
    values = [1]
    for p, e in factorize(delta, budget=budget).items():
        cap = e // d2
        if cap:
            values = [v * p**i for v in values for i in range(cap + 1)]
    return sorted({s * v for v in values for s in (1, -1)})


@dataclass(frozen=True)
class EliminationRecord:
    y0: int
    reduced_cubic: IntPolynomial
    rational_x: tuple[Rational, ...]
    eliminated: bool


def elimination_polynomial(
    params: FamilyParams, y0: int, convention: str = "standard"
) -> IntPolynomial:
    """Substituting y = y0 into the defining equation gives
    a*x^d1 + (s*y0)*x - (m^2 + b + y0^d2) = 0 with s per convention."""
    s = _xcoeff_scale(params, convention)
    coeffs = [0] * (params.d1 + 1)
    coeffs[0] = -(params.m * params.m + params.b + y0**params.d2)
    coeffs[1] = s * y0
    coeffs[params.d1] = params.a
    return IntPolynomial.from_coefficients(coeffs)


def eliminate_points(
    params: FamilyParams,
    candidates: CandidateSet,
    convention: str = "standard",
) -> list[EliminationRecord]:
    """Search each surviving y0 for rational x with (x, y0) on the curve."""
    out = []
    for y0 in candidates.surviving:
        poly = elimination_polynomial(params, y0, convention)
        roots = tuple(rational_roots(poly))
        out.append(
            EliminationRecord(
                y0=y0,
                reduced_cubic=poly,
                rational_x=roots,
                eliminated=not roots,
            )
        )
    return out


def torsion_report(
    params: FamilyParams,
    convention: str = "standard",
    *,
    genus: "jacobian.GenusSpec | None" = None,
    prime_bound: int | None = None,
    infinity_count: int = 1,
    budget: int = 10**8,
    threads: int = 1,
):
    """Full torsion-triviality pipeline; returns a TorsionCertificate.

    Route 1: if every surviving candidate is eliminated by rational-root
    search, torsion is trivial by point elimination.  Route 2: otherwise,
    scan for two good primes with coprime reduced-Jacobian orders.  If
    neither route lands, the conclusion is INCONCLUSIVE with the surviving
    points listed; triviality is never claimed without evidence.
    """
    from .certificates import build_torsion_certificate

    return build_torsion_certificate(
        params,
        convention,
        genus=genus,
        prime_bound=prime_bound,
        infinity_count=infinity_count,
        budget=budget,
        threads=threads,
    )
