"""Self-contained, canonically serialized certificates for both pipelines.

Every certificate embeds all inputs needed for independent re-checking,
records the assumptions its conclusion is conditional on, and carries
computed-vs-claimed replication evidence verbatim; divergences surface as
first-class `discrepancies` entries, never silently.

Canonical JSON: sorted keys, arbitrary-precision integers rendered exactly,
rationals as "p/q" strings, stable across runs and thread counts.  The
`timing` field is None unless explicitly requested, precisely so default
output is byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from . import jacobian as jac
from .diophantine import (
    DioParams,
    ObstructionCertificate,
    bounded_search,
    mod4_obstruction,
    obstruction_sweep,
    parity_claim_check,
    qr_law_check,
)
from .errors import ParameterError
from .family import (
    ASSUMPTION_GENUS,
    ASSUMPTION_INFINITY,
    ASSUMPTION_NL,
    CandidateSet,
    DiscriminantProfile,
    EliminationRecord,
    FamilyParams,
    discriminant_profile,
    eliminate_points,
    y_candidates,
)
from .ffield import CurveEquation, PointCountTable

SCHEMA = "selli-cert/1"
TORSION_KIND = "torsion-triviality"
DIO_KIND = "diophantine-insolubility"
TOOL_VERSION = "0.1.0"

CONCLUSION_ELIMINATION = "TRIVIAL_BY_POINT_ELIMINATION"
CONCLUSION_COPRIME = "TRIVIAL_BY_COPRIME_ORDERS"
CONCLUSION_INCONCLUSIVE = "INCONCLUSIVE"

# Discrepancy codes (stable strings; see README for meanings)
DISCREPANCY_CONVENTION = "xcoeff-convention-divergence"
DISCREPANCY_DIFF_TABLE = "mod4-difference-table"
DISCREPANCY_SUM_TABLE = "mod4-sum-table"
DISCREPANCY_PARITY = "parity-table"
DISCREPANCY_QR = "qr-law"

DEFAULT_PRIME_BOUND = 100
DEFAULT_QR_BOUND = 10**4


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# ---- torsion certificate ----

@dataclass(frozen=True)
class TorsionCertificate:
    params: FamilyParams
    convention: str
    profile: DiscriminantProfile
    convention_comparison: dict | None
    candidate_set: CandidateSet
    elimination: tuple[EliminationRecord, ...]
    conclusion: str
    genus: "jac.GenusSpec | None"
    infinity_count: int | None
    prime_scan: "jac.PrimeScan | None"
    assumptions: tuple[str, ...]
    discrepancies: tuple[str, ...]
    inconclusive_reason: str | None
    timing: float | None = None

    def to_dict(self) -> dict:
        p = self.params
        cs = self.candidate_set
        return {
            "schema": SCHEMA,
            "kind": TORSION_KIND,
            "tool_version": TOOL_VERSION,
            "params": {
                "a": p.a,
                "m": p.m,
                "d1": p.d1,
                "d2": p.d2,
                "b": p.b,
                "d": p.d,
                "b_explicit": p.b_explicit,
            },
            "convention": self.convention,
            "profile": {
                "c3": self.profile.c3,
                "c0": self.profile.c0,
                "lead_abs": self.profile.lead_abs,
                "const_abs": self.profile.const_abs,
                "y_degree": self.profile.y_degree,
            },
            "convention_comparison": self.convention_comparison,
            "y_max": cs.y_max,
            "boundary": {
                "y": cs.boundary_y,
                "lhs": cs.boundary_lhs,
                "rhs": cs.boundary_rhs,
            },
            "zero_reason": cs.zero_reason,
            "candidates": [
                {"y": r.y, "delta": r.delta_value, "passes": r.passes_divisibility}
                for r in cs.candidates
            ],
            "surviving": list(cs.surviving),
            "elimination": [
                {
                    "y0": r.y0,
                    "cubic": list(r.reduced_cubic.coefficients),
                    "rational_x": [str(x) for x in r.rational_x],
                    "eliminated": r.eliminated,
                }
                for r in self.elimination
            ],
            "conclusion": self.conclusion,
            "genus": None
            if self.genus is None
            else {"g": self.genus.g, "source": self.genus.source},
            "infinity_count": self.infinity_count,
            "prime_scan": _scan_dict(self.prime_scan),
            "assumptions": sorted(self.assumptions),
            "discrepancies": sorted(self.discrepancies),
            "inconclusive_reason": self.inconclusive_reason,
            "timing": self.timing,
        }


def _counts_dict(table: PointCountTable | None) -> dict | None:
    if table is None:
        return None
    return {
        "entries": [[k, n] for k, n in table.entries],
        "infinity_count": table.infinity_count,
    }


def _scan_dict(scan: "jac.PrimeScan | None") -> dict | None:
    if scan is None:
        return None
    cert = scan.certificate
    return {
        "prime_bound": scan.prime_bound,
        "records": [
            {
                "p": r.p,
                "status": r.status,
                "reason": r.reason,
                "order": r.order,
                "counts": _counts_dict(r.counts),
            }
            for r in scan.records
        ],
        "certificate": None
        if cert is None
        else {
            "p1": cert.p1,
            "p2": cert.p2,
            "order1": cert.order1,
            "order2": cert.order2,
            "gcd": cert.gcd_value,
            "counts1": _counts_dict(cert.counts1),
            "counts2": _counts_dict(cert.counts2),
        },
    }


def build_torsion_certificate(
    params: FamilyParams,
    convention: str = "standard",
    *,
    genus: "jac.GenusSpec | None" = None,
    prime_bound: int | None = None,
    infinity_count: int = 1,
    budget: int = 10**8,
    threads: int = 1,
) -> TorsionCertificate:
    """Run the torsion pipeline and assemble its certificate.

    Point elimination is always attempted first.  The coprime-order route
    runs only when elimination leaves survivors; it needs a genus, which
    the curve's mixed x*y term prevents deriving by formula, so for m != 0
    the caller must supply one (tagged GENUS-USER) or the outcome is
    honestly INCONCLUSIVE.
    """
    profile = discriminant_profile(params, convention)
    candidates = y_candidates(profile)
    elimination = tuple(eliminate_points(params, candidates, convention))

    comparison = None
    discrepancies: list[str] = []
    if params.m != 1:
        std = discriminant_profile(params, "standard")
        alt = discriminant_profile(params, "paper-ex2")
        comparison = {
            "standard": {"c3": std.c3, "c0": std.c0},
            "paper-ex2": {"c3": alt.c3, "c0": alt.c0},
        }
        if convention == "standard":
            discrepancies.append(DISCREPANCY_CONVENTION)

    assumptions = [ASSUMPTION_NL]
    genus_used: "jac.GenusSpec | None" = None
    scan = None
    inconclusive_reason = None
    infinity_used: int | None = None

    if all(r.eliminated for r in elimination):
        conclusion = CONCLUSION_ELIMINATION
    else:
        genus_used = genus
        if genus_used is None:
            if params.m == 0:
                genus_used = jac.genus_superelliptic(params.d2, params.d1)
            else:
                conclusion = CONCLUSION_INCONCLUSIVE
                inconclusive_reason = (
                    "survivors not eliminated and no genus available: the mixed "
                    "x*y term rules out the superelliptic genus formula, supply "
                    "genus explicitly to enable the coprime-order route"
                )
        if genus_used is not None:
            if genus_used.source == jac.GENUS_USER:
                assumptions.append(ASSUMPTION_GENUS)
            assumptions.append(ASSUMPTION_INFINITY)
            infinity_used = infinity_count
            curve = CurveEquation.from_family(params, convention)
            scan = jac.find_certificate_primes(
                curve,
                genus_used,
                prime_bound if prime_bound is not None else DEFAULT_PRIME_BOUND,
                infinity_count=infinity_count,
                budget=budget,
                threads=threads,
            )
            if scan.certificate is not None:
                conclusion = CONCLUSION_COPRIME
            else:
                conclusion = CONCLUSION_INCONCLUSIVE
                inconclusive_reason = (
                    "survivors not eliminated and the prime scan found no "
                    "coprime-order pair within the bound"
                )

    return TorsionCertificate(
        params=params,
        convention=convention,
        profile=profile,
        convention_comparison=comparison,
        candidate_set=candidates,
        elimination=elimination,
        conclusion=conclusion,
        genus=genus_used,
        infinity_count=infinity_used,
        prime_scan=scan,
        assumptions=tuple(assumptions),
        discrepancies=tuple(discrepancies),
        inconclusive_reason=inconclusive_reason,
    )


# ---- diophantine certificate ----

@dataclass(frozen=True)
class DioCertificate:
    params: DioParams
    box: int
    solutions: tuple[tuple[int, int, int], ...]
    sweep_bound: int
    sweep_smallest: tuple[int | None, ...]
    sweep_certificates: tuple[ObstructionCertificate | None, ...]
    replication: dict
    discrepancies: tuple[str, ...]
    timing: float | None = None

    def to_dict(self) -> dict:
        p = self.params
        return {
            "schema": SCHEMA,
            "kind": DIO_KIND,
            "tool_version": TOOL_VERSION,
            "params": {
                "a": p.a,
                "b": p.b,
                "d1": p.d1,
                "d2": p.d2,
                "b_mode": p.b_mode,
                "m_prime": p.m_prime,
            },
            "search": {
                "box": self.box,
                "solutions": [list(s) for s in self.solutions],
            },
            "obstructions": {
                "modulus_bound": self.sweep_bound,
                "classes": [
                    {
                        "r": r,
                        "smallest_modulus": self.sweep_smallest[r],
                        "tuples_checked": None
                        if self.sweep_certificates[r] is None
                        else self.sweep_certificates[r].tuples_checked,
                    }
                    for r in range(12)
                ],
            },
            "replication": self.replication,
            "discrepancies": sorted(self.discrepancies),
            "timing": self.timing,
        }


def build_dio_certificate(
    params: DioParams,
    *,
    box: int = 30,
    modulus_bound: int = 360,
    qr_bound: int = DEFAULT_QR_BOUND,
) -> DioCertificate:
    """Bounded search plus obstruction sweep plus claim replication.

    The replication block stores computed evidence next to the claim it is
    measured against; `matches` false adds a discrepancy code.  The claims
    themselves assert that residue 3 is unattainable by both mod-4 tables,
    that the parity table's only solution is the origin, and that the
    quadratic-residue law for 3 holds.
    """
    solutions = tuple(bounded_search(params, box))
    sweep = obstruction_sweep(params, modulus_bound)
    tables = mod4_obstruction()
    parity = parity_claim_check()
    qr_holds = qr_law_check(qr_bound)

    replication = {
        "squares_mod4": {"attained": list(tables.squares_attained)},
        "sum_mod4": {
            "attained": list(tables.sum_attained),
            "claim_obstructs_3": True,
            "matches": tables.sum_obstructs_3,
        },
        "diff_mod4": {
            "attained": list(tables.diff_attained),
            "claim_obstructs_3": True,
            "matches": tables.diff_obstructs_3,
        },
        "parity": {
            "solutions": [list(s) for s in parity.solutions],
            "claim_only_origin": True,
            "matches": parity.only_origin,
        },
        "qr_law": {
            "prime_bound": qr_bound,
            "holds": qr_holds,
            "claim_holds": True,
            "matches": qr_holds,
        },
    }
    discrepancies = []
    if not tables.sum_obstructs_3:
        discrepancies.append(DISCREPANCY_SUM_TABLE)
    if not tables.diff_obstructs_3:
        discrepancies.append(DISCREPANCY_DIFF_TABLE)
    if not parity.only_origin:
        discrepancies.append(DISCREPANCY_PARITY)
    if not qr_holds:
        discrepancies.append(DISCREPANCY_QR)

    return DioCertificate(
        params=params,
        box=box,
        solutions=solutions,
        sweep_bound=sweep.modulus_bound,
        sweep_smallest=sweep.smallest_modulus,
        sweep_certificates=sweep.certificates,
        replication=replication,
        discrepancies=tuple(discrepancies),
    )
