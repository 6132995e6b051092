"""Named, exactly checkable determinantal identities.

Every check reduces to a polynomial that must be identically zero: either
a free-ring difference, or the Segre image of a difference when the claim
only holds modulo (a*d - b*c).  There are no tolerances.

The check functions take their matrices/certificates as optional arguments
so that tests can feed perturbed inputs through the same code path.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .linalg import PolyMatrix, determinant, mat_apply_hom
from .parse import poly_parse
from .poly import Homomorphism, Polynomial, RingSpec
from .ringmaps import (
    MembershipCertificate,
    certificate_residual,
    segre_context,
    segre_image,
)

__all__ = [
    "VerificationReport",
    "CLAIMS",
    "CLAIM_GROUPS",
    "TEMPLATE_RING",
    "template_matrix",
    "swan_towber_matrix",
    "proposition_matrix",
    "section3_matrix",
    "verify_swan_towber",
    "verify_swan_towber_unimodular",
    "verify_main_identity",
    "verify_template_consistency",
    "verify_section3_determinant",
    "section3_free_residual",
    "verify_section3_auxiliary",
    "verify_kernel_columns",
    "verify",
    "run_all",
]

AUX = ("s", "t", "u", "v", "w", "x", "y", "z")

SWAN_TOWBER_RING = RingSpec(("a", "b", "c", "p", "q", "r"))
PROPOSITION_RING = RingSpec(("g", "h", "j", "k") + AUX)
SECTION3_RING = RingSpec(("a", "b", "c", "d") + AUX)
RELATION_RING = RingSpec(("a", "b", "c", "d", "p", "q", "r"))
TEMPLATE_RING = RingSpec(("A", "B", "C", "D") + AUX)


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    residual: Polynomial
    elapsed: float  # seconds

    @property
    def passed(self) -> bool:
        return self.residual.is_zero

    @property
    def residual_terms(self) -> int:
        return len(self.residual)

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "passed": self.passed,
            "residual_terms": self.residual_terms,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def _matrix(ring: RingSpec, rows: Sequence[Sequence[str]]) -> PolyMatrix:
    return PolyMatrix.from_rows(ring, [[poly_parse(e, ring) for e in row] for row in rows])


def swan_towber_matrix() -> PolyMatrix:
    return _matrix(
        SWAN_TOWBER_RING,
        [
            ["a^2", "b + a*r", "c - a*q"],
            ["b", "-r^2 + b*p*r", "p + q*r + c*p*r"],
            ["c", "-p + q*r - b*p*q", "-q^2 - c*p*q"],
        ],
    )


def swan_towber_rhs() -> Polynomial:
    return poly_parse("(p*a + q*b + r*c)^2", SWAN_TOWBER_RING)


def proposition_matrix() -> PolyMatrix:
    """The 12-indeterminate matrix, entries exactly as published."""
    return _matrix(
        PROPOSITION_RING,
        [
            ["g*j", "g^2*j^2*x + h^2*j^2*z - h*j*v", "g^2*k^2*x + h^2*k^2*z + h*j*u"],
            ["g*k + h*j", "g*j*t - h*k*v", "h*k*u - g*j*s"],
            ["h*k", "g^2*j^2*w + h^2*j^2*y + g*k*t", "g^2*k^2*w + h^2*k^2*y - g*k*s"],
        ],
    )


def proposition_rhs() -> Polynomial:
    return poly_parse(
        "(g^2*j^2*s + g^2*k^2*t + h^2*j^2*u + h^2*k^2*v)"
        "*(g^2*j^2*w + g^2*k^2*x + h^2*j^2*y + h^2*k^2*z)",
        PROPOSITION_RING,
    )


def section3_matrix() -> PolyMatrix:
    """Completion of the unimodular row (a, b+c, d), entries as published."""
    return _matrix(
        SECTION3_RING,
        [
            ["a", "a^2*x + c^2*z - c*v", "b^2*x + d^2*z + c*u"],
            ["b + c", "a*t - d*v", "d*u - a*s"],
            ["d", "a^2*w + c^2*y + b*t", "b^2*w + d^2*y - b*s"],
        ],
    )


def section3_rhs() -> Polynomial:
    return poly_parse(
        "(a^2*s + b^2*t + c^2*u + d^2*v)*(a^2*w + b^2*x + c^2*y + d^2*z)",
        SECTION3_RING,
    )


@lru_cache(maxsize=None)
def template_matrix() -> PolyMatrix:
    """Single 3x3 template specialising to both published matrices.

    A, B, C, D stand for g*j, g*k, h*j, h*k (or a, b, c, d); its first
    column is (A, B + C, D).
    """
    return _matrix(
        TEMPLATE_RING,
        [
            ["A", "A^2*x + C^2*z - C*v", "B^2*x + D^2*z + C*u"],
            ["B + C", "A*t - D*v", "D*u - A*s"],
            ["D", "A^2*w + C^2*y + B*t", "B^2*w + D^2*y - B*s"],
        ],
    )


def template_to_segre() -> Homomorphism:
    R = PROPOSITION_RING
    g, h, j, k = (R.var(v) for v in "ghjk")
    return Homomorphism.by_name(TEMPLATE_RING, R, A=g * j, B=g * k, C=h * j, D=h * k)


def template_to_section3() -> Homomorphism:
    R = SECTION3_RING
    return Homomorphism.by_name(
        TEMPLATE_RING, R, A=R.var("a"), B=R.var("b"), C=R.var("c"), D=R.var("d")
    )


def _timed(claim_id: str, fn: Callable[[], Polynomial]) -> VerificationReport:
    start = time.perf_counter()
    residual = fn()
    return VerificationReport(claim_id, residual, time.perf_counter() - start)


def verify_swan_towber(matrix: PolyMatrix | None = None) -> VerificationReport:
    m = matrix if matrix is not None else swan_towber_matrix()
    return _timed("swan-towber", lambda: determinant(m) - swan_towber_rhs())


def swan_towber_certificate() -> MembershipCertificate:
    # det - (pa+qb+rc)^2 factors as ap(bq+cr)(pa+qb+rc-1): the printed matrix is
    # only correct modulo the unimodular relation pa+qb+rc = 1.
    R = SWAN_TOWBER_RING
    return MembershipCertificate(
        [(poly_parse("a*p*(b*q + c*r)", R), poly_parse("p*a + q*b + r*c - 1", R))]
    )


def verify_swan_towber_unimodular(matrix: PolyMatrix | None = None) -> VerificationReport:
    """Same identity, checked modulo pa + qb + rc - 1 with an explicit cofactor."""
    m = matrix if matrix is not None else swan_towber_matrix()
    cert = swan_towber_certificate()
    return _timed(
        "swan-towber-unimodular",
        lambda: certificate_residual(determinant(m) - swan_towber_rhs(), cert),
    )


def verify_main_identity(matrix: PolyMatrix | None = None) -> VerificationReport:
    m = matrix if matrix is not None else proposition_matrix()
    return _timed("main-identity", lambda: determinant(m) - proposition_rhs())


# Both consistency checks are folded into one residual over a joint ring; the
# difference at slot n is multiplied by slot^n so distinct entries cannot cancel.
_JOINT_RING = RingSpec(("slot", "a", "b", "c", "d", "g", "h", "j", "k") + AUX)


def verify_template_consistency(template: PolyMatrix | None = None) -> VerificationReport:
    t = template if template is not None else template_matrix()

    def residual() -> Polynomial:
        slot = _JOINT_RING.var("slot")
        total = _JOINT_RING.zero()
        n = 1
        for h, published in (
            (template_to_segre(), proposition_matrix()),
            (template_to_section3(), section3_matrix()),
        ):
            image = mat_apply_hom(h, t)
            include = Homomorphism.by_name(published.ring, _JOINT_RING)
            for got, want in zip(image.entries, published.entries):
                total = total + slot**n * include(got - want)
                n += 1
        return total

    return _timed("template-consistency", residual)


def section3_free_residual(matrix: PolyMatrix | None = None) -> Polynomial:
    """det - product in the free ring; nonzero, since equality needs ad = bc."""
    m = matrix if matrix is not None else mat_apply_hom(template_to_section3(), template_matrix())
    return determinant(m) - section3_rhs()


def verify_section3_determinant(matrix: PolyMatrix | None = None) -> VerificationReport:
    ctx = segre_context(AUX)
    return _timed(
        "section3-determinant", lambda: segre_image(ctx, section3_free_residual(matrix))
    )


def relation_generators() -> tuple[Polynomial, Polynomial]:
    """Defining relations of the ring A: unimodularity of (a, b+c, d) and ad = bc."""
    R = RELATION_RING
    return (poly_parse("p*a + q*(b + c) + r*d - 1", R), poly_parse("a*d - b*c", R))


def section3_auxiliary_identities() -> dict[str, Polynomial]:
    """LHS - RHS of the two rewriting identities used to compute (a,b)^2 = (a^2,b^2)."""
    R = RELATION_RING
    return {
        "section3-aux-ab": poly_parse("a*b - (a^2*(p*b + q*d) + b^2*(q*a + r*c))", R),
        "section3-aux-ac": poly_parse("a*c - (a^2*(p*c + q*d) + c^2*(q*a + r*b))", R),
    }


def section3_auxiliary_certificates() -> dict[str, MembershipCertificate]:
    # Derivation for ab: multiply the unimodular relation by ab, then
    #   a^2(pb+qd) + b^2(qa+rc) - ab*unimod = qa^2d + rb^2c - qabc - rabd + ab
    #                                       = (qa - rb)(ad - bc) + ab,
    # so ab - RHS = -ab*unimod + (rb - qa)*(ad - bc).  The ac case is the
    # same computation with b and c exchanged in the cofactors.
    R = RELATION_RING
    unimod, det = relation_generators()
    return {
        "section3-aux-ab": MembershipCertificate(
            [(poly_parse("-a*b", R), unimod), (poly_parse("r*b - q*a", R), det)]
        ),
        "section3-aux-ac": MembershipCertificate(
            [(poly_parse("-a*c", R), unimod), (poly_parse("r*c - q*a", R), det)]
        ),
    }


def verify_section3_auxiliary(
    certificates: dict[str, MembershipCertificate] | None = None,
) -> list[VerificationReport]:
    certs = certificates if certificates is not None else section3_auxiliary_certificates()
    identities = section3_auxiliary_identities()
    return [
        _timed(claim_id, lambda p=p, c=certs[claim_id]: certificate_residual(p, c))
        for claim_id, p in identities.items()
    ]


def k_kernel_matrix() -> PolyMatrix:
    """Claimed generators of ker(e1 -> a^2, e2 -> b^2) as columns."""
    return _matrix(SECTION3_RING, [["-b^2", "-d^2"], ["a^2", "c^2"]])


def l_kernel_matrix() -> PolyMatrix:
    """Claimed generators of ker(e1 -> b^2, e2 -> -ab, e3 -> a^2) as columns."""
    return _matrix(
        SECTION3_RING,
        [["c", "-a", "0", "0"], ["d", "-b", "-c", "a"], ["0", "0", "-d", "b"]],
    )


def verify_kernel_columns(
    k_matrix: PolyMatrix | None = None, l_matrix: PolyMatrix | None = None
) -> list[VerificationReport]:
    """Containment only: each listed column maps to zero modulo (ad - bc)."""
    R = SECTION3_RING
    ctx = segre_context(AUX)
    km = k_matrix if k_matrix is not None else k_kernel_matrix()
    lm = l_matrix if l_matrix is not None else l_kernel_matrix()
    k_map = (poly_parse("a^2", R), poly_parse("b^2", R))
    l_map = (poly_parse("b^2", R), poly_parse("-a*b", R), poly_parse("a^2", R))

    def image(weights: Sequence[Polynomial], column: Sequence[Polynomial]) -> Polynomial:
        total = R.zero()
        for w, x in zip(weights, column):
            total = total + w * x
        return segre_image(ctx, total)

    reports = []
    for j in range(km.cols):
        col = km.column(j)
        reports.append(_timed(f"kernel-K-{j + 1}", lambda col=col: image(k_map, col)))
    for j in range(lm.cols):
        col = lm.column(j)
        reports.append(_timed(f"kernel-L-{j + 1}", lambda col=col: image(l_map, col)))
    return reports


# Declaration order is report order.
CLAIM_GROUPS: dict[str, Callable[[], list[VerificationReport]]] = {
    "swan-towber": lambda: [verify_swan_towber()],
    "swan-towber-unimodular": lambda: [verify_swan_towber_unimodular()],
    "main-identity": lambda: [verify_main_identity()],
    "template-consistency": lambda: [verify_template_consistency()],
    "section3-determinant": lambda: [verify_section3_determinant()],
    "section3-auxiliary": verify_section3_auxiliary,
    "kernel-columns": verify_kernel_columns,
}

CLAIMS: tuple[str, ...] = (
    "swan-towber",
    "swan-towber-unimodular",
    "main-identity",
    "template-consistency",
    "section3-determinant",
    "section3-aux-ab",
    "section3-aux-ac",
    "kernel-K-1",
    "kernel-K-2",
    "kernel-L-1",
    "kernel-L-2",
    "kernel-L-3",
    "kernel-L-4",
)

_GROUP_OF = {
    claim: group
    for group, claims in {
        "swan-towber": ["swan-towber"],
        "swan-towber-unimodular": ["swan-towber-unimodular"],
        "main-identity": ["main-identity"],
        "template-consistency": ["template-consistency"],
        "section3-determinant": ["section3-determinant"],
        "section3-auxiliary": ["section3-aux-ab", "section3-aux-ac"],
        "kernel-columns": [c for c in CLAIMS if c.startswith("kernel-")],
    }.items()
    for claim in claims
}


def run_all(workers: int = 1) -> list[VerificationReport]:
    """Run every catalog group; results come back in declaration order."""
    groups = list(CLAIM_GROUPS.values())
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda fn: fn(), groups))
    else:
        batches = [fn() for fn in groups]
    return [report for batch in batches for report in batch]


def verify(claim_id: str) -> list[VerificationReport]:
    """Run one claim, one group, or ``"all"``."""
    if claim_id == "all":
        return run_all()
    if claim_id in CLAIM_GROUPS:
        return CLAIM_GROUPS[claim_id]()
    group = _GROUP_OF.get(claim_id)
    if group is None:
        raise KeyError(f"unknown claim id: {claim_id!r}")
    return [r for r in CLAIM_GROUPS[group]() if r.claim_id == claim_id]
