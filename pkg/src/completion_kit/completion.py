"""Completing unimodular rows (a, b, c) whose quadratic z^2 + b*z + a*c splits.

Given roots alpha, beta (alpha + beta = -b, alpha*beta = a*c) and integers
s..z with

    a^2 s + alpha^2 t + beta^2 u + c^2 v = 1 = a^2 w + alpha^2 x + beta^2 y + c^2 z,

evaluating the completion template at A=a, B=-alpha, C=-beta, D=c gives a
3x3 matrix with first column (a, b, c) and determinant 1.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .catalog import AUX, TEMPLATE_RING, template_matrix
from .linalg import PolyMatrix, mat_apply_hom
from .poly import Homomorphism, Polynomial

__all__ = [
    "CompletionError",
    "NotUnimodularError",
    "NotCoprimeError",
    "CertificateError",
    "NoIntegerRootsError",
    "RowInstance",
    "CompletionCertificate",
    "Completion",
    "integer_roots",
    "find_certificate",
    "build_completion",
    "template_completion",
    "verify_completion",
    "complete_row",
]

IntMatrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


class CompletionError(ValueError):
    pass


class NotUnimodularError(CompletionError):
    pass


class NotCoprimeError(CompletionError):
    pass


class CertificateError(CompletionError):
    pass


class NoIntegerRootsError(CompletionError):
    """z^2 + b*z + a*c does not split over the integers."""

    def __init__(self, row: RowInstance):
        disc = row.b * row.b - 4 * row.a * row.c
        super().__init__(
            f"z^2 + ({row.b})*z + ({row.a * row.c}) has no integer roots: "
            f"discriminant {disc} is not a perfect square, so the roots are irrational or complex"
        )
        self.row = row
        self.discriminant = disc


@dataclass(frozen=True)
class RowInstance:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if gcd(self.a, self.b, self.c) != 1:
            raise NotUnimodularError(
                f"({self.a}, {self.b}, {self.c}) is not unimodular: "
                f"gcd is {gcd(self.a, self.b, self.c)}"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class CompletionCertificate:
    alpha: int
    beta: int
    stuv: tuple[int, int, int, int]
    wxyz: tuple[int, int, int, int]

    def check(self, row: RowInstance) -> None:
        """Raise CertificateError unless every certificate equation holds."""
        a, b, c = row.as_tuple()
        if self.alpha + self.beta != -b:
            raise CertificateError(f"alpha + beta = {self.alpha + self.beta}, expected {-b}")
        if self.alpha * self.beta != a * c:
            raise CertificateError(f"alpha * beta = {self.alpha * self.beta}, expected {a * c}")
        squares = (a * a, self.alpha**2, self.beta**2, c * c)
        for name, coeffs in (("s,t,u,v", self.stuv), ("w,x,y,z", self.wxyz)):
            if len(coeffs) != 4:
                raise CertificateError(f"{name} needs four values")
            dot = sum(q * k for q, k in zip(squares, coeffs))
            if dot != 1:
                raise CertificateError(f"{name} gives {dot} instead of 1")

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "stuv": list(self.stuv),
            "wxyz": list(self.wxyz),
        }


@dataclass(frozen=True)
class Completion:
    row: RowInstance
    certificate: CompletionCertificate
    matrix: IntMatrix


def integer_roots(row: RowInstance) -> tuple[int, int] | None:
    """Integer roots (alpha <= beta) of z^2 + b*z + a*c, or None."""
    disc = row.b * row.b - 4 * row.a * row.c
    if disc < 0:
        return None
    root = isqrt(disc)
    if root * root != disc:
        return None
    # disc = b^2 mod 4, so -b +- root is always even
    alpha, beta = (-row.b - root) // 2, (-row.b + root) // 2
    return alpha, beta


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def find_certificate(*values: int) -> tuple[int, ...]:
    """Integers k with sum(values[i] * k[i]) == 1, by folding extended gcd.

    A value already divisible by the running gcd gets coefficient 0, so
    (4, 4, 9, 9) yields (-2, 0, 1, 0).
    """
    if len(values) == 1 and isinstance(values[0], Sequence):
        values = tuple(values[0])
    coeffs: list[int] = []
    g = 0
    for q in values:
        if g and q % g == 0:
            coeffs.append(0)
            continue
        g, x, y = _xgcd(g, q)
        coeffs = [k * x for k in coeffs]
        coeffs.append(y)
    if g != 1:
        raise NotCoprimeError(f"gcd of {tuple(values)} is {g}, not 1")
    return tuple(coeffs)


@lru_cache(maxsize=1)
def _template_rows() -> tuple[tuple[Polynomial, ...], ...]:
    t = template_matrix()
    return tuple(t.row(i) for i in range(3))


def build_completion(row: RowInstance, cert: CompletionCertificate) -> IntMatrix:
    """Evaluate the template at A=a, B=-alpha, C=-beta, D=c and s..z from cert."""
    cert.check(row)
    point = (row.a, -cert.alpha, -cert.beta, row.c) + tuple(cert.stuv) + tuple(cert.wxyz)
    return tuple(tuple(e.evaluate(point) for e in r) for r in _template_rows())  # type: ignore[return-value]


def template_completion(
    a: Polynomial,
    alpha: Polynomial,
    beta: Polynomial,
    c: Polynomial,
    stuv: Sequence[Polynomial],
    wxyz: Sequence[Polynomial],
) -> PolyMatrix:
    """The same construction over any polynomial ring.

    No checks are made: the caller is responsible for alpha + beta = -b,
    alpha*beta = a*c and both quadratic-form equations holding in their ring
    (possibly only modulo some ideal).  The first column is (a, -alpha-beta, c)
    and the determinant is the product of the two quadratic forms.
    """
    target = a.ring
    images = dict(zip(("A", "B", "C", "D"), (a, -alpha, -beta, c)))
    images.update(zip(AUX, list(stuv) + list(wxyz)))
    return mat_apply_hom(Homomorphism(TEMPLATE_RING, target, images), template_matrix())


def _det3(m: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def verify_completion(m: Sequence[Sequence[int]], row: RowInstance | Sequence[int]) -> bool:
    target = row.as_tuple() if isinstance(row, RowInstance) else tuple(row)
    if len(m) != 3 or any(len(r) != 3 for r in m):
        return False
    return tuple(r[0] for r in m) == target and _det3(m) == 1


def complete_row(row: RowInstance | Sequence[int]) -> Completion:
    """Full pipeline: roots, two certificates, template, verification.

    Raises NotUnimodularError, or NoIntegerRootsError when the theorem's
    hypothesis fails over the integers.
    """
    if not isinstance(row, RowInstance):
        row = RowInstance(*row)
    roots = integer_roots(row)
    if roots is None:
        raise NoIntegerRootsError(row)
    alpha, beta = roots
    squares = (row.a**2, alpha**2, beta**2, row.c**2)
    # found independently even though one tuple could serve both equations
    cert = CompletionCertificate(alpha, beta, find_certificate(squares), find_certificate(squares))
    matrix = build_completion(row, cert)
    if not verify_completion(matrix, row):
        raise AssertionError(f"completion of {row} failed verification: {matrix}")
    return Completion(row, cert, matrix)
