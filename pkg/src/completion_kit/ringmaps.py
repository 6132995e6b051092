"""Ideal membership without Groebner bases.

Two tools:

* The Segre substitution a -> g*j, b -> g*k, c -> h*j, d -> h*k has kernel
  exactly the principal ideal (a*d - b*c), so a polynomial lies in that
  ideal iff its image vanishes.
* For ideals with several generators the caller supplies cofactors, and we
  check ``p == sum(cofactor * generator)`` in the free ring.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .poly import Homomorphism, Polynomial, RingMismatchError, RingSpec, hom_apply

__all__ = [
    "SegreContext",
    "MembershipCertificate",
    "segre_context",
    "in_determinantal_ideal",
    "segre_image",
    "check_certificate",
    "certificate_residual",
]

MATRIX_VARS = ("a", "b", "c", "d")
FACTOR_VARS = ("g", "h", "j", "k")


@dataclass(frozen=True)
class SegreContext:
    source: RingSpec
    target: RingSpec
    hom: Homomorphism

    @property
    def aux(self) -> tuple[str, ...]:
        return self.source.variables[4:]

    def relation(self) -> Polynomial:
        """The determinantal generator a*d - b*c in the source ring."""
        a, b, c, d = (self.source.var(v) for v in MATRIX_VARS)
        return a * d - b * c


def segre_context(aux_names: Iterable[str] = ()) -> SegreContext:
    aux = tuple(aux_names)
    clash = sorted(set(aux) & set(MATRIX_VARS + FACTOR_VARS))
    if clash:
        raise ValueError(f"auxiliary names clash with reserved variables: {clash}")
    source = RingSpec(MATRIX_VARS + aux)
    target = RingSpec(FACTOR_VARS + aux)
    g, h, j, k = (target.var(v) for v in FACTOR_VARS)
    images = {"a": g * j, "b": g * k, "c": h * j, "d": h * k}
    images.update({name: target.var(name) for name in aux})
    return SegreContext(source, target, Homomorphism(source, target, images))


def segre_image(ctx: SegreContext, p: Polynomial) -> Polynomial:
    return hom_apply(ctx.hom, p)


def in_determinantal_ideal(ctx: SegreContext, p: Polynomial) -> bool:
    """Decide ``p in (a*d - b*c)``."""
    if p.ring != ctx.source:
        raise RingMismatchError(f"polynomial over {p.ring}, context expects {ctx.source}")
    return segre_image(ctx, p).is_zero


@dataclass(frozen=True)
class MembershipCertificate:
    """Cofactor/generator pairs claiming ``p = sum(cofactor * generator)``."""

    pairs: tuple[tuple[Polynomial, Polynomial], ...]

    def __init__(self, pairs: Sequence[tuple[Polynomial, Polynomial]]):
        pairs = tuple((cof, gen) for cof, gen in pairs)
        if not pairs:
            raise ValueError("a certificate needs at least one pair")
        ring = pairs[0][1].ring
        for cof, gen in pairs:
            if cof.ring != ring or gen.ring != ring:
                raise RingMismatchError("certificate polynomials must share one ring")
        object.__setattr__(self, "pairs", pairs)

    @property
    def ring(self) -> RingSpec:
        return self.pairs[0][1].ring

    def combination(self) -> Polynomial:
        total = self.ring.zero()
        for cof, gen in self.pairs:
            total = total + cof * gen
        return total


def certificate_residual(p: Polynomial, cert: MembershipCertificate) -> Polynomial:
    if p.ring != cert.ring:
        raise RingMismatchError(f"polynomial over {p.ring}, certificate over {cert.ring}")
    return p - cert.combination()


def check_certificate(p: Polynomial, cert: MembershipCertificate) -> bool:
    return certificate_residual(p, cert).is_zero
