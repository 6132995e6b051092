"""Sparse multivariate polynomials over the integers.

A polynomial is a map from exponent vectors (tuples of non-negative ints,
one slot per ring variable) to nonzero Python ints.  Python ints are
arbitrary precision, so coefficient growth is never a concern.

Terms are ordered graded-lexicographically with respect to the order in
which the ring's variables were declared: higher total degree first, ties
broken by comparing exponent vectors left to right.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from operator import add
from types import MappingProxyType
from typing import Union

__all__ = [
    "RingSpec",
    "Polynomial",
    "Homomorphism",
    "RingMismatchError",
    "ring_new",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_mul",
    "poly_pow",
    "hom_apply",
    "poly_format",
]

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Monomial = tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class RingSpec:
    """An ordered list of indeterminates defining ``Z[x1, ..., xn]``."""

    __slots__ = ("_variables", "_index")

    def __init__(self, variables: Iterable[str]):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name: {name!r}")
        seen = set()
        for name in names:
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)
        self._variables = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def nvars(self) -> int:
        return len(self._variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def var(self, name: str) -> Polynomial:
        mono = [0] * self.nvars
        mono[self.index(name)] = 1
        return Polynomial._raw(self, {tuple(mono): 1})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(name) for name in self._variables)

    def const(self, value: int) -> Polynomial:
        value = int(value)
        if value == 0:
            return Polynomial._raw(self, {})
        return Polynomial._raw(self, {(0,) * self.nvars: value})

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self._variables == other._variables

    def __hash__(self) -> int:
        return hash(self._variables)

    def __repr__(self) -> str:
        return f"RingSpec({list(self._variables)!r})"

    def __str__(self) -> str:
        return "Z[" + ",".join(self._variables) + "]"


def ring_new(names: Iterable[str]) -> RingSpec:
    return RingSpec(names)


def _grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


Coercible = Union["Polynomial", int]


class Polynomial:
    """Immutable sparse polynomial in canonical form.

    Zero coefficients are never stored, so two polynomials over the same
    ring are equal exactly when their term dictionaries are equal.  Plain
    ints are promoted into the polynomial's ring by the arithmetic
    operators; polynomials over different rings are never mixed.
    """

    __slots__ = ("_ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[Monomial, int] = {}
        n = ring.nvars
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has arity {len(mono)}, ring has {n}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be ints, got {type(coeff).__name__}")
            total = clean.get(mono, 0) + coeff
            if total:
                clean[mono] = total
            else:
                clean.pop(mono, None)
        self._ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: dict[Monomial, int]) -> Polynomial:
        # trusted constructor: terms already canonical and owned by us
        obj = cls.__new__(cls)
        obj._ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def ring(self) -> RingSpec:
        return self._ring

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def coefficient(self, mono: Sequence[int]) -> int:
        return self._terms.get(tuple(mono), 0)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self._ring.nvars, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def evaluate(self, values: Mapping[str, int] | Sequence[int]) -> int:
        """Evaluate at an integer point given by name or by position."""
        if isinstance(values, Mapping):
            point = [values[name] for name in self._ring.variables]
        else:
            point = list(values)
            if len(point) != self._ring.nvars:
                raise ValueError("point has the wrong number of coordinates")
        total = 0
        for mono, coeff in self._terms.items():
            term = coeff
            for x, e in zip(point, mono):
                if e:
                    term *= x**e
            total += term
        return total

    # arithmetic

    def _coerce(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            if other._ring != self._ring:
                raise RingMismatchError(f"cannot combine {self._ring} with {other._ring}")
            return other
        if isinstance(other, int):
            return self._ring.const(other)
        return None

    def __add__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = terms.get(mono, 0) + coeff
            if total:
                terms[mono] = total
            else:
                del terms[mono]
        return Polynomial._raw(self._ring, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self._ring, {m: -c for m, c in self._terms.items()})

    def __pos__(self) -> Polynomial:
        return self

    def __sub__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Coercible) -> Polynomial:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        terms: dict[Monomial, int] = {}
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                mono = tuple(map(add, m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        return Polynomial._raw(self._ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponent")
        result = self._ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self._ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._ring == other._ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({poly_format(self)!r}, ring={list(self._ring.variables)!r})"

    def __str__(self) -> str:
        return poly_format(self)


def _check_same_ring(p: Polynomial, q: Polynomial) -> None:
    if p.ring != q.ring:
        raise RingMismatchError(f"cannot combine {p.ring} with {q.ring}")


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p + q


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p - q


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    _check_same_ring(p, q)
    return p * q


def poly_pow(p: Polynomial, n: int) -> Polynomial:
    return p**n


class Homomorphism:
    """Ring map ``Z[source] -> Z[target]`` fixed by the images of the variables."""

    __slots__ = ("_source", "_target", "_images")

    def __init__(
        self,
        source: RingSpec,
        target: RingSpec,
        images: Mapping[str, Coercible] | Sequence[Coercible],
    ):
        if isinstance(images, Mapping):
            missing = [v for v in source.variables if v not in images]
            extra = [k for k in images if k not in source]
            if missing or extra:
                raise ValueError(f"image map mismatch: missing {missing}, unexpected {extra}")
            images = [images[v] for v in source.variables]
        images = list(images)
        if len(images) != source.nvars:
            raise ValueError(f"need {source.nvars} images, got {len(images)}")
        fixed = []
        for img in images:
            if isinstance(img, int):
                img = target.const(img)
            if img.ring != target:
                raise RingMismatchError(f"image {img} does not lie in {target}")
            fixed.append(img)
        self._source = source
        self._target = target
        self._images = tuple(fixed)

    @classmethod
    def by_name(cls, source: RingSpec, target: RingSpec, **overrides: Coercible) -> Homomorphism:
        """Send every variable to the like-named target variable unless overridden."""
        images = {}
        for name in source.variables:
            if name in overrides:
                images[name] = overrides[name]
            else:
                images[name] = target.var(name)
        unknown = set(overrides) - set(source.variables)
        if unknown:
            raise ValueError(f"unknown source variables: {sorted(unknown)}")
        return cls(source, target, images)

    @property
    def source(self) -> RingSpec:
        return self._source

    @property
    def target(self) -> RingSpec:
        return self._target

    @property
    def images(self) -> tuple[Polynomial, ...]:
        return self._images

    def image(self, name: str) -> Polynomial:
        return self._images[self._source.index(name)]

    def __call__(self, p: Polynomial) -> Polynomial:
        return hom_apply(self, p)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}->{img}" for v, img in zip(self._source.variables, self._images))
        return f"Homomorphism({pairs})"


def hom_apply(h: Homomorphism, p: Polynomial) -> Polynomial:
    if p.ring != h.source:
        raise RingMismatchError(f"polynomial over {p.ring}, homomorphism expects {h.source}")
    powers: dict[tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = h.images[i] ** e
        return powers[key]

    acc: dict[Monomial, int] = {}
    for mono, coeff in p.terms.items():
        term = h.target.const(coeff)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        for m, c in term.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Polynomial._raw(h.target, {m: c for m, c in acc.items() if c})


def _format_monomial(names: Sequence[str], mono: Monomial) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_format(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    names = p.ring.variables
    out = []
    for k, (mono, coeff) in enumerate(p.sorted_terms()):
        body = _format_monomial(names, mono)
        mag = abs(coeff)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if k == 0:
            out.append("-" + text if coeff < 0 else text)
        else:
            out.append((" - " if coeff < 0 else " + ") + text)
    return "".join(out)
