from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from completion_kit.poly import (
    Homomorphism,
    Polynomial,
    RingMismatchError,
    RingSpec,
    hom_apply,
    poly_add,
    poly_format,
    poly_mul,
    poly_pow,
    poly_sub,
    ring_new,
)
from polygen import RING, polynomials

a, b, c, d = RING.gens()


def test_ring_new():
    assert ring_new(["g", "h", "j", "k"]).variables == ("g", "h", "j", "k")
    big = ring_new(list("ghjkstuvwxyz"))
    assert big.nvars == 12
    assert big.index("z") == 11


@pytest.mark.parametrize("names", [["a", "a"], ["1x"], [""], [], ["a-b"]])
def test_ring_new_rejects(names):
    with pytest.raises(ValueError):
        ring_new(names)


def test_addition_examples():
    assert (a + b) + (a - b) == 2 * a
    assert poly_add(a * b - c, RING.zero()) == a * b - c
    assert poly_add(a * d - b * c, b * c) == a * d


def test_multiplication_examples():
    assert poly_mul(a + b, a - b) == a**2 - b**2
    expected = Polynomial(RING, {(2, 0, 0, 2): 1, (0, 2, 2, 0): -1})
    assert (a * d - b * c) * (a * d + b * c) == expected
    assert poly_mul(a * b + 3, RING.one()) == a * b + 3


def test_pow_matches_multinomial_expansion():
    R = RingSpec(["a", "b", "c", "p", "q", "r"])
    av, bv, cv, p, q, r = R.gens()
    got = poly_pow(p * av + q * bv + r * cv, 2)
    # multinomial theorem: exponents (i, j, k) summing to 2 on the products pa, qb, rc
    expected = {}
    for i in range(3):
        for j in range(3 - i):
            k = 2 - i - j
            coeff = factorial(2) // (factorial(i) * factorial(j) * factorial(k))
            expected[(i, j, k, i, j, k)] = coeff
    assert dict(got.terms) == expected
    assert len(got) == 6


def test_pow_edge_cases():
    assert poly_pow(a + b, 0) == 1
    assert poly_pow(RING.zero(), 3) == 0
    with pytest.raises(ValueError):
        a ** -1


def test_big_coefficients():
    p = (a + b) ** 32
    assert p.coefficient((16, 16, 0, 0)) == comb(32, 16)
    # (a+b)^32 stays below 2^63; go far enough that coefficients need >64 bits
    q = (a + b) ** 70
    assert comb(70, 35) > 2**64
    assert q.coefficient((35, 35, 0, 0)) == comb(70, 35)
    assert len(q) == 71


def test_zero_coefficients_are_purged():
    p = Polynomial(RING, {(1, 0, 0, 0): 3, (0, 1, 0, 0): 0})
    assert len(p) == 1
    assert (a - a).is_zero
    assert Polynomial(RING, {(1, 0, 0, 0): 2}) == a + a


def test_ring_mismatch():
    other = RingSpec(["a", "b", "c", "e"])
    with pytest.raises(RingMismatchError):
        a + other.var("a")
    with pytest.raises(RingMismatchError):
        poly_sub(a, other.var("e"))


def test_immutable_terms():
    with pytest.raises(TypeError):
        a.terms[(0, 0, 0, 0)] = 1


SEGRE_TARGET = RingSpec(["g", "h", "j", "k"])
g, h, j, k = SEGRE_TARGET.gens()
SEGRE = Homomorphism(RING, SEGRE_TARGET, {"a": g * j, "b": g * k, "c": h * j, "d": h * k})


def test_hom_apply_examples():
    assert hom_apply(SEGRE, a * d - b * c) == 0
    assert hom_apply(SEGRE, a) == g * j
    assert hom_apply(SEGRE, a**2 * d**2 - b**2 * c**2).is_zero
    assert hom_apply(SEGRE, SEGRE_TARGET and RING.const(7)) == SEGRE_TARGET.const(7)


def test_hom_validation():
    with pytest.raises(ValueError):
        Homomorphism(RING, SEGRE_TARGET, {"a": g})
    with pytest.raises(RingMismatchError):
        hom_apply(SEGRE, g)


@pytest.mark.parametrize(
    "poly, text",
    [
        (RING.zero(), "0"),
        (2 * a, "2*a"),
        (a**2 - b**2, "a^2 - b^2"),
        (-a, "-a"),
        (b - 1, "b - 1"),
        (a * b**2 - 3 * c**3 + a, "a*b^2 - 3*c^3 + a"),
        (RING.const(-4), "-4"),
    ],
)
def test_format(poly, text):
    assert poly_format(poly) == text


def test_evaluate():
    p = a**2 * b - 3 * d + 4
    assert p.evaluate([2, 5, 0, 1]) == 21
    assert p.evaluate({"a": 2, "b": 5, "c": 9, "d": 1}) == 21


polys = polynomials()


@given(polys, polys)
def test_add_mul_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys, polys, polys)
@settings(max_examples=60)
def test_associativity_and_distributivity(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_neutral_elements(p):
    assert p + RING.zero() == p
    assert p * RING.one() == p
    assert p - p == 0


target_polys = polynomials(SEGRE_TARGET, max_terms=3, max_degree=2, coeff=5)
homs = st.lists(target_polys, min_size=4, max_size=4).map(
    lambda imgs: Homomorphism(RING, SEGRE_TARGET, imgs)
)


@given(homs, polynomials(max_degree=3), polynomials(max_degree=3))
@settings(max_examples=50)
def test_hom_is_ring_homomorphism(hom, p, q):
    assert hom_apply(hom, p + q) == hom_apply(hom, p) + hom_apply(hom, q)
    assert hom_apply(hom, p * q) == hom_apply(hom, p) * hom_apply(hom, q)
