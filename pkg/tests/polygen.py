"""Random polynomial generators shared by the test modules."""

import random

from hypothesis import strategies as st

from completion_kit.poly import Polynomial, RingSpec

RING = RingSpec(["a", "b", "c", "d"])


def monomials(ring, max_degree=4):
    def ok(e):
        return sum(e) <= max_degree

    return st.tuples(*[st.integers(0, max_degree)] * ring.nvars).filter(ok)


def polynomials(ring=RING, max_terms=5, max_degree=4, coeff=9):
    terms = st.dictionaries(monomials(ring, max_degree), st.integers(-coeff, coeff), max_size=max_terms)
    return terms.map(lambda t: Polynomial(ring, t))


def random_poly(rng: random.Random, ring=RING, max_terms=3, max_degree=2, coeff=5):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = [0] * ring.nvars
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(ring.nvars)] += 1
        terms[tuple(mono)] = rng.randint(-coeff, coeff)
    return Polynomial(ring, terms)
