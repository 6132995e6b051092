"""Exit criteria.  Every check is exact integer/symbolic equality."""

import random
import subprocess
import sys
import time
from itertools import product
from math import gcd

from completion_kit import catalog
from completion_kit.cli import main
from completion_kit.completion import (
    CompletionCertificate,
    RowInstance,
    build_completion,
    complete_row,
    integer_roots,
    verify_completion,
)
from completion_kit.linalg import PolyMatrix, determinant
from completion_kit.parse import poly_parse
from completion_kit.poly import Polynomial, RingSpec, poly_format
from oracles import int_det3, leibniz_det
from polygen import random_poly
from test_catalog import mutation_outcomes


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_criterion_1_main_identity():
    report, elapsed = timed(catalog.verify_main_identity)
    assert report.passed and report.residual.is_zero
    assert elapsed < 1.0


def test_criterion_2_swan_towber():
    # Expected to fail: the printed matrix only satisfies the identity modulo
    # pa + qb + rc = 1 (see the swan-towber-unimodular claim).
    report, elapsed = timed(catalog.verify_swan_towber)
    assert elapsed < 1.0
    assert report.residual.is_zero, f"residual = {report.residual}"


def test_criterion_3_section3_determinant():
    report, elapsed = timed(catalog.verify_section3_determinant)
    assert elapsed < 1.0
    assert not catalog.section3_free_residual().is_zero
    assert report.passed


def test_criterion_4_template_auxiliary_kernels():
    assert catalog.verify_template_consistency().passed
    aux = catalog.verify_section3_auxiliary()
    assert len(aux) == 2 and all(r.passed for r in aux)
    kernels = catalog.verify_kernel_columns()
    assert sum(r.claim_id.startswith("kernel-K") for r in kernels) == 2
    assert sum(r.claim_id.startswith("kernel-L") for r in kernels) == 4
    assert all(r.passed for r in kernels)


def test_criterion_5_completion_sweep():
    def sweep():
        count = 0
        for a, b, c in product(range(-20, 21), repeat=3):
            if gcd(a, b, c) != 1 or integer_roots(RowInstance(a, b, c)) is None:
                continue
            m = complete_row((a, b, c)).matrix
            assert int_det3(m) == 1
            assert [r[0] for r in m] == [a, b, c]
            count += 1
        return count

    count, elapsed = timed(sweep)
    assert count > 100
    assert elapsed < 10.0


def test_criterion_6_worked_instance(capsys):
    assert main(["complete", "2", "-5", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:4] == ["2 0 -3", "-5 0 7", "3 1 -3", "det = 1"]
    row = RowInstance(2, -5, 3)
    result = complete_row(row)
    assert result.certificate.stuv == result.certificate.wxyz == (-2, 0, 1, 0)
    assert result.matrix == ((2, 0, -3), (-5, 0, 7), (3, 1, -3))
    for stuv, wxyz in [((7, 0, -3, 0), (0, -2, 0, 1)), ((-1, -1, 1, 0), (0, 7, 0, -3))]:
        m = build_completion(row, CompletionCertificate(2, 3, stuv, wxyz))
        assert verify_completion(m, row) and int_det3(m) == 1


def test_criterion_7_leibniz_equivalence():
    rng = random.Random(2024)
    ring = RingSpec(["a", "b", "c"])
    for _ in range(500):
        n = rng.randint(2, 4)
        m = PolyMatrix(ring, n, n, [random_poly(rng, ring) for _ in range(n * n)])
        assert determinant(m) == leibniz_det(m)


def test_criterion_8_mutation_suite():
    outcomes = mutation_outcomes()
    assert all(detected for _, _, detected in outcomes)
    counts = {}
    for claim, _, _ in outcomes:
        counts[claim] = counts.get(claim, 0) + 1
    assert all(n >= 9 for n in counts.values()), counts


def test_criterion_9_round_trip_and_exit_codes():
    rng = random.Random(99)
    ring = RingSpec(["a", "b", "c", "d", "x_1"])
    for _ in range(1000):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            terms[tuple(rng.randint(0, 4) for _ in range(5))] = rng.randint(-(10**12), 10**12)
        p = Polynomial(ring, terms)
        assert poly_parse(poly_format(p), ring) == p

    def code(*args):
        return subprocess.run(
            [sys.executable, "-m", "completion_kit", *args], capture_output=True, text=True
        ).returncode

    assert code("verify", "main-identity") == 0
    assert code("verify", "swan-towber") == 1
    assert code("verify", "no-such-claim") == 2
    assert code("complete", "2", "-5", "3") == 0
    assert code("complete", "1", "0", "1") == 3
    assert code("complete", "2", "4", "6") == 2
    assert code("member", "a*d - b*c") == 0
    assert code("member", "a") == 1
    assert code("member", "a + e") == 2
