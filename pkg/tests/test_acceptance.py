"""Exit criteria for the package. Run ``pytest tests/test_acceptance.py`` for the summary."""

import itertools
import math
import random
import time

import numpy as np
import pytest

from qsat import simulator as sim
from qsat.analysis import n2, n3, n3_terms, report_for
from qsat.circuit import Gate, gate_permutation
from qsat.formula import Formula, brute_force_count
from qsat.pipeline import dense_agreement, run

from conftest import PAPER_CLAUSES, random_formula

THETAS = [0.0, math.pi / 4, 1.0, math.pi]

C1 = (1, "worked example: <E> = 1/4, alpha = sqrt(3)/2, beta = 1/2, SAT with 2 models, < 1 s")
C2 = (2, "worked example: 8 branches of 1/sqrt(8), result = 1 exactly on (1,0,1), (1,1,1)")
C3 = (3, "oracle equivalence on >= 200 random formulas (n <= 5, m <= 6), < 30 s")
C4 = (4, "dust <= 4mn - 1, gates <= 11mn - 3m, and the step-count identity")
C5 = (5, "norm, sparsity, gate permutation, sparse/dense and theta-invariance suite")
C6 = (6, "n = 20, m = 40 instance via the sparse engine in < 60 s")


def paper():
    return Formula.from_ints(3, PAPER_CLAUSES)


def random_suite(count=200, seed=20240601):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 5)
        out.append(random_formula(rng, n, rng.randint(1, 6)))
    return out


@pytest.mark.criterion(*C1)
def test_c1_worked_example_values():
    t0 = time.perf_counter()
    res = run(paper())
    elapsed = time.perf_counter() - t0
    assert res.e_value == pytest.approx(0.25, abs=1e-9)
    assert res.polarized.alpha == pytest.approx(math.sqrt(3) / 2, abs=1e-9)
    assert res.polarized.beta == pytest.approx(0.5, abs=1e-9)
    assert res.verdict.satisfiable and res.verdict.model_count == 2
    assert elapsed < 1.0


@pytest.mark.criterion(*C2)
def test_c2_worked_example_branches():
    res = run(paper())
    branches = list(res.state.branches())
    assert len(branches) == 8
    for _, amp in branches:
        assert abs(amp - 1 / math.sqrt(8)) < 1e-12
    prefixes = {bits[:3] for bits, _ in branches}
    assert prefixes == set(itertools.product([0, 1], repeat=3))
    assert {bits[:3] for bits, _ in branches if bits[-1] == 1} == {(1, 0, 1), (1, 1, 1)}


@pytest.mark.criterion(*C3)
def test_c3_oracle_equivalence():
    suite = random_suite()
    assert len(suite) >= 200
    assert all(f.n <= 5 and f.m <= 6 for f in suite)
    t0 = time.perf_counter()
    for f in suite:
        res = run(f)
        count = brute_force_count(f)
        assert round(res.polarized.beta**2 * 2**f.n) == count
        assert res.verdict.model_count == count
        assert res.verdict.satisfiable == (count >= 1)
        assert abs(res.e_value - count / 2**f.n) <= 1e-9
    assert time.perf_counter() - t0 < 30.0


@pytest.mark.criterion(*C4)
def test_c4_bounds_on_suite():
    for f in random_suite() + [paper()]:
        res = run(f)
        assert res.artifact.dust_used <= 4 * f.m * f.n - 1
        assert res.artifact.gate_count <= 11 * f.m * f.n - 3 * f.m
        assert report_for(f, res.artifact).within_bounds is True


@pytest.mark.criterion(*C4)
def test_c4_step_count_identity():
    for n, m in itertools.product(range(1, 31), range(1, 31)):
        assert 1 + 3 * m * n + 4 * m * (2 * n - 1) + m - 1 == 11 * m * n - 3 * m
        assert n3_terms(n, m) == n3(n, m)
    assert (n2(3, 4), n3(3, 4)) == (47, 120)


@pytest.mark.criterion(*C5)
def test_c5_norm_and_sparsity_every_gate():
    for f in random_suite(60, seed=7) + [paper()]:
        res = run(f)
        s = sim.apply_hadamard_layer(sim.prepare(res.circuit.layout))
        assert abs(s.norm_squared() - 1) <= 1e-9 and len(s) <= 2**f.n
        for _, snap in sim.iter_circuit(s, res.circuit):
            assert abs(snap.norm_squared() - 1) <= 1e-9
            assert len(snap) <= 2**f.n


@pytest.mark.criterion(*C5)
@pytest.mark.parametrize("q", range(1, 7))
def test_c5_gate_self_inverse_bijection(q):
    gates = [Gate.x(t) for t in range(q)]
    gates += [Gate.cx(c, t) for c, t in itertools.permutations(range(q), 2)]
    gates += [Gate.ccx(a, b, t) for a, b, t in itertools.permutations(range(q), 3)]
    for g in gates:
        image = [gate_permutation(g, i, q) for i in range(2**q)]
        assert sorted(image) == list(range(2**q))
        assert [gate_permutation(g, j, q) for j in image] == list(range(2**q))


@pytest.mark.criterion(*C5)
def test_c5_sparse_vs_dense():
    rng = random.Random(99)
    checked = 0
    while checked < 50:
        n = rng.randint(1, 4)
        f = random_formula(rng, n, rng.randint(1, 4), max_size=3)
        res = run(f)
        if res.circuit.layout.q > sim.DENSE_MAX_QUBITS:
            continue
        assert dense_agreement(res) <= 1e-12
        checked += 1


@pytest.mark.criterion(*C5)
def test_c5_theta_invariance():
    for f in random_suite(40, seed=3) + [paper()]:
        results = [run(f, theta=t) for t in THETAS]
        assert len({r.verdict for r in results}) == 1
        assert len({r.polarized.beta for r in results}) == 1
        assert [r.polarized.theta for r in results] == THETAS


@pytest.mark.criterion(*C5)
def test_c5_reverse_circuit_restores_state():
    for f in random_suite(40, seed=11) + [paper()]:
        res = run(f)
        s = sim.apply_hadamard_layer(sim.prepare(res.circuit.layout))
        back = sim.apply_circuit(res.state, res.circuit.inverse())
        a, b = s.amplitudes, back.amplitudes
        assert a.keys() == b.keys()
        assert all(abs(a[k] - b[k]) <= 1e-12 for k in a)


@pytest.mark.criterion(*C6)
def test_c6_scale():
    rng = random.Random(2026)
    f = random_formula(rng, 20, 40, max_size=3)
    t0 = time.perf_counter()
    res = run(f)
    elapsed = time.perf_counter() - t0
    assert len(res.state) == 2**20
    assert res.circuit.layout.q > 64
    assert res.verdict.model_count == brute_force_count(f)
    assert abs(res.state.norm_squared() - 1) <= 1e-9
    assert elapsed < 60.0
    print(f"n=20 m=40 q={res.circuit.layout.q} gates={len(res.circuit)} "
          f"count={res.verdict.model_count} in {elapsed:.2f}s")
    np.testing.assert_allclose(res.e_value, res.verdict.model_count / 2**20, atol=1e-9)
