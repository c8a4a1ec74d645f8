"""End-to-end run: compile, prepare, Hadamard, U_f, measure, polarize, decide."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import compiler, simulator
from .analysis import ComplexityReport, complexity_report
from .circuit import Circuit
from .formula import Formula
from .simulator import PolarizedResult, SparseState, Verdict


@dataclass(frozen=True)
class PipelineResult:
    formula: Formula
    circuit: Circuit
    state: SparseState
    e_value: float
    polarized: PolarizedResult
    verdict: Verdict
    complexity: ComplexityReport
    artifact: compiler.CompilationArtifact | None


def build_circuit(f: Formula) -> tuple[Circuit, compiler.CompilationArtifact | None]:
    if f.m == 0:
        return compiler.constant_true_circuit(f.n), None
    art = compiler.compile(f)
    return art.circuit, art


def run(f: Formula, theta: float = simulator.DEFAULT_THETA,
        max_vars: int = simulator.DEFAULT_MAX_VARS,
        max_qubits: int = simulator.DEFAULT_MAX_QUBITS) -> PipelineResult:
    if f.n > max_vars:
        raise simulator.CapacityError(f"n={f.n} exceeds the cap of {max_vars} variables")
    circuit, art = build_circuit(f)
    state = simulator.prepare(circuit.layout, max_qubits=max_qubits)
    state = simulator.apply_hadamard_layer(state, max_vars=max_vars)
    state = simulator.apply_circuit(state, circuit)
    e_value = simulator.measure_projection_e(state)
    polarized = simulator.apply_v_theta(state, theta)
    verdict = simulator.decide(polarized)
    report = complexity_report(f, circuit.layout.n_dust, len(circuit))
    return PipelineResult(f, circuit, state, e_value, polarized, verdict, report, art)


def dense_agreement(result: PipelineResult) -> float:
    """Largest per-amplitude gap between the sparse state and the dense engine."""
    dense = simulator.dense_run(result.circuit)
    return float(np.max(np.abs(dense - result.state.to_dense())))
