"""Synthesis of the reversible circuit that writes f(x) into the result qubit.

Three phases, dust bits allocated in first-use order:

1. load every literal occurrence into a fresh dust bit (CNOT, then NOT if negated);
2. OR-fold each clause pairwise: ``c = a xor b xor ab`` via CNOT, CNOT, CCNOT;
3. AND-fold the clause outputs with CCNOT, the last fold landing on the result.

Dust is never uncomputed; it stays entangled with each branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, QubitLayout
from .formula import Formula


@dataclass(frozen=True)
class CompilationArtifact:
    circuit: Circuit
    dust_used: int
    gate_count: int
    per_clause_dust: tuple[int, ...]
    clause_outputs: tuple[int, ...]


def predict_dust(f: Formula) -> int:
    if f.m < 1:
        raise ValueError("need at least one clause")
    sizes = f.clause_sizes()
    return sum(sizes) + sum(max(k - 1, 0) for k in sizes) + max(f.m - 2, 0)


def predict_gates(f: Formula) -> int:
    if f.m < 1:
        raise ValueError("need at least one clause")
    loads = sum(len(c) + sum(lit.negated for lit in c) for c in f.clauses)
    ors = 3 * sum(len(c) - 1 for c in f.clauses)
    ands = 1 if f.m == 1 else f.m - 1
    return loads + ors + ands


def compile(f: Formula) -> CompilationArtifact:
    if f.m < 1:
        raise ValueError("compile needs m >= 1; the empty clause set is handled by the pipeline")
    n_dust = predict_dust(f)
    layout = QubitLayout(f.n, n_dust)
    gates: list[Gate] = []
    next_dust = 0

    def fresh() -> int:
        nonlocal next_dust
        qubit = layout.dust_index(next_dust)
        next_dust += 1
        return qubit

    outputs = []
    per_clause = []
    for clause in f.clauses:
        start = next_dust
        loaded = []
        for lit in clause:
            d = fresh()
            gates.append(Gate.cx(lit.variable_index - 1, d))
            if lit.negated:
                gates.append(Gate.x(d))
            loaded.append(d)
        acc = loaded[0]
        for b in loaded[1:]:
            c = fresh()
            gates += [Gate.cx(acc, c), Gate.cx(b, c), Gate.ccx(acc, b, c)]
            acc = c
        outputs.append(acc)
        per_clause.append(next_dust - start)

    result = layout.result_index
    if f.m == 1:
        gates.append(Gate.cx(outputs[0], result))
    else:
        acc = outputs[0]
        for k, out in enumerate(outputs[1:], start=2):
            target = result if k == f.m else fresh()
            gates.append(Gate.ccx(acc, out, target))
            acc = target

    assert next_dust == n_dust, (next_dust, n_dust)
    circuit = Circuit(layout, tuple(gates))
    return CompilationArtifact(circuit, n_dust, len(gates), tuple(per_clause), tuple(outputs))


def constant_true_circuit(n: int) -> Circuit:
    """Circuit for the empty clause set: no dust, result forced to 1."""
    layout = QubitLayout(n, 0)
    return Circuit(layout, (Gate.x(layout.result_index),))
