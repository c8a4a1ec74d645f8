"""Reversible-circuit SAT pipeline on a sparse quantum state simulator."""

from .analysis import ComplexityReport, complexity_report, n1, n2, n3
from .circuit import (Circuit, CircuitError, Gate, GateKind, QubitLayout, gate_permutation,
                      parse_circuit, serialize_circuit)
from .compiler import CompilationArtifact, predict_dust
from .compiler import compile as compile_formula
from .formula import (Assignment, Clause, DimacsError, Formula, FormulaError, Literal,
                      brute_force_count, eval_clause, eval_formula, parse_dimacs, to_dimacs)
from .pipeline import PipelineResult, run
from .simulator import (PolarizedResult, SparseState, Verdict, apply_circuit,
                        apply_hadamard_layer, apply_v_theta, decide, measure_projection_e,
                        prepare)

__version__ = "0.1.0"
