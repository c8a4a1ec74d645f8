"""Closed-form resource bounds for the SAT circuit and a comparison report."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .compiler import CompilationArtifact
from .formula import Formula


def n1(n: int, m: int) -> int:
    """Input size ``log n + 2mn``; the logarithm is taken as ceil(log2 n)."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    return math.ceil(math.log2(n)) + 2 * m * n


def n2(n: int, m: int) -> int:
    """Dust-bit bound ``(5mn - 1) - mn``."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    return 4 * m * n - 1


def n3_terms(n: int, m: int) -> int:
    """Step count summed term by term: Fourier layer, loads, OR gates, AND gates."""
    return 1 + 3 * m * n + 4 * m * (2 * n - 1) + (m - 1)


def n3(n: int, m: int) -> int:
    """Step bound ``11mn - 3m``."""
    if n < 1 or m < 1:
        raise ValueError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    return 11 * m * n - 3 * m


@dataclass(frozen=True)
class ComplexityReport:
    n: int
    m: int
    n1_input_size: int
    n2_dust_bound: int | None
    n3_step_bound: int | None
    actual_dust: int
    actual_gates: int
    in_regime: bool
    within_bounds: bool | None
    warnings: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d = asdict(self)
        d["warnings"] = list(self.warnings)
        return d


def complexity_report(f: Formula, actual_dust: int, actual_gates: int) -> ComplexityReport:
    warnings = ["input size uses ceil(log2 n) for the unspecified logarithm base"]
    in_regime = f.m >= 1 and all(k <= f.n for k in f.clause_sizes())
    if f.m < 1:
        warnings.append("bounds are defined for m >= 1 only")
        b2 = b3 = None
    else:
        b2, b3 = n2(f.n, f.m), n3(f.n, f.m)
        if not in_regime:
            warnings.append("a clause is longer than n; bounds not evaluated")
    within = None
    if in_regime:
        within = actual_dust <= b2 and actual_gates <= b3
    return ComplexityReport(f.n, f.m, n1(f.n, f.m), b2, b3, actual_dust, actual_gates,
                            in_regime, within, tuple(warnings))


def report_for(f: Formula, artifact: CompilationArtifact) -> ComplexityReport:
    return complexity_report(f, artifact.dust_used, artifact.gate_count)
