"""Command-line front end.

Exit status follows SAT-solver convention: 10 SAT, 20 UNSAT, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import pipeline, simulator
from .circuit import CircuitError, serialize_circuit
from .formula import DEFAULT_ORACLE_CAP, DimacsError, FormulaError, brute_force_count, parse_dimacs

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qsat",
        description="Decide a DIMACS CNF formula by simulating its reversible SAT circuit.")
    p.add_argument("input", help="DIMACS CNF file, or '-' for stdin")
    p.add_argument("--theta", type=float, default=simulator.DEFAULT_THETA,
                   help="polarization phase in radians (default: pi/4)")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--emit-circuit", metavar="PATH", help="write the compiled circuit to PATH")
    p.add_argument("--no-oracle", action="store_true",
                   help="skip the brute-force model-count cross-check")
    p.add_argument("--dense-check", action="store_true",
                   help=f"compare against the dense simulator (needs q <= {simulator.DENSE_MAX_QUBITS})")
    p.add_argument("--literal-v-theta", action="store_true",
                   help="also report the unnormalized result factor of the operator as written")
    p.add_argument("--max-vars", type=int, default=simulator.DEFAULT_MAX_VARS,
                   help="refuse formulas with more variables (default: %(default)s)")
    return p


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def make_report(args: argparse.Namespace) -> dict:
    t0 = time.perf_counter()
    formula = parse_dimacs(_read_input(args.input))
    res = pipeline.run(formula, theta=args.theta, max_vars=args.max_vars)
    lay = res.circuit.layout
    pol = res.polarized
    report = {
        "verdict": "SAT" if res.verdict.satisfiable else "UNSAT",
        "model_count": res.verdict.model_count,
        "beta_squared": pol.beta ** 2,
        "e_value": res.e_value,
        "alpha": pol.alpha,
        "beta": pol.beta,
        "theta": pol.theta,
        "qubits": {"vars": lay.n_vars, "dust": lay.n_dust, "result": 1, "total": lay.q},
        "gate_count": len(res.circuit),
        "complexity": res.complexity.to_dict(),
        "oracle": None,
        "dense_check": None,
    }
    if not args.no_oracle and formula.n <= DEFAULT_ORACLE_CAP:
        count = brute_force_count(formula)
        report["oracle"] = {"count": count, "agrees": count == res.verdict.model_count}
    if args.dense_check:
        if lay.q > simulator.DENSE_MAX_QUBITS:
            report["dense_check"] = {"skipped": f"q={lay.q} > {simulator.DENSE_MAX_QUBITS}"}
        else:
            gap = pipeline.dense_agreement(res)
            report["dense_check"] = {"max_abs_diff": gap, "agrees": gap <= 1e-12}
    if args.literal_v_theta:
        c = simulator.apply_v_theta_literal(res.state, args.theta)
        report["v_theta_literal"] = {
            "c0": [c[0].real, c[0].imag],
            "c1": [c[1].real, c[1].imag],
            "norm": float(np.linalg.norm(c)),
        }
    if args.emit_circuit:
        with open(args.emit_circuit, "w") as fh:
            fh.write(serialize_circuit(res.circuit) + "\n")
    report["wall_time_s"] = time.perf_counter() - t0
    return report


def _failed_checks(report: dict) -> list[str]:
    bad = []
    if report["oracle"] is not None and not report["oracle"]["agrees"]:
        bad.append("model count disagrees with brute-force oracle")
    dc = report["dense_check"]
    if dc is not None and dc.get("agrees") is False:
        bad.append("sparse state disagrees with dense simulator")
    return bad


def format_text(report: dict) -> str:
    q = report["qubits"]
    c = report["complexity"]
    lines = [
        f"s {'SATISFIABLE' if report['verdict'] == 'SAT' else 'UNSATISFIABLE'}",
        f"model count     {report['model_count']}",
        f"<E>             {report['e_value']:.12g}",
        f"alpha, beta     {report['alpha']:.12g}, {report['beta']:.12g}  (theta={report['theta']:.6g})",
        f"qubits          {q['vars']} vars + {q['dust']} dust + 1 result = {q['total']}",
        f"gates           {report['gate_count']}",
        f"bounds          N1={c['n1_input_size']} N2={c['n2_dust_bound']} "
        f"N3={c['n3_step_bound']} within={c['within_bounds']}",
    ]
    if report["oracle"] is not None:
        o = report["oracle"]
        lines.append(f"oracle          count={o['count']} {'ok' if o['agrees'] else 'MISMATCH'}")
    if report["dense_check"] is not None:
        lines.append(f"dense check     {report['dense_check']}")
    lines.append(f"time            {report['wall_time_s']:.3f}s")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = make_report(args)
    except (OSError, DimacsError, FormulaError, CircuitError, simulator.CapacityError) as exc:
        if args.json:
            print(json.dumps({"verdict": "ERROR", "error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    failed = _failed_checks(report)
    if failed:
        report["error"] = "; ".join(failed)
    if args.json:
        print(json.dumps(report, indent=2, allow_nan=False))
    else:
        print(format_text(report))
        for msg in failed:
            print(f"error: {msg}", file=sys.stderr)
    if failed:
        return EXIT_ERROR
    return EXIT_SAT if report["verdict"] == "SAT" else EXIT_UNSAT


if __name__ == "__main__":
    sys.exit(main())
