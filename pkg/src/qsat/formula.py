"""CNF formulas, DIMACS I/O, classical evaluation and the brute-force #SAT oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DEFAULT_ORACLE_CAP = 24


class FormulaError(ValueError):
    """A formula violates a structural invariant."""


class DimacsError(ValueError):
    """Malformed DIMACS input. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, order=True)
class Literal:
    variable_index: int
    negated: bool = False

    def __post_init__(self):
        if self.variable_index < 1:
            raise FormulaError(f"variable index must be >= 1, got {self.variable_index}")

    @classmethod
    def from_int(cls, lit: int) -> Literal:
        if lit == 0:
            raise FormulaError("0 is not a literal")
        return cls(abs(lit), lit < 0)

    def to_int(self) -> int:
        return -self.variable_index if self.negated else self.variable_index

    def value(self, values: Sequence) -> bool:
        v = bool(values[self.variable_index - 1])
        return not v if self.negated else v

    def __str__(self):
        return f"~x{self.variable_index}" if self.negated else f"x{self.variable_index}"


@dataclass(frozen=True)
class Clause:
    literals: tuple[Literal, ...]

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))
        if not self.literals:
            raise FormulaError("empty clause")
        if len(set(self.literals)) != len(self.literals):
            raise FormulaError(f"duplicate literal in clause {self}")

    @classmethod
    def from_ints(cls, lits: Iterable[int]) -> Clause:
        return cls(tuple(Literal.from_int(x) for x in lits))

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def __str__(self):
        return "{" + ", ".join(map(str, self.literals)) + "}"


@dataclass(frozen=True)
class Formula:
    n: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.n < 1:
            raise FormulaError(f"need at least one variable, got n={self.n}")
        for clause in self.clauses:
            for lit in clause:
                if lit.variable_index > self.n:
                    raise FormulaError(
                        f"literal {lit} out of range for n={self.n}")

    @classmethod
    def from_ints(cls, n: int, clauses: Iterable[Iterable[int]]) -> Formula:
        """Build from signed-integer clauses, e.g. ``[[1], [2, 3], [-1, 2]]``."""
        return cls(n, tuple(Clause.from_ints(c) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def clause_sizes(self) -> list[int]:
        return [len(c) for c in self.clauses]

    def to_ints(self) -> list[list[int]]:
        return [[lit.to_int() for lit in c] for c in self.clauses]

    def __str__(self):
        return "{" + ", ".join(map(str, self.clauses)) + "}"


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    @classmethod
    def from_index(cls, index: int, n: int) -> Assignment:
        """Assignment whose bits, x1 first, spell ``index`` in binary."""
        return cls(tuple((index >> (n - 1 - k)) & 1 for k in range(n)))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def _values(a) -> Sequence:
    return a.values if isinstance(a, Assignment) else a


def eval_clause(clause: Clause, a) -> bool:
    values = _values(a)
    return any(lit.value(values) for lit in clause)


def eval_formula(f: Formula, a) -> bool:
    values = _values(a)
    if len(values) != f.n:
        raise ValueError(f"assignment has {len(values)} values, formula has n={f.n}")
    return all(eval_clause(c, values) for c in f.clauses)


def satisfying_mask(f: Formula, max_vars: int = DEFAULT_ORACLE_CAP) -> np.ndarray:
    """Boolean array over all 2**n assignments, indexed with x1 as the high bit."""
    if f.n > max_vars:
        raise ValueError(f"n={f.n} exceeds the oracle cap of {max_vars} variables")
    idx = np.arange(1 << f.n, dtype=np.int64)
    bits = [((idx >> (f.n - 1 - k)) & 1).astype(bool) for k in range(f.n)]
    mask = np.ones(1 << f.n, dtype=bool)
    for clause in f.clauses:
        sat = np.zeros_like(mask)
        for lit in clause:
            b = bits[lit.variable_index - 1]
            sat |= ~b if lit.negated else b
        mask &= sat
    return mask


def brute_force_count(f: Formula, max_vars: int = DEFAULT_ORACLE_CAP) -> int:
    """Number of satisfying assignments by exhaustive enumeration."""
    return int(np.count_nonzero(satisfying_mask(f, max_vars)))


def parse_dimacs(text: str) -> Formula:
    n = m = None
    clauses: list[Clause] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed problem line {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed problem line {line!r}", lineno) from None
            if n < 1 or m < 0:
                raise DimacsError(f"invalid sizes in problem line {line!r}", lineno)
            continue
        if n is None:
            raise DimacsError("clause before problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"bad token {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise DimacsError("empty clause", lineno)
                try:
                    clauses.append(Clause.from_ints(current))
                except FormulaError as exc:
                    raise DimacsError(str(exc), lineno) from None
                current = []
                continue
            if abs(lit) > n:
                raise DimacsError(f"literal {lit} exceeds n={n}", lineno)
            if not current:
                current_line = lineno
            current.append(lit)
    if n is None:
        raise DimacsError("missing problem line")
    if current:
        raise DimacsError("clause not terminated by 0", current_line)
    if len(clauses) != m:
        raise DimacsError(f"header declares {m} clauses, found {len(clauses)}")
    return Formula(n, tuple(clauses))


def to_dimacs(f: Formula) -> str:
    lines = [f"p cnf {f.n} {f.m}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in f.to_ints()]
    return "\n".join(lines) + "\n"
