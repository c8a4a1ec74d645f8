"""Reversible gate IR over NOT / CNOT / CCNOT and its text serialization.

Qubit ``i`` is the ``i``-th tensor factor counted from the left, so in an
integer basis index over ``q`` qubits it occupies bit ``q - 1 - i``.  The
register is ordered variables, dust, result::

    |x1 ... xn, y1 ... yl ; f>
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class CircuitError(ValueError):
    pass


class GateKind(enum.Enum):
    NOT = "x"
    CNOT = "cx"
    CCNOT = "ccx"

    @property
    def n_controls(self) -> int:
        return {"x": 0, "cx": 1, "ccx": 2}[self.value]


@dataclass(frozen=True)
class QubitLayout:
    n_vars: int
    n_dust: int

    def __post_init__(self):
        if self.n_vars < 1 or self.n_dust < 0:
            raise CircuitError(f"invalid layout vars={self.n_vars} dust={self.n_dust}")

    @property
    def q(self) -> int:
        return self.n_vars + self.n_dust + 1

    @property
    def result_index(self) -> int:
        return self.q - 1

    def dust_index(self, k: int) -> int:
        """Qubit index of the ``k``-th dust bit (0-based)."""
        if not 0 <= k < self.n_dust:
            raise IndexError(k)
        return self.n_vars + k

    def is_variable(self, qubit: int) -> bool:
        return 0 <= qubit < self.n_vars


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    controls: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(self.controls))
        if len(self.controls) != self.kind.n_controls:
            raise CircuitError(
                f"{self.kind.name} takes {self.kind.n_controls} controls, got {len(self.controls)}")
        qubits = self.qubits
        if len(set(qubits)) != len(qubits):
            raise CircuitError(f"repeated qubit in {self}")
        if min(qubits) < 0:
            raise CircuitError(f"negative qubit index in {self}")

    @classmethod
    def x(cls, target: int) -> Gate:
        return cls(GateKind.NOT, (), target)

    @classmethod
    def cx(cls, control: int, target: int) -> Gate:
        return cls(GateKind.CNOT, (control,), target)

    @classmethod
    def ccx(cls, c1: int, c2: int, target: int) -> Gate:
        return cls(GateKind.CCNOT, (c1, c2), target)

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.controls + (self.target,)

    def __str__(self):
        return " ".join([self.kind.value, *map(str, self.qubits)])


@dataclass(frozen=True)
class Circuit:
    layout: QubitLayout
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        q = self.layout.q
        for i, g in enumerate(self.gates):
            if max(g.qubits) >= q:
                raise CircuitError(f"gate {i} ({g}) out of range for {q} qubits")
            if self.layout.is_variable(g.target):
                raise CircuitError(f"gate {i} ({g}) targets variable qubit {g.target}")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def inverse(self) -> Circuit:
        # every gate is self-inverse
        return Circuit(self.layout, self.gates[::-1])


def gate_permutation(g: Gate, basis_index: int, q: int) -> int:
    """Image of a computational basis index under ``g`` on ``q`` qubits."""
    if not 0 <= basis_index < (1 << q):
        raise ValueError(f"basis index {basis_index} out of range for {q} qubits")
    for c in g.controls:
        if not (basis_index >> (q - 1 - c)) & 1:
            return basis_index
    return basis_index ^ (1 << (q - 1 - g.target))


def serialize_circuit(c: Circuit) -> str:
    lay = c.layout
    lines = [f"qubits {lay.q} vars {lay.n_vars} dust {lay.n_dust}"]
    lines += [str(g) for g in c.gates]
    return "\n".join(lines)


_KINDS = {k.value: k for k in GateKind}


def parse_circuit(text: str | Iterable[str]) -> Circuit:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    layout = None
    gates = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if layout is None:
            if len(parts) != 6 or parts[0::2] != ["qubits", "vars", "dust"]:
                raise CircuitError(f"line {lineno}: expected header "
                                   f"'qubits <q> vars <n> dust <l>', got {line!r}")
            try:
                q, n, l = (int(p) for p in parts[1::2])
                layout = QubitLayout(n, l)
            except ValueError as exc:
                raise CircuitError(f"line {lineno}: {exc}") from None
            if layout.q != q:
                raise CircuitError(f"line {lineno}: qubits {q} != vars + dust + 1 = {layout.q}")
            continue
        kind = _KINDS.get(parts[0])
        if kind is None:
            raise CircuitError(f"line {lineno}: unknown gate {parts[0]!r}")
        try:
            idx = [int(p) for p in parts[1:]]
            gate = Gate(kind, tuple(idx[:-1]), idx[-1] if idx else -1)
        except (ValueError, CircuitError) as exc:
            raise CircuitError(f"line {lineno}: {exc}") from None
        if max(gate.qubits) >= layout.q:
            raise CircuitError(f"line {lineno}: qubit index out of range in {line!r}")
        gates.append(gate)
    if layout is None:
        raise CircuitError("missing header line")
    return Circuit(layout, tuple(gates))
