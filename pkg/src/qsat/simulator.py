"""Sparse and dense state evolution for the SAT pipeline.

After the Hadamard layer every operation in U_f is a basis permutation, so the
state is stored as one row of bits per branch plus an amplitude per branch.
Bits are packed into 64-bit words, qubit ``i`` living in word ``i // 64`` at
bit ``i % 64``; this layout is internal and never leaks into basis indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .circuit import Circuit, Gate, QubitLayout

DEFAULT_THETA = math.pi / 4
DEFAULT_MAX_QUBITS = 4096
DEFAULT_MAX_VARS = 24
DENSE_MAX_QUBITS = 22
NORM_TOL = 1e-9
COUNT_TOL = 1e-6

_ONE = np.uint64(1)


class CapacityError(ValueError):
    pass


def _n_words(q: int) -> int:
    return (q + 63) // 64


@dataclass(frozen=True, eq=False)
class SparseState:
    """Branches of a state vector with nonzero amplitude.

    ``words`` has shape ``(n_words, branches)``; ``amps`` has shape ``(branches,)``.
    Rows are unique basis states.
    """

    layout: QubitLayout
    words: np.ndarray
    amps: np.ndarray

    @property
    def q(self) -> int:
        return self.layout.q

    def __len__(self):
        return self.amps.shape[0]

    def bit(self, qubit: int) -> np.ndarray:
        """Value of ``qubit`` on every branch, as uint64 0/1."""
        return (self.words[qubit >> 6] >> np.uint64(qubit & 63)) & _ONE

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def basis_indices(self) -> list[int]:
        q = self.q
        out = [0] * len(self)
        for qubit in range(q):
            col = self.bit(qubit).tolist()
            shift = q - 1 - qubit
            for k, b in enumerate(col):
                if b:
                    out[k] |= 1 << shift
        return out

    @property
    def amplitudes(self) -> dict[int, complex]:
        """Map from integer basis index (qubit 0 most significant) to amplitude."""
        return dict(zip(self.basis_indices(), self.amps.tolist()))

    def to_dense(self) -> np.ndarray:
        if self.q > DENSE_MAX_QUBITS:
            raise CapacityError(f"{self.q} qubits is too many for a dense vector")
        vec = np.zeros(1 << self.q, dtype=complex)
        vec[np.array(self.basis_indices(), dtype=np.int64)] = self.amps
        return vec

    def branches(self) -> Iterator[tuple[tuple[int, ...], complex]]:
        """Yield ``(bits, amplitude)`` with bits listed in register order."""
        cols = [self.bit(i).tolist() for i in range(self.q)]
        for k, amp in enumerate(self.amps.tolist()):
            yield tuple(col[k] for col in cols), amp


def prepare(layout: QubitLayout, max_qubits: int = DEFAULT_MAX_QUBITS) -> SparseState:
    """|0...0> on the full register."""
    if layout.q > max_qubits:
        raise CapacityError(f"{layout.q} qubits exceeds the cap of {max_qubits}")
    words = np.zeros((_n_words(layout.q), 1), dtype=np.uint64)
    return SparseState(layout, words, np.ones(1, dtype=complex))


def apply_hadamard_layer(s: SparseState, max_vars: int = DEFAULT_MAX_VARS) -> SparseState:
    """Hadamard on every variable qubit of a state whose variable bits are all 0."""
    n = s.layout.n_vars
    if n > max_vars:
        raise CapacityError(f"2^{n} branches exceeds the cap of 2^{max_vars}")
    for i in range(n):
        if s.bit(i).any():
            raise ValueError("Hadamard layer expects variable qubits in |0>")
    size = 1 << n
    # branch j of the output carries assignment j (x1 = high bit) over source row k
    idx = np.arange(size, dtype=np.uint64)
    words = np.repeat(s.words, size, axis=1)
    for i in range(n):
        bit = ((idx >> np.uint64(n - 1 - i)) & _ONE) << np.uint64(i & 63)
        words[i >> 6] |= np.tile(bit, len(s))
    amps = np.repeat(s.amps, size) / math.sqrt(size)
    return SparseState(s.layout, words, amps)


def _apply_gate_inplace(words: np.ndarray, g: Gate) -> None:
    t = g.target
    if not g.controls:
        words[t >> 6] ^= _ONE << np.uint64(t & 63)
        return
    mask = None
    for c in g.controls:
        b = (words[c >> 6] >> np.uint64(c & 63)) & _ONE
        mask = b if mask is None else mask & b
    words[t >> 6] ^= mask << np.uint64(t & 63)


def _check_layout(s: SparseState, c: Circuit) -> None:
    if s.layout != c.layout:
        raise ValueError(f"state layout {s.layout} does not match circuit layout {c.layout}")


def _check_invariants(s: SparseState) -> None:
    if len(s) > 1 << s.layout.n_vars:
        raise AssertionError(f"{len(s)} branches exceeds 2^{s.layout.n_vars}")
    norm = s.norm_squared()
    if abs(norm - 1.0) > NORM_TOL:
        raise AssertionError(f"norm drifted to {norm!r}")


def apply_circuit(s: SparseState, c: Circuit, check: bool = True) -> SparseState:
    """Relabel basis states gate by gate; amplitudes are untouched."""
    _check_layout(s, c)
    words = s.words.copy()
    for g in c.gates:
        _apply_gate_inplace(words, g)
    out = SparseState(s.layout, words, s.amps.copy())
    if check:
        # gates only permute bits, so branch count and norm can change only
        # through a bug; one check after the loop sees any per-gate drift too
        _check_invariants(out)
    return out


def iter_circuit(s: SparseState, c: Circuit) -> Iterator[tuple[Gate, SparseState]]:
    """Step through ``c`` yielding an independent snapshot after every gate."""
    _check_layout(s, c)
    words = s.words.copy()
    for g in c.gates:
        _apply_gate_inplace(words, g)
        yield g, SparseState(s.layout, words.copy(), s.amps.copy())


def measure_projection_e(s: SparseState) -> float:
    """<v|E|v> for the projector onto result qubit = 1."""
    on = s.bit(s.layout.result_index).astype(bool)
    return float(np.sum(np.abs(s.amps[on]) ** 2))


@dataclass(frozen=True)
class PolarizedResult:
    """Result-qubit factor alpha|0> + beta e^{i theta}|1> after polarization."""

    alpha: float
    beta: float
    theta: float
    satisfying_count: int
    n_vars: int


@dataclass(frozen=True)
class Verdict:
    satisfiable: bool
    model_count: int


def _round_count(x: float) -> int:
    k = round(x)
    if abs(x - k) >= COUNT_TOL:
        raise ArithmeticError(f"model count estimate {x!r} is not an integer")
    return int(k)


def apply_v_theta(s: SparseState, theta: float = DEFAULT_THETA) -> PolarizedResult:
    """Polarize the result qubit of |v_f>.

    The variable and dust registers collapse to the uniform product state and
    the result factor keeps the probability weight of each truth value:
    ``beta**2`` is the weight of f = 1 branches, ``alpha**2`` of f = 0.
    """
    p1 = measure_projection_e(s)
    p0 = s.norm_squared() - p1
    alpha = math.sqrt(max(p0, 0.0))
    beta = math.sqrt(max(p1, 0.0))
    if abs(alpha**2 + beta**2 - 1.0) > NORM_TOL:
        raise AssertionError(f"alpha^2 + beta^2 = {alpha**2 + beta**2!r}")
    n = s.layout.n_vars
    return PolarizedResult(alpha, beta, float(theta), _round_count(p1 * (1 << n)), n)


def apply_v_theta_literal(s: SparseState, theta: float = DEFAULT_THETA) -> np.ndarray:
    """Apply the operator exactly as written, without renormalizing.

    Each non-result qubit goes through ``A|0><0| + B|1><1|``, which sends both
    basis states to ``(|0> + |1>)/sqrt(2)``, and the result gets a
    ``diag(1, e^{i theta})`` phase.  The output is therefore
    ``(|+>)^(n+l) (x) (c0|0> + c1|1>)``; the returned array is ``[c0, c1]``.
    Its norm is generally not 1.
    """
    on = s.bit(s.layout.result_index).astype(bool)
    c0 = complex(np.sum(s.amps[~on]))
    c1 = complex(np.sum(s.amps[on])) * complex(math.cos(theta), math.sin(theta))
    return np.array([c0, c1])


def decide(r: PolarizedResult) -> Verdict:
    count = _round_count(r.beta**2 * (1 << r.n_vars))
    return Verdict(count >= 1, count)


# Dense reference engine. Independent of the sparse bit-packing and of
# gate_permutation: gates are slice swaps on a (2,)*q tensor.

_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_A = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_B = np.array([[1, 1], [-1, 1]], dtype=complex) / math.sqrt(2)
_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)
POLARIZER = _A @ _P0 + _B @ _P1


def dense_prepare(layout: QubitLayout) -> np.ndarray:
    if layout.q > DENSE_MAX_QUBITS:
        raise CapacityError(f"{layout.q} qubits exceeds the dense cap of {DENSE_MAX_QUBITS}")
    vec = np.zeros(1 << layout.q, dtype=complex)
    vec[0] = 1.0
    return vec


def dense_apply_1q(vec: np.ndarray, matrix: np.ndarray, qubit: int, q: int) -> np.ndarray:
    t = np.moveaxis(vec.reshape((2,) * q), qubit, 0)
    t = np.tensordot(matrix, t, axes=([1], [0]))
    return np.moveaxis(t, 0, qubit).reshape(-1)


def dense_apply_gate(vec: np.ndarray, g: Gate, q: int) -> np.ndarray:
    t = vec.reshape((2,) * q).copy()

    def sl(target_value):
        idx = [slice(None)] * q
        for c in g.controls:
            idx[c] = 1
        idx[g.target] = target_value
        return tuple(idx)

    t[sl(0)], t[sl(1)] = t[sl(1)].copy(), t[sl(0)].copy()
    return t.reshape(-1)


def dense_run(circuit: Circuit) -> np.ndarray:
    """Full dense pipeline: |0>, Hadamard on variables, then every gate."""
    lay = circuit.layout
    vec = dense_prepare(lay)
    for i in range(lay.n_vars):
        vec = dense_apply_1q(vec, _H, i, lay.q)
    for g in circuit.gates:
        vec = dense_apply_gate(vec, g, lay.q)
    return vec


def dense_v_theta_literal(vec: np.ndarray, layout: QubitLayout, theta: float) -> np.ndarray:
    q = layout.q
    for i in range(q - 1):
        vec = dense_apply_1q(vec, POLARIZER, i, q)
    phase = np.diag([1.0, complex(math.cos(theta), math.sin(theta))])
    return dense_apply_1q(vec, phase, q - 1, q)
