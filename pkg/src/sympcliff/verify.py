"""Exact verification of circuits against requested Pauli conjugation maps.

Conjugation is tracked symbolically in product form iota^kappa X^a Z^b with
integer phase arithmetic; each per-gate rule is exact, not just exact mod
sign.  A dense-matrix oracle (m <= 12) is available for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate
from .pauli import PauliOperator, dense, to_label
from .pauli import _idot  # integer dot; phases die if reduced mod 2


def _apply_gate_batch(g: Gate, a: np.ndarray, b: np.ndarray, k: np.ndarray) -> tuple:
    """Conjugate a batch of product-form Paulis (rows of a, b; phases k) by one gate.

    Updates are the exact Heisenberg rules; k holds product-form exponents
    mod 4 as int64.
    """
    kind = g.kind
    if kind == "H":
        q = g.qubits[0] - 1
        k += 2 * (a[:, q].astype(np.int64) * b[:, q])
        tmp = a[:, q].copy()
        a[:, q] = b[:, q]
        b[:, q] = tmp
    elif kind == "P":
        q = g.qubits[0] - 1
        k += a[:, q]
        b[:, q] ^= a[:, q]
    elif kind == "X":
        q = g.qubits[0] - 1
        k += 2 * b[:, q].astype(np.int64)
    elif kind == "Z":
        q = g.qubits[0] - 1
        k += 2 * a[:, q].astype(np.int64)
    elif kind == "Y":
        q = g.qubits[0] - 1
        k += 2 * (a[:, q].astype(np.int64) + b[:, q])
    elif kind == "CZ":
        q, r = g.qubits[0] - 1, g.qubits[1] - 1
        k += 2 * (a[:, q].astype(np.int64) * a[:, r])
        b[:, q] ^= a[:, r]
        b[:, r] ^= a[:, q]
    elif kind == "CNOT":
        c, t = g.qubits[0] - 1, g.qubits[1] - 1
        a[:, t] ^= a[:, c]
        b[:, c] ^= b[:, t]
    elif kind == "PERMUTE":
        sigma = np.array(g.qubits, dtype=np.int64) - 1
        inv = np.argsort(sigma)
        a[:, :] = a[:, inv]
        b[:, :] = b[:, inv]
    else:
        raise ValueError("unknown gate kind %r" % kind)
    return a, b, k


def conjugate_many(circ: Circuit, paulis) -> list[PauliOperator]:
    """Conjugate each operator by the whole circuit, exactly."""
    ps = list(paulis)
    if not ps:
        return []
    a = np.vstack([p.a for p in ps]).copy()
    b = np.vstack([p.b for p in ps]).copy()
    k = np.array([p.kappa_d for p in ps], dtype=np.int64)
    for g in circ.gates:
        a, b, k = _apply_gate_batch(g, a, b, k)
    out = []
    for i, p in enumerate(ps):
        kappa_e = (int(k[i]) - _idot(a[i], b[i])) % 4
        out.append(PauliOperator(p.m, kappa_e, a[i], b[i]))
    return out


def conjugate(circ: Circuit, p: PauliOperator) -> PauliOperator:
    """g p g^dagger for the circuit's overall operator g, exact phase included."""
    return conjugate_many(circ, [p])[0]


def induced_symplectic(circ: Circuit) -> tuple[np.ndarray, np.ndarray]:
    """The binary symplectic matrix of a circuit, plus per-row signs.

    Row i < m is the image of X on qubit i+1, row m + j the image of Z on
    qubit j+1; signs[i] is the +/-1 phase the corresponding generator picks
    up (circuits of these gates never map a Hermitian Pauli to an imaginary
    multiple).
    """
    m = circ.m
    a = np.vstack([np.eye(m, dtype=np.uint8), np.zeros((m, m), np.uint8)])
    b = np.vstack([np.zeros((m, m), np.uint8), np.eye(m, dtype=np.uint8)])
    k = np.zeros(2 * m, dtype=np.int64)
    for g in circ.gates:
        a, b, k = _apply_gate_batch(g, a, b, k)
    kappa_e = (k - (a.astype(np.int64) * b).sum(axis=1)) % 4
    assert not (kappa_e % 2).any()
    signs = np.where(kappa_e == 0, 1, -1).astype(np.int64)
    return np.hstack([a, b]), signs


_H2 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_P2 = np.array([[1, 0], [0, 1j]], dtype=complex)
_X2 = np.array([[0, 1], [1, 0]], dtype=complex)
_Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
_CZ4 = np.diag([1, 1, 1, -1]).astype(complex)
_CNOT4 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
                  dtype=complex)
_GATE_1Q = {"H": _H2, "P": _P2, "X": _X2, "Y": _Y2, "Z": _Z2}
_GATE_2Q = {"CZ": _CZ4, "CNOT": _CNOT4}


def _apply_dense(u: np.ndarray, g: Gate, m: int) -> np.ndarray:
    cols = u.shape[1]
    if g.kind == "PERMUTE":
        n = u.shape[0]
        idx = np.arange(n)
        out_idx = np.zeros(n, dtype=np.int64)
        for q0, target in enumerate(g.qubits):
            bit = (idx >> (m - 1 - q0)) & 1
            out_idx |= bit << (m - target)
        res = np.empty_like(u)
        res[out_idx] = u
        return res
    t = u.reshape((2,) * m + (cols,))
    if g.kind in _GATE_1Q:
        q = g.qubits[0] - 1
        t = np.moveaxis(t, q, 0)
        t = np.tensordot(_GATE_1Q[g.kind], t, axes=(1, 0))
        t = np.moveaxis(t, 0, q)
    else:
        q1, q2 = g.qubits[0] - 1, g.qubits[1] - 1
        t = np.moveaxis(t, (q1, q2), (0, 1))
        g4 = _GATE_2Q[g.kind].reshape(2, 2, 2, 2)
        t = np.tensordot(g4, t, axes=([2, 3], [0, 1]))
        t = np.moveaxis(t, (0, 1), (q1, q2))
    return t.reshape(u.shape)


def dense_unitary(circ: Circuit) -> np.ndarray:
    """The circuit's unitary; gate i+1 is applied after gate i, so the matrix
    product runs in reverse circuit order.  Qubit 1 is the most significant
    index bit.  Limited to m <= 12."""
    if circ.m > 12:
        raise ValueError("dense form limited to m <= 12")
    n = 1 << circ.m
    u = np.eye(n, dtype=complex)
    for g in circ.gates:
        u = _apply_dense(u, g, circ.m)
    return u


def _as_bitvector(x, n: int) -> np.ndarray:
    if isinstance(x, str):
        if len(x) != n or any(c not in "01" for c in x):
            raise ValueError("expected %d bits, got %r" % (n, x))
        return np.array([int(c) for c in x], dtype=np.uint8)
    arr = np.asarray(x, dtype=np.int64).ravel() % 2
    if arr.shape != (n,):
        raise ValueError("expected %d bits" % n)
    return arr.astype(np.uint8)


def prepare_css_state(code, x) -> np.ndarray:
    """The logical computational basis state |psi_x> of a CSS-shaped code.

    The state is the uniform superposition over the coset (x . G^X) + C_perp,
    where C_perp is spanned by the X-type stabilizer rows.  Requires every
    stabilizer and logical operator to be purely X- or Z-type.
    """
    m = code.m
    if m > 12:
        raise ValueError("dense form limited to m <= 12")
    hc = []
    for s in code.stabilizers:
        if s.a.any() and s.b.any():
            raise ValueError("stabilizer %s is mixed type; state preparation "
                             "needs a CSS code" % to_label(s))
        if s.a.any():
            hc.append(s.a)
    gx = []
    for p in code.logical_x:
        if p.b.any():
            raise ValueError("logical X operators must be X-type")
        gx.append(p.a)
    bits = _as_bitvector(x, len(gx))
    base = np.zeros(m, dtype=np.uint8)
    for xi, row in zip(bits, gx):
        if xi:
            base ^= row
    weights = 1 << np.arange(m - 1, -1, -1)
    vec = np.zeros(1 << m, dtype=complex)
    for combo in range(1 << len(hc)):
        c = base.copy()
        for j in range(len(hc)):
            if (combo >> j) & 1:
                c ^= hc[j]
        vec[int(c @ weights)] += 1
    return vec / np.sqrt(1 << len(hc))


@dataclass(frozen=True)
class ReportRow:
    name: str
    given: PauliOperator
    expected: PauliOperator
    computed: PauliOperator
    ok: bool


@dataclass(frozen=True)
class ConjugationReport:
    rows: tuple[ReportRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def render(self) -> str:
        lines = []
        for r in self.rows:
            verdict = "ok" if r.ok else "FAIL"
            lines.append("%-4s %-4s %s -> %s (want %s)"
                         % (verdict, r.name, to_label(r.given),
                            to_label(r.computed), to_label(r.expected)))
        lines.append("result: %s" % ("pass" if self.passed else "fail"))
        return "\n".join(lines)


def expected_images(code, spec=None) -> list[tuple[str, PauliOperator, PauliOperator]]:
    """(name, input, required image) for each stabilizer generator and logical
    Pauli.  Unspecified rows default to the identity map; under the centralize
    policy stabilizer rows always map to themselves."""
    images_x = getattr(spec, "images_x", None) or {}
    images_z = getattr(spec, "images_z", None) or {}
    stab_images = getattr(spec, "stab_images", None) or {}
    policy = getattr(spec, "policy", "centralize")
    rows = []
    for j, s in enumerate(code.stabilizers, start=1):
        want = stab_images.get(j, s) if policy == "normalize" else s
        rows.append(("S%d" % j, s, want))
    for i, p in enumerate(code.logical_x, start=1):
        rows.append(("X%d" % i, p, images_x.get(i, p)))
    for i, p in enumerate(code.logical_z, start=1):
        rows.append(("Z%d" % i, p, images_z.get(i, p)))
    return rows


def verify_solution(code, spec, solution, dense_check: bool = False) -> ConjugationReport:
    """Check a circuit (or synthesis result) against the requested maps.

    Every stabilizer generator and logical Pauli is conjugated symbolically;
    a row passes only if the image matches the requirement exactly, phase
    included.  With dense_check=True each row is additionally verified by
    dense matrix conjugation (m <= 12).
    """
    circ = getattr(solution, "circuit", solution)
    rows = expected_images(code, spec)
    outs = conjugate_many(circ, [given for _, given, _ in rows])
    u = dense_unitary(circ) if dense_check else None
    report = []
    for (name, given, want), got in zip(rows, outs):
        ok = got == want
        if ok and u is not None:
            lhs = u @ dense(given) @ u.conj().T
            ok = bool(np.max(np.abs(lhs - dense(want))) <= 1e-10)
        report.append(ReportRow(name, given, want, got, ok))
    return ConjugationReport(tuple(report))
