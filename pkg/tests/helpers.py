"""Matrix literals shared across test modules, including the four published
eight-element solution sets for the [[6,4,2]] code's logical gates."""

from __future__ import annotations

import numpy as np

I6 = np.eye(6, dtype=np.uint8)
Z6 = np.zeros((6, 6), dtype=np.uint8)
J6 = np.ones((6, 6), dtype=np.uint8)


def bits(*rows: str) -> np.ndarray:
    return np.array([[int(c) for c in r] for r in rows], dtype=np.uint8)


def sparse_rows(at: dict[int, str]) -> np.ndarray:
    out = np.zeros((6, 6), dtype=np.uint8)
    for r, s in at.items():
        out[r - 1] = [int(c) for c in s]
    return out


def eight_variants(a, b, c, d) -> list[np.ndarray]:
    """The eight solutions sharing a base matrix: the three free choices add
    the all-ones block to B, to C, and to A and D together."""
    out = []
    for sel in range(8):
        f = np.block([
            [a ^ (J6 if sel & 4 else 0), b ^ (J6 if sel & 1 else 0)],
            [c ^ (J6 if sel & 2 else 0), d ^ (J6 if sel & 4 else 0)],
        ]).astype(np.uint8)
        out.append(f)
    return out


CNOT21_A = bits("100000", "010000", "111000", "000100", "000010", "110001")
CNOT21_D = bits("101001", "011001", "001000", "000100", "000010", "000001")
HAD1_A = bits("100000", "100000", "001000", "000100", "000010", "110001")
HAD1_D = bits("110001", "000001", "001000", "000100", "000010", "000001")

B_PHASE = sparse_rows({2: "010001", 6: "010001"})
B_CZ = sparse_rows({2: "001001", 3: "010001", 6: "011000"})


def golden_solution_sets() -> dict[str, list[np.ndarray]]:
    return {
        "phase1": eight_variants(I6, B_PHASE, Z6, I6),
        "cz12": eight_variants(I6, B_CZ, Z6, I6),
        "cnot21": eight_variants(CNOT21_A, Z6, Z6, CNOT21_D),
        "hadamard1": eight_variants(
            HAD1_A, B_PHASE, sparse_rows({1: "110000", 2: "110000"}), HAD1_D),
    }


def as_set(mats) -> set[bytes]:
    return {np.asarray(f, dtype=np.uint8).tobytes() for f in mats}
