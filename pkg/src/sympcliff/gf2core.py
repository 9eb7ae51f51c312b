"""Dense linear algebra over GF(2) and the binary symplectic group Sp(2m, F2).

Vectors are rows and matrices act on the right (x -> x @ F), so row i of a
matrix is the image of basis vector e_i.  Entries live in numpy uint8 arrays
holding 0/1; phase bookkeeping never touches this module.
"""

from __future__ import annotations

import numpy as np


class SingularMatrixError(ValueError):
    """A matrix that must be invertible over GF(2) is not."""


class InfeasibleError(ValueError):
    """A constraint system admits no solution."""


class ParseError(ValueError):
    """A text input does not match its expected format."""


def asbits(data) -> np.ndarray:
    """Coerce to a uint8 array of 0/1, reducing mod 2."""
    arr = np.asarray(data)
    if arr.dtype != np.uint8 or arr.size and arr.max(initial=0) > 1:
        arr = np.mod(arr, 2).astype(np.uint8)
    return arr


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.uint8)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def mul(*mats) -> np.ndarray:
    """Product of GF(2) matrices, left to right."""
    out = np.asarray(mats[0], dtype=np.int64)
    for m in mats[1:]:
        out = out @ np.asarray(m, dtype=np.int64)
        out %= 2
    return out.astype(np.uint8)


def omega(m: int) -> np.ndarray:
    """The symplectic form matrix [[0, I], [I, 0]] on 2m coordinates."""
    w = zeros((2 * m, 2 * m))
    w[:m, m:] = eye(m)
    w[m:, :m] = eye(m)
    return w


def symplectic_inner(x, y) -> int:
    """Symplectic inner product of two rows of even length 2m."""
    x = asbits(x).ravel()
    y = asbits(y).ravel()
    m = x.shape[0] // 2
    return int(x[:m] @ y[m:].astype(np.int64) + x[m:] @ y[:m].astype(np.int64)) % 2


def is_symplectic(f) -> bool:
    f = asbits(f)
    if f.ndim != 2 or f.shape[0] != f.shape[1] or f.shape[0] % 2:
        return False
    w = omega(f.shape[0] // 2)
    return bool(np.array_equal(mul(f, w, f.T), w))


def rref(m_in) -> tuple[np.ndarray, list[int], np.ndarray]:
    """Reduced row echelon form.

    Returns (R, pivots, T) with T @ m_in = R, T invertible, and pivots the
    pivot column indices in ascending order.
    """
    r = asbits(m_in).copy()
    rows, cols = r.shape
    t = eye(rows)
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        hit = np.nonzero(r[pr:, c])[0]
        if hit.size == 0:
            continue
        piv = pr + int(hit[0])
        if piv != pr:
            r[[pr, piv]] = r[[piv, pr]]
            t[[pr, piv]] = t[[piv, pr]]
        sel = r[:, c].astype(bool).copy()
        sel[pr] = False
        if sel.any():
            r[sel] ^= r[pr]
            t[sel] ^= t[pr]
        pivots.append(c)
        pr += 1
    return r, pivots, t


def rank(m_in) -> int:
    return len(rref(m_in)[1])


def invert(m_in) -> np.ndarray:
    """Inverse of a square GF(2) matrix; raises SingularMatrixError if singular."""
    m = asbits(m_in)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise SingularMatrixError("matrix is not square")
    r, pivots, t = rref(m)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular over GF(2)")
    return t


def nullspace(m_in) -> np.ndarray:
    """Right nullspace basis {x : M x^T = 0}, rows in reduced echelon form.

    Shape is (d, cols); d may be zero.
    """
    m = asbits(m_in)
    cols = m.shape[1]
    r, pivots, _ = rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros((len(free), cols))
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, c in enumerate(pivots):
            basis[i, c] = r[row, f]
    if len(free) > 1:
        basis = rref(basis)[0]
    return basis


def solve_linear(m_in, rhs) -> tuple[np.ndarray, np.ndarray] | None:
    """Solve M x = rhs over GF(2) for the column vector x (given as a row).

    Returns (particular, nullspace_basis) with the basis rows in reduced
    echelon form, or None when the system is inconsistent.  The particular
    solution has all free variables set to zero.
    """
    m = asbits(m_in)
    b = asbits(rhs).ravel()
    rows, cols = m.shape
    if b.shape[0] != rows:
        raise ValueError("rhs length does not match row count")
    r, pivots, t = rref(m)
    c = mul(t, b.reshape(-1, 1)).ravel()
    if c[len(pivots):].any():
        return None
    x = zeros(cols)
    for row, pc in enumerate(pivots):
        x[pc] = c[row]
    return x, nullspace(m)


def coset_leader(x, basis) -> np.ndarray:
    """Lexicographically smallest vector in x + rowspan(basis).

    After reducing the basis, zeroing each pivot position in ascending order
    is optimal: any other coset element first differs from the result at its
    earliest flipped pivot, where it holds a 1.
    """
    y = asbits(x).copy().ravel()
    reduced = rref(asbits(basis))[0] if np.size(basis) else asbits(basis)
    for row in reduced:
        nz = np.nonzero(row)[0]
        if nz.size and y[nz[0]]:
            y ^= row
    return y


def lex_min_nonzero(basis) -> np.ndarray:
    """Lexicographically smallest nonzero vector in rowspan(basis).

    In reduced form, any combination containing a row with an earlier pivot
    has its leading 1 earlier, so the last reduced row wins.
    """
    b = asbits(basis)
    if b.shape[0] == 0 or not b.any():
        raise InfeasibleError("span is trivial")
    reduced, pivots, _ = rref(b)
    return reduced[len(pivots) - 1].copy()


def lu_decompose(q_in) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row-pivoted LU factorization of an invertible GF(2) matrix.

    Returns (perm, L, U) with Q[perm, :] = L @ U, L unit lower triangular and
    U unit upper triangular (over GF(2) the pivots are all 1).
    """
    a = asbits(q_in).copy()
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise SingularMatrixError("matrix is not square")
    perm = np.arange(n)
    for c in range(n):
        hit = np.nonzero(a[c:, c])[0]
        if hit.size == 0:
            raise SingularMatrixError("matrix is singular over GF(2)")
        piv = c + int(hit[0])
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            perm[[c, piv]] = perm[[piv, c]]
        for r in range(c + 1, n):
            if a[r, c]:
                a[r, c + 1:] ^= a[c, c + 1:]
                # a[r, c] stays 1: it is the stored multiplier L[r, c]
    low = np.tril(a, -1)
    up = np.triu(a, 0)
    return perm, (low ^ eye(n)), up


def symplectic_gram_schmidt(seed, m: int | None = None) -> list[tuple[np.ndarray, np.ndarray]]:
    """Extend seed vectors to a full hyperbolic basis (u_1..u_m, v_1..v_m).

    seed is an ordered list of rows of length 2m whose symplectic Gram pattern
    is a partial matching: each vector has product 1 with at most one other.
    Matched pairs keep first-seen order with the earlier vector on the u side;
    unmatched seeds get partners; remaining pairs are fresh.  Every choice is
    the lexicographically smallest valid vector, so output is deterministic.
    Raises InfeasibleError when the seeds are dependent or the pattern is not
    a matching.  Postcondition: <u_a, v_b> = delta_ab, <u_a, u_b> = <v_a, v_b> = 0.
    """
    vecs = [asbits(s).ravel() for s in seed]
    if vecs:
        if m is None:
            m = vecs[0].shape[0] // 2
        if any(v.shape[0] != 2 * m for v in vecs):
            raise InfeasibleError("seed vectors have inconsistent lengths")
    elif m is None:
        raise ValueError("m is required for an empty seed")
    n = len(vecs)
    if n > 2 * m:
        raise InfeasibleError("more seed vectors than basis slots")
    if n and rank(np.vstack(vecs)) != n:
        raise InfeasibleError("seed vectors are linearly dependent")

    partner = [None] * n
    for i in range(n):
        mates = [j for j in range(n) if j != i and symplectic_inner(vecs[i], vecs[j])]
        if len(mates) > 1:
            raise InfeasibleError(
                "seed vector %d pairs with %d others; Gram pattern is not a matching"
                % (i, len(mates)))
        if mates:
            partner[i] = mates[0]

    slots: list[list[np.ndarray | None]] = []
    seen = [False] * n
    for i in range(n):
        if seen[i]:
            continue
        seen[i] = True
        j = partner[i]
        if j is None:
            slots.append([vecs[i], None])
        else:
            seen[j] = True
            slots.append([vecs[i], vecs[j]])

    w = omega(m)
    fixed: list[np.ndarray] = [v for pair in slots for v in pair if v is not None]

    def pick(target_products: np.ndarray, nonzero_only: bool) -> np.ndarray:
        mat = mul(np.vstack(fixed), w) if fixed else zeros((0, 2 * m))
        sol = solve_linear(mat, target_products)
        if sol is None:
            raise InfeasibleError("seed cannot be extended to a symplectic basis")
        part, null = sol
        if nonzero_only and not part.any():
            return lex_min_nonzero(null)
        return coset_leader(part, null)

    for pair in slots:
        if pair[1] is None:
            req = np.array([1 if f is pair[0] else 0 for f in fixed], dtype=np.uint8)
            pair[1] = pick(req, nonzero_only=False)
            fixed.append(pair[1])
    while len(slots) < m:
        u = pick(zeros(len(fixed)), nonzero_only=True)
        fixed.append(u)
        req = np.array([1 if f is u else 0 for f in fixed], dtype=np.uint8)
        v = pick(req, nonzero_only=False)
        fixed.append(v)
        slots.append([u, v])

    out = [(p[0], p[1]) for p in slots]
    for a in range(m):
        for b in range(m):
            assert symplectic_inner(out[a][0], out[b][1]) == (1 if a == b else 0)
            assert symplectic_inner(out[a][0], out[b][0]) == 0
            assert symplectic_inner(out[a][1], out[b][1]) == 0
    return out


def sp_group_order(m: int) -> int:
    """Order of Sp(2m, F2)."""
    out = 1 << (m * m)
    for j in range(1, m + 1):
        out *= (1 << (2 * j)) - 1
    return out


def save_matrix_text(m_in) -> str:
    """One row per line, entries '0'/'1' separated by single spaces."""
    m = asbits(m_in)
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in m)


def load_matrix_text(text: str) -> np.ndarray:
    """Parse the save_matrix_text format; a blank line terminates the matrix."""
    rows = []
    for ln, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            if rows:
                break
            continue
        toks = stripped.split()
        if any(t not in ("0", "1") for t in toks):
            raise ParseError("line %d: matrix entries must be 0 or 1" % ln)
        if rows and len(toks) != len(rows[0]):
            raise ParseError("line %d: ragged row (expected %d entries)" % (ln, len(rows[0])))
        rows.append([int(t) for t in toks])
    if not rows:
        raise ParseError("no matrix rows found")
    return np.array(rows, dtype=np.uint8)
