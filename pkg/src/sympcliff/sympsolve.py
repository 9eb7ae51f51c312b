"""Solving and enumerating binary symplectic matrices under linear constraints.

A constraint system asks for F in Sp(2m, F2) with x_i F = y_i for given row
pairs.  One solution comes from a chain of at most 2t symplectic transvections
(t = constraint count); the full solution set comes from a depth-first sweep
over the images of the unconstrained half of a hyperbolic basis containing
the x_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gf2core import (InfeasibleError, asbits, coset_leader, eye, invert, mul,
                      omega, rank, solve_linear, symplectic_gram_schmidt,
                      symplectic_inner, zeros)


def transvection_matrix(h) -> np.ndarray:
    """F_h = I + Omega h^T h, the transvection x -> x + <x, h> h.

    h = 0 gives the identity; every transvection is an involution.
    """
    h = asbits(h).ravel()
    m = h.shape[0] // 2
    w = mul(h.reshape(1, -1), omega(m)).ravel()
    return eye(2 * m) ^ np.outer(w, h)


def map_vector(x, y) -> list[np.ndarray]:
    """Transvection vectors (at most two) whose product maps x to y.

    Both inputs must be nonzero.  Returns [] when x == y, [x + y] when
    <x, y> = 1, else [w + y, x + w] for the smallest valid intermediate w.
    """
    x = asbits(x).ravel()
    y = asbits(y).ravel()
    if not x.any() or not y.any():
        raise InfeasibleError("transvections move only nonzero vectors")
    if np.array_equal(x, y):
        return []
    if symplectic_inner(x, y) == 1:
        return [x ^ y]
    w = _choose_w(x, y, [])
    return [w ^ y, x ^ w]


def _choose_w(xt: np.ndarray, y: np.ndarray, prev_ys: list[np.ndarray]) -> np.ndarray:
    """Smallest w with <xt, w> = <y, w> = 1 and <y_j, w> = <y_j, y> for earlier
    targets y_j, so fixing this constraint disturbs none before it."""
    m = xt.shape[0] // 2
    w_form = omega(m)
    rows = [mul(xt.reshape(1, -1), w_form).ravel(),
            mul(y.reshape(1, -1), w_form).ravel()]
    rhs = [1, 1]
    for yj in prev_ys:
        rows.append(mul(yj.reshape(1, -1), w_form).ravel())
        rhs.append(symplectic_inner(yj, y))
    sol = solve_linear(np.vstack(rows), np.array(rhs, dtype=np.uint8))
    assert sol is not None, "intermediate vector system must be solvable"
    return coset_leader(*sol)


@dataclass
class SymplecticSystem:
    """Constraints x_i F = y_i over Sp(2m, F2).

    basis_roles optionally names the hyperbolic-basis slot of each source
    vector as ("u", i) or ("v", i) with 1-based i; when omitted, roles are
    inferred from the symplectic Gram pattern of the sources.
    """

    m: int
    xs: list[np.ndarray] = field(default_factory=list)
    ys: list[np.ndarray] = field(default_factory=list)
    basis_roles: list[tuple[str, int]] | None = None

    def __post_init__(self):
        self.xs = [asbits(x).ravel() for x in self.xs]
        self.ys = [asbits(y).ravel() for y in self.ys]
        if len(self.xs) != len(self.ys):
            raise ValueError("source and target counts differ")
        for v in self.xs + self.ys:
            if v.shape != (2 * self.m,):
                raise ValueError("constraint vectors must have length 2m")
        if self.basis_roles is not None:
            if len(self.basis_roles) != len(self.xs):
                raise ValueError("basis_roles length mismatch")
            seen = set()
            for side, slot in self.basis_roles:
                if side not in ("u", "v") or not 1 <= slot <= self.m:
                    raise ValueError("bad basis role (%r, %r)" % (side, slot))
                if (side, slot) in seen:
                    raise ValueError("duplicate basis role (%r, %r)" % (side, slot))
                seen.add((side, slot))

    def __len__(self):
        return len(self.xs)


def _validate(system: SymplecticSystem) -> None:
    t = len(system)
    if t == 0:
        return
    if rank(np.vstack(system.xs)) != t:
        raise InfeasibleError("source vectors are linearly dependent")
    if rank(np.vstack(system.ys)) != t:
        raise InfeasibleError("target vectors are linearly dependent")
    for i in range(t):
        for j in range(i + 1, t):
            if symplectic_inner(system.xs[i], system.xs[j]) != \
                    symplectic_inner(system.ys[i], system.ys[j]):
                raise InfeasibleError(
                    "constraints %d and %d have incompatible inner products" % (i, j))


def find_symplectic(system: SymplecticSystem, return_transvections: bool = False):
    """One F in Sp(2m, F2) satisfying the system, via <= 2t transvections.

    Each constraint is fixed by one transvection when <x_i F, y_i> = 1 and by
    two otherwise; the intermediate vector is chosen so earlier constraints
    stay satisfied.  Empty system returns the identity.  Raises
    InfeasibleError for dependent or inner-product-incompatible inputs.
    """
    _validate(system)
    f = eye(2 * system.m)
    hs: list[np.ndarray] = []
    for i in range(len(system)):
        xt = mul(system.xs[i].reshape(1, -1), f).ravel()
        y = system.ys[i]
        if np.array_equal(xt, y):
            continue
        if symplectic_inner(xt, y) == 1:
            new = [xt ^ y]
        else:
            w = _choose_w(xt, y, system.ys[:i])
            new = [w ^ y, xt ^ w]
        for h in new:
            f = mul(f, transvection_matrix(h))
            hs.append(h)
    for x, y in zip(system.xs, system.ys):
        assert np.array_equal(mul(x.reshape(1, -1), f).ravel(), y)
    if return_transvections:
        return f, hs
    return f


def _seed_order(system: SymplecticSystem) -> tuple[list[np.ndarray], list[int]]:
    """Sources ordered for basis completion, plus for each its original index.

    With explicit roles, order is by slot with the u side first; otherwise the
    given order stands.
    """
    idx = list(range(len(system)))
    if system.basis_roles is not None:
        idx.sort(key=lambda i: (system.basis_roles[i][1],
                                system.basis_roles[i][0] != "u"))
    return [system.xs[i] for i in idx], idx


def _basis_for(system: SymplecticSystem) -> np.ndarray:
    """A full hyperbolic basis (rows u_1..u_m, v_1..v_m) containing every x_i."""
    seeds, idx = _seed_order(system)
    pairs = symplectic_gram_schmidt(seeds, m=system.m)
    if system.basis_roles is not None:
        # a slot whose only constrained side is v came out of completion with
        # the seed on the u side; flip it back
        by_slot: dict[int, set[str]] = {}
        for side, slot in system.basis_roles:
            by_slot.setdefault(slot, set()).add(side)
        slot_keys = sorted(by_slot)
        for pos, slot in enumerate(slot_keys):
            if by_slot[slot] == {"v"}:
                pairs[pos] = (pairs[pos][1], pairs[pos][0])
    return np.vstack([p[0] for p in pairs] + [p[1] for p in pairs])


def iter_all(system: SymplecticSystem):
    """Yield every F in Sp(2m, F2) satisfying the system, depth first.

    Sources are embedded in a hyperbolic basis; each basis row not pinned by a
    constraint ranges over the affine set allowed by the rows already chosen.
    Branches whose affine system turns inconsistent are pruned, which is what
    keeps the sweep exact when a slot is free on both sides (a naive
    2^{alpha(alpha+1)/2} count overshoots there: for m = 2 with only
    u1 -> u1, v1 -> v1 pinned, 6 solutions exist, not 8).
    """
    f0 = find_symplectic(system)
    basis = _basis_for(system)
    two_m = 2 * system.m
    w_form = omega(system.m)
    basis_inv = invert(basis)
    a = mul(basis, f0)

    pinned = np.zeros(two_m, dtype=bool)
    for x in system.xs:
        hits = [r for r in range(two_m) if np.array_equal(basis[r], x)]
        assert len(hits) == 1, "every source vector must be a basis row"
        pinned[hits[0]] = True
    free_rows = [r for r in range(two_m) if not pinned[r]]

    b = a.copy()

    def rec(pos: int):
        if pos == len(free_rows):
            yield mul(basis_inv, b)
            return
        r = free_rows[pos]
        done = [q for q in range(two_m) if pinned[q]] + free_rows[:pos]
        if done:
            mat = mul(b[done], w_form)
            rhs = w_form[r, done]
        else:
            mat = zeros((0, two_m))
            rhs = zeros(0)
        sol = solve_linear(mat, rhs)
        if sol is None:
            return
        part, null = sol
        d = null.shape[0]
        for ell in range(1 << d):
            w = part.copy()
            for j in range(d):
                if (ell >> (d - 1 - j)) & 1:
                    w ^= null[j]
            b[r] = w
            yield from rec(pos + 1)
        b[r] = a[r]

    yield from rec(0)


def enumerate_all(system: SymplecticSystem, cap: int = 1 << 20) -> list[np.ndarray]:
    """All solutions, materialized.  Raises when the count exceeds cap
    (use iter_all to stream beyond)."""
    out = []
    for f in iter_all(system):
        out.append(f)
        if len(out) > cap:
            raise ValueError("solution count exceeds cap %d" % cap)
    return out
