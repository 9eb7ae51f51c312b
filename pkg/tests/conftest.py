from __future__ import annotations

import pathlib

import numpy as np
import pytest

import sympcliff as sc

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def all_symplectic(m: int) -> list[np.ndarray]:
    """Every element of Sp(2m, F2) by exhaustive filter; only m <= 2 is sane."""
    n = 2 * m
    count = 1 << (n * n)
    ints = np.arange(count, dtype=np.uint64)
    shifts = np.arange(n * n, dtype=np.uint64)
    mats = ((ints[:, None] >> shifts[None, :]) & 1).astype(np.int64)
    mats = mats.reshape(count, n, n)
    w = sc.omega(m).astype(np.int64)
    prod = np.einsum("kij,jl,kml->kim", mats, w, mats) % 2
    keep = np.all(prod == w[None, :, :], axis=(1, 2))
    return [np.ascontiguousarray(f) for f in mats[keep].astype(np.uint8)]


@pytest.fixture(scope="session")
def sp2():
    return all_symplectic(1)


@pytest.fixture(scope="session")
def sp4():
    return all_symplectic(2)


@pytest.fixture(scope="session")
def code642():
    return sc.load_code((FIXTURES / "sixfourtwo.code").read_text())


@pytest.fixture(scope="session")
def code513():
    return sc.load_code((FIXTURES / "fivequbit.code").read_text())
