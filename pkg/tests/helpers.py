"""Shared construction helpers and independent oracles for the tests."""

from __future__ import annotations

import random
from typing import Optional

import numpy as np

from eaqecc import gf4
from eaqecc.builder import ClassicalCode, EaqeccCode
from eaqecc.pauli import PauliString
from eaqecc.symplectic import GeneratorSet, SymplecticMatrix

# Single-qubit products under Y = iXZ, written out by hand: (A, B) -> (i-exponent, A*B).
SINGLE_PRODUCTS = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}


def oracle_multiply(a: PauliString, b: PauliString) -> PauliString:
    """Position-by-position product via the literal single-qubit table."""
    assert a.n == b.n
    phase = a.phase_exp + b.phase_exp
    letters = []
    for j in range(a.n):
        extra, letter = SINGLE_PRODUCTS[(a.letter(j), b.letter(j))]
        phase += extra
        letters.append(letter)
    from eaqecc.pauli import parse_pauli

    base = parse_pauli("".join(letters)) if letters else PauliString(0, 0, 0)
    return PauliString(a.n, base.x, base.z, phase % 4)


def random_pauli(rng: random.Random, n: int, nonidentity: bool = False) -> PauliString:
    while True:
        x = rng.getrandbits(n) if n else 0
        z = rng.getrandbits(n) if n else 0
        if nonidentity and (x | z) == 0:
            continue
        return PauliString(n, x, z, 0)


def random_generator_set(rng: random.Random, n: int, m: int) -> GeneratorSet:
    return GeneratorSet(n, tuple(random_pauli(rng, n, nonidentity=True) for _ in range(m)))


def random_classical_code(
    rng: random.Random, n: Optional[int] = None, k: Optional[int] = None
) -> ClassicalCode:
    """Random [n, k] GF(4) code with independent parity-check rows."""
    if n is None:
        n = rng.randint(2, 6)
    if k is None:
        k = rng.randint(0, n - 1)
    while True:
        rows = [tuple(rng.randrange(4) for _ in range(n)) for _ in range(n - k)]
        if gf4.rank(rows, n) == n - k:
            return ClassicalCode.from_rows(n, k, rows)


def symplectic_matrix_to_numpy(m: SymplecticMatrix) -> np.ndarray:
    size = 2 * m.n
    return np.array(
        [[(m.rows[i] >> j) & 1 for j in range(size)] for i in range(size)], dtype=np.int64
    )


def numpy_symplectic_form(n: int) -> np.ndarray:
    zero = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    return np.block([[zero, eye], [eye, zero]])


def numpy_is_symplectic(m: SymplecticMatrix) -> bool:
    """Independent M J M^T = J check via numpy matrix arithmetic mod 2."""
    mat = symplectic_matrix_to_numpy(m)
    form = numpy_symplectic_form(m.n)
    return bool(((mat @ form @ mat.T) % 2 == form).all())


def isotropic_span_rows(codeq: EaqeccCode) -> set:
    """All 2**s isotropic-span (x|z) rows by exhaustive subset enumeration."""
    rows = [g.row() for g in codeq.decomposition.isotropic]
    span = set()
    for combo in range(1 << len(rows)):
        vec = 0
        for j, r in enumerate(rows):
            if (combo >> j) & 1:
                vec ^= r
        span.add(vec)
    return span
