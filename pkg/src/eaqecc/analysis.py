"""Syndromes, distance search, correctability, and bound calculators.

The syndrome of an error is the vector of symplectic products against the
code's sender-side generators in construction order; receiver qubits are
assumed error-free.  An error set is correctable exactly when every pair
product is either detected (nonzero syndrome) or harmless (inside the
isotropic span).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import gf2
from .builder import EaqeccCode
from .pauli import PauliString, iter_paulis_of_weight, symplectic_product

Syndrome = Tuple[int, ...]


def syndrome_of(codeq: EaqeccCode, e: PauliString) -> Syndrome:
    """Commutation bits of e against each generator, in generator order."""
    if e.n != codeq.n:
        raise ValueError(f"error acts on {e.n} qubits, code has {codeq.n}")
    return tuple(symplectic_product(g, e) for g in codeq.generators)


def _isotropic_basis(codeq: EaqeccCode) -> Tuple[List[int], List[int]]:
    rows = [g.row() for g in codeq.decomposition.isotropic]
    return gf2.row_reduce(rows, 2 * codeq.n)


def in_isotropic(codeq: EaqeccCode, p: PauliString) -> bool:
    """Whether p's (x|z) row lies in the isotropic span (phase ignored)."""
    if p.n != codeq.n:
        raise ValueError(f"operator acts on {p.n} qubits, code has {codeq.n}")
    reduced, pivots = _isotropic_basis(codeq)
    return gf2.reduce_vector(p.row(), reduced, pivots) == 0


@dataclass(frozen=True)
class CorrectabilityReport:
    """Outcome of a correctable-set check, with a witness on failure."""

    correctable: bool
    witness: Optional[Tuple[PauliString, PauliString]] = None

    def __bool__(self) -> bool:
        return self.correctable


def check_correctable_set(
    codeq: EaqeccCode, errors: Sequence[PauliString]
) -> CorrectabilityReport:
    """Check that every pair product is detected or isotropic.

    Returns the first offending pair (a, b) whose product commutes with
    all generators yet falls outside the isotropic span.
    """
    reduced, pivots = _isotropic_basis(codeq)
    swapped = [_swap_halves(g.row(), codeq.n) for g in codeq.generators]
    rows = [e.row() for e in errors]
    for i in range(len(errors)):
        for j in range(i, len(errors)):
            prod = rows[i] ^ rows[j]
            if any(gf2.parity(prod & s) for s in swapped):
                continue
            if gf2.reduce_vector(prod, reduced, pivots) != 0:
                return CorrectabilityReport(False, (errors[i], errors[j]))
    return CorrectabilityReport(True)


def _swap_halves(v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (v >> n) | ((v & mask) << n)


@dataclass(frozen=True)
class DistanceResult:
    """Exact distance when found within the cap, else a lower bound."""

    distance: Optional[int]
    weight_cap: int

    @property
    def exact(self) -> bool:
        return self.distance is not None

    @property
    def lower_bound(self) -> int:
        return self.distance if self.distance is not None else self.weight_cap + 1

    def __str__(self) -> str:
        if self.distance is not None:
            return str(self.distance)
        return f">= {self.weight_cap + 1}"


def min_distance_bruteforce(codeq: EaqeccCode, weight_cap: int) -> DistanceResult:
    """Smallest weight of an undetected, non-isotropic Pauli.

    Enumerates supports by increasing weight with early exit; exponential,
    intended for small codes.  When nothing is found up to the cap the
    result only certifies distance >= cap + 1.
    """
    if weight_cap < 1:
        raise ValueError(f"weight_cap must be >= 1, got {weight_cap}")
    reduced, pivots = _isotropic_basis(codeq)
    swapped = [_swap_halves(g.row(), codeq.n) for g in codeq.generators]
    for w in range(1, min(weight_cap, codeq.n) + 1):
        for p in iter_paulis_of_weight(codeq.n, w):
            row = p.row()
            if any(gf2.parity(row & s) for s in swapped):
                continue
            if gf2.reduce_vector(row, reduced, pivots) != 0:
                return DistanceResult(w, weight_cap)
    return DistanceResult(None, weight_cap)


def nondegenerate_distinct_syndromes(codeq: EaqeccCode, t: int) -> bool:
    """Whether all nonidentity errors of weight <= t have distinct nonzero syndromes."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    seen = set()
    zero = (0,) * len(codeq.generators)
    for w in range(1, min(t, codeq.n) + 1):
        for p in iter_paulis_of_weight(codeq.n, w):
            s = syndrome_of(codeq, p)
            if s == zero or s in seen:
                return False
            seen.add(s)
    return True


@dataclass(frozen=True)
class BoundsReport:
    """Singleton slacks for a classical [n, k, d] code and its quantum image."""

    singleton_classical_slack: int
    singleton_quantum_slack: int
    hashing_rate_at: Tuple[Tuple[float, float, float], ...] = ()

    @property
    def classical_saturated(self) -> bool:
        return self.singleton_classical_slack == 0

    @property
    def quantum_saturated(self) -> bool:
        return self.singleton_quantum_slack == 0


def singleton_report(
    n: int, k: int, d: int, c: int = 0, f_list: Sequence[float] = ()
) -> BoundsReport:
    """Slack of n - k >= d - 1 and of its doubled quantum counterpart.

    (n, k, d) are the classical code's parameters; c only labels the
    derived [[n, 2k-n+c, d; c]] code and does not enter the slacks.
    """
    if not 0 <= k <= n or d < 1:
        raise ValueError(f"invalid parameters [n={n}, k={k}, d={d}]")
    classical = (n - k) - (d - 1)
    quantum = 2 * (n - k) - 2 * (d - 1)
    rates = tuple((f,) + hashing_rates(f) for f in f_list)
    return BoundsReport(classical, quantum, rates)


def _entropy(f: float, base: float) -> float:
    """Shannon entropy -f log_b f - (1-f) log_b (1-f), zero at the endpoints."""
    if f in (0.0, 1.0):
        return 0.0
    return -(f * math.log(f, base) + (1.0 - f) * math.log(1.0 - f, base))


def hashing_rates(f: float) -> Tuple[float, float]:
    """(R_C, R_Q) at depolarizing probability f.

    R_C = 1 - (H_4(f) + f log_4 3) is the quaternary symmetric channel
    capacity; R_Q = 2 R_C - 1 equals the depolarizing hashing rate
    1 - (H_2(f) + f log_2 3).
    """
    if not 0.0 <= f <= 1.0:
        raise ValueError(f"probability {f} outside [0, 1]")
    r_c = 1.0 - (_entropy(f, 4.0) + f * math.log(3.0, 4.0))
    r_q = 2.0 * r_c - 1.0
    return r_c, r_q


__all__ = [
    "Syndrome",
    "syndrome_of",
    "in_isotropic",
    "CorrectabilityReport",
    "check_correctable_set",
    "DistanceResult",
    "min_distance_bruteforce",
    "nondegenerate_distinct_syndromes",
    "BoundsReport",
    "singleton_report",
    "hashing_rates",
]
