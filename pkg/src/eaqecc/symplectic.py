"""Symplectic-pair / isotropic decomposition of Pauli generator sets.

Any set of independent Pauli generators splits into c anti-commuting
pairs (zbar_i, xbar_i) plus s mutually commuting "isotropic" generators,
with every cross product commuting.  The split is computed by a
deterministic symplectic Gram-Schmidt sweep over the (x|z) vectors, and
2c always equals the GF(2) rank of the pairwise commutation matrix.

The companion construction produces a 2n x 2n binary symplectic matrix
mapping the canonical single-qubit generators (Z_1, X_1, ..., Z_c, X_c on
pair slots, then Z on each ancilla slot) onto the decomposition, acting on
(x|z) row vectors from the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import gf2
from .pauli import PauliString, equal_up_to_phase, multiply, symplectic_product


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, possibly non-commuting Pauli generators on n qubits."""

    n: int
    gens: Tuple[PauliString, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator on {g.n} qubits in a {self.n}-qubit set")
            if g.is_identity():
                raise ValueError("identity (up to phase) is not a valid generator")

    @classmethod
    def from_paulis(cls, n: int, gens: Sequence[PauliString]) -> "GeneratorSet":
        return cls(n, tuple(gens))

    @classmethod
    def from_strings(cls, texts: Sequence[str]) -> "GeneratorSet":
        from .pauli import parse_pauli

        gens = tuple(parse_pauli(t) for t in texts)
        if not gens:
            raise ValueError("cannot infer qubit count from an empty list")
        return cls(gens[0].n, gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def rows(self) -> List[int]:
        return [g.row() for g in self.gens]


@dataclass(frozen=True)
class Decomposition:
    """c symplectic pairs plus s isotropic generators on n qubits."""

    n: int
    pairs: Tuple[Tuple[PauliString, PauliString], ...]
    isotropic: Tuple[PauliString, ...]

    @property
    def c(self) -> int:
        return len(self.pairs)

    @property
    def s(self) -> int:
        return len(self.isotropic)

    def generators(self) -> Tuple[PauliString, ...]:
        """All generators in order zbar_1, xbar_1, ..., then isotropic."""
        out: List[PauliString] = []
        for zbar, xbar in self.pairs:
            out.append(zbar)
            out.append(xbar)
        out.extend(self.isotropic)
        return tuple(out)

    def validate(self) -> None:
        """Raise ValueError unless the pairing pattern and independence hold."""
        gens = self.generators()
        for g in gens:
            if g.n != self.n:
                raise ValueError("generator qubit count differs from decomposition n")
        for i, a in enumerate(gens):
            for j in range(i + 1, len(gens)):
                b = gens[j]
                expect = 1 if (i // 2 == j // 2 and i < 2 * self.c and j < 2 * self.c) else 0
                if symplectic_product(a, b) != expect:
                    raise ValueError(
                        f"generators {i} and {j} have symplectic product "
                        f"{1 - expect}, expected {expect}"
                    )
        rows = [g.row() for g in gens]
        if gf2.rank(rows, 2 * self.n) != len(rows):
            raise ValueError("decomposition generators are GF(2)-dependent")


def reduce_independent(g: GeneratorSet) -> GeneratorSet:
    """Greedy subset of g whose (x|z) rows form a basis of g's row space."""
    kept: List[PauliString] = []
    basis: List[int] = []
    pivots: List[int] = []
    for gen in g.gens:
        residue = gf2.reduce_vector(gen.row(), basis, pivots)
        if residue == 0:
            continue
        kept.append(gen)
        basis.append(residue)
        pivots.append((residue & -residue).bit_length() - 1)
    return GeneratorSet(g.n, tuple(kept))


def commutation_matrix(g: GeneratorSet) -> List[List[int]]:
    """Pairwise symplectic products; antisymmetric with zero diagonal."""
    m = len(g.gens)
    mat = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            v = symplectic_product(g.gens[i], g.gens[j])
            mat[i][j] = v
            mat[j][i] = v
    return mat


def gram_schmidt_decompose(g: GeneratorSet) -> Decomposition:
    """Split independent generators into symplectic pairs and isotropic part.

    Generators are processed in input order.  The first later generator
    anti-commuting with the current one becomes its partner; the partner is
    multiplied into every remaining generator anti-commuting with the
    current, and the current into every remaining generator anti-commuting
    with the partner, which restores commutation with the extracted pair.
    """
    todo = list(g.gens)
    pairs: List[Tuple[PauliString, PauliString]] = []
    isotropic: List[PauliString] = []
    while todo:
        cur = todo.pop(0)
        partner_idx = None
        for j, h in enumerate(todo):
            if symplectic_product(cur, h):
                partner_idx = j
                break
        if partner_idx is None:
            isotropic.append(cur)
            continue
        partner = todo.pop(partner_idx)
        cleaned: List[PauliString] = []
        for r in todo:
            if symplectic_product(r, cur):
                r = multiply(r, partner)
            if symplectic_product(r, partner):
                r = multiply(r, cur)
            cleaned.append(r)
        todo = cleaned
        pairs.append((cur, partner))
    m = len(g.gens)
    ell = len(pairs) + len(isotropic)
    assert m - m // 2 <= ell <= m, "pair/isotropic counts violate the size constraint"
    return Decomposition(g.n, tuple(pairs), tuple(isotropic))


def group_equal_up_to_phase(a: GeneratorSet, b: GeneratorSet) -> bool:
    """Whether a and b generate the same group modulo phases."""
    if a.n != b.n:
        raise ValueError(f"qubit count mismatch: {a.n} vs {b.n}")
    width = 2 * a.n
    ra = gf2.rank(a.rows(), width)
    rb = gf2.rank(b.rows(), width)
    return ra == rb == gf2.rank(a.rows() + b.rows(), width)


@dataclass(frozen=True)
class SymplecticMatrix:
    """2n x 2n GF(2) matrix acting on (x|z) row vectors from the right.

    Row t is the image of the basis row vector e_t; columns 0..n-1 are
    x-bits and columns n..2n-1 are z-bits, matching PauliString.row().
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != 2 * self.n:
            raise ValueError(f"expected {2 * self.n} rows, got {len(self.rows)}")

    def image_of(self, row_vector: int) -> int:
        """Image of a 2n-bit (x|z) row vector under right multiplication."""
        out = 0
        v = row_vector
        while v:
            j = (v & -v).bit_length() - 1
            out ^= self.rows[j]
            v &= v - 1
        return out

    def is_symplectic(self) -> bool:
        """Check M J M^T = J for the x/z block pairing form J."""
        n = self.n
        for a in range(2 * n):
            for b in range(a, 2 * n):
                want = 1 if abs(a - b) == n else 0
                if _sp_rows(self.rows[a], self.rows[b], n) != want:
                    return False
        return True


def _sp_rows(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    swapped = (v >> n) | ((v & mask) << n)
    return (u & swapped).bit_count() & 1


def find_encoding_symplectic(d: Decomposition) -> SymplecticMatrix:
    """Symplectic matrix carrying the canonical generators onto d.

    Canonical layout: pair slots first (rows i and n+i for i < c hold
    xbar_{i+1} and zbar_{i+1}), ancilla slots next (row n+c+j holds the
    j-th isotropic generator), logical slots last.  The free rows are
    completed deterministically: each ancilla partner and logical row is
    the pivoting solution of the GF(2) linear system expressing the
    required symplectic products against everything placed so far.
    """
    d.validate()
    n, c, s = d.n, d.c, d.s
    if c + s > n:
        raise ValueError(f"decomposition needs {c + s} slots but only {n} qubits exist")
    width = 2 * n
    rows: List[Optional[int]] = [None] * width
    for i, (zbar, xbar) in enumerate(d.pairs):
        rows[i] = xbar.row()
        rows[n + i] = zbar.row()
    for j, iso in enumerate(d.isotropic):
        rows[n + c + j] = iso.row()

    def placed_indices() -> List[int]:
        return [t for t in range(width) if rows[t] is not None]

    def solve_for(target: int) -> int:
        placed = placed_indices()
        constraints = [_swap_halves(rows[t], n) for t in placed]
        rhs = [1 if abs(t - target) == n else 0 for t in placed]
        sol = gf2.solve(constraints, rhs, width)
        if sol is None:
            raise ValueError("cannot complete symplectic basis; generators degenerate")
        return sol

    # partners for the ancilla slots
    for j in range(s):
        rows[c + j] = solve_for(c + j)
    # fresh hyperbolic pairs for the logical slots; prefer a pure-Z row so
    # that the canonical decomposition completes to the identity matrix
    x_half = (1 << n) - 1
    for q in range(c + s, n):
        placed = placed_indices()
        constraints = [_swap_halves(rows[t], n) for t in placed]
        basis = gf2.nullspace(constraints, width)
        rows[n + q] = next((v for v in basis if v & x_half == 0), basis[0])
        rows[q] = solve_for(q)

    m = SymplecticMatrix(n, tuple(rows))
    assert m.is_symplectic(), "completed matrix fails the symplectic form check"
    assert gf2.rank(list(m.rows), width) == width, "completed matrix is singular"
    return m


def _swap_halves(v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (v >> n) | ((v & mask) << n)


def canonical_generator_rows(d: Decomposition) -> List[Tuple[int, int]]:
    """(canonical row vector, target row vector) pairs checked by tests.

    Canonical generators follow the pair/ancilla slot layout: Z then X on
    each pair slot, Z alone on each ancilla slot.
    """
    n = d.n
    out: List[Tuple[int, int]] = []
    for i, (zbar, xbar) in enumerate(d.pairs):
        out.append((1 << (n + i), zbar.row()))
        out.append((1 << i, xbar.row()))
    for j, iso in enumerate(d.isotropic):
        out.append((1 << (n + d.c + j), iso.row()))
    return out


__all__ = [
    "GeneratorSet",
    "Decomposition",
    "SymplecticMatrix",
    "reduce_independent",
    "commutation_matrix",
    "gram_schmidt_decompose",
    "group_equal_up_to_phase",
    "find_encoding_symplectic",
    "canonical_generator_rows",
]
