"""Exact dense linear algebra over the prime field GF(p).

Everything here works on numpy int64 arrays holding least non-negative
residues, reduced eagerly after every arithmetic step.  Subspaces are kept
in reduced row-echelon form, which makes equality, hashing and membership
structural operations.

Matrix products route through float64 BLAS when ``(p-1)^2 * inner_dim``
fits a double exactly (< 2**53); the result is exact and is folded back to
int64.  Otherwise plain int64 matmul is used.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

# Linear operators for close_under: either an explicit matrix acting on row
# vectors (v -> v @ M) or a callable mapping a (k, n) block to a (k, n) block.
LinearOperator = Union[np.ndarray, Callable[[np.ndarray], np.ndarray]]

_FLOAT_EXACT_LIMIT = float(2**53)


def check_prime(p: int) -> int:
    """Validate that p is a prime usable as a field characteristic.

    Args:
        p: candidate modulus.

    Returns:
        p itself, for call chaining.

    Raises:
        ValueError: if p is not a prime number.
    """
    if not isinstance(p, (int, np.integer)) or p < 2:
        raise ValueError(f"not a prime: {p!r}")
    if p in (2, 3, 5, 7, 11, 13):
        return int(p)
    if p % 2 == 0:
        raise ValueError(f"not a prime: {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"not a prime: {p}")
        d += 2
    return int(p)


def _as_residues(mat, p: int) -> np.ndarray:
    a = np.asarray(mat, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return np.mod(a, p)


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) mod p for int64 residue matrices."""
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if (p - 1) * (p - 1) * inner < _FLOAT_EXACT_LIMIT:
        prod = np.rint(a.astype(np.float64) @ b.astype(np.float64))
        return np.mod(prod, p).astype(np.int64)
    return np.mod(a @ b, p)


def rref(mat, p: int) -> tuple[np.ndarray, int]:
    """Reduced row-echelon form over GF(p).

    Args:
        mat: 2-D array-like of integers (any residues; reduced mod p here).
        p: prime modulus.

    Returns:
        (R, rank) where R is the RREF with leading coefficients 1 and zero
        rows (if any) at the bottom, and rank is the number of nonzero rows.
    """
    check_prime(p)
    a = _as_residues(mat, p)
    reduced, pivots = _rref_inplace(a, p)
    return reduced, len(pivots)


def _rref_inplace(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduce a (mutated) and return it with its pivot column list."""
    nrows, ncols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


class FpSubspace:
    """A subspace of GF(p)^n held as a canonical RREF basis.

    Two subspaces of the same ambient space are equal exactly when their
    basis arrays are identical; the basis array is non-writeable.
    """

    __slots__ = ("p", "ambient_dim", "basis", "pivots")

    def __init__(self, p: int, ambient_dim: int, basis: np.ndarray, pivots: tuple[int, ...]):
        # Internal constructor: callers go through from_vectors/zero/full.
        self.p = p
        self.ambient_dim = ambient_dim
        basis = np.ascontiguousarray(basis, dtype=np.int64)
        basis.setflags(write=False)
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "FpSubspace":
        check_prime(p)
        return cls(p, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64), ())

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "FpSubspace":
        check_prime(p)
        return cls(p, ambient_dim, np.eye(ambient_dim, dtype=np.int64),
                   tuple(range(ambient_dim)))

    @classmethod
    def from_vectors(cls, p: int, ambient_dim: int, vectors) -> "FpSubspace":
        """Span of the given row vectors."""
        check_prime(p)
        a = np.asarray(vectors, dtype=np.int64)
        if a.size == 0:
            return cls.zero(p, ambient_dim)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        if a.shape[1] != ambient_dim:
            raise ValueError(f"vectors have {a.shape[1]} columns, ambient is {ambient_dim}")
        reduced, pivots = _rref_inplace(np.mod(a, p), p)
        return cls(p, ambient_dim, reduced[: len(pivots)], tuple(pivots))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpSubspace):
            return NotImplemented
        return (self.p == other.p and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    def __hash__(self) -> int:
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"FpSubspace(p={self.p}, dim={self.dim}/{self.ambient_dim})"

    def contains(self, v) -> bool:
        """Membership of a single vector."""
        w = np.mod(np.asarray(v, dtype=np.int64), self.p)
        if w.shape != (self.ambient_dim,):
            raise ValueError(f"vector length {w.shape}, ambient is {self.ambient_dim}")
        if self.dim == 0:
            return not w.any()
        coeffs = w[list(self.pivots)].reshape(1, -1)
        residual = (w - matmul_mod(coeffs, self.basis, self.p)[0]) % self.p
        return not residual.any()

    def contains_space(self, other: "FpSubspace") -> bool:
        """True iff other is a subspace of self."""
        _check_same_space(self, other)
        if other.dim == 0:
            return True
        if self.dim == 0:
            return False
        coeffs = other.basis[:, list(self.pivots)]
        residual = (other.basis - matmul_mod(coeffs, self.basis, self.p)) % self.p
        return not residual.any()

    def reduce_rows(self, block: np.ndarray) -> np.ndarray:
        """Residual of a (k, n) residue block after projection onto self."""
        if self.dim == 0:
            return block
        coeffs = block[:, list(self.pivots)]
        return (block - matmul_mod(coeffs, self.basis, self.p)) % self.p


def _check_same_space(a: FpSubspace, b: FpSubspace) -> None:
    if a.p != b.p:
        raise ValueError(f"field mismatch: GF({a.p}) vs GF({b.p})")
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_contains(s: FpSubspace, v) -> bool:
    """Functional alias for FpSubspace.contains."""
    return s.contains(v)


def subspace_join(a: FpSubspace, b: FpSubspace) -> FpSubspace:
    """Smallest subspace containing both a and b."""
    _check_same_space(a, b)
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    stacked = np.vstack([a.basis, b.basis])
    return FpSubspace.from_vectors(a.p, a.ambient_dim, stacked)


def subspace_meet(a: FpSubspace, b: FpSubspace) -> FpSubspace:
    """Intersection of two subspaces (Zassenhaus block elimination)."""
    _check_same_space(a, b)
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return FpSubspace.zero(a.p, n)
    top = np.hstack([a.basis, a.basis])
    bottom = np.hstack([b.basis, np.zeros_like(b.basis)])
    block = np.vstack([top, bottom])
    reduced, pivots = _rref_inplace(block, a.p)
    rows = []
    for i in range(len(pivots)):
        if not reduced[i, :n].any():
            rows.append(reduced[i, n:])
    if not rows:
        return FpSubspace.zero(a.p, n)
    return FpSubspace.from_vectors(a.p, n, np.array(rows, dtype=np.int64))


class EchelonAccumulator:
    """Growable RREF basis: feed row blocks, keep a canonical echelon.

    The accumulator maintains the same canonical form as FpSubspace, so the
    final snapshot() is byte-identical to from_vectors over all fed rows.
    """

    def __init__(self, p: int, ambient_dim: int):
        check_prime(p)
        self.p = p
        self.ambient_dim = ambient_dim
        self._rows = np.zeros((0, ambient_dim), dtype=np.int64)
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return self._rows.shape[0]

    def add_block(self, block) -> np.ndarray:
        """Add a (k, n) block of residues; return the newly added RREF rows.

        The returned array is empty when the block lies in the current span.
        """
        blk = np.asarray(block, dtype=np.int64)
        if blk.size == 0:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        if blk.ndim == 1:
            blk = blk.reshape(1, -1)
        blk = np.mod(blk, self.p)
        if self._pivots:
            coeffs = blk[:, self._pivots]
            blk = (blk - matmul_mod(coeffs, self._rows, self.p)) % self.p
        blk = blk[blk.any(axis=1)]
        if blk.shape[0] == 0:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        reduced, new_pivots = _rref_inplace(blk, self.p)
        new_rows = reduced[: len(new_pivots)]
        if self._pivots:
            # Clear old rows' entries over the new pivot columns, then merge.
            coeffs = self._rows[:, new_pivots]
            if coeffs.any():
                self._rows = (self._rows - matmul_mod(coeffs, new_rows, self.p)) % self.p
        merged = sorted(
            list(zip(self._pivots, self._rows)) + list(zip(new_pivots, new_rows)),
            key=lambda t: t[0],
        )
        self._pivots = [piv for piv, _ in merged]
        self._rows = np.array([row for _, row in merged], dtype=np.int64)
        return new_rows

    def snapshot(self) -> FpSubspace:
        return FpSubspace(self.p, self.ambient_dim, self._rows.copy(),
                          tuple(self._pivots))


def _apply_operator(op: LinearOperator, block: np.ndarray, p: int) -> np.ndarray:
    if callable(op):
        return np.mod(np.asarray(op(block), dtype=np.int64), p)
    return matmul_mod(block, np.mod(np.asarray(op, dtype=np.int64), p), p)


def close_under(seed: FpSubspace, operators: Sequence[LinearOperator],
                max_dim: Optional[int] = None) -> FpSubspace:
    """Smallest subspace containing seed and stable under every operator.

    Args:
        seed: starting subspace.
        operators: linear maps on the ambient space, each either an (n, n)
            matrix acting on row vectors (v -> v @ M) or a callable mapping
            a (k, n) residue block to a (k, n) block.
        max_dim: optional early-exit dimension (the ambient dimension is
            always an implicit bound).

    Returns:
        The closure, in canonical form.
    """
    acc = EchelonAccumulator(seed.p, seed.ambient_dim)
    fresh = acc.add_block(seed.basis)
    bound = seed.ambient_dim if max_dim is None else min(max_dim, seed.ambient_dim)
    while fresh.shape[0] > 0 and acc.dim < bound:
        produced = []
        for op in operators:
            image = _apply_operator(op, fresh, seed.p)
            added = acc.add_block(image)
            if added.shape[0]:
                produced.append(added)
        fresh = np.vstack(produced) if produced else np.zeros((0, seed.ambient_dim), dtype=np.int64)
    return acc.snapshot()
