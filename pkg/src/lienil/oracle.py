"""Brute-force Lie power chains inside the group algebra F_p[G].

This is the package's ground truth: the algebra is materialized as a
dim x dim multiplication table of basis indices, the upper chain

    M^(1) = F_p[G],   M^(n+1) = ideal generated by [M^(n), F_p[G]]

and the lower chain (left-normed bracket spans, then the ideals they
generate) are computed as explicit subspaces, and the nilpotency
indices are read off as the first chain index whose term vanishes.
Everything here is exact arithmetic mod p on numpy arrays; nothing is
shared with the Jennings-style computation in lienil.dimension, so the
two routes cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from lienil.fp_linalg import EchelonAccumulator, FpSubspace, close_under
from lienil.pcgroup import Element, PcGroup

DEFAULT_ORACLE_CAP = 256


class OracleCapExceeded(RuntimeError):
    """The group is too large for the dense-algebra oracle."""


class NotLieNilpotentDetected(RuntimeError):
    """The chain went stationary at a nonzero term (or ran past its bound)."""


@dataclass
class GroupAlgebra:
    """F_p[G] with a dense basis-index multiplication table.

    Attributes:
        group: the underlying group.
        p: the coefficient characteristic (always the group prime here).
        elements: basis order; elements[0] is the identity.
        table: table[a, b] = index of elements[a] * elements[b].
        generator_indices: positions of the pc generators in `elements`.
    """

    group: PcGroup
    p: int
    elements: list[Element]
    table: np.ndarray
    generator_indices: tuple[int, ...]
    index: dict[Element, int] = field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.elements)

    def left_mult_op(self, b: int) -> Callable[[np.ndarray], np.ndarray]:
        """Operator v -> e_b * v on coefficient row blocks."""
        dest = self.table[b, :]

        def op(block: np.ndarray) -> np.ndarray:
            out = np.empty_like(block)
            out[:, dest] = block
            return out

        return op

    def right_mult_op(self, b: int) -> Callable[[np.ndarray], np.ndarray]:
        """Operator v -> v * e_b on coefficient row blocks."""
        dest = self.table[:, b]

        def op(block: np.ndarray) -> np.ndarray:
            out = np.empty_like(block)
            out[:, dest] = block
            return out

        return op

    def bracket_with_basis(self, block: np.ndarray, b: int) -> np.ndarray:
        """[v, e_b] = v*e_b - e_b*v for each row v of the block."""
        right = np.empty_like(block)
        right[:, self.table[:, b]] = block
        left = np.empty_like(block)
        left[:, self.table[b, :]] = block
        return (right - left) % self.p

    def ideal_operators(self) -> list[Callable[[np.ndarray], np.ndarray]]:
        """Left/right multiplication by each group generator.

        Multiplication by an arbitrary basis element is a composition of
        these (the table is built by exactly that composition), so closing
        a subspace under this list closes it under the full two-sided
        ideal operations.
        """
        ops: list[Callable[[np.ndarray], np.ndarray]] = []
        for g in self.generator_indices:
            ops.append(self.left_mult_op(g))
            ops.append(self.right_mult_op(g))
        return ops


def build_algebra(G: PcGroup, cap: int = DEFAULT_ORACLE_CAP) -> GroupAlgebra:
    """Materialize F_p[G]; refuses groups with more than `cap` elements."""
    if G.order > cap:
        raise OracleCapExceeded(
            f"group order {G.order} exceeds the oracle cap {cap}"
        )
    p = G.p
    gens = list(G.generators())
    # BFS enumeration by right multiplication; identity first.
    elements: list[Element] = [G.identity]
    index: dict[Element, int] = {G.identity: 0}
    frontier = [G.identity]
    while frontier:
        nxt: list[Element] = []
        for x in frontier:
            for g in gens:
                y = G.multiply(x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt
    dim = len(elements)
    assert dim == G.order, "enumeration does not match the declared order"

    # Column for element y: col_y[x] = index(elements[x] * y).  Columns for
    # the generators are computed directly; every other column is a
    # composition col_{h*g} = col_g[col_h], filled in BFS discovery order so
    # col_h always exists before col_{h*g} is needed.
    cols = np.empty((dim, dim), dtype=np.int32)
    cols[:, 0] = np.arange(dim, dtype=np.int32)
    gen_cols: dict[int, np.ndarray] = {}
    for g in gens:
        gi = index[g]
        col = np.empty(dim, dtype=np.int32)
        for xi, x in enumerate(elements):
            col[xi] = index[G.multiply(x, g)]
        gen_cols[gi] = col
        cols[:, gi] = col
    done = {0} | set(gen_cols)
    order_of_discovery = list(range(dim))
    # Re-walk products in the same BFS order to fill the rest.
    for hi in order_of_discovery:
        for g in gens:
            gi = index[g]
            yi = int(gen_cols[gi][hi])
            if yi in done:
                continue
            cols[:, yi] = gen_cols[gi][cols[:, hi]]
            done.add(yi)
    assert len(done) == dim
    gen_indices = tuple(index[g] for g in gens)
    return GroupAlgebra(group=G, p=p, elements=elements, table=cols,
                        generator_indices=gen_indices, index=index)


@dataclass
class LiePowerChain:
    """A computed chain of subspaces; spaces[k] is the (k+1)-st term."""

    kind: str  # "upper" or "lower"
    spaces: list[FpSubspace]
    t: Optional[int]  # first index with zero term, or None if not reached

    def dims(self) -> list[int]:
        return [s.dim for s in self.spaces]


def _seed_brackets(A: GroupAlgebra, basis_block: np.ndarray,
                   against: tuple[int, ...]) -> FpSubspace:
    """Span of [v, e_b] for v in the block rows, b in `against`."""
    acc = EchelonAccumulator(A.p, A.dim)
    for b in against:
        acc.add_block(A.bracket_with_basis(basis_block, b))
    return acc.snapshot()


def _chain_bound(A: GroupAlgebra) -> int:
    """|G'| + 2, the a-priori stopping bound for both chains."""
    from lienil.subgroups import derived_subgroup, whole_group

    return derived_subgroup(whole_group(A.group), A.dim).order + 2


def upper_lie_chain(A: GroupAlgebra, seed_generators_only: bool = False,
                    max_terms: Optional[int] = None) -> LiePowerChain:
    """The chain M^(n): each term is the ideal generated by brackets of the
    previous term against the algebra.

    By default brackets are seeded against every algebra basis element.
    With `seed_generators_only` they are seeded against group generators
    alone: the identity [v, xy] = [v, x]y + x[v, y] shows the ideal
    generated by brackets against products equals the ideal generated by
    brackets against the factors, so the closure spans the same ideal.
    The equality of the two routes is asserted by a test; the reduced
    route exists for large one-off runs.
    """
    against = (A.generator_indices if seed_generators_only
               else tuple(range(A.dim)))
    ops = A.ideal_operators()
    bound = _chain_bound(A) if max_terms is None else max_terms
    full = FpSubspace.full(A.p, A.dim)
    spaces = [full]
    while True:
        current = spaces[-1]
        if current.is_zero():
            return LiePowerChain("upper", spaces, t=len(spaces))
        seed = _seed_brackets(A, current.basis, against)
        nxt = close_under(seed, ops)
        if nxt == current:
            raise NotLieNilpotentDetected(
                "upper chain went stationary at nonzero dimension "
                f"{current.dim}: not Lie nilpotent (or a bug)"
            )
        spaces.append(nxt)
        if len(spaces) > bound + 1:
            raise NotLieNilpotentDetected(
                f"upper chain exceeded {bound} terms without vanishing: "
                "not Lie nilpotent (or a bug)"
            )


def lower_lie_chain(A: GroupAlgebra,
                    max_terms: Optional[int] = None) -> LiePowerChain:
    """The chain of ideals generated by left-normed brackets.

    V_1 = F_p[G]; V_{n+1} = span of [v, e_b] over v in a basis of V_n and
    every basis element e_b (no generator reduction is valid here: the
    spans, unlike the ideals they generate, do not absorb products).  The
    reported chain term is the ideal generated by V_n; it vanishes exactly
    when V_n does.
    """
    all_basis = tuple(range(A.dim))
    ops = A.ideal_operators()
    bound = _chain_bound(A) if max_terms is None else max_terms
    full = FpSubspace.full(A.p, A.dim)
    v_current = full
    spaces = [full]
    while True:
        if v_current.is_zero():
            return LiePowerChain("lower", spaces, t=len(spaces))
        v_next = _seed_brackets(A, v_current.basis, all_basis)
        if v_next == v_current:
            raise NotLieNilpotentDetected(
                "lower bracket spans went stationary at nonzero dimension "
                f"{v_current.dim}: not Lie nilpotent (or a bug)"
            )
        spaces.append(close_under(v_next, ops))
        v_current = v_next
        if len(spaces) > bound + 1:
            raise NotLieNilpotentDetected(
                f"lower chain exceeded {bound} terms without vanishing: "
                "not Lie nilpotent (or a bug)"
            )


def t_upper_direct(G: PcGroup, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """t^L of F_p[G] read off the upper chain."""
    chain = upper_lie_chain(build_algebra(G, cap))
    assert chain.t is not None
    return chain.t


def t_lower_direct(G: PcGroup, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """t_L of F_p[G] read off the lower chain."""
    chain = lower_lie_chain(build_algebra(G, cap))
    assert chain.t is not None
    return chain.t
