"""Lie dimension subgroups, the d-sequence, and the upper index.

The m-th Lie dimension subgroup of F_p[G] is computed from the lower
central series by the product formula

    D_(m) = product of gamma_i(G)^(p^j) over all i >= 2, j >= 0
            with (i-1) * p^j >= m - 1,

and the d-sequence is d_(m) = log_p |D_(m) : D_(m+1)|.  The upper Lie
nilpotency index then comes out of the weighted sum

    t = 2 + (p-1) * sum_{m>=1} m * d_(m+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from lienil.pcgroup import PcGroup
from lienil.subgroups import (
    DEFAULT_CAP,
    Subgroup,
    lower_central_series,
    power_subgroup,
    subgroup_product,
    trivial_subgroup,
    _log_p,
)


@dataclass(frozen=True)
class DSequence:
    """Finitely supported sequence m -> d_(m) for m >= 2 (zero entries absent)."""

    p: int
    d: tuple[tuple[int, int], ...]  # sorted (m, d_m) pairs, d_m > 0

    @classmethod
    def from_dict(cls, p: int, values: dict[int, int]) -> "DSequence":
        items = tuple(sorted((m, v) for m, v in values.items() if v))
        for m, v in items:
            if m < 2 or v < 0:
                raise ValueError(f"bad d-sequence entry d_({m}) = {v}")
        return cls(p, items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.d)

    def get(self, m: int) -> int:
        for mm, v in self.d:
            if mm == m:
                return v
        return 0

    def total(self) -> int:
        """Sum of all d_(m); equals log_p |G'| for sequences from groups."""
        return sum(v for _, v in self.d)

    def weight(self) -> int:
        """sum_{m>=1} m * d_(m+1), the quantity Jennings' formula weighs."""
        return sum((m - 1) * v for m, v in self.d)

    def __str__(self) -> str:
        if not self.d:
            return "{}"
        return "{" + ", ".join(f"d_({m})={v}" for m, v in self.d) + "}"


class NotLieNilpotent(ValueError):
    """F_p[G] is not Lie nilpotent for the requested (G, p)."""


def _gamma_power(cache: dict, series: list[Subgroup], i: int, j: int,
                 cap: int) -> Subgroup:
    key = (i, j)
    if key not in cache:
        p = series[0].group.p
        cache[key] = power_subgroup(series[i - 1], p**j, cap)
    return cache[key]


def lie_dimension_subgroup(G: PcGroup, m: int, cap: int = DEFAULT_CAP,
                           _series: Optional[list[Subgroup]] = None,
                           _cache: Optional[dict] = None) -> Subgroup:
    """The m-th Lie dimension subgroup, m >= 2, by the product formula."""
    if m < 2:
        raise ValueError(f"Lie dimension subgroups start at m = 2, got {m}")
    series = lower_central_series(G, cap) if _series is None else _series
    cache = {} if _cache is None else _cache
    p = G.p
    result = trivial_subgroup(G)
    for i in range(2, len(series) + 1):
        gamma_i = series[i - 1] if i - 1 < len(series) else None
        if gamma_i is None or gamma_i.is_trivial():
            break
        j = 0
        while True:
            piece = _gamma_power(cache, series, i, j, cap)
            if (i - 1) * p**j >= m - 1:
                result = subgroup_product(result, piece, cap)
            if piece.is_trivial():
                break
            j += 1
    return result


def lie_dimension_chain(G: PcGroup, cap: int = DEFAULT_CAP) -> list[Subgroup]:
    """[D_(2), D_(3), ...], ending at the first trivial term.

    The descending-chain property D_(m+1) <= D_(m) is asserted; it doubles
    as a cross-check on the subgroup products.
    """
    series = lower_central_series(G, cap)
    cache: dict = {}
    chain: list[Subgroup] = []
    m = 2
    while True:
        dm = lie_dimension_subgroup(G, m, cap, _series=series, _cache=cache)
        if chain:
            assert dm <= chain[-1], f"D_({m}) not contained in D_({m-1})"
        chain.append(dm)
        if dm.is_trivial():
            return chain
        m += 1


def d_sequence(G: PcGroup, cap: int = DEFAULT_CAP) -> DSequence:
    """The Jennings d-sequence of F_p[G] for p the group prime."""
    chain = lie_dimension_chain(G, cap)
    p = G.p
    values: dict[int, int] = {}
    for idx in range(len(chain) - 1):
        m = idx + 2
        ratio = chain[idx].order // chain[idx + 1].order
        if chain[idx].order % chain[idx + 1].order:
            raise ValueError(f"|D_({m})| not divisible by |D_({m+1})|")
        values[m] = _log_p(ratio, p)
    seq = DSequence.from_dict(p, values)
    derived_order = chain[0].order  # D_(2) = G'
    assert seq.total() == _log_p(derived_order, p), "d-sequence mass check failed"
    return seq


def jennings_index(d: DSequence) -> int:
    """Upper Lie nilpotency index from a d-sequence."""
    return 2 + (d.p - 1) * d.weight()


def upper_index(G: PcGroup, cap: int = DEFAULT_CAP) -> int:
    """t^L of F_p[G]; checks the Lie nilpotency preconditions first.

    For a consistent pc p-group presentation the preconditions (G nilpotent,
    |G'| a p-power) always hold; they are still verified so the function
    fails loudly on anything else that may get wired in.
    """
    series = lower_central_series(G, cap)
    if not series[-1].is_trivial():
        raise NotLieNilpotent("group is not nilpotent")
    try:
        _log_p(series[1].order if len(series) > 1 else 1, G.p)
    except ValueError as exc:
        raise NotLieNilpotent(f"|G'| is not a power of {G.p}") from exc
    return jennings_index(d_sequence(G, cap))
