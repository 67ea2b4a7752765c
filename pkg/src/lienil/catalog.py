"""Group builders, the built-in test catalog, and table verification.

Standard constructions (abelian p-groups, dihedral, quaternion,
Heisenberg, free class-2 groups, the groups presented inside condition
rows) all produce CatalogEntry objects: a named, consistency-checked pc
group, optionally tagged with a declared external small-group id and a
set of expected invariants.

The data/tables directory ships presentations for the order-3125, 2187
and 243 reference groups used by the condition table and the expected
column values to verify them against.  Those files are data: the id
labels declare positions in the external small-groups numbering and the
presentations were assembled to match the published invariant columns,
row by row (see the repository README for the exact claim).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .pcgroup import PcGroup, PresentationMeta, Word, parse_presentation_with_meta
from .subgroups import (DEFAULT_CAP, IsoType, Subgroup, center,
                        derived_subgroup, fingerprint, intersection,
                        power_subgroup, whole_group)

DATA_DIR = Path(__file__).resolve().parent / "data" / "tables"


@dataclass
class CatalogEntry:
    """A named group plus optional identification and expectations."""

    name: str
    group: PcGroup
    declared_id: Optional[tuple[int, int]] = None
    expected: dict[str, str] = field(default_factory=dict)
    description: str = ""

    @property
    def order(self) -> int:
        return self.group.order


# ---------------------------------------------------------------------------
# builders


def _is_p_power(n: int, p: int) -> bool:
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


def build_abelian(p: int, invariant_factors: Iterable[int]) -> CatalogEntry:
    """Direct product of cyclic p-groups with the given invariant factors."""
    factors = sorted(invariant_factors, reverse=True)
    if not factors:
        raise ValueError("need at least one invariant factor")
    for f in factors:
        if f < p or not _is_p_power(f, p):
            raise ValueError(f"invariant factor {f} is not a power of {p} (> 1)")
    powers: dict[int, Word] = {}
    idx = 0
    for f in factors:
        length = 0
        n = f
        while n > 1:
            n //= p
            length += 1
        for step in range(length - 1):
            powers[idx + step] = ((idx + step + 1, 1),)
        idx += length
    group = PcGroup(p, idx, powers=powers, comms={})
    name = "abelian-" + "x".join(f"C{f}" for f in factors) + f"-p{p}"
    return CatalogEntry(name, group,
                        description="abelian, invariant factors "
                        + "x".join(str(f) for f in factors))


def _cyclic_chain_comm(first: int, last: int) -> Word:
    # inverse of the chain generator g_first is g_first * g_(first+1) * ...,
    # so [g_k, reflection] = g_(k+1) ... g_last
    return tuple((i, 1) for i in range(first, last + 1))


def build_dihedral(order: int) -> CatalogEntry:
    """Dihedral 2-group: reflection plus a cyclic chain for the rotation."""
    if order < 8 or order & (order - 1):
        raise ValueError("dihedral builder needs a 2-power order >= 8")
    n = order.bit_length() - 1  # order = 2^n
    powers: dict[int, Word] = {}
    for k in range(1, n - 1):
        powers[k] = ((k + 1, 1),)
    comms: dict[tuple[int, int], Word] = {}
    for k in range(1, n):
        if k + 1 <= n - 1:
            comms[(k, 0)] = _cyclic_chain_comm(k + 1, n - 1)
    group = PcGroup(2, n, powers=powers, comms=comms)
    return CatalogEntry(f"dihedral-{order}", group,
                        description=f"dihedral group of order {order}")


def build_quaternion(order: int) -> CatalogEntry:
    """Generalized quaternion 2-group (s^2 = the involution of the chain)."""
    if order < 8 or order & (order - 1):
        raise ValueError("quaternion builder needs a 2-power order >= 8")
    n = order.bit_length() - 1
    powers: dict[int, Word] = {0: ((n - 1, 1),)}
    for k in range(1, n - 1):
        powers[k] = ((k + 1, 1),)
    comms: dict[tuple[int, int], Word] = {}
    for k in range(1, n):
        if k + 1 <= n - 1:
            comms[(k, 0)] = _cyclic_chain_comm(k + 1, n - 1)
    group = PcGroup(2, n, powers=powers, comms=comms)
    return CatalogEntry(f"quaternion-{order}", group,
                        description=f"generalized quaternion group of order {order}")


def build_heisenberg(p: int) -> CatalogEntry:
    """Non-abelian group of order p^3 and exponent p (p odd)."""
    if p < 3:
        raise ValueError("heisenberg builder needs an odd prime")
    group = PcGroup(p, 3, powers={}, comms={(1, 0): ((2, 1),)})
    return CatalogEntry(f"heisenberg-{p}", group,
                        description=f"extraspecial of order {p}^3, exponent {p}")


def build_free_class2(rank: int, p: int) -> CatalogEntry:
    """Rank-k generators, all commutators central of order p, class 2.

    The derived subgroup is elementary abelian of rank k(k-1)/2 and
    gamma_3 is trivial; rank 5 at p = 2 is the headline-index witness.
    """
    if not 2 <= rank <= 5:
        raise ValueError("free class-2 builder supports ranks 2..5")
    cidx: dict[tuple[int, int], int] = {}
    k = rank
    for j in range(1, rank):
        for i in range(j):
            cidx[(j, i)] = k
            k += 1
    comms = {pair: ((cidx[pair], 1),) for pair in cidx}
    group = PcGroup(p, k, powers={}, comms=comms)
    return CatalogEntry(f"free-class2-rank{rank}-p{p}", group,
                        description=f"class-2 group on {rank} generators with "
                        f"elementary abelian derived subgroup of rank "
                        f"{rank * (rank - 1) // 2}")


def build_condition_group(item: int, p: int) -> CatalogEntry:
    """The group presented inside condition row 46, 65 or 66.

    Row 46 (p >= 5): (Cp x Cp) x <a,b,e | [b,a] = e>, order p^5.
    Row 65 (p >= 3): <a..g | all p-th powers 1, [b,a] = c>, order p^7.
    Row 66 (p >= 3): <a..g | all p-th powers 1, [b,a] = e, [d,c] = e>.
    """
    if item == 46:
        if p < 5:
            raise ValueError("row 46 is stated for p >= 5")
        # generators a, b, e, c, d; only [b,a] = e is nontrivial
        group = PcGroup(p, 5, powers={}, comms={(1, 0): ((2, 1),)})
    elif item == 65:
        if p < 3:
            raise ValueError("row 65 is stated for odd p")
        group = PcGroup(p, 7, powers={}, comms={(1, 0): ((2, 1),)})
    elif item == 66:
        if p < 3:
            raise ValueError("row 66 is stated for odd p")
        group = PcGroup(p, 7, powers={}, comms={(1, 0): ((4, 1),),
                                                (3, 2): ((4, 1),)})
    else:
        raise ValueError(f"no presented group in condition row {item}")
    return CatalogEntry(f"cond{item}-p{p}", group,
                        description=f"group presented in condition row {item}")


def build_condition_quotient(item: int, p: int) -> CatalogEntry:
    """Rows 65/66 with the two free direct factors dropped (order p^5)."""
    if item == 65:
        group = PcGroup(p, 5, powers={}, comms={(1, 0): ((2, 1),)})
    elif item == 66:
        group = PcGroup(p, 5, powers={}, comms={(1, 0): ((4, 1),),
                                                (3, 2): ((4, 1),)})
    else:
        raise ValueError(f"no quotient builder for condition row {item}")
    return CatalogEntry(f"cond{item}-quotient-p{p}", group,
                        description=f"condition row {item} group modulo its "
                        f"free direct factors")


_REFERENCE_BUILDERS = {
    # Heisenberg x Cp (condition row 31)
    "heis_x_cp": lambda p: PcGroup(p, 4, powers={}, comms={(1, 0): ((2, 1),)}),
    # (Cp x Cp) x extraspecial p^(1+2) of exponent p (condition row 46)
    "item46": lambda p: build_condition_group(46, p).group,
    "item65": lambda p: build_condition_group(65, p).group,
    "item66": lambda p: build_condition_group(66, p).group,
    # Heisenberg x (Cp)^3 (condition row 82)
    "heis_x_cp3": lambda p: PcGroup(p, 6, powers={}, comms={(1, 0): ((2, 1),)}),
}


@functools.lru_cache(maxsize=None)
def reference_fingerprint(key: str, p: int) -> IsoType:
    """Fingerprint of a named reference construction at the prime p."""
    try:
        builder = _REFERENCE_BUILDERS[key]
    except KeyError:
        raise ValueError(f"unknown reference construction {key!r}") from None
    G = builder(p)
    return fingerprint(whole_group(G).enumerated(G.order))


# ---------------------------------------------------------------------------
# builder dispatch (CLI `--builder name:params`)


def build_named(spec: str, p: Optional[int] = None) -> CatalogEntry:
    """Build from a `name:params` string, e.g. dihedral:16, abelian:4x2."""
    name, _, params = spec.partition(":")
    name = name.strip().lower()
    if name == "dihedral":
        return build_dihedral(int(params))
    if name == "quaternion":
        return build_quaternion(int(params))
    if name == "heisenberg":
        return build_heisenberg(int(params))
    if name == "abelian":
        if p is None:
            raise ValueError("abelian builder needs -p")
        factors = [int(tok) for tok in params.replace(",", "x").split("x") if tok]
        return build_abelian(p, factors)
    if name in ("free_class2", "free-class2"):
        if p is None:
            raise ValueError("free_class2 builder needs -p")
        return build_free_class2(int(params), p)
    if name in ("condition", "cond"):
        if p is None:
            raise ValueError("condition builder needs -p")
        return build_condition_group(int(params), p)
    if name in ("condition-quotient", "cond-quotient"):
        if p is None:
            raise ValueError("condition-quotient builder needs -p")
        return build_condition_quotient(int(params), p)
    raise ValueError(f"unknown builder {name!r}")


BUILDER_NAMES = ("dihedral:<order>", "quaternion:<order>", "heisenberg:<p>",
                 "abelian:<f1>x<f2>x... (-p required)",
                 "free_class2:<rank> (-p required)",
                 "condition:<46|65|66> (-p required)",
                 "condition-quotient:<65|66> (-p required)")


# ---------------------------------------------------------------------------
# the built-in catalog


def _partitions(n: int) -> list[tuple[int, ...]]:
    """All descending partitions of n."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, largest), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def standard_catalog(include_large: bool = True) -> list[CatalogEntry]:
    """The built-in test corpus.

    All abelian p-groups of order <= 64 for p in {2, 3, 5}, the dihedral
    and quaternion 2-groups up to order 32, the two Heisenberg groups
    p = 3, 5, the order-243 quotients of the condition-row 65/66 groups,
    and (when include_large is set) the order-2^15 headline witness.
    """
    entries: list[CatalogEntry] = []
    for p, max_exp in ((2, 6), (3, 3), (5, 2)):
        for n in range(1, max_exp + 1):
            for part in _partitions(n):
                entries.append(build_abelian(p, [p**e for e in part]))
    for order in (8, 16, 32):
        entries.append(build_dihedral(order))
    for order in (8, 16):
        entries.append(build_quaternion(order))
    for p in (3, 5):
        entries.append(build_heisenberg(p))
    entries.append(build_condition_quotient(65, 3))
    entries.append(build_condition_quotient(66, 3))
    if include_large:
        entries.append(build_free_class2(5, 2))
    entries.sort(key=lambda e: e.name)
    return entries


# ---------------------------------------------------------------------------
# imported presentations and table verification


def import_presentation(path: str | Path) -> CatalogEntry:
    """Load a .pres file into a consistency-checked entry."""
    path = Path(path)
    group, meta = parse_presentation_with_meta(path.read_text(encoding="utf-8"))
    name = path.stem
    if meta.small_group_id:
        order, number = meta.small_group_id
        if group.order != order:
            raise ValueError(
                f"{path.name}: declared id order {order} but the "
                f"presentation has order {group.order}")
        name = f"S({order},{number})"
    return CatalogEntry(name, group, declared_id=meta.small_group_id,
                        expected=dict(meta.expect),
                        description=f"imported from {path.name}")


def table_entries(data_dir: Optional[str | Path] = None) -> list[CatalogEntry]:
    """All shipped table presentations, sorted by name."""
    base = Path(data_dir) if data_dir is not None else DATA_DIR
    entries = [import_presentation(f) for f in sorted(base.glob("*.pres"))]
    entries.sort(key=lambda e: (e.order, e.declared_id or (0, 0), e.name))
    return entries


def _iso_str(sub: Subgroup, cap: int) -> str:
    return str(fingerprint(sub, cap))


def computed_columns(entry: CatalogEntry, keys: Iterable[str],
                     cap: int = DEFAULT_CAP) -> dict[str, str]:
    """Evaluate table columns on an entry's group.

    The group itself plays the derived-subgroup role, so `Gp5`/`Gp3`
    mean its own fifth/cube power subgroup, `Gpp` its derived subgroup,
    `zeta` its centre, and the cap keys the pairwise intersections.
    """
    W = whole_group(entry.group).enumerated(cap)
    cache: dict[str, Subgroup] = {}

    def power_of(q: int) -> Subgroup:
        key = f"^{q}"
        if key not in cache:
            cache[key] = power_subgroup(W, q, cap)
        return cache[key]

    def zeta() -> Subgroup:
        if "z" not in cache:
            cache["z"] = center(W, cap)
        return cache["z"]

    def derived() -> Subgroup:
        if "d" not in cache:
            cache["d"] = derived_subgroup(W, cap)
        return cache["d"]

    out: dict[str, str] = {}
    for key in keys:
        if key == "expGp":
            out[key] = str(W.exponent())
        elif key == "zeta":
            out[key] = _iso_str(zeta(), cap)
        elif key == "Gpp":
            out[key] = _iso_str(derived(), cap)
        elif key.startswith("GppcapGp"):
            q = int(key[len("GppcapGp"):])
            out[key] = _iso_str(intersection(derived(), power_of(q)), cap)
        elif key == "GppcapZeta":
            out[key] = _iso_str(intersection(derived(), zeta()), cap)
        elif key.startswith("Gp") and key.endswith("capZeta"):
            q = int(key[2:-len("capZeta")])
            out[key] = _iso_str(intersection(power_of(q), zeta()), cap)
        elif key.startswith("Gp"):
            q = int(key[2:])
            out[key] = _iso_str(power_of(q), cap)
        else:
            raise ValueError(f"unknown expectation key {key!r}")
    return out


@dataclass(frozen=True)
class RowCheck:
    name: str
    passed: bool
    details: tuple[tuple[str, str, str], ...]  # (key, expected, computed)


@dataclass(frozen=True)
class TableReport:
    rows: tuple[RowCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def lines(self) -> list[str]:
        out = []
        for row in self.rows:
            status = "PASS" if row.passed else "FAIL"
            out.append(f"{status}  {row.name}")
            if not row.passed:
                for key, want, got in row.details:
                    mark = "ok" if want == got else "MISMATCH"
                    out.append(f"      {key}: expected {want}, computed {got}"
                               f"  [{mark}]")
        return out


def verify_tables(entries: Optional[Iterable[CatalogEntry]] = None,
                  cap: int = DEFAULT_CAP) -> TableReport:
    """Diff expected column values against computed ones, row by row."""
    if entries is None:
        entries = table_entries()
    rows: list[RowCheck] = []
    for entry in entries:
        if not entry.expected:
            continue
        computed = computed_columns(entry, entry.expected.keys(), cap)
        details = tuple((key, entry.expected[key], computed[key])
                        for key in sorted(entry.expected))
        passed = all(want == got for _, want, got in details)
        rows.append(RowCheck(entry.name, passed, details))
    rows.sort(key=lambda r: r.name)
    return TableReport(tuple(rows))


# ---------------------------------------------------------------------------
# fingerprint database for derived-subgroup identification


@functools.lru_cache(maxsize=1)
def fingerprint_db() -> dict[tuple[int, int], IsoType]:
    """Fingerprints of every shipped presentation with a declared id."""
    db: dict[tuple[int, int], IsoType] = {}
    for entry in table_entries():
        if entry.declared_id is None:
            continue
        W = whole_group(entry.group).enumerated(DEFAULT_CAP)
        db[entry.declared_id] = fingerprint(W, DEFAULT_CAP)
    return db
