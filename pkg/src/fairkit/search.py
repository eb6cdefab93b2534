"""Seeded instance generation and counterexample mining.

Random draws come from SplitMix64, a fixed 64-bit mixing generator, so a
(params, count) pair reproduces the same instances on any platform.  Mining
scans instances built from consecutive seeds (``seed + k`` for the k-th
instance) and keeps those whose axiom landscape matches a predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from . import axioms
from .core import (
    AdditiveValuation,
    ExplicitValuation,
    Instance,
    enumerate_allocations,
    nonzero_marginals,
)
from .axioms import NotWellDefinedError, satisfies
from .taxonomy import classify

ITEM_CLASSES = ("any", "generallyGoodBad", "noMixed")

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: deterministic 64-bit stream, identical on every platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; modulo bias is negligible here."""
        if lo > hi:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def bit(self) -> int:
        return self.next_u64() & 1


@dataclass(frozen=True)
class GenParams:
    """Constraints for one family of random instances.

    ``item_class`` is one of ``any``, ``generallyGoodBad`` or ``noMixed``.
    Identical/additive/disjointly-normalised are enforced by construction,
    non-zero marginals by rejection, and the item classes by a structured
    construction that is re-verified before an instance is returned.
    """

    agents: int = 2
    items: int = 3
    lo: int = -8
    hi: int = 8
    identical: bool = False
    additive: bool = False
    nonzero_marginals: bool = False
    disjointly_normalised: bool = False
    item_class: str = "any"
    seed: int = 0

    def __post_init__(self):
        if self.agents < 2:
            raise ValueError("need at least 2 agents")
        if self.items < 1:
            raise ValueError("need at least 1 item")
        if self.lo > self.hi:
            raise ValueError("empty value range")
        if self.item_class not in ITEM_CLASSES:
            raise ValueError(f"item_class must be one of {ITEM_CLASSES}")


class RejectionBudgetError(Exception):
    """The requested constraint combination kept failing re-verification."""


def _item_names(m: int) -> tuple:
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"o{i}" for i in range(m))


def _monotone_table(rng, members: int, m: int, lo: int, hi: int, increasing: bool,
                    strict: bool) -> list:
    """Random monotone function over the subsets of ``members``; 0 at empty.

    Non-strict mode draws a value per bundle and clamps it against the
    bundle's subsets; strict mode adds a signed increment of at least 1 on
    top of the extreme subset value (values may then leave [lo, hi]).
    """
    table = [0] * (1 << m)
    step = max(1, hi - lo)
    sub = 0
    while True:
        if sub:
            extreme = None
            s = sub
            while s:
                bit = s & -s
                s ^= bit
                prev = table[sub ^ bit]
                if extreme is None:
                    extreme = prev
                elif increasing:
                    extreme = max(extreme, prev)
                else:
                    extreme = min(extreme, prev)
            if strict:
                inc = rng.randint(1, step)
                table[sub] = extreme + inc if increasing else extreme - inc
            else:
                draw = rng.randint(lo, hi)
                table[sub] = max(draw, extreme) if increasing else min(draw, extreme)
        if sub == members:
            break
        sub = ((sub | ~members) + 1) & members
    return table


def _draw_item_class_tables(rng, p) -> list:
    """Goods/bads composition: every item generally good or generally bad.

    Each agent splits the items into goods and bads (a shared split under
    ``noMixed`` so all agents agree on directions) and values a bundle as a
    monotone-increasing function of its goods plus a monotone-decreasing
    function of its bads.
    """
    m = p.items
    full = (1 << m) - 1
    agents = 1 if p.identical else p.agents
    shared_split = None
    if p.item_class == "noMixed":
        shared_split = sum(rng.bit() << i for i in range(m))
    tables = []
    for _ in range(agents):
        goods = shared_split if shared_split is not None else sum(rng.bit() << i for i in range(m))
        bads = full ^ goods
        up = _monotone_table(rng, goods, m, p.lo, p.hi, True, p.nonzero_marginals)
        down = _monotone_table(rng, bads, m, p.lo, p.hi, False, p.nonzero_marginals)
        tables.append(ExplicitValuation(tuple(
            up[mask & goods] + down[mask & bads] for mask in range(1 << m)
        )))
    return tables


def _retry_agent(rng, p, draw, max_attempts):
    """Per-agent rejection loop, used for the non-zero marginal constraint."""
    for _ in range(max_attempts):
        v = draw()
        if not p.nonzero_marginals or nonzero_marginals(v):
            return v
    raise RejectionBudgetError(
        f"no valuation with non-zero marginals for {p} within {max_attempts} attempts"
    )


def _draw_tables(rng, p, max_attempts) -> list:
    m = p.items
    full = (1 << m) - 1
    agents = 1 if p.identical else p.agents
    if p.item_class != "any":
        vals = _draw_item_class_tables(rng, p)
    elif p.additive:
        c = rng.randint(p.lo, p.hi) if p.disjointly_normalised else None

        def draw_additive():
            items = [rng.randint(p.lo, p.hi) for _ in range(m - 1)]
            items.append(rng.randint(p.lo, p.hi) if c is None else c - sum(items))
            return AdditiveValuation(tuple(items))

        vals = [_retry_agent(rng, p, draw_additive, max_attempts) for _ in range(agents)]
    elif p.disjointly_normalised:
        c = rng.randint(p.lo, p.hi)

        def draw_dn():
            table: list = [None] * (1 << m)
            for mask in range(1 << m):
                comp = full ^ mask
                table[mask] = rng.randint(p.lo, p.hi) if mask < comp else c - table[comp]
            return ExplicitValuation(tuple(table))

        vals = [_retry_agent(rng, p, draw_dn, max_attempts) for _ in range(agents)]
    else:
        def draw_plain():
            return ExplicitValuation(tuple(rng.randint(p.lo, p.hi) for _ in range(1 << m)))

        vals = [_retry_agent(rng, p, draw_plain, max_attempts) for _ in range(agents)]
    if p.identical:
        vals = vals * p.agents
    return vals


def _meets_constraints(inst: Instance, p: GenParams) -> bool:
    if p.identical and not inst.is_identical():
        return False
    if p.nonzero_marginals and not inst.has_nonzero_marginals():
        return False
    if p.disjointly_normalised and inst.disjoint_normalisation_constant() is None:
        return False
    if p.item_class != "any":
        problem, _ = classify(inst)
        if p.item_class == "generallyGoodBad" and not problem.generally_good_bad_items:
            return False
        if p.item_class == "noMixed" and not problem.no_mixed_items:
            return False
    return True


def generate(params: GenParams, max_attempts: int = 1000) -> Instance:
    """Deterministically generate one instance satisfying the constraints.

    All draws come from one SplitMix64 stream seeded with ``params.seed``; a
    rejected attempt continues the stream.  Constraints are re-verified with
    the core/taxonomy predicates rather than trusted from construction.
    """
    rng = SplitMix64(params.seed)
    names = _item_names(params.items)
    for _ in range(max_attempts):
        inst = Instance(names, tuple(_draw_tables(rng, params, max_attempts)))
        if _meets_constraints(inst, params):
            return inst
    raise RejectionBudgetError(
        f"no instance satisfying {params} within {max_attempts} attempts"
    )


# ---------------------------------------------------------------------------
# landscape

DEFAULT_COMBOS = (
    ("ef",), ("ef1",), ("efx",), ("ef1pm",), ("efxpm",), ("efx0",), ("efxpm0",),
    ("po",),
    ("efx", "efxpm"), ("efx", "po"), ("efxpm", "po"),
    ("ef1", "po"), ("ef1pm", "po"),
)


@dataclass(frozen=True)
class LandscapeRow:
    combo: tuple
    count: int
    example: Optional[tuple]


def landscape(inst: Instance, combos: Optional[Sequence[tuple]] = None,
              budget: Optional[int] = None) -> list:
    """Count satisfying allocations per axiom combination over the full space.

    Combos are tuples of axiom ids, optionally including ``"po"``.  Rows for
    the chen-liu axiom are skipped when it is not well-defined for the
    instance.
    """
    combos = tuple(DEFAULT_COMBOS if combos is None else combos)
    axiom_ids = sorted({ax for combo in combos for ax in combo if ax != "po"})
    need_po = any("po" in combo for combo in combos)

    allocs = list(enumerate_allocations(inst, budget))
    flags: dict = {}
    for ax in axiom_ids:
        try:
            flags[ax] = [satisfies(inst, a, ax) for a in allocs]
        except NotWellDefinedError:
            flags[ax] = None
    if need_po:
        tables = [v.table for v in inst.valuations]
        profiles = [tuple(tables[i][a[i]] for i in range(inst.n)) for a in allocs]
        po_flags = []
        n = inst.n
        for k, prof in enumerate(profiles):
            dominated = False
            for other in profiles:
                strict = False
                for i in range(n):
                    if other[i] < prof[i]:
                        break
                    if other[i] > prof[i]:
                        strict = True
                else:
                    if strict:
                        dominated = True
                        break
            po_flags.append(not dominated)
        flags["po"] = po_flags

    rows = []
    for combo in combos:
        if any(flags.get(ax) is None for ax in combo):
            continue
        count = 0
        example = None
        for k, a in enumerate(allocs):
            if all(flags[ax][k] for ax in combo):
                count += 1
                if example is None:
                    example = a
        rows.append(LandscapeRow(tuple(combo), count, example))
    return rows


# ---------------------------------------------------------------------------
# mining

_PREDICATE_OPS = ("<=", ">=", "=")


@dataclass(frozen=True)
class Predicate:
    """A count condition over one landscape combo, e.g. efxpm&po = 0."""

    combo: tuple
    op: str
    target: object  # int or "all"

    def __call__(self, rows: Iterable[LandscapeRow], total: int) -> bool:
        for row in rows:
            if row.combo == self.combo:
                want = total if self.target == "all" else self.target
                if self.op == "=":
                    return row.count == want
                if self.op == "<=":
                    return row.count <= want
                return row.count >= want
        return False

    def text(self) -> str:
        return "&".join(self.combo) + self.op + str(self.target)


def parse_predicate(text: str) -> Predicate:
    """Parse ``"efx=0"``, ``"efxpm&po>=1"`` or ``"ef=all"``."""
    for op in _PREDICATE_OPS:
        if op in text:
            left, _, right = text.partition(op)
            combo = tuple(part.strip() for part in left.split("&"))
            for ax in combo:
                if ax != "po" and ax not in axioms.ALL_AXIOMS:
                    raise ValueError(f"unknown axiom {ax!r} in predicate")
            right = right.strip()
            target: object = "all" if right == "all" else int(right)
            return Predicate(combo, op, target)
    raise ValueError(f"cannot parse predicate {text!r} (use e.g. 'efx=0' or 'efxpm&po>=1')")


@dataclass(frozen=True)
class MineHit:
    seed: int
    instance: Instance
    rows: tuple


def mine(params: GenParams, predicate: Predicate, count: int,
         combos: Optional[Sequence[tuple]] = None,
         budget: Optional[int] = None,
         max_attempts: int = 1000) -> list:
    """Scan ``count`` seeded instances and keep those matching the predicate.

    Instance k is generated from ``params.seed + k``, so a run is fully
    reproducible from (params, count).  Every hit carries its landscape so it
    can be re-validated independently.
    """
    combos = tuple(combos) if combos is not None else (predicate.combo,)
    if predicate.combo not in combos:
        combos = combos + (predicate.combo,)
    hits = []
    total = params.agents ** params.items
    for k in range(count):
        seeded = replace(params, seed=params.seed + k)
        try:
            inst = generate(seeded, max_attempts=max_attempts)
        except RejectionBudgetError:
            continue
        rows = landscape(inst, combos, budget)
        if predicate(rows, total):
            hits.append(MineHit(seeded.seed, inst, tuple(rows)))
    return hits
