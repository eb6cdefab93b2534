"""Instances, valuations, bundles and allocation-space enumeration.

Bundles are m-bit masks (item ``o`` is bit ``1 << o``), allocations are
tuples of ``n`` pairwise-disjoint masks covering all items.  Every type here
is immutable after construction and every operation is pure, so concurrent
use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .values import Value, as_value

DEFAULT_ITEM_CAP = 16
DEFAULT_BUDGET = 10_000_000

Allocation = tuple  # tuple[int, ...], one bundle mask per agent


class BudgetExceededError(Exception):
    """Raised when an exhaustive scan would exceed its allocation budget."""

    def __init__(self, total: int, budget: int):
        super().__init__(
            f"allocation space has {total} allocations, exceeding budget {budget}"
        )
        self.total = total
        self.budget = budget


# ---------------------------------------------------------------------------
# bundle masks

def mask_from_indices(indices: Iterable[int], m: int) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < m:
            raise ValueError(f"item index {i} out of range for {m} items")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    o = 0
    while mask:
        if mask & 1:
            out.append(o)
        mask >>= 1
        o += 1
    return tuple(out)


def mask_from_names(item_names: Sequence[str], names: Iterable[str]) -> int:
    mask = 0
    for name in names:
        try:
            i = item_names.index(name)
        except ValueError:
            raise ValueError(f"unknown item name {name!r}") from None
        bit = 1 << i
        if mask & bit:
            raise ValueError(f"duplicate item {name!r} in bundle")
        mask |= bit
    return mask


def names_of(item_names: Sequence[str], mask: int) -> tuple[str, ...]:
    return tuple(item_names[i] for i in indices_of(mask))


# ---------------------------------------------------------------------------
# valuations

class Valuation:
    """Common surface of the two valuation kinds.

    Both kinds expose a dense ``table`` with ``2**m`` entries indexed by
    bundle mask, which the axiom checkers index directly.
    """

    m: int
    table: tuple

    def value(self, bundle: int) -> Value:
        """v(B) for a bundle mask.  The table is total, so this never fails."""
        return self.table[bundle]

    def marginal(self, bundle: int, item: int) -> Value:
        """v(B + o) - v(B).  Error if ``item`` is already in ``bundle``."""
        bit = 1 << item
        if bundle & bit:
            raise ValueError(f"item {item} is already in the bundle")
        t = self.table
        return t[bundle | bit] - t[bundle]


@dataclass(frozen=True)
class AdditiveValuation(Valuation):
    """v(B) = sum of per-item values; v(empty) = 0."""

    item_values: tuple
    table: tuple = field(init=False, repr=False, compare=False)

    def __init__(self, item_values: Iterable[object]):
        vals = tuple(as_value(v) for v in item_values)
        object.__setattr__(self, "item_values", vals)
        m = len(vals)
        table = [0] * (1 << m)
        for mask in range(1, 1 << m):
            low = mask & -mask
            table[mask] = table[mask ^ low] + vals[low.bit_length() - 1]
        object.__setattr__(self, "table", tuple(table))

    @property
    def m(self) -> int:
        return len(self.item_values)


@dataclass(frozen=True)
class ExplicitValuation(Valuation):
    """Total table over all ``2**m`` bundles, indexed by bundle mask."""

    table: tuple

    def __init__(self, table: Iterable[object]):
        vals = tuple(as_value(v) for v in table)
        size = len(vals)
        if size == 0 or size & (size - 1):
            raise ValueError(f"explicit table length {size} is not a power of two")
        object.__setattr__(self, "table", vals)

    @property
    def m(self) -> int:
        return len(self.table).bit_length() - 1

    @classmethod
    def from_map(cls, m: int, entries: dict) -> "ExplicitValuation":
        """Build from a mask -> value mapping.

        The mapping must cover every non-empty bundle; the empty bundle
        defaults to 0 when omitted.
        """
        table: list = [None] * (1 << m)
        for mask, v in entries.items():
            if not 0 <= mask < (1 << m):
                raise ValueError(f"bundle mask {mask} out of range for m={m}")
            if table[mask] is not None:
                raise ValueError(f"duplicate entry for bundle mask {mask}")
            table[mask] = as_value(v)
        if table[0] is None:
            table[0] = 0
        missing = [mask for mask, v in enumerate(table) if v is None]
        if missing:
            raise ValueError(f"explicit table is missing {len(missing)} bundles, e.g. mask {missing[0]}")
        return cls(table)


def nonzero_marginals(v: Valuation) -> bool:
    """True iff every marginal of every item is non-zero for this valuation."""
    full = (1 << v.m) - 1
    t = v.table
    for o in range(v.m):
        bit = 1 << o
        rest = full & ~bit
        sub = rest
        while True:
            if t[sub | bit] == t[sub]:
                return False
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return True


def is_additive_consistent(v: Valuation) -> bool:
    """True iff the valuation equals the additive extension of its singletons."""
    if isinstance(v, AdditiveValuation):
        return True
    t = v.table
    if t[0] != 0:
        return False
    for mask in range(3, 1 << v.m):
        low = mask & -mask
        if low == mask:
            continue
        if t[mask] != t[mask ^ low] + t[low]:
            return False
    return True


# ---------------------------------------------------------------------------
# instances

@dataclass(frozen=True)
class Instance:
    """n agents, m named items, one valuation per agent."""

    item_names: tuple
    valuations: tuple

    def __init__(self, item_names: Iterable[str], valuations: Iterable[Valuation],
                 item_cap: int = DEFAULT_ITEM_CAP):
        names = tuple(item_names)
        vals = tuple(valuations)
        if len(vals) < 2:
            raise ValueError("an instance needs at least 2 agents")
        if not 1 <= len(names) <= item_cap:
            raise ValueError(f"item count {len(names)} outside 1..{item_cap}")
        if len(set(names)) != len(names):
            raise ValueError("item names must be unique")
        for v in vals:
            if v.m != len(names):
                raise ValueError(f"valuation over {v.m} items in an instance with {len(names)}")
        object.__setattr__(self, "item_names", names)
        object.__setattr__(self, "valuations", vals)

    @property
    def n(self) -> int:
        return len(self.valuations)

    @property
    def m(self) -> int:
        return len(self.item_names)

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def item_index(self, name: str) -> int:
        try:
            return self.item_names.index(name)
        except ValueError:
            raise ValueError(f"unknown item name {name!r}") from None

    def is_identical(self) -> bool:
        """True iff all agents agree on every bundle."""
        t0 = self.valuations[0].table
        return all(v.table == t0 for v in self.valuations[1:])

    def has_nonzero_marginals(self) -> bool:
        """True iff no agent has a zero marginal for any item on any bundle."""
        return all(nonzero_marginals(v) for v in self.valuations)

    def disjoint_normalisation_constant(self) -> Optional[Value]:
        """The common c with v_i(M) + v_i(complement) = c, or None.

        The constant must be shared by every bipartition and every agent.
        """
        full = self.full
        c = self.valuations[0].table[0] + self.valuations[0].table[full]
        for v in self.valuations:
            t = v.table
            for mask in range((1 << self.m) // 2):
                if t[mask] + t[full ^ mask] != c:
                    return None
        return c


# ---------------------------------------------------------------------------
# allocations

def validate_allocation(inst: Instance, bundles: Sequence[int]) -> Allocation:
    """Check the allocation invariants and return the canonical tuple.

    Bundles must be pairwise disjoint masks whose union covers all items.
    """
    if len(bundles) != inst.n:
        raise ValueError(f"allocation has {len(bundles)} bundles for {inst.n} agents")
    seen = 0
    for b in bundles:
        if b & ~inst.full:
            raise ValueError(f"bundle mask {b} uses items outside the instance")
        if b & seen:
            raise ValueError("bundles are not pairwise disjoint")
        seen |= b
    if seen != inst.full:
        raise ValueError("allocation does not cover all items")
    return tuple(bundles)


def allocation_count(inst: Instance) -> int:
    return inst.n ** inst.m


def enumerate_allocations(inst: Instance, budget: Optional[int] = None) -> Iterator[Allocation]:
    """Yield every complete allocation exactly once, in a fixed order.

    Order: allocation k assigns item o to agent ``(k // n**o) % n`` — a base-n
    assignment counter with item 0 as the least significant digit — and k runs
    from 0 to ``n**m - 1``.  Raises :class:`BudgetExceededError` up front when
    ``n**m`` exceeds the budget (default ``DEFAULT_BUDGET``).
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    total = inst.n ** inst.m
    if total > budget:
        raise BudgetExceededError(total, budget)
    n, m = inst.n, inst.m
    digits = [0] * m
    masks = [0] * n
    masks[0] = inst.full
    yield tuple(masks)
    last = n - 1
    for _ in range(total - 1):
        o = 0
        while digits[o] == last:
            digits[o] = 0
            bit = 1 << o
            masks[last] ^= bit
            masks[0] |= bit
            o += 1
        d = digits[o]
        digits[o] = d + 1
        bit = 1 << o
        masks[d] ^= bit
        masks[d + 1] |= bit
        yield tuple(masks)
