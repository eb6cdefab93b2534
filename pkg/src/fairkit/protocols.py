"""The two-agent cut-and-choose protocol.

The cutter splits the items with a leximin cut computed as if both agents
shared the cutter's valuation; the chooser then takes their preferred side.
The output always satisfies the removed-good/added-bad axiom (EFXPM): the
chooser ends up envy-free outright, and the cutter is covered by the leximin
guarantee on identical valuations.
"""

from __future__ import annotations

from typing import Optional

from .core import Allocation, Instance
from .efficiency import leximin_set


def cut_and_choose(inst: Instance, cutter: int = 0, budget: Optional[int] = None) -> Allocation:
    """Run the protocol on a two-agent instance and return the allocation.

    ``cutter`` is the agent index performing the cut (default agent 0); the
    other agent chooses.  Tie-breaking is fixed: the cut takes the first
    leximin partition in enumeration order, and a chooser indifferent between
    the sides takes the bundle with the smaller mask.
    """
    if inst.n != 2:
        raise ValueError("cut-and-choose needs exactly 2 agents")
    if cutter not in (0, 1):
        raise ValueError("cutter must be agent 0 or 1")
    chooser = 1 - cutter
    vc = inst.valuations[cutter]
    proxy = Instance(inst.item_names, (vc, vc))
    cut = leximin_set(proxy, budget)[0]
    side_a, side_b = cut
    tch = inst.valuations[chooser].table
    if tch[side_a] > tch[side_b] or (tch[side_a] == tch[side_b] and side_a < side_b):
        chosen, other = side_a, side_b
    else:
        chosen, other = side_b, side_a
    bundles = [0, 0]
    bundles[chooser] = chosen
    bundles[cutter] = other
    return tuple(bundles)
