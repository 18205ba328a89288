"""Plain and strong domination: predicates and exact invariants."""

from __future__ import annotations

import enum
from functools import lru_cache

import numpy as np

from . import config, kernels
from .config import CapacityError
from .graph import Graph, VertexSet


class DominationStyle(str, enum.Enum):
    PLAIN = "plain"
    STRONG = "strong"

    def __str__(self):
        return self.value


PLAIN = DominationStyle.PLAIN
STRONG = DominationStyle.STRONG


def as_style(style) -> DominationStyle:
    return style if isinstance(style, DominationStyle) else DominationStyle(style)


@lru_cache(maxsize=4096)
def closed_dominators(g: Graph, style=STRONG) -> tuple[int, ...]:
    """Per vertex x: bit-vector of x plus the neighbours allowed to dominate x.

    Under the strong style a neighbour y qualifies only if deg(x) <= deg(y).
    """
    style = as_style(style)
    deg = g.degrees
    out = []
    for x in range(g.n):
        bits = 1 << x
        for y in g.adjacency[x]:
            if style is PLAIN or deg[x] <= deg[y]:
                bits |= 1 << y
        out.append(bits)
    return tuple(out)


def is_dominating(g: Graph, s: VertexSet, style=STRONG) -> bool:
    if s.universe != g.n:
        raise ValueError(f"set over universe {s.universe} used with a graph of order {g.n}")
    return kernels.dominates(s.bits, closed_dominators(g, style))


def _min_hitting_sets(closed, size, collect):
    """Sets of at most ``size`` vertices meeting every ``closed[x]``.

    Branches on the first vertex not yet dominated; earlier siblings are
    forbidden in later branches so each set is produced once.
    """
    found = []

    def rec(chosen, left, forbidden):
        for c in closed:
            if not chosen & c:
                break
        else:
            found.append(chosen)
            return not collect
        if left == 0:
            return False
        options = c & ~forbidden
        while options:
            low = options & -options
            if rec(chosen | low, left - 1, forbidden):
                return True
            forbidden |= low
            options ^= low
        return False

    rec(0, size, 0)
    return found


def gamma(g: Graph, style=STRONG) -> int:
    """Domination number (plain) or strong domination number, exactly."""
    if g.n == 0:
        raise ValueError("empty graph")
    closed = closed_dominators(g, style)
    for size in range(1, g.n + 1):
        if _min_hitting_sets(closed, size, collect=False):
            return size
    raise AssertionError("the full vertex set always dominates")


def enumerate_min_cardinality_sds(g: Graph, style=STRONG) -> list[VertexSet]:
    """All minimum-cardinality dominating sets, ordered by bit-vector value."""
    closed = closed_dominators(g, style)
    size = gamma(g, style)
    sets = _min_hitting_sets(closed, size, collect=True)
    return [VertexSet(g.n, bits) for bits in sorted(set(sets))]


def count_all_sds(g: Graph, style=STRONG, limit: int | None = None, backend=None) -> int:
    """Number of dominating sets of every size, the whole vertex set included."""
    if g.n == 0:
        raise ValueError("empty graph")
    limit = config.MAX_ORDER if limit is None else limit
    if g.n > limit:
        raise CapacityError(g.n, limit, "exhaustive subset scan")
    table = kernels.dominating_table(closed_dominators(g, style), backend=backend)
    return int(np.count_nonzero(table))


def domatic(g: Graph, style=STRONG, backend=None):
    """Largest partition of V into dominating sets: ``(value, Partition)``.

    Searches k downward from min_x |closed[x]| (at most min degree + 1); the
    witness is the first partition met in restricted-growth order.
    """
    from .coalition import Partition

    if g.n == 0:
        raise ValueError("empty graph")
    closed = closed_dominators(g, style)
    top = min(c.bit_count() for c in closed)
    for k in range(top, 0, -1):
        found, assign, _ = kernels.domatic_search(closed, k, backend=backend)
        if found:
            return k, Partition.from_assignment(g.n, assign)
    raise AssertionError("the single block V always dominates")


def minimal_subset(g: Graph, s: VertexSet, style=STRONG) -> VertexSet:
    """Shrink a dominating set to a minimal one by dropping vertices in index order."""
    closed = closed_dominators(g, style)
    bits = s.bits
    if not kernels.dominates(bits, closed):
        raise ValueError(f"{s!r} is not dominating")
    for v in s:
        trial = bits & ~(1 << v)
        if kernels.dominates(trial, closed):
            bits = trial
    return VertexSet(g.n, bits)


def is_minimal_dominating(g: Graph, s: VertexSet, style=STRONG) -> bool:
    closed = closed_dominators(g, style)
    if not kernels.dominates(s.bits, closed):
        return False
    return all(not kernels.dominates(s.bits & ~(1 << v), closed) for v in s)
