"""Coalition partitions: validation, the exact solver, bounds and the
domatic-partition refinement that lower-bounds the strong coalition number.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import config, kernels
from .config import CapacityError
from .domination import (
    STRONG,
    as_style,
    closed_dominators,
    count_all_sds,
    domatic,
    is_minimal_dominating,
    minimal_subset,
)
from .graph import Graph, VertexSet, degree_stats


class PartitionError(ValueError):
    """Blocks that overlap, miss vertices, or are empty."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    universe: int
    blocks: tuple[VertexSet, ...]

    def __post_init__(self):
        seen = 0
        for i, b in enumerate(self.blocks):
            if b.universe != self.universe:
                raise PartitionError(f"block {i + 1} has universe {b.universe}, expected {self.universe}")
            if not b:
                raise PartitionError(f"block {i + 1} is empty")
            if seen & b.bits:
                dup = VertexSet(self.universe, seen & b.bits).one_based()
                raise PartitionError(f"block {i + 1} repeats vertices {dup}")
            seen |= b.bits
        if seen != (1 << self.universe) - 1:
            missing = VertexSet(self.universe, ((1 << self.universe) - 1) & ~seen).one_based()
            raise PartitionError(f"vertices {missing} are in no block")

    @classmethod
    def from_lists(cls, universe: int, blocks: Sequence[Sequence[int]]) -> Partition:
        """Blocks given as lists of 0-based vertex indices."""
        try:
            sets = tuple(VertexSet.of(universe, b) for b in blocks)
        except ValueError as exc:
            raise PartitionError(str(exc)) from None
        for b, s in zip(blocks, sets):
            if len(s) != len(b):
                raise PartitionError(f"block {[v + 1 for v in b]} lists a vertex twice")
        return cls(universe, sets)

    @classmethod
    def from_assignment(cls, universe: int, assignment: Sequence[int]) -> Partition:
        k = max(assignment) + 1 if assignment else 0
        rows = [0] * k
        for v, b in enumerate(assignment):
            rows[b] |= 1 << v
        return cls(universe, tuple(VertexSet(universe, r) for r in rows))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def one_based(self) -> list[list[int]]:
        return [b.one_based() for b in self.blocks]


class BlockStatus(str, enum.Enum):
    SINGLETON_FULL_DEGREE_SDS = "singleton_full_degree_sds"
    NON_SDS_WITH_PARTNER = "non_sds_with_partner"
    INVALID_SDS_BLOCK = "invalid_sds_block"
    NON_SDS_WITHOUT_PARTNER = "non_sds_without_partner"

    def __str__(self):
        return self.value


GOOD_STATUSES = {BlockStatus.SINGLETON_FULL_DEGREE_SDS, BlockStatus.NON_SDS_WITH_PARTNER}


@dataclass(frozen=True)
class BlockVerdict:
    block_index: int
    status: BlockStatus
    partners: tuple[int, ...] = ()


def _block_flags(g: Graph, p: Partition, style):
    if p.universe != g.n:
        raise PartitionError(f"partition covers {p.universe} vertices, graph has {g.n}")
    closed = closed_dominators(g, style)
    dom = [kernels.dominates(b.bits, closed) for b in p.blocks]
    return closed, dom


def _partners(closed, blocks, dom, i):
    if dom[i]:
        return ()
    return tuple(
        j
        for j in range(len(blocks))
        if j != i and not dom[j] and kernels.dominates(blocks[i].bits | blocks[j].bits, closed)
    )


def validate_partition(g: Graph, p: Partition, style=STRONG) -> tuple[bool, list[BlockVerdict]]:
    """Check every block against the coalition-partition rule.

    A dominating block is acceptable only as a singleton of a vertex of
    degree n - 1; any other block needs a non-dominating partner whose union
    with it dominates.  Partner lists are complete.
    """
    closed, dom = _block_flags(g, p, style)
    verdicts = []
    for i, block in enumerate(p.blocks):
        if dom[i]:
            if len(block) == 1 and g.degrees[next(iter(block))] == g.n - 1:
                status = BlockStatus.SINGLETON_FULL_DEGREE_SDS
            else:
                status = BlockStatus.INVALID_SDS_BLOCK
            verdicts.append(BlockVerdict(i, status))
            continue
        partners = _partners(closed, p.blocks, dom, i)
        status = BlockStatus.NON_SDS_WITH_PARTNER if partners else BlockStatus.NON_SDS_WITHOUT_PARTNER
        verdicts.append(BlockVerdict(i, status, partners))
    return all(v.status in GOOD_STATUSES for v in verdicts), verdicts


def coalition_partner_count(g: Graph, p: Partition, i: int, style=STRONG) -> int:
    if not 0 <= i < len(p.blocks):
        raise IndexError(f"block index {i} out of range for {len(p.blocks)} blocks")
    closed, dom = _block_flags(g, p, style)
    return len(_partners(closed, p.blocks, dom, i))


# -- bounds ----------------------------------------------------------------------


class Bound(NamedTuple):
    name: str
    value: int | None
    note: str = ""


class UpperBounds(NamedTuple):
    bound: int
    reasons: list[Bound]

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.reasons if b.value is not None]


def family_f_member(g: Graph) -> bool:
    """Non-complete graph with at least one vertex of degree n - 1."""
    return not g.is_complete() and bool(degree_stats(g).universal_vertices)


def upper_bounds(g: Graph, style=STRONG, scan_limit: int | None = None) -> UpperBounds:
    """Upper bounds on the coalition number that apply to ``g``.

    Only the order bound is used for plain coalitions; the remaining bounds
    are for strong coalitions.  Entries with ``value=None`` were considered
    but could not be evaluated.
    """
    style = as_style(style)
    if style is STRONG and family_f_member(g):
        return UpperBounds(0, [Bound("family_F", 0, "universal vertex in a non-complete graph")])
    reasons = [Bound("order", g.n)]
    if style is STRONG:
        delta, Delta, _ = degree_stats(g)
        if delta == 1:
            reasons.append(Bound("delta2", 2 + 2 * Delta, "min degree 1: at most 2 + 2*max degree"))
        if g.n >= 2 and Delta <= g.n - 2 and g.degrees.count(Delta) == 1:
            limit = min(config.MAX_ORDER if scan_limit is None else scan_limit, config.SCAN_MAX_ORDER)
            if g.n <= limit:
                r = count_all_sds(g, STRONG, limit=limit)
                reasons.append(Bound("sds_count", r + 1, f"unique max-degree vertex, {r} dominating sets"))
            else:
                reasons.append(Bound("sds_count", None, "unavailable: order above the subset-scan limit"))
    bound = min(b.value for b in reasons if b.value is not None)
    return UpperBounds(bound, reasons)


# -- exact solver ----------------------------------------------------------------


@dataclass
class SolveResult:
    value: int
    witness: Partition | None
    certified: bool
    nodes_explored: int
    wall_time: float
    style: str = STRONG.value
    bounds: list[Bound] = field(default_factory=list)
    certificate: str = ""

    def __post_init__(self):
        if (self.value == 0) != (self.witness is None):
            raise ValueError("witness must be present exactly when value > 0")
        if self.witness is not None and len(self.witness) != self.value:
            raise ValueError("witness size disagrees with value")


def _prefixes(closed, k, depth):
    """Restricted-growth prefixes of length ``depth`` surviving both prunes.

    Listed in the order the sequential search would visit them.
    """
    n = len(closed)
    out = []
    nodes = 0

    def rec(i, used, blocks, sizes, assign):
        nonlocal nodes
        if i == depth:
            out.append(tuple(assign))
            return
        for b in range(min(used, k - 1) + 1):
            nused = used + 1 if b == used else used
            if n - i - 1 < k - nused:
                continue
            nodes += 1
            nb = list(blocks)
            ns = list(sizes)
            nb[b] |= 1 << i
            ns[b] += 1
            if ns[b] >= 2 and kernels.dominates(nb[b], closed):
                continue
            rec(i + 1, nused, nb, ns, assign + [b])

    rec(0, 0, [0] * k, [0] * k, [])
    return out, nodes


def _search_task(args):
    closed, k, prefix, backend = args
    return kernels.coalition_search(closed, k, prefix, backend=backend)


def _search_k(closed, k, workers, backend, pool):
    if pool is None:
        return kernels.coalition_search(closed, k, backend=backend)
    depth = min(len(closed) - 1, 8)
    prefixes, nodes = _prefixes(closed, k, depth)
    tasks = [(closed, k, pre, backend) for pre in prefixes]
    for found, assign, sub in pool.map(_search_task, tasks, chunksize=max(1, len(tasks) // (8 * workers))):
        nodes += sub
        if found:
            # results arrive in prefix order, so this is the sequential witness
            return True, assign, nodes
    return False, None, nodes


def solve(
    g: Graph,
    style=STRONG,
    *,
    workers: int = 1,
    max_order: int | None = None,
    use_bounds: bool = True,
    backend: str | None = None,
) -> SolveResult:
    """Exact (strong) coalition number with a witness partition.

    k runs downward from the best applicable upper bound (or from n when
    ``use_bounds`` is off); the first k admitting a valid partition is the
    answer.  Raises :class:`CapacityError` above ``max_order``.
    """
    style = as_style(style)
    limit = config.MAX_ORDER if max_order is None else max_order
    if g.n > limit:
        raise CapacityError(g.n, limit)
    if g.n == 0:
        raise ValueError("empty graph")
    t0 = time.perf_counter()
    if use_bounds:
        ub = upper_bounds(g, style, scan_limit=limit)
    else:
        ub = UpperBounds(g.n, [Bound("order", g.n)])
    if ub.bound == 0:
        return SolveResult(0, None, True, 0, time.perf_counter() - t0, style.value, ub.reasons, "family_F")

    closed = closed_dominators(g, style)
    nodes = 0
    pool = ProcessPoolExecutor(workers) if workers > 1 and g.n > 2 else None
    try:
        for k in range(ub.bound, 0, -1):
            found, assign, sub = _search_k(closed, k, workers, backend, pool)
            nodes += sub
            if found:
                witness = Partition.from_assignment(g.n, assign)
                return SolveResult(
                    k, witness, True, nodes, time.perf_counter() - t0, style.value, ub.reasons, "search"
                )
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return SolveResult(0, None, True, nodes, time.perf_counter() - t0, style.value, ub.reasons, "exhausted")


# -- refinement of a domatic partition --------------------------------------------


def construct_from_domatic(g: Graph, backend=None) -> Partition:
    """Turn a maximum strong domatic partition into a strong coalition
    partition with at least twice as many blocks.

    Each of the first k-1 blocks is cut down to a minimal dominating set
    (leftovers go to the last block) and split as {first vertex} / rest.
    The last block is split the same way if it is minimal; otherwise its
    minimal core is split and the remainder either stays as an extra block
    (when it has a partner) or is merged into the core's second half.
    The result has 2k or 2k + 1 blocks for k the strong domatic number.
    """
    if g.n < 2:
        raise PreconditionError("need at least two vertices")
    if degree_stats(g).universal_vertices:
        raise PreconditionError("graph has a universal vertex")
    _, dpart = domatic(g, STRONG, backend=backend)
    blocks = list(dpart.blocks)
    last = blocks[-1]
    cores = []
    for b in blocks[:-1]:
        core = minimal_subset(g, b, STRONG)
        last = last | (b - core)
        cores.append(core)

    def halves(core):
        first = VertexSet.of(g.n, [next(iter(core))])
        return [first, core - first]

    out = []
    for core in cores:
        out += halves(core)

    if is_minimal_dominating(g, last, STRONG):
        out += halves(last)
    else:
        core = minimal_subset(g, last, STRONG)
        h1, h2 = halves(core)
        rest = last - core
        closed = closed_dominators(g, STRONG)
        candidates = out + [h1, h2]
        # rest cannot dominate: it would give a domatic partition of size k + 1
        if any(
            not kernels.dominates(c.bits, closed) and kernels.dominates((c | rest).bits, closed)
            for c in candidates
        ):
            out += [h1, h2, rest]
        else:
            out += [h1, h2 | rest]
    part = Partition(g.n, tuple(out))
    valid, verdicts = validate_partition(g, part, STRONG)
    if not valid:  # pragma: no cover - would contradict the construction
        raise AssertionError(f"construction produced an invalid partition: {verdicts}")
    return part
