"""Coalition graph of a partition: one vertex per block, edges between partners."""

from __future__ import annotations

from dataclasses import dataclass

from .coalition import GOOD_STATUSES, Partition, PartitionError, _block_flags, _partners, validate_partition
from .domination import STRONG
from .graph import Graph


class InvalidPartitionError(PartitionError):
    def __init__(self, verdicts):
        bad = [v for v in verdicts if v.status not in GOOD_STATUSES]
        detail = ", ".join(f"block {v.block_index + 1}: {v.status}" for v in bad)
        super().__init__(f"not a coalition partition ({detail})")
        self.verdicts = verdicts


@dataclass(frozen=True)
class CoalitionGraph:
    base_partition: Partition
    edges: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return len(self.base_partition)

    def degree(self, i: int) -> int:
        return sum(i in e for e in self.edges)


def build_scg(g: Graph, p: Partition, style=STRONG) -> CoalitionGraph:
    """Edges ``(i, j)``, ``i < j``, 0-based block indices, for every pair of
    blocks forming a coalition."""
    valid, verdicts = validate_partition(g, p, style)
    if not valid:
        raise InvalidPartitionError(verdicts)
    closed, dom = _block_flags(g, p, style)
    edges = []
    for i in range(len(p)):
        edges += [(i, j) for j in _partners(closed, p.blocks, dom, i) if j > i]
    return CoalitionGraph(p, tuple(sorted(edges)))


def export_dot(cg: CoalitionGraph, name: str = "SCG") -> str:
    lines = [f"graph {name} {{"]
    for i, block in enumerate(cg.base_partition.blocks, 1):
        members = ",".join(map(str, block.one_based()))
        lines.append(f'  V{i} [label="V{i}={{{members}}}"];')
    for i, j in cg.edges:
        lines.append(f"  V{i + 1} -- V{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
