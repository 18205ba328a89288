"""Graphs over bit-vector vertex sets, edge-list I/O and family generators.

Vertices are 0-based everywhere in the API and 1-based in every text format.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

import numpy as np


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True, slots=True)
class VertexSet:
    """Subset of ``range(universe)`` stored as an integer bit-vector.

    Bit ``i`` is vertex ``i``; the integer value doubles as the lexicographic
    key used to order enumerations (vertex 0 is the lowest bit).
    """

    universe: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError(f"bits {self.bits:#x} outside universe of {self.universe}")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> VertexSet:
        bits = 0
        for v in members:
            if not 0 <= v < universe:
                raise ValueError(f"vertex {v} outside universe of {universe}")
            bits |= 1 << v
        return cls(universe, bits)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls(universe, (1 << universe) - 1)

    @classmethod
    def empty(cls, universe: int) -> VertexSet:
        return cls(universe, 0)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.universe and (self.bits >> v) & 1 == 1

    def _check(self, other: VertexSet) -> None:
        if other.universe != self.universe:
            raise ValueError(f"universe mismatch: {self.universe} vs {other.universe}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.universe, self.bits & ~other.bits)

    def complement(self) -> VertexSet:
        return VertexSet(self.universe, ((1 << self.universe) - 1) & ~self.bits)

    def issubset(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def add(self, v: int) -> VertexSet:
        return VertexSet.of(self.universe, [*self, v])

    def one_based(self) -> list[int]:
        return [v + 1 for v in self]

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self.one_based()))}}}/{self.universe})"


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency[v]`` is the open neighbourhood of ``v``.  Labels are display
    names only and do not take part in equality.
    """

    n: int
    adjacency: tuple[VertexSet, ...]
    labels: tuple[str, ...] = field(default=(), compare=False)
    degrees: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("order must be nonnegative")
        if len(self.adjacency) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adjacency)}")
        for v, row in enumerate(self.adjacency):
            if row.universe != self.n:
                raise ValueError(f"row {v} has universe {row.universe}")
            if v in row:
                raise ValueError(f"self-loop at vertex {v + 1}")
            for u in row:
                if v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric adjacency between {v + 1} and {u + 1}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"v{i + 1}" for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("one label per vertex required")
        object.__setattr__(self, "degrees", tuple(len(row) for row in self.adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u + 1}, {v + 1}) outside 1..{n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(VertexSet(n, r) for r in rows), tuple(labels or ()))

    def edges(self) -> list[tuple[int, int]]:
        """Sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def is_complete(self) -> bool:
        return all(d == self.n - 1 for d in self.degrees)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in VertexSet(self.n, frontier):
                nxt |= self.adjacency[v].bits
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def adjacency_bits(self) -> np.ndarray:
        return np.array([row.bits for row in self.adjacency], dtype=np.int64)


class DegreeStats(NamedTuple):
    delta: int
    Delta: int
    universal_vertices: VertexSet


def degree_stats(g: Graph) -> DegreeStats:
    universal = VertexSet.of(g.n, (v for v, d in enumerate(g.degrees) if d == g.n - 1))
    return DegreeStats(g.min_degree, g.max_degree, universal)


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text) -> Graph:
    """Read the ``n m`` header plus ``m`` lines of 1-based ``u v`` pairs.

    ``text`` may be a string or any iterable of lines.  Lines starting with
    ``#`` and blank lines are skipped; repeated edges collapse to one.
    """
    lines = io.StringIO(text) if isinstance(text, str) else text
    header = None
    edges: list[tuple[int, int]] = []
    expected = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(lineno, f"non-integer token in {line!r}") from None
        if header is None:
            if len(values) != 2 or values[0] < 0 or values[1] < 0:
                raise GraphParseError(lineno, f"malformed header {line!r}, expected 'n m'")
            header = values
            expected = values[1]
            continue
        if len(values) != 2:
            raise GraphParseError(lineno, f"malformed edge line {line!r}")
        if len(edges) == expected:
            raise GraphParseError(lineno, f"more than the {expected} declared edges")
        u, v = values
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(lineno, f"vertex index out of range 1..{n} in {line!r}")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        edges.append((u - 1, v - 1))
    if header is None:
        raise GraphParseError(0, "missing 'n m' header")
    if len(edges) != expected:
        raise GraphParseError(lineno if header else 0, f"declared {expected} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in edges)
    return "\n".join(out) + "\n"


# -- generators ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilyGParams:
    """Clique on ``A u B`` (|A| = r, |B| = s) plus two p-cliques hung off A and B."""

    r: int
    s: int
    p: int

    def __post_init__(self):
        if min(self.r, self.s, self.p) < 0:
            raise ValueError("r, s, p must be nonnegative")
        if self.order < 1:
            raise ValueError("r + s + 2p must be at least 1")

    @property
    def order(self) -> int:
        return self.r + self.s + 2 * self.p


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("complete bipartite needs r, s >= 0 and r + s >= 1")
    labels = [f"a{i + 1}" for i in range(r)] + [f"b{j + 1}" for j in range(s)]
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)], labels)


def star(n: int) -> Graph:
    """K_{1,n}; the centre is vertex 0."""
    if n < 0:
        raise ValueError("star needs n >= 0")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def friendship(k: int) -> Graph:
    """k triangles sharing vertex 0 (order 2k + 1)."""
    if k < 1:
        raise ValueError("friendship graph needs k >= 1")
    edges = []
    for t in range(k):
        a, b = 2 * t + 1, 2 * t + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def family_g(r: int, s: int, p: int) -> Graph:
    """Vertices ordered A (u_j), B (v_j), first clique (x_i), second clique (w_i).

    Every x_i is joined to all of A and every w_i to all of B.
    """
    params = FamilyGParams(r, s, p)
    A = list(range(r))
    B = list(range(r, r + s))
    X = list(range(r + s, r + s + p))
    W = list(range(r + s + p, params.order))
    edges = []
    core = A + B
    edges += [(a, b) for i, a in enumerate(core) for b in core[i + 1:]]
    for clique in (X, W):
        edges += [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    edges += [(x, u) for x in X for u in A]
    edges += [(w, v) for w in W for v in B]
    labels = (
        [f"u{j + 1}" for j in range(r)]
        + [f"v{j + 1}" for j in range(s)]
        + [f"x{i + 1}" for i in range(p)]
        + [f"w{i + 1}" for i in range(p)]
    )
    return Graph.from_edges(params.order, edges, labels)


GENERATORS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "friendship": (friendship, 1),
    "family_g": (family_g, 3),
}


def generate(family: str, *params: int) -> Graph:
    try:
        fn, arity = GENERATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(GENERATORS)}") from None
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def parse_generator_spec(spec: str) -> tuple[str, tuple[int, ...]]:
    """Split ``family:p1,p2`` into its parts, e.g. ``complete_bipartite:4,3``."""
    family, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise ValueError(f"generator spec {spec!r} must look like family:params")
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise ValueError(f"non-integer parameter in {spec!r}") from None
    return family.strip(), params


def from_spec(spec: str) -> Graph:
    family, params = parse_generator_spec(spec)
    return generate(family, *params)


def random_graph(n: int, p: float = 0.5, rng=None) -> Graph:
    """G(n, p) sample; ``rng`` is a numpy Generator or a seed."""
    rng = np.random.default_rng(rng)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def sample_graphs(count, n, p=0.5, seed=0, connected=False, no_universal=False, max_tries=100_000):
    """Deterministic stream of ``count`` G(n, p) samples meeting the filters."""
    rng = np.random.default_rng(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"gave up after {max_tries} samples; relax the filters")
        g = random_graph(n, p, rng)
        if connected and not g.is_connected():
            continue
        if no_universal and n > 1 and degree_stats(g).universal_vertices:
            continue
        out.append(g)
    return out
