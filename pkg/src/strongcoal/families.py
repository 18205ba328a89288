"""Closed-form coalition numbers for the graph families where they are known."""

from __future__ import annotations

from typing import NamedTuple

from .coalition import Partition, family_f_member, solve, validate_partition
from .domination import STRONG
from .graph import FamilyGParams, Graph, family_g

__all__ = ["OracleAnswer", "sc_oracle", "c_oracle", "family_f_member", "family_g_check"]


class OracleAnswer(NamedTuple):
    value: int | None
    source: str
    applicable: bool = True


def _na(why: str) -> OracleAnswer:
    return OracleAnswer(None, why, False)


def _path(n):
    if n < 1:
        return _na("path needs n >= 1")
    if n <= 2:
        return OracleAnswer(n, "path: complete graph K_n")
    if n == 3:
        return OracleAnswer(0, "path: P3 is a star")
    if n <= 7:
        return OracleAnswer(4, "path: 4 <= n <= 7")
    if n <= 11:
        return OracleAnswer(5, "path: 8 <= n <= 11")
    return OracleAnswer(6, "path: n >= 12")


def _cycle(n):
    if n < 3:
        return _na("cycle needs n >= 3")
    if n <= 6:
        return OracleAnswer(n, "cycle: n <= 6")
    if n == 7:
        return OracleAnswer(5, "cycle: n = 7")
    return OracleAnswer(6, "cycle: n >= 8")


def _complete_bipartite(r, s, strong):
    r, s = max(r, s), min(r, s)
    if s < 1:
        return _na("complete bipartite with an empty side")
    if r == 1:
        return OracleAnswer(2, "complete bipartite: K_{1,1} is K_2")
    if s == 1:
        if strong:
            return OracleAnswer(0, "complete bipartite: star, universal vertex")
        return _na("coalition number of stars is not tabulated")
    if r == s:
        return OracleAnswer(2 * r, "complete bipartite: r = s")
    return OracleAnswer(2 if strong else r + s, "complete bipartite: r > s > 1")


def sc_oracle(family: str, *params: int) -> OracleAnswer:
    """Known strong coalition number of a named family member."""
    if family == "path":
        return _path(*params)
    if family == "cycle":
        return _cycle(*params)
    if family == "complete":
        (n,) = params
        return OracleAnswer(n, "complete graph: every vertex universal") if n >= 1 else _na("n >= 1")
    if family == "complete_bipartite":
        return _complete_bipartite(*params, strong=True)
    if family == "star":
        (n,) = params
        if n == 0:
            return OracleAnswer(1, "star: K_{1,0} is K_1")
        if n == 1:
            return OracleAnswer(2, "star: K_{1,1} is K_2")
        return OracleAnswer(0, "star: universal vertex in a non-complete graph")
    if family == "friendship":
        (k,) = params
        if k < 1:
            return _na("friendship graph needs k >= 1")
        if k == 1:
            return OracleAnswer(3, "friendship: F_1 is K_3")
        return OracleAnswer(0, "friendship: universal vertex in a non-complete graph")
    return _na(f"no closed form for family {family!r}")


def c_oracle(family: str, *params: int) -> OracleAnswer:
    """Known (plain) coalition number for cycles and complete bipartite graphs."""
    if family == "cycle":
        return _cycle(*params)
    if family == "complete_bipartite":
        return _complete_bipartite(*params, strong=False)
    return _na(f"no closed form for family {family!r}")


def family_g_check(params: FamilyGParams, max_order: int | None = None) -> tuple[Graph, bool]:
    """Build the family-G graph and confirm its coalition number is its order.

    Both the all-singletons partition and the solver's answer must agree.
    The claim is only made for order >= 4; smaller inputs are still reported.
    """
    g = family_g(params.r, params.s, params.p)
    singletons = Partition.from_lists(g.n, [[v] for v in range(g.n)])
    valid, _ = validate_partition(g, singletons, STRONG)
    result = solve(g, STRONG, max_order=max_order)
    return g, valid and result.value == g.n
