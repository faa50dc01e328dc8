"""Backtracking search for cyclic interval t-colorings on desk-scale graphs.

The pruning rule: at every partially colored vertex the used color set
must still fit inside some arc of the color circle whose length equals
the number of edges at that vertex (gap analysis on the circular
complement). Parallel edges between the same vertex pair are forced into
ascending color order, and in cyclic mode the first edge searched is
pinned to color 1, which is sound because cyclic interval colorings are
closed under rotation. `naive_enumerate` is the independent oracle used
to differential-test all of this.
"""
from __future__ import annotations

import time
from bisect import bisect_left, insort
from dataclasses import dataclass, field

from .errors import InternalDefectError, PreconditionError
from .multigraph import Multigraph
from .verify import EdgeColoring, is_cyclic_interval, is_interval

__all__ = [
    "FOUND",
    "NOT_EXISTS",
    "UNKNOWN",
    "SolveOutcome",
    "WcResult",
    "solve",
    "solve_interval",
    "naive_enumerate",
    "wc_search",
    "default_t_max",
]

FOUND = "found"
NOT_EXISTS = "not_exists"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolveOutcome:
    status: str
    coloring: EdgeColoring | None
    nodes: int
    elapsed: float


@dataclass
class WcResult:
    value: int | None
    outcomes: dict[int, SolveOutcome] = field(default_factory=dict)
    conclusive: bool = True


class _Budget(Exception):
    pass


def _search(g: Multigraph, t: int, budget: int | None, cyclic: bool) -> SolveOutcome:
    start_time = time.perf_counter()
    if t < 1:
        raise PreconditionError("t must be positive")
    m = g.m
    if m == 0:
        return SolveOutcome(FOUND, EdgeColoring(t, ()), 0, time.perf_counter() - start_time)

    inc = g.incident_edges()
    k = [len(es) for es in inc]  # distinct edges at v = final spectrum size
    if any(kv > t for kv in k):
        # properness alone needs k distinct colors at that vertex
        return SolveOutcome(NOT_EXISTS, None, 0, time.perf_counter() - start_time)

    deg = g.degrees()
    order = sorted(range(m), key=lambda e: (-(deg[g.edges[e][0]] + deg[g.edges[e][1]]), e))
    # ascending-color symmetry breaking within each parallel class
    prev_parallel: list[int | None] = [None] * m
    last_of_pair: dict[tuple[int, int], int] = {}
    for e in order:
        u, v = g.edges[e]
        key = (u, v) if u <= v else (v, u)
        if key in last_of_pair:
            prev_parallel[e] = last_of_pair[key]
        last_of_pair[key] = e

    used: list[list[int]] = [[] for _ in range(g.n)]  # sorted color lists
    color = [0] * m
    nodes = 0

    def vertex_ok(v: int) -> bool:
        U = used[v]
        if not U:
            return True
        if cyclic:
            max_gap = U[0] + t - U[-1] - 1
            for i in range(1, len(U)):
                gap = U[i] - U[i - 1] - 1
                if gap > max_gap:
                    max_gap = gap
            return t - max_gap <= k[v]
        return U[-1] - U[0] + 1 <= k[v]

    def descend(i: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        e = order[i]
        u, v = g.edges[e]
        lo = 1
        pp = prev_parallel[e]
        if pp is not None:
            lo = color[pp] + 1
        hi = 1 if (cyclic and i == 0) else t
        Uu, Uv = used[u], used[v]
        for c in range(lo, hi + 1):
            j = bisect_left(Uu, c)
            if j < len(Uu) and Uu[j] == c:
                continue
            if v != u:
                j = bisect_left(Uv, c)
                if j < len(Uv) and Uv[j] == c:
                    continue
            insort(Uu, c)
            if v != u:
                insort(Uv, c)
            color[e] = c
            if vertex_ok(u) and (v == u or vertex_ok(v)):
                nodes += 1
                if budget is not None and nodes > budget:
                    raise _Budget
                if descend(i + 1):
                    return True
            Uu.pop(bisect_left(Uu, c))
            if v != u:
                Uv.pop(bisect_left(Uv, c))
        color[e] = 0
        return False

    try:
        found = descend(0)
    except _Budget:
        return SolveOutcome(UNKNOWN, None, nodes, time.perf_counter() - start_time)
    elapsed = time.perf_counter() - start_time
    if not found:
        return SolveOutcome(NOT_EXISTS, None, nodes, elapsed)
    col = EdgeColoring(t, tuple(color))
    if cyclic:
        if not is_cyclic_interval(g, col).cyclic_ok:
            raise InternalDefectError("solver produced an invalid cyclic coloring")
    else:
        if not is_interval(g, col):
            raise InternalDefectError("solver produced an invalid interval coloring")
    return SolveOutcome(FOUND, col, nodes, elapsed)


def solve(g: Multigraph, t: int, budget: int | None = None) -> SolveOutcome:
    """Decide existence of a cyclic interval t-coloring, exhaustively."""
    return _search(g, t, budget, cyclic=True)


def solve_interval(g: Multigraph, t: int, budget: int | None = None) -> SolveOutcome:
    """Decide existence of an interval coloring with colors in [1,t]."""
    return _search(g, t, budget, cyclic=False)


def naive_enumerate(g: Multigraph, t: int) -> SolveOutcome:
    """Independent oracle: enumerate proper colorings, verify each in full.

    No interval pruning, no symmetry breaking; only properness cuts the
    product space, and the final cyclic check is the verifier itself.
    Guarded to 10 edges.
    """
    if g.m > 10:
        raise PreconditionError("naive_enumerate is limited to 10 edges")
    if t < 1:
        raise PreconditionError("t must be positive")
    start_time = time.perf_counter()
    m = g.m
    if m == 0:
        return SolveOutcome(FOUND, EdgeColoring(t, ()), 0, time.perf_counter() - start_time)
    inc = g.incident_edges()
    used: list[set[int]] = [set() for _ in range(g.n)]
    color = [0] * m
    tried = 0

    def descend(e: int):
        nonlocal tried
        if e == m:
            tried += 1
            col = EdgeColoring(t, tuple(color))
            if is_cyclic_interval(g, col).cyclic_ok:
                return col
            return None
        u, v = g.edges[e]
        for c in range(1, t + 1):
            if c in used[u] or (v != u and c in used[v]):
                continue
            used[u].add(c)
            if v != u:
                used[v].add(c)
            color[e] = c
            res = descend(e + 1)
            used[u].discard(c)
            if v != u:
                used[v].discard(c)
            if res is not None:
                return res
        return None

    col = descend(0)
    elapsed = time.perf_counter() - start_time
    if col is None:
        return SolveOutcome(NOT_EXISTS, None, tried, elapsed)
    return SolveOutcome(FOUND, col, tried, elapsed)


def _is_triangle_free_simple(g: Multigraph) -> bool:
    if not g.is_simple():
        return False
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for u, v in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


def default_t_max(g: Multigraph) -> int:
    """Search ceiling for simple triangle-free graphs: |V| + max degree - 2."""
    if not _is_triangle_free_simple(g) or g.n < 2:
        raise PreconditionError(
            "no general t ceiling for multigraphs or graphs with triangles; "
            "pass t_max explicitly"
        )
    return g.n + g.max_degree() - 2


def wc_search(g: Multigraph, t_max: int | None = None, budget: int | None = None) -> WcResult:
    """Scan t from max degree upward; smallest Found t is the value.

    Any Unknown outcome below the first Found downgrades the result to
    inconclusive (value stays None) so the minimality claim is never
    stated on a budget cut.
    """
    if t_max is None:
        t_max = default_t_max(g)
    t_lo = max(g.max_degree(), 1)
    if t_max < t_lo:
        raise PreconditionError(f"t_max {t_max} below max degree {t_lo}")
    result = WcResult(value=None)
    for t in range(t_lo, t_max + 1):
        out = solve(g, t, budget)
        result.outcomes[t] = out
        if out.status == UNKNOWN:
            result.conclusive = False
        elif out.status == FOUND:
            if result.conclusive:
                result.value = t
            break
    return result
