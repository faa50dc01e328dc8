"""Eulerian circuits and 2-factorizations of even-regular multigraphs.

Petersen's factorization is realized by orienting an Euler circuit,
folding the orientation into a bipartite out/in double, splitting that
into perfect matchings, and folding each matching back. One code path
then covers loops uniformly: a loop becomes a (v_out, v_in) edge, lands
in exactly one matching, and contributes degree 2 to its 2-factor.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InternalDefectError, PreconditionError
from .multigraph import Multigraph, bipartition

__all__ = [
    "EulerCircuit",
    "FactorDecomposition",
    "euler_circuit",
    "petersen_two_factorization",
    "regular_bipartite_matching_decomposition",
    "alternate_color_cycles",
]


@dataclass(frozen=True)
class EulerCircuit:
    """One closed trail (as an EdgeId sequence) per non-trivial component."""

    circuits: tuple[tuple[int, ...], ...]
    starts: tuple[int, ...]

    def walk(self, g: Multigraph, i: int) -> list[int]:
        """Vertex sequence of circuit i, starting and ending at starts[i]."""
        cur = self.starts[i]
        seq = [cur]
        for eid in self.circuits[i]:
            u, v = g.edges[eid]
            if u == v:
                seq.append(cur)
            else:
                cur = v if cur == u else u
                seq.append(cur)
        return seq


@dataclass(frozen=True)
class FactorDecomposition:
    factors: tuple[frozenset[int], ...]


def _components_with_edges(g: Multigraph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start] or not adj[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for _, w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _hierholzer(adj, start, used):
    """Closed trail over the unused non-loop edges reachable from start."""
    ptr = {}
    stack = [(start, None)]
    out: list[int] = []
    while stack:
        v, via = stack[-1]
        p = ptr.get(v, 0)
        moved = False
        while p < len(adj[v]):
            eid, w = adj[v][p]
            p += 1
            if used[eid]:
                continue
            used[eid] = True
            ptr[v] = p
            stack.append((w, eid))
            moved = True
            break
        if moved:
            continue
        ptr[v] = p
        stack.pop()
        if via is not None:
            out.append(via)
    out.reverse()
    return out


def euler_circuit(g: Multigraph, loops_first: bool = False) -> EulerCircuit:
    """Euler circuit per connected non-trivial component.

    Requires every degree even. Loops are spliced into the trail at the
    first visit of their vertex, consecutively, which satisfies the
    loops_first guarantee (and is also the behaviour when the flag is
    off; the flag documents the contract the caller relies on).
    """
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d % 2:
            raise PreconditionError(f"vertex {v} has odd degree {d}")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    loops: list[list[int]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            loops[u].append(eid)
        else:
            adj[u].append((eid, v))
            adj[v].append((eid, u))

    used = [False] * g.m
    circuits = []
    starts = []
    for comp in _components_with_edges(g):
        start = comp[0]
        trail = _hierholzer(adj, start, used)
        if len(comp) > 1 and len(trail) != sum(1 for v in comp for e, _ in adj[v]) // 2:
            raise InternalDefectError("Euler trail missed edges of its component")
        # splice loops at the first visit of each vertex
        spliced: list[int] = []
        cur = start
        seen = set()

        def visit(v):
            if v not in seen:
                seen.add(v)
                spliced.extend(loops[v])
                for e in loops[v]:
                    used[e] = True

        visit(cur)
        for eid in trail:
            u, v = g.edges[eid]
            cur = v if cur == u else u
            spliced.append(eid)
            visit(cur)
        circuits.append(tuple(spliced))
        starts.append(start)
    if not all(used):
        raise InternalDefectError("Euler circuits did not cover every edge")
    return EulerCircuit(tuple(circuits), tuple(starts))


def regular_bipartite_matching_decomposition(g: Multigraph, r: int) -> FactorDecomposition:
    """Split an r-regular bipartite multigraph into r perfect matchings.

    Repeated augmenting-path maximum matching with a fixed scan order by
    vertex id, so outputs are reproducible.
    """
    if r < 1:
        raise PreconditionError("r must be positive")
    bip = bipartition(g)
    if bip is None:
        raise PreconditionError("graph is not bipartite")
    degs = g.degrees()
    if any(d != r for d in degs):
        raise PreconditionError(f"graph is not {r}-regular")
    left = [v for v in range(g.n) if bip.sides[v] == 0]
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in left}
    for eid, (u, v) in enumerate(g.edges):
        a, b = (u, v) if bip.sides[u] == 0 else (v, u)
        adj[a].append((eid, b))
    for v in left:
        adj[v].sort()

    used = [False] * g.m
    factors = []
    for _ in range(r):
        match_right: dict[int, tuple[int, int]] = {}  # right vertex -> (left, eid)
        match_left: dict[int, int] = {}  # left vertex -> eid

        def augment(u, visited):
            for eid, w in adj[u]:
                if used[eid] or w in visited:
                    continue
                visited.add(w)
                if w not in match_right or augment(match_right[w][0], visited):
                    match_right[w] = (u, eid)
                    match_left[u] = eid
                    return True
            return False

        for u in left:
            if not augment(u, set()):
                raise InternalDefectError(
                    "perfect matching missing in a regular bipartite graph"
                )
        factor = frozenset(match_left.values())
        for eid in factor:
            used[eid] = True
        factors.append(factor)
    if not all(used):
        raise InternalDefectError("matchings did not partition the edge set")
    return FactorDecomposition(tuple(factors))


def petersen_two_factorization(g: Multigraph, r: int) -> FactorDecomposition:
    """Partition a 2r-regular multigraph (loops allowed) into r 2-factors."""
    if r < 1:
        raise PreconditionError("r must be positive")
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d != 2 * r:
            raise PreconditionError(f"vertex {v} has degree {d}, expected {2 * r}")
    ec = euler_circuit(g)
    oriented: list[tuple[int, int] | None] = [None] * g.m
    for start, circ in zip(ec.starts, ec.circuits):
        cur = start
        for eid in circ:
            u, v = g.edges[eid]
            if u == v:
                oriented[eid] = (u, u)
            else:
                nxt = v if cur == u else u
                oriented[eid] = (cur, nxt)
                cur = nxt
    double = Multigraph(2 * g.n, [(a, b + g.n) for a, b in oriented])
    md = regular_bipartite_matching_decomposition(double, r)
    # each matching folds back to a 2-regular spanning subgraph of g
    for factor in md.factors:
        fdeg = [0] * g.n
        for eid in factor:
            u, v = g.edges[eid]
            fdeg[u] += 1
            fdeg[v] += 1
        if any(d != 2 for d in fdeg):
            raise InternalDefectError("folded matching is not a 2-factor")
    return FactorDecomposition(md.factors)


def alternate_color_cycles(g: Multigraph, factor, c_odd: int, c_even: int) -> dict[int, int]:
    """2-color a factor inducing disjoint even cycles, alternating per cycle.

    The lowest EdgeId of each cycle receives c_odd; because the cycles are
    even the resulting coloring does not depend on walk direction. Returns
    a partial coloring as an EdgeId -> color map.
    """
    factor = sorted(set(factor))
    for eid in factor:
        if not (0 <= eid < g.m):
            raise PreconditionError(f"edge id {eid} out of range")
        u, v = g.edges[eid]
        if u == v:
            raise PreconditionError("factor contains a loop")
    inc: dict[int, list[int]] = {}
    for eid in factor:
        u, v = g.edges[eid]
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    for v, es in inc.items():
        if len(es) != 2:
            raise PreconditionError(f"vertex {v} has degree {len(es)} in the factor")

    colors: dict[int, int] = {}
    for e0 in factor:
        if e0 in colors:
            continue
        u0, v0 = g.edges[e0]
        colors[e0] = c_odd
        prev_e, cur = e0, v0
        length = 1
        while True:
            a, b = inc[cur]
            nxt_e = b if a == prev_e else a
            if nxt_e == e0:
                break
            colors[nxt_e] = c_odd if length % 2 == 0 else c_even
            length += 1
            u, v = g.edges[nxt_e]
            prev_e, cur = nxt_e, v if cur == u else u
        if length % 2:
            raise PreconditionError("factor contains an odd cycle")
    return colors
