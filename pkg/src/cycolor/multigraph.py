"""Multigraph type, JSON wire format, and structural constructions.

Vertices are dense 0-based integers. Edges are endpoint pairs kept in a
list; the list index of an edge is its EdgeId and is the handle every
coloring uses. Parallel edges are distinct entries, a loop is a pair
(v, v) and contributes 2 to the degree of v.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import PreconditionError

__all__ = [
    "Multigraph",
    "Bipartition",
    "BlockDecomposition",
    "bipartition",
    "doubled_graph",
    "add_loops",
    "full_subdivision",
    "blocks",
    "connected_components",
    "is_connected",
    "graph_to_json",
    "graph_from_json",
]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return self.degrees()[v]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def incident_edges(self) -> list[list[int]]:
        """EdgeIds incident to each vertex; a loop appears once."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return inc

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """(EdgeId, other endpoint) pairs per vertex; loops appear once."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((eid, v))
            if v != u:
                adj[v].append((eid, u))
        return adj

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel_edges(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    def is_simple(self) -> bool:
        return not self.has_loops() and not self.has_parallel_edges()


@dataclass(frozen=True)
class Bipartition:
    """Two-sided vertex split; side 0 is X, side 1 is Y.

    Every non-loop edge of the graph it was computed from joins an
    X-vertex to a Y-vertex.
    """

    sides: tuple[int, ...]

    def side(self, v: int) -> int:
        return self.sides[v]

    def part(self, which: int) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.sides) if s == which)


@dataclass
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]
    block_tree: dict[int, tuple[int, ...]]  # cut vertex -> block indices containing it

    def block_vertices(self, i: int, g: Multigraph) -> frozenset[int]:
        vs = set()
        for eid in self.blocks[i]:
            u, v = g.edges[eid]
            vs.add(u)
            vs.add(v)
        return frozenset(vs)


def connected_components(g: Multigraph) -> list[list[int]]:
    """Vertex sets of connected components, isolated vertices included."""
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
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


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) <= 1


def bipartition(g: Multigraph) -> Bipartition | None:
    """BFS 2-coloring; the lowest-index vertex of each component lands on X.

    Returns None when the graph has a loop or an odd cycle.
    """
    if g.has_loops():
        return None
    adj = g.adjacency()
    sides = [-1] * g.n
    for start in range(g.n):
        if sides[start] != -1:
            continue
        sides[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for _, w in adj[v]:
                if sides[w] == -1:
                    sides[w] = 1 - sides[v]
                    queue.append(w)
                elif sides[w] == sides[v]:
                    return None
    return Bipartition(tuple(sides))


def doubled_graph(
    g: Multigraph, link_vertices
) -> tuple[Multigraph, list[int | None]]:
    """Disjoint union of two copies of g plus one edge per link vertex.

    Copy-2 vertex i sits at index i + g.n. The returned origin map sends
    each new edge to its source EdgeId in g; link edges map to None.
    Copy-1 edges keep their original ids, so restricting a coloring of the
    doubled graph to g is a prefix slice.
    """
    link = sorted(set(link_vertices))
    for v in link:
        if not (0 <= v < g.n):
            raise PreconditionError(f"link vertex {v} out of range")
    edges: list[tuple[int, int]] = list(g.edges)
    origin: list[int | None] = list(range(g.m))
    edges.extend((u + g.n, v + g.n) for u, v in g.edges)
    origin.extend(range(g.m))
    for v in link:
        edges.append((v, v + g.n))
        origin.append(None)
    return Multigraph(2 * g.n, edges), origin


def add_loops(g: Multigraph, counts) -> Multigraph:
    """Append counts[v] loops at each vertex v, in ascending vertex order."""
    for v, c in counts.items():
        if not (0 <= v < g.n):
            raise PreconditionError(f"loop vertex {v} out of range")
        if c < 0:
            raise PreconditionError("loop count must be non-negative")
    edges = list(g.edges)
    for v in sorted(counts):
        edges.extend([(v, v)] * counts[v])
    return Multigraph(g.n, edges)


def full_subdivision(g: Multigraph) -> Multigraph:
    """Replace every edge by a path of length 2 through a fresh vertex.

    Edge k of g becomes edges 2k and 2k+1 through vertex g.n + k.
    """
    if g.has_loops():
        raise PreconditionError("full_subdivision requires a loopless graph")
    edges = []
    for k, (u, v) in enumerate(g.edges):
        mid = g.n + k
        edges.append((u, mid))
        edges.append((mid, v))
    return Multigraph(g.n + g.m, edges)


def blocks(g: Multigraph) -> BlockDecomposition:
    """Blocks (2-connected components and bridges) via lowpoint DFS.

    Loops are attached to the lowest-index block containing their vertex;
    loops at an otherwise isolated vertex form their own block.
    """
    n = g.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    loops: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            loops[u].append(eid)
        else:
            adj[u].append((eid, v))
            adj[v].append((eid, u))

    disc = [-1] * n
    low = [0] * n
    edge_stack: list[int] = []
    out_blocks: list[set[int]] = []
    cuts: set[int] = set()
    timer = 0

    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]  # vertex, parent eid, adj pointer
        while stack:
            v, pe, ptr = stack[-1]
            advanced = False
            while ptr < len(adj[v]):
                eid, w = adj[v][ptr]
                ptr += 1
                if eid == pe:
                    continue
                if disc[w] == -1:
                    stack[-1] = (v, pe, ptr)
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    blk: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        blk.add(e)
                        if e == pe:
                            break
                    out_blocks.append(blk)
                    if u != root:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(root)

    # attach loops
    vertex_blocks: dict[int, list[int]] = {}
    for i, blk in enumerate(out_blocks):
        for eid in blk:
            u, v = g.edges[eid]
            vertex_blocks.setdefault(u, []).append(i)
            vertex_blocks.setdefault(v, []).append(i)
    for v in range(n):
        if not loops[v]:
            continue
        if v in vertex_blocks:
            out_blocks[min(vertex_blocks[v])].update(loops[v])
        else:
            out_blocks.append(set(loops[v]))

    final = [frozenset(b) for b in out_blocks]
    tree: dict[int, tuple[int, ...]] = {}
    membership: dict[int, set[int]] = {}
    for i, blk in enumerate(final):
        for eid in blk:
            u, v = g.edges[eid]
            membership.setdefault(u, set()).add(i)
            membership.setdefault(v, set()).add(i)
    for c in cuts:
        tree[c] = tuple(sorted(membership.get(c, ())))
    return BlockDecomposition(final, frozenset(cuts), tree)


def graph_to_json(g: Multigraph, parts=None, meta=None) -> str:
    """Serialize to the wire format {"n": ..., "edges": [[u,v], ...]}."""
    obj: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges]}
    if parts is not None:
        obj["parts"] = list(parts)
    if meta is not None:
        obj["meta"] = meta
    return json.dumps(obj)


def graph_from_json(text: str) -> Multigraph:
    """Parse the wire format; an attached "parts" claim is verified."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs keys 'n' and 'edges'")
    g = Multigraph(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
    parts = obj.get("parts")
    if parts is not None:
        if len(parts) != g.n or any(p not in (0, 1) for p in parts):
            raise ValueError("'parts' must assign 0 or 1 to every vertex")
        for u, v in g.edges:
            if u != v and parts[u] == parts[v]:
                raise ValueError(f"'parts' is not a bipartition: edge ({u},{v})")
            if u == v:
                raise ValueError("a graph with a loop has no bipartition")
    return g
