"""Non-existence certificates for cyclic interval colorings.

Two kinds of certificate: counting (a common divisor d of all degrees
that does not divide |E| kills every modulus divisible by d) and window
propagation (if, after rooting the palette at one vertex, every edge is
confined to a window shorter than the maximum degree, then a minimum
coloring would leave a color unused, so no coloring exists at all).
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .multigraph import Multigraph, is_connected

__all__ = [
    "ObstructionReport",
    "divisibility_obstruction",
    "even_t_obstruction",
    "hpq_graph",
    "hpq_obstruction",
    "window_span_obstruction",
    "all_obstructions",
]


@dataclass(frozen=True)
class ObstructionReport:
    kind: str  # "divisibility" | "even_t" | "window_span"
    claim: str
    d: int | None = None
    root: int | None = None
    span: int | None = None

    def excludes(self, t: int) -> bool:
        """Does this certificate rule out a cyclic interval t-coloring?"""
        if self.kind == "divisibility":
            return t % self.d == 0
        if self.kind == "even_t":
            return t % 2 == 0
        if self.kind == "window_span":
            return True
        raise ValueError(f"unknown obstruction kind {self.kind!r}")

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "claim": self.claim}
        for key in ("d", "root", "span"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def divisibility_obstruction(g: Multigraph, d: int) -> ObstructionReport | None:
    """Fires iff d divides every degree but not the edge count.

    Counting the edges whose color is a multiple of d in a hypothetical
    dk-coloring forces |E|/d to be an integer, so every modulus dk is
    impossible.
    """
    if d < 1:
        raise PreconditionError("d must be positive")
    if g.m == 0:
        return None
    if any(deg % d for deg in g.degrees()):
        return None
    if g.m % d == 0:
        return None
    return ObstructionReport(
        "divisibility",
        f"no cyclic interval t-coloring for any t divisible by {d}",
        d=d,
    )


def even_t_obstruction(g: Multigraph) -> ObstructionReport | None:
    """Eulerian graph with an odd number of edges: every even t is out."""
    rep = divisibility_obstruction(g, 2)
    if rep is None:
        return None
    return ObstructionReport(
        "even_t", "no cyclic interval t-coloring for any even t", d=2
    )


def hpq_graph(p: int, q: int) -> Multigraph:
    """Hub x joined by p parallel edges to each of y_1..y_q, each y_i to z.

    Vertex layout: x = 0, y_i = i for 1 <= i <= q, z = q + 1.
    """
    if p < 1 or q < 1:
        raise PreconditionError("p and q must be positive")
    edges = []
    for i in range(1, q + 1):
        edges.extend([(0, i)] * p)
    for i in range(1, q + 1):
        edges.append((i, q + 1))
    return Multigraph(q + 2, edges)


def hpq_obstruction(p: int, q: int) -> ObstructionReport | None:
    """Fires iff pq > 2p + q (strict); then the graph is not colorable at all.

    The certificate is the window argument rooted at z: z's edges occupy
    [1, q] and every parallel bundle at y_i stays within p of its z-edge,
    so all colors live in a window of span q + 2p < pq = max degree.
    """
    if p < 1 or q < 1:
        raise PreconditionError("p and q must be positive")
    if p * q <= 2 * p + q:
        return None
    return ObstructionReport(
        "window_span",
        "not cyclically interval colorable: colors confined to a window of "
        f"span {q + 2 * p} < max degree {p * q}",
        root=q + 1,
        span=q + 2 * p,
    )


def window_span_obstruction(g: Multigraph) -> ObstructionReport | None:
    """Window propagation from every candidate root; fires on span < max degree.

    Rooted at s (palette rotated so S(s) sits in [1, d(s)]), an edge
    reached through internal vertices x_1..x_k can only carry colors in
    [1 - sum(d(x_i)-1), d(s) + sum(d(x_i)-1)]. The minimal slack per
    vertex is a shortest path with vertex weights d(x)-1. If the hull of
    all edge windows has span below the maximum degree, a minimum cyclic
    coloring (which uses every color) cannot exist, and neither can any
    other, since a minimum one could be extracted from it.
    """
    if g.has_loops():
        raise PreconditionError("window propagation expects a loopless graph")
    if not is_connected(g):
        raise PreconditionError("window propagation expects a connected graph")
    if g.m == 0:
        return None
    deg = g.degrees()
    delta = max(deg)
    adj = g.adjacency()
    best: tuple[int, int] | None = None  # (span, root)
    for s in range(g.n):
        dist = {s: 0}
        heap = [(0, s)]
        while heap:
            dv, v = heapq.heappop(heap)
            if dv > dist.get(v, float("inf")):
                continue
            step = 0 if v == s else deg[v] - 1
            for _, w in adj[v]:
                nd = dv + step
                if nd < dist.get(w, float("inf")):
                    dist[w] = nd
                    heapq.heappush(heap, (nd, w))
        emax = 0
        for u, v in g.edges:
            e = min(
                0 if u == s else dist[u] + deg[u] - 1,
                0 if v == s else dist[v] + deg[v] - 1,
            )
            if e > emax:
                emax = e
        span = deg[s] + 2 * emax
        if span < delta and (best is None or span < best[0]):
            best = (span, s)
    if best is None:
        return None
    span, root = best
    return ObstructionReport(
        "window_span",
        "not cyclically interval colorable: colors confined to a window of "
        f"span {span} < max degree {delta}",
        root=root,
        span=span,
    )


def all_obstructions(g: Multigraph) -> list[ObstructionReport]:
    """Every certificate that fires on g (window check skipped when inapplicable)."""
    reports: list[ObstructionReport] = []
    degs = [d for d in g.degrees() if d > 0]
    if degs:
        overall = 0
        for d in degs:
            overall = gcd(overall, d)
        for d in range(2, overall + 1):
            if overall % d == 0:
                rep = divisibility_obstruction(g, d)
                if rep is not None:
                    reports.append(rep)
    rep = even_t_obstruction(g)
    if rep is not None:
        reports.append(rep)
    if not g.has_loops() and is_connected(g):
        rep = window_span_obstruction(g)
        if rep is not None:
            reports.append(rep)
    return reports
