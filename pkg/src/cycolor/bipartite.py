"""Constructive cyclic interval colorers for bipartite multigraphs.

The even-maximum-degree colorer is the engine: double the graph to kill
odd degrees, pad low-degree vertices with loops until the auxiliary
graph is 2r-regular, split into r 2-factors, color factor i alternately
with 2i-1 and 2i, and restrict back. Everything else reduces to it: the
odd-degree case doubles once more, the Eulerian max-degree-8 case splits
degree-6 vertices and two-colors an Euler trail of the contracted graph
to halve the problem into two degree-{2,4} subgraphs, and the biregular
entries dispatch or extend into one of those shapes.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    InternalDefectError,
    NoMethodApplies,
    PreconditionError,
    UnsupportedGraphError,
)
from .factorization import (
    alternate_color_cycles,
    euler_circuit,
    petersen_two_factorization,
)
from .multigraph import Multigraph, add_loops, bipartition, doubled_graph, is_connected
from .obstructions import all_obstructions
from .solver import FOUND, UNKNOWN, solve
from .verify import EdgeColoring, is_cyclic_interval, is_interval, spectrum

__all__ = [
    "ColoredResult",
    "SplitEntry",
    "color_even_delta",
    "color_odd_delta",
    "interval4_lemma",
    "color_eulerian8",
    "color_degrees_124678",
    "extend_biregular",
    "color_biregular",
    "auto_color",
    "split_degree_six",
]

_BLUE, _RED = 0, 1


@dataclass(frozen=True)
class ColoredResult:
    coloring: EdgeColoring
    t: int
    method: str
    fallback_events: tuple[str, ...] = ()


@dataclass(frozen=True)
class SplitEntry:
    """Where the six edges of a split vertex went."""

    low_vertex: int
    low_edges: tuple[int, ...]  # the 2 lowest EdgeIds, kept at the old index
    high_vertex: int
    high_edges: tuple[int, ...]  # the other 4, moved to the new index


def _require_bipartite_loopless(g: Multigraph, who: str):
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            raise PreconditionError(f"{who}: edge {eid} is a loop")
    bip = bipartition(g)
    if bip is None:
        raise PreconditionError(f"{who}: graph is not bipartite")
    return bip


def _verified(g, colors, t, method, fallback_events=()) -> ColoredResult:
    col = EdgeColoring(t, tuple(colors))
    rep = is_cyclic_interval(g, col)
    if not rep.cyclic_ok:
        raise InternalDefectError(
            f"{method}: construction failed verification at t={t}: "
            f"{rep.violations[:3]}"
        )
    return ColoredResult(col, t, method, tuple(fallback_events))


def _even_delta_core(g: Multigraph, r: int) -> tuple[int, ...]:
    """Doubling + loops + Petersen + per-factor alternation, restricted to g."""
    odd = [v for v, d in enumerate(g.degrees()) if d % 2]
    gd, _ = doubled_graph(g, odd)
    counts = {}
    for v, d in enumerate(gd.degrees()):
        if d == 2 * r:
            continue
        if d == 0:
            counts[v] = r
        elif d == 2:
            counts[v] = r - 1
        elif d == 2 * r - 2:
            counts[v] = 1
        else:
            raise InternalDefectError(f"doubled graph has unexpected degree {d}")
    gstar = add_loops(gd, counts)
    factors = petersen_two_factorization(gstar, r).factors
    colors = [0] * gd.m
    for i, factor in enumerate(factors, start=1):
        stripped = {e for e in factor if e < gd.m}  # loops were appended after gd's edges
        for e, c in alternate_color_cycles(gd, stripped, 2 * i - 1, 2 * i).items():
            colors[e] = c
    if any(c == 0 for c in colors):
        raise InternalDefectError("factor alternation left an edge uncolored")
    return tuple(colors[: g.m])


def color_even_delta(g: Multigraph) -> ColoredResult:
    """Cyclic interval coloring with t = max degree 2r, for degrees in
    {1, 2, 2r-2, 2r-1, 2r}."""
    _require_bipartite_loopless(g, "color_even_delta")
    degs = g.degrees()
    delta = max(degs, default=0)
    if delta < 4 or delta % 2:
        raise PreconditionError(
            f"color_even_delta: max degree must be even and >= 4, got {delta}"
        )
    r = delta // 2
    allowed = {0, 1, 2, delta - 2, delta - 1, delta}
    for v, d in enumerate(degs):
        if d not in allowed:
            raise PreconditionError(
                f"color_even_delta: vertex {v} has degree {d}, "
                f"outside {sorted(allowed - {0})}"
            )
    return _verified(g, _even_delta_core(g, r), delta, "even_delta")


def color_odd_delta(g: Multigraph) -> ColoredResult:
    """t = max degree + 1 = 2r, for odd max degree and degrees in
    {1, 2, 2r-2, 2r-1}."""
    _require_bipartite_loopless(g, "color_odd_delta")
    degs = g.degrees()
    delta = max(degs, default=0)
    if delta < 3 or delta % 2 == 0:
        raise PreconditionError(
            f"color_odd_delta: max degree must be odd and >= 3, got {delta}"
        )
    r = (delta + 1) // 2
    allowed = {0, 1, 2, 2 * r - 2, 2 * r - 1}
    for v, d in enumerate(degs):
        if d not in allowed:
            raise PreconditionError(
                f"color_odd_delta: vertex {v} has degree {d}, "
                f"outside {sorted(allowed - {0})}"
            )
    anchor = min(v for v, d in enumerate(degs) if d == delta)
    gd, _ = doubled_graph(g, [anchor])
    inner = color_even_delta(gd)
    return _verified(g, inner.coloring.colors[: g.m], 2 * r, "odd_delta")


def interval4_lemma(g: Multigraph) -> ColoredResult:
    """Interval 4-coloring for degrees in {1, 2, 4} where every degree-2
    vertex ends on [1,2] or [3,4] exactly.

    Pendant vertices are first matched to a twin copy so the working graph
    has degrees {2, 4} only; the endpoint property is then forced because
    each degree-2 vertex lies in exactly one of the two 2-factors.
    """
    _require_bipartite_loopless(g, "interval4_lemma")
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d not in (0, 1, 2, 4):
            raise PreconditionError(
                f"interval4_lemma: vertex {v} has degree {d}, outside {{1,2,4}}"
            )
    if g.m == 0:
        return ColoredResult(EdgeColoring(4, ()), 4, "interval4")
    pendants = [v for v, d in enumerate(degs) if d == 1]
    work = g
    if pendants:
        work, _ = doubled_graph(g, pendants)
    counts = {}
    for v, d in enumerate(work.degrees()):
        if d == 2:
            counts[v] = 1
        elif d == 0:
            counts[v] = 2
    gstar = add_loops(work, counts)
    factors = petersen_two_factorization(gstar, 2).factors
    colors = [0] * work.m
    for i, factor in enumerate(factors, start=1):
        stripped = {e for e in factor if e < work.m}
        for e, c in alternate_color_cycles(work, stripped, 2 * i - 1, 2 * i).items():
            colors[e] = c
    col = EdgeColoring(4, tuple(colors[: g.m]))
    if not is_interval(g, col):
        raise InternalDefectError("interval4_lemma: output is not an interval coloring")
    for v, d in enumerate(degs):
        sp = spectrum(g, col, v).colors
        if d == 2 and sp not in ((1, 2), (3, 4)):
            raise InternalDefectError(
                f"interval4_lemma: degree-2 vertex {v} has spectrum {sp}"
            )
        if d == 4 and sp != (1, 2, 3, 4):
            raise InternalDefectError(
                f"interval4_lemma: degree-4 vertex {v} has spectrum {sp}"
            )
    return ColoredResult(col, 4, "interval4")


def split_degree_six(g: Multigraph) -> tuple[Multigraph, dict[int, SplitEntry]]:
    """Split every degree-6 vertex v into v' (2 lowest incident EdgeIds,
    kept at index v) and v'' (the other 4, at a fresh index)."""
    inc = g.incident_edges()
    edges = [list(e) for e in g.edges]
    nxt = g.n
    smap: dict[int, SplitEntry] = {}
    for v in range(g.n):
        if len(inc[v]) != 6:
            continue
        eids = sorted(inc[v])
        keep, move = eids[:2], eids[2:]
        for e in move:
            if edges[e][0] == v:
                edges[e][0] = nxt
            else:
                edges[e][1] = nxt
        smap[v] = SplitEntry(v, tuple(keep), nxt, tuple(move))
        nxt += 1
    return Multigraph(nxt, [tuple(e) for e in edges]), smap


def _red_blue_split(g: Multigraph) -> list[int]:
    """Red/Blue edge bisection for an Eulerian bipartite graph with degrees
    in {2, 4, 6, 8}: degree-6 vertices split, reducible paths contracted,
    Euler trails alternately 2-colored (loops at first visit), colors
    expanded back, pure degree-2 components all Red."""
    H, _ = split_degree_six(g)
    hdeg = H.degrees()
    if any(d not in (0, 2, 4, 8) for d in hdeg):
        raise InternalDefectError("split graph has unexpected degrees")

    # component ids over H
    comp = [-1] * H.n
    adj = H.adjacency()
    cid = 0
    for start in range(H.n):
        if comp[start] != -1 or not adj[start]:
            continue
        stack = [start]
        comp[start] = cid
        while stack:
            x = stack.pop()
            for _, w in adj[x]:
                if comp[w] == -1:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    has_high = {comp[v] for v in range(H.n) if hdeg[v] >= 4}

    rb: list[int | None] = [None] * g.m  # H edge ids == g edge ids
    for eid, (u, _) in enumerate(H.edges):
        if comp[u] not in has_high:
            rb[eid] = _RED

    # contract reducible paths of the remaining components into K
    highs = sorted(v for v in range(H.n) if hdeg[v] >= 4)
    kmap = {v: i for i, v in enumerate(highs)}
    inc_sorted = [sorted(pairs) for pairs in adj]
    consumed = [False] * H.m
    k_edges: list[tuple[int, int]] = []
    k_paths: list[tuple[int, ...]] = []
    for x in highs:
        for eid, w in inc_sorted[x]:
            if consumed[eid]:
                continue
            consumed[eid] = True
            path = [eid]
            prev, cur = eid, w
            while hdeg[cur] == 2:
                a, b = inc_sorted[cur]
                nxt_e, nxt_w = b if a[0] == prev else a
                consumed[nxt_e] = True
                path.append(nxt_e)
                prev, cur = nxt_e, nxt_w
            k_edges.append((kmap[x], kmap[cur]))  # cur == x gives a loop of K
            k_paths.append(tuple(path))
    K = Multigraph(len(highs), k_edges)
    if any(d not in (4, 8) for d in K.degrees()):
        raise InternalDefectError("contracted graph is not {4,8}-regular-ish")

    ec = euler_circuit(K, loops_first=True)
    kcolor = [None] * K.m
    for circ in ec.circuits:
        if len(circ) % 2:
            raise InternalDefectError("contracted Euler component has odd length")
        for idx, eid in enumerate(circ):
            kcolor[eid] = _BLUE if idx % 2 == 0 else _RED
    # balance on K, loops counted twice
    for v in range(K.n):
        blue = 0
        red = 0
        for eid, (a, b) in enumerate(K.edges):
            w = 2 if a == b == v else (1 if v in (a, b) else 0)
            if w:
                if kcolor[eid] == _BLUE:
                    blue += w
                else:
                    red += w
        if blue != red:
            raise InternalDefectError(
                f"trail coloring unbalanced at contracted vertex {v}: "
                f"{blue} blue vs {red} red"
            )
    for keid, path in enumerate(k_paths):
        for he in path:
            rb[he] = kcolor[keid]
    if any(c is None for c in rb):
        raise InternalDefectError("red/blue split left an edge unassigned")
    return rb  # type: ignore[return-value]


def color_eulerian8(g: Multigraph) -> ColoredResult:
    """Cyclic interval coloring with t = max degree, for Eulerian bipartite
    graphs of maximum degree at most 8."""
    _require_bipartite_loopless(g, "color_eulerian8")
    degs = g.degrees()
    for v, d in enumerate(degs):
        if d % 2:
            raise PreconditionError(f"color_eulerian8: vertex {v} has odd degree {d}")
    delta = max(degs, default=0)
    if delta > 8:
        raise PreconditionError(f"color_eulerian8: max degree {delta} exceeds 8")
    if delta == 0:
        return ColoredResult(EdgeColoring(1, ()), 1, "eulerian8")
    if delta == 2:
        part = alternate_color_cycles(g, range(g.m), 1, 2)
        return _verified(g, [part[e] for e in range(g.m)], 2, "eulerian8")
    if delta in (4, 6):
        inner = color_even_delta(g)
        return ColoredResult(inner.coloring, inner.t, "eulerian8")

    rb = _red_blue_split(g)
    for v, d in enumerate(degs):
        blue = sum(
            1
            for eid in range(g.m)
            if rb[eid] == _BLUE and v in g.edges[eid]
        )
        expected = {2: (0, 1, 2), 4: (2,), 6: (2, 4), 8: (4,), 0: (0,)}[d]
        if blue not in expected:
            raise InternalDefectError(
                f"red/blue balance broken at degree-{d} vertex {v}: {blue} blue"
            )
        if d == 2 and blue == 1:
            raise InternalDefectError(
                f"degree-2 vertex {v} received mixed colors"
            )
    blue_ids = [e for e in range(g.m) if rb[e] == _BLUE]
    red_ids = [e for e in range(g.m) if rb[e] == _RED]
    g1 = Multigraph(g.n, [g.edges[e] for e in blue_ids])
    g2 = Multigraph(g.n, [g.edges[e] for e in red_ids])
    r1 = interval4_lemma(g1)
    r2 = interval4_lemma(g2)
    final = [0] * g.m
    for pos, e in enumerate(blue_ids):
        c = r1.coloring.colors[pos]
        final[e] = c if c <= 2 else c + 2  # 3,4 -> 5,6
    for pos, e in enumerate(red_ids):
        c = r2.coloring.colors[pos]
        final[e] = c + 6 if c <= 2 else c  # 1,2 -> 7,8
    return _verified(g, final, 8, "eulerian8")


def color_degrees_124678(g: Multigraph) -> ColoredResult:
    """Cyclic interval coloring for bipartite graphs with all degrees in
    {1, 2, 4, 6, 7, 8}; odd degrees are first evened out by doubling."""
    _require_bipartite_loopless(g, "color_degrees_124678")
    degs = g.degrees()
    allowed = (0, 1, 2, 4, 6, 7, 8)
    for v, d in enumerate(degs):
        if d not in allowed:
            raise PreconditionError(
                f"color_degrees_124678: vertex {v} has degree {d}, "
                "outside {1,2,4,6,7,8}"
            )
    odd = [v for v, d in enumerate(degs) if d % 2]
    if not odd:
        inner = color_eulerian8(g)
        return ColoredResult(inner.coloring, inner.t, "degrees_124678")
    gd, _ = doubled_graph(g, odd)
    inner = color_eulerian8(gd)
    return _verified(
        g, inner.coloring.colors[: g.m], inner.t, "degrees_124678"
    )


def extend_biregular(g: Multigraph, a: int, b: int) -> tuple[Multigraph, list[int | None]]:
    """Grow an (a, b-1)-biregular graph into an (a, b)-biregular one.

    Requires gcd(a, b-1) = 1, which forces |Y| = a*k; k fresh degree-a
    vertices are attached to consecutive index blocks of Y. Original
    edges keep their ids; the origin map marks new edges with None.
    """
    if a < 1 or b < 2:
        raise PreconditionError("need a >= 1 and b >= 2")
    bip = _require_bipartite_loopless(g, "extend_biregular")
    if gcd(a, b - 1) != 1:
        raise PreconditionError(f"gcd({a},{b - 1}) must be 1")
    degs = g.degrees()
    if a != b - 1:
        xs = [v for v, d in enumerate(degs) if d == a]
        ys = [v for v, d in enumerate(degs) if d == b - 1]
        if len(xs) + len(ys) != g.n:
            raise PreconditionError(f"graph is not ({a},{b - 1})-biregular")
        side_of = {}
        for v in xs:
            side_of[v] = 0
        for v in ys:
            side_of[v] = 1
        for u, v in g.edges:
            if side_of[u] == side_of[v]:
                raise PreconditionError(
                    f"degree classes do not form a bipartition: edge ({u},{v})"
                )
    else:
        ys = sorted(bip.part(1))
        if any(degs[v] != a for v in range(g.n)):
            raise PreconditionError(f"graph is not ({a},{a})-biregular")
    if len(ys) % a:
        raise InternalDefectError(
            f"|Y| = {len(ys)} not divisible by {a}; contradicts gcd reduction"
        )
    ys = sorted(ys)
    k = len(ys) // a
    edges = list(g.edges)
    origin: list[int | None] = list(range(g.m))
    for i in range(k):
        for y in ys[a * i : a * (i + 1)]:
            edges.append((g.n + i, y))
            origin.append(None)
    out = Multigraph(g.n + k, edges)
    out_degs = out.degrees()
    if sorted(set(out_degs)) not in ([a, b], [a]):
        raise InternalDefectError("extension is not biregular as promised")
    return out, origin


def _biregular_profile(g: Multigraph) -> tuple[int, int]:
    degs = g.degrees()
    vals = sorted(set(degs))
    if 0 in vals or not vals:
        raise PreconditionError("biregular graphs have no isolated vertices")
    if len(vals) == 1:
        raise UnsupportedGraphError(
            f"regular bipartite graph (a = b = {vals[0]}) is outside the "
            "biregular dispatch; try the even-degree colorer"
        )
    if len(vals) != 2:
        raise PreconditionError(f"graph is not biregular: degrees {vals}")
    a, b = vals
    side_of = [0 if degs[v] == a else 1 for v in range(g.n)]
    for u, v in g.edges:
        if side_of[u] == side_of[v]:
            raise PreconditionError(
                "degree classes do not form a bipartition; not biregular"
            )
    return a, b


def color_biregular(g: Multigraph) -> ColoredResult:
    """Dispatch on the (a, b) degree pair of a biregular graph.

    (2r-2, 2r) and (2, even) go to the even-degree colorer at t = b;
    (2, odd) to the odd-degree colorer at t = b + 1; (4, 8) to the
    Eulerian colorer at t = 8; (4, 7) is extended to (4, 8), colored, and
    restricted (t = 8). Everything else, notably (3, 5) and (3, 6), is
    unsupported here.
    """
    _require_bipartite_loopless(g, "color_biregular")
    a, b = _biregular_profile(g)
    if (a, b) == (4, 7):
        ext, _ = extend_biregular(g, 4, 8)
        inner = color_eulerian8(ext)
        return _verified(g, inner.coloring.colors[: g.m], 8, "biregular")
    if (a, b) == (4, 8):
        inner = color_eulerian8(g)
        return ColoredResult(inner.coloring, 8, "biregular")
    if b - a == 2 and b % 2 == 0 and b >= 4:
        inner = color_even_delta(g)
        return ColoredResult(inner.coloring, b, "biregular")
    if a == 2:
        if b % 2 == 0:
            inner = color_even_delta(g)
            return ColoredResult(inner.coloring, b, "biregular")
        inner = color_odd_delta(g)
        return ColoredResult(inner.coloring, b + 1, "biregular")
    raise UnsupportedGraphError(
        f"no constructive method for ({a},{b})-biregular graphs here"
    )


def _even_delta_applies(degs, delta) -> bool:
    if delta < 4 or delta % 2:
        return False
    allowed = {0, 1, 2, delta - 2, delta - 1, delta}
    return all(d in allowed for d in degs)


def _odd_delta_applies(degs, delta) -> bool:
    if delta < 3 or delta % 2 == 0:
        return False
    allowed = {0, 1, 2, delta - 1, delta}
    return all(d in allowed for d in degs)


def auto_color(
    g: Multigraph, t_max: int | None = None, budget: int | None = None
) -> ColoredResult:
    """Try each constructive method, most specific first, then exact search.

    Raises NoMethodApplies when nothing colors the graph within the
    search ceiling; the exception carries any obstruction certificates
    that fire plus the per-t solver outcomes.
    """
    _require_bipartite_loopless(g, "auto_color")
    degs = g.degrees()
    delta = max(degs, default=0)
    if g.m == 0:
        return ColoredResult(EdgeColoring(1, ()), 1, "trivial")
    if _even_delta_applies(degs, delta):
        return color_even_delta(g)
    if _odd_delta_applies(degs, delta):
        return color_odd_delta(g)
    if delta <= 8 and all(d % 2 == 0 for d in degs):
        return color_eulerian8(g)
    try:
        return color_biregular(g)
    except (PreconditionError, UnsupportedGraphError):
        pass
    if all(d in (0, 1, 2, 4, 6, 7, 8) for d in degs):
        return color_degrees_124678(g)

    if t_max is None:
        if g.is_simple() and g.n >= 2:
            t_max = g.n + delta - 2  # bipartite simple graphs are triangle-free
        else:
            t_max = delta + 4
    outcomes = {}
    for t in range(max(delta, 1), t_max + 1):
        out = solve(g, t, budget)
        outcomes[t] = out
        if out.status == FOUND:
            return ColoredResult(out.coloring, t, "exact")
    hints = all_obstructions(g)
    unknowns = [t for t, o in outcomes.items() if o.status == UNKNOWN]
    msg = f"no method applies up to t={t_max}"
    if unknowns:
        msg += f" (budget exhausted at t in {unknowns})"
    if hints:
        msg += "; obstructions fire: " + "; ".join(r.claim for r in hints)
    raise NoMethodApplies(msg, obstructions=hints, outcomes=outcomes)
