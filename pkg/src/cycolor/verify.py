"""Edge colorings and the proper / interval / cyclic-interval verdicts.

A coloring is cyclic-interval at a vertex when its spectrum is a
contiguous arc of the color circle 1..t (equivalently: the spectrum or
its complement in [1,t] is a set of consecutive integers). Everything
downstream is judged by `is_cyclic_interval`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .multigraph import Multigraph

__all__ = [
    "EdgeColoring",
    "Spectrum",
    "VerificationReport",
    "spectrum",
    "is_cyclic_interval",
    "is_interval",
    "rotate_coloring",
    "restrict_coloring",
    "is_interval_set",
    "is_arc_mod",
    "coloring_to_json",
    "coloring_from_json",
]


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of a color in [1,t] to every EdgeId, plus the modulus t."""

    t: int
    colors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.t < 1:
            raise ValueError("palette size t must be positive")
        for c in self.colors:
            if not (1 <= c <= self.t):
                raise ValueError(f"color {c} outside [1,{self.t}]")


@dataclass(frozen=True)
class Spectrum:
    vertex: int
    colors: tuple[int, ...]  # sorted, distinct


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    interval_ok: bool
    cyclic_ok: bool
    violations: tuple[tuple[int, str], ...] = ()


def _check_sizes(g: Multigraph, coloring: EdgeColoring):
    if len(coloring.colors) != g.m:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} edges, graph has {g.m}"
        )


def is_interval_set(colors) -> bool:
    """True when the sorted distinct color set is consecutive (or empty)."""
    cs = sorted(set(colors))
    return not cs or cs[-1] - cs[0] + 1 == len(cs)


def is_arc_mod(colors, t: int) -> bool:
    """True when the color set is a contiguous arc of the circle 1..t."""
    cs = sorted(set(colors))
    if not cs or len(cs) == t:
        return True
    max_gap = cs[0] + t - cs[-1] - 1
    for i in range(1, len(cs)):
        gap = cs[i] - cs[i - 1] - 1
        if gap > max_gap:
            max_gap = gap
    return t - max_gap == len(cs)


def spectrum(g: Multigraph, coloring: EdgeColoring, v: int) -> Spectrum:
    """Set of colors on edges incident to v; a loop contributes once."""
    _check_sizes(g, coloring)
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    seen = set()
    for eid, (a, b) in enumerate(g.edges):
        if a == v or b == v:
            seen.add(coloring.colors[eid])
    return Spectrum(v, tuple(sorted(seen)))


def is_cyclic_interval(g: Multigraph, coloring: EdgeColoring) -> VerificationReport:
    """Full verdict: properness plus per-vertex interval and arc checks.

    All failures are collected into the report; nothing raises on a bad
    coloring. interval_ok implies cyclic_ok implies proper.
    """
    _check_sizes(g, coloring)
    inc = g.incident_edges()
    violations: list[tuple[int, str]] = []
    proper = True
    interval_ok = True
    cyclic_ok = True
    for v in range(g.n):
        cols = [coloring.colors[e] for e in inc[v]]
        distinct = set(cols)
        if len(distinct) != len(cols):
            proper = False
            violations.append((v, "adjacent-same-color"))
            continue
        if not is_interval_set(distinct):
            interval_ok = False
            violations.append((v, "not-interval"))
            if not is_arc_mod(distinct, coloring.t):
                cyclic_ok = False
                violations.append((v, "not-cyclic-interval"))
    if not proper:
        interval_ok = False
        cyclic_ok = False
    return VerificationReport(proper, interval_ok, cyclic_ok, tuple(violations))


def is_interval(g: Multigraph, coloring: EdgeColoring) -> bool:
    """True when the coloring is proper and every spectrum is consecutive."""
    return is_cyclic_interval(g, coloring).interval_ok


def rotate_coloring(coloring: EdgeColoring, shift: int) -> EdgeColoring:
    """Rotate every color by shift around the circle 1..t."""
    t = coloring.t
    return EdgeColoring(t, tuple((c - 1 + shift) % t + 1 for c in coloring.colors))


def restrict_coloring(
    coloring: EdgeColoring, origin, base_m: int, t: int | None = None
) -> EdgeColoring:
    """Pull a coloring of an auxiliary graph back through its origin map.

    origin[j] names the base EdgeId that auxiliary edge j came from (None
    for edges with no preimage). Colors are kept verbatim; when several
    auxiliary edges share a preimage the lowest-id one wins, which is the
    copy-1 edge for every doubling construction here.
    """
    out: list[int | None] = [None] * base_m
    for j, src in enumerate(origin):
        if src is not None and out[src] is None:
            out[src] = coloring.colors[j]
    if any(c is None for c in out):
        raise ValueError("origin map does not cover every base edge")
    return EdgeColoring(coloring.t if t is None else t, tuple(out))


def coloring_to_json(coloring: EdgeColoring) -> str:
    return json.dumps({"t": coloring.t, "colors": list(coloring.colors)})


def coloring_from_json(text: str) -> EdgeColoring:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "t" not in obj or "colors" not in obj:
        raise ValueError("coloring JSON needs keys 't' and 'colors'")
    return EdgeColoring(int(obj["t"]), [int(c) for c in obj["colors"]])
