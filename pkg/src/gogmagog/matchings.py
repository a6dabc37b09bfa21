"""Weighted perfect matchings of diamond-cell strips.

AR(n, m, b) is a grid of n rows with m diamond-shaped cells each.
Horizontally adjacent cells share a side corner, vertically adjacent
cells share their top and bottom corners, so each edge belongs to
exactly one cell.  Every cell carries the same weighting, read
clockwise starting from its upper-left edge:

            o
     1    /   \\    1
         /     \\
        o       o
         \\     /
    1-u   \\   /    u
            o

The NW and NE edges weigh 1, the SE edge weighs u, the SW edge 1-u.
Under every bottom corner of the last cell row whose column is not
listed in b hangs one extra pendant edge of weight 1.  Its far endpoint
has no other neighbours, so all pendant edges are forced into every
perfect matching; the interesting freedom sits entirely in the cells.

A perfect matching picks 0, 1 or 2 edges inside each cell, and two
picked edges are necessarily an opposite pair (NW+SE or NE+SW).  The
pick count minus 1 fills an n x m matrix with entries in {-1, 0, 1}
whose rows sum to 1, whose partial column sums stay in {0, 1}, and
whose full column sums mark exactly the columns of b.  Listing, for
each i, the columns whose first i rows sum to 1 turns the matrix into a
monotone triangle with bottom row b.  That grouping is the class
structure: the matrix determines the matching up to flipping the
opposite pair inside each +1 cell independently, so a class holds
2^(number of +1 entries) matchings, and the weighted sum of a class
collapses to u^inv (1-u)^inv' of its triangle.

Everything here is exhaustive backtracking, sized for instances of a
few dozen vertices.  No transfer matrices, no Pfaffians.
"""

from __future__ import annotations

import warnings
from typing import NamedTuple, Optional

from .errors import PreconditionError
from .polyring import ParamPoly
from .triangles.monotone import MonotoneTriangle

__all__ = [
    "ARGraph",
    "AREdge",
    "OddVertexWarning",
    "PerfectMatching",
    "enumerate_perfect_matchings",
    "matching_class",
    "weighted_matching_sum",
]


class OddVertexWarning(UserWarning):
    """A matching sum was requested for a graph with an odd vertex count."""


_EDGE_WEIGHTS = {
    "1": ParamPoly.const(1),
    "u": ParamPoly.var("u"),
    "1-u": ParamPoly.const(1) - ParamPoly.var("u"),
}


class AREdge(NamedTuple):
    a: tuple
    b: tuple
    weight: str
    cell: Optional[tuple]
    side: str


class ARGraph:
    """Diamond-cell strip with pendant bottom edges away from the b columns.

    Vertex labels: ("ns", r, c) are the shared top/bottom corners with
    r = 1..n+1 counted from the top, ("we", r, c) the shared side
    corners with r = 1..n and c = 1..m+1, and ("pend", 0, c) the far
    endpoints of the pendant edges.  Cell (r, c) has top corner
    ("ns", r, c), bottom corner ("ns", r+1, c), left corner ("we", r, c)
    and right corner ("we", r, c+1).
    """

    def __init__(self, n, m, b):
        b = tuple(int(c) for c in b)
        if n < 1 or m < 1:
            raise PreconditionError("need n >= 1 and m >= 1")
        if len(b) != n:
            raise PreconditionError(f"bottom column list has length {len(b)}, expected n={n}")
        if b[0] < 1 or any(b[i] >= b[i + 1] for i in range(n - 1)):
            raise PreconditionError("bottom columns must be positive and strictly increasing")
        if b[-1] > m:
            raise PreconditionError(f"bottom column {b[-1]} exceeds width m={m}")
        self.n = n
        self.m = m
        self.b = b

        # Row-interleaved vertex order keeps matched partners close
        # together, which is what makes the backtracking cheap.
        vertices = []
        for r in range(1, n + 1):
            vertices.extend(("ns", r, c) for c in range(1, m + 1))
            vertices.extend(("we", r, c) for c in range(1, m + 2))
        vertices.extend(("ns", n + 1, c) for c in range(1, m + 1))
        pendant_columns = [c for c in range(1, m + 1) if c not in set(b)]
        vertices.extend(("pend", 0, c) for c in pendant_columns)
        self.vertices = tuple(vertices)

        edges = []
        for r in range(1, n + 1):
            for c in range(1, m + 1):
                top = ("ns", r, c)
                bottom = ("ns", r + 1, c)
                left = ("we", r, c)
                right = ("we", r, c + 1)
                edges.append(AREdge(left, top, "1", (r, c), "NW"))
                edges.append(AREdge(top, right, "1", (r, c), "NE"))
                edges.append(AREdge(right, bottom, "u", (r, c), "SE"))
                edges.append(AREdge(bottom, left, "1-u", (r, c), "SW"))
        for c in pendant_columns:
            edges.append(AREdge(("ns", n + 1, c), ("pend", 0, c), "1", None, "pendant"))
        self.edges = tuple(edges)

    def __repr__(self):
        return f"ARGraph(n={self.n}, m={self.m}, b={self.b})"

    def to_json_dict(self):
        """Plain-data form of the graph (for debug dumps)."""
        return {
            "n": self.n,
            "m": self.m,
            "bottom_columns": list(self.b),
            "vertices": [list(v) for v in self.vertices],
            "edges": [
                {
                    "ends": [list(e.a), list(e.b)],
                    "weight": e.weight,
                    "side": e.side,
                    "cell": list(e.cell) if e.cell is not None else None,
                }
                for e in self.edges
            ],
        }


class PerfectMatching:
    """A perfect matching, stored as the set of chosen edge indices."""

    __slots__ = ("graph", "edges")

    def __init__(self, graph, edges):
        self.graph = graph
        self.edges = frozenset(edges)

    def weight(self):
        w = ParamPoly.const(1)
        for ei in self.edges:
            w = w * _EDGE_WEIGHTS[self.graph.edges[ei].weight]
        return w

    def __repr__(self):
        return f"PerfectMatching({sorted(self.edges)})"


def _adjacency(graph):
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj = [[] for _ in graph.vertices]
    for ei, e in enumerate(graph.edges):
        ia, ib = index[e.a], index[e.b]
        adj[ia].append((ei, ib))
        adj[ib].append((ei, ia))
    return adj


def enumerate_perfect_matchings(graph):
    """Yield every perfect matching of graph.

    Depth-first search that always extends at the lowest-index vertex
    still unmatched; with the row-interleaved vertex order of ARGraph
    the dead branches die fast.
    """
    nv = len(graph.vertices)
    if nv % 2:
        return
    adj = _adjacency(graph)
    matched = [False] * nv
    chosen = []

    def rec(lo):
        v = lo
        while v < nv and matched[v]:
            v += 1
        if v == nv:
            yield PerfectMatching(graph, chosen)
            return
        matched[v] = True
        for ei, w in adj[v]:
            if not matched[w]:
                matched[w] = True
                chosen.append(ei)
                yield from rec(v + 1)
                chosen.pop()
                matched[w] = False
        matched[v] = False

    yield from rec(0)


def weighted_matching_sum(graph):
    """Sum of edge-weight products over all perfect matchings of graph.

    Accepts anything shaped like ARGraph (a vertices tuple plus an edge
    list with weight codes).  A graph with an odd vertex count has no
    perfect matching at all; that case warns and returns the zero
    polynomial instead of raising, so sweeps over graph families keep
    running.
    """
    if len(graph.vertices) % 2:
        warnings.warn(
            "graph has an odd number of vertices, the matching sum is 0",
            OddVertexWarning,
            stacklevel=2,
        )
        return ParamPoly.zero()
    total = ParamPoly.zero()
    for matching in enumerate_perfect_matchings(graph):
        total = total + matching.weight()
    return total


def matching_class(matching):
    """Monotone triangle indexing the class of a matching, with class size.

    Each cell contributes its number of chosen edges minus one; the
    resulting matrix is accumulated row by row (partial column sums) to
    read off the triangle rows.  Returns (triangle, exponent) where the
    class of matchings mapping to the same triangle has exactly
    2**exponent members: the chosen pair inside each +1 cell can sit in
    either opposite position, independently across cells, and those
    flips are the only moves that preserve the matrix.
    """
    g = matching.graph
    picked = {}
    for ei in matching.edges:
        cell = g.edges[ei].cell
        if cell is not None:
            picked[cell] = picked.get(cell, 0) + 1
    rows = []
    exponent = 0
    partial = [0] * (g.m + 1)
    for r in range(1, g.n + 1):
        for c in range(1, g.m + 1):
            entry = picked.get((r, c), 0) - 1
            partial[c] += entry
            if entry == 1:
                exponent += 1
        row = tuple(c for c in range(1, g.m + 1) if partial[c] == 1)
        if len(row) != r or any(s not in (0, 1) for s in partial[1:]):
            raise PreconditionError("edge set is not a perfect matching of the cell grid")
        rows.append(row)
    triangle = MonotoneTriangle(tuple(rows)).validate()
    return triangle, exponent
