"""Undirected graphs and problem instances.

Vertices are 0..n-1 everywhere in the library; the file format uses
1-based ids and the parser translates.
"""

from __future__ import annotations

from .errors import VertexRangeError


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph backed by an edge set, adjacency lists and bitmasks."""

    __slots__ = ("n", "edges", "adj", "masks")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.edges = frozenset(seen)
        adj = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.masks = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def is_independent(self, subset) -> bool:
        """True when no two vertices of `subset` are adjacent."""
        mask = 0
        for v in subset:
            self._check_vertex(v)
            if self.masks[v] & mask:
                return False
            mask |= 1 << v
        return True

    def complement(self) -> "Graph":
        n = self.n
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in self.edges
        ]
        return Graph(n, edges)

    def induced(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `vertices`; returns (subgraph, sorted original ids).

        Sub-vertex i corresponds to the i-th entry of the returned id tuple.
        """
        vs = tuple(sorted(set(vertices)))
        for v in vs:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(vs), edges), vs

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest member."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Instance:
    """A conflict graph plus one additive profit row per agent.

    `qbound` is the largest per-agent total; no profile entry can exceed it.
    """

    __slots__ = ("graph", "k", "profits", "qbound")

    def __init__(self, graph: Graph, profits):
        rows = tuple(tuple(int(x) for x in row) for row in profits)
        if not rows:
            raise ValueError("need at least one profit row")
        for row in rows:
            if len(row) != graph.n:
                raise ValueError(
                    f"profit row length {len(row)} != vertex count {graph.n}"
                )
            if any(x < 0 for x in row):
                raise ValueError("profits must be nonnegative")
        self.graph = graph
        self.k = len(rows)
        self.profits = rows
        self.qbound = max(sum(row) for row in rows)

    @property
    def n(self) -> int:
        return self.graph.n

    def profit(self, cls0: int, v: int) -> int:
        return self.profits[cls0][v]

    def with_profits(self, profits) -> "Instance":
        return Instance(self.graph, profits)

    def sub_instance(self, vertices) -> tuple["Instance", tuple[int, ...]]:
        sub, ids = self.graph.induced(vertices)
        rows = [tuple(row[v] for v in ids) for row in self.profits]
        return Instance(sub, rows), ids

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.graph == other.graph and self.profits == other.profits

    def __repr__(self):
        return f"Instance(n={self.n}, m={self.graph.m}, k={self.k}, qbound={self.qbound})"
