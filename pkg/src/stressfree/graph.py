"""Simple undirected graphs on vertex set ``1..n``.

Graphs are immutable values.  Edges are stored as sorted pairs ``(u, v)``
with ``u < v``.  The text edge-list format used throughout the package is::

    # optional comment lines
    n m
    u v
    ...
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


def _norm(e: Iterable[int]) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        normed = frozenset(_norm(e) for e in self.edges)
        for u, v in normed:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u and v <= self.n):
                raise GraphError(f"edge {(u, v)} out of range 1..{self.n}")
        object.__setattr__(self, "edges", normed)
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in normed:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> "Graph":
        edges = [_norm(e) for e in edges]
        if n is None:
            n = max((v for e in edges for v in e), default=0)
        return cls(n, frozenset(edges))

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(self._adj[v]) for v in self.vertices]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and 1 <= u <= self.n and v in self._adj[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in itertools.combinations(vs, 2))

    def triangle_count(self) -> int:
        return sum(len(self._adj[u] & self._adj[v]) for u, v in self.edges) // 3

    # -- derived graphs ------------------------------------------------
    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> "Graph":
        """Apply a vertex map; ``mapping`` must be injective on endpoints."""
        return Graph(self.n if n is None else n, frozenset(_norm((mapping[u], mapping[v])) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled ``1..k`` in increasing label order.

        Returns the subgraph and the list ``labels`` with ``labels[i-1]``
        the original label of new vertex ``i``.
        """
        labels = sorted(set(vertices))
        index = {v: i + 1 for i, v in enumerate(labels)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(labels), frozenset(sub)), labels

    def add_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        return Graph(self.n, self.edges | {_norm(e) for e in edges})

    def remove_edges(self, edges: Iterable[Iterable[int]]) -> "Graph":
        return Graph(self.n, self.edges - {_norm(e) for e in edges})

    def delete_vertex(self, v: int) -> "Graph":
        keep = [u for u in self.vertices if u != v]
        return self.induced(keep)[0]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def digest(self) -> str:
        """Short stable hash of the labelled graph (its edge-list text)."""
        return hashlib.sha256(to_edge_list(self).encode()).hexdigest()[:16]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


# -- contraction -------------------------------------------------------

@dataclass(frozen=True)
class EdgeContractionRecord:
    """Replayable description of one edge contraction.

    ``relabeling`` maps every pre-contraction label to its post-contraction
    label; both endpoints of ``contracted_edge`` map to the same label.
    """

    contracted_edge: Edge
    surviving_label: int
    relabeling: Mapping[int, int]
    common_neighbor_count: int

    def replay(self, g: Graph) -> Graph:
        u, v = self.contracted_edge
        if not g.has_edge(u, v):
            raise GraphError(f"edge {(u, v)} not in graph")
        return _contract(g, u, v)[0]


def common_neighbors(g: Graph, e: Iterable[int]) -> frozenset[int]:
    u, v = _norm(e)
    if not g.has_edge(u, v):
        raise GraphError(f"edge {(u, v)} not in graph")
    return g.neighbors(u) & g.neighbors(v)


def _contract(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    # u < v: u survives, labels above v shift down by one
    mapping = {w: (w if w < v else w - 1) for w in g.vertices if w != v}
    mapping[v] = u
    new_edges = {_norm((mapping[a], mapping[b])) for a, b in g.edges if {a, b} != {u, v}}
    return Graph(g.n - 1, frozenset(new_edges)), mapping


def contract_edge(g: Graph, e: Iterable[int]) -> tuple[Graph, EdgeContractionRecord]:
    """Identify the endpoints of ``e``; the smaller label survives."""
    u, v = _norm(e)
    common = common_neighbors(g, (u, v))
    h, mapping = _contract(g, u, v)
    return h, EdgeContractionRecord((u, v), u, mapping, len(common))


# -- clique separators -------------------------------------------------

@dataclass(frozen=True)
class CliqueSeparation:
    """``g = side1 ∪ side2`` with ``side1 ∩ side2`` the clique on ``clique``.

    ``labels1``/``labels2`` map the canonically relabelled sides back to
    labels of the separated graph.
    """

    side1: Graph
    side2: Graph
    clique: tuple[int, ...]
    labels1: tuple[int, ...]
    labels2: tuple[int, ...]


def split_at(g: Graph, clique: Sequence[int]) -> CliqueSeparation | None:
    """Split ``g`` along the vertex set ``clique``.

    Side 1 is the clique plus the component of ``g - clique`` holding the
    lowest non-clique vertex; side 2 is the clique plus everything else.
    Returns ``None`` when ``clique`` does not separate ``g``.
    """
    cset = set(clique)
    rest = [v for v in g.vertices if v not in cset]
    if not rest:
        return None
    start = rest[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in cset and y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) == len(rest):
        return None
    side1, labels1 = g.induced(cset | seen)
    side2, labels2 = g.induced(set(g.vertices) - seen)
    return CliqueSeparation(side1, side2, tuple(sorted(cset)), tuple(labels1), tuple(labels2))


def find_clique_separator(g: Graph, kmax: int) -> CliqueSeparation | None:
    """Smallest, then lexicographically first, clique of size <= ``kmax`` separating ``g``."""
    if not g.is_connected():
        raise GraphError("find_clique_separator needs a connected graph")
    if not 0 <= kmax <= g.n:
        raise GraphError(f"kmax must lie in 0..{g.n}")
    for k in range(0, kmax + 1):
        for clique in _cliques_of_size(g, k):
            sep = split_at(g, clique)
            if sep is not None:
                return sep
    return None


def _cliques_of_size(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    # lexicographic order by construction
    def extend(prefix: tuple[int, ...], candidates: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1:] if w in g.neighbors(v)]
            yield from extend(prefix + (v,), nxt)

    yield from extend((), list(g.vertices))


# -- shiftedness -------------------------------------------------------

def is_shifted(g: Graph) -> bool:
    """Downward closure of the edge set under the componentwise order."""
    for a, b in g.edges:
        for a2 in range(1, a + 1):
            for b2 in range(a2 + 1, b + 1):
                if (a2, b2) not in g.edges:
                    return False
    return True


# -- isomorphism (brute force, small graphs) ---------------------------

def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """Vertex bijection ``g -> h`` preserving adjacency, by backtracking.

    Intended for n <= 10; candidates are filtered by degree.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    order = sorted(g.vertices, key=lambda v: -g.degree(v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def bt(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if all(h.has_edge(w, mapping[x]) == g.has_edge(v, x) for x in order[:i]):
                mapping[v] = w
                used.add(w)
                if bt(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(mapping) if bt(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- serialization -----------------------------------------------------

def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), lineno))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphError("empty edge list: missing 'n m' header")
    n, m, _ = rows[0]
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = set()
    for u, v, lineno in body:
        if not (1 <= u < v <= n):
            raise GraphError(f"line {lineno}: need 1 <= u < v <= {n}, got {u} {v}")
        if (u, v) in edges:
            raise GraphError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
