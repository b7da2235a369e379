"""Minor detection with branch-set witnesses, and the Petersen family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import CliqueSeparation, Graph, GraphError, complete_graph, find_clique_separator, find_isomorphism, split_at

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """Raised when a minor search visits more nodes than its budget allows."""


@dataclass(frozen=True)
class MinorWitness:
    """Branch sets of a model of ``pattern`` in a host on ``host_n`` vertices.

    ``branch_sets[i]`` is the host vertex set standing for pattern vertex
    ``i + 1``.
    """

    host_n: int
    pattern: Graph
    branch_sets: tuple[frozenset[int], ...]

    def to_json(self) -> dict:
        return {
            "host_n": self.host_n,
            "pattern_n": self.pattern.n,
            "pattern_edges": [list(e) for e in self.pattern.sorted_edges()],
            "branch_sets": [sorted(b) for b in self.branch_sets],
        }

    def relabel(self, mapping, host_n: int) -> "MinorWitness":
        """Push branch sets through a host-vertex map (e.g. back to a parent graph)."""
        return MinorWitness(host_n, self.pattern, tuple(frozenset(mapping(v) for v in b) for b in self.branch_sets))


def verify_minor_witness(g: Graph, h: Graph, w: MinorWitness) -> bool:
    """Check a witness against its definition, without reusing search code."""
    if w.host_n != g.n or w.pattern != h or len(w.branch_sets) != h.n:
        return False
    seen: set[int] = set()
    for b in w.branch_sets:
        if not b or not all(1 <= v <= g.n for v in b) or seen & b:
            return False
        seen |= b
        start = next(iter(b))
        reached = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for y in g.neighbors(x):
                if y in b and y not in reached:
                    reached.add(y)
                    frontier.append(y)
        if reached != b:
            return False
    for a, c in h.edges:
        ba, bc = w.branch_sets[a - 1], w.branch_sets[c - 1]
        if not any(g.neighbors(x) & bc for x in ba):
            return False
    return True


# -- search ------------------------------------------------------------

class _Search:
    def __init__(self, g: Graph, h: Graph, budget: int):
        self.g = g
        self.h = h
        self.k = h.n
        self.complete = h.is_complete()
        self.budget = budget
        self.nodes = 0
        self.h_deg = {v: h.degree(v) for v in h.vertices}
        self.h_degrees_desc = sorted(self.h_deg.values(), reverse=True)
        self.h_plan = self._plan()

    def _plan(self) -> tuple[list[int], list[list[int]]]:
        # pattern vertices by descending degree, then most already-placed neighbours
        h = self.h
        order: list[int] = []
        left = set(h.vertices)
        while left:
            v = max(left, key=lambda x: (len(h.neighbors(x) & set(order)), h.degree(x), -x))
            order.append(v)
            left.discard(v)
        back = [[order.index(w) for w in h.neighbors(v) if order.index(w) < i] for i, v in enumerate(order)]
        return order, back

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"minor search exceeded {self.budget} nodes")

    def connected_sets(self, v: int, allowed: frozenset[int], max_size: int) -> Iterator[frozenset[int]]:
        """Every connected subset of ``g[allowed]`` containing ``v``, each once."""
        adj = self.g.neighbors

        def rec(part: frozenset[int], ext: list[int], excluded: set[int]) -> Iterator[frozenset[int]]:
            self.tick()
            yield part
            if len(part) == max_size:
                return
            ext = list(ext)
            excluded = set(excluded)
            while ext:
                w = ext.pop()
                grown = part | {w}
                new_ext = ext + [x for x in adj(w) if x in allowed and x not in grown and x not in excluded and x not in ext]
                yield from rec(grown, new_ext, excluded)
                excluded.add(w)

        start_ext = sorted(x for x in adj(v) if x in allowed)
        yield from rec(frozenset([v]), start_ext, set())

    def _connected(self, vs: frozenset[int]) -> bool:
        if not vs:
            return True
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.g.neighbors(x):
                if y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    def _adjacent(self, a: frozenset[int], b: frozenset[int]) -> bool:
        return any(self.g.neighbors(x) & b for x in a)

    def partitions(self, remaining: frozenset[int], parts: list[frozenset[int]], allow_discard: bool) -> Iterator[list[frozenset[int]]]:
        """Connected partitions of ``remaining`` into ``k - len(parts)`` more parts.

        With ``allow_discard`` vertices may be left unused; otherwise every
        remaining vertex must land in a part.
        """
        need = self.k - len(parts)
        if need == 0:
            if not remaining or allow_discard:
                yield parts
            return
        if len(remaining) < need:
            return
        v = min(remaining)
        if allow_discard:
            yield from self.partitions(remaining - {v}, parts, True)
        max_size = len(remaining) - (need - 1)
        for part in self.connected_sets(v, remaining, max_size):
            if self.complete and not all(self._adjacent(part, q) for q in parts):
                continue
            rest = remaining - part
            if need > 1:
                if len(rest) < need - 1:
                    continue
                if self.complete and not allow_discard:
                    if not self._connected(rest) or not self._adjacent(part, rest):
                        continue
            if not self.complete and not allow_discard and not self._degrees_possible(parts + [part], rest):
                continue
            yield from self.partitions(rest, parts + [part], allow_discard)

    def _degrees_possible(self, parts: list[frozenset[int]], rest: frozenset[int]) -> bool:
        # a part with no neighbour left in ``rest`` has its final quotient degree
        mindeg = min(self.h.degrees())
        for q in parts:
            if any(self.g.neighbors(x) & rest for x in q):
                continue
            if sum(1 for o in parts if o is not q and self._adjacent(q, o)) < mindeg:
                return False
        return True

    def match(self, parts: list[frozenset[int]]) -> tuple[frozenset[int], ...] | None:
        """Assign parts to pattern vertices so every pattern edge is realised."""
        if self.complete:
            return tuple(parts)
        k = self.k
        qmask = [0] * k
        for i in range(k):
            for j in range(i + 1, k):
                if self._adjacent(parts[i], parts[j]):
                    qmask[i] |= 1 << j
                    qmask[j] |= 1 << i
        qdeg = [bin(m).count("1") for m in qmask]
        if any(q < hd for q, hd in zip(sorted(qdeg, reverse=True), self.h_degrees_desc)):
            return None
        order, back = self.h_plan
        assign = [0] * k
        hdeg = self.h_deg

        def bt(i: int, used: int) -> bool:
            if i == k:
                return True
            hv = order[i]
            cand = ~used & ((1 << k) - 1)
            for pos in back[i]:
                cand &= qmask[assign[pos]]
            while cand:
                low = cand & -cand
                pi = low.bit_length() - 1
                cand ^= low
                if qdeg[pi] < hdeg[hv]:
                    continue
                assign[i] = pi
                if bt(i + 1, used | low):
                    return True
            return False

        if not bt(0, 0):
            return None
        where = {hv: assign[i] for i, hv in enumerate(order)}
        return tuple(parts[where[hv]] for hv in self.h.vertices)

    def run(self) -> MinorWitness | None:
        g, h = self.g, self.h
        if h.n == 0:
            return MinorWitness(g.n, h, ())
        if h.n > g.n or h.m > g.m:
            return None
        if h.is_connected():
            # a model of a connected pattern inside a connected host can be
            # grown until it covers the host component
            for comp in g.components():
                sub, labels = g.induced(comp)
                if len(comp) < h.n or sub.m < h.m:
                    continue
                inner = _Search(sub, h, self.budget - self.nodes)
                found = None
                try:
                    for parts in inner.partitions(frozenset(sub.vertices), [], allow_discard=False):
                        found = inner.match(parts)
                        if found is not None:
                            break
                finally:
                    self.nodes += inner.nodes
                if found is not None:
                    return MinorWitness(g.n, h, tuple(frozenset(labels[v - 1] for v in b) for b in found))
            return None
        for parts in self.partitions(frozenset(g.vertices), [], allow_discard=True):
            found = self.match(parts)
            if found is not None:
                return MinorWitness(g.n, h, found)
        return None


def has_minor(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> MinorWitness | None:
    """Return a branch-set witness of ``h ≺ g`` or ``None``; exhaustive.

    Branch sets are trimmed to be inclusion-minimal before returning.
    """
    w = _Search(g, h, budget).run()
    return None if w is None else _trim(g, w)


def _trim(g: Graph, w: MinorWitness) -> MinorWitness:
    sets = list(w.branch_sets)
    changed = True
    while changed:
        changed = False
        for i, b in enumerate(sets):
            for v in sorted(b, reverse=True):
                if len(b) == 1:
                    break
                sets[i] = b - {v}
                if verify_minor_witness(g, w.pattern, MinorWitness(w.host_n, w.pattern, tuple(sets))):
                    b = sets[i]
                    changed = True
                else:
                    sets[i] = b
    return MinorWitness(w.host_n, w.pattern, tuple(sets))


def has_clique_minor(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> MinorWitness | None:
    return has_minor(g, complete_graph(r), budget)


# -- Petersen family ---------------------------------------------------

def delta_wye(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace the triangle's edges by a new vertex joined to its corners."""
    a, b, c = triangle
    new = g.n + 1
    edges = (g.edges - {tuple(sorted(p)) for p in ((a, b), (a, c), (b, c))}) | {(a, new), (b, new), (c, new)}
    return Graph(new, frozenset(edges))


def wye_delta(g: Graph, v: int) -> Graph | None:
    """Replace a degree-3 vertex by a triangle on its neighbours.

    Returns ``None`` when a triangle edge already exists (the result would
    not be simple).
    """
    nbrs = sorted(g.neighbors(v))
    if len(nbrs) != 3:
        raise GraphError(f"vertex {v} has degree {len(nbrs)}, expected 3")
    if any(g.has_edge(x, y) for x, y in itertools.combinations(nbrs, 2)):
        return None
    h = g.add_edges(itertools.combinations(nbrs, 2))
    return h.delete_vertex(v)


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    return [t for t in itertools.combinations(g.vertices, 3) if g.is_clique(t)]


def petersen_family() -> list[Graph]:
    """ΔY/YΔ closure of K_6 up to isomorphism, ordered by (n, degree sequence)."""
    family = [complete_graph(6)]
    queue = [complete_graph(6)]
    while queue:
        g = queue.pop()
        nbrs = [delta_wye(g, t) for t in _triangles(g)]
        nbrs += [h for v in g.vertices if g.degree(v) == 3 for h in [wye_delta(g, v)] if h is not None]
        for h in nbrs:
            if not any(find_isomorphism(h, f) is not None for f in family):
                family.append(h)
                queue.append(h)
    if len(family) != 7:
        raise RuntimeError(f"Petersen family closure has {len(family)} members, expected 7")
    return sorted(family, key=lambda f: (f.n, sorted(f.degrees())))


_FAMILY_CACHE: list[Graph] | None = None


def _family() -> list[Graph]:
    global _FAMILY_CACHE
    if _FAMILY_CACHE is None:
        _FAMILY_CACHE = petersen_family()
    return _FAMILY_CACHE


def linkless_obstruction(g: Graph, budget: int = DEFAULT_BUDGET) -> MinorWitness | None:
    """A Petersen-family minor of ``g`` if one exists."""
    for member in _family():
        w = has_minor(g, member, budget)
        if w is not None:
            return w
    return None


def is_linkless(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Linklessly embeddable iff no Petersen-family minor."""
    return linkless_obstruction(g, budget) is None


# -- Mader -------------------------------------------------------------

def mader_bound(r: int, n: int) -> int:
    """Maximum edge count of a K_r-minor-free graph on ``n`` vertices, 3 <= r <= 7.

    Below ``r - 1`` vertices every graph is K_r-minor-free and the bound is
    ``C(n, 2)``.
    """
    if not 3 <= r <= 7:
        raise ValueError(f"Mader's bound is stated for 3 <= r <= 7, got r={r}")
    if n < r - 1:
        return n * (n - 1) // 2
    return (r - 2) * n - (r - 1) * (r - 2) // 2


def check_mader(g: Graph, r: int) -> bool:
    return g.m <= mader_bound(r, g.n)


# -- triangle-saturated graphs -----------------------------------------

def edge_triangle_counts(g: Graph) -> dict[tuple[int, int], int]:
    return {(u, v): len(g.neighbors(u) & g.neighbors(v)) for u, v in g.edges}


def triangle_saturated_minor(g: Graph, r: int, budget: int = DEFAULT_BUDGET) -> MinorWitness | CliqueSeparation | None:
    """K_r witness (or, for r = 6, possibly a clique-sum split) for a graph whose
    every edge lies in at least ``r - 2`` triangles.

    For r <= 5 the neighbourhood ``N(u)`` of any non-isolated vertex has
    minimum degree >= r - 2 and therefore a K_{r-1} minor; adding ``{u}``
    as a branch set gives K_r.  For r = 6 a cone over a K_5 minor in a
    low-degree neighbourhood is tried first, then a separating clique of
    size <= 4, then a full K_6 search.
    """
    if not 3 <= r <= 6:
        raise ValueError(f"r must lie in 3..6, got {r}")
    if g.m == 0:
        raise ValueError("graph has no edge")
    counts = edge_triangle_counts(g)
    low = [e for e, c in counts.items() if c < r - 2]
    if low:
        raise ValueError(f"edge {min(low)} lies in fewer than {r - 2} triangles")

    active = sorted((v for v in g.vertices if g.degree(v) > 0), key=lambda v: (g.degree(v), v))
    if r <= 5:
        for u in active:
            w = _cone_witness(g, u, r, budget)
            if w is not None:
                return w
        return has_clique_minor(g, r, budget)

    for u in active:
        if g.degree(u) > 7:
            break
        w = _cone_witness(g, u, r, budget)
        if w is not None:
            return w
    if not g.is_connected():
        return split_at(g, ())
    sep = find_clique_separator(g, min(4, g.n))
    if sep is not None:
        return sep
    return has_clique_minor(g, 6, budget)


def _cone_witness(g: Graph, u: int, r: int, budget: int) -> MinorWitness | None:
    nbhd, labels = g.induced(g.neighbors(u))
    w = has_clique_minor(nbhd, r - 1, budget)
    if w is None:
        return None
    sets = tuple(frozenset(labels[v - 1] for v in b) for b in w.branch_sets) + (frozenset([u]),)
    return MinorWitness(g.n, complete_graph(r), sets)
