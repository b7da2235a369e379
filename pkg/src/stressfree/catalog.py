"""Named graphs and generators.

Names understood by :func:`get`:

* ``K<n>``                    complete graph, ``n <= 10``
* ``K<a>,<b>[,<c>...]``       complete multipartite graph, e.g. ``K3,3``, ``K2,2,2,2,2``
* ``K7-``                     K_7 minus an edge
* ``K4,4-e``                  K_{4,4} minus an edge
* ``petersen``, ``G7``, ``G8``, ``G9``   Petersen-family members (with K6, K3,3,1, K4,4-e)
* ``octahedron``, ``icosahedron``
* ``W<n>``                    wheel: hub 1 joined to the cycle 2..n+1
* ``stacked:<n>[:<seed>]``    stacked sphere on ``n`` vertices
* ``figure1_torus``           10-vertex linkless triangulation of the torus
* ``cone:<name>``             cone (apex ``n+1``) over another catalog graph
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field

from .graph import Graph, GraphError, complete_graph
from .minors import delta_wye


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    tags: frozenset[str] = field(default_factory=frozenset)
    provenance: str = ""


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    n = len(part)
    return Graph(n, frozenset((u, v) for u, v in itertools.combinations(range(1, n + 1), 2) if part[u - 1] != part[v - 1]))


def cone(g: Graph) -> Graph:
    apex = g.n + 1
    return Graph(apex, g.edges | {(v, apex) for v in g.vertices})


def wheel(spokes: int) -> Graph:
    if spokes < 3:
        raise GraphError("a wheel needs at least 3 spokes")
    rim = [v + 2 for v in range(spokes)]
    edges = {(1, v) for v in rim} | {tuple(sorted((rim[i], rim[(i + 1) % spokes]))) for i in range(spokes)}
    return Graph(spokes + 1, frozenset(edges))


def icosahedron() -> Graph:
    upper = [2, 3, 4, 5, 6]
    lower = [7, 8, 9, 10, 11]
    edges = set()
    for k in range(5):
        edges.add((1, upper[k]))
        edges.add((lower[k], 12))
        edges.add(tuple(sorted((upper[k], upper[(k + 1) % 5]))))
        edges.add(tuple(sorted((lower[k], lower[(k + 1) % 5]))))
        edges.add((upper[k], lower[k]))
        edges.add((upper[k], lower[(k + 1) % 5]))
    return Graph(12, frozenset(edges))


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph.from_edges(outer + spokes + inner, 10)


def stacked_sphere_faces(n: int, seed: int = 0) -> tuple[Graph, list[tuple[int, int, int]]]:
    """Grow a stacked sphere from the boundary of a tetrahedron.

    Each new vertex is inserted into a uniformly chosen facet, which is
    replaced by the three facets around the new vertex.
    """
    if n < 4:
        raise GraphError("a stacked sphere needs at least 4 vertices")
    rng = random.Random(seed)
    faces = [tuple(f) for f in itertools.combinations(range(1, 5), 3)]
    edges = set(itertools.combinations(range(1, 5), 2))
    for v in range(5, n + 1):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        faces += [(a, b, v), (a, c, v), (b, c, v)]
        edges |= {(a, v), (b, v), (c, v)}
    return Graph(n, frozenset(edges)), faces


def random_planar_triangulation(n: int, seed: int = 0) -> Graph:
    return stacked_sphere_faces(n, seed)[0]


# Transcribed from the drawing of the fundamental square: corners are vertex 1,
# the top/bottom sides read 1-2-3-1 and the left/right sides 1-4-5-1.
FIGURE1_TORUS_FACES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 4), (2, 4, 6), (2, 6, 10), (2, 7, 10), (2, 3, 7),
    (3, 4, 7), (1, 3, 4), (4, 7, 10), (4, 8, 10), (4, 5, 8),
    (4, 5, 6), (5, 6, 10), (5, 9, 10), (2, 5, 9), (1, 2, 5),
    (2, 3, 9), (3, 9, 10), (3, 8, 10), (3, 5, 8), (1, 3, 5),
)


def figure1_torus() -> Graph:
    edges = {tuple(sorted(p)) for f in FIGURE1_TORUS_FACES for p in itertools.combinations(f, 2)}
    return Graph(10, frozenset(edges))


def _g7() -> Graph:
    return delta_wye(complete_graph(6), (1, 2, 3))


def _g8() -> Graph:
    return delta_wye(_g7(), (1, 4, 5))


def _g9() -> Graph:
    return delta_wye(_g8(), (2, 4, 6))


def _k44_minus_edge() -> Graph:
    return complete_multipartite(4, 4).remove_edges([(1, 5)])


def _k7_minus_edge() -> Graph:
    return complete_graph(7).remove_edges([(1, 2)])


_FIXED = {
    "K6": (lambda: complete_graph(6), {"family"}, "Petersen family: K_6"),
    "G7": (_g7, {"family"}, "Petersen family: ΔY of K_6"),
    "K3,3,1": (lambda: complete_multipartite(3, 3, 1), {"family"}, "Petersen family: K_{3,3,1}"),
    "G8": (_g8, {"family"}, "Petersen family: ΔY of G7"),
    "K4,4-e": (_k44_minus_edge, {"family"}, "Petersen family: K_{4,4} minus an edge"),
    "G9": (_g9, {"family"}, "Petersen family: ΔY of G8"),
    "petersen": (petersen_graph, {"family"}, "Petersen family: Petersen graph"),
    "K7-": (_k7_minus_edge, set(), "K_7 minus an edge"),
    "K2,2,2,2,2": (lambda: complete_multipartite(2, 2, 2, 2, 2), {"counterexample"},
                   "K_8-minor-free but not generically 6-stress free"),
    "octahedron": (lambda: complete_multipartite(2, 2, 2), {"planar", "linkless"}, "K_{2,2,2}"),
    "icosahedron": (icosahedron, {"planar", "linkless"}, "regular icosahedron"),
    "figure1_torus": (figure1_torus, {"torus", "linkless"}, "linkless minimal triangulation of the torus"),
}

PETERSEN_FAMILY_NAMES = ("K6", "G7", "K3,3,1", "G8", "K4,4-e", "G9", "petersen")

_MULTI = re.compile(r"^K(\d+(?:,\d+)+)$")


def get(name: str) -> Graph:
    """Graph for a catalog name (see module docstring)."""
    if name in _FIXED:
        return _FIXED[name][0]()
    if name.startswith("cone:"):
        return cone(get(name[5:]))
    if name.startswith("stacked:"):
        parts = name.split(":")
        try:
            n = int(parts[1])
            seed = int(parts[2]) if len(parts) > 2 else 0
        except (IndexError, ValueError):
            raise GraphError(f"bad stacked-sphere name {name!r}; use stacked:N[:SEED]") from None
        return random_planar_triangulation(n, seed)
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 10:
            raise GraphError("complete graphs in the catalog have 1..10 vertices")
        return complete_graph(n)
    m = _MULTI.match(name)
    if m:
        return complete_multipartite(*(int(x) for x in m.group(1).split(",")))
    m = re.fullmatch(r"W(\d+)", name)
    if m:
        return wheel(int(m.group(1)))
    raise GraphError(f"unknown catalog graph {name!r}")


def entries() -> list[CatalogEntry]:
    """The fixed entries plus representative parametric ones."""
    out = [CatalogEntry(f"K{n}", complete_graph(n), frozenset({"planar", "linkless"} if n <= 4 else
                                                              {"linkless"} if n == 5 else set()), "complete graph")
           for n in range(1, 11) if n != 6]
    for name, (make, tags, prov) in _FIXED.items():
        out.append(CatalogEntry(name, make(), frozenset(tags), prov))
    out.append(CatalogEntry("K3,3", complete_multipartite(3, 3), frozenset({"linkless"}), "K_{3,3}"))
    for k in (3, 4, 5, 6, 8):
        out.append(CatalogEntry(f"W{k}", wheel(k), frozenset({"planar", "linkless"}), "wheel"))
    for n, seed in ((8, 0), (10, 1), (12, 2)):
        out.append(CatalogEntry(f"stacked:{n}:{seed}", random_planar_triangulation(n, seed),
                                frozenset({"planar", "linkless"}), "stacked sphere"))
    out.append(CatalogEntry("cone:octahedron", cone(complete_multipartite(2, 2, 2)), frozenset({"linkless"}),
                            "cone over a planar graph"))
    return out


def names() -> list[str]:
    return [e.name for e in entries()]
