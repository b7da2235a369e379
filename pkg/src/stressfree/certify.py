"""Certifying stress-freeness of K_r-minor-free graphs.

:func:`certify` contracts edges lying in at most ``r - 3`` triangles for
as long as possible.  Each such contraction cannot create a generic
``(r-2)``-stress in reverse, so a contraction sequence ending in an
edgeless graph (or a small clique) proves the input generically
``(r-2)``-stress free.  If the process gets stuck, every edge lies in at
least ``r - 2`` triangles and a K_r minor is extracted, except for
``r = 6`` where the graph may instead split as a clique sum over at most
four vertices; both halves are then certified recursively.

Certificates serialize to a line-oriented text format::

    CERT <r> <n> <seed,seed,...> <graph digest>
    C <u> <v> <triangles>      contraction of edge {u, v} (current labels)
    S <k> <c1> ... <ck>        clique-sum split; left subtree, then right subtree
    LE                         leaf: no edges
    LK <m>                     leaf: complete graph on m <= r-1 vertices
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ff import trial_seeds
from .graph import CliqueSeparation, Graph, GraphError, common_neighbors, complete_graph, contract_edge, split_at
from .minors import DEFAULT_BUDGET, MinorWitness, has_clique_minor, triangle_saturated_minor
from .rigidity import DEFAULT_SEED, DEFAULT_TRIALS, analyze_rigidity
from .shifting import chromatic_of_shifted, shift


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class BaseEdgeless:
    pass


@dataclass(frozen=True)
class BaseSmallClique:
    m: int


@dataclass(frozen=True)
class ContractionStep:
    u: int
    v: int
    triangles: int
    child: "Node"


@dataclass(frozen=True)
class CliqueSumNode:
    clique: tuple[int, ...]
    left: "Node"
    right: "Node"


Node = Union[BaseEdgeless, BaseSmallClique, ContractionStep, CliqueSumNode]


@dataclass(frozen=True)
class Certificate:
    r: int
    n: int
    seeds: tuple[int, ...]
    graph_id: str
    root: Node

    def to_text(self) -> str:
        lines = [f"CERT {self.r} {self.n} {','.join(map(str, self.seeds))} {self.graph_id}"]
        stack: list[Node] = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, ContractionStep):
                lines.append(f"C {node.u} {node.v} {node.triangles}")
                stack.append(node.child)
            elif isinstance(node, CliqueSumNode):
                lines.append(" ".join(["S", str(len(node.clique)), *map(str, node.clique)]))
                stack.append(node.right)
                stack.append(node.left)
            elif isinstance(node, BaseSmallClique):
                lines.append(f"LK {node.m}")
            else:
                lines.append("LE")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CertificateFormatError("empty certificate")
        head = lines[0].split()
        if len(head) != 5 or head[0] != "CERT":
            raise CertificateFormatError(f"bad header {lines[0]!r}")
        try:
            r, n = int(head[1]), int(head[2])
            seeds = tuple(int(s) for s in head[3].split(",")) if head[3] != "-" else ()
        except ValueError:
            raise CertificateFormatError(f"bad header {lines[0]!r}") from None
        pos = 1

        def parse() -> Node:
            nonlocal pos
            if pos >= len(lines):
                raise CertificateFormatError("truncated certificate")
            tok = lines[pos].split()
            pos += 1
            try:
                if tok[0] == "C" and len(tok) == 4:
                    u, v, t = map(int, tok[1:])
                    return ContractionStep(u, v, t, parse())
                if tok[0] == "S" and len(tok) >= 2 and len(tok) == 2 + int(tok[1]):
                    clique = tuple(int(x) for x in tok[2:])
                    left = parse()
                    return CliqueSumNode(clique, left, parse())
                if tok == ["LE"]:
                    return BaseEdgeless()
                if tok[0] == "LK" and len(tok) == 2:
                    return BaseSmallClique(int(tok[1]))
            except ValueError:
                pass
            raise CertificateFormatError(f"line {pos}: cannot parse {lines[pos - 1]!r}")

        root = parse()
        if pos != len(lines):
            raise CertificateFormatError(f"trailing lines after position {pos}")
        return cls(r, n, seeds, head[4], root)

    def leaves(self) -> int:
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, ContractionStep):
                stack.append(node.child)
            elif isinstance(node, CliqueSumNode):
                stack += [node.left, node.right]
            else:
                count += 1
        return count


@dataclass(frozen=True)
class CertifyOutcome:
    """Exactly one of ``certificate`` (stress-freeness proof) or ``witness`` (K_r minor)."""

    r: int
    certificate: Certificate | None = None
    witness: MinorWitness | None = None

    def __post_init__(self):
        if (self.certificate is None) == (self.witness is None):
            raise ValueError("exactly one of certificate and witness must be set")


# -- engine ------------------------------------------------------------

def _first_contractible(g: Graph, limit: int) -> tuple[int, int] | None:
    for u, v in g.sorted_edges():
        if len(g.neighbors(u) & g.neighbors(v)) <= limit:
            return u, v
    return None


def _lift(w: MinorWitness, relabeling, host_n: int) -> MinorWitness:
    preimage: dict[int, list[int]] = {}
    for old, new in relabeling.items():
        preimage.setdefault(new, []).append(old)
    sets = tuple(frozenset(x for v in b for x in preimage[v]) for b in w.branch_sets)
    return MinorWitness(host_n, w.pattern, sets)


def _certify(g: Graph, r: int, budget: int) -> tuple[Node | None, MinorWitness | None]:
    records = []
    hosts = []
    cur = g
    while True:
        if cur.m == 0:
            node: Node | None = BaseEdgeless()
            break
        if cur.is_complete() and cur.n <= r - 1:
            node = BaseSmallClique(cur.n)
            break
        e = _first_contractible(cur, r - 3)
        if e is None:
            node, witness = _stuck(cur, r, budget)
            if witness is not None:
                for rec, host in zip(reversed(records), reversed(hosts)):
                    witness = _lift(witness, rec.relabeling, host.n)
                return None, witness
            break
        hosts.append(cur)
        cur, rec = contract_edge(cur, e)
        records.append(rec)
    for rec in reversed(records):
        u, v = rec.contracted_edge
        node = ContractionStep(u, v, rec.common_neighbor_count, node)
    return node, None


def _stuck(g: Graph, r: int, budget: int) -> tuple[Node | None, MinorWitness | None]:
    if r == 2:
        u, v = min(g.edges)
        return None, MinorWitness(g.n, complete_graph(2), (frozenset([u]), frozenset([v])))
    found = triangle_saturated_minor(g, r, budget)
    if isinstance(found, MinorWitness):
        return None, found
    if not isinstance(found, CliqueSeparation):
        raise RuntimeError(f"no K_{r} minor and no clique-sum split found")
    left, wl = _certify(found.side1, r, budget)
    if wl is not None:
        return None, wl.relabel(lambda v: found.labels1[v - 1], g.n)
    right, wr = _certify(found.side2, r, budget)
    if wr is not None:
        return None, wr.relabel(lambda v: found.labels2[v - 1], g.n)
    return CliqueSumNode(found.clique, left, right), None


def certify(g: Graph, r: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
            budget: int = DEFAULT_BUDGET, exhaustive: bool = True) -> CertifyOutcome:
    """Certificate of generic ``(r-2)``-stress-freeness, or a K_r minor witness.

    The contraction engine may also certify graphs that do contain a K_r
    minor (stress-freeness does not exclude minors).  With ``exhaustive``
    such a certificate is only returned after a full K_r search comes up
    empty, so a witness is returned exactly when ``g`` has a K_r minor.
    Without it the engine's own outcome is returned, which avoids the
    exponential search on large inputs.
    """
    if not 2 <= r <= 6:
        raise ValueError(f"r must lie in 2..6, got {r}")
    node, witness = _certify(g, r, budget)
    if witness is None and exhaustive:
        witness = has_clique_minor(g, r, budget)
    if witness is not None:
        return CertifyOutcome(r, witness=witness)
    cert = Certificate(r, g.n, tuple(trial_seeds(base_seed, trials)), g.digest(), node)
    return CertifyOutcome(r, certificate=cert)


# -- replay ------------------------------------------------------------

@dataclass(frozen=True)
class ReplayReport:
    ok: bool
    path: str = ""
    reason: str = ""
    nodes: int = 0
    numeric_checks: int = 0

    def __bool__(self) -> bool:
        return self.ok


class _ReplayFailure(Exception):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


def replay_certificate(g: Graph, cert: Certificate, verify_numeric: bool = False, deep: bool = False) -> ReplayReport:
    """Re-validate every step of ``cert`` against ``g``.

    With ``verify_numeric`` each leaf graph is additionally checked to be
    generically ``(r-2)``-stress free; ``deep`` extends that check to every
    intermediate graph.
    """
    counters = {"nodes": 0, "numeric": 0}
    r = cert.r
    d = r - 2
    trials = max(1, len(cert.seeds))
    base = cert.seeds[0] if cert.seeds else DEFAULT_SEED

    def numeric(cur: Graph, path: str) -> None:
        if d < 1:
            return
        counters["numeric"] += 1
        rep = analyze_rigidity(cur, d, trials=trials, base_seed=base)
        if not rep.is_stress_free:
            raise _ReplayFailure(path, f"graph has a generic {d}-stress (dimension {rep.stress_dim})")

    def walk(node: Node, cur: Graph, path: str) -> None:
        counters["nodes"] += 1
        if deep and verify_numeric and not isinstance(node, (BaseEdgeless, BaseSmallClique)):
            numeric(cur, path)
        if isinstance(node, ContractionStep):
            here = f"{path}/C({node.u},{node.v})"
            if not cur.has_edge(node.u, node.v):
                raise _ReplayFailure(here, "edge not present")
            actual = len(common_neighbors(cur, (node.u, node.v)))
            if actual != node.triangles:
                raise _ReplayFailure(here, f"recorded {node.triangles} triangles, found {actual}")
            if actual > r - 3:
                raise _ReplayFailure(here, f"edge lies in {actual} > {r - 3} triangles")
            walk(node.child, contract_edge(cur, (node.u, node.v))[0], here)
        elif isinstance(node, CliqueSumNode):
            here = f"{path}/S{list(node.clique)}"
            if r != 6:
                raise _ReplayFailure(here, "clique-sum splits are only admissible for r = 6")
            if len(node.clique) > 4:
                raise _ReplayFailure(here, "clique larger than 4")
            if not all(1 <= v <= cur.n for v in node.clique) or len(set(node.clique)) != len(node.clique):
                raise _ReplayFailure(here, "clique vertices out of range")
            if not cur.is_clique(node.clique):
                raise _ReplayFailure(here, "separator is not a clique")
            sep = split_at(cur, node.clique)
            if sep is None:
                raise _ReplayFailure(here, "clique does not separate the graph")
            walk(node.left, sep.side1, here + "/L")
            walk(node.right, sep.side2, here + "/R")
        elif isinstance(node, BaseEdgeless):
            if cur.m != 0:
                raise _ReplayFailure(path + "/LE", f"leaf has {cur.m} edges")
            if verify_numeric:
                numeric(cur, path + "/LE")
        elif isinstance(node, BaseSmallClique):
            if not (cur.is_complete() and cur.n == node.m and node.m <= r - 1):
                raise _ReplayFailure(path + f"/LK{node.m}", "leaf is not a complete graph on <= r-1 vertices")
            if verify_numeric:
                numeric(cur, path + f"/LK{node.m}")
        else:
            raise _ReplayFailure(path, f"unknown node {node!r}")

    try:
        if not 2 <= r <= 6:
            raise _ReplayFailure("root", f"r = {r} outside 2..6")
        if cert.n != g.n:
            raise _ReplayFailure("root", f"certificate is for {cert.n} vertices, graph has {g.n}")
        if cert.graph_id != g.digest():
            raise _ReplayFailure("root", "graph digest mismatch")
        walk(cert.root, g, "root")
    except _ReplayFailure as exc:
        return ReplayReport(False, exc.path, exc.reason, counters["nodes"], counters["numeric"])
    except GraphError as exc:
        return ReplayReport(False, "root", str(exc), counters["nodes"], counters["numeric"])
    return ReplayReport(True, nodes=counters["nodes"], numeric_checks=counters["numeric"])


# -- surfaces ----------------------------------------------------------

def heawood_number(genus) -> int:
    """``floor((7 + sqrt(1 + 48 g)) / 2)`` for a genus ``g > 0``, computed exactly."""
    g = Fraction(genus)
    if g <= 0:
        raise ValueError("genus must be positive (the sphere is excluded)")
    x = 1 + 48 * g
    root = math.isqrt(x.numerator * x.denominator) // x.denominator
    return (7 + root) // 2


def reduce_low_degree(g: Graph, max_degree: int) -> Graph:
    """Repeatedly delete vertices of degree <= ``max_degree``."""
    cur = g
    while True:
        low = [v for v in cur.vertices if cur.degree(v) <= max_degree]
        if not low:
            return cur
        cur = cur.induced([v for v in cur.vertices if v not in set(low)])[0]


@dataclass(frozen=True)
class SurfaceReport:
    genus: Fraction
    heawood: int
    kind: str
    reduced_n: int
    reduced_m: int
    shifted_chromatic: int
    obstructed: bool


def surface_analysis(g: Graph, genus, kind: str = "symmetric", reduce: bool = True,
                     trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED) -> SurfaceReport:
    h = heawood_number(genus)
    target = h + 1
    work = reduce_low_degree(g, target - 2) if reduce else g
    if work.n == 0:
        chi = 0
    else:
        chi = chromatic_of_shifted(shift(work, kind, trials, base_seed))
    return SurfaceReport(Fraction(genus), h, kind, work.n, work.m, chi, chi >= target)


def surface_obstruction(g: Graph, genus, kind: str = "symmetric", reduce: bool = True,
                        trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED) -> bool:
    """True when ``{r-1, r}`` lies in the shifted graph for some ``r`` above the
    Heawood number, which rules out an embedding in the genus-``genus`` surface."""
    return surface_analysis(g, genus, kind, reduce, trials, base_seed).obstructed
