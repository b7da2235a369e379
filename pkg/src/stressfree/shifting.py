"""Exterior and symmetric algebraic shifting of graphs.

Only the degree <= 2 part is computed: every vertex survives in degree
one, so a shifted graph is determined by its edge set.  The generic basis
change is a seeded :class:`~stressfree.ff.GenericConfiguration` with
``d = n``; row ``i`` of its table holds the coefficients of the ``i``-th
generic linear form.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Literal

from .ff import PRIME, FieldMatrix, GenericConfiguration, generic_configuration, greedy_independent_columns, rank, trial_seeds
from .graph import Graph, GraphError, complete_graph, is_shifted
from .rigidity import DEFAULT_SEED, DEFAULT_TRIALS

Kind = Literal["exterior", "symmetric"]
MAX_RETRIES = 5


@dataclass(frozen=True)
class ShiftedGraph:
    kind: str
    n: int
    vertices_kept: int
    edges: frozenset[tuple[int, int]]
    seeds: tuple[int, ...]
    trials: int
    consensus: bool = True

    @property
    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def __contains__(self, pair) -> bool:
        a, b = sorted(pair)
        return (a, b) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def interior_product(t: frozenset[int] | set[int], s: frozenset[int] | set[int]) -> tuple[int, frozenset[int]] | None:
    """``e_T ⌊ e_S`` as ``(sign, S \\ T)``, or ``None`` when ``T`` is not inside ``S``.

    The sign is ``(-1)**a`` with ``a`` the number of pairs ``(s, t)`` in
    ``S x T`` with ``s`` outside ``T`` and ``t < s``.
    """
    t, s = frozenset(t), frozenset(s)
    if not t <= s:
        return None
    a = sum(1 for x in s if x not in t for y in t if y < x)
    return (-1) ** a, s - t


def exterior_boundary_matrix(g: Graph, d: int, cfg: GenericConfiguration) -> FieldMatrix:
    """Matrix of ``x -> (f_1 ⌊ x, ..., f_d ⌊ x)`` on the edge space of ``g``.

    Rows and columns are ordered as in :func:`stressfree.rigidity.rigidity_matrix`.
    """
    if cfg.n != g.n or cfg.d < d:
        raise ValueError("configuration does not match graph/dimension")
    p = cfg.prime
    data = [[0] * g.m for _ in range(d * g.n)]
    for col, edge in enumerate(g.sorted_edges()):
        s = frozenset(edge)
        for j in edge:
            sign, rest = interior_product({j}, s)
            (w,) = rest
            for i in range(d):
                data[(w - 1) * d + i][col] = (sign * cfg.coords[i][j - 1]) % p
    return FieldMatrix(data, cols=g.m, prime=p)


def exterior_rank(g: Graph, d: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                  prime: int = PRIME) -> int:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if g.m == 0:
        return 0
    return max(rank(exterior_boundary_matrix(g, d, generic_configuration(s, g.n, d, prime)))
               for s in trial_seeds(base_seed, trials))


def is_d_acyclic(g: Graph, d: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                 prime: int = PRIME) -> bool:
    return exterior_rank(g, d, trials, base_seed, prime) == g.m


def is_d_hyperconnected(g: Graph, d: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                        prime: int = PRIME) -> bool:
    return exterior_rank(g, d, trials, base_seed, prime) == exterior_rank(complete_graph(g.n), d, trials, base_seed, prime)


# -- shifting ----------------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def _exterior_columns(g: Graph, cfg: GenericConfiguration) -> tuple[FieldMatrix, list[tuple[int, int]]]:
    # column S={i<j}: f_i ∧ f_j projected onto the span of e_{uw}, {u,w} in E
    a, p = cfg.coords, cfg.prime
    edges = g.sorted_edges()
    labels = _pairs(g.n)
    cols = []
    for i, j in labels:
        ai, aj = a[i - 1], a[j - 1]
        cols.append([(ai[u - 1] * aj[w - 1] - ai[w - 1] * aj[u - 1]) % p for u, w in edges])
    return FieldMatrix.from_columns(cols, len(edges), prime=p), labels


def _symmetric_columns(g: Graph, cfg: GenericConfiguration) -> tuple[FieldMatrix, list[tuple[int, int]]]:
    # degree-2 part of the face ring: basis x_u^2 (all u), then x_u x_w for edges
    a, p = cfg.coords, cfg.prime
    edges = g.sorted_edges()
    labels = monomial_order(g.n)
    cols = []
    for i, j in labels:
        ai, aj = a[i - 1], a[j - 1]
        col = [(ai[u] * aj[u]) % p for u in range(g.n)]
        col += [(ai[u - 1] * aj[w - 1] + ai[w - 1] * aj[u - 1]) % p for u, w in edges]
        cols.append(col)
    return FieldMatrix.from_columns(cols, g.n + len(edges), prime=p), labels


def monomial_order(n: int) -> list[tuple[int, int]]:
    """Degree-2 monomials ``y_i y_j`` (``i <= j``) in increasing greedy order.

    ``m < m'`` iff at the first index where the exponent vectors differ,
    ``m`` has the larger exponent.
    """
    def exponents(m):
        e = [0] * n
        for k in m:
            e[k - 1] += 1
        return e

    mons = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]

    def cmp(m1, m2):
        for x, y in zip(exponents(m1), exponents(m2)):
            if x != y:
                return -1 if x > y else 1
        return 0

    return sorted(mons, key=functools.cmp_to_key(cmp))


def _shift_once(g: Graph, kind: str, seed: int, prime: int) -> tuple[tuple[int, ...], frozenset[tuple[int, int]]]:
    cfg = generic_configuration(seed, g.n, g.n, prime)
    if kind == "exterior":
        mat, labels = _exterior_columns(g, cfg)
        kept = greedy_independent_columns(mat)
        edges = frozenset(labels[k] for k in kept)
    elif kind == "symmetric":
        mat, labels = _symmetric_columns(g, cfg)
        kept = greedy_independent_columns(mat)
        edges = frozenset((i - 1, j) for i, j in (labels[k] for k in kept) if i >= 2)
    else:
        raise ValueError(f"unknown shifting kind {kind!r}")
    return tuple(kept), edges


def shift(g: Graph, kind: Kind = "symmetric", trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
          prime: int = PRIME) -> ShiftedGraph:
    """Algebraic shifting ``Δ(g)`` of the given kind.

    Each trial runs the greedy basis selection with its own seed.  A
    degenerate seed can only push selections later, so on disagreement
    extra seeds are drawn (up to ``MAX_RETRIES``) and the earliest
    selection is kept; ``consensus`` records whether all trials agreed.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if g.m == 0:
        seeds = tuple(trial_seeds(base_seed, trials))
        return ShiftedGraph(kind, g.n, g.n, frozenset(), seeds, trials)
    seeds = trial_seeds(base_seed, trials + MAX_RETRIES)
    results = [_shift_once(g, kind, s, prime) for s in seeds[:trials]]
    used = trials
    consensus = len({r[0] for r in results}) == 1
    while not consensus and used < len(seeds):
        results.append(_shift_once(g, kind, seeds[used], prime))
        used += 1
        best = min(r[0] for r in results)
        if sum(1 for r in results if r[0] == best) >= trials:
            break
    _, edges = min(results)
    return ShiftedGraph(kind, g.n, g.n, edges, tuple(seeds[:used]), used, consensus)


def exterior_shift(g: Graph, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                   prime: int = PRIME) -> ShiftedGraph:
    return shift(g, "exterior", trials, base_seed, prime)


def symmetric_shift(g: Graph, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                    prime: int = PRIME) -> ShiftedGraph:
    return shift(g, "symmetric", trials, base_seed, prime)


def chromatic_of_shifted(s: ShiftedGraph | Graph) -> int:
    """Chromatic number of a shifted graph: least ``k`` with ``{k, k+1}`` absent."""
    g = s.graph if isinstance(s, ShiftedGraph) else s
    if not is_shifted(g):
        raise GraphError("chromatic_of_shifted needs a shifted graph")
    k = 1
    while (k, k + 1) in g.edges:
        k += 1
    return k
