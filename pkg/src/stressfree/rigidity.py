"""Generic rigidity matrices and the predicates built on them."""

from __future__ import annotations

from dataclasses import dataclass

from .ff import PRIME, FieldMatrix, GenericConfiguration, generic_configuration, rank, trial_seeds
from .graph import Graph

DEFAULT_SEED = 20240611
DEFAULT_TRIALS = 3


@dataclass(frozen=True)
class RigidityReport:
    d: int
    n: int
    e: int
    rank: int
    stress_dim: int
    target_rank: int
    is_stress_free: bool
    is_rigid: bool
    seeds: tuple[int, ...]
    trials: int
    trial_ranks: tuple[int, ...]

    @property
    def trials_agree(self) -> bool:
        return len(set(self.trial_ranks)) == 1


def _check_dim(d: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


def rigidity_matrix(g: Graph, cfg: GenericConfiguration) -> FieldMatrix:
    """``dn x e`` matrix; the column of edge ``{v<u}`` holds ``f(v)-f(u)`` on v's rows.

    Rows are vertex-major (vertex ``v`` owns rows ``(v-1)d .. vd-1``),
    columns follow the lexicographic edge order.
    """
    if cfg.n != g.n:
        raise ValueError(f"configuration has {cfg.n} vertices, graph has {g.n}")
    d, p = cfg.d, cfg.prime
    data = [[0] * g.m for _ in range(d * g.n)]
    for col, (v, u) in enumerate(g.sorted_edges()):
        for i in range(d):
            diff = (cfg.coords[i][v - 1] - cfg.coords[i][u - 1]) % p
            data[(v - 1) * d + i][col] = diff
            data[(u - 1) * d + i][col] = (-diff) % p
    return FieldMatrix(data, cols=g.m, prime=p)


def target_rank(n: int, d: int) -> int:
    """Generic rank of the complete graph on ``n`` vertices in dimension ``d``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_dim(d)
    if n >= d + 1:
        return d * n - d * (d + 1) // 2
    return n * (n - 1) // 2


def generic_rank(g: Graph, d: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                 prime: int = PRIME) -> tuple[int, list[int], list[int]]:
    """Maximum rigidity-matrix rank over independent seeded configurations."""
    _check_dim(d)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seeds = trial_seeds(base_seed, trials)
    if g.n == 0 or g.m == 0:
        return 0, seeds, [0] * trials
    ranks = [rank(rigidity_matrix(g, generic_configuration(s, g.n, d, prime))) for s in seeds]
    return max(ranks), seeds, ranks


def analyze_rigidity(g: Graph, d: int, trials: int = DEFAULT_TRIALS, base_seed: int = DEFAULT_SEED,
                     prime: int = PRIME) -> RigidityReport:
    r, seeds, ranks = generic_rank(g, d, trials, base_seed, prime)
    target = target_rank(g.n, d) if g.n else 0
    return RigidityReport(
        d=d, n=g.n, e=g.m, rank=r, stress_dim=g.m - r, target_rank=target,
        is_stress_free=(r == g.m), is_rigid=(r == target),
        seeds=tuple(seeds), trials=trials, trial_ranks=tuple(ranks),
    )
