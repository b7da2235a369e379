"""Exact dense linear algebra over a large prime field.

Generic real coordinates are replaced by pseudo-random residues modulo
``PRIME``.  A polynomial identity of degree ``k`` that does not vanish
identically survives a uniform random substitution with probability at
least ``1 - k/p``, so ranks computed here equal the generic ranks with
overwhelming probability.  Every configuration is reproducible from its
``(seed, n, d)`` triple.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

#: Mersenne prime 2**61 - 1.
PRIME = (1 << 61) - 1


class FieldMatrix:
    """Dense ``rows x cols`` matrix with entries in ``Z/pZ``.

    Entries are kept row-major as a list of row lists.  Instances are
    treated as immutable; all operations return new objects.
    """

    __slots__ = ("rows", "cols", "data", "prime")

    def __init__(self, data: Sequence[Sequence[int]], cols: int | None = None, prime: int = PRIME):
        rows = [[x % prime for x in row] for row in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ValueError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.data = rows
        self.prime = prime

    @classmethod
    def zeros(cls, rows: int, cols: int, prime: int = PRIME) -> "FieldMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols, prime=prime)

    @classmethod
    def identity(cls, n: int, prime: int = PRIME) -> "FieldMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n, prime=prime)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int, prime: int = PRIME) -> "FieldMatrix":
        data = [[col[i] for col in columns] for i in range(rows)]
        return cls(data, cols=len(columns), prime=prime)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def columns(self) -> list[list[int]]:
        return [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix.from_columns(self.data, self.cols, prime=self.prime) if self.cols else FieldMatrix.zeros(0, self.rows, self.prime)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.prime, self.data) == (other.rows, other.cols, other.prime, other.data)

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols})"


class EchelonBasis:
    """Incrementally maintained row-echelon basis of a subspace of ``F_p^length``.

    Each stored vector is normalised so that its pivot (first nonzero
    coordinate) equals one.  ``add`` reports whether the offered vector
    was independent of everything stored so far.
    """

    def __init__(self, length: int, prime: int = PRIME):
        self.length = length
        self.prime = prime
        self._pivots: dict[int, list[int]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, vector: Iterable[int]) -> list[int]:
        p = self.prime
        v = [x % p for x in vector]
        for k in sorted(self._pivots):
            f = v[k]
            if f:
                b = self._pivots[k]
                v[k:] = [(x - f * y) % p for x, y in zip(v[k:], b[k:])]
        return v

    def add(self, vector: Iterable[int]) -> bool:
        v = self.reduce(vector)
        for k, x in enumerate(v):
            if x:
                inv = pow(x, -1, self.prime)
                p = self.prime
                self._pivots[k] = [0] * k + [(y * inv) % p for y in v[k:]]
                return True
        return False


def rank(m: FieldMatrix) -> int:
    """Exact rank of ``m`` by Gaussian elimination on the shorter side."""
    if m.rows == 0 or m.cols == 0:
        return 0
    vectors = m.data if m.rows <= m.cols else m.columns()
    basis = EchelonBasis(len(vectors[0]), m.prime)
    r = 0
    limit = min(m.rows, m.cols)
    for vec in vectors:
        if basis.add(vec):
            r += 1
            if r == limit:
                break
    return r


def kernel_dimension(m: FieldMatrix) -> int:
    """Dimension of the right kernel: ``cols - rank``."""
    return m.cols - rank(m)


def greedy_independent_columns(m: FieldMatrix, order: Sequence[int] | None = None) -> list[int]:
    """Scan columns in ``order`` and keep those outside the span of kept ones."""
    if order is None:
        order = range(m.cols)
    order = list(order)
    if sorted(order) != list(range(m.cols)):
        raise ValueError("order must be a permutation of the column indices")
    cols = m.columns()
    basis = EchelonBasis(m.rows, m.prime)
    kept = []
    for j in order:
        if len(basis) == m.rows:
            break
        if basis.add(cols[j]):
            kept.append(j)
    return kept


@dataclass(frozen=True)
class GenericConfiguration:
    """Seeded pseudo-random stand-in for a generic point configuration.

    ``coords[i][v]`` is the ``i``-th coordinate (0-based) of vertex ``v``
    (0-based), i.e. the entry in row ``i`` and column ``v`` of the
    ``d x n`` coefficient table.
    """

    seed: int
    n: int
    d: int
    coords: tuple[tuple[int, ...], ...]
    prime: int = PRIME

    def point(self, v: int) -> tuple[int, ...]:
        """Coordinates of 1-based vertex ``v``."""
        return tuple(row[v - 1] for row in self.coords)


def field_element(seed: int, i: int, j: int, prime: int = PRIME) -> int:
    """Counter-mode draw: BLAKE2b of ``(seed, i, j)`` reduced mod ``prime``.

    128 bits of digest keep the modular bias below ``2**-60``.
    """
    key = f"{seed}:{i}:{j}".encode()
    digest = hashlib.blake2b(key, digest_size=16, person=b"stressfree-cfg").digest()
    return int.from_bytes(digest, "big") % prime


def generic_configuration(seed: int, n: int, d: int, prime: int = PRIME) -> GenericConfiguration:
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    coords = tuple(tuple(field_element(seed, i, v, prime) for v in range(n)) for i in range(d))
    return GenericConfiguration(seed=seed, n=n, d=d, coords=coords, prime=prime)


def trial_seeds(base_seed: int, trials: int) -> list[int]:
    """Independent seeds for ``trials`` repetitions derived from ``base_seed``."""
    return [base_seed + 7919 * t for t in range(trials)]
