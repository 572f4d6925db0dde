"""Linear codes over GF(q), their matroids, and extended weight distributions."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import EnumerationBudgetExceeded, RankDeficientMatrix
from .gf import (
    FieldMatrix,
    embedding,
    field,
    identity,
    kernel_basis,
    matmul,
    matrix,
    rank_of,
    row_space_basis,
    vector_matroid,
)
from .matroid import Matroid, to_mask
from .polys import UniPoly
from .weights import gwp_direct

ENUMERATION_BUDGET = 10 ** 7
CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k] code with generator G (k x n) and parity check H ((n-k) x n)."""

    G: FieldMatrix
    H: FieldMatrix

    @property
    def field(self):
        return self.G.field

    @property
    def n(self) -> int:
        return self.G.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field})"

    @cached_property
    def matroid_G(self) -> Matroid:
        return vector_matroid(self.G)

    @cached_property
    def matroid_H(self) -> Matroid:
        return vector_matroid(self.H)


def _full_rank(A: FieldMatrix, what: str) -> None:
    r = rank_of(A)
    if r != A.nrows:
        raise RankDeficientMatrix(f"{what} has rank {r} but {A.nrows} rows")


def code_from_parity_check(H: FieldMatrix) -> LinearCode:
    _full_rank(H, "parity-check matrix")
    return LinearCode(kernel_basis(H), H)


def code_from_generator(G: FieldMatrix) -> LinearCode:
    _full_rank(G, "generator matrix")
    return LinearCode(G, kernel_basis(G))


def zero_code(F, n: int) -> LinearCode:
    return LinearCode(matrix(F, [], n), identity(F, n))


def is_orthogonal(C: LinearCode) -> bool:
    prod = matmul(C.G, C.H.transpose())
    return all(x == 0 for row in prod.rows for x in row)


def _kept_columns(n: int, J: Iterable[int]) -> list[int]:
    drop = to_mask(J, n)
    return [j for j in range(n) if not drop >> j & 1]


def puncture(C: LinearCode, J: Iterable[int]) -> LinearCode:
    """Delete the coordinates in J (1-based) from every word."""
    keep = _kept_columns(C.n, J)
    G = row_space_basis(C.G.columns(keep))
    if G.nrows == 0:
        return zero_code(C.field, len(keep))
    return code_from_generator(G)


def shorten(C: LinearCode, J: Iterable[int]) -> LinearCode:
    """Words vanishing on J, with J then deleted; its parity check is H on E - J."""
    keep = _kept_columns(C.n, J)
    H = row_space_basis(C.H.columns(keep))
    return code_from_parity_check(H)


@dataclass(frozen=True)
class WeightDistribution:
    m: int
    counts: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.counts[j]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def minimum_distance(self) -> int | None:
        return next((j for j, a in enumerate(self.counts) if j and a), None)

    def to_json(self) -> dict:
        return {"m": self.m, "counts": list(self.counts)}

    def to_text(self) -> str:
        lines = ["j  A_j"]
        lines += [f"{j}  {a}" for j, a in enumerate(self.counts)]
        return "\n".join(lines)


def brute_force_distribution(C: LinearCode, m: int = 1, threads: int = 1) -> WeightDistribution:
    """Count words of each weight in C tensored up to GF(q^m), by enumeration.

    Message vectors run over GF(q^m)^k in lexicographic order of the compact
    encoding; ranges are split across threads and tallies summed.
    """
    F = C.field
    E = field(F.p, F.m * m)
    Q, k, n = E.order, C.k, C.n
    total = Q ** k
    if total > ENUMERATION_BUDGET:
        raise EnumerationBudgetExceeded(
            f"{total} words exceeds the enumeration budget {ENUMERATION_BUDGET}"
        )
    lift = embedding(F, E)
    G = [[lift[x] for x in row] for row in C.G.rows]

    def tally(lo: int, hi: int) -> np.ndarray:
        idx = np.arange(lo, hi, dtype=np.int64)
        digits = []
        for i in range(k):
            digits.append(idx // Q ** (k - 1 - i) % Q)
        weight = np.zeros(hi - lo, dtype=np.int64)
        for j in range(n):
            coord = np.zeros(hi - lo, dtype=np.int64)
            for i in range(k):
                if G[i][j]:
                    coord = E.add_arrays(coord, E.scale_array(digits[i], G[i][j]))
            weight += coord != 0
        return np.bincount(weight, minlength=n + 1)

    ranges = [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda r: tally(*r), ranges))
    else:
        parts = [tally(*r) for r in ranges]
    counts = np.zeros(n + 1, dtype=np.int64)
    for part in parts:
        counts += part
    return WeightDistribution(m, tuple(int(c) for c in counts))


def extended_weight_polynomials(C: LinearCode) -> list[UniPoly]:
    """A_{C,j}(Q) for j = 0..n, as the GWPs of the parity-check matroid."""
    return gwp_direct(C.matroid_H)


def evaluate_distribution(polys: list[UniPoly], Q: int) -> tuple[int, ...]:
    return tuple(P(Q) for P in polys)
