"""Graded Betti numbers of Stanley-Reisner ideals of a matroid and its elongations.

The fast route combines Hochster's formula with the fact that a matroid
complex has homology only in its top dimension, so each multigraded
Betti number is a signed count of independent subsets. The chain-complex
homology computation over GF(2) is kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import GroundSetTooLarge
from .gf import gf2_rank
from .matroid import (
    Matroid,
    _bit_view,
    check_cap,
    euler_characteristic,
    restrict_mask,
    to_labels,
    to_mask,
)

ORACLE_CAP = 12


@dataclass(frozen=True)
class HomologyDims:
    """Reduced homology dimensions, ``dims[d + 1]`` = dim H_d for d = -1..r-1."""

    dims: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        if d < -1 or d + 1 >= len(self.dims):
            return 0
        return self.dims[d + 1]

    def nonzero(self) -> dict[int, int]:
        return {d - 1: v for d, v in enumerate(self.dims) if v}


def boundary_terms(face: tuple[int, ...]):
    """(sub-face, sign) pairs; the element in position t (0-based) gets (-1)^t."""
    for t in range(len(face)):
        yield face[:t] + face[t + 1:], -1 if t % 2 else 1


def homology_dims_oracle(M: Matroid) -> HomologyDims:
    """Reduced homology of the independence complex, via boundary ranks over GF(2)."""
    if M.n > ORACLE_CAP:
        raise GroundSetTooLarge(f"homology oracle limited to n <= {ORACLE_CAP}")
    r = M.rank
    faces: list[list[tuple[int, ...]]] = [[] for _ in range(r + 1)]
    for m in np.flatnonzero(M.independence_table):
        f = to_labels(int(m))
        faces[len(f)].append(f)
    index = [{f: i for i, f in enumerate(sorted(fs))} for fs in faces]

    # ranks[c] = rank of the boundary map from cardinality c to c-1
    ranks = [0] * (r + 2)
    for c in range(1, r + 1):
        rows = []
        for f in faces[c]:
            v = 0
            for sub, sign in boundary_terms(f):
                if sign % 2:
                    v ^= 1 << index[c - 1][sub]
            rows.append(v)
        ranks[c] = gf2_rank(rows)
    dims = tuple(
        len(faces[c]) - ranks[c] - ranks[c + 1] for c in range(r + 1)
    )
    return HomologyDims(dims)


def betti_sigma(M: Matroid, i: int, sigma: Iterable[int]) -> int:
    """beta_{i,sigma}(I_M): nonzero only when sigma has nullity i+1."""
    mask = to_mask(sigma, M.n)
    return _betti_sigma_mask(M, i, mask)


def _betti_sigma_mask(M: Matroid, i: int, mask: int) -> int:
    if M.nullity_of_mask(mask) != i + 1:
        return 0
    restricted = restrict_mask(M, mask)
    return (-1) ** (restricted.rank - 1) * euler_characteristic(restricted)


def betti_sigma_oracle(M: Matroid, i: int, sigma: Iterable[int]) -> int:
    """Hochster's formula evaluated on the homology oracle."""
    mask = to_mask(sigma, M.n)
    restricted = restrict_mask(M, mask)
    return homology_dims_oracle(restricted)[mask.bit_count() - i - 2]


def multigraded_sweep(M: Matroid) -> tuple[np.ndarray, np.ndarray]:
    """Per-subset Betti numbers for every elongation level in one pass.

    Returns ``(values, index)``, both of shape (n-k+1, 2^n): at level l the
    only possibly nonzero beta^{(l)}_{i,sigma} sits at i = index[l, sigma]
    (index -1 marks sigma independent in M_l).
    """
    check_cap(M.n)
    n, k = M.n, M.rank
    size = M.size_table.astype(np.int64)
    nul = M.nullity_table.astype(np.int64)
    rk = M.rank_table.astype(np.int64)
    sign = 1 - 2 * (size & 1)
    levels = n - k + 1
    values = np.zeros((levels, 1 << n), dtype=np.int64)
    index = np.full((levels, 1 << n), -1, dtype=np.int64)
    for l in range(levels):
        # zeta transform: F[sigma] = sum over gamma in sigma with n(gamma) <= l
        F = np.where(nul <= l, sign, 0)
        for e in range(n):
            v = _bit_view(F, e)
            v[:, 1, :] += v[:, 0, :]
        dependent = nul > l
        rank_l = rk + l
        beta = np.where(rank_l & 1, -F, F)
        values[l] = np.where(dependent, beta, 0)
        index[l] = np.where(dependent, nul - l - 1, -1)
    return values, index


@dataclass
class GradedBettiTable:
    n: int
    level: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        if not isinstance(other, GradedBettiTable):
            return NotImplemented
        return (self.n, self.level, self.nonzero()) == (other.n, other.level, other.nonzero())

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {ij: b for ij, b in sorted(self.entries.items()) if b}

    def is_zero(self) -> bool:
        return not self.nonzero()

    def max_index(self) -> int:
        """Largest homological index with a nonzero entry (-1 if none)."""
        return max((i for (i, _), b in self.entries.items() if b), default=-1)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (ii, j), b in sorted(self.entries.items()) if ii == i and b}

    def alternating_sum(self, j: int) -> int:
        return sum((-1) ** i * b for (i, jj), b in self.entries.items() if jj == j)

    def to_json(self) -> dict:
        return {
            "l": self.level,
            "entries": [
                {"i": i, "j": j, "beta": b} for (i, j), b in self.nonzero().items()
            ],
        }

    def to_text(self) -> str:
        lines = [f"l={self.level}"]
        for i in sorted({i for i, _ in self.nonzero()}):
            cells = " ".join(f"j={j}:{b}" for j, b in self.row(i).items())
            lines.append(f"i={i}: {cells}")
        return "\n".join(lines)


def _tables_from_sweep(M: Matroid) -> list[GradedBettiTable]:
    values, index = multigraded_sweep(M)
    size = M.size_table.astype(np.int64)
    tables = []
    for l in range(values.shape[0]):
        mask = values[l] != 0
        entries: dict[tuple[int, int], int] = {}
        for i, j, b in zip(index[l][mask], size[mask], values[l][mask]):
            key = (int(i), int(j))
            entries[key] = entries.get(key, 0) + int(b)
        tables.append(GradedBettiTable(M.n, l, entries))
    return tables


def all_betti_tables(M: Matroid) -> list[GradedBettiTable]:
    """Tables for the levels l = 0..n-r(M)."""
    return _tables_from_sweep(M)


def graded_betti_table(M: Matroid, l: int) -> GradedBettiTable:
    if not 0 <= l <= M.n - M.rank:
        return GradedBettiTable(M.n, l)
    return _tables_from_sweep(M)[l]


def multigraded_betti(M: Matroid, l: int = 0) -> dict[tuple[int, tuple[int, ...]], int]:
    """Nonzero beta^{(l)}_{i,sigma}, keyed by (i, sigma as labels)."""
    if not 0 <= l <= M.n - M.rank:
        return {}
    values, index = multigraded_sweep(M)
    out = {}
    for m in np.flatnonzero(values[l]):
        out[(int(index[l, m]), to_labels(int(m)))] = int(values[l, m])
    return out


def betti_support_shift_check(M: Matroid) -> bool:
    """beta^{(l)}_{i,j} != 0 iff beta^{(l+1)}_{i-1,j} != 0, for i >= 1 and valid l."""
    tables = all_betti_tables(M)
    top = M.n - M.rank
    for l in range(top + 1):
        here = tables[l]
        nxt = tables[l + 1] if l + 1 <= top else GradedBettiTable(M.n, l + 1)
        for i in range(1, M.n + 1):
            for j in range(M.n + 1):
                if (here[i, j] != 0) != (nxt[i - 1, j] != 0):
                    return False
    return True
