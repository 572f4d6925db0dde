"""Matroids on small ground sets, stored by their bases.

Subsets are bitmasks: element ``e`` (1-based label) is bit ``e - 1``.
All public functions accept and return 1-based labels; the ``*_mask``
helpers are the internal form.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .errors import (
    ElementOutOfRange,
    EmptyBasisFamily,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    InvalidElongation,
    UnequalBasisCardinality,
)

DEFAULT_MAX_N = 20


def max_ground_size() -> int:
    """Cap on n for the exhaustive 2^n sweeps (env ``MATROID_MAX_N``)."""
    raw = os.environ.get("MATROID_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def check_cap(n: int) -> None:
    cap = max_ground_size()
    if n > cap:
        raise GroundSetTooLarge(
            f"ground set of size {n} exceeds cap {cap} (set MATROID_MAX_N to override)"
        )


def to_mask(labels: Iterable[int], n: int) -> int:
    mask = 0
    for e in labels:
        e = int(e)
        if not 1 <= e <= n:
            raise ElementOutOfRange(f"element {e} not in 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def to_labels(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount_table(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int8)
    idx = np.arange(1 << n, dtype=np.int64)
    for e in range(n):
        pc += ((idx >> e) & 1).astype(np.int8)
    return pc


def _bit_view(arr: np.ndarray, e: int) -> np.ndarray:
    # axis 1 is bit e: [:, 0, :] = subsets without e, [:, 1, :] = with e
    return arr.reshape(-1, 2, 1 << e)


@dataclass(frozen=True, eq=False)
class Matroid:
    """A matroid given by ground-set size and basis family (bitmasks).

    Construct through :func:`from_bases`; the bare constructor trusts its
    input. ``labels`` records the original element names after a
    restriction and does not take part in equality.
    """

    n: int
    bases: frozenset[int]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def rank(self) -> int:
        return next(iter(self.bases)).bit_count()

    def basis_labels(self) -> list[tuple[int, ...]]:
        return sorted(to_labels(b) for b in self.bases)

    def rank_of_mask(self, mask: int) -> int:
        return max((b & mask).bit_count() for b in self.bases)

    def nullity_of_mask(self, mask: int) -> int:
        return mask.bit_count() - self.rank_of_mask(mask)

    def is_independent_mask(self, mask: int) -> bool:
        return any(mask & b == mask for b in self.bases)

    # exhaustive tables over all 2^n subsets, indexed by bitmask

    @cached_property
    def independence_table(self) -> np.ndarray:
        check_cap(self.n)
        ind = np.zeros(1 << self.n, dtype=bool)
        ind[np.fromiter(self.bases, dtype=np.int64)] = True
        for e in range(self.n):
            v = _bit_view(ind, e)
            v[:, 0, :] |= v[:, 1, :]
        return ind

    @cached_property
    def size_table(self) -> np.ndarray:
        check_cap(self.n)
        return popcount_table(self.n)

    @cached_property
    def rank_table(self) -> np.ndarray:
        # max |I| over independent I contained in each subset
        r = np.where(self.independence_table, self.size_table, 0).astype(np.int8)
        for e in range(self.n):
            v = _bit_view(r, e)
            np.maximum(v[:, 1, :], v[:, 0, :], out=v[:, 1, :])
        return r

    @cached_property
    def nullity_table(self) -> np.ndarray:
        return self.size_table - self.rank_table

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        ind = self.independence_table
        dep = ~ind
        minimal = dep.copy()
        idx = np.arange(1 << self.n, dtype=np.int64)
        for e in range(self.n):
            has = ((idx >> e) & 1).astype(bool)
            # removing any element must leave an independent set
            minimal &= ~has | ind[idx & ~(1 << e)]
        return tuple(int(m) for m in np.flatnonzero(minimal))

    @cached_property
    def independent_counts(self) -> tuple[int, ...]:
        """f_i, the number of independent sets of each cardinality."""
        counts = np.bincount(
            self.size_table[self.independence_table], minlength=self.n + 1
        )
        return tuple(int(c) for c in counts)


def from_bases(n: int, bases: Iterable[Iterable[int]], validate: bool = True) -> Matroid:
    """Build a matroid on {1..n} from its bases (1-based labels).

    Validation checks equal cardinality and the basis-exchange axiom
    over every ordered pair of bases.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    masks = frozenset(to_mask(b, n) for b in bases)
    if not masks:
        raise EmptyBasisFamily("a matroid needs at least one basis")
    if validate:
        validate_bases(n, masks)
    return Matroid(n, masks)


def validate_bases(n: int, masks: frozenset[int]) -> None:
    sizes = {m.bit_count() for m in masks}
    if len(sizes) > 1:
        raise UnequalBasisCardinality(f"bases have sizes {sorted(sizes)}")
    for b1 in masks:
        for b2 in masks:
            if b1 == b2:
                continue
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            x = diff1
            while x:
                xbit = x & -x
                x ^= xbit
                base = b1 & ~xbit
                y = diff2
                ok = False
                while y:
                    ybit = y & -y
                    y ^= ybit
                    if base | ybit in masks:
                        ok = True
                        break
                if not ok:
                    raise ExchangeAxiomViolation(
                        to_labels(b1), to_labels(b2), xbit.bit_length()
                    )


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    masks = frozenset(
        sum(1 << e for e in c) for c in combinations(range(n), r)
    )
    return Matroid(n, masks)


def free(n: int) -> Matroid:
    return uniform(n, n)


def rank(M: Matroid, sigma: Iterable[int] = None) -> int:
    if sigma is None:
        return M.rank
    return M.rank_of_mask(to_mask(sigma, M.n))


def nullity(M: Matroid, sigma: Iterable[int]) -> int:
    return M.nullity_of_mask(to_mask(sigma, M.n))


def is_independent(M: Matroid, sigma: Iterable[int]) -> bool:
    return M.is_independent_mask(to_mask(sigma, M.n))


def dual(M: Matroid) -> Matroid:
    full = M.ground
    return Matroid(M.n, frozenset(full & ~b for b in M.bases))


def restrict(M: Matroid, sigma: Iterable[int]) -> Matroid:
    """Restriction to ``sigma``, relabelled 1..|sigma| in increasing order.

    The result's ``labels`` maps new label i to ``labels[i - 1]`` in M.
    """
    mask = to_mask(sigma, M.n)
    return restrict_mask(M, mask)


def restrict_mask(M: Matroid, mask: int) -> Matroid:
    r = M.rank_of_mask(mask)
    # maximal independent subsets of sigma are exactly the largest B ∩ sigma
    pieces = {b & mask for b in M.bases if (b & mask).bit_count() == r}
    positions = [e for e in range(M.n) if mask >> e & 1]
    relabel = {1 << old: 1 << new for new, old in enumerate(positions)}
    bases = frozenset(
        sum(relabel[1 << e] for e in positions if p >> e & 1) for p in pieces
    )
    parent = M.labels or tuple(range(1, M.n + 1))
    return Matroid(len(positions), bases, labels=tuple(parent[e] for e in positions))


def elongate(M: Matroid, i: int) -> Matroid:
    """Elongation to rank r(M)+i: independent sets are those of nullity <= i."""
    k = M.rank
    if not 0 <= i <= M.n - k:
        raise InvalidElongation(f"elongation level {i} outside [0, {M.n - k}]")
    if i == 0:
        return M
    # bases: (k+i)-sets of full rank k
    check_cap(M.n)
    sizes = M.size_table
    ranks = M.rank_table
    masks = np.flatnonzero((sizes == k + i) & (ranks == k))
    return Matroid(M.n, frozenset(int(m) for m in masks))


def elongations(M: Matroid) -> list[Matroid]:
    """[M_0, M_1, ..., M_{n-r(M)}]."""
    return [elongate(M, i) for i in range(M.n - M.rank + 1)]


def independent_sets(M: Matroid) -> list[tuple[int, ...]]:
    return [to_labels(int(m)) for m in np.flatnonzero(M.independence_table)]


def circuits(M: Matroid) -> list[tuple[int, ...]]:
    return sorted(to_labels(c) for c in M.circuit_masks)


def euler_characteristic(M: Matroid) -> int:
    """Reduced Euler characteristic -1 + f_1 - f_2 + ... ."""
    return sum((-1) ** (i + 1) * f for i, f in enumerate(M.independent_counts))


def uniform_euler_characteristic(r: int, n: int) -> int:
    return sum((-1) ** (i + 1) * comb(n, i) for i in range(r + 1))
