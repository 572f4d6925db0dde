"""Generalized weight polynomials, the matroid enumerator, the Tutte polynomial,
and higher weight hierarchies.

Each quantity has at least two independent routes; see the tests for the
cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

import numpy as np

from .betti import GradedBettiTable, all_betti_tables
from .errors import (
    InconsistentTables,
    InterpolationInconsistency,
    MissingDegree,
    MissingEntry,
)
from .matroid import Matroid, check_cap
from .polys import BiPoly, TriPoly, UniPoly, binomial_power, interpolate_grid

NAIVE_CAP = 10


class WeightHierarchy(tuple):
    """Strictly increasing higher weights (d_1, ..., d_{n-k})."""

    def __new__(cls, weights=()):
        weights = tuple(int(d) for d in weights)
        if any(a >= b for a, b in zip(weights, weights[1:])):
            raise ValueError(f"higher weights must increase strictly: {weights}")
        if any(d < 1 for d in weights):
            raise ValueError(f"higher weights must be positive: {weights}")
        return super().__new__(cls, weights)

    def __repr__(self):
        return f"WeightHierarchy{tuple(self)}"


def _bucket(M: Matroid, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """counts[a, b] = number of subsets with first == a and second == b."""
    n = M.n
    flat = first.astype(np.int64) * (n + 1) + second.astype(np.int64)
    return np.bincount(flat, minlength=(n + 1) ** 2).reshape(n + 1, n + 1)


def size_nullity_counts(M: Matroid) -> np.ndarray:
    check_cap(M.n)
    return _bucket(M, M.size_table, M.nullity_table)


def size_complement_nullity_counts(M: Matroid) -> np.ndarray:
    """counts[j, l] = #{gamma : |gamma| = j, n(E - gamma) = l}."""
    check_cap(M.n)
    # the complement of mask s is (2^n - 1) - s, i.e. the reversed table
    return _bucket(M, M.size_table, M.nullity_table[::-1])


def gwp_direct(M: Matroid) -> list[UniPoly]:
    """P_{M,0..n} in one pass over subsets.

    Uses sum_{|sigma|=j} sum_{gamma in sigma} f(gamma)
       = sum_gamma C(n-|gamma|, j-|gamma|) f(gamma).
    """
    n = M.n
    cnt = size_nullity_counts(M)
    out = [UniPoly([1])]
    for j in range(1, n + 1):
        coeffs = [0] * (n + 1)
        for s in range(j + 1):
            w = (-1) ** (j + s) * comb(n - s, j - s)
            for l in range(n + 1):
                c = int(cnt[s, l])
                if c:
                    coeffs[l] += w * c
        out.append(UniPoly(coeffs))
    return out


def gwp_naive(M: Matroid) -> list[UniPoly]:
    """The literal double sum over sigma and gamma in sigma; O(3^n)."""
    n = M.n
    if n > NAIVE_CAP:
        raise ValueError(f"naive GWP route limited to n <= {NAIVE_CAP}")
    nul = M.nullity_table.tolist()
    size = M.size_table.tolist()
    acc = [[0] * (n + 1) for _ in range(n + 1)]
    for sigma in range(1 << n):
        j = size[sigma]
        row = acc[j]
        gamma = sigma
        while True:
            row[nul[gamma]] += -1 if size[gamma] & 1 else 1
            if gamma == 0:
                break
            gamma = (gamma - 1) & sigma
    out = [UniPoly([1])]
    for j in range(1, n + 1):
        out.append(UniPoly((-1) ** j * c for c in acc[j]))
    return out


def gwp_complement_form(M: Matroid) -> list[UniPoly]:
    """P_{M,i} as a sum over complements gamma with |gamma| >= n - i."""
    n = M.n
    cnt = size_complement_nullity_counts(M)
    out = []
    for i in range(n + 1):
        coeffs = [0] * (n + 1)
        for j in range(n - i, n + 1):
            w = (-1) ** (i + j + n) * comb(j, n - i)
            for l in range(n + 1):
                c = int(cnt[j, l])
                if c:
                    coeffs[l] += w * c
        out.append(UniPoly(coeffs))
    return out


def gwp_from_betti(
    tables: Sequence[GradedBettiTable] | Mapping[int, GradedBettiTable],
) -> list[UniPoly]:
    """Assemble P_{M,j} from alternating sums of elongation Betti numbers.

    The coefficient of Z^l in P_{M,j} (j >= 1) is
    sum_i (-1)^i (beta^{(l-1)}_{i,j} - beta^{(l)}_{i,j}); missing levels are zero.
    """
    if not isinstance(tables, Mapping):
        tables = {t.level: t for t in tables}
    if not tables:
        raise InconsistentTables("no Betti tables given")
    ns = {t.n for t in tables.values()}
    if len(ns) != 1:
        raise InconsistentTables(f"tables disagree on n: {sorted(ns)}")
    n = ns.pop()

    def alt(level: int, j: int) -> int:
        t = tables.get(level)
        return t.alternating_sum(j) if t is not None else 0

    out = [UniPoly([1])]
    for j in range(1, n + 1):
        out.append(UniPoly(alt(l - 1, j) - alt(l, j) for l in range(n + 1)))
    return out


def gwp_elongation_shift(P: UniPoly) -> UniPoly:
    """P_{M_{k-1},j} -> P_{M_k,j}: drop every power by one, folding Z into 1."""
    cs = list(P.coeffs)
    if len(cs) < 2:
        return UniPoly(cs)
    return UniPoly([cs[0] + cs[1]] + cs[2:])


def assemble_enumerator(polys: Sequence[UniPoly]) -> TriPoly:
    n = len(polys) - 1
    terms = {}
    for i, P in enumerate(polys):
        for l, c in enumerate(P.coeffs):
            if c:
                terms[(n - i, i, l)] = c
    return TriPoly(terms)


def enumerator(M: Matroid) -> TriPoly:
    """W_M(X,Y,Z) = sum_i P_{M,i}(Z) X^{n-i} Y^i."""
    return assemble_enumerator(gwp_direct(M))


def enumerator_via_complements(M: Matroid) -> TriPoly:
    """W_M = sum_gamma Z^{n(E - gamma)} (X - Y)^{|gamma|} Y^{n - |gamma|}."""
    n = M.n
    cnt = size_complement_nullity_counts(M)
    terms: dict[tuple[int, int, int], int] = {}
    for j in range(n + 1):
        expansion = binomial_power(1, -1, j)  # (X - Y)^j by power of Y
        for l in range(n + 1):
            c = int(cnt[j, l])
            if not c:
                continue
            for b, e in enumerate(expansion):
                key = (j - b, n - j + b, l)
                terms[key] = terms.get(key, 0) + c * e
    return TriPoly(terms)


def enumerator_polys(W: TriPoly, n: int) -> list[UniPoly]:
    """Recover P_{M,0..n} from the enumerator."""
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for (a, b, l), c in W.terms.items():
        out[b][l] += c
    return [UniPoly(cs) for cs in out]


def tutte(M: Matroid) -> BiPoly:
    """Corank-nullity expansion sum_sigma (X-1)^{k-r(sigma)} (Y-1)^{|sigma|-r(sigma)}."""
    check_cap(M.n)
    k = M.rank
    cnt = _bucket(M, M.rank_table, M.nullity_table)
    terms: dict[tuple[int, int], int] = {}
    for r in range(k + 1):
        xs = binomial_power(-1, 1, k - r)
        for nu in range(M.n + 1):
            c = int(cnt[r, nu])
            if not c:
                continue
            ys = binomial_power(-1, 1, nu)
            for a, ca in enumerate(xs):
                for b, cb in enumerate(ys):
                    terms[(a, b)] = terms.get((a, b), 0) + c * ca * cb
    return BiPoly(terms)


def _integral(coeffs: dict, what: str) -> dict:
    out = {}
    for key, c in coeffs.items():
        if c.denominator != 1:
            raise InterpolationInconsistency(
                f"non-integral coefficient {c} at {key} while recovering {what}"
            )
        out[key] = int(c)
    return out


def tutte_from_enumerator(W: TriPoly, n: int, k: int) -> BiPoly:
    """t(X,Y) = (X-1)^{-(n-k)} X^n W(1, 1/X, (X-1)(Y-1)), by evaluation-interpolation."""

    def value(x: int, y: int) -> Fraction:
        return Fraction(x ** n, (x - 1) ** (n - k)) * W(
            Fraction(1), Fraction(1, x), Fraction((x - 1) * (y - 1))
        )

    xs = list(range(2, n + 3))
    ys = list(range(n + 4, 2 * n + 5))
    coeffs = _integral(interpolate_grid(value, xs, ys), "the Tutte polynomial")
    t = BiPoly(coeffs)
    for d in range(3):
        x, y = n + 3 + 2 * d, 2 * n + 7 + d
        if t(x, y) != value(x, y):
            raise InterpolationInconsistency(
                "interpolated Tutte polynomial misses an off-grid check point"
            )
    return t


def enumerator_from_tutte(t: BiPoly, n: int, k: int) -> TriPoly:
    """W(X,Y,Z) = (X-Y)^{n-k} Y^k t(X/Y, (X+(Z-1)Y)/(X-Y)), by evaluation-interpolation.

    W is X,Y-homogeneous of degree n, so it is recovered from W(x, 1, z).
    """

    def value(x: int, z: int) -> Fraction:
        return (x - 1) ** (n - k) * t(Fraction(x), Fraction(x + z - 1, x - 1))

    xs = list(range(2, n + 3))
    zs = list(range(0, n - k + 1))
    coeffs = _integral(interpolate_grid(value, xs, zs), "the enumerator")
    W = TriPoly({(a, n - a, c): v for (a, c), v in coeffs.items()})
    for d in range(3):
        x, z = n + 3 + 2 * d, n - k + 2 + d
        if W(x, 1, z) != value(x, z):
            raise InterpolationInconsistency(
                "interpolated enumerator misses an off-grid check point"
            )
    if any(a > n for (a, _, _) in W.terms):
        raise InterpolationInconsistency("enumerator degree exceeds n")
    return W


def higher_weights_from_gwp(polys: Sequence[UniPoly]) -> WeightHierarchy:
    """d_i = min{s : deg P_{M,s} = i} for i = 1..(top degree)."""
    degrees = [P.degree for P in polys]
    top = max((d for d in degrees if d is not None), default=0)
    out = []
    for i in range(1, top + 1):
        s = next((s for s, d in enumerate(degrees) if d == i), None)
        if s is None:
            raise MissingDegree(f"no polynomial has degree {i}")
        out.append(s)
    return WeightHierarchy(out)


def higher_weights_from_betti(
    tables: Sequence[GradedBettiTable], top: int | None = None
) -> WeightHierarchy:
    """d_i = min{j : beta^{(i-1)}_{0,j} != 0}.

    ``top`` is n - r(M); by default it is the number of leading nonzero tables.
    """
    by_level = {t.level: t for t in tables}
    if top is None:
        top = 0
        while top in by_level and not by_level[top].is_zero():
            top += 1
    out = []
    for i in range(1, top + 1):
        t = by_level.get(i - 1)
        row = t.row(0) if t is not None else {}
        if not row:
            raise MissingEntry(f"level {i - 1} has no degree with beta_0 != 0")
        out.append(min(row))
    return WeightHierarchy(out)


def higher_weights(M: Matroid) -> WeightHierarchy:
    """d_i = min{|sigma| : n(sigma) = i}, straight from the nullity table."""
    check_cap(M.n)
    size = M.size_table
    nul = M.nullity_table
    return WeightHierarchy(
        int(size[nul == i].min()) for i in range(1, M.n - M.rank + 1)
    )


def higher_weights_all_routes(M: Matroid) -> tuple[WeightHierarchy, ...]:
    return (
        higher_weights(M),
        higher_weights_from_betti(all_betti_tables(M), M.n - M.rank),
        higher_weights_from_gwp(gwp_direct(M)),
    )


def gwp_via_elongation(M: Matroid, level: int) -> list[UniPoly]:
    """GWPs of M_level obtained by repeatedly shifting those of M."""
    polys = gwp_direct(M)
    for _ in range(level):
        polys = [gwp_elongation_shift(P) for P in polys]
    return polys


def uniform_gwp_closed_form(r: int, n: int) -> list[UniPoly]:
    """P_{U(r,n),j} = (-1)^{j+r} C(n,j) (sum_{l>=1} (-1)^l C(j,r+l) Z^l + C(j-1,r))."""
    out = [UniPoly([1])]
    for j in range(1, n + 1):
        sign = (-1) ** (j + r) * comb(n, j)
        coeffs = [comb(j - 1, r)] + [(-1) ** l * comb(j, r + l) for l in range(1, n + 1)]
        out.append(UniPoly(sign * c for c in coeffs))
    return out


__all__ = [
    "WeightHierarchy",
    "assemble_enumerator",
    "enumerator",
    "enumerator_from_tutte",
    "enumerator_polys",
    "enumerator_via_complements",
    "gwp_complement_form",
    "gwp_direct",
    "gwp_elongation_shift",
    "gwp_from_betti",
    "gwp_naive",
    "gwp_via_elongation",
    "higher_weights",
    "higher_weights_all_routes",
    "higher_weights_from_betti",
    "higher_weights_from_gwp",
    "tutte",
    "tutte_from_enumerator",
    "uniform_gwp_closed_form",
]
