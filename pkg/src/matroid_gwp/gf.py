"""Finite fields GF(p^m), dense matrices over them, and vector matroids.

Field elements are ints in ``range(p**m)``: the compact encoding of the
polynomial a0 + a1*t + ... + a_{m-1}*t^{m-1} is sum(a_i * p**i).
Prime-field elements are therefore just their residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldTooLarge, NonPrimeCharacteristic
from .matroid import Matroid, check_cap

FIELD_CAP = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- polynomials over GF(p) as coefficient lists, low degree first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); b must have a nonzero leading coefficient."""
    a = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = a[-1] * inv_lead % p
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def monic_polys(p: int, d: int):
    """All monic degree-d polys, low-degree-first lex order on coefficients."""
    for coeffs in product(range(p), repeat=d):
        # product varies the last slot fastest; reverse so a0 is most significant
        yield list(reversed(coeffs)) + [1]


def is_irreducible(f: Sequence[int], p: int) -> bool:
    d = len(f) - 1
    if d <= 0:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not poly_mod(f, g, p):
                return False
    return True


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lex-first monic irreducible of degree m (a0 compared first)."""
    if m == 1:
        return (0, 1)
    for f in _lex_monic(p, m):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _lex_monic(p: int, m: int):
    for coeffs in product(range(p), repeat=m):
        yield list(coeffs) + [1]


@dataclass(frozen=True)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.m

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _mul_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        return self.from_digits(poly_mod(prod, self.modulus, self.p) + [0] * self.m)

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.order
        if q == 2:
            return np.array([1, 1], dtype=np.int64), np.array([0, 0], dtype=np.int64)
        for g in range(2, q):
            exp = np.zeros(q - 1, dtype=np.int64)
            x = 1
            for i in range(q - 1):
                exp[i] = x
                x = self._mul_slow(x, g)
                if x == 1 and i < q - 2:
                    break
            else:
                log = np.zeros(q, dtype=np.int64)
                log[exp] = np.arange(q - 1)
                return exp, log
        raise AssertionError("no primitive element")  # unreachable

    @property
    def exp_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def log_table(self) -> np.ndarray:
        return self._tables[1]

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits(
            [(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))]
        )

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        exp, log = self._tables
        return int(exp[(log[a] + log[b]) % (self.order - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.m == 1:
            return pow(a, -1, self.p)
        exp, log = self._tables
        return int(exp[-log[a] % (self.order - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        out = 1
        for _ in range(e):
            out = self.mul(out, a)
        return out

    # vectorized arithmetic on numpy int arrays

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale % self.p + b // scale % self.p) % self.p) * scale
            scale *= self.p
        return out

    def scale_array(self, a: np.ndarray, c: int) -> np.ndarray:
        """Elementwise c * a."""
        if c == 0:
            return np.zeros_like(a)
        if self.m == 1:
            return a * c % self.p
        exp, log = self._tables
        out = exp[(log[a] + log[c]) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    def elements(self) -> range:
        return range(self.order)


@lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> FiniteField:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** m > FIELD_CAP:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the field cap {FIELD_CAP}")
    return FiniteField(p, m, first_irreducible(p, m))


def embedding(small: FiniteField, big: FiniteField) -> list[int]:
    """Field homomorphism small -> big as a lookup list over small's elements.

    Requires small.p == big.p and small.m | big.m. For a prime base field
    this is the constant-polynomial inclusion.
    """
    if small.p != big.p or big.m % small.m:
        raise ValueError(f"{small} does not embed in {big}")
    if small.m == 1:
        return list(range(small.p))
    # image of t: a root of small's modulus inside big
    for alpha in big.elements():
        acc = 0
        power = 1
        for c in small.modulus:
            acc = big.add(acc, big.mul(c, power))
            power = big.mul(power, alpha)
        if acc == 0:
            break
    else:
        raise AssertionError("modulus has no root in extension")  # unreachable
    powers = [1]
    for _ in range(small.m - 1):
        powers.append(big.mul(powers[-1], alpha))
    table = []
    for a in small.elements():
        v = 0
        for d, pw in zip(small.digits(a), powers):
            v = big.add(v, big.mul(d, pw))
        table.append(v)
    return table


@dataclass(frozen=True)
class FieldMatrix:
    field: FiniteField
    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValueError("row data does not match the declared shape")
        q = self.field.order
        for r in self.rows:
            for x in r:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} is not an element of {self.field}")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, cols: Iterable[int]) -> "FieldMatrix":
        """Submatrix on the given 0-based column indices."""
        cols = list(cols)
        return FieldMatrix(
            self.field, self.nrows, len(cols),
            tuple(tuple(r[j] for j in cols) for r in self.rows),
        )

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.field, self.ncols, self.nrows,
            tuple(self.column(j) for j in range(self.ncols)),
        )

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)


def matrix(F: FiniteField, rows: Sequence[Sequence[int]], ncols: int | None = None) -> FieldMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return FieldMatrix(F, len(rows), ncols, rows)


def zeros(F: FiniteField, nrows: int, ncols: int) -> FieldMatrix:
    return matrix(F, [[0] * ncols for _ in range(nrows)], ncols)


def identity(F: FiniteField, k: int) -> FieldMatrix:
    return matrix(F, [[int(i == j) for j in range(k)] for i in range(k)], k)


def matmul(A: FieldMatrix, B: FieldMatrix) -> FieldMatrix:
    F = A.field
    if A.ncols != B.nrows:
        raise ValueError("shape mismatch")
    out = []
    for i in range(A.nrows):
        row = []
        for j in range(B.ncols):
            acc = 0
            for t in range(A.ncols):
                acc = F.add(acc, F.mul(A.rows[i][t], B.rows[t][j]))
            row.append(acc)
        out.append(row)
    return matrix(F, out, B.ncols)


def rref(A: FieldMatrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and the pivot columns.

    Pivot choice is the first nonzero entry at or below the current row.
    """
    F = A.field
    rows = [list(r) for r in A.rows]
    pivots = []
    r = 0
    for c in range(A.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[: len(pivots)], pivots


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row vectors packed as int bitsets."""
    basis: dict[int, int] = {}
    rank = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                rank += 1
                break
    return rank


def rank_of(A: FieldMatrix) -> int:
    if A.nrows == 0 or A.ncols == 0:
        return 0
    if A.field.order == 2:
        return gf2_rank(sum(x << j for j, x in enumerate(r)) for r in A.rows)
    return len(rref(A)[1])


def kernel_basis(A: FieldMatrix) -> FieldMatrix:
    """Rows spanning {x : A x^T = 0}; there are ncols - rank of them."""
    F = A.field
    reduced, pivots = rref(A)
    free_cols = [c for c in range(A.ncols) if c not in set(pivots)]
    out = []
    for f in free_cols:
        x = [0] * A.ncols
        x[f] = 1
        for row, pc in zip(reduced, pivots):
            x[pc] = F.neg(row[f])
        out.append(x)
    return matrix(F, out, A.ncols)


def row_space_basis(A: FieldMatrix) -> FieldMatrix:
    reduced, _ = rref(A)
    return matrix(A.field, reduced, A.ncols)


def vector_matroid(A: FieldMatrix) -> Matroid:
    """Matroid on column labels 1..ncols given by linear independence."""
    check_cap(A.ncols)
    F = A.field
    cols = [list(A.column(j)) for j in range(A.ncols)]
    target = rank_of(A)
    bases = set()

    def reduce(v, echelon):
        v = list(v)
        for pc, row in echelon:
            if v[pc]:
                f = v[pc]
                v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, row)]
        return v

    def extend(start, mask, echelon):
        if len(echelon) == target:
            bases.add(mask)
            return
        # not enough columns left to reach full rank
        if A.ncols - start < target - len(echelon):
            return
        for j in range(start, A.ncols):
            v = reduce(cols[j], echelon)
            pc = next((i for i, x in enumerate(v) if x), None)
            if pc is None:
                continue
            inv = F.inv(v[pc])
            v = [F.mul(inv, x) for x in v]
            extend(j + 1, mask | 1 << j, echelon + [(pc, v)])

    extend(0, 0, [])
    return Matroid(A.ncols, frozenset(bases))
