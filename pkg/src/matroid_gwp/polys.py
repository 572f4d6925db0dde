"""Exact integer polynomials in one, two and three variables."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

ZERO_DEGREE = None  # sentinel: degree of the zero polynomial


class UniPoly:
    """Integer polynomial in one variable; ``coeffs[d]`` multiplies Z^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls([c])

    @property
    def degree(self):
        """Degree, or ``ZERO_DEGREE`` (None) for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return render_uni(self)

    def to_json(self) -> dict[str, int]:
        return {str(d): c for d, c in enumerate(self.coeffs) if c}


def _as_uni(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x])


def _term(coef: int, mono: str, first: bool) -> str:
    sign = "-" if coef < 0 else "+"
    mag = abs(coef)
    body = mono if (mag == 1 and mono) else f"{mag}{mono}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def render_uni(P: UniPoly, var: str = "Z") -> str:
    """Descending powers with explicit signs, e.g. ``15Z^2 - 43Z + 28``."""
    if P.is_zero():
        return "0"
    parts = []
    for d in range(P.degree, -1, -1):
        c = P.coeffs[d]
        if c:
            parts.append(_term(c, _power(var, d), not parts))
    return "".join(parts)


class MPoly:
    """Sparse integer polynomial; keys are exponent tuples."""

    variables: tuple[str, ...] = ()

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        nv = len(self.variables)
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != nv:
                raise ValueError(f"expected {nv} exponents, got {mono}")
            if c:
                clean[tuple(int(e) for e in mono)] = int(c)
        self.terms = clean

    def __eq__(self, other):
        if type(other) is type(self):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def coeff(self, *mono: int) -> int:
        return self.terms.get(tuple(mono), 0)

    def degree_in(self, var: int) -> int:
        return max((m[var] for m in self.terms), default=0)

    def __call__(self, *values):
        total = 0
        for mono, c in self.terms.items():
            t = c
            for v, e in zip(values, mono):
                t = t * v ** e
            total += t
        return total

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return type(self)(out)

    def __neg__(self):
        return type(self)({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({m: c * other for m, c in self.terms.items()})
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        # lex descending in (X, Y, Z): X^4 + 4X^3 + ... + XY + X + Y^4 + ...
        return sorted(self.terms.items(), key=lambda kv: tuple(-e for e in kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            name = "".join(_power(v, e) for v, e in zip(self.variables, mono))
            parts.append(_term(c, name, not parts))
        return "".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json(self) -> list[dict]:
        return [
            {**dict(zip(self.variables, mono)), "coeff": c}
            for mono, c in self.sorted_terms()
        ]


class BiPoly(MPoly):
    variables = ("X", "Y")
    __slots__ = ()


class TriPoly(MPoly):
    variables = ("X", "Y", "Z")
    __slots__ = ()


def binomial_power(a: int, b: int, d: int) -> list[int]:
    """Coefficients of (a + b*V)^d by power of V."""
    return [comb(d, i) * a ** (d - i) * b ** i for i in range(d + 1)]


# --- exact interpolation -----------------------------------------------------


def interpolate_1d(xs: Sequence[int], ys: Sequence) -> list[Fraction]:
    """Coefficients (low degree first) of the unique poly of degree < len(xs)."""
    n = len(xs)
    # Newton divided differences
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        # out = out * (x - xs[k]) + coef[k]
        shifted = [Fraction(0)] + out[:-1]
        out = [s - xs[k] * o for s, o in zip(shifted, out)]
        out[0] += coef[k]
    return out


def interpolate_grid(
    f: Callable[[int, int], Fraction], xs: Sequence[int], ys: Sequence[int]
) -> dict[tuple[int, int], Fraction]:
    """Tensor-product interpolation of a bivariate polynomial from grid values.

    Degrees are bounded by len(xs)-1 and len(ys)-1.
    """
    per_y = []
    for y in ys:
        per_y.append(interpolate_1d(xs, [f(x, y) for x in xs]))
    out = {}
    for dx in range(len(xs)):
        cs = interpolate_1d(ys, [row[dx] for row in per_y])
        for dy, c in enumerate(cs):
            if c:
                out[(dx, dy)] = c
    return out
