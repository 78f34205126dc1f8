"""Exact univariate polynomials and the shift-operator calculus.

Everything here works over the rationals with Python integers and
``fractions.Fraction``; nothing is ever rounded. The same :class:`Poly`
type is used for characteristic polynomials (variable ``q``), for the
generating-function side (variable ``y``) and for polynomials in the shift
operator ``S`` acting by ``(S f)(y) = f(y - 1)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class NonIntegralError(ArithmeticError):
    """A polynomial expected to have integer coefficients does not."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class InterpolationError(ArithmeticError):
    """Sample values are inconsistent with an integer polynomial of the stated degree."""


def _norm(c) -> Scalar:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class Poly:
    """Dense polynomial with exact rational coefficients, constant term first.

    Trailing zeros are stripped, so the zero polynomial has an empty
    coefficient tuple and ``degree == -1``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)
        self._hash = None

    # constructors -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def linear_root(cls, r) -> "Poly":
        """The monic linear polynomial ``y - r``."""
        return cls((-_norm(r), 1))

    # basic properties -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lead == 1

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            bad = next(c for c in self.coeffs if not isinstance(c, int))
            raise NonIntegralError(f"coefficient {bad} is not an integer in {self}")
        return self.coeffs

    # arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _norm(other)
            return Poly(c * x for x in self.coeffs)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return exact_div(self, other)
        c = _norm(other)
        if c == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return Poly(Fraction(x) / c for x in self.coeffs)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        return poly_divmod(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # evaluation and substitution --------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k) -> "Poly":
        """Return ``f(y - k)`` (so ``shift(1)`` is the operator S)."""
        k = _norm(k)
        n = len(self.coeffs)
        out = [0] * n
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for i in range(m + 1):
                out[i] += c * comb(m, i) * (-k) ** (m - i)
        return Poly(out)

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    # display ----------------------------------------------------------

    def format(self, var: str = "q") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


PolyLike = Union[Poly, Sequence]


def as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly(p)


# ----------------------------------------------------------------------
# division


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num, den = as_poly(num), as_poly(den)
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.lead
    if len(rem) - 1 < dd:
        return Poly(), num
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd]
        if c == 0:
            continue
        c = Fraction(c) / lead
        quot[k] = c
        for i, d in enumerate(den.coeffs):
            rem[k + i] -= c * d
    return Poly(quot), Poly(rem)


def exact_div(numerator: PolyLike, denominator: PolyLike) -> Poly:
    """Quotient of an exact polynomial division; raise if anything is left over."""
    q, r = poly_divmod(as_poly(numerator), as_poly(denominator))
    if not r.is_zero:
        raise InexactDivisionError(
            f"({as_poly(numerator)}) / ({as_poly(denominator)}) leaves remainder {r}"
        )
    return q


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals."""
    a, b = as_poly(a), as_poly(b)
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero:
        return a
    return a / a.lead


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic squarefree factors ``(g_i, i)`` with ``p ~ prod g_i**i``."""
    p = as_poly(p)
    if p.degree < 1:
        return []
    p = p / p.lead
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = exact_div(p, a)
    c = exact_div(dp, a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        b = exact_div(b, g)
        c = exact_div(d, g)
        d = c - b.derivative()
        if g.degree > 0:
            out.append((g, i))
        i += 1
    return out


# ----------------------------------------------------------------------
# shift calculus


def phi(a: int) -> Poly:
    """``1 + y + ... + y**(a-1)``; zero for ``a == 0``."""
    if a < 0:
        raise ValueError("phi needs a >= 0")
    return Poly([1] * a)


def phi_step(a: int, step: int) -> Poly:
    """``phi_a(y**step)``, e.g. ``1 + S^2 + ... + S^(2a-2)`` for ``step=2``."""
    if a < 0:
        raise ValueError("phi needs a >= 0")
    out = [0] * (step * (a - 1) + 1) if a else []
    for i in range(a):
        out[step * i] = 1
    return Poly(out)


def apply_shift(g: PolyLike, f: PolyLike) -> Poly:
    """Apply the operator ``g(S)`` to ``f``: ``sum_k g_k f(y - k)``.

    Uses the moments ``M_r = sum_k g_k (-k)**r`` so the cost is
    ``O(deg g * deg f + deg f**2)`` instead of one full shift per term.
    """
    g, f = as_poly(g), as_poly(f)
    if g.is_zero or f.is_zero:
        return Poly()
    d = f.degree
    moments = []
    for r in range(d + 1):
        moments.append(sum(c * (-k) ** r for k, c in enumerate(g.coeffs) if c))
    out = [0] * (d + 1)
    for m, c in enumerate(f.coeffs):
        if c == 0:
            continue
        for i in range(m + 1):
            out[i] += c * comb(m, i) * moments[m - i]
    return Poly(out)


def sigma_class(a: int, n: int, i: int, f: PolyLike) -> Poly:
    """Residue-class partial operator sum ``sum_{k = i mod a} c_k f(y - k)``.

    ``c_k`` are the coefficients of ``phi_a(y)**n``. For ``deg f < n`` this is
    the same for every residue ``i`` and equals ``phi_a(S)**n f / a``.
    """
    f = as_poly(f)
    if a < 1 or n < 1:
        raise ValueError("need positive a and n")
    if not 0 <= i < a:
        raise ValueError(f"residue {i} outside 0..{a - 1}")
    if f.degree >= n:
        raise ValueError(f"deg f = {f.degree} must be < n = {n}")
    c = phi(a) ** n
    g = Poly(ck if k % a == i else 0 for k, ck in enumerate(c.coeffs))
    return apply_shift(g, f)


def subs_shift(f: PolyLike, h) -> Poly:
    """``f(q - h)``; identical to ``apply_shift(S**h, f)`` for integer ``h >= 0``."""
    return as_poly(f).shift(h)


# ----------------------------------------------------------------------
# series helpers


def series_coeff(prefactor: PolyLike, jpoly: Union[PolyLike, Callable[[int], int]],
                 a: int, k: int):
    """Coefficient of ``y**k`` in ``prefactor(y) * sum_{j>=0} jpoly(j) y**(a j)``."""
    if k < 0:
        return 0
    pre = as_poly(prefactor)
    w = jpoly if callable(jpoly) else as_poly(jpoly)
    total = 0
    for j in range(k // a + 1):
        total += pre[k - a * j] * w(j)
    return total


def f_poly(k: int) -> Poly:
    """Generating polynomial ``sum_{s,t >= 0, 2s + t <= k} y**(s + t)``.

    Equal to ``1 + 2y + 3y^2 + ... + 2y^(k-1) + y^k``; zero for negative ``k``.
    """
    if k < 0:
        return Poly()
    out = [0] * (k + 1)
    for s in range(k // 2 + 1):
        for t in range(k - 2 * s + 1):
            out[s + t] += 1
    return Poly(out)


# ----------------------------------------------------------------------
# interpolation


def lagrange_interpolate(points: Sequence[tuple[int, int]], expected_degree: int) -> Poly:
    """Integer polynomial of degree <= ``expected_degree`` through ``points``.

    The first ``expected_degree + 1`` points determine the polynomial (Newton
    divided differences in exact arithmetic); every remaining point is a
    held-out check. Raises :class:`InterpolationError` when a held-out point
    misses or a coefficient is not an integer.
    """
    if expected_degree < 0:
        raise ValueError("expected_degree must be >= 0")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissas must be distinct")
    need = expected_degree + 1
    if len(points) < need:
        raise ValueError(f"need {need} points, got {len(points)}")
    base = points[:need]
    bx = [Fraction(x) for x, _ in base]
    table = [Fraction(v) for _, v in base]
    coef = [table[0]]
    for level in range(1, need):
        table = [(table[i + 1] - table[i]) / (bx[i + level] - bx[i])
                 for i in range(len(table) - 1)]
        coef.append(table[0])
    # expand the Newton form
    p = Poly.const(coef[-1])
    for i in range(need - 2, -1, -1):
        p = p * Poly.linear_root(bx[i]) + coef[i]
    for x, v in points[need:]:
        if p(x) != v:
            raise InterpolationError(
                f"held-out sample q={x} gives {v}, interpolant gives {p(x)}")
    if not p.is_integral():
        bad = next(c for c in p.coeffs if not isinstance(c, int))
        raise InterpolationError(f"interpolated coefficient {bad} is not an integer")
    return p
