"""Roots, the common-real-part property, and region counts."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Union

import mpmath
import numpy as np

from .closed_forms import chi_interval
from .families import Arrangement, FamilySpec, build, dedup_count, rank_of
from .poly import Poly, apply_shift, as_poly, exact_div, squarefree_decomposition

log = logging.getLogger(__name__)


class RootFindingError(ArithmeticError):
    pass


class PreconditionError(ValueError):
    """Inputs do not satisfy the hypotheses of the real-part shift lemma."""


# ----------------------------------------------------------------------
# roots

_PREC = 60  # decimal digits for Newton polishing


def _mp(c) -> mpmath.mpf:
    c = Fraction(c)
    return mpmath.mpf(c.numerator) / c.denominator


def _polish(coeffs_mp, dcoeffs_mp, z0: complex, steps: int = 60):
    z = mpmath.mpc(z0)
    for _ in range(steps):
        pz = mpmath.polyval(coeffs_mp, z)
        dz = mpmath.polyval(dcoeffs_mp, z)
        if dz == 0:
            break
        step = pz / dz
        z -= step
        if abs(step) <= mpmath.mpf(10) ** (-_PREC + 10) * max(1, abs(z)):
            break
    return z


def poly_roots(p: Union[Poly, list]) -> list[complex]:
    """All complex roots of ``p`` with multiplicity.

    ``p`` is split exactly into squarefree factors first, so repeated roots
    (common here: ``(q - 4)^3`` and the like) are found as simple roots of a
    factor and then repeated. Each factor is solved through its companion
    matrix and every root polished by Newton's method at 60 digits on the
    exact coefficients.
    """
    p = as_poly(p)
    if p.is_zero:
        raise ValueError("the zero polynomial has no well-defined roots")
    roots: list[complex] = []
    with mpmath.workdps(_PREC):
        for g, mult in squarefree_decomposition(p):
            high_first = [_mp(c) for c in reversed(g.coeffs)]
            dhigh = [_mp(c) for c in reversed(g.derivative().coeffs)]
            if g.degree == 1:
                zs = [complex(-high_first[1] / high_first[0])]
            else:
                approx = np.roots([float(c) for c in high_first])
                zs = []
                for z0 in approx:
                    z = _polish(high_first, dhigh, complex(z0))
                    scale = sum(abs(c) * abs(z) ** k
                                for k, c in enumerate(reversed(high_first)))
                    resid = abs(mpmath.polyval(high_first, z))
                    if resid > mpmath.mpf("1e-10") * scale:
                        raise RootFindingError(f"root {complex(z)} of {g} did not converge")
                    zs.append(complex(z))
            roots.extend(z for z in zs for _ in range(mult))
    roots.sort(key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return roots


# ----------------------------------------------------------------------
# common real part


@dataclass
class RiemannReport:
    spec: FamilySpec
    l: int
    h: int
    target: Fraction
    chi: Poly
    roots: list[complex]
    max_re_deviation: float
    sum_of_roots_ok: bool
    provenance: str
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.sum_of_roots_ok and self.max_re_deviation < self.tol


def essential_chi(family: str, chi: Poly) -> Poly:
    """Drop the extra factor q carried by family A (exactly once)."""
    if family == "A":
        return exact_div(chi, Poly.monomial(1))
    return chi


def verify_riemann(family: str, n: int, a: int, b: int, tol: float = 1e-8) -> RiemannReport:
    """Check that every root of chi for ``[-a+1, b]`` has real part ``h / l``.

    Requires ``0 <= a <= b`` not both zero. Also confirms exactly that the
    roots sum to h, i.e. the ``q^(l-1)`` coefficient is ``-h``.
    """
    if not (0 <= a <= b) or (a == 0 and b == 0):
        raise ValueError("need 0 <= a <= b, not both zero")
    spec = FamilySpec(family, n, -a + 1, b)
    res = chi_interval(family, n, -a + 1, b)
    chi = essential_chi(family, res.chi)
    l = rank_of(spec)
    if chi.degree != l:
        raise ArithmeticError(f"{spec}: chi has degree {chi.degree}, rank is {l}")
    h = dedup_count(build(spec))
    sum_ok = chi.lead == 1 and -chi[l - 1] == h
    roots = poly_roots(chi)
    target = Fraction(h, l)
    dev = max(abs(z.real - float(target)) for z in roots)
    return RiemannReport(spec, l, h, target, chi, roots, dev, sum_ok, res.provenance, tol)


def lemma51_numeric_check(g: Union[Poly, list], f: Union[Poly, list], r, tol: float = 1e-8) -> bool:
    """If g has all roots on the unit circle and f all roots on Re = r, then
    g(S) f has all roots on Re = r + deg(g)/2. Returns whether that holds.

    Raises :class:`PreconditionError` when g or f fails the hypotheses.
    """
    g, f = as_poly(g), as_poly(f)
    if g.is_zero or f.degree < 1:
        raise PreconditionError("need nonzero g and f of positive degree")
    for z in poly_roots(g):
        if abs(abs(z) - 1) > tol:
            raise PreconditionError(f"g has root {z} off the unit circle")
    for z in poly_roots(f):
        if abs(z.real - float(r)) > tol:
            raise PreconditionError(f"f has root {z} off the line Re = {float(r)}")
    out = apply_shift(g, f)
    if out.degree < 1:
        raise PreconditionError("g(S) f is constant; nothing to check")
    want = float(r) + g.degree / 2
    return all(abs(z.real - want) <= tol for z in poly_roots(out))


# ----------------------------------------------------------------------
# regions


def region_count(chi: Union[Poly, Arrangement], n: Optional[int] = None) -> int:
    """Number of regions ``(-1)^n chi(-1)`` of a real arrangement in R^n."""
    if isinstance(chi, Arrangement):
        from .ffcount import chi_interpolated

        n = chi.dim if n is None else n
        chi = chi_interpolated(chi)
    chi = as_poly(chi)
    n = chi.degree if n is None else n
    return (-1) ** n * chi(-1)


def linial_regions_closed(family: str, n: int) -> int:
    """Region count of the Linial arrangement ``[1, 1]`` from its binomial sum."""
    if family == "A":
        if n < 2:
            raise ValueError("A needs n >= 2")
        total = sum(comb(n, k) * (k + 1) ** (n - 1) for k in range(n + 1))
        return int(Fraction(total, 2 ** n))
    if family in ("B", "C"):
        if n < 1:
            raise ValueError("n must be positive")
        return 2 * sum(comb(n - 1, k) * (k + 1) ** n for k in range(n))
    if family == "D":
        if n < 2:
            raise ValueError("D needs n >= 2")
        return 4 * sum(comb(n - 2, k) * (k + 1) ** n for k in range(n - 1))
    if family == "BC":
        return sum(comb(n, k) * (k + 1) ** n for k in range(n + 1))
    raise ValueError(f"unknown family {family!r}")


def planar_region_count(arr: Arrangement) -> int:
    """Regions of a line arrangement in the plane, by Euler's formula.

    ``1 + #lines + sum over crossing points of (lines through it - 1)``.
    Independent of any characteristic polynomial.
    """
    if arr.dim != 2:
        raise ValueError("planar count needs an arrangement in R^2")
    lines = [(Fraction(a), Fraction(b), c) for (a, b), c in arr.keys()]
    through: dict[tuple, set] = {}
    for i, j in combinations(range(len(lines)), 2):
        a1, b1, c1 = lines[i]
        a2, b2, c2 = lines[j]
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        pt = ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
        through.setdefault(pt, set()).update((i, j))
    return 1 + len(lines) + sum(len(s) - 1 for s in through.values())
