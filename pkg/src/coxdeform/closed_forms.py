"""Closed-form characteristic polynomials as shift operators applied to q^n.

Every formula is an operator ``g(S)`` with rational coefficients applied to a
power of q. The rational prefactors (``1/a**(n+1)`` and friends) must cancel;
:func:`_finish` insists the result is an integer, monic polynomial of the
ambient degree, which catches transcription slips immediately.

Conventions: family A is the arrangement in R^n (ambient dimension n, rank
n - 1), so every A entry carries one factor of q beyond the essential
polynomial. The Coxeter case ``[0, 0]`` has no operator formula here and is
delegated to the point counter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import ROOT_FAMILIES, FamilySpec, build
from .poly import Poly, apply_shift, exact_div, f_poly, phi, phi_step, series_coeff

Q = Poly.monomial(1)


class UnsupportedInterval(ValueError):
    pass


@dataclass(frozen=True)
class FormulaResult:
    chi: Poly
    provenance: str
    intermediate: Optional[Poly] = None


def S(k: int = 1) -> Poly:
    return Poly.monomial(k)


def _phi2(a: int) -> Poly:
    # phi_a(S^2) = 1 + S^2 + ... + S^(2a-2)
    return phi_step(a, 2)


def _finish(op: Poly, n: int, tag: str, power: Optional[int] = None, times_q: bool = False,
            monic: bool = True) -> FormulaResult:
    power = n if power is None else power
    raw = apply_shift(op, Q ** power)
    if times_q:
        raw = raw * Q
    chi = Poly(raw.to_ints())
    if monic and (chi.degree != n or chi.lead != 1):
        raise ArithmeticError(f"{tag}: result {chi} is not monic of degree {n}")
    return FormulaResult(chi, tag, raw)


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def _parity(a: int) -> str:
    return "even" if a % 2 == 0 else "odd"


# ----------------------------------------------------------------------
# type A


def chi_A_0a(n: int, a: int) -> FormulaResult:
    """``x_i - x_j = 0..a`` in R^n: ``(q / a^n) S^n phi_a(S)^n q^(n-1)``."""
    _need(n >= 2 and a >= 1, "chi_A_0a needs n >= 2, a >= 1")
    op = S(n) * phi(a) ** n * Fraction(1, a ** n)
    return _finish(op, n, "closed:A[0,a]", power=n - 1, times_q=True)


def chi_A_1a(n: int, a: int) -> FormulaResult:
    """Extended Linial ``x_i - x_j = 1..a``: ``(q / (a+1)^n) phi_{a+1}(S)^n q^(n-1)``."""
    _need(n >= 2 and a >= 1, "chi_A_1a needs n >= 2, a >= 1")
    op = phi(a + 1) ** n * Fraction(1, (a + 1) ** n)
    return _finish(op, n, "closed:A[1,a]", power=n - 1, times_q=True)


# ----------------------------------------------------------------------
# types BC, C, B


def chi_BC_0a(n: int, a: int) -> FormulaResult:
    _need(n >= 1 and a >= 1, "chi_BC_0a needs n >= 1, a >= 1")
    if a % 2 == 0:
        op = S(2 * n + 1) * _phi2(a) ** n * _phi2(a // 2) * Fraction(2, a ** (n + 1))
    else:
        op = S(2 * n + 1) * _phi2(a) ** n * phi(a) * Fraction(1, a ** (n + 1))
    return _finish(op, n, f"closed:BC[0,a]:{_parity(a)}")


def chi_C_0a(n: int, a: int) -> FormulaResult:
    _need(n >= 1 and a >= 1, "chi_C_0a needs n >= 1, a >= 1")
    if a % 2 == 0:
        op = S(2 * n + 1) * _phi2(a) ** (n - 1) * _phi2(a // 2) ** 2 * Fraction(4, a ** (n + 1))
    else:
        op = S(2 * n) * _phi2(a) ** (n - 1) * phi(a) ** 2 * Fraction(1, a ** (n + 1))
    return _finish(op, n, f"closed:C[0,a]:{_parity(a)}")


def chi_B_0a(n: int, a: int) -> FormulaResult:
    """Same polynomial as type C on the same interval."""
    _need(n >= 1 and a >= 1, "chi_B_0a needs n >= 1, a >= 1")
    r = chi_C_0a(n, a)
    return FormulaResult(r.chi, f"closed:B[0,a]=C[0,a]:{_parity(a)}", r.intermediate)


def chi_BC_1a(n: int, a: int) -> FormulaResult:
    _need(n >= 1 and a >= 1, "chi_BC_1a needs n >= 1, a >= 1")
    if a % 2 == 1:
        op = S(1) * _phi2(a + 1) ** n * _phi2((a + 1) // 2) * Fraction(2, (a + 1) ** (n + 1))
    else:
        op = _phi2(a + 1) ** n * phi(a + 1) * Fraction(1, (a + 1) ** (n + 1))
    return _finish(op, n, f"closed:BC[1,a]:{_parity(a)}")


# ----------------------------------------------------------------------
# type D


def _dq_op(n: int, a: int) -> Poly:
    pre = Fraction(1, a ** (n + 1))
    if a % 2 == 0:
        tail = Poly.const(1) + 3 * S(2) - S(a) + S(a + 2)
        return S(2 * n - 1) * _phi2(a) ** (n - 3) * _phi2(a // 2) ** 4 * tail * (4 * pre)
    tail = exact_div(2 - S(a - 1) + S(a), 1 + S(1))
    return S(2 * n - 1) * _phi2(a) ** (n - 3) * phi(a) ** 4 * tail * pre


def chi_DQ_0a(n: int, a: int) -> FormulaResult:
    """Type D on ``[0, a]`` together with the coordinate hyperplanes ``x_i = 0``."""
    _need(n >= 3 and a >= 1, "chi_DQ_0a needs n >= 3, a >= 1")
    return _finish(_dq_op(n, a), n, f"closed:DQ[0,a]:{_parity(a)}")


def chi_D_0a(n: int, a: int) -> FormulaResult:
    _need(n >= 2 and a >= 1, "chi_D_0a needs n >= 2, a >= 1")
    if n == 2:
        chi = (Q - (a + 1)) ** 2
        return FormulaResult(chi, "closed:D2[0,a]", chi)
    pre = Fraction(1, a ** (n + 1))
    if a % 2 == 0:
        op = S(2 * n - 1) * (1 + S(2)) * _phi2(a) ** (n - 3) * _phi2(a // 2) ** 4 * (8 * pre)
    else:
        op = S(2 * n - 2) * _phi2(a) ** (n - 3) * phi(a) ** 4 * pre
    return _finish(op, n, f"closed:D[0,a]:{_parity(a)}")


def psi(n: int, a: int) -> FormulaResult:
    """Points with exactly one zero coordinate avoiding ``x_i +- x_j = 0..a``.

    ``chi_D_0a = chi_DQ_0a + psi``. Not monic: the factor ``1 - S^a`` lowers
    the degree to ``n - 1``. For odd ``a`` the quadratic factor is
    ``phi_a(S)^2`` (``a/2`` is not an integer there).
    """
    _need(n >= 3 and a >= 1, "psi needs n >= 3, a >= 1")
    pre = Fraction(1, a ** (n + 1))
    if a % 2 == 0:
        op = S(2 * n - 1) * (1 - S(a)) * _phi2(a) ** (n - 2) * _phi2(a // 2) ** 2 * (4 * pre)
    else:
        op = S(2 * n - 2) * (1 - S(a)) * _phi2(a) ** (n - 2) * phi(a) ** 2 * pre
    return _finish(op, n, f"closed:psi:{_parity(a)}", monic=False)


# ----------------------------------------------------------------------
# the two one-parameter specials


def chi_special62(n: int, a: int) -> FormulaResult:
    """``x_i = 0..a``, ``2x_i = 1, 3, .., 2a-1``, ``x_i +- x_j = 0..a``."""
    _need(n >= 1 and a >= 1, "chi_special62 needs n >= 1, a >= 1")
    op = S(2 * n + 1) * _phi2(a) ** (n + 1) * Fraction(1, a ** (n + 1))
    return _finish(op, n, "closed:special62")


SPECIAL63_NOTE = (
    "The stated operator (1/(a+1)^(n+1)) S (1+S^2+...+S^(2a))^(n+1) q^n does not match the "
    "stated hyperplane list 2x_i = 1..2a-1, x_i +- x_j = 1..a-1 (at n=2, a=1 it gives "
    "q^2 - 8q + 19 instead of (q-1)^2); it matches the list with parameter a+1. "
    "Implemented with the operator re-indexed a+1 -> a."
)


def chi_special63(n: int, a: int) -> FormulaResult:
    """``2x_i = 1..2a-1``, ``x_i +- x_j = 1..a-1``: ``(1/a^(n+1)) S phi_a(S^2)^(n+1) q^n``."""
    _need(n >= 2 and a >= 1, "chi_special63 needs n >= 2, a >= 1")
    op = S(1) * _phi2(a) ** (n + 1) * Fraction(1, a ** (n + 1))
    return _finish(op, n, "closed:special63:reindexed")


def chi_special63_as_stated(n: int, a: int) -> Poly:
    """The operator exactly as stated, kept for discrepancy reports."""
    op = S(1) * _phi2(a + 1) ** (n + 1) * Fraction(1, (a + 1) ** (n + 1))
    return Poly(apply_shift(op, Q ** n).to_ints())


# ----------------------------------------------------------------------
# intervals


def _shifted(chi: Poly, h: int) -> Poly:
    """``chi(q - h)``; negative ``h`` shifts the other way."""
    return chi.shift(h)


def _coxeter_base(family: str, n: int) -> FormulaResult:
    # no operator formula covers [0, 0]; count points instead
    from .ffcount import chi_interpolated

    chi = chi_interpolated(build(FamilySpec(family, n, 0, 0)))
    return FormulaResult(chi, f"ff:{family}[0,0]")


def chi_0a(family: str, n: int, a: int) -> FormulaResult:
    if a == 0:
        return _coxeter_base(family, n)
    return {"A": chi_A_0a, "B": chi_B_0a, "C": chi_C_0a, "D": chi_D_0a,
            "BC": chi_BC_0a}[family](n, a)


def chi_1a(family: str, n: int, a: int) -> FormulaResult:
    """``[1, a]`` for every root family.

    A and BC have their own operator formulas; B, C and D come from the
    ``[0, a+1]`` formula moved by the family's shift (``2n``, ``2n``, ``2n-2``).
    """
    _need(a >= 1, "chi_1a needs a >= 1")
    if family == "A":
        return chi_A_1a(n, a)
    if family == "BC":
        return chi_BC_1a(n, a)
    h = {"B": 2 * n, "C": 2 * n, "D": 2 * n - 2}[family]
    base = chi_0a(family, n, a + 1)
    return FormulaResult(_shifted(base.chi, -h), f"{base.provenance}>>q+{h}", base.chi)


def _reduction_shift(family: str, n: int, a: int, b: int) -> int:
    if family == "A":
        return a * n
    if family in ("B", "C"):
        return 2 * n * a
    if family == "D":
        return (2 * n - 2) * a
    extra = 1 if (a % 2 == 1 and b % 2 == 1) else 0
    return (2 * n + 1) * a + extra


def chi_interval(family: str, n: int, lo: int, hi: int) -> FormulaResult:
    """Characteristic polynomial of the ``family`` deformation on ``[lo, hi]``.

    Intervals are first reflected so that ``|lo| <= hi``; an interval
    ``[-a, b]`` with ``0 < a <= b`` is moved to ``[0, b - a]`` with the
    argument shifted by ``a * h`` (BC: ``(2n+1) a``, plus one when ``a`` and
    ``b`` are both odd). Intervals starting at 0 or 1 go straight to the
    catalog. Anything starting at 2 or beyond has no formula.
    """
    if family not in ROOT_FAMILIES:
        raise ValueError(f"chi_interval covers the root families, not {family!r}")
    FamilySpec(family, n, lo, hi)  # validates n
    if lo > hi:
        return FormulaResult(Q ** n, "empty")
    tags = []
    if hi < 0 or (lo < 0 and -lo > hi):
        lo, hi = -hi, -lo
        tags.append("reflect")
    if lo >= 2:
        raise UnsupportedInterval(f"no closed form for {family}:{n}:[{lo},{hi}] (lo >= 2)")
    if lo == 1:
        r = chi_1a(family, n, hi)
        return FormulaResult(r.chi, "|".join(tags + [r.provenance]), r.intermediate)
    a, b = -lo, hi
    base = chi_0a(family, n, b - a)
    if a == 0:
        return FormulaResult(base.chi, "|".join(tags + [base.provenance]), base.intermediate)
    shift = _reduction_shift(family, n, a, b)
    if family == "A":
        essential = exact_div(base.chi, Q)
        chi = _shifted(essential, shift) * Q
    else:
        chi = _shifted(base.chi, shift)
    tags.append(f"reduce[-{a},{b}]->[0,{b - a}]:q-{shift}")
    return FormulaResult(chi, "|".join(tags + [base.provenance]), base.chi)


def chi_for_spec(spec: FamilySpec) -> FormulaResult:
    """Catalog entry for any spec the catalog covers."""
    if spec.family == "SPECIAL62":
        return chi_special62(spec.n, spec.a)
    if spec.family == "SPECIAL63":
        return chi_special63(spec.n, spec.a)
    if spec.family == "DQ":
        if spec.lo != 0 or spec.hi < 1:
            raise UnsupportedInterval("DQ closed form covers [0, a] with a >= 1 only")
        return chi_DQ_0a(spec.n, spec.hi)
    return chi_interval(spec.family, spec.n, spec.lo, spec.hi)


# ----------------------------------------------------------------------
# shift identities


@dataclass(frozen=True)
class ShiftIdentityReport:
    family: str
    n: int
    a: int
    h: int
    lhs: Poly
    rhs: Poly
    rhs_source: str
    holds: bool


def shift_identity_check(family: str, n: int, a: int) -> ShiftIdentityReport:
    """Check ``chi[0, a](q) = chi[1, a-1](q - h)`` as a polynomial identity.

    ``h`` is ``n`` for A (on the essential polynomial), ``2n - 2`` for D,
    ``2n`` for B and C, and for BC ``2n`` (a even) or ``2n + 1`` (a odd).
    The right side comes from the independent operator formula for A and
    BC, and from the point counter for B, C and D, whose ``[1, b]`` catalog
    entries are themselves defined through this identity.
    """
    from .ffcount import chi_interpolated

    if family not in ROOT_FAMILIES or a < 1:
        raise ValueError(f"no shift identity for family {family!r} with a = {a}")
    lhs = chi_0a(family, n, a).chi
    if family == "A":
        h = n
        if a == 1:
            rhs_full, src = Q ** n, "empty"
        else:
            rhs_full, src = chi_A_1a(n, a - 1).chi, "closed:A[1,a]"
        lhs_e = exact_div(lhs, Q)
        rhs_e = _shifted(exact_div(rhs_full, Q), h)
        return ShiftIdentityReport(family, n, a, h, lhs_e, rhs_e, src, lhs_e == rhs_e)
    if family == "BC":
        h = 2 * n + (a % 2)
        if a == 1:
            rhs, src = Q ** n, "empty"
        else:
            rhs, src = chi_BC_1a(n, a - 1).chi, "closed:BC[1,a]"
    else:
        h = 2 * n - 2 if family == "D" else 2 * n
        if a == 1:
            rhs, src = Q ** n, "empty"
        else:
            rhs, src = chi_interpolated(build(FamilySpec(family, n, 1, a - 1))), "ff"
    rhs = _shifted(rhs, h)
    return ShiftIdentityReport(family, n, a, h, lhs, rhs, src, lhs == rhs)


# ----------------------------------------------------------------------
# generating-function forms of the counts


def a_seq(n: int):
    """``a_j = j^n - 2 (j-1)^n + (j-2)^n`` as a function of j."""
    return lambda j: j ** n - 2 * (j - 1) ** n + (j - 2) ** n


def b_seq(n: int):
    return lambda j: ((2 * j + 2) ** n - 4 * (2 * j + 1) ** n + 6 * (2 * j) ** n
                      - 4 * (2 * j - 1) ** n + (2 * j - 2) ** n)


def d_seq(n: int):
    return lambda j: (2 * j + 1) ** n - 3 * (2 * j) ** n + 3 * (2 * j - 1) ** n - (2 * j - 2) ** n


def _tail(lo: int, hi: int) -> Poly:
    # y^lo + ... + y^hi (zero when lo > hi)
    return Poly([0] * lo + [1] * (hi - lo + 1)) if lo <= hi else Poly()


def series_value(kind: str, n: int, a: int, q: int) -> int:
    """Evaluate the coefficient-extraction form of a count at a numeric q.

    ``kind`` is one of ``A[0,a]``, ``BC[0,a]``, ``C[0,a]``, ``B[0,a]``,
    ``DQ[0,a]``, ``psi``, ``BC[1,a-1]`` (odd ``a``) and ``special62``. The
    non-A kinds count over Z_q with q odd and use ``p = (q - 1) / 2``.
    """
    ph = phi(a)
    if kind == "A[0,a]":
        return q * series_coeff(ph ** n, lambda j: j ** (n - 1), a, q - n)
    if q % 2 == 0:
        raise ValueError("the signed-placement forms need odd q")
    p = (q - 1) // 2
    k = p - n
    two_j = lambda j: (2 * j) ** n
    odd_step = lambda j: (2 * j + 1) ** n - (2 * j) ** n
    aa = a_seq(n)
    if kind == "BC[0,a]":
        return (series_coeff(ph ** (n + 1), two_j, a, k)
                + series_coeff(_tail((a + 1) // 2, a - 1) * ph ** n, odd_step, a, k))
    if kind == "C[0,a]":
        t_i, t_ii = _tail(a // 2, a - 1), _tail((a + 1) // 2, a - 1)
        return (series_coeff(ph ** (n + 1), two_j, a, k)
                + series_coeff(t_i * ph ** n, odd_step, a, k)
                + series_coeff(t_ii * ph ** n, odd_step, a, k)
                + series_coeff(t_i * t_ii * ph ** (n - 1), lambda j: aa(2 * j + 2), a, k))
    if kind == "B[0,a]":
        return (series_coeff(ph ** (n + 1), lambda j: (2 * j + 1) ** n, a, k)
                - series_coeff(f_poly(a - 2) * ph ** (n - 1), lambda j: aa(2 * j + 1), a, k))
    if kind == "DQ[0,a]":
        if n < 3:
            raise ValueError("DQ form needs n >= 3")
        a22 = lambda j: aa(2 * j + 2)
        return (series_coeff(ph ** (n + 1), lambda j: (2 * j + 2) ** n, a, k)
                - series_coeff(f_poly(a - 3) * ph ** (n - 1), a22, a, k)
                - series_coeff(f_poly(a - 2) * ph ** (n - 1), a22, a, k)
                + series_coeff(f_poly(a - 3) * f_poly(a - 2) * ph ** (n - 3), b_seq(n), a, k))
    if kind == "psi":
        return (series_coeff(ph ** n, odd_step, a, k + 1)
                - series_coeff(f_poly(a - 2) * ph ** (n - 2), d_seq(n), a, k + 1))
    if kind == "BC[1,a-1]":
        if a % 2 == 0:
            raise ValueError("BC[1,a-1] form is for odd a")
        return (series_coeff(ph ** (n + 1), two_j, a, p)
                + series_coeff(_tail((a - 1) // 2, a - 1) * ph ** n, odd_step, a, p))
    if kind == "special62":
        return series_coeff(ph ** (n + 1), two_j, a, k)
    raise ValueError(f"unknown series kind {kind!r}")


SERIES_KINDS = ("A[0,a]", "BC[0,a]", "C[0,a]", "B[0,a]", "DQ[0,a]", "psi", "BC[1,a-1]",
                "special62")
