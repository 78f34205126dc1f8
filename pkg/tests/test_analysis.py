import random
from fractions import Fraction

import pytest

from coxdeform.analysis import (PreconditionError, RootFindingError, lemma51_numeric_check,
                                linial_regions_closed, planar_region_count, poly_roots,
                                region_count, verify_riemann)
from coxdeform.closed_forms import chi_interval
from coxdeform.families import ROOT_FAMILIES, FamilySpec, build
from coxdeform.poly import Poly

Q = Poly.monomial(1)
S = Poly.monomial(1)


def close(zs, expect, tol=1e-12):
    return len(zs) == len(expect) and all(abs(a - b) < tol for a, b in zip(zs, expect))


def test_roots_examples():
    s3 = 3 ** 0.5 / 2
    assert close(poly_roots(Q ** 2 - 3 * Q + 3), [1.5 - s3 * 1j, 1.5 + s3 * 1j])
    assert close(poly_roots((Q - 2) ** 2), [2, 2])
    assert close(poly_roots(Q ** 3), [0, 0, 0])
    assert close(poly_roots([6, -5, 1]), [2, 3])


def test_roots_of_high_multiplicity_are_exact():
    p = (Q - 4) ** 5 * (Q ** 2 - 8 * Q + 19) ** 2
    zs = poly_roots(p)
    assert len(zs) == 9
    assert max(abs(z.real - 4) for z in zs) < 1e-12


def test_roots_reject_zero():
    with pytest.raises(ValueError):
        poly_roots(Poly())


@pytest.mark.parametrize("fam, n, a, b", [("C", 6, 2, 3), ("A", 6, 0, 3), ("BC", 5, 3, 3)])
def test_roots_backward_stable(fam, n, a, b):
    p = verify_riemann(fam, n, a, b).chi
    cmax = max(abs(c) for c in p.coeffs)
    for z in poly_roots(p):
        val = sum(complex(c) * z ** k for k, c in enumerate(p.coeffs))
        assert abs(val) < 1e-8 * cmax * max(1, abs(z)) ** p.degree


def test_riemann_examples():
    r = verify_riemann("A", 3, 0, 1)
    assert r.chi == Q ** 2 - 3 * Q + 3 and (r.h, r.l, r.target) == (3, 2, Fraction(3, 2))
    assert r.passed and r.max_re_deviation < 1e-12
    r = verify_riemann("D", 2, 1, 1)
    assert r.chi == (Q - 2) ** 2 and r.h == 4 and r.passed
    r = verify_riemann("BC", 1, 1, 1)
    assert r.chi == Q - 3 and r.h == 3 and r.passed and r.sum_of_roots_ok
    assert len(r.roots) == r.l


def test_riemann_preconditions():
    with pytest.raises(ValueError):
        verify_riemann("B", 3, 0, 0)
    with pytest.raises(ValueError):
        verify_riemann("B", 3, 3, 1)


def test_riemann_tolerance_drives_pass():
    r = verify_riemann("B", 4, 1, 2, tol=0.0)
    assert not r.passed


def test_lemma51_examples():
    assert lemma51_numeric_check(1 + S, Q, 0)
    assert lemma51_numeric_check(1 + S + S ** 2, Q ** 2, 0)
    with pytest.raises(PreconditionError):
        lemma51_numeric_check(1 + 2 * S, Q, 0)
    with pytest.raises(PreconditionError):
        lemma51_numeric_check(1 + S, (Q - 1) * (Q - 2), 1)


UNIT_FACTORS = [1 + S, 1 + S + S ** 2, 1 + S ** 2, 1 - S + S ** 2, 1 + S + S ** 2 + S ** 3 + S ** 4]


def test_lemma51_randomized():
    rng = random.Random(20240601)
    for _ in range(100):
        g = Poly.const(rng.choice([1, 2, 3]))
        for _ in range(rng.randint(1, 3)):
            g = g * rng.choice(UNIT_FACTORS)
        r = Fraction(rng.randint(-6, 6), rng.choice([1, 2]))
        f = Poly.const(1)
        for _ in range(rng.randint(1, 3)):
            t = Fraction(rng.randint(1, 9), rng.choice([1, 2, 3]))
            f = f * ((Q - r) ** 2 + t * t)
        if rng.random() < 0.5:
            f = f * (Q - r)
        assert lemma51_numeric_check(g, f, r)


def test_region_examples():
    assert region_count(Q * (Q - 1), 2) == 2
    assert region_count(Q * (Q ** 2 - 3 * Q + 3), 3) == 7
    d2 = build(FamilySpec("D", 2, 0, 1))
    assert region_count(d2) == 9 == planar_region_count(d2)


@pytest.mark.parametrize("fam, n, expect", [("A", 3, 7), ("BC", 2, 18), ("B", 2, 10), ("C", 2, 10),
                                            ("D", 2, 4), ("A", 5, 246)])
def test_linial_closed_examples(fam, n, expect):
    assert linial_regions_closed(fam, n) == expect


@pytest.mark.parametrize("fam", ROOT_FAMILIES)
def test_linial_matches_zaslavsky(fam):
    top = 7 if fam == "A" else 5
    for n in range(2, top + 1):
        chi = chi_interval(fam, n, 1, 1).chi
        assert linial_regions_closed(fam, n) == region_count(chi, n)


def test_planar_count_rejects_other_dimensions():
    with pytest.raises(ValueError):
        planar_region_count(build(FamilySpec("B", 3, 1, 1)))


def test_linial_closed_rejects_bad_input():
    with pytest.raises(ValueError):
        linial_regions_closed("D", 1)
    with pytest.raises(ValueError):
        linial_regions_closed("E", 3)


def test_root_finding_error_is_arithmetic():
    assert issubclass(RootFindingError, ArithmeticError)
