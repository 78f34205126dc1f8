"""Integer hyperplane lists for the deformed classical Coxeter arrangements.

Families (``x`` in R^n, ``k`` running over the interval ``lo..hi``)::

    A    x_i - x_j = k                                  (i < j)
    B    x_i = k;  x_i - x_j = k;  x_i + x_j = k
    C    2x_i = k; x_i - x_j = k;  x_i + x_j = k
    BC   x_i = k;  2x_i = k;  x_i - x_j = k;  x_i + x_j = k
    D    x_i - x_j = k;  x_i + x_j = k
    DQ   x_i = 0;  x_i - x_j = k;  x_i + x_j = k

plus two one-parameter specials::

    SPECIAL62(a)  x_i = 0..a;  2x_i = 1, 3, ..., 2a-1;  x_i +- x_j = 0..a
    SPECIAL63(a)  2x_i = 1, 2, ..., 2a-1;  x_i +- x_j = 1..a-1

Family A lives in R^n (rank n - 1); its characteristic polynomial carries
one extra factor of q compared with the essential rank-(n-1) arrangement.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Optional

ROOT_FAMILIES = ("A", "B", "C", "D", "BC")
FAMILIES = ROOT_FAMILIES + ("DQ", "SPECIAL62", "SPECIAL63")
SPECIALS = ("SPECIAL62", "SPECIAL63")


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane ``normal . x = offset``."""

    normal: tuple[int, ...]
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.normal)

    def key(self) -> tuple[tuple[int, ...], Fraction]:
        """Canonical form: primitive normal, first nonzero entry positive."""
        g = 0
        for c in self.normal:
            g = gcd(g, c)
        first = next(c for c in self.normal if c)
        if first < 0:
            g = -g
        return tuple(c // g for c in self.normal), Fraction(self.offset, g)

    def is_difference(self) -> bool:
        nz = [c for c in self.normal if c]
        return len(nz) == 2 and sorted(nz) == [-1, 1]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.normal):
            if c == 0:
                continue
            mono = f"x{i + 1}"
            if abs(c) != 1:
                mono = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, mono))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, mono in terms[1:]:
            s += f" {sign} {mono}"
        return f"{s} = {self.offset}"


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    m: int = 2
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        for H in self.hyperplanes:
            if H.dim != self.dim:
                raise ValueError(f"{H} does not live in R^{self.dim}")
        if self.m not in (1, 2):
            raise ValueError("modulus class must be 1 or 2")
        if self.m == 1 and not all(H.is_difference() for H in self.hyperplanes):
            raise ValueError("m = 1 is only valid for x_i - x_j type hyperplanes")

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @property
    def max_offset(self) -> int:
        return max((abs(H.offset) for H in self.hyperplanes), default=0)

    def is_central(self) -> bool:
        return all(H.offset == 0 for H in self.hyperplanes)

    def keys(self) -> set:
        return {H.key() for H in self.hyperplanes}

    def deduplicated(self) -> "Arrangement":
        seen, kept = set(), []
        for H in self.hyperplanes:
            k = H.key()
            if k not in seen:
                seen.add(k)
                kept.append(H)
        return replace(self, hyperplanes=tuple(kept))


def arrangement(dim: int, equations, label: str = "") -> Arrangement:
    """Build an :class:`Arrangement` from ``(normal, offset)`` pairs, choosing ``m``."""
    hs = tuple(H if isinstance(H, Hyperplane) else Hyperplane(tuple(H[0]), int(H[1]))
               for H in equations)
    m = 1 if all(H.is_difference() for H in hs) else 2
    return Arrangement(dim, hs, m, label)


@dataclass(frozen=True)
class FamilySpec:
    """``family`` in ``FAMILIES``; ``lo > hi`` means the empty interval.

    The specials take a single parameter ``a`` instead of an interval.
    """

    family: str
    n: int
    lo: Optional[int] = None
    hi: Optional[int] = None
    a: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family in SPECIALS:
            if self.a is None or self.a < 1:
                raise ValueError(f"{self.family} needs a parameter a >= 1")
            if self.family == "SPECIAL63" and self.n < 2:
                raise ValueError("SPECIAL63 needs n >= 2")
        else:
            if self.lo is None or self.hi is None:
                raise ValueError(f"{self.family} needs an interval lo:hi")
            if self.family in ("A", "D") and self.n < 2:
                raise ValueError(f"family {self.family} needs n >= 2")
            if self.family == "DQ" and self.n < 2:
                raise ValueError("family DQ needs n >= 2")

    @property
    def empty_interval(self) -> bool:
        return self.lo is not None and self.lo > self.hi

    def __str__(self) -> str:
        if self.family in SPECIALS:
            return f"{self.family}:{self.n}:{self.a}"
        return f"{self.family}:{self.n}:{self.lo}:{self.hi}"


_SPEC_RE = re.compile(r"^\s*([A-Za-z0-9]+):(\d+):(-?\d+)(?::(-?\d+))?\s*$")


def parse_spec(text: str) -> FamilySpec:
    """Parse ``FAMILY:n:lo:hi`` or ``FAMILY:n:a``.

    ``FAMILY:n:a`` is the parameter form of the specials; for the root
    families and DQ it abbreviates the interval ``[0, a]``.
    """
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse family spec {text!r} (want FAMILY:n:lo:hi or FAMILY:n:a)")
    fam, n, x, y = m.group(1).upper(), int(m.group(2)), int(m.group(3)), m.group(4)
    if fam in SPECIALS:
        if y is not None:
            raise ValueError(f"{fam} takes a single parameter: {fam}:n:a")
        return FamilySpec(fam, n, a=x)
    if y is None:
        return FamilySpec(fam, n, 0, x)
    return FamilySpec(fam, n, x, int(y))


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


def _pair(n, i, j, sj):
    v = [0] * n
    v[i] = 1
    v[j] = sj
    return tuple(v)


def build(spec: FamilySpec) -> Arrangement:
    """Hyperplane list of ``spec`` in generation order, duplicates kept.

    Order: equation group, then index (or index pair) lexicographically,
    then offset.
    """
    fam, n = spec.family, spec.n
    eqs: list[tuple[tuple[int, ...], int]] = []

    def singles(coef, offsets):
        for i in range(n):
            for k in offsets:
                eqs.append((tuple(_unit(n, i, coef)), k))

    def pairs(sign, offsets):
        for i in range(n):
            for j in range(i + 1, n):
                for k in offsets:
                    eqs.append((_pair(n, i, j, sign), k))

    if fam in SPECIALS:
        a = spec.a
        if fam == "SPECIAL62":
            singles(1, range(0, a + 1))
            singles(2, range(1, 2 * a, 2))
            pairs(-1, range(0, a + 1))
            pairs(1, range(0, a + 1))
        else:
            singles(2, range(1, 2 * a))
            pairs(-1, range(1, a))
            pairs(1, range(1, a))
        label = str(spec)
        return arrangement(n, eqs, label)

    ks = range(spec.lo, spec.hi + 1)
    if fam == "A":
        pairs(-1, ks)
    else:
        if fam in ("B", "BC"):
            singles(1, ks)
        if fam in ("C", "BC"):
            singles(2, ks)
        if fam == "DQ":
            singles(1, [0])
        pairs(-1, ks)
        pairs(1, ks)
    return arrangement(n, eqs, str(spec))


def dedup_count(arr: Arrangement) -> int:
    """Number of distinct hyperplanes (``x = k`` and ``2x = 2k`` coincide)."""
    return len(arr.keys())


def rank_of(spec: FamilySpec) -> int:
    return spec.n - 1 if spec.family == "A" else spec.n


def interval_shift(family: str, n: int) -> int:
    """Size of the per-unit real-part shift used by the interval reductions.

    ``n`` for A (ambient R^n), ``2n`` for B and C, ``2n - 2`` for D.
    """
    if family == "A":
        return n
    if family in ("B", "C"):
        return 2 * n
    if family == "D":
        return 2 * n - 2
    raise ValueError(f"no single shift constant for family {family!r}")


def reflect(spec: FamilySpec) -> FamilySpec:
    """Interval ``[lo, hi] -> [-hi, -lo]`` (the substitution ``x -> -x``)."""
    if spec.family not in ROOT_FAMILIES:
        raise ValueError("reflect applies to the root families A, B, C, D, BC")
    return replace(spec, lo=-spec.hi, hi=-spec.lo)


def negate(arr: Arrangement) -> Arrangement:
    """Apply ``x -> -x`` to every hyperplane."""
    hs = tuple(Hyperplane(H.normal, -H.offset) for H in arr.hyperplanes)
    return replace(arr, hyperplanes=hs)
