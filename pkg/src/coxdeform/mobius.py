"""Characteristic polynomial from the intersection poset and its Möbius function.

Small-instance ground truth that shares no code with the point counter: every
nonempty intersection of hyperplanes is found by exact linear algebra, the
poset is ordered by reverse inclusion, and

    chi(q) = sum over flats x of mu(R^n, x) * q**dim(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .families import Arrangement
from .poly import Poly

MAX_DIM = 4
MAX_HYPERPLANES = 64


class OracleTooLargeError(ValueError):
    pass


Row = tuple[int, ...]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for c in row:
        g = gcd(g, c)
    if g == 0:
        return row
    lead = next(c for c in row if c)
    if lead < 0:
        g = -g
    return [c // g for c in row]


def _pivot(row) -> int:
    return next(i for i, c in enumerate(row) if c)


def _reduce(rows: tuple[Row, ...], h: list[int]) -> list[int]:
    for row in rows:
        p = _pivot(row)
        if h[p]:
            a, b = row[p], h[p]
            h = [a * hc - b * rc for hc, rc in zip(h, row)]
    return _primitive(h)


def _insert(rows: tuple[Row, ...], r: list[int]) -> tuple[Row, ...]:
    p = _pivot(r)
    out = []
    for row in rows:
        if row[p]:
            a, b = r[p], row[p]
            row = tuple(_primitive([a * rc - b * hc for rc, hc in zip(row, r)]))
        out.append(row)
    out.append(tuple(r))
    out.sort(key=_pivot)
    return tuple(out)


@dataclass
class Flat:
    """A nonempty affine subspace, keyed by its reduced row-echelon system.

    ``rows`` are primitive integer rows ``(normal..., offset)`` with positive
    pivots and zeros above and below each pivot, which makes them canonical.
    ``mask`` has bit i set when hyperplane i contains the flat.
    """

    rows: tuple[Row, ...]
    dim: int
    mask: int = 0

    def __hash__(self):
        return hash(self.rows)


@dataclass
class IntersectionPoset:
    dim: int
    hyperplanes: list
    flats: list[Flat]

    def leq(self, x: Flat, y: Flat) -> bool:
        """``x <= y`` in reverse inclusion, i.e. ``y`` is contained in ``x``."""
        return x.mask & ~y.mask == 0

    def mobius(self) -> dict[tuple, int]:
        """``mu(0, x)`` for every flat, keyed by the flat's rows."""
        by_dim: dict[int, list[Flat]] = {}
        for f in self.flats:
            by_dim.setdefault(f.dim, []).append(f)
        mu: dict[tuple, int] = {}
        above: list[tuple[int, int]] = []
        for d in sorted(by_dim, reverse=True):
            layer = []
            for x in by_dim[d]:
                if not x.rows:
                    val = 1
                else:
                    mx = x.mask
                    val = -sum(m for my, m in above if my & ~mx == 0)
                mu[x.rows] = val
                layer.append((x.mask, val))
            above.extend(layer)
        return mu


def _check_size(arr: Arrangement, hyperplanes) -> None:
    if arr.dim > MAX_DIM or len(hyperplanes) > MAX_HYPERPLANES:
        raise OracleTooLargeError(
            f"Möbius oracle limited to n <= {MAX_DIM} and <= {MAX_HYPERPLANES} distinct "
            f"hyperplanes (got n = {arr.dim}, h = {len(hyperplanes)})")


def intersection_poset(arr: Arrangement, check_size: bool = True) -> IntersectionPoset:
    """All nonempty intersections, generated one hyperplane at a time."""
    hs = list(arr.deduplicated().hyperplanes)
    if check_size:
        _check_size(arr, hs)
    n = arr.dim
    ambient = Flat((), n, 0)
    flats: dict[tuple, Flat] = {(): ambient}
    for b, H in enumerate(hs):
        bit = 1 << b
        h = list(H.normal) + [H.offset]
        for X in list(flats.values()):
            r = _reduce(X.rows, h)
            if not any(r):
                X.mask |= bit
                continue
            if not any(r[:n]):
                continue  # parallel: empty intersection
            rows = _insert(X.rows, r)
            Y = flats.get(rows)
            if Y is None:
                flats[rows] = Flat(rows, n - len(rows), X.mask | bit)
            else:
                Y.mask |= X.mask | bit
    return IntersectionPoset(n, hs, list(flats.values()))


def chi_mobius(arr: Arrangement) -> Poly:
    """``sum_x mu(0, x) q**dim x`` over the intersection poset."""
    P = intersection_poset(arr)
    mu = P.mobius()
    coeffs = [0] * (arr.dim + 1)
    for f in P.flats:
        coeffs[f.dim] += mu[f.rows]
    return Poly(coeffs)
