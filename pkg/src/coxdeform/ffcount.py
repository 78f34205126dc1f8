"""Characteristic polynomials by counting points of Z_q^n off the arrangement.

For an integer arrangement and every q coprime to its modulus class m and
large enough, chi(q) equals the number of points of Z_q^n lying on none of the
hyperplanes reduced mod q. :func:`count_complement` does that count by a
pruned depth-first search; :func:`chi_interpolated` samples it at n + 2 values
of q and recovers chi by exact interpolation, holding one sample out.

The search assigns x_1, x_2, ... in order. A hyperplane becomes a unary
constraint on its last coordinate as soon as every other coordinate in its
support is assigned; at that depth it forbids one residue (or, for a
non-invertible leading coefficient, a whole coset) of that coordinate. The
last coordinate is never enumerated: its free residues are counted directly.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np
from numba import njit

from .families import Arrangement
from .poly import InterpolationError, Poly, lagrange_interpolate

log = logging.getLogger(__name__)


class SamplingRegimeError(InterpolationError):
    """Point counts did not fit an integer polynomial even after enlarging q."""


@dataclass(frozen=True)
class SamplePlan:
    m: int
    q_min: int
    samples: tuple[int, ...]


# ----------------------------------------------------------------------
# kernel


@njit(cache=True, nogil=True)
def _mark(cnt, nforb, p, x, delta):
    c = cnt[p, x]
    cnt[p, x] = c + delta
    if delta > 0 and c == 0:
        nforb[p] += 1
    elif delta < 0 and c == 1:
        nforb[p] -= 1


@njit(cache=True, nogil=True)
def _fire(level, x, groups, coefs, inv, offsets, starts, cnt, nforb, q, delta):
    # apply (delta=+1) or undo (delta=-1) the groups whose trigger depth is `level`
    for t in range(starts[level + 1], starts[level + 2]):
        p = groups[t, 0]
        s = 0
        for i in range(p):
            c = coefs[t, i]
            if c != 0:
                s += c * x[i]
        w = inv[t]
        if w > 0:
            # invertible leading coefficient: offsets are pre-scaled by its inverse
            base = (w * s) % q
            for o in range(groups[t, 1], groups[t, 2]):
                y = offsets[o] - base
                if y < 0:
                    y += q
                _mark(cnt, nforb, p, y, delta)
        else:
            lead = coefs[t, p]
            for o in range(groups[t, 1], groups[t, 2]):
                r = (offsets[o] - s) % q
                for y in range(q):
                    if (lead * y - r) % q == 0:
                        _mark(cnt, nforb, p, y, delta)


@njit(cache=True, nogil=True)
def _last_two(x, groups, coefs, inv, offsets, starts, cnt, nforb, q, lo, hi, stamp, token):
    # sum over free x_{n-2} in [lo, hi) of the number of free residues of x_{n-1}
    n = coefs.shape[1]
    d = n - 2
    free_last = q - nforb[n - 1]
    g0 = starts[d + 1]
    g1 = starts[d + 2]
    total = 0
    for v in range(lo, hi):
        if cnt[d, v] > 0:
            continue
        x[d] = v
        token += 1
        extra = 0
        for t in range(g0, g1):
            s = 0
            for i in range(n - 1):
                c = coefs[t, i]
                if c != 0:
                    s += c * x[i]
            w = inv[t]
            if w > 0:
                base = (w * s) % q
                for o in range(groups[t, 1], groups[t, 2]):
                    y = offsets[o] - base
                    if y < 0:
                        y += q
                    if cnt[n - 1, y] == 0 and stamp[y] != token:
                        stamp[y] = token
                        extra += 1
            else:
                lead = coefs[t, n - 1]
                for o in range(groups[t, 1], groups[t, 2]):
                    r = (offsets[o] - s) % q
                    for y in range(q):
                        if (lead * y - r) % q == 0 and cnt[n - 1, y] == 0 and stamp[y] != token:
                            stamp[y] = token
                            extra += 1
        total += free_last - extra
    return total, token


@njit(cache=True, nogil=True)
def _count_kernel(groups, coefs, inv, offsets, starts, q, x0_lo, x0_hi):
    """Count completions of x with x_0 in [x0_lo, x0_hi).

    Row t of ``groups`` is (pivot, first offset, end offset) for one normal
    vector; rows are sorted by trigger depth, rows of depth d occupying
    ``starts[d + 1]:starts[d + 2]`` (depth -1 holds the unary ones).
    """
    n = coefs.shape[1]
    cnt = np.zeros((n, q), dtype=np.int32)
    nforb = np.zeros(n, dtype=np.int64)
    x = np.zeros(n, dtype=np.int64)
    _fire(-1, x, groups, coefs, inv, offsets, starts, cnt, nforb, q, 1)
    if n == 1:
        total = 0
        for v in range(x0_lo, x0_hi):
            if cnt[0, v] == 0:
                total += 1
        return total
    stamp = np.zeros(q, dtype=np.int64)
    if n == 2:
        total, _ = _last_two(x, groups, coefs, inv, offsets, starts, cnt, nforb, q,
                             x0_lo, x0_hi, stamp, 0)
        return total
    token = 0
    pos = np.zeros(n, dtype=np.int64)
    applied = np.zeros(n, dtype=np.bool_)
    total = 0
    d = 0
    pos[0] = x0_lo
    while True:
        if applied[d]:
            _fire(d, x, groups, coefs, inv, offsets, starts, cnt, nforb, q, -1)
            applied[d] = False
        limit = x0_hi if d == 0 else q
        v = pos[d]
        while v < limit and cnt[d, v] > 0:
            v += 1
        if v >= limit:
            if d == 0:
                break
            d -= 1
            continue
        x[d] = v
        pos[d] = v + 1
        _fire(d, x, groups, coefs, inv, offsets, starts, cnt, nforb, q, 1)
        applied[d] = True
        if d == n - 3:
            sub, token = _last_two(x, groups, coefs, inv, offsets, starts, cnt, nforb, q,
                                   0, q, stamp, token)
            total += sub
        else:
            d += 1
            pos[d] = 0
    return total


def _compile(arr: Arrangement, q: int):
    """Reduce mod q, group hyperplanes by normal, sort groups by trigger depth.

    Returns None when some hyperplane covers all of Z_q^n.
    """
    n = arr.dim
    by_normal: dict[tuple, list[int]] = {}
    for H in arr.hyperplanes:
        normal = tuple(c % q for c in H.normal)
        if not any(normal):
            # normal vanishes mod q: the equation holds everywhere or nowhere
            if H.offset % q == 0:
                return None
            continue
        by_normal.setdefault(normal, []).append(H.offset % q)
    rows = []
    for normal, offs in by_normal.items():
        support = [i for i, c in enumerate(normal) if c]
        p = support[-1]
        trig = support[-2] if len(support) > 1 else -1
        lead = normal[p]
        w = pow(lead, -1, q) if gcd(lead, q) == 1 else 0
        if w:
            offs = [(w * k) % q for k in offs]
        rows.append((trig, p, normal, w, sorted(set(offs)) if w else offs))
    rows.sort(key=lambda r: r[0])
    g = len(rows)
    groups = np.zeros((g, 3), dtype=np.int64)
    coefs = np.zeros((g, n), dtype=np.int64)
    inv = np.zeros(g, dtype=np.int64)
    offsets = []
    for t, (trig, p, normal, w, offs) in enumerate(rows):
        groups[t] = (p, len(offsets), len(offsets) + len(offs))
        coefs[t] = normal
        inv[t] = w
        offsets.extend(offs)
    starts = np.zeros(n + 2, dtype=np.int64)
    for lvl in range(-1, n):
        starts[lvl + 2] = starts[lvl + 1] + sum(1 for r in rows if r[0] == lvl)
    return groups, coefs, inv, np.array(offsets, dtype=np.int64), starts


def _chunks(q: int, parts: int):
    parts = max(1, min(parts, q))
    step = -(-q // parts)
    return [(lo, min(q, lo + step)) for lo in range(0, q, step)]


def count_complement(arr: Arrangement, q: int, threads: int = 1) -> int:
    """``#(Z_q^n - V_A)``, the number of points of Z_q^n on no hyperplane.

    With ``threads > 1`` the values of x_1 are split into independent
    subtrees counted concurrently (the kernel releases the GIL).
    """
    if q < 1:
        raise ValueError("q must be positive")
    if gcd(q, arr.m) != 1:
        raise ValueError(f"q = {q} is not coprime to the modulus class m = {arr.m}")
    data = _compile(arr, q)
    if data is None:
        return 0
    if threads <= 1:
        return int(_count_kernel(*data, q, 0, q))
    with ThreadPoolExecutor(threads) as pool:
        parts = pool.map(lambda c: int(_count_kernel(*data, q, *c)), _chunks(q, 4 * threads))
        return sum(parts)


def count_naive(arr: Arrangement, q: int) -> int:
    """Reference count by visiting all q**n points."""
    hs = [(H.normal, H.offset) for H in arr.hyperplanes]
    total = 0
    for x in product(range(q), repeat=arr.dim):
        if all(sum(c * xi for c, xi in zip(a, x)) % q != k % q for a, k in hs):
            total += 1
    return total


# ----------------------------------------------------------------------
# sampling and interpolation


def make_plan(arr: Arrangement, degree: int, q_min: int | None = None) -> SamplePlan:
    """Sample points: the first ``degree + 2`` integers above q_min coprime to m.

    Default ``q_min = 2 (n + 1)(M + 1) + 1`` with M the largest |offset|.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if q_min is None:
        q_min = 2 * (arr.dim + 1) * (arr.max_offset + 1) + 1
    samples = []
    q = q_min + 1
    while len(samples) < degree + 2:
        if gcd(q, arr.m) == 1:
            samples.append(q)
        q += 1
    return SamplePlan(arr.m, q_min, tuple(samples))


def _counts(arr: Arrangement, samples, threads: int):
    if threads <= 1 or len(samples) == 1:
        return [count_complement(arr, q) for q in samples]
    with ThreadPoolExecutor(threads) as pool:
        return list(pool.map(lambda q: count_complement(arr, q), samples))


@lru_cache(maxsize=4096)
def _chi_cached(arr: Arrangement, threads: int) -> Poly:
    n = arr.dim
    plan = make_plan(arr, n)
    for attempt in range(2):
        values = _counts(arr, plan.samples, threads)
        try:
            chi = lagrange_interpolate(list(zip(plan.samples, values)), n)
        except InterpolationError as exc:
            if attempt:
                raise SamplingRegimeError(
                    f"{arr.label or 'arrangement'}: sampling regime violated twice ({exc})") from exc
            log.warning("%s: %s; retrying with larger q", arr.label, exc)
            plan = make_plan(arr, n, q_min=2 * plan.samples[-1] + 1)
            continue
        if chi.degree != n or chi.lead != 1:
            raise SamplingRegimeError(f"interpolated chi {chi} is not monic of degree {n}")
        return chi
    raise AssertionError("unreachable")


def chi_interpolated(arr: Arrangement, threads: int = 1) -> Poly:
    """Characteristic polynomial recovered from point counts at ``n + 2`` samples."""
    return _chi_cached(arr, threads)
