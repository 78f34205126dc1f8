"""Roots of chi for intervals [-a+1, b] all line up on one vertical line.

The line sits at Re = h / l (hyperplanes over rank). Run with
``python demos/common_real_part.py``.
"""

# %%
from coxdeform import verify_riemann

print(f"{'arrangement':16s} {'h/l':>7s}  roots")
for family, n, a, b in [("A", 4, 0, 1), ("A", 5, 1, 2), ("B", 3, 0, 1), ("C", 4, 2, 2),
                        ("D", 4, 1, 3), ("BC", 3, 0, 2), ("BC", 5, 3, 3)]:
    r = verify_riemann(family, n, a, b)
    roots = ", ".join(f"{z.real:.3f}{z.imag:+.3f}i" for z in r.roots)
    print(f"{str(r.spec):16s} {float(r.target):7.3f}  {roots}")

# %% A full sweep, reporting the worst deviation seen
worst = 0.0
cells = 0
for family in ("A", "B", "C", "D", "BC"):
    for n in range(2, 7):
        for a in range(4):
            for b in range(a, 4):
                if a == b == 0:
                    continue
                r = verify_riemann(family, n, a, b)
                worst = max(worst, r.max_re_deviation)
                cells += 1
                assert r.passed, r
print(f"\n{cells} arrangements checked, worst |Re(root) - h/l| = {worst:.2e}")

# %% Mirrored intervals: x -> -x maps [-3, 1] onto [-1, 3], which is covered
from coxdeform import chi_interval, poly_roots

chi = chi_interval("B", 3, -3, 1).chi
print("\nB:3:-3:1 chi =", chi)
print("roots:", [f"{z.real:.3f}{z.imag:+.3f}i" for z in poly_roots(chi)])
