"""Counting regions of Linial arrangements two ways.

Zaslavsky's theorem turns chi(-1) into a region count; for the Linial
arrangements (interval [1, 1]) there are also binomial-sum closed forms.
In the plane, Euler's formula gives a third, purely geometric count.
"""

# %%
from coxdeform import (build, chi_interval, linial_regions_closed, parse_spec,
                       planar_region_count, region_count)

print("family  n   closed sum   (-1)^n chi(-1)")
for family in ("A", "B", "C", "D", "BC"):
    for n in range(2, 7):
        chi = chi_interval(family, n, 1, 1).chi
        print(f"{family:6s} {n:2d} {linial_regions_closed(family, n):12d} {region_count(chi, n):16d}")

# %% In the plane, count by intersection points instead
for text in ("B:2:1:1", "D:2:1:1", "BC:2:1:1", "D:2:0:1", "C:2:-1:2"):
    arr = build(parse_spec(text))
    print(f"{text:9s} planar count {planar_region_count(arr):3d},  Zaslavsky {region_count(arr):3d}")
