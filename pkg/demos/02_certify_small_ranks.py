"""
Checking the lower bound by brute force
=======================================

At small rank we can list every ad-nilpotent ideal, compute the orbit of a
generic element, and record the smallest ideal per orbit.  The constructed
ideals should hit exactly those minima.
"""

# %%
import time

from adideals import build, count_ideals, lower_bound_m, minimal_ideal, orbit_labels
from adideals.oracle import min_dims_by_orbit

# %% How many ideals are there?  (The type Catalan numbers.)
for kind, size in [("A", 4), ("A", 6), ("B", 3), ("C", 3), ("D", 4)]:
    rs = build(kind, size)
    print(f"{rs}: {count_ideals(rs)} ideals")

# %% Compare enumerated minima, the lower bound and the construction.
for kind, size in [("C", 3), ("D", 4)]:
    t0 = time.perf_counter()
    minima = min_dims_by_orbit(kind, size, seed=2024)
    print(f"\n{build(kind, size)} ({time.perf_counter() - t0:.2f}s)")
    for L in orbit_labels(kind, size):
        found = minima[L.partition]
        print(f"  {str(L):<24} enumerated {found.dim:>2} (x{found.count})"
              f"  m {lower_bound_m(L):>2}  constructed {minimal_ideal(L).dim:>2}")
