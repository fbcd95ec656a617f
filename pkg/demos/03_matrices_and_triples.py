"""
From roots to matrices
======================

The constructed generators add up to a nilpotent matrix X.  Its Jordan type
recovers the partition, and together with the Dynkin element it sits in an
sl2-triple that we can verify exactly.
"""

# %%
import numpy as np

from adideals import orbit_label
from adideals.construct import generator_set, index_assignment
from adideals.dynkin import system_of
from adideals.oracle import element, jordan_type, solve_triple, triple_matrices, verify_triple
from adideals.rootsys import format_root

# %% sp(6) and the partition [4,2]
L = orbit_label("C", 3, (4, 2))
rs = system_of(L)
C = generator_set(L, index_assignment(L)).roots
X = element(rs, C)
print([format_root(r) for r in C])
print(X)
print("Jordan type:", jordan_type(X))

# %% An exact triple {H, X, Y}.
t = solve_triple(L)
H, X, Y = triple_matrices(t)
print("Y coefficients:", [str(c) for c in t.y_coefficients])
print("[X, Y] == H:", not np.any(X.dot(Y) - Y.dot(X) - H))
print("verified:", verify_triple(t))

# %% Perturbing Y breaks it.
broken = list(t.y_coefficients)
broken[0] += 1
print("perturbed verified:", verify_triple(t, broken))

# %% The two orbits of the very even partition [4,4] in so(8).
for variant in ("I", "II"):
    L = orbit_label("D", 4, (4, 4), variant)
    C = generator_set(L, index_assignment(L)).roots
    print(variant, [format_root(r) for r in C], jordan_type(element(system_of(L), C)))

# %% In so(8) with [5,3] the generators interact, so Y is found in all of degree -2.
t = solve_triple(orbit_label("D", 4, (5, 3)))
print("support of Y:", [format_root(r) for r in t.y_support], verify_triple(t))
