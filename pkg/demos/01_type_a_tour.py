"""
Minimal ideals in sl(n): a tour
===============================

Every nilpotent orbit of sl(n) is a partition of n.  For each one we build
an ad-nilpotent ideal of the smallest possible dimension and look at it as a
Ferrers diagram.
"""

# %%
from adideals import lower_bound_m, minimal_ideal, orbit_label, orbit_labels
from adideals.construct import generator_set, index_assignment
from adideals.dynkin import dynkin_element, system_of
from adideals.rootsys import ferrers_diagram, format_root
from adideals.typea_formula import check_monotone, m_closed, m_linear

# %% The Dynkin element of [4,2] spreads the eigenvalues 3,1,-1,-3 and 1,-1.
L = orbit_label("A", 6, (4, 2))
print(L, "h =", dynkin_element(L).h)
print("index maps:", index_assignment(L).sequence())

# %% Consecutive values of one part give the generating roots.
C = generator_set(L, index_assignment(L)).roots
print("C =", [format_root(r) for r in C])
I = minimal_ideal(L)
print("dim", I.dim, "= m", lower_bound_m(L))
print(ferrers_diagram(system_of(L), I))

# %% The two closed forms agree with the general lower bound.
for lam in [(6,), (4, 2), (3, 3), (2, 2, 1, 1)]:
    print(lam, m_closed(lam), m_linear(lam))

# %% Going down in dominance always shrinks the minimal ideal.
for L in orbit_labels("A", 6):
    print(f"{str(L):<22} m = {lower_bound_m(L):>2}")
rep = check_monotone(10)
print(f"n=10: {rep.covers_checked} covers checked, violations: {rep.violations}")
