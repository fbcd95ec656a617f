from fractions import Fraction
from itertools import combinations
from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from adideals.errors import InputError
from adideals.rootsys import (
    AdNilpotentIdeal,
    build,
    close_upward,
    count_ideals,
    enumerate_ideals,
    ferrers,
    ferrers_diagram,
    format_root,
    ideal_from_roots,
    is_antichain,
    is_weak_antichain,
    minimal_generators,
    root_leq,
)

SYSTEMS = [("A", 3), ("A", 4), ("A", 5), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]


def coxeter_catalan(kind, rank):
    """Independent count: prod (h + e_i + 1) / (e_i + 1) over the exponents."""
    if kind == "A":
        h, exps = rank + 1, range(1, rank + 1)
    elif kind in "BC":
        h, exps = 2 * rank, range(1, 2 * rank, 2)
    else:
        h, exps = 2 * rank - 2, list(range(1, 2 * rank - 2, 2)) + [rank - 1]
    return prod(Fraction(h + e + 1, e + 1) for e in exps)


@pytest.mark.parametrize(
    "kind, size, positives, rank",
    [("A", 2, 1, 1), ("A", 6, 15, 5), ("B", 3, 9, 3), ("C", 4, 16, 4), ("D", 4, 12, 4), ("D", 5, 20, 5)],
)
def test_system_sizes(kind, size, positives, rank):
    rs = build(kind, size)
    assert len(rs.positives) == positives
    assert rs.rank == rank
    assert rs.dim == 2 * positives + rank


def test_type_a_size_is_matrix_size():
    assert str(build("A", 6)) == "A5"
    assert build("A", 6).matrix_size == 6


@pytest.mark.parametrize("kind, size", [("E", 3), ("A", 1), ("D", 2), ("B", 1)])
def test_build_rejects_bad_input(kind, size):
    with pytest.raises(InputError):
        build(kind, size)


def test_build_is_cached_and_case_insensitive():
    assert build("c", 3) is build("C", 3)


@pytest.mark.parametrize("kind, size", SYSTEMS)
def test_root_order_matches_simple_root_coordinates(kind, size):
    rs = build(kind, size)
    basis = sympy.Matrix([list(s) for s in rs.simples]).T
    for a in rs.positives:
        for b in rs.positives:
            coords = basis.solve(sympy.Matrix(b) - sympy.Matrix(a))
            expected = all(c >= 0 for c in coords)
            assert root_leq(rs, a, b) == expected


@pytest.mark.parametrize("kind, size", [("A", 4), ("B", 2), ("C", 3), ("D", 3)])
def test_enumeration_matches_brute_force(kind, size):
    rs = build(kind, size)
    p = len(rs.positives)
    brute = set()
    for mask in range(1 << p):
        if all(not (mask >> i & 1) or rs.up_masks[i] & ~mask == 0 for i in range(p)):
            brute.add(mask)
    found = [I.mask for I in enumerate_ideals(rs)]
    assert len(found) == len(set(found))
    assert set(found) == brute


@pytest.mark.parametrize("kind, size", SYSTEMS + [("A", 6), ("B", 4), ("C", 4)])
def test_count_is_type_catalan(kind, size):
    rs = build(kind, size)
    assert count_ideals(rs) == coxeter_catalan(kind, rs.rank)


def test_enumeration_is_deterministic():
    rs = build("C", 3)
    assert [I.mask for I in enumerate_ideals(rs)] == [I.mask for I in enumerate_ideals(rs)]


def test_enumeration_starts_with_zero_ideal():
    assert next(enumerate_ideals(build("B", 3))).dim == 0


@pytest.mark.parametrize("kind, size", SYSTEMS)
def test_generators_regenerate_ideal(kind, size):
    rs = build(kind, size)
    for I in enumerate_ideals(rs):
        assert is_antichain(rs, I.generators)
        assert close_upward(rs, I.generators) == I


roots_strategy = st.sampled_from(SYSTEMS).flatmap(
    lambda ks: st.tuples(st.just(ks), st.lists(st.sampled_from(build(*ks).positives), max_size=5))
)


@given(roots_strategy)
@settings(max_examples=150, deadline=None)
def test_closure_is_smallest_upward_closed_superset(data):
    (kind, size), roots = data
    rs = build(kind, size)
    I = close_upward(rs, roots)
    assert all(r in I for r in roots)
    for r in I.roots:
        assert any(root_leq(rs, g, r) for g in roots)
    assert close_upward(rs, I.roots) == I
    assert set(minimal_generators(rs, I.roots)) <= set(roots)


def test_weak_antichain_is_weaker_than_antichain():
    rs = build("C", 3)
    # e1-e3 <= e1+e3 in the root order but their difference 2e3 is a root
    pair = [(1, 0, -1), (1, 0, 1)]
    assert not is_antichain(rs, pair)
    assert not is_weak_antichain(rs, pair)
    # e1-e2 <= e1+e2 but the difference 2e2 is not a root of B
    rsb = build("B", 2)
    assert not is_antichain(rsb, [(1, -1), (1, 1)])
    assert is_weak_antichain(rsb, [(1, -1), (1, 1)])


def test_ideal_from_roots_requires_closure():
    rs = build("A", 4)
    with pytest.raises(InputError):
        ideal_from_roots(rs, [(1, -1, 0, 0)])
    assert ideal_from_roots(rs, [(1, 0, 0, -1)]).dim == 1


def test_idx_rejects_non_roots():
    with pytest.raises(InputError):
        build("A", 3).idx((1, 1, -2))


def test_ideal_containment_and_order():
    rs = build("A", 4)
    small = close_upward(rs, [(1, 0, 0, -1)])
    big = close_upward(rs, [(1, 0, -1, 0)])
    assert small <= big and not big <= small
    assert (1, 0, 0, -1) in small and (1, 0, -1, 0) not in small
    assert "not a root" not in small
    assert len(big) == 2


def test_ferrers_encoding_of_full_nilradical():
    rs = build("A", 4)
    full = AdNilpotentIdeal(rs, rs.full_mask)
    assert ferrers(rs, full) == (2, 3, 4)
    assert ferrers(rs, AdNilpotentIdeal(rs, 0)) == (5, 5, 5)
    assert ferrers_diagram(rs, full).splitlines()[0].split() == ["#", "#", "#"]


def test_ferrers_only_for_type_a():
    rs = build("B", 2)
    with pytest.raises(InputError):
        ferrers(rs, AdNilpotentIdeal(rs, 0))


@pytest.mark.parametrize(
    "root, text", [((1, 0, -1), "e1-e3"), ((0, 0, 2), "2e3"), ((0, 1, 0, 1), "e2+e4"), ((0, 0), "0")]
)
def test_format_root(root, text):
    assert format_root(root) == text


def test_heights_of_highest_root():
    # highest roots: A: all ones; C_n: (2,...,2,1); D_n: (1,2,...,2,1,1)
    for kind, size, top in [("A", 5, (1, 1, 1, 1)), ("C", 4, (2, 2, 2, 1)), ("D", 5, (1, 2, 2, 1, 1))]:
        rs = build(kind, size)
        assert max(rs.heights, key=sum) == top


def test_every_antichain_subset_generates_distinct_ideals():
    rs = build("B", 2)
    seen = {}
    for k in range(len(rs.positives) + 1):
        for S in combinations(rs.positives, k):
            if is_antichain(rs, S):
                I = close_upward(rs, S)
                assert I.mask not in seen
                seen[I.mask] = S
    assert len(seen) == 6
