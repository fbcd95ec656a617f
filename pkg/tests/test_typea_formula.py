import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adideals.dynkin import eigenvalue_multiset, lower_bound_m
from adideals.partitions import orbit_label, partitions_of
from adideals.typea_formula import check_monotone, count_A, formula_report, m_closed, m_linear


@pytest.mark.parametrize("lam, l, expected", [((4, 2), 3, 6), ((4, 2), 0, 3), ((4, 2), -4, 0), ((3,), 1, 2)])
def test_count_A_examples(lam, l, expected):
    assert count_A(lam, l) == expected


@pytest.mark.parametrize(
    "lam, m",
    [((4, 2), 11), ((2, 1, 1), 1), ((2, 2), 3), ((1, 1, 1, 1, 1), 0), ((6,), 15), ((3, 3), 10), ((4, 1, 1), 10)],
)
def test_closed_and_linear_examples(lam, m):
    assert m_closed(lam) == m_linear(lam) == m


partition_st = st.integers(1, 25).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


@given(partition_st, st.integers(-30, 30))
@settings(max_examples=300, deadline=None)
def test_count_A_counts_dynkin_entries(lam, l):
    entries = eigenvalue_multiset(lam)
    assert count_A(lam, l) == sum(1 for x in entries if x <= l)
    assert count_A(lam, l) + sum(1 for x in entries if x > l) == sum(lam)
    assert count_A(lam, l) <= count_A(lam, l + 1)


@given(partition_st)
@settings(max_examples=100, deadline=None)
def test_count_A_saturates(lam):
    assert count_A(lam, lam[0] - 1) == sum(lam)


@pytest.mark.parametrize("n", range(1, 31))
def test_closed_equals_linear(n):
    assert all(formula_report(lam).agree for lam in partitions_of(n))
    assert m_closed((n,)) == n * (n - 1) // 2
    assert m_closed((1,) * n) == 0


@pytest.mark.parametrize("n", range(2, 13))
def test_formula_equals_lower_bound(n):
    for lam in partitions_of(n):
        assert m_closed(lam) == lower_bound_m(orbit_label("A", n, lam))


@pytest.mark.parametrize("n", range(1, 13))
def test_monotone_along_covers(n):
    rep = check_monotone(n)
    assert rep.ok, rep.violations
    assert n < 2 or rep.covers_checked > 0


def test_monotone_examples():
    assert check_monotone(1).covers_checked == 0
    chain = [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [m_closed(p) for p in chain] == [6, 4, 3, 1, 0]
