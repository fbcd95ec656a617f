import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adideals.errors import InputError, PartitionError
from adideals.partitions import (
    OrbitLabel,
    as_partition,
    covered_by,
    dominance_leq,
    exponential_form,
    format_partition,
    orbit_label,
    orbit_labels,
    parse_partition,
    partitions_of,
    validate,
)

P = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@pytest.mark.parametrize("n", range(0, 13))
def test_partition_counts(n):
    parts = list(partitions_of(n))
    assert len(parts) == P[n]
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts, reverse=True)


@pytest.mark.parametrize("text, parts", [("4,2", (4, 2)), ("3, 3,1", (3, 3, 1)), ("7", (7,))])
def test_parse_partition(text, parts):
    assert parse_partition(text) == parts
    assert parse_partition(format_partition(parts)) == parts


@pytest.mark.parametrize("text", ["", "2,4", "a,b", "3,0", "3,-1"])
def test_parse_partition_rejects(text):
    with pytest.raises(InputError):
        parse_partition(text)


def test_as_partition_sorts_and_checks():
    assert as_partition([1, 3, 2]) == (3, 2, 1)
    with pytest.raises(InputError):
        as_partition([2, 0])


def test_exponential_form():
    assert exponential_form([5, 5, 3, 3, 1]) == [(5, 2), (3, 2), (1, 1)]


@pytest.mark.parametrize(
    "kind, size, count",
    [("A", 4, 5), ("A", 6, 11), ("B", 2, 4), ("B", 3, 7), ("C", 2, 4), ("C", 3, 8), ("D", 3, 5), ("D", 4, 12)],
)
def test_orbit_counts(kind, size, count):
    assert len(orbit_labels(kind, size)) == count


@pytest.mark.parametrize(
    "kind, size, parts, clause",
    [
        ("C", 3, (3, 2, 1), "odd parts"),
        ("B", 2, (4, 1), "even parts"),
        ("D", 4, (6, 2), "even parts"),
        ("A", 4, (3, 2), "partition of 4"),
        ("C", 2, (3, 3), "partition of 4"),
    ],
)
def test_validate_names_violated_rule(kind, size, parts, clause):
    with pytest.raises(PartitionError, match=clause):
        validate(kind, size, parts)


def test_very_even_has_two_labels():
    labels = validate("D", 4, (4, 4))
    assert [L.variant for L in labels] == ["I", "II"]
    assert all(L.very_even for L in labels)
    assert not orbit_label("D", 4, (5, 3)).very_even


def test_variant_rules():
    with pytest.raises(InputError):
        orbit_label("D", 4, (4, 4))
    with pytest.raises(InputError):
        orbit_label("D", 4, (4, 4), "III")
    with pytest.raises(InputError):
        orbit_label("C", 3, (4, 2), "I")
    assert orbit_label("D", 4, (2, 2, 2, 2), "II").variant == "II"


def test_label_str_uses_rank():
    assert str(orbit_label("A", 6, (4, 2))) == "A5 [4,2]"
    assert str(orbit_label("D", 4, (4, 4), "II")) == "D4 [4,4] II"
    assert isinstance(orbit_label("b", 2, (5,)), OrbitLabel)


def test_dominance_examples():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert not dominance_leq((3, 3), (4, 1, 1)) and not dominance_leq((4, 1, 1), (3, 3))
    with pytest.raises(InputError):
        dominance_leq((2,), (1, 1, 1))


def brute_covers(lam):
    n = sum(lam)
    below = [mu for mu in partitions_of(n) if mu != lam and dominance_leq(mu, lam)]
    return {
        mu for mu in below
        if not any(nu != mu and dominance_leq(mu, nu) for nu in below)
    }


@pytest.mark.parametrize("n", range(1, 11))
def test_covers_match_brute_force(n):
    for lam in partitions_of(n):
        assert set(covered_by(lam)) == brute_covers(lam)


def test_covers_example():
    assert set(covered_by((4, 2))) == {(3, 3), (4, 1, 1)}
    assert covered_by((1, 1, 1)) == []


partition_st = st.integers(1, 14).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


@given(partition_st, partition_st)
@settings(max_examples=200, deadline=None)
def test_dominance_is_antisymmetric(a, b):
    if sum(a) == sum(b) and dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b


@given(partition_st)
@settings(max_examples=100, deadline=None)
def test_covers_are_strictly_below(lam):
    for mu in covered_by(lam):
        assert mu != lam and dominance_leq(mu, lam)
