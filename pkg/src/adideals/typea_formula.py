"""Closed forms for the type-A lower bound and its monotonicity in dominance.

With ``H`` the Dynkin element of a partition ``lam`` of ``n``, ``count_A(lam, l)``
counts the diagonal entries of ``H`` that are at most ``l``.  Both closed
forms below return the same integer as :func:`adideals.dynkin.lower_bound_m`
on the type-A label of ``lam``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partitions import Partition, as_partition, covered_by, multiplicities, partitions_of


def count_A(lam: Sequence[int], l: int) -> int:
    """Number of Dynkin-element entries ``<= l``.

    A part ``k`` contributes ``k-1, k-3, ..., 1-k``; of these,
    ``clamp(floor((k + l + 1) / 2), 0, k)`` are at most ``l``.
    """
    return sum(max(min((k + l + 1) // 2, k), 0) for k in as_partition(lam))


def _pairs_term(lam: Partition) -> int:
    return sum(r * (r - 1) // 2 for r in multiplicities(lam).values())


def m_closed(lam: Sequence[int]) -> int:
    """Lower bound ``m`` from the entry counts of ``H``.

    ``n(n+1)/2 + sum_k (A(-k-1) - A(k-1)) + sum_t r_t(r_t-1)/2`` with ``k``
    running over parts and ``t`` over distinct part values.
    """
    lam = as_partition(lam)
    n = sum(lam)
    total = n * (n + 1) // 2
    total += sum(count_A(lam, -k - 1) - count_A(lam, k - 1) for k in lam)
    return total + _pairs_term(lam)


def m_linear(lam: Sequence[int]) -> int:
    """``n(n+1)/2 - sum_i (2i-1) lam_i + sum_t r_t(r_t-1)/2`` (parts 1-indexed)."""
    lam = as_partition(lam)
    n = sum(lam)
    weighted = sum((2 * i - 1) * k for i, k in enumerate(lam, start=1))
    return n * (n + 1) // 2 - weighted + _pairs_term(lam)


@dataclass(frozen=True)
class FormulaReport:
    partition: Partition
    m_via_A_counts: int
    m_via_linear: int

    @property
    def agree(self) -> bool:
        return self.m_via_A_counts == self.m_via_linear


def formula_report(lam: Sequence[int]) -> FormulaReport:
    lam = as_partition(lam)
    return FormulaReport(lam, m_closed(lam), m_linear(lam))


@dataclass
class MonotoneReport:
    """Every dominance cover ``d < lam`` of partitions of ``n``, with violations."""

    n: int
    covers_checked: int = 0
    violations: list[tuple[Partition, Partition, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotone(n: int) -> MonotoneReport:
    """Check that ``m`` strictly drops along every cover of partitions of ``n``."""
    rep = MonotoneReport(n)
    for lam in partitions_of(n):
        top = m_closed(lam)
        for d in covered_by(lam):
            rep.covers_checked += 1
            low = m_closed(d)
            if not low < top:
                rep.violations.append((lam, d, top, low))
    return rep
