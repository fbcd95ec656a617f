"""Dynkin elements, the gradings they induce, and the lower bound ``m``.

For a nilpotent orbit with Jordan type ``p`` the Dynkin element is read off
the multiset ``{k-1, k-3, ..., 1-k}`` over all parts ``k``.  In type A the
whole multiset is the diagonal of ``H``; in types B, C and D the diagonal is
``(h, -h[, 0])`` and ``h`` is the ``n`` largest entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalError
from .partitions import OrbitLabel, multiplicities
from .rootsys import AdNilpotentIdeal, RootSystem, build


@dataclass(frozen=True)
class DynkinElement:
    """Dominant Cartan element ``H`` of an orbit's standard triple.

    ``h`` is stored non-increasing and nonnegative (B/C/D).  For the second
    very even D orbit the matrix has ``-h_n`` in place of ``h_n``; this is
    recorded by ``variant == "II"`` and applied in :meth:`evaluate`.
    """

    kind: str
    size: int
    h: tuple[int, ...]
    variant: str | None = None

    @property
    def flips_last(self) -> bool:
        return self.variant == "II"

    def effective(self) -> tuple[int, ...]:
        """Diagonal entries ``h`` as they appear in the matrix realization."""
        if self.flips_last:
            return self.h[:-1] + (-self.h[-1],)
        return self.h

    def evaluate(self, root: Sequence[int]) -> int:
        """``alpha(H)`` for a root given in e-coordinates."""
        return sum(a * b for a, b in zip(root, self.effective()))


def eigenvalue_multiset(parts: Sequence[int]) -> list[int]:
    """Union of ``{k-1, k-3, ..., 1-k}`` over all parts, sorted descending."""
    values = [k - 1 - 2 * s for k in parts for s in range(k)]
    return sorted(values, reverse=True)


def dynkin_element(label: OrbitLabel) -> DynkinElement:
    values = eigenvalue_multiset(label.partition)
    h = values if label.kind == "A" else values[: label.size]
    return DynkinElement(label.kind, label.size, tuple(h), label.variant)


def system_of(label: OrbitLabel) -> RootSystem:
    return build(label.kind, label.size)


def weighted_diagram(rs: RootSystem, H: DynkinElement) -> tuple[int, ...]:
    """Labels ``alpha_k(H)`` on the simple roots; raises if ``H`` is not dominant."""
    labels = tuple(H.evaluate(s) for s in rs.simples)
    if any(x < 0 for x in labels):
        raise InputError(f"H = {H.h} is not dominant for {rs}: labels {labels}")
    return labels


@dataclass(frozen=True)
class GradeTable:
    """Dimensions of the ``ad H`` eigenspaces of the algebra."""

    dims: dict[int, int]
    zero_plus: int  # positive roots with alpha(H) == 0

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())


def grade_table(rs: RootSystem, H: DynkinElement) -> GradeTable:
    dims: dict[int, int] = {0: rs.rank}
    zero_plus = 0
    for r in rs.positives:
        v = H.evaluate(r)
        dims[v] = dims.get(v, 0) + 1
        dims[-v] = dims.get(-v, 0) + 1
        zero_plus += v == 0
    return GradeTable(dict(sorted(dims.items())), zero_plus)


def graded_ideal(rs: RootSystem, H: DynkinElement, i: int) -> AdNilpotentIdeal:
    """Span of root spaces of degree at least ``i`` (``i >= 1``)."""
    if i < 1:
        raise InputError(f"graded ideal needs i >= 1, got {i}")
    mask = sum(1 << k for k, r in enumerate(rs.positives) if H.evaluate(r) >= i)
    return AdNilpotentIdeal(rs, mask)


def centralizer_rank(label: OrbitLabel) -> int:
    """Rank of the reductive part of the centralizer of an orbit element.

    Type A: ``GL(r_k)`` per part value ``k`` modulo scalars, so rank is the
    number of parts minus one.  Type C: ``Sp(r_k)`` on odd ``k`` and
    ``O(r_k)`` on even ``k``; types B and D the reverse.  The Sp factors only
    occur with even ``r_k``, so every factor has rank ``r_k // 2``.
    """
    if label.kind == "A":
        return len(label.partition) - 1
    return sum(r // 2 for r in multiplicities(label.partition).values())


def lower_bound_m(label: OrbitLabel) -> int:
    """``dim B - dim B_{G_X}``: the least dimension of an ideal with this orbit."""
    rs = system_of(label)
    g = grade_table(rs, dynkin_element(label))
    borel_centralizer = g[1] + Fraction(g[0] + g[2] + centralizer_rank(label), 2)
    m = rs.borel_dim - borel_centralizer
    if m.denominator != 1 or m < 0:
        raise InternalError(f"non-integral or negative lower bound {m} for {label}")
    return int(m)
