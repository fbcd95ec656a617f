"""Classical root systems, the root poset and ad-nilpotent ideals.

Roots are integer tuples in the orthonormal ``e``-basis: ``e_i - e_j`` has
``+1`` at position ``i`` and ``-1`` at ``j``; ``2e_i`` has ``2`` at ``i``.
Positions are 1-based in names and docstrings, 0-based in the tuples.

Type A is indexed by the matrix size ``n`` of ``sl(n)`` (rank ``n - 1``);
types B, C and D by their rank ``n``.

An ideal is stored as a bitset over the fixed positive-root table of its
system, so closure and minimality tests are single integer operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from . import linalg

Root = tuple[int, ...]

KINDS = ("A", "B", "C", "D")
_MIN_SIZE = {"A": 2, "B": 2, "C": 2, "D": 3}


def _unit(n: int, i: int, c: int = 1) -> list[int]:
    v = [0] * n
    v[i] = c
    return v


def _pair(n: int, i: int, j: int, sj: int) -> Root:
    v = _unit(n, i)
    v[j] += sj
    return tuple(v)


def _positive_roots(kind: str, n: int) -> list[Root]:
    roots = [_pair(n, i, j, -1) for i in range(n) for j in range(i + 1, n)]
    if kind == "A":
        return roots
    roots += [_pair(n, i, j, +1) for i in range(n) for j in range(i + 1, n)]
    if kind == "B":
        roots += [tuple(_unit(n, i)) for i in range(n)]
    elif kind == "C":
        roots += [tuple(_unit(n, i, 2)) for i in range(n)]
    return roots


def _simple_roots(kind: str, n: int) -> list[Root]:
    simples = [_pair(n, i, i + 1, -1) for i in range(n - 1)]
    if kind == "B":
        simples.append(tuple(_unit(n, n - 1)))
    elif kind == "C":
        simples.append(tuple(_unit(n, n - 1, 2)))
    elif kind == "D":
        simples.append(_pair(n, n - 2, n - 1, +1))
    return simples


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots of a classical system together with their poset.

    Instances are cached by :func:`build`, so identity comparison is
    meaningful and cheap.
    """

    kind: str
    size: int
    positives: tuple[Root, ...]
    simples: tuple[Root, ...]
    # simple-root coefficients of each positive root
    heights: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def borel_dim(self) -> int:
        return len(self.positives) + self.rank

    @property
    def dim(self) -> int:
        """Dimension of the simple Lie algebra."""
        return 2 * len(self.positives) + self.rank

    @property
    def matrix_size(self) -> int:
        """Side of the defining matrix realization."""
        n = self.size
        return {"A": n, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.kind]

    @cached_property
    def index(self) -> dict[Root, int]:
        return {r: i for i, r in enumerate(self.positives)}

    @cached_property
    def all_roots(self) -> frozenset[Root]:
        neg = (tuple(-x for x in r) for r in self.positives)
        return frozenset(self.positives) | frozenset(neg)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """``up_masks[i]`` has bit ``j`` set iff root ``i <= root j``."""
        p = len(self.positives)
        return tuple(
            sum(1 << j for j in range(p) if _dominates(self.heights[j], self.heights[i]))
            for i in range(p)
        )

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """``down_masks[i]`` has bit ``j`` set iff root ``j <= root i``."""
        p = len(self.positives)
        return tuple(
            sum(1 << j for j in range(p) if self.up_masks[j] >> i & 1) for i in range(p)
        )

    @property
    def full_mask(self) -> int:
        return (1 << len(self.positives)) - 1

    def idx(self, root: Sequence[int]) -> int:
        """Table index of a positive root; raises :class:`InputError` otherwise."""
        try:
            return self.index[tuple(root)]
        except KeyError:
            raise InputError(f"{tuple(root)} is not a positive root of {self}") from None

    def mask_of(self, roots: Iterable[Sequence[int]]) -> int:
        m = 0
        for r in roots:
            m |= 1 << self.idx(r)
        return m

    def roots_of(self, mask: int) -> tuple[Root, ...]:
        return tuple(r for i, r in enumerate(self.positives) if mask >> i & 1)

    def __str__(self) -> str:
        if self.kind == "A":
            return f"A{self.size - 1}"
        return f"{self.kind}{self.size}"


def _dominates(hi: Sequence[int], lo: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(hi, lo))


def build(kind: str, size: int) -> RootSystem:
    """Construct the root system of type ``kind``.

    ``size`` is the matrix size ``n`` for type A and the rank otherwise.
    """
    return _build(str(kind).upper(), size)


@lru_cache(maxsize=None)
def _build(kind: str, size: int) -> RootSystem:
    if kind not in KINDS:
        raise InputError(f"unknown type {kind!r}; expected one of {', '.join(KINDS)}")
    if not isinstance(size, int) or size < _MIN_SIZE[kind]:
        raise InputError(f"type {kind} needs size >= {_MIN_SIZE[kind]}, got {size!r}")
    positives = _positive_roots(kind, size)
    simples = _simple_roots(kind, size)
    # columns are simple roots; the change of basis is unimodular
    basis = [[s[row] for s in simples] for row in range(size)]
    heights = []
    for r in positives:
        c = linalg.solve(basis, r)
        if c is None or any(x.denominator != 1 or x < 0 for x in c):
            raise AssertionError(f"{r} is not a nonnegative combination of simples")
        heights.append(tuple(int(x) for x in c))
    return RootSystem(kind, size, tuple(positives), tuple(simples), tuple(heights))


def root_leq(rs: RootSystem, alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff ``beta - alpha`` is a nonnegative integer combination of simples."""
    return bool(rs.up_masks[rs.idx(alpha)] >> rs.idx(beta) & 1)


def is_weak_antichain(rs: RootSystem, roots: Iterable[Sequence[int]]) -> bool:
    """True iff no difference of two distinct members is a root."""
    rs_roots = rs.all_roots
    roots = [tuple(r) for r in roots]
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            if tuple(x - y for x, y in zip(a, b)) in rs_roots:
                return False
    return True


def is_antichain(rs: RootSystem, roots: Iterable[Sequence[int]]) -> bool:
    idx = sorted({rs.idx(r) for r in roots})
    for a in idx:
        others = sum(1 << b for b in idx if b != a)
        if rs.up_masks[a] & others:
            return False
    return True


@dataclass(frozen=True)
class AdNilpotentIdeal:
    """Upward-closed set of positive roots, stored as a bitset."""

    system: RootSystem
    mask: int

    @property
    def dim(self) -> int:
        return self.mask.bit_count()

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.system.roots_of(self.mask)

    @cached_property
    def generator_mask(self) -> int:
        down = self.system.down_masks
        m = self.mask
        return sum(1 << i for i in _bits(m) if down[i] & m == 1 << i)

    @property
    def generators(self) -> tuple[Root, ...]:
        return self.system.roots_of(self.generator_mask)

    def __contains__(self, root: object) -> bool:
        try:
            return bool(self.mask >> self.system.idx(root) & 1)  # type: ignore[arg-type]
        except InputError:
            return False

    def __le__(self, other: AdNilpotentIdeal) -> bool:
        return self.mask & ~other.mask == 0

    def __len__(self) -> int:
        return self.dim


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _closure_mask(rs: RootSystem, mask: int) -> int:
    up = rs.up_masks
    out = 0
    for i in _bits(mask):
        out |= up[i]
    return out


def close_upward(rs: RootSystem, gens: Iterable[Sequence[int]]) -> AdNilpotentIdeal:
    """Smallest ad-nilpotent ideal containing the roots ``gens``."""
    return AdNilpotentIdeal(rs, _closure_mask(rs, rs.mask_of(gens)))


def ideal_from_roots(rs: RootSystem, roots: Iterable[Sequence[int]]) -> AdNilpotentIdeal:
    """Wrap a set of roots that must already be upward closed."""
    mask = rs.mask_of(roots)
    if _closure_mask(rs, mask) != mask:
        raise InputError("root set is not upward closed")
    return AdNilpotentIdeal(rs, mask)


def minimal_generators(rs: RootSystem, roots: Iterable[Sequence[int]]) -> tuple[Root, ...]:
    """Minimal elements of an upward-closed root set (its generating antichain)."""
    return ideal_from_roots(rs, roots).generators


def enumerate_ideals(rs: RootSystem) -> Iterator[AdNilpotentIdeal]:
    """Yield every ad-nilpotent ideal exactly once.

    Ideals come out in lexicographic order of their generating antichains'
    sorted root indices, starting with the zero ideal.
    """
    up, down = rs.up_masks, rs.down_masks
    p = len(rs.positives)

    def walk(start: int, closure: int, blocked: int) -> Iterator[AdNilpotentIdeal]:
        yield AdNilpotentIdeal(rs, closure)
        for i in range(start, p):
            if not blocked >> i & 1:
                yield from walk(i + 1, closure | up[i], blocked | up[i] | down[i])

    yield from walk(0, 0, 0)


def count_ideals(rs: RootSystem) -> int:
    return sum(1 for _ in enumerate_ideals(rs))


def ferrers(rs: RootSystem, ideal: AdNilpotentIdeal) -> tuple[int, ...]:
    """Row-start columns of the right-justified Ferrers diagram (type A only).

    Entry ``i`` (row ``i + 1``) is the smallest column ``j`` with
    ``e_{i+1} - e_j`` in the ideal, or ``n + 1`` for an empty row.
    """
    if rs.kind != "A":
        raise InputError("Ferrers encoding is defined for type A only")
    n = rs.size
    starts = []
    for i in range(n - 1):
        cols = [j for j in range(i + 1, n) if _pair(n, i, j, -1) in ideal]
        starts.append(min(cols) + 1 if cols else n + 1)
    return tuple(starts)


def ferrers_diagram(rs: RootSystem, ideal: AdNilpotentIdeal) -> str:
    """ASCII right-justified staircase; ``#`` marks roots in the ideal."""
    n = rs.size
    lines = []
    for row, start in enumerate(ferrers(rs, ideal), start=1):
        cells = ["#" if col >= start else "." for col in range(row + 1, n + 1)]
        lines.append(" " * (2 * row) + " ".join(cells))
    return "\n".join(lines)


def format_root(root: Sequence[int]) -> str:
    """Human form such as ``e1-e3``, ``e2+e4`` or ``2e3``."""
    out = ""
    for i, c in enumerate(root, start=1):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        out += f"{sign}{mag}e{i}"
    return out or "0"
