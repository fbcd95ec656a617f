"""Partitions labelling nilpotent orbits, dominance order and its covers."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, groupby
from typing import Iterator, Sequence

from .errors import InputError, PartitionError

Partition = tuple[int, ...]
ExponentialForm = list[tuple[int, int]]

VARIANTS = ("I", "II")


def as_partition(parts: Sequence[int]) -> Partition:
    """Normalize to a non-increasing tuple of positive ints."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise InputError(f"partition parts must be positive: {p}")
    return tuple(sorted(p, reverse=True))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form, e.g. ``"4,2"``.

    The text must already list parts in non-increasing order.
    """
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InputError(f"cannot parse partition {text!r}") from None
    if not parts:
        raise InputError("empty partition")
    if list(parts) != sorted(parts, reverse=True) or parts[-1] < 1:
        raise InputError(f"partition must be positive and non-increasing: {text!r}")
    return parts


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p))


def partitions_of(n: int, largest: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def exponential_form(p: Sequence[int]) -> ExponentialForm:
    return [(value, len(list(group))) for value, group in groupby(as_partition(p))]


def multiplicities(p: Sequence[int]) -> dict[int, int]:
    return dict(exponential_form(p))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``mu <= lam`` in dominance: every partial sum of ``mu`` is at most ``lam``'s."""
    if sum(mu) != sum(lam):
        raise InputError(f"partitions of different totals: {tuple(mu)} vs {tuple(lam)}")
    length = max(len(mu), len(lam))
    a = list(accumulate(tuple(mu) + (0,) * (length - len(mu))))
    b = list(accumulate(tuple(lam) + (0,) * (length - len(lam))))
    return all(x <= y for x, y in zip(a, b))


def covered_by(lam: Sequence[int]) -> list[Partition]:
    """Partitions covered by ``lam`` in dominance order, via the box move.

    For each index ``i``, let ``j`` be the first later index (zeros padded)
    with ``lam[j] < lam[i] - 1``; the move is allowed when ``lam[j] ==
    lam[i] - 2`` or all parts strictly between equal ``lam[i]``.  It moves one
    box from row ``i`` to row ``j``.
    """
    lam = as_partition(lam)
    padded = list(lam) + [0] * sum(lam)
    found: list[Partition] = []
    for i, li in enumerate(lam):
        j = next((j for j in range(i + 1, len(padded)) if padded[j] < li - 1), None)
        if j is None:
            continue
        if padded[j] != li - 2 and any(padded[k] != li for k in range(i + 1, j)):
            continue
        moved = padded[:]
        moved[i] -= 1
        moved[j] += 1
        d = tuple(sorted((x for x in moved if x), reverse=True))
        if d not in found:
            found.append(d)
    return found


@dataclass(frozen=True)
class OrbitLabel:
    """Nilpotent orbit of a classical algebra, given by its Jordan type."""

    kind: str
    size: int
    partition: Partition
    variant: str | None = None

    @property
    def very_even(self) -> bool:
        return self.kind == "D" and all(x % 2 == 0 for x in self.partition)

    def __str__(self) -> str:
        rank = self.size - 1 if self.kind == "A" else self.size
        s = f"{self.kind}{rank} [{format_partition(self.partition)}]"
        return s + (f" {self.variant}" if self.variant else "")


def expected_total(kind: str, size: int) -> int:
    return {"A": size, "B": 2 * size + 1, "C": 2 * size, "D": 2 * size}[kind]


def _check(kind: str, size: int, parts: Partition) -> None:
    if kind not in ("A", "B", "C", "D"):
        raise InputError(f"unknown type {kind!r}")
    total = expected_total(kind, size)
    if sum(parts) != total:
        raise PartitionError(
            f"type {kind} size {size} needs a partition of {total}, got one of {sum(parts)}"
        )
    mult = multiplicities(parts)
    if kind == "C":
        bad = sorted(k for k, r in mult.items() if k % 2 == 1 and r % 2 == 1)
        if bad:
            raise PartitionError(
                f"type C: odd parts must have even multiplicity; violated by {bad}"
            )
    elif kind in ("B", "D"):
        bad = sorted(k for k, r in mult.items() if k % 2 == 0 and r % 2 == 1)
        if bad:
            raise PartitionError(
                f"type {kind}: even parts must have even multiplicity; violated by {bad}"
            )


def validate(kind: str, size: int, parts: Sequence[int]) -> tuple[OrbitLabel, ...]:
    """All orbit labels carried by ``parts``: two for a very even D partition."""
    kind = str(kind).upper()
    p = as_partition(parts)
    _check(kind, size, p)
    if kind == "D" and all(x % 2 == 0 for x in p):
        return tuple(OrbitLabel(kind, size, p, v) for v in VARIANTS)
    return (OrbitLabel(kind, size, p),)


def orbit_label(kind: str, size: int, parts: Sequence[int], variant: str | None = None) -> OrbitLabel:
    """The single label for ``parts``; very even D partitions require ``variant``."""
    labels = validate(kind, size, parts)
    if len(labels) == 1:
        if variant is not None:
            raise InputError(f"variant {variant!r} given for a partition that is not very even")
        return labels[0]
    if variant is None:
        raise InputError("very even partition: pass variant 'I' or 'II'")
    if variant not in VARIANTS:
        raise InputError(f"variant must be 'I' or 'II', got {variant!r}")
    return labels[VARIANTS.index(variant)]


def orbit_labels(kind: str, size: int) -> list[OrbitLabel]:
    """Every nilpotent orbit of the algebra, largest partitions first."""
    kind = str(kind).upper()
    out: list[OrbitLabel] = []
    for p in partitions_of(expected_total(kind, size)):
        try:
            out.extend(validate(kind, size, p))
        except PartitionError:
            continue
    return out
