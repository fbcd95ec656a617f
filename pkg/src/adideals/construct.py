"""Minimal ad-nilpotent ideals built from index maps.

Every part ``k`` of the partition is split into its *instances* ``(k, i)``,
``i = 1..r_k``.  An instance owns a set of Dynkin-element values (its
*domain*) and an index map sending each value to a diagonal position of
``H``.  Consecutive values of one instance give a chain of roots of degree
2; the chains, closed off according to the type, form the generator set
``C`` whose upward closure is an ideal of minimal dimension.

In types B, C and D the instances of one part pair up as ``(k, i)`` and
``(k, r_k + 1 - i)``; the first member of a pair is called *first*, the
other *second*, and an unpaired central instance is a *middle*.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .dynkin import DynkinElement, dynkin_element, graded_ideal, system_of
from .errors import InputError, InternalError
from .partitions import OrbitLabel, multiplicities
from .rootsys import AdNilpotentIdeal, Root, RootSystem, close_upward, is_weak_antichain

Instance = tuple[int, int]  # (part value k, occurrence i counted from 1)

FIRST, SECOND, MIDDLE, PART = "first", "second", "middle", "part"


def instances(label: OrbitLabel) -> list[Instance]:
    """Part instances in partition order: larger parts first, then by occurrence."""
    return [(k, i) for k, r in multiplicities(label.partition).items() for i in range(1, r + 1)]


def partner(label: OrbitLabel, inst: Instance) -> Instance:
    k, i = inst
    return (k, multiplicities(label.partition)[k] + 1 - i)


def role(label: OrbitLabel, inst: Instance) -> str:
    if label.kind == "A":
        return PART
    k, i = inst
    r = multiplicities(label.partition)[k]
    if 2 * i <= r:
        return FIRST
    if 2 * i == r + 1:
        return MIDDLE
    return SECOND


def middles(label: OrbitLabel) -> list[Instance]:
    """Unpaired instances sorted by part value (ascending)."""
    mids = [t for t in instances(label) if role(label, t) == MIDDLE]
    return sorted(mids)


def domain(label: OrbitLabel, inst: Instance) -> tuple[int, ...]:
    """Values carried by an instance, descending."""
    k, _ = inst
    if label.kind == "A":
        return tuple(range(k - 1, -k, -2))
    positive = tuple(range(k - 1, 0, -2))
    if k % 2 == 0:
        return positive
    rl = role(label, inst)
    if rl == FIRST:
        with_zero = True
    elif rl == SECOND:
        with_zero = False
    else:
        # middles alternate, the second, fourth, ... smallest carry 0
        with_zero = middles(label).index(inst) % 2 == 1
    return positive + (0,) if with_zero else positive


@dataclass(frozen=True)
class IndexAssignment:
    """Index maps ``sigma_tau``: value -> 1-based diagonal position of ``H``."""

    label: OrbitLabel
    maps: dict[Instance, dict[int, int]]

    def sigma(self, inst: Instance, value: int) -> int:
        return self.maps[inst][value]

    def sequence(self) -> list[tuple[int, Instance]]:
        """``(value, instance)`` at each position 1..n."""
        out: dict[int, tuple[int, Instance]] = {}
        for inst, m in self.maps.items():
            for v, pos in m.items():
                out[pos] = (v, inst)
        return [out[p] for p in sorted(out)]

    def image(self, inst: Instance) -> set[int]:
        return set(self.maps[inst].values())


def assignment_from_sequence(label: OrbitLabel, seq: Sequence[tuple[int, Instance]]) -> IndexAssignment:
    """Build an assignment from the ``(value, instance)`` tag of every position."""
    maps: dict[Instance, dict[int, int]] = {t: {} for t in instances(label)}
    for pos, (v, inst) in enumerate(seq, start=1):
        if inst not in maps:
            raise InputError(f"{inst} is not a part instance of {label}")
        if v in maps[inst]:
            raise InputError(f"value {v} placed twice for instance {inst}")
        maps[inst][v] = pos
    return IndexAssignment(label, maps)


def _order_key(label: OrbitLabel, inst: Instance) -> tuple:
    k, i = inst
    rl = role(label, inst)
    if rl in (PART, FIRST):
        return (0, -k, i)
    if rl == MIDDLE:
        return (1, k, 0)
    pk, pi = partner(label, inst)
    return (2, k, -pi)  # mirror image of the firsts: nested pairs


def index_assignment(label: OrbitLabel) -> IndexAssignment:
    """Canonical index maps.

    Values are placed in non-increasing order.  Among equal values: firsts
    (and all type-A instances) by larger part then occurrence, then middles
    by increasing part, then seconds mirroring their partners so pairs nest.
    """
    insts = instances(label)
    by_value: dict[int, list[Instance]] = defaultdict(list)
    for t in insts:
        for v in domain(label, t):
            by_value[v].append(t)
    seq: list[tuple[int, Instance]] = []
    for v in sorted(by_value, reverse=True):
        for t in sorted(by_value[v], key=lambda t: _order_key(label, t)):
            seq.append((v, t))
    if len(seq) != label.size:
        raise InternalError(f"{len(seq)} values for {label.size} positions in {label}")
    a = assignment_from_sequence(label, seq)
    report = verify_assignment(label, a)
    if not report.ok:
        raise InternalError(f"canonical assignment fails its constraints: {report.failures}")
    return a


@dataclass
class AssignmentReport:
    """Per-property outcome of :func:`verify_assignment`."""

    checked: list[str]
    failures: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def passed(self, prop: str) -> bool:
        return prop in self.checked and prop not in self.failures

    def fail(self, prop: str, msg: str) -> None:
        self.failures.setdefault(prop, []).append(msg)


def verify_assignment(label: OrbitLabel, a: IndexAssignment) -> AssignmentReport:
    """Check the placement constraints the construction relies on.

    Properties are numbered as in the comments below.  Type A checks 1-3.
    Types B, C and D check 1-5, plus 6-7 on middles (even parts in C, odd
    parts in B and D).
    """
    props = ["1", "2", "3"] if label.kind == "A" else ["1", "2", "3", "4", "5", "6", "7"]
    rep = AssignmentReport(props)
    insts = instances(label)
    sig = a.maps
    n = label.size

    # 1: shapes, injectivity, disjoint images covering [n]
    if set(sig) != set(insts):
        rep.fail("1", f"instances {sorted(sig)} != {sorted(insts)}")
        return rep
    seen: dict[int, Instance] = {}
    for t in insts:
        if tuple(sorted(sig[t], reverse=True)) != domain(label, t):
            rep.fail("1", f"{t}: domain {sorted(sig[t], reverse=True)} != {list(domain(label, t))}")
        for v, p in sig[t].items():
            if p in seen:
                rep.fail("1", f"position {p} used by {seen[p]} and {t}")
            seen[p] = t
    if set(seen) != set(range(1, n + 1)):
        rep.fail("1", f"images cover {sorted(seen)} instead of 1..{n}")
    if "1" in rep.failures:
        return rep

    # 2: larger values sit strictly left of smaller ones
    placed = sorted((p, v) for t in insts for v, p in sig[t].items())
    for (p, v), (q, w) in zip(placed, placed[1:]):
        if v < w:
            rep.fail("2", f"value {v} at {p} precedes larger value {w} at {q}")

    def common(*ts: Instance) -> list[int]:
        vals = set(sig[ts[0]])
        for t in ts[1:]:
            vals &= set(sig[t])
        return sorted(vals, reverse=True)

    if label.kind == "A":
        # 3: two parts keep the same left/right order at every shared value
        for s in insts:
            for t in insts:
                if s >= t:
                    continue
                signs = {sig[s][v] > sig[t][v] for v in common(s, t)}
                if len(signs) > 1:
                    rep.fail("3", f"{s} and {t} swap relative order across shared values")
        return rep

    kind = label.kind
    rl = {t: role(label, t) for t in insts}
    firsts = [t for t in insts if rl[t] == FIRST]
    mids = middles(label)

    # 3: occurrences of one part keep their order at every shared value
    for s in insts:
        for t in insts:
            if s[0] == t[0] and s[1] < t[1]:
                for v in common(s, t):
                    if not sig[s][v] < sig[t][v]:
                        rep.fail("3", f"{s} not left of {t} at value {v}")

    # 4: pairs nest at every positive value
    for s in firsts:
        for t in firsts:
            if s >= t:
                continue
            s2, t2 = partner(label, s), partner(label, t)
            for v in common(s, t, s2, t2):
                if v <= 0:
                    continue
                ps, ps2, pt, pt2 = sig[s][v], sig[s2][v], sig[t][v], sig[t2][v]
                if not (pt < ps < ps2 < pt2 or ps < pt < pt2 < ps2):
                    rep.fail("4", f"pairs of {s} and {t} do not nest at value {v}")

    # 5: the order of firsts at value 2 persists at value 0
    for s in firsts:
        for t in firsts:
            if s != t and {0, 2} <= set(common(s, t)):
                if sig[s][2] < sig[t][2] and not sig[s][0] < sig[t][0]:
                    rep.fail("5", f"{s} left of {t} at 2 but not at 0")

    # 6, 7: middles sit inside every pair and in increasing part order
    mid_parity = 0 if kind == "C" else 1
    for m_ in mids:
        if m_[0] % 2 != mid_parity:
            rep.fail("6", f"middle instance {m_} has unexpected parity for type {kind}")
        for f in firsts:
            if f[0] % 2 != m_[0] % 2:
                continue
            f2 = partner(label, f)
            for v in common(m_, f):
                if v in sig[f2]:
                    if not sig[f][v] < sig[m_][v] < sig[f2][v]:
                        rep.fail("6", f"middle {m_} not inside pair of {f} at value {v}")
                elif not sig[f][v] < sig[m_][v]:
                    rep.fail("6", f"middle {m_} not right of {f} at value {v}")
    for s in mids:
        for t in mids:
            if s[0] < t[0]:
                for v in common(s, t):
                    if not sig[s][v] < sig[t][v]:
                        rep.fail("7", f"middle {s} not left of middle {t} at value {v}")
    return rep


@dataclass(frozen=True)
class GeneratorSet:
    """Roots attached to each instance; their union generates the ideal."""

    label: OrbitLabel
    chunks: dict[Instance, tuple[Root, ...]]

    @property
    def roots(self) -> tuple[Root, ...]:
        out: list[Root] = []
        for chunk in self.chunks.values():
            for r in chunk:
                if r not in out:
                    out.append(r)
        return tuple(out)

    def __len__(self) -> int:
        return len(self.roots)


def _root(n: int, plus: Iterable[int] = (), minus: Iterable[int] = ()) -> Root:
    v = [0] * n
    for p in plus:
        v[p - 1] += 1
    for p in minus:
        v[p - 1] -= 1
    return tuple(v)


def _flip_last(root: Root) -> Root:
    return root[:-1] + (-root[-1],)


def generator_set(label: OrbitLabel, a: IndexAssignment) -> GeneratorSet:
    """Attach the per-type root chunks to every instance."""
    n = label.size
    kind = label.kind
    sig = a.maps

    def e(plus=(), minus=()) -> Root:
        return _root(n, plus, minus)

    def chain(t: Instance, values: Sequence[int]) -> list[Root]:
        return [e([sig[t][x]], [sig[t][y]]) for x, y in zip(values, values[1:])]

    chunks: dict[Instance, tuple[Root, ...]] = {}
    mids = middles(label)
    for t in instances(label):
        dom = domain(label, t)
        k = t[0]
        rl = role(label, t)
        if kind == "A":
            chunks[t] = tuple(chain(t, dom))
            continue
        roots = chain(t, dom)
        p = partner(label, t)
        if k % 2 == 0:
            if rl == FIRST:
                roots.append(e([sig[t][1], sig[p][1]]))
            elif rl == MIDDLE:  # type C only
                roots.append(e([sig[t][1], sig[t][1]]))
        elif rl == SECOND:
            if 2 in dom:
                roots.append(e([sig[t][2], sig[p][0]]))
        elif rl == MIDDLE:
            roots = _middle_chunk(label, a, t, mids)
        chunks[t] = tuple(roots)

    if label.variant == "II":
        chunks = _second_very_even(label, a, chunks)
    return GeneratorSet(label, chunks)


def _middle_chunk(label: OrbitLabel, a: IndexAssignment, t: Instance, mids: list[Instance]) -> list[Root]:
    n = label.size
    sig = a.maps
    dom = domain(label, t)
    above_two = [v for v in dom if v >= 2]
    roots = [_root(n, [sig[t][x]], [sig[t][y]]) for x, y in zip(above_two, above_two[1:])]
    if not above_two:
        return []
    top = sig[t][2]
    if label.kind == "B":
        if 0 in dom:
            roots += [_root(n, [top, sig[t][0]]), _root(n, [top], [sig[t][0]])]
        else:
            roots.append(_root(n, [top]))
        return roots
    # type D: middles pair up as (smaller, larger) in ascending order; the
    # larger one owns the zero and closes like type B, the smaller one
    # ends on the larger one's zero
    pos = mids.index(t)
    if pos % 2 == 1:
        z = sig[t][0]
        roots += [_root(n, [top], [z]), _root(n, [top, z])]
    else:
        z = sig[mids[pos + 1]][0]
        roots.append(_root(n, [top], [z]))
    return roots


def _second_very_even(label: OrbitLabel, a: IndexAssignment, chunks: dict) -> dict:
    """Swap the sign of ``e_n`` in the two chunks of the pair owning position n."""
    n = label.size
    owner = next(t for t, m in a.maps.items() if m.get(1) == n)
    pair = {owner, partner(label, owner)}
    return {
        t: tuple(_flip_last(r) if t in pair else r for r in chunk)
        for t, chunk in chunks.items()
    }


def minimal_ideal(label: OrbitLabel, assignment: IndexAssignment | None = None) -> AdNilpotentIdeal:
    """Ideal generated by the constructed root set ``C``."""
    a = assignment or index_assignment(label)
    return close_upward(system_of(label), generator_set(label, a).roots)


def split_graded(rs: RootSystem, H: DynkinElement, C: Iterable[Root]) -> tuple[tuple[Root, ...], tuple[Root, ...], tuple[Root, ...]]:
    """Partition the degree-2 roots into ``C``, ``C+`` (in the ideal) and ``C-``."""
    C = tuple(C)
    ideal = close_upward(rs, C)
    deg2 = [r for r in rs.positives if H.evaluate(r) == 2]
    plus = tuple(r for r in deg2 if r in ideal and r not in C)
    minus = tuple(r for r in deg2 if r not in ideal)
    return C, plus, minus


def iota(label: OrbitLabel, a: IndexAssignment, root: Sequence[int]) -> Root:
    """Type A involution ``e_{s_i(m)} - e_{s_j(m-2)} -> e_{s_j(2-m)} - e_{s_i(-m)}``."""
    if label.kind != "A":
        raise InputError("iota is defined for type A only")
    root = tuple(root)
    seq = a.sequence()
    n = label.size
    try:
        p = root.index(1) + 1
        q = root.index(-1) + 1
    except ValueError:
        raise InputError(f"{root} is not of the form e_p - e_q") from None
    (m, si), (m2, sj) = seq[p - 1], seq[q - 1]
    if p > q or m - m2 != 2:
        raise InputError(f"{root} is not a positive root of degree 2")
    return _root(n, [a.sigma(sj, 2 - m)], [a.sigma(si, -m)])


def coroot(root: Sequence[int]) -> tuple[Fraction, ...]:
    """``2 alpha / (alpha, alpha)`` in e-coordinates."""
    norm = sum(x * x for x in root)
    return tuple(Fraction(2 * x, norm) for x in root)


@dataclass(frozen=True)
class TripleData:
    """Coefficients of a standard triple ``{H, X, Y}`` built from ``C``.

    ``X`` is the sum of the root vectors of ``x_roots``; ``Y`` is
    ``sum a_beta Y_beta`` over ``y_roots`` (by default the same roots), with
    ``Y_beta`` the negative root vector paired with ``X_beta`` so that
    ``[X_beta, Y_beta]`` is the coroot.
    """

    label: OrbitLabel
    H: DynkinElement
    x_roots: tuple[Root, ...]
    y_coefficients: tuple[Fraction, ...]
    y_roots: tuple[Root, ...] | None = None

    @property
    def y_support(self) -> tuple[Root, ...]:
        return self.x_roots if self.y_roots is None else self.y_roots


@dataclass(frozen=True)
class NoTriple:
    """``H`` is not a combination of the coroots of ``C`` with ``Y`` supported on ``-C``."""

    label: OrbitLabel
    reason: str


def standard_triple(label: OrbitLabel) -> TripleData | NoTriple:
    """Solve ``H = sum a_alpha H_alpha`` over the rationals."""
    rs = system_of(label)
    H = dynkin_element(label)
    C = generator_set(label, index_assignment(label)).roots
    if not is_weak_antichain(rs, C):
        return NoTriple(label, "a difference of two generators is a root")
    cols = [coroot(r) for r in C]
    target = H.effective()
    if label.kind == "A":
        # traceless Cartan: compare modulo the identity via consecutive differences
        rows = [[c[i] - c[i + 1] for c in cols] for i in range(label.size - 1)]
        rhs = [target[i] - target[i + 1] for i in range(label.size - 1)]
    else:
        rows = [[c[i] for c in cols] for i in range(label.size)]
        rhs = list(target)
    coeffs = linalg.solve(rows, rhs)
    if coeffs is None:
        if label.kind == "B":
            return NoTriple(label, "H is not in the span of the coroots of C")
        raise InternalError(f"H not in the coroot span of C for {label}")
    return TripleData(label, H, C, tuple(coeffs))


def structural_checks(label: OrbitLabel) -> dict[str, bool]:
    """Consequences of the construction that must hold for every label."""
    from .dynkin import centralizer_rank

    rs = system_of(label)
    H = dynkin_element(label)
    a = index_assignment(label)
    C = generator_set(label, a).roots
    ideal = close_upward(rs, C)
    _, plus, minus = split_graded(rs, H, C)
    return {
        "degree_two": all(H.evaluate(r) == 2 for r in C),
        "inside_q2": ideal <= graded_ideal(rs, H, 2),
        "contains_q3": graded_ideal(rs, H, 3) <= ideal,
        "size_of_C": len(C) == rs.rank - centralizer_rank(label),
        "balanced": len(plus) == len(minus),
    }
