"""Ground truth from exact matrices.

Matrix realizations (1-based block indices, ``n`` the rank):

* A: ``sl(n)``, ``X_{e_i - e_j} = E_ij``.
* C: ``sp(2n)`` for the form ``[[0, I], [-I, 0]]``; Cartan ``diag(h, -h)``.
* D: ``so(2n)`` for the form ``[[0, I], [I, 0]]``; Cartan ``diag(h, -h)``.
* B: ``so(2n+1)`` for ``[[0, I, 0], [I, 0, 0], [0, 0, 1]]``; Cartan
  ``diag(h, -h, 0)``.

Each realization is closed under transpose, so ``Y_alpha`` is a rescaled
transpose of ``X_alpha``.  Matrices are numpy arrays of Python ints or
Fractions (``dtype=object``), keeping all arithmetic exact.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .construct import TripleData, generator_set, index_assignment, standard_triple
from .dynkin import DynkinElement, dynkin_element, grade_table, system_of
from .errors import GuardError, InputError, InternalError
from .partitions import Partition, dominance_leq, orbit_labels
from .rootsys import AdNilpotentIdeal, Root, RootSystem, build, enumerate_ideals, is_weak_antichain

MAX_ENUM_ROOTS = 30
DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 3
COEFF_RANGE = (1, 2**20)
SEED_ENV = "ADIDEALS_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, DEFAULT_SEED))


def zeros(size: int) -> np.ndarray:
    return np.array([[0] * size for _ in range(size)], dtype=object)


def bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a.dot(b) - b.dot(a)


def form_matrix(rs: RootSystem) -> np.ndarray:
    """Gram matrix ``J`` of the invariant form; ``g = {M : M^T J + J M = 0}``."""
    n, size = rs.size, rs.matrix_size
    J = zeros(size)
    if rs.kind == "A":
        raise InputError("type A has no invariant form here")
    sign = -1 if rs.kind == "C" else 1
    for i in range(n):
        J[i, n + i] = 1
        J[n + i, i] = sign
    if rs.kind == "B":
        J[2 * n, 2 * n] = 1
    return J


def in_algebra(rs: RootSystem, M: np.ndarray) -> bool:
    if rs.kind == "A":
        return sum(M[i, i] for i in range(rs.size)) == 0
    J = form_matrix(rs)
    return not np.any(M.T.dot(J) + J.dot(M))


def cartan_matrix(rs: RootSystem, h: Sequence) -> np.ndarray:
    """Diagonal matrix of the Cartan element with e-coordinates ``h``."""
    n = rs.size
    M = zeros(rs.matrix_size)
    for i, x in enumerate(h):
        M[i, i] = x
        if rs.kind != "A":
            M[n + i, n + i] = -x
    return M


def dynkin_matrix(rs: RootSystem, H: DynkinElement) -> np.ndarray:
    return cartan_matrix(rs, H.effective())


def root_matrix(rs: RootSystem, root: Sequence[int]) -> np.ndarray:
    """Standard root vector ``X_alpha`` of a positive root."""
    rs.idx(root)
    n = rs.size
    M = zeros(rs.matrix_size)
    nz = [(i, c) for i, c in enumerate(root) if c]
    if rs.kind == "A":
        (i, _), (j, _) = nz
        M[i, j] = 1
        return M
    if len(nz) == 1:
        i, c = nz[0]
        if c == 2:  # 2e_i in type C
            M[i, n + i] = 1
        else:  # e_i in type B; the last row/column is the zero weight
            M[i, 2 * n] = 1
            M[2 * n, n + i] = -1
        return M
    (i, _), (j, cj) = nz
    if cj < 0:
        M[i, j] = 1
        M[n + j, n + i] = -1
    elif rs.kind == "C":
        M[i, n + j] = 1
        M[j, n + i] = 1
    else:
        M[i, n + j] = 1
        M[j, n + i] = -1
    return M


def negative_root_matrix(rs: RootSystem, root: Sequence[int]) -> np.ndarray:
    """``Y_alpha`` with ``[X_alpha, Y_alpha]`` equal to the coroot of ``alpha``."""
    X = root_matrix(rs, root)
    K = bracket(X, X.T)
    h0 = [K[i, i] for i in range(rs.size)]
    c = Fraction(2, sum(a * b for a, b in zip(root, h0)))
    return X.T * (c if c.denominator != 1 else int(c))


def element(rs: RootSystem, roots: Iterable[Root], coeffs: Iterable | None = None) -> np.ndarray:
    roots = list(roots)
    coeffs = [1] * len(roots) if coeffs is None else list(coeffs)
    M = zeros(rs.matrix_size)
    for r, c in zip(roots, coeffs):
        M = M + root_matrix(rs, r) * c
    return M


def _flat(M: np.ndarray) -> list:
    return list(M.reshape(-1))


def jordan_type(M: np.ndarray) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    N = M.shape[0]
    ranks = [N]
    P = np.array([[int(i == j) for j in range(N)] for i in range(N)], dtype=object)
    for _ in range(N):
        P = P.dot(M)
        ranks.append(linalg.rank(P.tolist()))
        if ranks[-1] == 0:
            break
    if ranks[-1] != 0:
        raise InputError("matrix is not nilpotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    # at_least[k-1] = number of blocks of size >= k; transpose to part sizes
    parts = [sum(1 for c in at_least if c > j) for j in range(at_least[0])]
    return tuple(parts)


def dominance_max(parts: Sequence[Partition]) -> Partition | None:
    for p in parts:
        if all(dominance_leq(q, p) for q in parts):
            return p
    return None


def associated_orbit(
    rs: RootSystem,
    ideal: AdNilpotentIdeal,
    seed: int | None = None,
    trials: int = DEFAULT_TRIALS,
    rng: random.Random | None = None,
) -> Partition:
    """Jordan type of a generic element of the ideal.

    Random integer coefficients are drawn for every root of the ideal;
    the dominance-maximal type over ``trials`` draws is returned.
    """
    rng = rng or random.Random(default_seed() if seed is None else seed)
    roots = ideal.roots
    for _attempt in range(5):
        found = []
        for _ in range(trials):
            coeffs = [rng.randint(*COEFF_RANGE) for _ in roots]
            found.append(jordan_type(element(rs, roots, coeffs)))
        top = dominance_max(found)
        if top is not None:
            return top
    raise InternalError(f"trials disagree without a dominance maximum: {found}")


@dataclass(frozen=True)
class OrbitMin:
    dim: int
    count: int
    witness: tuple[Root, ...]


def check_guard(rs: RootSystem) -> None:
    if len(rs.positives) > MAX_ENUM_ROOTS:
        raise GuardError(
            f"{rs} has {len(rs.positives)} positive roots; exhaustive runs are limited to "
            f"{MAX_ENUM_ROOTS}"
        )


def orbit_table(kind: str, size: int, seed: int | None = None, trials: int = DEFAULT_TRIALS) -> list[tuple[AdNilpotentIdeal, Partition]]:
    """Every ideal paired with its associated orbit's partition."""
    rs = build(kind, size)
    check_guard(rs)
    rng = random.Random(default_seed() if seed is None else seed)
    return [(I, associated_orbit(rs, I, trials=trials, rng=rng)) for I in enumerate_ideals(rs)]


def min_dims_by_orbit(kind: str, size: int, seed: int | None = None, trials: int = DEFAULT_TRIALS) -> dict[Partition, OrbitMin]:
    """Least ideal dimension per associated orbit, by exhaustive enumeration."""
    table: dict[Partition, OrbitMin] = {}
    for I, p in orbit_table(kind, size, seed, trials):
        cur = table.get(p)
        if cur is None or I.dim < cur.dim:
            table[p] = OrbitMin(I.dim, 1, I.generators)
        elif I.dim == cur.dim:
            table[p] = OrbitMin(cur.dim, cur.count + 1, cur.witness)
    order = [L.partition for L in orbit_labels(kind, size)]
    return {p: table[p] for p in sorted(table, key=order.index)}


def triple_matrices(t: TripleData, coefficients: Sequence | None = None) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    rs = system_of(t.label)
    coeffs = t.y_coefficients if coefficients is None else coefficients
    H = dynkin_matrix(rs, t.H)
    X = element(rs, t.x_roots)
    Y = zeros(rs.matrix_size)
    for r, a in zip(t.y_support, coeffs):
        Y = Y + negative_root_matrix(rs, r) * a
    return H, X, Y


def solve_triple(label) -> TripleData:
    """Standard triple through the constructed ``X`` with ``Y`` anywhere in degree -2.

    Uses the coroot solution of :func:`standard_triple` when it exists;
    otherwise solves ``[X, Y] = H`` exactly for ``Y`` in the span of all
    negative root vectors of degree -2.  A solution exists whenever ``X``
    lies in the open orbit of the degree-2 space.
    """
    t = standard_triple(label)
    if isinstance(t, TripleData):
        return t
    rs = system_of(label)
    H = dynkin_element(label)
    C = generator_set(label, index_assignment(label)).roots
    X = element(rs, C)
    support = tuple(r for r in rs.positives if H.evaluate(r) == 2)
    cols = [_flat(bracket(X, negative_root_matrix(rs, r))) for r in support]
    target = _flat(dynkin_matrix(rs, H))
    rows = [[c[i] for c in cols] for i in range(len(target))]
    coeffs = linalg.solve(rows, target)
    if coeffs is None:
        raise InternalError(f"no Y in degree -2 completes a triple for {label}")
    return TripleData(label, H, C, tuple(coeffs), support)


def verify_triple(t: TripleData, coefficients: Sequence | None = None) -> bool:
    """Exact check of ``[H,X] = 2X``, ``[H,Y] = -2Y``, ``[X,Y] = H``.

    ``coefficients`` overrides the stored ``Y`` coefficients (for negative
    controls).
    """
    H, X, Y = triple_matrices(t, coefficients)
    return (
        not np.any(bracket(H, X) - 2 * X)
        and not np.any(bracket(H, Y) + 2 * Y)
        and not np.any(bracket(X, Y) - H)
    )


@dataclass(frozen=True)
class KostantReport:
    ad_h: int
    ad_plus: int
    ad_minus: int
    combined: int
    deg2: int
    size_of_C: int

    @property
    def ok(self) -> bool:
        parts = self.ad_h + self.ad_plus + self.ad_minus
        return parts == self.combined == self.deg2 and self.ad_h == self.size_of_C


def kostant_decomposition_check(label) -> KostantReport:
    """Ranks of ``ad X`` on ``h``, ``g_0^+`` and ``g_0^-`` against ``dim g_{H,2}``."""
    if label.kind not in ("A", "D"):
        raise InputError("the decomposition check covers types A and D")
    rs = system_of(label)
    H = dynkin_element(label)
    C = generator_set(label, index_assignment(label)).roots
    if not is_weak_antichain(rs, C):
        raise InputError(f"C is not a weak antichain for {label}")
    X = element(rs, C)
    n = rs.size
    if rs.kind == "A":
        cartan = [cartan_matrix(rs, [1 if j == i else -1 if j == i + 1 else 0 for j in range(n)]) for i in range(n - 1)]
    else:
        cartan = [cartan_matrix(rs, [1 if j == i else 0 for j in range(n)]) for i in range(n)]
    zero = [r for r in rs.positives if H.evaluate(r) == 0]
    plus = [root_matrix(rs, r) for r in zero]
    minus = [root_matrix(rs, r).T for r in zero]

    def image(mats):
        return [_flat(bracket(X, Z)) for Z in mats]

    imgs = [image(cartan), image(plus), image(minus)]
    ranks = [linalg.rank(m) if m else 0 for m in imgs]
    combined = linalg.rank(imgs[0] + imgs[1] + imgs[2])
    return KostantReport(*ranks, combined, grade_table(rs, H)[2], len(C))
