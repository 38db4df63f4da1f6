"""Exact linear algebra for doubled symplectic and orthogonal spaces.

A doubled space carries the difference form pulled back from two copies of
a fixed symplectic or split odd orthogonal space.  Maximal isotropic
subspaces are handled as exact rational basis matrices; the samplers are
deterministic per seed and stay inside the relevant isometry group, so
every sampled subspace is maximal isotropic by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd as _gcd
from fractions import Fraction as Q

from .errors import InvalidInput, InvariantViolation
from .linalg import (
    Matrix,
    Vector,
    identity_matrix,
    int_rank,
    inverse,
    mat_mul,
    primitive_direction,
    qm,
    qv,
    transpose,
    vadd,
)


@dataclass(frozen=True)
class DoubledSpace:
    half_rank: int
    kind: str  # "symplectic" or "orthogonal"

    @property
    def block_dim(self) -> int:
        return 2 * self.half_rank if self.kind == "symplectic" else 2 * self.half_rank + 1

    @property
    def dim(self) -> int:
        return 2 * self.block_dim

    def block_form(self) -> Matrix:
        m = self.block_dim
        if self.kind == "symplectic":
            n = self.half_rank
            rows = [[Q(0)] * m for _ in range(m)]
            for i in range(n):
                rows[i][n + i] = Q(1)
                rows[n + i][i] = Q(-1)
            return qm(rows)
        rows = [[Q(0)] * m for _ in range(m)]
        for i in range(m):
            rows[i][m - 1 - i] = Q(1)
        return qm(rows)

    def form(self) -> Matrix:
        """The difference form on the doubled space, block diagonal."""
        m = self.block_dim
        f0 = self.block_form()
        rows = [[Q(0)] * (2 * m) for _ in range(2 * m)]
        for i in range(m):
            for j in range(m):
                rows[i][j] = f0[i][j]
                rows[m + i][m + j] = -f0[i][j]
        return qm(rows)


def symplectic_doubled(n: int) -> DoubledSpace:
    if n < 1:
        raise InvalidInput("half rank must be at least 1")
    return DoubledSpace(half_rank=n, kind="symplectic")


def orthogonal_doubled(n: int) -> DoubledSpace:
    if n < 1:
        raise InvalidInput("half rank must be at least 1")
    return DoubledSpace(half_rank=n, kind="orthogonal")


def _form_index(space: DoubledSpace) -> list[tuple[int, int]]:
    """The form as a permutation with signs: row i of the form matrix has a
    single nonzero entry, sign at column position."""
    m = space.block_dim
    out: list[tuple[int, int]] = []
    if space.kind == "symplectic":
        n = space.half_rank
        for i in range(n):
            out.append((n + i, 1))
        for i in range(n):
            out.append((i, -1))
        for i in range(n):
            out.append((m + n + i, -1))
        for i in range(n):
            out.append((m + i, 1))
    else:
        for i in range(m):
            out.append((m - 1 - i, 1))
        for i in range(m):
            out.append((2 * m - 1 - i, -1))
    return out


def _form_apply(space: DoubledSpace, v) -> list:
    idx = _form_index(space)
    return [s * v[j] for j, s in idx]


def _int_rows(basis: Matrix) -> list[list[int]]:
    """Primitive integer representatives of the row span."""
    return [[int(x) for x in primitive_direction(row)] for row in basis]


@dataclass(frozen=True)
class IsotropicSubspace:
    space: DoubledSpace
    basis: Matrix  # rows span the subspace


def _block_unit(space: DoubledSpace, block: int, i: int) -> Vector:
    v = [Q(0)] * space.dim
    v[block * space.block_dim + i] = Q(1)
    return tuple(v)


def diagonal_subspace(space: DoubledSpace) -> IsotropicSubspace:
    """The graph of the identity: the base point with invariant zero."""
    rows = [
        vadd(_block_unit(space, 0, i), _block_unit(space, 1, i))
        for i in range(space.block_dim)
    ]
    return IsotropicSubspace(space=space, basis=qm(rows))


def split_subspace(space: DoubledSpace) -> IsotropicSubspace:
    """A direct sum of maximal isotropics from each factor: invariant n."""
    n = space.half_rank
    rows = [_block_unit(space, 0, i) for i in range(n)]
    rows += [_block_unit(space, 1, i) for i in range(n)]
    if space.kind == "orthogonal":
        # the middle diagonal direction completes an odd-dimensional maximal
        rows.append(
            vadd(_block_unit(space, 0, n), _block_unit(space, 1, n))
        )
    return IsotropicSubspace(space=space, basis=qm(rows))


def _assert_maximal_isotropic(rows: list[list[int]], space: DoubledSpace) -> None:
    if len(rows) != space.block_dim or int_rank(rows) != space.block_dim:
        raise InvalidInput("subspace is not of maximal isotropic dimension")
    images = [_form_apply(space, r) for r in rows]
    for i, r in enumerate(rows):
        for img in images[: i + 1]:
            if sum(a * b for a, b in zip(r, img)) != 0:
                raise InvalidInput("the difference form does not vanish on the subspace")


def intersection_invariant(v: IsotropicSubspace) -> int:
    """dim of the intersection with either summand, asserted equal.

    An unequal pair would contradict the defining property of maximal
    isotropic subspaces of a difference form, so it is surfaced as an
    internal invariant violation rather than a value.
    """
    rows = _int_rows(v.basis)
    space = v.space
    _assert_maximal_isotropic(rows, space)
    m = space.block_dim
    k1 = m - int_rank([row[m:] for row in rows])  # kernel of the second projection
    k2 = m - int_rank([row[:m] for row in rows])
    if k1 != k2:
        raise InvariantViolation(
            f"intersection dimensions differ: {k1} versus {k2}"
        )
    return k1


def random_maximal_isotropic(space: DoubledSpace, seed: int) -> IsotropicSubspace:
    """Deterministic pseudo-random maximal isotropic subspace.

    Symplectic spaces move a split subspace by a product of symplectic
    transvections; orthogonal spaces move the diagonal by a Cayley transform
    of a form-antisymmetric matrix, redrawing on the rare singular draw.
    """
    rng = random.Random(seed)
    if space.kind == "symplectic":
        # integer rows throughout: a transvection with parameter p/q sends a
        # row r to q*r + p*pairing*v, the same ray as r + (p/q)*pairing*v
        rows = [[int(x) for x in row] for row in split_subspace(space).basis]
        count = space.half_rank * (2 * space.half_rank + 1)
        for _ in range(count):
            v = [rng.randint(-2, 2) for _ in range(space.dim)]
            while all(x == 0 for x in v):
                v = [rng.randint(-2, 2) for _ in range(space.dim)]
            p, q = rng.randint(-9, 9), rng.randint(1, 4)
            fv = _form_apply(space, v)
            new_rows = []
            for row in rows:
                pairing = sum(a * b for a, b in zip(row, fv))
                new = [q * x + p * pairing * y for x, y in zip(row, v)]
                g = 0
                for x in new:
                    g = _gcd(g, abs(x))
                new_rows.append([x // g for x in new] if g > 1 else new)
            rows = new_rows
        return IsotropicSubspace(space=space, basis=qm(rows))
    for _ in range(32):
        s_rows = [[0] * space.dim for _ in range(space.dim)]
        for i in range(space.dim):
            for j in range(i + 1, space.dim):
                x = rng.randint(-3, 3)
                s_rows[i][j] = x
                s_rows[j][i] = -x
        # the split form squares to the identity, so F^{-1} S = F S is just a
        # signed row shuffle of S
        idx = _form_index(space)
        a = qm([[Q(sign * s_rows[j][c]) for c in range(space.dim)] for j, sign in idx])
        ident = identity_matrix(space.dim)
        i_plus = qm([vadd(r1, r2) for r1, r2 in zip(ident, a)])
        try:
            i_plus_inv = inverse(i_plus)
        except InvalidInput:
            continue
        i_minus = qm([tuple(x - 2 * y for x, y in zip(r1, a_row)) for r1, a_row in zip(i_plus, a)])
        # (I - A) = (I + A) - 2A; the Cayley transform lies in the isometry group
        cayley = mat_mul(i_minus, i_plus_inv)
        base = diagonal_subspace(space).basis
        return IsotropicSubspace(space=space, basis=mat_mul(base, transpose(cayley)))
    raise InvariantViolation("all Cayley transform draws were singular")


def tau_image(v: IsotropicSubspace) -> IsotropicSubspace:
    """Image under the involution fixing the first summand and negating the second."""
    m = v.space.block_dim
    rows = [tuple(list(row[:m]) + [-x for x in row[m:]]) for row in v.basis]
    return IsotropicSubspace(space=v.space, basis=qm(rows))


def subspaces_equal(a: IsotropicSubspace, b: IsotropicSubspace) -> bool:
    stacked = _int_rows(a.basis) + _int_rows(b.basis)
    return int_rank(stacked) == len(a.basis) == len(b.basis)


@dataclass(frozen=True)
class SampleReport:
    lemma: str  # plain-language statement of the verified law
    samples: int
    violations: int
    seed: int


def check_equal_intersections(space: DoubledSpace, sample_count: int, seed: int) -> SampleReport:
    """Sample maximal isotropics and verify equal intersection dimensions."""
    violations = 0
    for i in range(sample_count):
        v = random_maximal_isotropic(space, seed * 1_000_003 + i)
        try:
            intersection_invariant(v)
        except InvariantViolation:
            violations += 1
    return SampleReport(
        lemma="maximal isotropic subspaces meet both summands in equal dimension",
        samples=sample_count,
        violations=violations,
        seed=seed,
    )


def tau_fixed_locus_check(space: DoubledSpace, sample_count: int, seed: int) -> SampleReport:
    """Verify per sample that the involution fixes a subspace exactly when
    its invariant is maximal."""
    if space.kind != "symplectic":
        raise InvalidInput("the involution check applies to symplectic doubled spaces")
    violations = 0
    checked = 0
    samples = [random_maximal_isotropic(space, seed * 2_000_003 + i) for i in range(sample_count)]
    samples.append(split_subspace(space))
    samples.append(diagonal_subspace(space))
    for v in samples:
        checked += 1
        fixed = subspaces_equal(v, tau_image(v))
        if fixed != (intersection_invariant(v) == space.half_rank):
            violations += 1
    return SampleReport(
        lemma="the sign involution fixes a subspace exactly when its invariant is maximal",
        samples=checked,
        violations=violations,
        seed=seed,
    )


def lg_orbit_dim(n: int, k: int) -> int:
    """Dimension of the stratum with invariant k in the symplectic case.

    The closed form total - k^2 is cross-checked against the base-plus-fiber
    count on every call.
    """
    if not 0 <= k <= n:
        raise InvalidInput("the invariant must lie between 0 and the half rank")
    total = 2 * n * n + n
    closed_form = total - k * k
    base = k * (4 * n + 1 - 3 * k)  # two isotropic Grassmannian factors
    fiber = (n - k) * (2 * (n - k) + 1)  # symplectic group of the reduced space
    if base + fiber != closed_form:
        raise InvariantViolation("orbit dimension formulas disagree")
    return closed_form


@dataclass(frozen=True)
class OrbitData:
    total_dim: int
    orbit_dim: int
    codim: int
    base_dim: int
    fiber_dim: int


def og_orbit_data(n: int, k: int) -> OrbitData:
    """Base, fiber and total dimensions of the orthogonal stratum with
    invariant k; the fiber group itself is not asserted."""
    if not 0 <= k <= n:
        raise InvalidInput("the invariant must lie between 0 and the half rank")
    total = n * (2 * n + 1)
    base = k * (4 * n + 1 - 3 * k)
    fiber = (n - k) * (2 * (n - k) + 1)
    orbit = base + fiber
    if orbit != total - k * k:
        raise InvariantViolation("orthogonal orbit dimension formulas disagree")
    return OrbitData(
        total_dim=total,
        orbit_dim=orbit,
        codim=total - orbit,
        base_dim=base,
        fiber_dim=fiber,
    )
