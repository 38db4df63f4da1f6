"""Exact linear algebra over the rationals and the integers.

Everything in the package funnels through this module: Gaussian elimination
and matrix inverses over Fraction, Smith normal form over the integers, and
a Fourier-Motzkin feasibility test that doubles as the witness generator for
all cone computations.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import InvalidInput

Vector = tuple[Q, ...]
Matrix = tuple[Vector, ...]


def qv(entries: Iterable) -> Vector:
    """Coerce a sequence to an exact rational vector."""
    return tuple(Q(x) for x in entries)


def qm(rows: Iterable[Iterable]) -> Matrix:
    return tuple(qv(r) for r in rows)


def dot(x: Sequence[Q], y: Sequence[Q]) -> Q:
    if len(x) != len(y):
        raise InvalidInput("dimension mismatch in dot product")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence[Q]) -> Vector:
    c = Q(c)
    return tuple(c * a for a in x)


def vneg(x: Sequence[Q]) -> Vector:
    return tuple(-a for a in x)


def is_zero_vector(x: Sequence[Q]) -> bool:
    return all(a == 0 for a in x)


def zero_vector(n: int) -> Vector:
    return (Q(0),) * n


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Q(1 if i == j else 0) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Matrix, v: Sequence[Q]) -> Vector:
    """Apply a matrix given by rows to a column vector."""
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def _rref(rows: list[list[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = Q(1) / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    _, pivots = _rref([list(row) for row in m])
    return len(pivots)


def det(m: Matrix) -> Q:
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvalidInput("determinant of a non-square matrix")
    a = [list(row) for row in m]
    result = Q(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return Q(0)
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = -result
        result *= a[c][c]
        inv = Q(1) / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [Q(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m)]
    aug, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise InvalidInput("matrix is singular")
    return tuple(tuple(row[n:]) for row in aug)


def solve(a: Matrix, b: Sequence[Q]) -> Optional[Vector]:
    """One exact solution of A x = b (A given by rows), or None if inconsistent.

    Free variables, if any, are set to zero.
    """
    if not a:
        return zero_vector(0) if is_zero_vector(b) else None
    ncols = len(a[0])
    aug = [list(row) + [Q(bi)] for row, bi in zip(a, b)]
    aug, pivots = _rref(aug)
    for row in aug:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Q(0)] * ncols
    for r, c in enumerate(pivots):
        if c < ncols:
            x[c] = aug[r][ncols]
        elif aug[r][ncols] != 0:
            return None
    return tuple(x)


def coords_in_basis(basis_rows: Matrix, v: Sequence[Q]) -> Optional[Vector]:
    """Coordinates of v in a linearly independent spanning set, or None if off-span."""
    if not basis_rows:
        return () if is_zero_vector(v) else None
    sol = solve(transpose(basis_rows), v)
    if sol is None:
        return None
    if mat_vec(transpose(basis_rows), sol) != tuple(Q(x) for x in v):
        return None
    return sol


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of the right null space of a matrix given by rows."""
    if not m:
        return []
    ncols = len(m[0])
    rows, pivots = _rref([list(row) for row in m])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(tuple(v))
    return basis


# --- integer lattice utilities ---------------------------------------------


def _int_gcd(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(int(v)))
    return g


def primitive_direction(v: Sequence[Q]) -> Vector:
    """Scale a nonzero rational vector to a coprime integer vector, same direction."""
    v = qv(v)
    if is_zero_vector(v):
        raise InvalidInput("zero vector has no direction")
    denom_lcm = 1
    for a in v:
        denom_lcm = denom_lcm * a.denominator // gcd(denom_lcm, a.denominator)
    ints = [int(a * denom_lcm) for a in v]
    g = _int_gcd(ints)
    return tuple(Q(x // g) for x in ints)


def as_int_matrix(m: Matrix) -> list[list[int]]:
    out = []
    for row in m:
        r = []
        for x in row:
            x = Q(x)
            if x.denominator != 1:
                raise InvalidInput("expected an integer matrix")
            r.append(int(x))
        out.append(r)
    return out


def _exgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.

    The pair is canonicalized so that t = 0 whenever a divides b; reduction
    loops rely on divisible entries being cleared by elementary operations.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if a != 0 and old_r != 0:
        step = a // old_r
        rem = old_t % abs(step)
        shift = (old_t - rem) // step
        old_t = rem
        old_s = old_s + shift * (b // old_r)
    return old_r, old_s, old_t


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Smith normal form with column transform.

    Returns (diag, t, t_inv) such that the input equals S @ D @ T for some
    unimodular S, D is diagonal with d1 | d2 | ... (trailing zeros allowed),
    t is the unimodular T and t_inv its inverse.  Only T is tracked because
    cokernel computations never need S: the integer row span of the input is
    the Z-span of {diag[i] * t[i]}.
    """
    a = [[int(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    t = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    t_inv = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    limit = min(nrows, ncols)

    def row_combine(i: int, j: int, s: int, u: int, p: int, q: int) -> None:
        # (row_i, row_j) <- (s*row_i + u*row_j, -q*row_i + p*row_j); untracked
        for c in range(ncols):
            x, y = a[i][c], a[j][c]
            a[i][c] = s * x + u * y
            a[j][c] = -q * x + p * y

    def col_combine(i: int, j: int, s: int, u: int, p: int, q: int) -> None:
        # A <- A*C with C = [[s, -q], [u, p]] on columns (i, j), det C = 1;
        # keep T = C_total^{-1} and T_inv = C_total in sync
        for r in range(nrows):
            x, y = a[r][i], a[r][j]
            a[r][i] = s * x + u * y
            a[r][j] = -q * x + p * y
        for c in range(ncols):
            x, y = t[i][c], t[j][c]
            t[i][c] = p * x + q * y
            t[j][c] = -u * x + s * y
        for r in range(ncols):
            x, y = t_inv[r][i], t_inv[r][j]
            t_inv[r][i] = s * x + u * y
            t_inv[r][j] = -q * x + p * y

    def col_add(i: int, j: int) -> None:
        # A <- A*(I + E_ji): column i += column j
        for r in range(nrows):
            a[r][i] += a[r][j]
        for c in range(ncols):
            t[j][c] -= t[i][c]
        for r in range(ncols):
            t_inv[r][i] += t_inv[r][j]

    def reduce_at(k: int) -> bool:
        pivot = next(((i, j) for i in range(k, nrows) for j in range(k, ncols) if a[i][j] != 0), None)
        if pivot is None:
            return False
        pi, pj = pivot
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for r in range(nrows):
                a[r][k], a[r][pj] = a[r][pj], a[r][k]
            t[k], t[pj] = t[pj], t[k]
            for r in range(ncols):
                t_inv[r][k], t_inv[r][pj] = t_inv[r][pj], t_inv[r][k]
        while True:
            for i in range(k + 1, nrows):
                if a[i][k] != 0:
                    g, s, u = _exgcd(a[k][k], a[i][k])
                    row_combine(k, i, s, u, a[k][k] // g, a[i][k] // g)
            for j in range(k + 1, ncols):
                if a[k][j] != 0:
                    g, s, u = _exgcd(a[k][k], a[k][j])
                    col_combine(k, j, s, u, a[k][k] // g, a[k][j] // g)
            if all(a[i][k] == 0 for i in range(k + 1, nrows)):
                break
        return True

    r = 0
    while r < limit and reduce_at(r):
        r += 1

    # enforce the divisibility chain; each fix strictly shrinks a diagonal entry
    while True:
        bad = next(
            (i for i in range(r - 1) if a[i + 1][i + 1] % a[i][i] != 0),
            None,
        )
        if bad is None:
            break
        col_add(bad, bad + 1)
        k = bad
        while k < r and reduce_at(k):
            k += 1

    for i in range(limit):
        if a[i][i] < 0:
            for c in range(ncols):
                a[i][c] = -a[i][c]
    return [a[i][i] for i in range(limit)], t, t_inv


def saturation_basis(vectors: Sequence[Sequence[Q]]) -> Matrix:
    """Basis of the saturated lattice Z^d intersect span_Q(vectors).

    Input vectors may be rational; they are rescaled to integers first.
    """
    vecs = [primitive_direction(v) for v in vectors if not is_zero_vector(qv(v))]
    if not vecs:
        return ()
    ints = as_int_matrix(tuple(vecs))
    diag, t, _ = smith_normal_form(ints)
    k = sum(1 for d in diag if d != 0)
    return qm(t[:k])


# --- exact linear feasibility (Fourier-Motzkin) -----------------------------

Constraint = tuple[Vector, Q]  # (coeffs, rhs), meaning coeffs . x >= rhs


def _normalize_ineq(coeffs: Sequence[Q], rhs: Q) -> Optional[Constraint]:
    """Scale to primitive integers; None means trivially satisfied."""
    coeffs = qv(coeffs)
    rhs = Q(rhs)
    if is_zero_vector(coeffs):
        return None if rhs <= 0 else (coeffs, Q(1))  # (0 >= 1) encodes infeasible
    denom = 1
    for a in list(coeffs) + [rhs]:
        denom = denom * a.denominator // gcd(denom, a.denominator)
    ints = [int(a * denom) for a in coeffs]
    r = int(rhs * denom)
    g = _int_gcd(ints + ([r] if r else []))
    return tuple(Q(x // g) for x in ints), Q(r // g if g else r)


def feasible(num_vars: int, eqs: Sequence[Constraint], ineqs: Sequence[Constraint]) -> Optional[Vector]:
    """Exact witness for {x : eq . x = rhs, ineq . x >= rhs}, or None.

    Equalities are removed by Gaussian elimination, the remaining system by
    Fourier-Motzkin elimination with back substitution for the witness.
    """
    if eqs:
        aug = [list(c) + [r] for c, r in eqs]
        aug, pivots = _rref(aug)
        for row in aug:
            if all(x == 0 for x in row[:num_vars]) and row[num_vars] != 0:
                return None
        pivot_expr = {}
        for r, c in enumerate(pivots):
            if c >= num_vars:
                return None
            pivot_expr[c] = ([-aug[r][j] for j in range(num_vars)], aug[r][num_vars])
            pivot_expr[c][0][c] = Q(0)
        free_vars = [j for j in range(num_vars) if j not in pivot_expr]
        index_of = {v: i for i, v in enumerate(free_vars)}

        def project(coeffs: Sequence[Q], rhs: Q) -> tuple[list[Q], Q]:
            out = [Q(0)] * len(free_vars)
            const = Q(0)
            for j, a in enumerate(coeffs):
                if a == 0:
                    continue
                if j in pivot_expr:
                    expr, c0 = pivot_expr[j]
                    const += a * c0
                    for f in free_vars:
                        out[index_of[f]] += a * expr[f]
                else:
                    out[index_of[j]] += a
            return out, Q(rhs) - const

        reduced = []
        for coeffs, rhs in ineqs:
            c, r = project(coeffs, rhs)
            reduced.append((tuple(c), r))
        sub = feasible(len(free_vars), (), reduced)
        if sub is None:
            return None
        x = [Q(0)] * num_vars
        for f, val in zip(free_vars, sub):
            x[f] = val
        for c, (expr, c0) in pivot_expr.items():
            x[c] = c0 + sum((expr[j] * x[j] for j in range(num_vars)), Q(0))
        return tuple(x)

    system: set[Constraint] = set()
    for coeffs, rhs in ineqs:
        n = _normalize_ineq(coeffs, rhs)
        if n is not None:
            if is_zero_vector(n[0]):
                return None
            system.add(n)

    active = list(range(num_vars))
    stack: list[tuple[int, list, list]] = []
    while active:
        # eliminate the variable with the fewest pos*neg pairings
        best, best_cost = None, None
        for v in active:
            pos = sum(1 for c, _ in system if c[v] > 0)
            neg = sum(1 for c, _ in system if c[v] < 0)
            cost = pos * neg - pos - neg
            if best_cost is None or cost < best_cost:
                best, best_cost = v, cost
        v = best
        lowers = []  # x_v >= expr
        uppers = []  # x_v <= expr
        rest = []
        for coeffs, rhs in system:
            a = coeffs[v]
            if a == 0:
                rest.append((coeffs, rhs))
            else:
                expr = (tuple(-coeffs[j] / a if j != v else Q(0) for j in range(num_vars)), rhs / a)
                (lowers if a > 0 else uppers).append(expr)
        new_system: set[Constraint] = set(rest)
        for lc, lr in lowers:
            for uc, ur in uppers:
                # lower <= upper: (uc - lc) . x >= lr - ur
                n = _normalize_ineq(vsub(uc, lc), lr - ur)
                if n is not None:
                    if is_zero_vector(n[0]):
                        return None
                    new_system.add(n)
        stack.append((v, lowers, uppers))
        active.remove(v)
        system = new_system

    for coeffs, rhs in system:
        if rhs > 0:
            return None

    x = [Q(0)] * num_vars
    for v, lowers, uppers in reversed(stack):
        lo = max((r + dot(c, x) for c, r in lowers), default=None)
        hi = min((r + dot(c, x) for c, r in uppers), default=None)
        if lo is None and hi is None:
            x[v] = Q(0)
        elif lo is None:
            x[v] = min(hi, Q(0))
        elif hi is None:
            x[v] = max(lo, Q(0))
        else:
            x[v] = (lo + hi) / 2
    return tuple(x)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by gcd-reduced integer elimination."""
    a = []
    for row in rows:
        r = [int(x) for x in row]
        g = _int_gcd(r)
        a.append([x // g for x in r] if g > 1 else r)
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c] != 0:
                g = gcd(a[r][c], a[i][c])
                f1, f2 = a[r][c] // g, a[i][c] // g
                a[i] = [f1 * x - f2 * y for x, y in zip(a[i], a[r])]
                g2 = _int_gcd(a[i])
                if g2 > 1:
                    a[i] = [x // g2 for x in a[i]]
        r += 1
        if r == len(a):
            break
    return r


def minors_gcd(m: Sequence[Sequence[int]], k: int) -> int:
    """gcd of all k x k minors of an integer matrix with k rows."""
    cols = len(m[0]) if m else 0
    g = 0
    for sel in combinations(range(cols), k):
        sub = qm([[row[c] for c in sel] for row in m])
        g = gcd(g, abs(int(det(sub))))
        if g == 1:
            return 1
    return g
