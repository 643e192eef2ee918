"""Exact linear algebra over ZZ and ZZ/n.

Everything in this module works on plain Python integers, so results are
exact for arbitrary coefficient sizes and for composite moduli.  Matrices
are immutable tuples of row tuples.  Additive subgroups of ZZ^N (or of
(ZZ/n)^N) are represented by a canonical row-style Hermite basis:

* pivots are positive and each row's leading nonzero entry is its pivot,
* entries above a pivot are reduced into [0, pivot),
* over ZZ/n the basis describes the preimage lattice L in ZZ^N with
  n*ZZ^N <= L.  The generators n*e_i are kept implicit: every pivot
  divides n, a pivot equal to n would make its row a multiple of n*e_i,
  so such rows are dropped and the stored rows have entries in [0, n).

Two subgroups are equal iff their stored bases are equal, which makes
sub_equal a plain comparison.  Pivot selection always prefers the
candidate with the smallest absolute value.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class CoeffRing:
    """ZZ (modulus 0) or ZZ/modulus for modulus >= 2."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError("modulus must be 0 (for ZZ) or >= 2")

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def reduce_vec(self, v) -> tuple[int, ...]:
        n = self.modulus
        if n:
            return tuple(e % n for e in v)
        return tuple(int(e) for e in v)

    def is_unit(self, x: int) -> bool:
        if self.modulus:
            return gcd(x, self.modulus) == 1
        return x in (1, -1)

    def inverse(self, x: int) -> int:
        """Multiplicative inverse of a unit."""
        if self.modulus:
            g, s, _ = _xgcd(x, self.modulus)
            if g != 1:
                raise ValueError(f"{x} is not a unit mod {self.modulus}")
            return s % self.modulus
        if x in (1, -1):
            return x
        raise ValueError(f"{x} is not a unit in ZZ")

    def __str__(self) -> str:
        return f"ZZ/{self.modulus}" if self.modulus else "ZZ"


ZZ = CoeffRing(0)


class Matrix:
    """Immutable integer matrix with entries reduced into the coefficient ring."""

    __slots__ = ("rows", "cols", "entries", "coeff")

    def __init__(self, entries, coeff: CoeffRing, cols: int | None = None):
        ents = tuple(coeff.reduce_vec(row) for row in entries)
        if ents:
            cols = len(ents[0])
            if any(len(r) != cols for r in ents):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("cols required for a matrix with no rows")
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "rows", len(ents))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "coeff", coeff)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, coeff: CoeffRing) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], coeff, cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int, coeff: CoeffRing) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], coeff, cols=cols)

    @classmethod
    def from_columns(cls, columns, coeff: CoeffRing, rows: int | None = None) -> "Matrix":
        cols = list(columns)
        if not cols:
            if rows is None:
                raise ValueError("rows required for a matrix with no columns")
            return cls([[] for _ in range(rows)] if rows else [], coeff, cols=0)
        nrows = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(nrows)], coeff, cols=len(cols))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def row_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.entries, self.coeff, rows=self.cols)

    def apply(self, vec) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        red = self.coeff.reduce
        return tuple(red(sum(a * b for a, b in zip(row, vec))) for row in self.entries)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.coeff != other.coeff or self.cols != other.rows:
            raise ValueError("dimension or coefficient mismatch")
        cols = list(zip(*other.entries)) if other.entries else []
        out = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        return Matrix(out, self.coeff, cols=other.cols)

    def add(self, other: "Matrix") -> "Matrix":
        if self.coeff != other.coeff or (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension or coefficient mismatch")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.coeff, cols=self.cols)

    def sub(self, other: "Matrix") -> "Matrix":
        if self.coeff != other.coeff or (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension or coefficient mismatch")
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.coeff, cols=self.cols)

    def scale(self, c: int) -> "Matrix":
        return Matrix([[c * a for a in row] for row in self.entries], self.coeff, cols=self.cols)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.coeff.reduce(1)
        return all(e == (one if i == j else 0)
                   for i, row in enumerate(self.entries) for j, e in enumerate(row))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.coeff == other.coeff
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.coeff, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols} over {self.coeff}: {body})"


@dataclass(frozen=True)
class Submodule:
    """Additive subgroup of coeff^ambient_dim in canonical Hermite form."""

    ambient_dim: int
    coeff: CoeffRing
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def zero(cls, dim: int, coeff: CoeffRing) -> "Submodule":
        return cls(dim, coeff, ())

    @property
    def rank(self) -> int:
        """Number of stored basis rows (the n*e_i generators stay implicit)."""
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __repr__(self) -> str:
        rows = ", ".join(str(list(r)) for r in self.basis)
        return f"Submodule(dim={self.ambient_dim} over {self.coeff}: [{rows}])"


def _hnf_rows_int(rows, ncols: int) -> list[list[int]]:
    """Canonical row Hermite form over ZZ; returns the nonzero rows."""
    work = [list(r) for r in rows if any(r)]
    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        while True:
            cands = [r for r in work if r[col]]
            if not cands:
                break
            if len(cands) == 1:
                pr = cands[0]
                if pr[col] < 0:
                    pr[:] = [-e for e in pr]
                work.remove(pr)
                pivots.append((col, pr))
                break
            cands.sort(key=lambda r: abs(r[col]))
            p = cands[0]
            if p[col] < 0:
                p[:] = [-e for e in p]
            pc = p[col]
            for r in cands[1:]:
                q = r[col] // pc
                if q:
                    r[:] = [a - q * b for a, b in zip(r, p)]
    for idx, (col, prow) in enumerate(pivots):
        d = prow[col]
        for _, earlier in pivots[:idx]:
            q = earlier[col] // d
            if q:
                earlier[:] = [a - q * b for a, b in zip(earlier, prow)]
    return [r for _, r in pivots]


def _hnf_rows_mod(rows, ncols: int, n: int) -> list[list[int]]:
    """Canonical kept rows for the lattice spanned by rows together with n*ZZ^ncols.

    Entries stay reduced mod n throughout, which keeps the arithmetic on
    small ints.  Whenever a pivot d < n is created at some column, the
    implicit generator n*e_col leaves the residue -(n//d)*pivot_row, which
    is pushed back into the working set so no lattice content is lost.
    """
    work = []
    seen = set()
    for r in rows:
        t = tuple(e % n for e in r)
        if any(t) and t not in seen:
            seen.add(t)
            work.append(list(t))
    pivots: list[tuple[int, list[int]]] = []
    for col in range(ncols):
        work = [r for r in work if any(r)]
        while True:
            cands = [r for r in work if r[col]]
            if not cands:
                pr = None
                break
            if len(cands) == 1:
                pr = cands[0]
                break
            cands.sort(key=lambda r: r[col])
            p = cands[0]
            pc = p[col]
            for r in cands[1:]:
                q = r[col] // pc
                r[:] = [(a - q * b) % n for a, b in zip(r, p)]
        if pr is None:
            continue
        g = pr[col]
        d = gcd(g, n)
        if d != g:
            # realize gcd(g, n) at this column; keep the reduced original row,
            # multiplying a row by a zero divisor may drop lattice content
            _, s, _ = _xgcd(g, n)
            newr = [(s * e) % n for e in pr]
            q = g // d
            pr[:] = [(a - q * b) % n for a, b in zip(pr, newr)]
            pr = newr
        else:
            work.remove(pr)
        residue = [(-(n // d) * e) % n for e in pr]
        if any(residue):
            work.append(residue)
        pivots.append((col, pr))
    for idx, (col, prow) in enumerate(pivots):
        d = prow[col]
        for _, earlier in pivots[:idx]:
            q = earlier[col] // d
            if q:
                earlier[:] = [(a - q * b) % n for a, b in zip(earlier, prow)]
    return [r for _, r in pivots]


def hnf(gens, coeff: CoeffRing, dim: int | None = None) -> Submodule:
    """Canonical Hermite basis of the subgroup generated by gens."""
    gens = list(gens)
    if dim is None:
        if not gens:
            raise ValueError("dim required when there are no generators")
        dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise ValueError("generators of mixed length")
    if coeff.modulus:
        rows = _hnf_rows_mod(gens, dim, coeff.modulus)
    else:
        rows = _hnf_rows_int(gens, dim)
    return Submodule(dim, coeff, tuple(tuple(r) for r in rows))


def _kernel_rows(mat: Matrix) -> list[tuple[int, ...]]:
    """Canonical basis rows of {x : mat * x = 0} via HNF of [mat^T | I]."""
    q, p = mat.rows, mat.cols
    aug = []
    for j in range(p):
        row = [mat.entries[i][j] for i in range(q)]
        row.extend(1 if t == j else 0 for t in range(p))
        aug.append(row)
    n = mat.coeff.modulus
    if n:
        reduced = _hnf_rows_mod(aug, q + p, n)
    else:
        reduced = _hnf_rows_int(aug, q + p)
    out = []
    for row in reduced:
        if any(row[:q]):
            continue
        out.append(tuple(row[q:]))
    return out


def kernel(mat: Matrix) -> Submodule:
    """Solution subgroup of mat * x = 0."""
    return Submodule(mat.cols, mat.coeff, tuple(_kernel_rows(mat)))


def image(mat: Matrix) -> Submodule:
    """Subgroup of coeff^rows generated by the columns of mat."""
    return hnf([mat.column(j) for j in range(mat.cols)], mat.coeff, dim=mat.rows)


def _snf_int(a: list[list[int]]):
    """Smith form over ZZ. Returns (diag, U rows, V rows) with U*a*V diagonal.

    U and V are unimodular; diag entries are nonnegative and each divides
    the next.  a is destroyed.
    """
    q = len(a)
    p = len(a[0]) if q else 0
    U = [[1 if i == j else 0 for j in range(q)] for i in range(q)]
    V = [[1 if i == j else 0 for j in range(p)] for i in range(p)]

    def row_op(i, j, c):  # row_i -= c * row_j
        a[i] = [x - c * y for x, y in zip(a[i], a[j])]
        U[i] = [x - c * y for x, y in zip(U[i], U[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for row in a:
            row[i] -= c * row[j]
        for row in V:
            row[i] -= c * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def clear_at(t):
        """Diagonalize position t against everything below and to the right."""
        while True:
            # move the smallest nonzero of the trailing block to (t, t)
            best = None
            for i in range(t, q):
                for j in range(t, p):
                    if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                        best = (abs(a[i][j]), i, j)
            if best is None:
                return False
            _, bi, bj = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                U[t] = [-x for x in U[t]]
            dirty = False
            for i in range(t + 1, q):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, p):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            return True

    r = 0
    while r < min(q, p):
        if not clear_at(r):
            break
        r += 1

    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if dj % di:
                # fold d_{i+1} into column i and rediagonalize the pair
                col_op(i, i + 1, -1)
                clear_at(i)
                clear_at(i + 1)
                changed = True
    diag = [a[i][i] for i in range(min(q, p))]
    return diag, U, V


def snf(mat: Matrix):
    """Smith normal form: (diag, U, V) with U * mat * V = diag(diag).

    U and V are invertible over the coefficient ring.  Over ZZ the diag
    entries are nonnegative with each dividing the next; over ZZ/n they
    are the canonical divisors gcd(d, n) of n (0 meaning n), again with
    each dividing the next.
    """
    coeff = mat.coeff
    work = mat.row_list()
    diag, U, V = _snf_int(work)
    n = coeff.modulus
    if n:
        for i, d in enumerate(diag):
            d %= n
            g = gcd(d, n)
            if g == n:
                g = 0
            if d and g != d:
                # scale column i of V by a unit to land on the canonical divisor
                e = d // g
                m = n // g
                _, u0, _ = _xgcd(e % m, m)
                u = u0 % m
                while gcd(u, n) != 1:
                    u += m
                for row in V:
                    row[i] = (row[i] * u) % n
            diag[i] = g
        diag = [0 if d % n == 0 else d % n for d in diag]
    return diag, Matrix(U, coeff, cols=mat.rows), Matrix(V, coeff, cols=mat.cols)


def _solve_int(mat_rows, q: int, p: int, b):
    """One ZZ solution of M x = b plus the ZZ kernel generators, or None."""
    diag, U, V = _snf_int([list(r) for r in mat_rows])
    c = [sum(U[i][k] * b[k] for k in range(q)) for i in range(q)]
    z = [0] * p
    for i in range(q):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i]:
                return None
        elif i < p:
            if c[i] % d:
                return None
            z[i] = c[i] // d
    x = tuple(sum(V[i][k] * z[k] for k in range(p)) for i in range(p))
    ker = []
    for i in range(p):
        if i >= len(diag) or diag[i] == 0:
            ker.append(tuple(V[t][i] for t in range(p)))
    return x, ker


def solve(mat: Matrix, b):
    """Solve mat * x = b exactly.

    Returns None when no solution exists, otherwise (x, K) where x is one
    solution and K is the Submodule of homogeneous solutions, so the full
    solution set is x + K.
    """
    if len(b) != mat.rows:
        raise ValueError("dimension mismatch")
    coeff = mat.coeff
    q, p = mat.rows, mat.cols
    n = coeff.modulus
    if not n:
        res = _solve_int(mat.entries, q, p, list(b))
        if res is None:
            return None
        x, ker = res
        return x, hnf(ker, coeff, dim=p)
    # lift to ZZ with explicit n*e_i columns so solvability mod n is exact
    rows = [list(r) + [n if i == j else 0 for j in range(q)]
            for i, r in enumerate(mat.entries)]
    res = _solve_int(rows, q, p + q, [coeff.reduce(e) for e in b])
    if res is None:
        return None
    x, ker = res
    part = coeff.reduce_vec(x[:p])
    gens = [k[:p] for k in ker]
    return part, hnf(gens, coeff, dim=p)


def det(mat: Matrix) -> int:
    """Determinant, reduced into the coefficient ring (Bareiss, exact)."""
    if mat.rows != mat.cols:
        raise ValueError("determinant of a non-square matrix")
    nn = mat.rows
    if nn == 0:
        return mat.coeff.reduce(1)
    a = [list(r) for r in mat.entries]
    sign = 1
    prev = 1
    for k in range(nn - 1):
        if a[k][k] == 0:
            for i in range(k + 1, nn):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return mat.coeff.reduce(0)
        for i in range(k + 1, nn):
            for j in range(k + 1, nn):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return mat.coeff.reduce(sign * a[nn - 1][nn - 1])


def matrix_inverse(mat: Matrix):
    """Inverse over the coefficient ring, or None when not invertible."""
    if mat.rows != mat.cols:
        return None
    cols = []
    nn = mat.rows
    for j in range(nn):
        e = [1 if i == j else 0 for i in range(nn)]
        res = solve(mat, e)
        if res is None:
            return None
        cols.append(res[0])
    return Matrix.from_columns(cols, mat.coeff, rows=nn)


def _check_compatible(a: Submodule, b: Submodule) -> None:
    if a.ambient_dim != b.ambient_dim or a.coeff != b.coeff:
        raise ValueError("submodules live in different ambient modules")


def sub_member(s: Submodule, v) -> bool:
    """Is the vector v in s?  Greedy reduction against the triangular basis."""
    if len(v) != s.ambient_dim:
        raise ValueError("dimension mismatch")
    n = s.coeff.modulus
    v = list(s.coeff.reduce_vec(v))
    for row in s.basis:
        col = next(i for i, e in enumerate(row) if e)
        d = row[col]
        if v[col] % d:
            return False
        q = v[col] // d
        if q:
            if n:
                v = [(a - q * b) % n for a, b in zip(v, row)]
            else:
                v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def sub_contains(a: Submodule, b: Submodule) -> bool:
    """Is b a subgroup of a?"""
    _check_compatible(a, b)
    return all(sub_member(a, row) for row in b.basis)


def sub_equal(a: Submodule, b: Submodule) -> bool:
    _check_compatible(a, b)
    return a.basis == b.basis


def sub_add(a: Submodule, b: Submodule) -> Submodule:
    _check_compatible(a, b)
    return hnf(list(a.basis) + list(b.basis), a.coeff, dim=a.ambient_dim)


def sub_intersect(a: Submodule, b: Submodule) -> Submodule:
    """Intersection, computed from the ZZ kernel of the stacked generators."""
    _check_compatible(a, b)
    dim = a.ambient_dim
    coeff = a.coeff
    n = coeff.modulus
    rows_a = [list(r) for r in a.basis]
    rows_b = [list(r) for r in b.basis]
    if n:
        for i in range(dim):
            unit = [n if j == i else 0 for j in range(dim)]
            rows_a.append(list(unit))
            rows_b.append(list(unit))
    if not rows_a or not rows_b:
        return Submodule.zero(dim, coeff)
    s, t = len(rows_a), len(rows_b)
    cols = [r for r in rows_a] + [[-e for e in r] for r in rows_b]
    m = Matrix.from_columns(cols, ZZ, rows=dim)
    gens = []
    for lam in kernel(m).basis:
        vec = [0] * dim
        for i in range(s):
            if lam[i]:
                vec = [x + lam[i] * y for x, y in zip(vec, rows_a[i])]
        gens.append(vec)
    return hnf(gens, coeff, dim=dim)
