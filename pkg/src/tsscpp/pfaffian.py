"""Pfaffians of skew-symmetric matrices and the minor summation formula.

Matrices are stored 0-based. Index sets handed to the public helpers
(``IndexSet``, ``sub_pfaffian``, ``shuffle_sign``) are 1-based, matching
the usual way the combinatorics is written down.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactmath import (
    Poly,
    det,
    interpolate,
    normalize_number,
    sample_points,
    to_number,
    transpose,
    mat_mul,
    var_key,
)

ORACLE_LIMIT = 12


def _clean(x):
    if isinstance(x, str):
        x = Poly.parse(x)
    if isinstance(x, Poly):
        return x.constant_value() if x.is_constant() else x
    if isinstance(x, Fraction):
        return normalize_number(x)
    if isinstance(x, int):
        return x
    raise TypeError(f"unsupported matrix entry {x!r}")


class SkewMatrix:
    """Square skew-symmetric matrix with int, Fraction or Poly entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_clean(x) for x in r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError("matrix is not square")
            if r[i] != 0:
                raise ValueError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if r[j] != -rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        self._rows = rows

    @classmethod
    def from_upper(cls, n, entry):
        """Build from ``entry(i, j)`` for 1 <= i < j <= n."""
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = _clean(entry(i + 1, j + 1))
                rows[i][j] = v
                rows[j][i] = -v
        return cls(rows)

    @property
    def size(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SkewMatrix({self.to_strings()})"

    def to_strings(self):
        return [[str(x) for x in r] for r in self._rows]

    def restrict(self, indices):
        """Principal submatrix on 0-based ``indices``."""
        return SkewMatrix([[self._rows[i][j] for j in indices] for i in indices])

    def substitute(self, bindings):
        return SkewMatrix([[x.substitute(bindings) if isinstance(x, Poly) else x
                            for x in r] for r in self._rows])

    def scale(self, c):
        return SkewMatrix([[x * c for x in r] for r in self._rows])

    def variables(self):
        names = set()
        for r in self._rows:
            for x in r:
                if isinstance(x, Poly):
                    names.update(x.variables())
        return sorted(names, key=var_key)

    def is_numeric(self):
        return not any(isinstance(x, Poly) for r in self._rows for x in r)


def as_skew(a):
    return a if isinstance(a, SkewMatrix) else SkewMatrix(a)


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing 1-based subset of [1, n]."""

    members: tuple
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(int(x) for x in self.members))
        prev = 0
        for x in self.members:
            if x <= prev:
                raise ValueError(f"index set {self.members} is not strictly increasing and positive")
            prev = x
        if self.n is not None and self.members and self.members[-1] > self.n:
            raise ValueError(f"index {self.members[-1]} exceeds {self.n}")

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def complement(self, n=None):
        n = self.n if n is None else n
        if n is None:
            raise ValueError("complement needs an ambient size")
        s = set(self.members)
        return IndexSet(tuple(i for i in range(1, n + 1) if i not in s), n)


def _members(I):
    return tuple(I.members) if isinstance(I, IndexSet) else tuple(I)


# oracle

def pfaffian_oracle(a):
    """Pfaffian as the signed sum over perfect matchings (size <= 12)."""
    a = as_skew(a)
    n = a.size
    if n > ORACLE_LIMIT:
        raise ValueError(f"oracle refuses size {n} > {ORACLE_LIMIT}")
    if n % 2:
        return 0
    rows = a.rows

    def rec(idx):
        if not idx:
            return 1
        first = idx[0]
        total = 0
        for pos in range(1, len(idx)):
            e = rows[first][idx[pos]]
            if e:
                term = e * rec(idx[1:pos] + idx[pos + 1:])
                total = total + term if pos % 2 else total - term
        return total

    return _finish(rec(tuple(range(n))), a)


def _finish(value, a):
    if isinstance(value, Poly):
        return value.constant_value() if value.is_constant() else value
    return normalize_number(value)


# production

def _pf_numeric(rows):
    n = len(rows)
    if n % 2:
        return 0
    a = [[Fraction(to_number(x)) for x in r] for r in rows]
    result = Fraction(1)
    for k in range(0, n - 1, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j]), None)
        if piv is None:
            return 0
        if piv != k + 1:
            q = k + 1
            a[q], a[piv] = a[piv], a[q]
            for r in a:
                r[q], r[piv] = r[piv], r[q]
            result = -result
        p = a[k][k + 1]
        result *= p
        f = [(i, a[k][i] / p) for i in range(k + 2, n) if a[k][i]]
        if not f:
            continue
        # congruence: row_i -= f_i row_{k+1}, col_i -= f_i col_{k+1}
        rk1 = a[k + 1]
        fmap = dict(f)
        for i in range(k + 2, n):
            row = a[i]
            fi = fmap.get(i)
            for j in range(i + 1, n):
                v = row[j]
                if fi:
                    v -= fi * rk1[j]
                fj = fmap.get(j)
                if fj:
                    v += fj * rk1[i]
                if v != row[j]:
                    row[j] = v
                    a[j][i] = -v
    return normalize_number(result)


def _degree_bound(rows, name):
    """Upper bound for the degree of Pf in ``name``; None if some row vanishes."""
    n = len(rows)
    degs = []
    rowmax = []
    for i in range(n):
        best = -1
        for j in range(n):
            x = rows[i][j]
            if i == j or not x:
                continue
            d = x.degree(name) if isinstance(x, Poly) else 0
            best = max(best, d)
            if j > i:
                degs.append(d)
        if best < 0:
            return None
        rowmax.append(best)
    degs.sort(reverse=True)
    return min(sum(degs[: n // 2]), sum(rowmax) // 2)


def _pf_interp(rows):
    names = set()
    for r in rows:
        for x in r:
            if isinstance(x, Poly):
                names.update(x.variables())
    if not names:
        return _pf_numeric(rows)
    name = min(names, key=var_key)
    bound = _degree_bound(rows, name)
    if bound is None:
        return 0
    # split every entry into its coefficient list in ``name``
    split = [[(x.coefficients(name) if isinstance(x, Poly) else [x]) for x in r] for r in rows]
    points = []
    for x0 in sample_points(bound + 1):
        sub = []
        for r in split:
            row = []
            for cs in r:
                acc = 0
                for c in reversed(cs):
                    acc = acc * x0 + c
                if isinstance(acc, Poly) and acc.is_constant():
                    acc = acc.constant_value()
                row.append(acc)
            sub.append(row)
        points.append((x0, _pf_interp(sub)))
    return interpolate(points, name)


def pfaffian(a):
    """Exact Pfaffian: elimination for numeric matrices, evaluation and
    interpolation for polynomial ones. Odd size gives 0."""
    a = as_skew(a)
    if a.size % 2:
        return 0
    if a.size == 0:
        return 1
    if a.is_numeric():
        return _pf_numeric(a.rows)
    return _finish(_pf_interp(a.rows), a)


def sub_pfaffian(a, I):
    """Pfaffian of the principal submatrix on the 1-based index set ``I``."""
    a = as_skew(a)
    idx = _members(I)
    for i in idx:
        if not 1 <= i <= a.size:
            raise IndexError(f"index {i} out of range 1..{a.size}")
    return pfaffian(a.restrict([i - 1 for i in idx]))


def shuffle_sign(I, n):
    """(-1)^s where s counts inversions of the word (complement of I, I)."""
    idx = set(_members(I))
    if any(not 1 <= i <= n for i in idx):
        raise ValueError("index set not inside [1, n]")
    comp = [i for i in range(1, n + 1) if i not in idx]
    s = sum(1 for a in comp for b in idx if a > b)
    return -1 if s % 2 else 1


def copfaffian_matrix(a):
    """Matrix of gamma(i,j) = (-1)^(j-i-1) Pf(A without rows/cols i, j)."""
    a = as_skew(a)
    n = a.size
    if n % 2:
        raise ValueError("copfaffian matrix needs even size")

    def entry(i, j):
        keep = [k for k in range(n) if k not in (i - 1, j - 1)]
        v = pfaffian(a.restrict(keep))
        return -v if (j - i - 1) % 2 else v

    return SkewMatrix.from_upper(n, entry)


# minor summation

def antidiagonal(n):
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


def msf_block(t, a):
    """The skew matrix [[O_m, J_m T], [-(J_m T)^t, A]] for T m x n, A n x n."""
    a = as_skew(a)
    t = [list(r) for r in t]
    m = len(t)
    n = a.size
    if any(len(r) != n for r in t):
        raise ValueError("shape mismatch between T and A")
    jt = t[::-1]
    size = m + n
    rows = [[0] * size for _ in range(size)]
    for i in range(m):
        for j in range(n):
            v = _clean(jt[i][j])
            rows[i][m + j] = v
            rows[m + j][i] = -v
    for i in range(n):
        for j in range(n):
            rows[m + i][m + j] = a[i, j]
    return SkewMatrix(rows)


def _minor(t, cols):
    return det([[r[c] for c in cols] for r in t])


def minor_summation_check(t, b, border=None):
    """Evaluate both sides of the minor summation formula and its
    Q-matrix forms.

    ``t`` is m x n, ``b`` is n x n skew. Returns a dict with the values and
    a ``match`` flag. The block identity is evaluated when n - m is even;
    the ``T B T^t`` form when m is even; the bordered form (using
    ``border`` as the extra row, default all ones) when m is odd.
    """
    b = as_skew(b)
    t = [tuple(_clean(x) for x in r) for r in t]
    m, n = len(t), b.size
    if any(len(r) != n for r in t):
        raise ValueError("T must have as many columns as B has rows")
    if m > n:
        raise ValueError("T has more rows than columns")
    report = {"m": m, "n": n}
    checks = []
    if (n - m) % 2 == 0:
        lhs = 0
        for cols in combinations(range(n), m):
            I = [c + 1 for c in cols]
            comp = [k for k in range(n) if k not in cols]
            pf = pfaffian(b.restrict(comp))
            if pf:
                term = shuffle_sign(I, n) * pf * _minor(t, cols)
                lhs = lhs + term
        rhs = pfaffian(msf_block(t, b))
        # second block form: [[O, T J_n], [-J_n T^t, J_n B^t J_n]]
        tj = [tuple(r[::-1]) for r in t]
        jbj = SkewMatrix([[b[n - 1 - j, n - 1 - i] for j in range(n)] for i in range(n)])
        rhs_alt = pfaffian(msf_block(tj[::-1], jbj))
        report.update(lhs=lhs, rhs=rhs, rhs_alt=rhs_alt)
        checks += [lhs == rhs, rhs == rhs_alt]
    if m % 2 == 0:
        even_lhs = 0
        for cols in combinations(range(n), m):
            pf = pfaffian(b.restrict(cols))
            if pf:
                even_lhs = even_lhs + pf * _minor(t, cols)
        q = mat_mul(mat_mul(t, b.rows), transpose(t))
        even_rhs = pfaffian(SkewMatrix(q)) if m else 1
        report.update(even_lhs=even_lhs, even_rhs=even_rhs)
        checks.append(even_lhs == even_rhs)
    else:
        border = [1] * n if border is None else [_clean(x) for x in border]
        a0 = [[0] * (n + 1) for _ in range(n + 1)]
        for k in range(n):
            a0[0][k + 1] = border[k]
            a0[k + 1][0] = -border[k]
            for l in range(n):
                a0[k + 1][l + 1] = b[k, l]
        a0 = SkewMatrix(a0)
        odd_lhs = 0
        for cols in combinations(range(n), m):
            pf = pfaffian(a0.restrict((0,) + tuple(c + 1 for c in cols)))
            if pf:
                odd_lhs = odd_lhs + pf * _minor(t, cols)
        t0 = [[1] + [0] * n] + [[0] + list(r) for r in t]
        q = mat_mul(mat_mul(t0, a0.rows), transpose(t0))
        odd_rhs = pfaffian(SkewMatrix(q))
        report.update(odd_lhs=odd_lhs, odd_rhs=odd_rhs)
        checks.append(odd_lhs == odd_rhs)
    report["match"] = all(checks)
    return report
