"""Plane-partition classes, the bijections between them, and statistics.

Conventions (K = n + m throughout):

* A CSPP(n, m) is a column-strict plane partition with at most n columns
  whose parts in column j are at most K - j.
* A TSPP(n, m) is a shifted triangle b[i][j], 1 <= i <= j <= K-1, weakly
  decreasing along rows and columns, with max(n-i, 0) <= b[i][j] <= n.
* A TSSCPP(n, m) lives in the cube of side 2K and is stored as a
  boolean occupancy array.
* A monotone triangle of order n has rows 1..n from the bottom; row i
  holds m[i][i..n] and the bottom row is 1..n.
"""

import re
from dataclasses import dataclass
from itertools import permutations, product

from .exactmath import Poly

SIZE_LIMIT = 9
CUBE_LIMIT = 4
MT_LIMIT = 7


def _check_size(n, m, limit=SIZE_LIMIT):
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if n + m > limit:
        raise ValueError(f"n+m = {n + m} exceeds the enumeration guard {limit}")


# ---------------------------------------------------------------- objects

@dataclass(frozen=True)
class PlanePartition:
    """Rows of positive parts; ``n`` and ``m`` tag the CSPP class."""

    rows: tuple
    n: int | None = None
    m: int | None = None

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(x <= 0 for x in r):
                raise ValueError("parts must be positive")
            if any(a < b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not weakly decreasing")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper) or any(a < b for a, b in zip(upper, lower)):
                raise ValueError("columns are not weakly decreasing")

    @classmethod
    def from_columns(cls, cols, n=None, m=None):
        depth = max((len(c) for c in cols), default=0)
        rows = [tuple(c[i] for c in cols if len(c) > i) for i in range(depth)]
        return cls(tuple(rows), n, m)

    @property
    def K(self):
        return self.n + self.m

    @property
    def columns(self):
        width = len(self.rows[0]) if self.rows else 0
        return tuple(tuple(r[j] for r in self.rows if len(r) > j) for j in range(width))

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self):
        return sum(sum(r) for r in self.rows)

    def part(self, i, j):
        """c_{ij}, 1-based, 0 outside the diagram."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return 0

    def is_cspp(self):
        if self.n is None or self.m is None:
            return False
        cols = self.columns
        if len(cols) > self.n:
            return False
        for j, col in enumerate(cols, start=1):
            if any(a <= b for a, b in zip(col, col[1:])):
                return False
            if col and col[0] > self.K - j:
                return False
        return True

    def to_json(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        if not self.rows:
            return "()"
        return "/".join(",".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class ShiftedPP:
    """Shifted triangle; ``rows[i-1]`` holds b[i][i..K-1]."""

    rows: tuple
    n: int
    m: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        L = self.n + self.m - 1
        if len(rows) != L or any(len(r) != L - i for i, r in enumerate(rows)):
            raise ValueError("wrong shifted shape")

    @property
    def K(self):
        return self.n + self.m

    def b(self, i, j):
        """Entry with the boundary conventions b[i][K] = n-i, b[0][j] = n."""
        if i == 0:
            return self.n
        if j == self.K:
            return self.n - i
        return self.rows[i - 1][j - i]

    def is_valid(self):
        n, L = self.n, self.K - 1
        for i in range(1, L + 1):
            for j in range(i, L + 1):
                v = self.b(i, j)
                if not max(n - i, 0) <= v <= n:
                    return False
                if j < L and v < self.b(i, j + 1):
                    return False
                if i < j and v < self.b(i + 1, j):
                    return False
        return True

    def to_json(self):
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class MonotoneTriangle:
    """``rows[i-1]`` is (m[i][i], ..., m[i][n]); rows[0] is the bottom row."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @property
    def n(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i - 1][j - i]

    @property
    def top(self):
        return self.rows[-1][0]

    def is_valid(self):
        n = self.n
        if self.rows[0] != tuple(range(1, n + 1)):
            return False
        for i in range(1, n + 1):
            r = self.rows[i - 1]
            if len(r) != n - i + 1 or any(a >= b for a, b in zip(r, r[1:])):
                return False
            if i < n:
                for j in range(i + 1, n + 1):
                    v = self.entry(i + 1, j)
                    if not self.entry(i, j - 1) <= v <= self.entry(i, j):
                        return False
        return True

    def to_json(self):
        return [list(r) for r in self.rows]


class Tsscpp3D:
    """Occupancy cube of side 2(n+m), indexed 1-based by (x, y, z)."""

    __slots__ = ("n", "m", "side", "cells")

    def __init__(self, cells, n, m):
        self.n, self.m = n, m
        self.side = 2 * (n + m)
        self.cells = frozenset(cells)

    def __contains__(self, p):
        return tuple(p) in self.cells

    def __eq__(self, other):
        return isinstance(other, Tsscpp3D) and (self.n, self.m, self.cells) == (other.n, other.m, other.cells)

    def __hash__(self):
        return hash((self.n, self.m, self.cells))

    def height(self, x, y):
        return sum(1 for z in range(1, self.side + 1) if (x, y, z) in self.cells)

    def heights(self):
        s = self.side
        return tuple(tuple(self.height(x, y) for y in range(1, s + 1)) for x in range(1, s + 1))

    def kappa(self, p):
        s1 = self.side + 1
        return tuple(s1 - c for c in p)

    def violations(self):
        """Names of the defining conditions that fail (empty if valid)."""
        bad = []
        s, K = self.side, self.n + self.m
        cells = self.cells
        if any(not all(1 <= c <= s for c in p) for p in cells):
            bad.append("range")
        for p in cells:
            for d in range(3):
                if p[d] > 1:
                    q = list(p)
                    q[d] -= 1
                    if tuple(q) not in cells:
                        bad.append("order ideal")
                        break
            else:
                continue
            break
        if any(q not in cells for p in cells for q in permutations(p)):
            bad.append("totally symmetric")
        for p in product(range(1, s + 1), repeat=3):
            if (p in cells) == (self.kappa(p) in cells):
                bad.append("self-complementary")
                break
        # cells of the central box of side 2m must lie in the minus region
        lo, hi = self.n + 1, self.n + 2 * self.m
        for p in cells:
            if all(lo <= c <= hi for c in p) and sum(c > K for c in p) > 1:
                bad.append("condition T")
                break
        return bad

    def is_valid(self):
        return not self.violations()


# ---------------------------------------------------------------- enumeration

def _strict_columns(maxval, maxlen, caps):
    """Strictly decreasing positive tuples of length <= maxlen with
    entry i at most min(maxval, caps[i])."""
    out = [()]

    def rec(prefix, bound):
        i = len(prefix)
        if i == maxlen:
            return
        hi = min(bound, caps[i] if i < len(caps) else bound)
        for v in range(hi, 0, -1):
            col = prefix + (v,)
            out.append(col)
            rec(col, v - 1)

    rec((), maxval)
    return out


def enumerate_cspp(n, m):
    """All of CSPP(n, m), sorted lexicographically by the tuple of columns."""
    _check_size(n, m)
    K = n + m
    found = []

    def rec(cols):
        found.append(tuple(cols))
        j = len(cols) + 1
        if j > n or K - j < 1:
            return
        prev = cols[-1] if cols else None
        maxlen = len(prev) if prev is not None else K
        caps = list(prev) if prev is not None else []
        for col in _strict_columns(K - j, maxlen, caps):
            if col:
                rec(cols + [col])

    rec([])
    found.sort()
    return [PlanePartition.from_columns(c, n, m) for c in found]


def enumerate_tspp(n, m):
    """All of TSPP(n, m) in descending lexicographic order of rows."""
    _check_size(n, m)
    L = n + m - 1
    cells = [(i, j) for i in range(1, L + 1) for j in range(i, L + 1)]
    vals = {}
    out = []

    def rec(k):
        if k == len(cells):
            rows = tuple(tuple(vals[(i, j)] for j in range(i, L + 1)) for i in range(1, L + 1))
            out.append(ShiftedPP(rows, n, m))
            return
        i, j = cells[k]
        hi = n
        if j > i:
            hi = min(hi, vals[(i, j - 1)])
        if i > 1:
            hi = min(hi, vals[(i - 1, j)])
        for v in range(hi, max(n - i, 0) - 1, -1):
            vals[(i, j)] = v
            rec(k + 1)
        vals.pop((i, j), None)

    rec(0)
    return out


def enumerate_mt(n):
    """Monotone triangles of order n, sorted by rows from the bottom up."""
    if not 1 <= n <= MT_LIMIT:
        raise ValueError(f"need 1 <= n <= {MT_LIMIT}")
    out = []

    def rec(rows):
        i = len(rows)
        if i == n:
            out.append(MonotoneTriangle(tuple(rows)))
            return
        below = rows[-1]
        # next row has n-i entries; entry at column j lies in [below[j-1], below[j]]
        ranges = [range(below[k], below[k + 1] + 1) for k in range(len(below) - 1)]
        for cand in product(*ranges):
            if all(a < b for a, b in zip(cand, cand[1:])):
                rec(rows + [cand])

    rec([tuple(range(1, n + 1))])
    out.sort(key=lambda t: t.rows)
    return out


def _cube_member_factory(gamma_member, K):
    """Membership in the full cube from the (+,-,+) region predicate."""
    s1 = 2 * K + 1

    def two_plus(p, plus):
        minus = plus.index(False)
        x, z = (p[d] - K for d in range(3) if d != minus)
        return gamma_member(x, p[minus], z)

    def member(p):
        plus = [c > K for c in p]
        np = sum(plus)
        if np == 0:
            return True
        if np == 3:
            return False
        if np == 2:
            return two_plus(p, plus)
        q = tuple(s1 - c for c in p)
        return not two_plus(q, [not b for b in plus])

    return member


def _is_order_ideal(cells):
    for (x, y, z) in cells:
        if (x > 1 and (x - 1, y, z) not in cells) or (y > 1 and (x, y - 1, z) not in cells) \
                or (z > 1 and (x, y, z - 1) not in cells):
            return False
    return True


def _cube_from_member(member, n, m):
    s = 2 * (n + m)
    cells = [p for p in product(range(1, s + 1), repeat=3) if member(p)]
    return Tsscpp3D(cells, n, m)


def enumerate_tsscpp(n, m):
    """TSSCPP(n, m) found directly from the cube conditions.

    Candidates come from every x<->z symmetric order ideal of the
    (+,-,+) block, which determines the whole cube; each candidate is
    then checked against the full definition.
    """
    _check_size(n, m, CUBE_LIMIT)
    K = n + m
    found = []
    keys = [(x, z) for x in range(1, K + 1) for z in range(x, K + 1)]

    def rec(k, h):
        if k == len(keys):
            hh = dict(h)
            gm = lambda x, y, z: y <= hh[(min(x, z), max(x, z))]
            a = _cube_from_member(_cube_member_factory(gm, K), n, m)
            # cheap necessary test first, then the full definition
            if _is_order_ideal(a.cells) and a.is_valid():
                found.append(a)
            return
        x, z = keys[k]
        hi = K
        if x > 1:
            hi = min(hi, h[(x - 1, z)])
        if z > x:
            hi = min(hi, h[(x, z - 1)])
        for v in range(hi, -1, -1):
            h[(x, z)] = v
            rec(k + 1, h)
        del h[(x, z)]

    rec(0, {})
    return found


# ---------------------------------------------------------------- bijections

def _require_cspp(c):
    if not isinstance(c, PlanePartition) or not c.is_cspp():
        raise ValueError(f"{c} is not a tagged CSPP")


def cspp_to_tspp(c):
    """n - b[i][j] = #{l : c[K-j][l] >= 1 - i + j}."""
    _require_cspp(c)
    n, K = c.n, c.K
    L = K - 1
    rows = []
    for i in range(1, L + 1):
        row = []
        for j in range(i, L + 1):
            line = c.rows[K - j - 1] if K - j <= len(c.rows) else ()
            row.append(n - sum(1 for v in line if v >= 1 - i + j))
        rows.append(tuple(row))
    return ShiftedPP(tuple(rows), c.n, c.m)


def tspp_to_cspp(b):
    """Inverse of cspp_to_tspp: c[x][y] counts z with b[K+1-x-z][K-x] <= n-y."""
    if not b.is_valid():
        raise ValueError("not a valid TSPP")
    n, K = b.n, b.K
    rows = []
    for x in range(1, K):
        row = []
        for y in range(1, n + 1):
            v = sum(1 for z in range(1, K - x + 1) if b.b(K + 1 - x - z, K - x) <= n - y)
            if v:
                row.append(v)
        rows.append(tuple(row))
    return PlanePartition(tuple(rows), n, b.m)


def _self_conjugate_from_strict(strict):
    """Self-conjugate partition whose diagonal hooks give ``strict``."""
    d = len(strict)
    lam = [strict[i] + i for i in range(d)]
    i = d + 1
    while True:
        v = sum(1 for k in range(d) if lam[k] >= i)
        if not v:
            break
        lam.append(v)
        i += 1
    return lam


def cspp_to_tsscpp(c):
    """Build the TSSCPP whose (+,-,+) block encodes the columns of c."""
    _require_cspp(c)
    n, m, K = c.n, c.m, c.K
    if K > CUBE_LIMIT:
        raise ValueError(f"cube construction limited to n+m <= {CUBE_LIMIT}")
    gamma = {}
    for j, col in enumerate(c.columns, start=1):
        for i, v in enumerate(_self_conjugate_from_strict(col), start=1):
            gamma[(i, j)] = v
    gm = lambda x, y, z: gamma.get((x, y), 0) >= z
    a = _cube_from_member(_cube_member_factory(gm, K), n, m)
    bad = a.violations()
    if bad:
        raise ValueError(f"reconstruction failed: {bad}")
    return a


def tsscpp_to_cspp(a):
    """c[i][j] = max(a[i+K][j] - K - i + 1, 0)."""
    n, m = a.n, a.m
    K = n + m
    rows = []
    for i in range(1, K + 1):
        row = []
        for j in range(1, K + 1):
            v = a.height(i + K, j) - K - i + 1
            if v > 0:
                row.append(v)
        rows.append(tuple(row))
    return PlanePartition(tuple(rows), n, m)


def tsscpp_to_tspp(a):
    """b[i][j] = a[i+1][j+1] - (n + 2m)."""
    n, m = a.n, a.m
    L = n + m - 1
    rows = tuple(tuple(a.height(i + 1, j + 1) - (n + 2 * m) for j in range(i, L + 1))
                 for i in range(1, L + 1))
    return ShiftedPP(rows, n, m)


def base_tsscpp(n, m):
    """The cube filled exactly where at most one coordinate exceeds n+m."""
    K = n + m
    return _cube_from_member(lambda p: sum(c > K for c in p) <= 1, n, m)


def tsscpp_moves(a):
    """Count orbits where ``a`` differs from the base cube, split by
    orbit type (all coordinates equal, two equal, all distinct)."""
    base = base_tsscpp(a.n, a.m)
    s1 = a.side + 1
    seen = set()
    counts = [0, 0, 0]
    for p in product(range(1, a.side + 1), repeat=3):
        if p in seen:
            continue
        orbit = set(permutations(p)) | set(permutations(tuple(s1 - c for c in p)))
        seen |= orbit
        if any((q in a.cells) != (q in base.cells) for q in orbit):
            distinct = len(set(p))
            counts[distinct - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------- statistics

def ubar(c, r):
    """Parts equal to r plus saturated first-row parts smaller than r."""
    K = c.K
    if not 1 <= r <= K:
        raise ValueError(f"r must lie in [1, {K}]")
    count = sum(1 for row in c.rows for v in row if v == r)
    count += sum(1 for k in range(1, r) if c.part(1, K - k) == k and K - k >= 1)
    return count


def u_stat(b, r):
    """U_r on a shifted triangle, using the boundary conventions."""
    n, K = b.n, b.K
    if not 1 <= r <= K:
        raise ValueError(f"r must lie in [1, {K}]")
    total = sum(b.b(t, t + r - 1) - b.b(t, t + r) for t in range(1, K - r + 1))
    total += sum(1 for t in range(K - r + 1, K) if b.b(t, K - 1) > n - t)
    return total


def v_rows(c):
    return sum(1 for r in c.rows if len(r) % 2)


def v_cols(c):
    return sum(1 for col in c.columns if len(col) % 2)


def profile(c):
    return sum(c.rows[0]) if c.rows else 0


def moves(c):
    """(m1, m2, m3) as stated: no diagonal moves, first-row sum, the rest."""
    p = profile(c)
    return (0, p, c.size - p)


def num_parts(c):
    return sum(len(r) for r in c.rows)


def cube_moves(c):
    """(m1, m2, m3) as counted on the cube image: the two-equal-coordinate
    orbits are the diagonal cells of the (+,-,+) block, one per part of c."""
    p = num_parts(c)
    return (0, p, c.size - p)


def multiplicity(c, i):
    return sum(1 for row in c.rows for v in row if v == i)


def stat(obj, which, r=None):
    """Statistic by name: U, Ubar (with r), VR, VC, profile, size, moves, top."""
    if isinstance(obj, ShiftedPP):
        if which == "U":
            return u_stat(obj, r)
        if which == "Ubar":
            return obj.K - 1 - u_stat(obj, r)
        raise ValueError(f"statistic {which} does not apply to a TSPP")
    if isinstance(obj, MonotoneTriangle):
        if which == "top":
            return obj.top - 1
        raise ValueError(f"statistic {which} does not apply to a monotone triangle")
    if which == "Ubar":
        return ubar(obj, r)
    if which == "U":
        return u_stat(cspp_to_tspp(obj), r)
    if which == "mult":
        return multiplicity(obj, r)
    table = {"VR": v_rows, "VC": v_cols, "profile": profile,
             "size": lambda c: c.size, "moves": moves,
             "cube_moves": cube_moves, "parts": num_parts}
    if which not in table:
        raise ValueError(f"unknown statistic {which!r}")
    return table[which](obj)


# ---------------------------------------------------------------- filters

def rows_even(c):
    return all(len(r) % 2 == 0 for r in c.rows)


def cols_even(c):
    return all(len(col) % 2 == 0 for col in c.columns)


def at_most_k_rows(k):
    return lambda c: len(c.rows) <= k


def cspp_kxy(k, x, y):
    def pred(c):
        if len(c.rows) > k:
            return False
        if k == 0:
            return (x, y) == (0, 0)
        K = c.K
        row_len = len(c.rows[k - 1]) if len(c.rows) >= k else 0
        saturated = sum(1 for j, v in enumerate(c.rows[0] if c.rows else (), start=1) if v == K - j)
        return row_len == K - k - x and saturated == y
    return pred


def cspp_kxy_image(k, x, y):
    """The (k, x, y) class carried over from TSPP^{k,x,y} by the bijection:
    at most k rows, largest part of row k equal to n+m-k-x, and y equal to
    the saturated parts among the first n-1 columns plus c_{1n}."""
    def pred(c):
        if len(c.rows) > k:
            return False
        if k == 0:
            return x == 0 and y == _image_y(c)
        K = c.K
        top = c.rows[k - 1][0] if len(c.rows) >= k else 0
        return top == K - k - x and y == _image_y(c)
    return pred


def _image_y(c):
    n, K = c.n, c.K
    first = c.rows[0] if c.rows else ()
    sat = sum(1 for j, v in enumerate(first[:n - 1], start=1) if v == K - j)
    return sat + (first[n - 1] if len(first) >= n else 0)


def tspp_k(k):
    def pred(b):
        K = b.K
        return all(b.b(i, j) == b.n for j in range(1, K - k) for i in range(1, j + 1))
    return pred


def tspp_kxy(k, x, y):
    def pred(b):
        if not tspp_k(k)(b):
            return False
        n, K = b.n, b.K
        col = K - k
        xs = sum(1 for i in range(1, col + 1) if b.b(i, col) == n) if 1 <= col <= K - 1 else 0
        ys = sum(1 for i in range(1, K) if b.b(i, K - 1) == max(n - i, 0))
        return xs == x and ys == y
    return pred


def mt_k(k):
    def pred(t):
        n = t.n
        return all(t.entry(i, j) == j - i + 1 for j in range(1, n - k + 1) for i in range(1, j + 1))
    return pred


def mt_kxy(k, x, y):
    def pred(t):
        if not mt_k(k)(t):
            return False
        n = t.n
        if k == 0:
            xs = 0
        else:
            col = n - k + 1
            xs = sum(1 for i in range(1, col + 1) if t.entry(i, col) == col - i + 1) - 1
        ys = sum(1 for i in range(1, n + 1) if t.entry(i, n) == n) - 1
        return xs == x and ys == y
    return pred


_NAMED = {"rows_even": rows_even, "cols_even": cols_even}


def subset_filter(objects, predicate, *args):
    """Filter keeping order; ``predicate`` is a callable or one of
    rows_even, cols_even, at_most_k_rows, cspp_kxy, tspp_k, tspp_kxy,
    mt_k, mt_kxy (the last six take their parameters in ``args``)."""
    if isinstance(predicate, str):
        factories = {"at_most_k_rows": at_most_k_rows, "cspp_kxy": cspp_kxy,
                     "tspp_k": tspp_k, "tspp_kxy": tspp_kxy, "mt_k": mt_k, "mt_kxy": mt_kxy}
        if predicate in _NAMED:
            predicate = _NAMED[predicate]
        elif predicate in factories:
            predicate = factories[predicate](*args)
        else:
            raise ValueError(f"unknown filter {predicate!r}")
    return [o for o in objects if predicate(o)]


def mt_subset(n, k):
    return subset_filter(enumerate_mt(n), mt_k(k))


def mt_subset_kxy(n, k, x, y):
    return subset_filter(enumerate_mt(n), mt_kxy(k, x, y))


def mt_polynomial(n, k, t="t"):
    """Sum over MT_n^k of t^(top - 1)."""
    if not 0 <= k <= n - 1:
        raise ValueError("need 0 <= k <= n-1")
    t = Poly.var(t) if isinstance(t, str) else t
    total = Poly()
    for tri in mt_subset(n, k):
        total = total + t ** (tri.top - 1)
    return total


# ---------------------------------------------------------------- weights

_STAT_RE = re.compile(r"^(Ubar|U|VR|VC|profile|size|top|mult)(\d*)$")


@dataclass(frozen=True)
class WeightSpec:
    """Which statistic feeds which variable, plus sign weights.

    ``factors`` holds (statistic, variable) pairs where the statistic is
    a name like "Ubar1", "U2", "VC", "VR", "top" or "mult3". ``signs``
    may contain "size" for (-1)^|c| and "profile" for (-1)^profile(c).
    """

    factors: tuple = ()
    signs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(tuple(f) for f in self.factors))
        object.__setattr__(self, "signs", tuple(self.signs))
        names = [v for _, v in self.factors]
        if len(set(names)) != len(names):
            raise ValueError("each variable may be used only once")
        for s, _ in self.factors:
            if not _STAT_RE.match(s):
                raise ValueError(f"unknown statistic {s!r}")
        for s in self.signs:
            if s not in ("size", "profile"):
                raise ValueError(f"unknown sign weight {s!r}")

    @classmethod
    def parse(cls, text):
        """Parse e.g. "(-1)^size * t^Ubar1 * u^VC"."""
        factors, signs = [], []
        for piece in text.replace(" ", "").split("*"):
            if not piece or piece == "1":
                continue
            m = re.fullmatch(r"\(-1\)\^(\w+)", piece)
            if m:
                signs.append(m.group(1))
                continue
            m = re.fullmatch(r"(\w+)\^(\w+)", piece)
            if not m:
                raise ValueError(f"cannot parse weight factor {piece!r}")
            factors.append((m.group(2), m.group(1)))
        return cls(tuple(factors), tuple(signs))

    def monomial(self, obj):
        sign = 1
        for s in self.signs:
            v = obj.size if s == "size" else profile(obj)
            if v % 2:
                sign = -sign
        exps = {}
        for s, v in self.factors:
            name, num = _STAT_RE.match(s).groups()
            e = stat(obj, name, int(num) if num else None)
            if e:
                exps[v] = e
        mono = Poly.const(sign)
        for v, e in exps.items():
            mono = mono * Poly.var(v) ** e
        return mono


def brute_gf(objects, w):
    """Sum over ``objects`` of the monomial described by ``w``."""
    if isinstance(w, str):
        w = WeightSpec.parse(w)
    total = Poly()
    for obj in objects:
        total = total + w.monomial(obj)
    return total
