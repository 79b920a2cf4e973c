"""Constructors for the named matrix families.

Rectangular B and M matrices are 0-indexed: rows i = 0..n-1 and columns
j = 0..n+N-1. Skew families are described 1-indexed (entry (i, j) for
i < j) and stored 0-based inside ``SkewMatrix``.
"""

from .exactmath import Poly, binom
from .pfaffian import IndexSet, SkewMatrix, msf_block, sub_pfaffian

SKEW_KINDS = ("S", "Sbar", "R", "C", "Rbar", "Cbar", "L", "Lbar")
B_MODES = ("plain", "t", "tu", "general")


def default_N(n, m, k=0):
    """Smallest even N with N >= n+m-1 and N >= k."""
    need = max(n + m - 1, k, 0)
    return need + (need % 2)


def elementary(r, args):
    """e_r of the list ``args`` (ring elements)."""
    if r < 0 or r > len(args):
        return 0
    e = [1] + [0] * r
    for a in args:
        for k in range(r, 0, -1):
            if e[k - 1]:
                e[k] = e[k] + a * e[k - 1]
    return e[r]


def _tv(name):
    return Poly.var(name) if isinstance(name, str) else name


def build_b(n, m, N, mode="t", params=None):
    """The n x (n+N) matrix B.

    Modes: ``plain`` gives binom(i+m, j-i); ``t`` the singly refined
    entries; ``tu`` the doubly refined entries; ``general`` the
    elementary symmetric entries at weighted arguments, with
    ``params = (t_values, x_values)`` of length n+m each.
    ``params`` may also supply ``{"t": ..., "u": ...}`` for the t and tu
    modes.
    """
    if n < 1 or m < 0 or N < 0:
        raise ValueError("need n >= 1, m >= 0, N >= 0")
    params = params or {}
    cols = n + N
    rows = []
    if mode == "plain":
        for i in range(n):
            rows.append(tuple(binom(i + m, j - i) for j in range(cols)))
    elif mode == "t":
        t = _tv(params.get("t", "t"))
        for i in range(n):
            p = i + m
            row = []
            for j in range(cols):
                if p == 0:
                    row.append(1 if j == 0 else 0)
                else:
                    row.append(binom(p - 1, j - i) + binom(p - 1, j - i - 1) * t)
            rows.append(tuple(row))
    elif mode == "tu":
        t = _tv(params.get("t", "t"))
        u = _tv(params.get("u", "u"))
        for i in range(n):
            p = i + m
            row = []
            for j in range(cols):
                r = j - i
                if p == 0:
                    row.append(1 if j == 0 else 0)
                elif p == 1:
                    row.append(binom(0, r) + binom(0, r - 1) * t * u)
                else:
                    row.append(binom(p - 2, r) + binom(p - 2, r - 1) * (t + u)
                               + binom(p - 2, r - 2) * t * u)
            rows.append(tuple(row))
    elif mode == "general":
        tv, xv = params
        K = n + m
        if len(tv) != K or len(xv) != K:
            raise ValueError(f"general mode needs {K} t-values and {K} x-values")
        for i in range(n):
            args = weighted_args(i + m, tv, xv)
            rows.append(tuple(elementary(j - i, args) for j in range(cols)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return tuple(tuple(_simplify(x) for x in r) for r in rows)


def weighted_args(p, tv, xv):
    """(t_1 x_1, ..., t_{p-1} x_{p-1}, T_p x_p) with T_p = t_p t_{p+1} ... t_K."""
    if p == 0:
        return []
    args = [tv[k] * xv[k] for k in range(p - 1)]
    T = 1
    for k in range(p - 1, len(tv)):
        T = T * tv[k]
    args.append(T * xv[p - 1])
    return args


def _simplify(x):
    if isinstance(x, Poly) and x.is_constant():
        return x.constant_value()
    return x


def build_b_truncated(n, m, N, k, t="t"):
    """The t-mode B with every column j >= n+k set to zero."""
    if not 0 <= k <= max(n + m - 1, 0):
        raise ValueError("need 0 <= k <= n+m-1")
    full = build_b(n, m, N, "t", {"t": t})
    return tuple(tuple(x if j < n + k else 0 for j, x in enumerate(r)) for r in full)


def _rem2(x):
    return x % 2


def build_skew(kind, n, t="t", m=None, k=None, eps="eps"):
    """Skew matrix families, 1-indexed entries for i < j.

    ``t`` and ``eps`` may be variable names, polynomials or integers;
    passing t=0 gives the specialised families (0^0 = 1).
    """
    if kind not in SKEW_KINDS:
        raise ValueError(f"unknown skew kind {kind!r}")
    t = _tv(t)
    eps = _tv(eps)

    def power(e):
        return t ** e

    if kind == "S":
        f = lambda i, j: 1
    elif kind == "Sbar":
        f = lambda i, j: (-1) ** (j - i - 1)
    elif kind == "R":
        f = lambda i, j: power(_rem2(i - 1) + _rem2(j))
    elif kind == "C":
        f = lambda i, j: power(j - i - 1)
    elif kind == "Rbar":
        f = lambda i, j: (-1) ** (j - i - 1) * power(j - i - 1)
    elif kind == "Cbar":
        f = lambda i, j: (-1) ** (j - i - 1) * power(_rem2(n + 1 - i) + _rem2(n - j))
    else:
        if m is None or k is None:
            raise ValueError(f"{kind} needs m and k")
        if not (1 <= m <= n and 0 <= k <= n - m):
            raise ValueError("need 1 <= m <= n and 0 <= k <= n-m")
        cut = m + k
        if kind == "L":
            f = lambda i, j: 1 if j <= cut else eps
        elif k % 2 == 0:
            f = lambda i, j: (-1) ** (j - i - 1) * (eps if i <= cut else 1)
        else:
            f = lambda i, j: (-1) ** (j - i - 1) * (eps if j <= cut else 1)
    return SkewMatrix.from_upper(n, f)


def qbinom_neg1(n, r):
    """Gaussian binomial [n choose r] at q = -1."""
    if r < 0 or r > n:
        return 0
    if n % 2 == 0 and r % 2 == 1:
        return 0
    return binom(n // 2, r // 2)


M_KINDS = ("neg1", "neg1_u1", "neg1_usat")


def build_m_matrix(kind, n, m, N, t="t"):
    """B-type matrices for the (-1)-enumerations.

    ``neg1``: (-1)^C(j-i+1,2) [m+i, j-i]_{-1}.
    ``neg1_u1``: refined by the first-level statistic.
    ``neg1_usat``: refined by the top-level statistic.
    """
    if kind not in M_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    t = _tv(t)
    rows = []
    for i in range(n):
        p = i + m
        row = []
        for j in range(n + N):
            r = j - i
            sign = (-1) ** (r * (r + 1) // 2) if r >= 0 else 0
            if p == 0:
                row.append(1 if j == 0 else 0)
            elif kind == "neg1":
                row.append(sign * qbinom_neg1(p, r))
            elif kind == "neg1_u1":
                row.append(sign * ((-1) ** (r % 2) * qbinom_neg1(p - 1, r)
                                   + qbinom_neg1(p - 1, r - 1) * t))
            else:
                row.append(sign * (qbinom_neg1(p - 1, r)
                                   + (-1) ** ((m + 2 * i - j) % 2) * qbinom_neg1(p - 1, r - 1) * t))
        rows.append(tuple(_simplify(x) for x in row))
    return tuple(rows)


def index_set_of_partition(lam, m, n=None):
    """I_m(lambda) = {lambda_m + 1, lambda_{m-1} + 2, ..., lambda_1 + m}."""
    lam = [p for p in lam if p]
    if len(lam) > m:
        raise ValueError(f"partition {tuple(lam)} has more than {m} parts")
    parts = lam + [0] * (m - len(lam))
    return IndexSet(tuple(parts[m - k] + k for k in range(1, m + 1)), n)


def gf_block(b, a):
    """[[O_n, J_n B], [-B^t J_n, A]] for B of shape n x (n+N)."""
    return msf_block(b, a)


def matrix_strings(rows):
    return [[str(x) for x in r] for r in rows]


def odd_rows(lam):
    """r(lambda): number of rows of odd length."""
    return sum(1 for p in lam if p % 2)


def odd_columns(lam):
    """c(lambda): number of columns of odd length."""
    lam = [p for p in lam if p]
    cols = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    return sum(1 for c in cols if c % 2)


def partitions_in_box(rows, cols):
    """Partitions with at most ``rows`` parts, each at most ``cols``."""
    def rec(prefix, bound):
        if len(prefix) == rows:
            yield tuple(p for p in prefix if p)
            return
        for v in range(bound, -1, -1):
            yield from rec(prefix + [v], v)
    yield from rec([], cols)


def partition_sub_pfaffian(kind, n, m, lam, t="t", k=None, eps="eps"):
    """Pf of the kind-n skew matrix on I_m(lam) (plain kinds) or on its
    complement (barred kinds). For L and Lbar the eps-limit is taken:
    the eps^0 coefficient for L, the eps^floor(k/2) coefficient for Lbar
    after checking the lower ones vanish."""
    barred = kind.endswith("bar")
    if kind in ("L", "Lbar"):
        a = build_skew(kind, n, m=m, k=k, eps=eps)
    else:
        a = build_skew(kind, n, t=t)
    I = index_set_of_partition(lam, m, n)
    idx = I.complement() if barred else I
    value = Poly.coerce(sub_pfaffian(a, idx) if len(tuple(idx)) else 1)
    if kind == "L":
        return value.coeff(eps, 0)
    if kind == "Lbar":
        lead = k // 2
        for j in range(lead):
            if value.coeff(eps, j):
                raise ArithmeticError(f"eps^{j} coefficient does not vanish")
        return value.coeff(eps, lead)
    return value


def partition_sub_pfaffian_expected(kind, n, m, lam, t="t", k=None):
    """Closed-form value of ``partition_sub_pfaffian``."""
    t = _tv(t)
    sign = (-1) ** sum(lam) if kind.endswith("bar") else 1
    if kind in ("S", "Sbar"):
        v = 1
    elif kind in ("R", "Rbar"):
        v = t ** odd_rows(lam)
    elif kind in ("C", "Cbar"):
        v = t ** odd_columns(lam)
    else:
        v = 1 if (not lam or lam[0] <= k) else 0
    return Poly.coerce(sign * v)
