"""Constant-term side of the identities.

A ``TruncSeries`` is a power series in z_1..z_n with coefficients in the
polynomial ring of t and u, kept on a box of exponents. The constant
term of P(z) F(z) with a Laurent polynomial P and a power series F only
needs the coefficients of F at exponents -beta for the terms z^beta of P,
so a box reaching the most negative exponent of P loses nothing.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .exactmath import Poly, binom, det
from .pfaffian import shuffle_sign, sub_pfaffian
from .structmat import build_b

F_KINDS = ("Sbar", "Rbar", "Cbar", "Rbar_t", "Cbar_t", "bounded")
SUBSET_LIMIT = 20000


def _tv(x):
    return Poly.var(x) if isinstance(x, str) else x


class TruncSeries:
    """Power series in n variables, truncated to exponents e with e_i <= caps[i]."""

    __slots__ = ("caps", "coeffs")

    def __init__(self, caps, coeffs=None):
        self.caps = tuple(caps)
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            if c and self.inside(e):
                self.coeffs[tuple(e)] = c

    @classmethod
    def one(cls, caps):
        return cls(caps, {(0,) * len(caps): 1})

    @property
    def n(self):
        return len(self.caps)

    def inside(self, e):
        return all(0 <= a <= c for a, c in zip(e, self.caps))

    def box(self):
        return product(*(range(c + 1) for c in self.caps))

    def __getitem__(self, e):
        e = tuple(e)
        if not self.inside(e):
            raise KeyError(f"exponent {e} outside the cap {self.caps}")
        return self.coeffs.get(e, 0)

    def _shift(self, e, alpha, sign=-1):
        return tuple(a + sign * b for a, b in zip(e, alpha))

    def times_linear(self, c, alpha):
        """Multiply by (1 + c z^alpha)."""
        out = dict(self.coeffs)
        for e, v in self.coeffs.items():
            f = self._shift(e, alpha, 1)
            if self.inside(f):
                out[f] = out.get(f, 0) + c * v
        return TruncSeries(self.caps, out)

    def over_geometric(self, c, alpha):
        """Multiply by 1/(1 - c z^alpha)."""
        if not any(alpha):
            raise ValueError("alpha must be nonzero")
        out = {}
        for e in self.box():  # lexicographic, so e - alpha comes first
            v = self.coeffs.get(e, 0)
            prev = self._shift(e, alpha)
            if min(prev) >= 0:
                w = out.get(prev, 0)
                if w:
                    v = v + c * w
            if v:
                out[e] = v
        return TruncSeries(self.caps, out)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.caps, {e: v * other for e, v in self.coeffs.items()})
        if other.caps != self.caps:
            raise ValueError("caps differ")
        out = {}
        for e, v in self.coeffs.items():
            for f, w in other.coeffs.items():
                g = self._shift(e, f, 1)
                if self.inside(g):
                    out[g] = out.get(g, 0) + v * w
        return TruncSeries(self.caps, out)

    __rmul__ = __mul__

    def __add__(self, other):
        if other.caps != self.caps:
            raise ValueError("caps differ")
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            out[e] = out.get(e, 0) + v
        return TruncSeries(self.caps, out)

    def restrict(self, caps):
        return TruncSeries(caps, {e: v for e, v in self.coeffs.items() if len(e) == len(caps)})

    def __eq__(self, other):
        if not isinstance(other, TruncSeries) or other.caps != self.caps:
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(e, 0) == other.coeffs.get(e, 0) for e in keys)

    def __repr__(self):
        return f"TruncSeries(caps={self.caps}, terms={len(self.coeffs)})"


def _pairwise(series):
    n = series.n
    for i in range(n):
        for j in range(i + 1, n):
            alpha = [0] * n
            alpha[i] = alpha[j] = 1
            series = series.over_geometric(1, tuple(alpha))
    return series


def _unit(n, i, power=1):
    e = [0] * n
    e[i] = power
    return tuple(e)


def bounded_schur_sum(n, k):
    """sum of s_lambda(z_1..z_n) over lambda with lambda_1 <= k, as a dict
    exponent -> coefficient, built by Gelfand-Tsetlin branching."""
    states = {(): {(): 1}}
    for j in range(1, n + 1):
        new = {}
        for mu, poly in states.items():
            mu_pad = list(mu) + [0] * (j - len(mu))
            for lam in _interlacing(mu_pad, k):
                d = sum(lam) - sum(mu)
                key = tuple(p for p in lam if p)
                acc = new.setdefault(key, {})
                for e, c in poly.items():
                    f = e + (d,)
                    acc[f] = acc.get(f, 0) + c
        states = new
    total = {}
    for poly in states.values():
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return total


def _interlacing(mu, k):
    """lambda with lambda_1 <= k, lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_j >= lambda_{j+1} >= 0,
    where mu is padded with a trailing 0 to length j+1."""
    j1 = len(mu)
    uppers = [k] + list(mu[:-1])

    def rec(i, prefix):
        if i == j1:
            yield tuple(prefix)
            return
        for v in range(mu[i], uppers[i] + 1):
            yield from rec(i + 1, prefix + [v])
    yield from rec(0, [])


def f_a_series(kind, n, caps, t="t", k=None):
    """Truncated expansion of the closed form F_A(z_1..z_n).

    Kinds: Sbar, Rbar, Cbar, the t-deformed Rbar_t and Cbar_t, and
    bounded (lambda_1 <= k), which is an exact polynomial.
    """
    if kind not in F_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if isinstance(caps, int):
        caps = (caps,) * n
    if len(caps) != n:
        raise ValueError("need one cap per variable")
    if kind == "bounded":
        if k is None or k < 0:
            raise ValueError("bounded needs k >= 0")
        return TruncSeries(caps, bounded_schur_sum(n, k))
    s = TruncSeries.one(caps)
    t = _tv(t)
    for i in range(n):
        if kind == "Sbar":
            s = s.over_geometric(1, _unit(n, i))
        elif kind in ("Rbar", "Rbar_t"):
            s = s.over_geometric(1, _unit(n, i, 2))
            if kind == "Rbar_t":
                s = s.times_linear(t, _unit(n, i))
        elif kind == "Cbar_t":
            s = s.over_geometric(t, _unit(n, i))
    return _pairwise(s)


def complete_homogeneous(r, names):
    """h_r in the given variables."""
    if r < 0:
        return Poly()
    if not names:
        return Poly.const(1 if r == 0 else 0)
    z = Poly.var(names[-1])
    return sum((z ** i * complete_homogeneous(r - i, names[:-1]) for i in range(r + 1)), Poly())


def schur_poly(lam, n, prefix="z"):
    """s_lambda(z_1..z_n) by the Jacobi-Trudi determinant."""
    lam = [p for p in lam if p]
    if len(lam) > n:
        return Poly()
    if not lam:
        return Poly.const(1)
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    L = len(lam)
    rows = [[complete_homogeneous(lam[i] - i + j, names) for j in range(L)] for i in range(L)]
    return Poly.coerce(det(rows))


def series_from_poly(p, n, caps, prefix="z"):
    """Read a polynomial in z_1..z_n (coefficients in other variables) as a series."""
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    out = {}
    for exps, c in _split_z(p, names):
        out[exps] = out.get(exps, 0) + c
    return TruncSeries(caps, out)


def _split_z(p, names):
    p = Poly.coerce(p)
    for e in _z_exponents(p, names):
        c = p
        for name, a in zip(names, e):
            c = c.coeff(name, a)
        yield e, c


def _z_exponents(p, names):
    ranges = [range(max(p.degree(nm), 0) + 1) for nm in names]
    for e in product(*ranges):
        c = p
        for name, a in zip(names, e):
            c = c.coeff(name, a)
            if c.is_zero():
                break
        else:
            yield e


def h_factor(i, m, t=1, u=1):
    """h^{(m)}_i(z, t, u) as a list of coefficients in z."""
    p = m + i
    if p < 0:
        raise ValueError("need m + i >= 0")
    if p == 0:
        return [1]
    if p == 1:
        return [1, t * u]
    coeffs = [binom(p - 2, r) for r in range(p - 1)]
    out = [0] * (p + 1)
    for r, c in enumerate(coeffs):
        out[r] = out[r] + c
        out[r + 1] = out[r + 1] + c * (t + u)
        out[r + 2] = out[r + 2] + c * t * u
    return out


def _laurent_mul(a, b):
    out = {}
    for e, v in a.items():
        for f, w in b.items():
            g = tuple(x + y for x, y in zip(e, f))
            out[g] = out.get(g, 0) + v * w
    return {e: v for e, v in out.items() if v}


def prefactor(n, m, t=1, u=1):
    """prod_{i<j} (1 - z_j/z_i) prod_k h^{(m)}_{n-k}(1/z_k, t, u) as a Laurent dict."""
    p = {(0,) * n: 1}
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = -1, 1
            p = _laurent_mul(p, {(0,) * n: 1, tuple(e): -1})
    for k in range(1, n + 1):
        h = h_factor(n - k, m, t, u)
        p = _laurent_mul(p, {_unit(n, k - 1, -r): c for r, c in enumerate(h) if c})
    return p


def needed_caps(n, m):
    """Per-variable depth reached by the prefactor: (n-k) + (n+m-k) for z_k."""
    return tuple(2 * (n - k) + m for k in range(1, n + 1))


def ct_product(pre, f):
    """Constant term of a Laurent polynomial times a truncated series."""
    total = 0
    for e, c in pre.items():
        neg = tuple(-a for a in e)
        if min(neg) < 0:
            continue
        if not f.inside(neg):
            raise ValueError(f"cap {f.caps} too small for exponent {neg}")
        v = f.coeffs.get(neg, 0)
        if v:
            total = total + c * v
    return Poly.coerce(total)


# weight kind -> (F kind, F variable, h variables); mirrors the Pfaffian table
CT_KINDS = {
    "refined": ("Sbar", None, "t"),
    "doubly": ("Sbar", None, "tu"),
    "doubly_cols_even": ("Rbar", None, "tu"),
    "refined_vc": ("Rbar_t", "u", "t"),
    "cols_even": ("Rbar", None, "t"),
    "rows_even": ("Cbar", None, "t"),
    "vc": ("Rbar_t", "t", ""),
    "vr": ("Cbar_t", "t", ""),
    "mt": ("bounded", None, "t"),
}


@dataclass(frozen=True)
class CtRequest:
    n: int
    m: int
    weight: str = "refined"
    k: int | None = None
    D: int | None = None

    def __post_init__(self):
        if self.weight not in CT_KINDS:
            raise ValueError(f"no constant-term form for weight {self.weight!r}")
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")
        if self.weight == "mt" and (self.k is None or not 0 <= self.k <= self.n + self.m - 1):
            raise ValueError("mt needs 0 <= k <= n+m-1")
        if self.weight in ("doubly", "doubly_cols_even") and self.n + self.m < 2:
            raise ValueError(f"{self.weight} needs n+m >= 2")

    @property
    def caps(self):
        need = needed_caps(self.n, self.m)
        if self.D is None:
            return need
        if self.D < max(need):
            raise ValueError(f"cap D={self.D} too small, need at least {max(need)}")
        return (self.D,) * self.n


def constant_term(req):
    """CT of prod(1 - z_j/z_i) prod h^{(m)}_{n-k}(1/z_k) F(z) for the request's weight."""
    fkind, fvar, hvars = CT_KINDS[req.weight]
    t = Poly.var("t") if "t" in hvars else 1
    u = Poly.var("u") if "u" in hvars else 1
    f = f_a_series(fkind, req.n, req.caps, t=fvar or "t", k=req.k)
    return ct_product(prefactor(req.n, req.m, t, u), f)


def constant_term_with(n, m, f, t=1, u=1):
    """CT with an arbitrary truncated F (for alternative closed forms)."""
    return ct_product(prefactor(n, m, t, u), f)


def d_sum(n, m, N, a, t="t", u="u"):
    """sum over n-subsets I of [n+N] of (-1)^s(I', I) Pf(A on I') det(B columns I),
    I' the complement and B the doubly refined matrix."""
    if N % 2 or N < n + m - 1:
        raise ValueError("N must be even and at least n+m-1")
    if a.size != n + N:
        raise ValueError(f"A must have size n+N = {n + N}")
    if binom(n + N, n) > SUBSET_LIMIT:
        raise ValueError("too many subsets")
    b = build_b(n, m, N, "tu", {"t": t, "u": u})
    total = 0
    for I in combinations(range(1, n + N + 1), n):
        comp = tuple(j for j in range(1, n + N + 1) if j not in I)
        pf = sub_pfaffian(a, comp) if comp else 1
        if not pf:
            continue
        d = det([[row[j - 1] for j in I] for row in b])
        if d:
            total = total + shuffle_sign(I, n + N) * pf * d
    return Poly.coerce(total)


def zeilberger_minor_sum(n, m):
    """Sum of all n x n minors of the n x (2n+m-1) matrix binom(m+i, j-i)."""
    cols = 2 * n + m - 1
    x = [[binom(m + i, j - i) for j in range(cols)] for i in range(n)]
    return sum(det([[row[j] for j in c] for row in x]) for c in combinations(range(cols), n))


def bounded_ratio_n2(k, caps):
    """det(z_i^(j-1) - z_i^(k+4-j)) / ((1-z_1)(1-z_2)(z_2-z_1)(1-z_1 z_2)) for two variables,
    with the division by z_2 - z_1 done exactly on the antisymmetric numerator."""
    z1, z2 = Poly.var("z1"), Poly.var("z2")
    rows = [[z ** (j - 1) - z ** (k + 4 - j) for j in (1, 2)] for z in (z1, z2)]
    num = Poly.coerce(det(rows))
    quotient = Poly()
    for exps, c in _split_z(num, ["z1", "z2"]):
        a, b = exps
        if a >= b:
            continue
        # c (z1^a z2^b - z1^b z2^a) / (z2 - z1)
        base = z1 ** a * z2 ** a
        quotient = quotient + c * base * sum((z1 ** p * z2 ** (b - a - 1 - p) for p in range(b - a)), Poly())
    s = series_from_poly(quotient, 2, caps)
    for alpha in ((1, 0), (0, 1), (1, 1)):
        s = s.over_geometric(1, alpha)
    return s
