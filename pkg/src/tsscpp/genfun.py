"""Generating functions of CSPP(n, m) as block Pfaffians.

Every weight kind pairs a brute-force description (objects plus a
``WeightSpec``) with the B-matrix and skew matrix A whose block Pfaffian
[[O_n, J_n B], [-B^t J_n, A]] reproduces it.
"""

from dataclasses import dataclass
from .exactmath import Poly, det
from .pfaffian import pfaffian, sub_pfaffian
from .ppart import (
    WeightSpec,
    at_most_k_rows,
    brute_gf,
    cols_even,
    enumerate_cspp,
    multiplicity,
    rows_even,
    subset_filter,
    ubar,
)
from .structmat import (
    build_b,
    build_b_truncated,
    build_m_matrix,
    build_skew,
    default_N,
    elementary,
    gf_block,
    index_set_of_partition,
    weighted_args,
)


@dataclass(frozen=True)
class WeightKind:
    name: str
    description: str
    subset: str | None
    stats: tuple          # (statistic, variable); "Ubar*" takes the request's r
    signs: tuple
    b_mode: str
    a_kind: str
    a_var: object         # parameter for the skew family: None, "t", "u" or 0
    ct: tuple | None      # (F kind, F variable, h variables) or None
    r_min: int = 1


KINDS = {k.name: k for k in (
    WeightKind("refined", "t^Ubar_r over CSPP", None, (("Ubar*", "t"),), (),
               "t", "Sbar", None, ("Sbar", None, "t")),
    WeightKind("doubly", "t^Ubar_1 u^Ubar_r over CSPP, r >= 2", None,
               (("Ubar1", "t"), ("Ubar*", "u")), (), "tu", "Sbar", None, ("Sbar", None, "tu"), 2),
    WeightKind("doubly_cols_even", "t^Ubar_1 u^Ubar_r over column-even CSPP, r >= 2", "cols_even",
               (("Ubar1", "t"), ("Ubar*", "u")), (), "tu", "Rbar", 0, ("Rbar", None, "tu"), 2),
    WeightKind("refined_vc", "t^Ubar_r u^VC over CSPP", None,
               (("Ubar*", "t"), ("VC", "u")), (), "t", "Rbar", "u", ("Rbar_t", "u", "t")),
    WeightKind("cols_even", "t^Ubar_r over column-even CSPP", "cols_even",
               (("Ubar*", "t"),), (), "t", "Rbar", 0, ("Rbar", None, "t")),
    WeightKind("rows_even", "t^Ubar_r over row-even CSPP", "rows_even",
               (("Ubar*", "t"),), (), "t", "Cbar", 0, ("Cbar", None, "t")),
    WeightKind("vc", "t^VC over CSPP", None, (("VC", "t"),), (),
               "plain", "Rbar", "t", ("Rbar_t", "t", "")),
    WeightKind("vr", "t^VR over CSPP", None, (("VR", "t"),), (),
               "plain", "Cbar", "t", ("Cbar_t", "t", "")),
    WeightKind("neg1", "(-1)^|c| over CSPP", None, (), ("size",),
               "neg1", "Sbar", None, None),
    WeightKind("neg1_u1", "(-1)^|c| t^Ubar_1 over CSPP", None, (("Ubar1", "t"),), ("size",),
               "neg1_u1", "Sbar", None, None),
    WeightKind("neg1_usat", "(-1)^|c| t^Ubar_(n+m) over CSPP", None, (("UbarK", "t"),), ("size",),
               "neg1_usat", "Sbar", None, None),
    WeightKind("neg1_vc", "(-1)^|c| t^VC over CSPP", None, (("VC", "t"),), ("size",),
               "neg1", "Rbar", "t", None),
    WeightKind("mt", "t^Ubar_r over CSPP with at most k rows", "mt",
               (("Ubar*", "t"),), (), "t", "Lbar", None, ("bounded", None, "t")),
)}


@dataclass(frozen=True)
class GfRequest:
    n: int
    m: int
    weight: str = "refined"
    N: int | None = None
    k: int | None = None
    r: int | None = None

    def __post_init__(self):
        if self.weight not in KINDS:
            raise ValueError(f"unknown weight kind {self.weight!r}")
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")
        K = self.n + self.m
        if self.weight == "mt":
            if self.k is None or not 0 <= self.k <= K - 1:
                raise ValueError("mt needs 0 <= k <= n+m-1")
        kind = KINDS[self.weight]
        if kind.r_min == 2 and K < 2:
            raise ValueError(f"{self.weight} needs n+m >= 2")
        if self.r is not None and not kind.r_min <= self.r <= K:
            raise ValueError(f"r must lie in [{kind.r_min}, {K}]")
        if self.N is not None:
            if self.N % 2 or self.N < K - 1 or self.N < (self.k or 0):
                raise ValueError("N must be even and at least n+m-1 (and k)")

    @property
    def size_N(self):
        return self.N if self.N is not None else default_N(self.n, self.m, self.k or 0)


def weight_spec(kind, n, m, r=None):
    kind = KINDS[kind] if isinstance(kind, str) else kind
    K = n + m
    r = r if r is not None else kind.r_min
    factors = []
    for s, v in kind.stats:
        if s == "Ubar*":
            s = f"Ubar{r}"
        elif s == "UbarK":
            s = f"Ubar{K}"
        factors.append((s, v))
    return WeightSpec(tuple(factors), kind.signs)


def request_objects(req):
    objs = enumerate_cspp(req.n, req.m)
    kind = KINDS[req.weight]
    if kind.subset == "cols_even":
        objs = subset_filter(objs, cols_even)
    elif kind.subset == "rows_even":
        objs = subset_filter(objs, rows_even)
    elif kind.subset == "mt":
        objs = subset_filter(objs, at_most_k_rows(req.k))
    return objs


def gf_brute(req):
    """Left-hand side by enumeration."""
    return brute_gf(request_objects(req), weight_spec(req.weight, req.n, req.m, req.r))


def _b_matrix(mode, n, m, N):
    if mode in ("t", "tu", "plain"):
        return build_b(n, m, N, mode)
    return build_m_matrix(mode, n, m, N)


def _a_matrix(kind, size):
    k = KINDS[kind] if isinstance(kind, str) else kind
    if k.a_var is None:
        return build_skew(k.a_kind, size)
    return build_skew(k.a_kind, size, t=k.a_var)


def gf_pfaffian(req):
    """Right-hand side as a block Pfaffian."""
    kind = KINDS[req.weight]
    n, m, N = req.n, req.m, req.size_N
    if kind.name == "mt":
        return gf_mt(n, m, N, req.k)
    b = _b_matrix(kind.b_mode, n, m, N)
    a = _a_matrix(kind, n + N)
    return Poly.coerce(pfaffian(gf_block(b, a)))


def gf_mt_prelimit(n, m, N, k, t="t"):
    """Block Pfaffian with the eps-deformed matrix, as a polynomial in eps."""
    if N < k or N % 2:
        raise ValueError("N must be even and at least k")
    b = build_b(n, m, N, "t", {"t": t})
    a = build_skew("Lbar", n + N, m=n, k=k)
    return Poly.coerce(pfaffian(gf_block(b, a)))


def gf_mt(n, m, N, k, t="t", variant="limit"):
    """Sum of t^Ubar over CSPP(n, m) with at most k rows."""
    if not 0 <= k <= max(n + m - 1, 0):
        raise ValueError("need 0 <= k <= n+m-1")
    if variant == "truncated":
        b = build_b_truncated(n, m, N, k, t)
        return Poly.coerce(pfaffian(gf_block(b, build_skew("Sbar", n + N))))
    if variant != "limit":
        raise ValueError(f"unknown variant {variant!r}")
    pre = gf_mt_prelimit(n, m, N, k, t)
    lead = k // 2
    for j in range(lead):
        if pre.coeff("eps", j):
            raise ArithmeticError(f"coefficient of eps^{j} does not vanish: {pre.coeff('eps', j)}")
    return pre.coeff("eps", lead)


# general weights

def lattice_determinant(lam, n, m, t_values, x_values):
    """Weighted count of CSPP(n, m) whose columns have lengths ``lam``,
    as the determinant of elementary symmetric functions."""
    lam = [p for p in lam if p]
    if len(lam) > n:
        raise ValueError("partition longer than n")
    lam = lam + [0] * (n - len(lam))
    K = n + m
    rows = []
    for i in range(1, n + 1):
        args = weighted_args(K - i, t_values, x_values)
        rows.append([elementary(lam[j - 1] - j + i, args) for j in range(1, n + 1)])
    return det(rows)


def _partitions_in_box(parts, largest):
    """Partitions with at most ``parts`` parts, each at most ``largest``."""
    def rec(prefix, bound):
        yield tuple(prefix)
        if len(prefix) == parts:
            return
        for v in range(min(bound, largest), 0, -1):
            yield from rec(prefix + [v], v)
    yield from rec([], largest)


def gf_general(n, m, N, a, t_values, x_values):
    """Block Pfaffian with the fully weighted B and an arbitrary skew A."""
    if a.size != n + N:
        raise ValueError(f"A must have size n+N = {n + N}")
    b = build_b(n, m, N, "general", (t_values, x_values))
    return pfaffian(gf_block(b, a))


def gf_general_brute(n, m, N, a, t_values, x_values):
    """sum over c of (-1)^|lam| Pf(A on the complement of I_n(lam)) t^Ubar(c) x^c,
    lam being the column lengths of c."""
    K = n + m
    total = 0
    for c in enumerate_cspp(n, m):
        lam = tuple(len(col) for col in c.columns)
        I = index_set_of_partition(lam, n, n + N)
        pf = sub_pfaffian(a, I.complement())
        if not pf:
            continue
        w = (-1) ** sum(lam) * pf
        for r in range(1, K + 1):
            w = w * t_values[r - 1] ** ubar(c, r) * x_values[r - 1] ** multiplicity(c, r)
        total = total + w
    return total


def gf_lattice_sum(n, m, t_values, x_values):
    """Sum of lattice determinants over every admissible column-length partition."""
    total = 0
    for lam in _partitions_in_box(n, n + m - 1):
        total = total + lattice_determinant(lam, n, m, t_values, x_values)
    return total
