"""Reference numbers: alternating sign matrix counts and their
refinements, vertically symmetric counts, the CSPP product formula and
the closed forms conjectured for row-even and signed enumerations."""

from fractions import Fraction
from functools import lru_cache
from math import factorial as fact

from .exactmath import Poly, binom


def _exact(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


def _tv(t):
    return Poly.var(t) if isinstance(t, str) else t


@lru_cache(maxsize=None)
def asm_number(n):
    """A_n = prod_{i<n} (3i+1)!/(n+i)!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    v = Fraction(1)
    for i in range(n):
        v *= Fraction(fact(3 * i + 1), fact(n + i))
    return _exact(v)


@lru_cache(maxsize=None)
def asm_refined(n, r):
    """A_n^r, refined by the position of the 1 in the top row."""
    if n < 1 or not 1 <= r <= n:
        raise ValueError("need n >= 1 and 1 <= r <= n")
    v = Fraction(binom(n + r - 2, n - 1) * binom(2 * n - r - 1, n - 1), binom(3 * n - 2, n - 1))
    return _exact(v * asm_number(n))


def asm_poly(n, t="t"):
    t = _tv(t)
    return sum((asm_refined(n, r) * t ** (r - 1) for r in range(1, n + 1)), Poly())


@lru_cache(maxsize=None)
def asm_doubly(n):
    """A_n^{k,l} for 1 <= k, l <= n from the initial row/column and the
    difference recurrence; returned as a tuple of rows indexed k-1, l-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    a = [[None] * (n + 1) for _ in range(n + 1)]
    for k in range(1, n + 1):
        v = 0 if k == 1 else asm_refined(n - 1, k - 1)
        a[k][1] = Fraction(v)
        a[1][k] = Fraction(v)
    base = asm_refined(n, 1)
    for k in range(1, n):
        for l in range(1, n):
            if a[k + 1][l + 1] is not None:
                continue
            step = (asm_refined(n - 1, k) * (asm_refined(n, l + 1) - asm_refined(n, l))
                    + asm_refined(n - 1, l) * (asm_refined(n, k + 1) - asm_refined(n, k)))
            a[k + 1][l + 1] = a[k][l] + Fraction(step, base)
    return tuple(tuple(_exact(a[k][l]) for l in range(1, n + 1)) for k in range(1, n + 1))


def asm_doubly_poly(n, t="t", u="u"):
    """sum A_n^{k,l} t^(k-1) u^(n-l)."""
    t, u = _tv(t), _tv(u)
    a = asm_doubly(n)
    total = Poly()
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            if a[k - 1][l - 1]:
                total = total + a[k - 1][l - 1] * t ** (k - 1) * u ** (n - l)
    return total


def _half(odd):
    if odd < 1 or odd % 2 == 0:
        raise ValueError("argument must be a positive odd integer")
    return (odd - 1) // 2


@lru_cache(maxsize=None)
def avs_number(odd):
    """A^VS_{2n+1} = 2^-n prod_{k=1}^n (6k-2)!(2k-1)!/((4k-1)!(4k-2)!)."""
    n = _half(odd)
    v = Fraction(1, 2 ** n)
    for k in range(1, n + 1):
        v *= Fraction(fact(6 * k - 2) * fact(2 * k - 1), fact(4 * k - 1) * fact(4 * k - 2))
    return _exact(v)


def avs_number_alt(odd):
    """The same count from the product over pairs (i, j) with j even."""
    n = _half(odd)
    v = Fraction((-3) ** (n * n))
    size = 2 * n + 1
    for i in range(1, size + 1):
        for j in range(2, size + 1, 2):
            v *= Fraction(3 * (j - i) + 1, j - i + size)
    return _exact(v)


@lru_cache(maxsize=None)
def avs_refined(odd, r):
    """A^{VS,r}_{2n+1} by the alternating sum."""
    n = _half(odd)
    if n < 1 or not 1 <= r <= 2 * n:
        raise ValueError("need 2n+1 >= 3 and 1 <= r <= 2n")
    s = sum((-1) ** (r + k) * Fraction(fact(2 * n + k - 2) * fact(4 * n - k - 1),
                                       fact(k - 1) * fact(2 * n - k))
            for k in range(1, r + 1))
    return _exact(Fraction(avs_number(2 * n - 1), fact(4 * n - 2)) * s)


def avs_poly(odd, t="t"):
    n = _half(odd)
    if n < 1:
        raise ValueError("argument must be at least 3")
    t = _tv(t)
    return sum((avs_refined(odd, r) * t ** (r - 1) for r in range(1, 2 * n + 1)), Poly())


@lru_cache(maxsize=None)
def card_cspp(n, m):
    """Number of CSPP(n, m) by the product formula."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1, m >= 0")
    v = Fraction(1)
    for k in range(n):
        num = fact(3 * k + 3 * m + 1)
        den = fact(2 * k + m) * fact(2 * k + 3 * m + 1)
        for i in range(m + 1):
            num *= fact(k + 2 * i)
        for i in range(1, m + 1):
            den *= fact(k + 2 * i - 1)
        v *= Fraction(num, den)
    return _exact(v)


# polynomials h_m(n) for the row-even count
_H = {
    0: (1,), 1: (1,), 2: (1,), 3: (1,),
    4: (132, 117, 26),
    5: (715, 517, 94),
    6: (5610, 3419, 526),
    7: (29393, 15465, 2062),
    8: (6240360, 5821157, 2042275, 319396, 18788),
    9: (4457400, 3712391, 1163679, 162716, 8564),
}


def h_row(m, n):
    if m not in _H:
        raise ValueError(f"h_{m} is not tabulated (m <= 9)")
    return sum(c * n ** k for k, c in enumerate(_H[m]))


def g_row(n, m):
    h = h_row(m, n)
    return h if m % 4 in (0, 1) else (4 * n + 2 * m + 1) * h


def f_row(n, m):
    fl, ce = m // 2, (m + 1) // 2
    num = (fact(6 * n + 6 * fl + 4) * fact(6 * n + 6 * ce + 4) * fact(2 * n + 1)
           * fact(2 * n + 2 * ce) * fact(2 * n + 2 * m + 1) * fact(n + (m + 2) // 2))
    den = (fact(4 * n + m + 1) * fact(4 * n + m + 3) * fact(4 * n + 3 * m + 2)
           * fact(4 * n + 3 * m + 4) * fact(2 * n + 2 * ce + 1) * fact(n + fl))
    return Fraction(num, den)


def conj_row_target(n, r, m):
    """Conjectured number of row-even CSPP(2n+r, m)."""
    s = m + r
    v = Fraction(g_row(n, s), 2 ** n * g_row(0, s))
    for k in range(n):
        v *= f_row(k, s)
    return _exact(v)


def conj_neg1_target(n):
    """Conjectured signed count of CSPP(n, 2): zero for odd n, a product for n = 2k."""
    if n % 2:
        return 0
    k = n // 2
    v = Fraction(3 ** k)
    for i in range(k):
        v *= Fraction(fact(6 * i + 4) * fact(3 * i + 5) * fact(2 * i + 1) * fact(2 * i + 3) * fact(i + 1),
                      fact(4 * i + 3) * fact(4 * i + 6) * fact(3 * i + 3) * fact(2 * i) * fact(i + 2))
    return _exact(v)


def gaussian_binomial(n, r, q="q"):
    """[n choose r]_q as a polynomial, by the q-Pascal rule."""
    q = _tv(q)
    if r < 0 or r > n:
        return Poly()
    row = [Poly.const(1)]
    for k in range(1, n + 1):
        new = []
        for j in range(k + 1):
            left = row[j - 1] if j >= 1 else Poly()
            right = row[j] if j < k else Poly()
            new.append(left + q ** j * right)
        row = new
    return row[r]


# polynomial witnesses for the row-parity statistic, n = 1..6
def vr_polynomials(t="t"):
    t = _tv(t)
    p = {1: Poly.const(1), 2: 1 + t, 3: t ** 2 + 3 * t + 3}
    p[4] = 3 * (t + 1) * p[3]
    p[5] = 3 * (3 * t ** 4 + 18 * t ** 3 + 44 * t ** 2 + 52 * t + 26)
    p[6] = 26 * (t + 1) * p[5]
    return p


def signed_vc_polynomials(t="t"):
    """Printed values of sum (-1)^|c| t^VC over CSPP_n, n = 1..8."""
    t = _tv(t)
    return {
        1: Poly.const(1),
        2: t - 1,
        3: t,
        4: (t - 1) * (t ** 2 - t + 1),
        5: t * (t ** 2 + t + 1),
        6: (t - 1) * (t ** 2 + 1) * (3 * t ** 2 - 4 * t + 3),
        7: 2 * t * (2 * t ** 4 + 3 * t ** 3 + 3 * t ** 2 + 3 * t + 2),
        8: 2 * (t - 1) * (13 * t ** 6 - 20 * t ** 5 + 37 * t ** 4 - 35 * t ** 3
                          + 37 * t ** 2 - 20 * t + 13),
    }


def even_row_target(n, t="t"):
    """Conjectured sum of t^Ubar over row-even CSPP_n as an A^VS product."""
    if n < 1:
        raise ValueError("n must be positive")
    k = n // 2
    if n % 2 == 0:
        return avs_number(2 * k + 1) * avs_poly(2 * k + 1, t)
    return avs_number(2 * k + 1) * avs_poly(2 * k + 3, t)
