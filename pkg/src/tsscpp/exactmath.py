"""Exact scalars and sparse multivariate polynomials.

Scalars are plain ``int`` and ``fractions.Fraction``. ``Poly`` is an
immutable polynomial with integer coefficients over a registry of named
variables. Exponent vectors are dense tuples over the registry with
trailing zeros stripped, so polynomials built before a new variable is
registered stay comparable with later ones.
"""

import ast
import re
from fractions import Fraction
from math import comb

# fixed leading variables; anything else is appended on first use
_FIXED = ("t", "u", "eps")
_ALIASES = {"ε": "eps", "epsilon": "eps"}
_names = list(_FIXED)
_index = {name: i for i, name in enumerate(_names)}
_order_cache = None


def _rank(name):
    if name in _FIXED:
        return (0, _FIXED.index(name), "")
    # natural sort so that z2 < z10
    m = re.fullmatch(r"([^\d]*)(\d*)", name)
    return (1, m.group(1), int(m.group(2)) if m.group(2) else -1)


def var_key(name):
    """Sort key placing t, u, eps first and other names in natural order."""
    return _rank(_ALIASES.get(name, name))


def register(name):
    """Return the registry index of ``name``, adding it if needed."""
    global _order_cache
    name = _ALIASES.get(name, name)
    if name in _index:
        return _index[name]
    if not name.isidentifier():
        raise ValueError(f"bad variable name {name!r}")
    _index[name] = len(_names)
    _names.append(name)
    _order_cache = None
    return _index[name]


def _display_order():
    global _order_cache
    if _order_cache is None:
        _order_cache = sorted(range(len(_names)), key=lambda i: _rank(_names[i]))
    return _order_cache


def _strip(exps):
    k = len(exps)
    while k and exps[k - 1] == 0:
        k -= 1
    return tuple(exps[:k])


def _add_exp(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def binom(a, b):
    """Binomial coefficient with binom(a, b) = 0 unless 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def as_int(x):
    """Return ``x`` as an int, refusing non-integral rationals."""
    if isinstance(x, Poly):
        x = x.constant_value()
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return x.numerator
    return int(x)


def normalize_number(x):
    """Collapse integral Fractions to int."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Poly:
    """Immutable polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if not isinstance(c, int):
                        c = as_int(c)
                    key = _strip(exps)
                    clean[key] = clean.get(key, 0) + c
            clean = {k: c for k, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name, power=1):
        i = register(name)
        exps = [0] * (i + 1)
        exps[i] = power
        return cls._raw({tuple(exps): 1})

    @classmethod
    def const(cls, c):
        c = as_int(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def parse(cls, text):
        """Parse text such as ``"2 + 3*t - t^2*u"`` (``**`` also accepted)."""
        if isinstance(text, (int, Poly)):
            return cls.coerce(text)
        src = str(text).strip().replace("^", "**")
        for alias, name in _ALIASES.items():
            src = src.replace(alias, name)
        if not src:
            raise ValueError("empty polynomial")
        try:
            tree = ast.parse(src, mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse {text!r}") from exc
        return _eval_ast(tree.body, text)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    # basic queries

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not e for e in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), 0)

    def variables(self):
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return sorted((_names[i] for i in used), key=_rank)

    def degree(self, var=None):
        """Total degree, or degree in ``var``; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = register(var)
        return max((e[i] if i < len(e) else 0) for e in self._terms)

    def coeff(self, var, k):
        """Coefficient of ``var**k`` as a polynomial in the other variables."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        i = register(var)
        out = {}
        for exps, c in self._terms.items():
            e = exps[i] if i < len(exps) else 0
            if e == k:
                rest = list(exps)
                if i < len(rest):
                    rest[i] = 0
                out[_strip(rest)] = c
        return Poly._raw(out)

    def coefficients(self, var):
        """Dense list of coefficients in ``var`` (index = power)."""
        return [self.coeff(var, k) for k in range(self.degree(var) + 1)]

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, int):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            v = out.get(exps, 0) + c
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (Poly, int)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly._raw({})
            return Poly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            items = frozenset(self._terms.items())
            if items == frozenset() or (len(self._terms) == 1 and () in self._terms):
                self._hash = hash(self._terms.get((), 0))
            else:
                self._hash = hash(items)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution

    def substitute(self, bindings):
        """Replace variables by polynomials or integers."""
        idx = {}
        for name, val in bindings.items():
            idx[register(name)] = Poly.coerce(val)
        if not idx:
            return self
        powers = {}
        out = Poly._raw({})
        for exps, c in self._terms.items():
            keep = list(exps)
            term = Poly._raw({})
            factor = Poly.const(c)
            for i, val in idx.items():
                if i < len(keep) and keep[i]:
                    key = (i, keep[i])
                    if key not in powers:
                        powers[key] = val ** keep[i]
                    factor = factor * powers[key]
                    keep[i] = 0
            term = Poly._raw({_strip(keep): 1}) * factor
            out = out + term
        return out

    def evaluate(self, values):
        """Evaluate with every variable bound to a number; returns int or Fraction."""
        names = {register(k): v for k, v in values.items()}
        total = 0
        for exps, c in self._terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    if i not in names:
                        raise ValueError(f"variable {_names[i]} is unbound")
                    term = term * names[i] ** e
            total += term
        return normalize_number(total)

    # text

    def sorted_terms(self):
        order = _display_order()
        width = len(_names)

        def key(item):
            exps = item[0] + (0,) * (width - len(item[0]))
            return (sum(exps), tuple(-exps[i] for i in order))

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        order = _display_order()
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for i in order:
                e = exps[i] if i < len(exps) else 0
                if e == 1:
                    factors.append(_names[i])
                elif e > 1:
                    factors.append(f"{_names[i]}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((c < 0, body))
        neg, body = pieces[0]
        text = ("-" if neg else "") + body
        for neg, body in pieces[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _eval_ast(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_ast(node.operand, text)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError(f"exponent must be an integer literal in {text!r}")
            return left ** node.right.value
        right = _eval_ast(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
    raise ValueError(f"unsupported syntax in {text!r}")


def var(name):
    return Poly.var(name)


def poly(text):
    return Poly.parse(text)


def is_numeric(x):
    return isinstance(x, (int, Fraction)) or (isinstance(x, Poly) and x.is_constant())


def to_number(x):
    if isinstance(x, Poly):
        return x.constant_value()
    return x


# interpolation

def _newton_to_monomial(xs, ys):
    """Coefficients (low to high) of the interpolating polynomial, over Q."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * n
    # Horner on the Newton form
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[i]
    return coeffs


def interpolate(points, name="t"):
    """Polynomial in ``name`` through ``points`` = [(x, y), ...].

    Values may be numbers or polynomials in other variables; each
    monomial of the values is interpolated separately. Non-integral
    coefficients raise ``ArithmeticError``.
    """
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    ys = [y for _, y in points]
    if not xs:
        return Poly()
    i = register(name)
    if all(not isinstance(y, Poly) for y in ys):
        groups = {(): [Fraction(y) for y in ys]}
    else:
        keys = set()
        for y in ys:
            keys.update(Poly.coerce(y)._terms if isinstance(y, Poly) else ([()] if y else []))
        groups = {}
        for k in keys:
            col = []
            for y in ys:
                if isinstance(y, Poly):
                    col.append(Fraction(y._terms.get(k, 0)))
                else:
                    col.append(Fraction(y) if k == () else Fraction(0))
            groups[k] = col
    out = {}
    for rest, col in groups.items():
        if rest and len(rest) > i and rest[i]:
            raise ValueError(f"values already depend on {name}")
        coeffs = _newton_to_monomial(xs, col)
        for power, c in enumerate(coeffs):
            if not c:
                continue
            if c.denominator != 1:
                raise ArithmeticError(
                    f"non-integral coefficient {c}: degree bound too small")
            exps = list(rest) + [0] * max(0, i + 1 - len(rest))
            exps[i] = power
            out[_strip(exps)] = c.numerator
    return Poly._raw(out)


def sample_points(count):
    """Small symmetric integer nodes 0, 1, -1, 2, -2, ..."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts[:count]


# matrices

def transpose(rows):
    return tuple(zip(*rows)) if rows else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(_dot(r, c) for c in bt) for r in a)


def _dot(r, c):
    total = 0
    for x, y in zip(r, c):
        if x and y:
            total = total + x * y
    return total


def det_bareiss(rows):
    """Fraction-free determinant of an integer matrix."""
    a = [[as_int(x) for x in r] for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_fraction(rows):
    """Gaussian elimination over the rationals."""
    a = [[Fraction(to_number(x)) for x in r] for r in rows]
    n = len(a)
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        result *= a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] / a[k][k]
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return normalize_number(result)


def det_expand(rows):
    """Division-free determinant by row expansion memoized on column sets."""
    n = len(rows)
    if n == 0:
        return Poly.const(1)
    memo = {}

    def rec(mask, r):
        if r == n:
            return 1
        if mask in memo:
            return memo[mask]
        total = 0
        above = 0  # used columns greater than c, counted as we scan right to left
        for c in range(n - 1, -1, -1):
            if mask >> c & 1:
                above += 1
                continue
            entry = rows[r][c]
            if entry:
                sub = rec(mask | (1 << c), r + 1)
                if sub:
                    term = entry * sub
                    total = total - term if above & 1 else total + term
        memo[mask] = total
        return total

    return Poly.coerce(rec(0, 0)) if _has_poly(rows) else rec(0, 0)


def _has_poly(rows):
    return any(isinstance(x, Poly) and not x.is_constant() for r in rows for x in r)


def det(rows):
    """Exact determinant; integers via Bareiss, rationals by elimination,
    polynomials by memoized expansion."""
    rows = [list(r) for r in rows]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix is not square")
    if _has_poly(rows):
        return det_expand(rows)
    vals = [[to_number(x) for x in r] for r in rows]
    if all(isinstance(x, int) for r in vals for x in r):
        return det_bareiss(vals)
    return det_fraction(vals)
