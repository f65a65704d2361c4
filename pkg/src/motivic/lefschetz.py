"""Exact arithmetic in the localized Grothendieck ring Z[L, L^-1, (L^n - 1)^-1].

L is the class of the affine line.  Elements are stored as exact fractions
whose denominator is a power of L times a product of cyclotomic polynomials
Phi_d(L); since every L^n - 1 is inverted, the units of the ring are exactly
+-L^a * prod Phi_d(L)^e, and this factored denominator makes unit recognition
syntactic and equality decidable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import json
import re


class DivisionByNonUnit(ArithmeticError):
    """Raised when dividing by an element that is not a unit of the localization."""


class NotInS(ValueError):
    """Raised when a polynomial is not a product of x^a and factors x^b - 1."""


# ---------------------------------------------------------------------------
# Laurent polynomials in L
# ---------------------------------------------------------------------------

class LPoly:
    """Integer Laurent polynomial in L, stored as {exponent: coefficient}."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.c = {}
        elif isinstance(coeffs, dict):
            self.c = {e: v for e, v in coeffs.items() if v}
        elif isinstance(coeffs, int):
            self.c = {0: coeffs} if coeffs else {}
        else:
            raise TypeError(f"cannot build LPoly from {type(coeffs)}")

    @staticmethod
    def term(coeff: int, exp: int = 0) -> "LPoly":
        return LPoly({exp: coeff})

    @staticmethod
    def L(exp: int = 1) -> "LPoly":
        return LPoly({exp: 1})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly(other)
        return isinstance(other, LPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LPoly(other)
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e, 0) + v
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return LPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return LPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LPoly()
            return LPoly({e: v * other for e, v in self.c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = out.get(e, 0) + v1 * v2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return LPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of LPoly; use LClass")
        out = LPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LPoly":
        """Multiply by L^k."""
        return LPoly({e + k: v for e, v in self.c.items()})

    def valuation(self) -> int:
        if not self.c:
            return 0
        return min(self.c)

    def degree(self) -> int:
        if not self.c:
            return 0
        return max(self.c)

    def leading(self) -> int:
        return self.c[self.degree()] if self.c else 0

    def constant(self) -> int:
        return self.c.get(0, 0)

    def divexact(self, other: "LPoly"):
        """Exact division; returns None if `other` does not divide self over Z."""
        if not other:
            raise ZeroDivisionError
        if not self:
            return LPoly()
        rem = dict(self.c)
        dd = other.degree()
        lead = other.c[dd]
        low = self.valuation() - other.valuation()  # least possible quotient exp
        out: dict[int, int] = {}
        # peel from the top; exponents may be negative throughout
        while rem:
            e = max(rem)
            if e - dd < low:
                return None
            q, r = divmod(rem[e], lead)
            if r or not q:
                return None
            out[e - dd] = q
            for eo, vo in other.c.items():
                ee = eo + e - dd
                w = rem.get(ee, 0) - vo * q
                if w:
                    rem[ee] = w
                else:
                    rem.pop(ee, None)
        return LPoly(out)

    def substitute_power(self, n: int) -> "LPoly":
        """L -> L^n."""
        return LPoly({e * n: v for e, v in self.c.items()})

    def eval_int(self, q: int):
        """Value at L = q (q-integer; Fraction when negative exponents occur)."""
        if any(e < 0 for e in self.c):
            return sum(Fraction(v, q ** -e) if e < 0 else Fraction(v * q ** e)
                       for e, v in self.c.items())
        return sum(v * q ** e for e, v in self.c.items())

    def items(self):
        return sorted(self.c.items())

    def __str__(self):
        return format_lpoly(self, "L")

    def __repr__(self):
        return f"LPoly({self})"


def format_lpoly(p: LPoly, sym: str) -> str:
    if not p:
        return "0"
    parts = []
    for e, v in sorted(p.c.items(), reverse=True):
        if e == 0:
            term = str(abs(v))
        else:
            base = sym if e == 1 else f"{sym}^{e}"
            term = base if abs(v) == 1 else f"{abs(v)}{base}"
        if not parts:
            parts.append(("-" if v < 0 else "") + term)
        else:
            parts.append(("-" if v < 0 else "+") + term)
    return "".join(parts)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> LPoly:
    """The d-th cyclotomic polynomial Phi_d in L."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = LPoly({d: 1, 0: -1})
    for e in range(1, d):
        if d % e == 0:
            q = p.divexact(cyclotomic(e))
            assert q is not None
            p = q
    return p


def _cyc_candidates(max_deg: int):
    """All d with phi(d) <= max_deg; phi(d) >= sqrt(d/2) gives the bound."""
    bound = 2 * max_deg * max_deg + 2
    for d in range(1, bound + 1):
        if cyclotomic(d).degree() <= max_deg:
            yield d


def factor_unit(p: LPoly):
    """Factor p as sign * L^a * prod Phi_d; returns (sign, a, [d...]) or None."""
    if not p:
        return None
    a = p.valuation()
    p = p.shift(-a)
    ds = []
    d = 1
    deg = p.degree()
    bound = 2 * deg * deg + 2
    while d <= bound and p.degree() > 0:
        phi = cyclotomic(d)
        if phi.degree() > p.degree():
            d += 1
            continue
        q = p.divexact(phi)
        if q is not None:
            ds.append(d)
            p = q
            bound = 2 * p.degree() * p.degree() + 2
        else:
            d += 1
    if p.degree() == 0 and p.constant() in (1, -1):
        return (p.constant(), a, sorted(ds))
    return None


# ---------------------------------------------------------------------------
# Classes in the localized ring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LClass:
    """num / (L^lpow * prod Phi_d(L)) in canonical (fully cancelled) form.

    den_cyc is the sorted multiset of cyclotomic indices.  Construct via
    LClass.make / from_poly / parse; the raw constructor trusts its input.
    """

    num_c: tuple          # sorted ((exp, coeff), ...) of the numerator
    den_cyc: tuple        # sorted cyclotomic indices, with multiplicity
    lpow: int             # exponent a of the L^a denominator factor

    # -- construction -------------------------------------------------------

    @staticmethod
    def make(num: LPoly, den_cyc=(), lpow: int = 0, den_pows=()) -> "LClass":
        """Canonicalize num / (L^lpow * prod Phi_d * prod (L^n - 1) for n in den_pows)."""
        cyc = list(den_cyc)
        for n in den_pows:
            cyc.extend(d for d in range(1, n + 1) if n % d == 0)
        if not num:
            return LClass((), (), 0)
        v = num.valuation()
        num = num.shift(-v)
        lpow -= v
        kept = []
        for d in sorted(cyc, reverse=True):
            q = num.divexact(cyclotomic(d))
            if q is not None:
                num = q
            else:
                kept.append(d)
        return LClass(tuple(num.items()), tuple(sorted(kept)), lpow)

    @staticmethod
    def from_poly(p) -> "LClass":
        if isinstance(p, int):
            p = LPoly(p)
        return LClass.make(p)

    @staticmethod
    def one() -> "LClass":
        return LClass.from_poly(1)

    @staticmethod
    def zero() -> "LClass":
        return LClass.from_poly(0)

    @staticmethod
    def L(exp: int = 1) -> "LClass":
        return LClass.from_poly(LPoly.L(exp))

    # -- views --------------------------------------------------------------

    @property
    def num(self) -> LPoly:
        return LPoly(dict(self.num_c))

    def den_poly(self) -> LPoly:
        p = LPoly(1)
        for d in self.den_cyc:
            p = p * cyclotomic(d)
        return p.shift(self.lpow)

    def den_grouped(self):
        """Greedy regrouping of the cyclotomic multiset into (L^n - 1) blocks.

        Returns (groups, extras): groups is a sorted list of n with
        (L^n - 1) fully present; extras the leftover cyclotomic indices.
        """
        from collections import Counter
        pool = Counter(self.den_cyc)
        groups = []
        for n in sorted(pool, reverse=True):
            divs = [d for d in range(1, n + 1) if n % d == 0]
            while all(pool[d] >= 1 for d in divs):
                for d in divs:
                    pool[d] -= 1
                groups.append(n)
        extras = sorted(pool.elements())
        return sorted(groups), extras

    def is_polynomial(self) -> bool:
        return not self.den_cyc and self.lpow <= 0

    def is_zero(self) -> bool:
        return not self.num_c

    def is_one(self) -> bool:
        return self == LClass.one()

    def is_unit(self) -> bool:
        return factor_unit(self.num) is not None

    def total_degree(self) -> int:
        n = self.num
        return max(abs(n.degree()), abs(n.valuation())) + sum(
            cyclotomic(d).degree() for d in self.den_cyc) + abs(self.lpow)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LClass):
            return other
        if isinstance(other, (int, LPoly)):
            return LClass.from_poly(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        from collections import Counter
        sc, oc = Counter(self.den_cyc), Counter(o.den_cyc)
        union = sc | oc
        lp = max(self.lpow, o.lpow)
        mine = LPoly.L(lp - self.lpow)
        theirs = LPoly.L(lp - o.lpow)
        for d, m in union.items():
            if m - sc[d]:
                mine = mine * cyclotomic(d) ** (m - sc[d])
            if m - oc[d]:
                theirs = theirs * cyclotomic(d) ** (m - oc[d])
        return LClass.make(self.num * mine + o.num * theirs,
                           tuple(union.elements()), lp)

    __radd__ = __add__

    def __neg__(self):
        return LClass(tuple((e, -v) for e, v in self.num_c), self.den_cyc, self.lpow)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return LClass.from_poly(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return LClass.make(self.num * o.num, self.den_cyc + o.den_cyc,
                           self.lpow + o.lpow)

    __rmul__ = __mul__

    def inverse(self) -> "LClass":
        fac = factor_unit(self.num)
        if fac is None:
            raise DivisionByNonUnit(f"{self} is not invertible in the localization")
        sign, a, ds = fac
        num = LPoly.term(sign)
        for d in self.den_cyc:
            num = num * cyclotomic(d)
        return LClass.make(num.shift(self.lpow), tuple(ds), a)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return LClass.from_poly(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LClass.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- I/O ------------------------------------------------------------------

    def __str__(self):
        num = self.num if self.lpow >= 0 else self.num.shift(-self.lpow)
        s = format_lpoly(num, "L")
        groups, extras = self.den_grouped()
        dens = []
        if self.lpow > 0:
            dens.append("L" if self.lpow == 1 else f"L^{self.lpow}")
        dens += [f"(L^{n}-1)" if n > 1 else "(L-1)" for n in groups]
        dens += [f"({format_lpoly(cyclotomic(d), 'L')})" for d in extras]
        if dens:
            if len(num.c) > 1:
                s = f"({s})"
            return f"{s} / {''.join(dens)}"
        return s

    def __repr__(self):
        return f"LClass({self})"

    def to_json(self) -> dict:
        groups, extras = self.den_grouped()
        out = {"num": [list(t) for t in self.num_c],
               "den_cyc": groups, "den_Lpow": self.lpow}
        if extras:
            out["den_extra"] = extras
        return out

    @staticmethod
    def from_json(obj: dict) -> "LClass":
        num = LPoly({int(e): int(v) for e, v in obj["num"]})
        return LClass.make(num, den_cyc=tuple(obj.get("den_extra", ())),
                           lpow=int(obj.get("den_Lpow", 0)),
                           den_pows=tuple(obj.get("den_cyc", ())))


# ---------------------------------------------------------------------------
# {GL_n}
# ---------------------------------------------------------------------------

def gl_class(n: int) -> LClass:
    """(L^n - L^{n-1}) * (L^n - L^{n-2}) * ... * (L^n - 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = LPoly(1)
    for i in range(n):
        p = p * (LPoly.L(n) - LPoly.L(i))
    return LClass.from_poly(p)


# ---------------------------------------------------------------------------
# Parser: textual syntax for LClass and LClass expressions
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(L|\d+|\^|\+|-|\*|/|\(|\))")


class _Parser:
    def __init__(self, text: str):
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"bad character in expression at {text[pos:]!r}")
            self.toks.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, t):
        got = self.next()
        if got != t:
            raise ValueError(f"expected {t!r}, got {got!r}")

    # expr := term (('+'|'-') term)* ; term := factor (('*'|'/')? factor)*
    # factor := atom ('^' int)? ; atom := 'L' | int | '(' expr ')'
    def expr(self) -> LClass:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> LClass:
        out = self.factor()
        while True:
            t = self.peek()
            if t == "*":
                self.next()
                out = out * self.factor()
            elif t == "/":
                self.next()
                out = out / self.factor()
            elif t in ("L", "(") or (t is not None and t.isdigit()):
                out = out * self.factor()   # juxtaposition, e.g. (L-1)(L+1), 2L
            else:
                return out

    def factor(self) -> LClass:
        a = self.atom()
        if self.peek() == "^":
            self.next()
            neg = False
            if self.peek() == "-":
                self.next()
                neg = True
            e = self.next()
            if not (e and e.isdigit()):
                raise ValueError("exponent must be an integer")
            k = -int(e) if neg else int(e)
            return a ** k
        return a

    def atom(self) -> LClass:
        t = self.next()
        if t == "L":
            return LClass.L()
        if t is not None and t.isdigit():
            return LClass.from_poly(int(t))
        if t == "(":
            out = self.expr()
            self.expect(")")
            return out
        if t == "-":
            return -self.atom()
        raise ValueError(f"unexpected token {t!r}")


def parse_lclass(text: str) -> LClass:
    """Parse expressions like '(L^2-L)(L^2-1)' or '1 / (L^2-1)(L-1)'."""
    p = _Parser(text)
    out = p.expr()
    if p.peek() is not None:
        raise ValueError(f"trailing tokens at {p.toks[p.i:]}")
    return out


def parse_int_poly(text: str, sym: str = "x") -> LPoly:
    """Parse an integer polynomial in `sym` (used for witt f inputs etc.)."""
    cls = parse_lclass(text.replace(sym, "L"))
    if cls.den_cyc or cls.lpow > 0:
        raise ValueError(f"{text!r} is not a polynomial")
    return cls.num.shift(-cls.lpow)


# ---------------------------------------------------------------------------
# Witt-style series 1 + a_1 t + ... (group law = series multiplication)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WittSeries:
    """Element of 1 + t*A[[t]] truncated at order N, coefficients LClass."""

    order: int
    coeffs: tuple  # (a_1, ..., a_N)

    @staticmethod
    def one(order: int) -> "WittSeries":
        return WittSeries(order, tuple(LClass.zero() for _ in range(order)))

    @staticmethod
    def from_coeffs(cs, order=None) -> "WittSeries":
        cs = [c if isinstance(c, LClass) else LClass.from_poly(c) for c in cs]
        if order is None:
            order = len(cs)
        cs = (cs + [LClass.zero()] * order)[:order]
        return WittSeries(order, tuple(cs))

    def coeff(self, n: int) -> LClass:
        if n == 0:
            return LClass.one()
        if 1 <= n <= self.order:
            return self.coeffs[n - 1]
        raise IndexError(n)

    def truncate(self, order: int) -> "WittSeries":
        if order >= self.order:
            return self
        return WittSeries(order, self.coeffs[:order])

    def mul(self, other: "WittSeries") -> "WittSeries":
        n = min(self.order, other.order)
        out = []
        for k in range(1, n + 1):
            s = LClass.zero()
            for i in range(0, k + 1):
                s = s + self.coeff(i) * other.coeff(k - i)
            out.append(s)
        return WittSeries(n, tuple(out))

    def inv(self) -> "WittSeries":
        out: list[LClass] = []
        for k in range(1, self.order + 1):
            s = self.coeff(k)
            for i in range(1, k):
                s = s + self.coeff(k - i) * out[i - 1]
            out.append(-s)
        return WittSeries(self.order, tuple(out))

    def pow(self, e: int) -> "WittSeries":
        base = self if e >= 0 else self.inv()
        e = abs(e)
        out = WittSeries.one(base.order)
        while e:
            if e & 1:
                out = out.mul(base)
            base = base.mul(base)
            e >>= 1
        return out

    def scale_t(self, c: LClass) -> "WittSeries":
        """psi(t) -> psi(c*t); with additivity this is SGA6 product against 1+ct."""
        return WittSeries(self.order, tuple(
            self.coeffs[k] * c ** (k + 1) for k in range(self.order)))

    def sga6_mul_special(self, exponents: dict[int, int]) -> "WittSeries":
        """SGA6 product of self with lambda_t of sum n_i L^i = prod (1+L^i t)^{n_i}.

        Only this special shape is needed: psi o (1+at) = psi(at) plus additivity.
        """
        out = WittSeries.one(self.order)
        for i, n_i in exponents.items():
            out = out.mul(self.scale_t(LClass.L(i)).pow(n_i))
        return out

    def __str__(self):
        terms = ["1"] + [f"({c})t^{k}" for k, c in enumerate(self.coeffs, 1)
                         if not c.is_zero()]
        return " + ".join(terms) + f" + O(t^{self.order + 1})"


def sigma_series(x: LPoly, order: int) -> WittSeries:
    """sigma_t(x) for a Laurent polynomial x = sum c_m L^m, to the given order.

    sigma_t(L^m) has sigma^n(L^m) = L^{mn}; sums multiply, negatives invert.
    """
    out = WittSeries.one(order)
    for m, c in sorted(x.c.items()):
        geo = WittSeries(order, tuple(LClass.L(m * n) for n in range(1, order + 1)))
        out = out.mul(geo.pow(c))
    return out


def lambda_series(x: LPoly, order: int) -> WittSeries:
    """lambda_t(x) = sigma_{-t}(x)^{-1} ... for polynomial x: prod (1+L^i t)^{c_i}."""
    out = WittSeries.one(order)
    for m, c in sorted(x.c.items()):
        lin = WittSeries.from_coeffs([LClass.L(m)], order)
        out = out.mul(lin.pow(c))
    return out


def witt_localized_inverse(f: LPoly, order: int) -> WittSeries:
    """Solve prod_i psi(L^i t)^{n_i} = 1 + t to the given order, f = sum n_i x^i.

    f must lie in the family generated by x and x^b - 1 under products (so
    that each f(L^n) is a unit).  Coefficients a_n are found inductively:
    the t^n coefficient of the product is f(L^n) a_n + (polynomial in a_{<n}).
    """
    _check_in_S(f)
    exps = dict(f.c)
    coeffs: list[LClass] = []
    for n in range(1, order + 1):
        partial = WittSeries.from_coeffs(coeffs + [LClass.zero()], n)
        prod = partial.sga6_mul_special(exps)
        target = LClass.one() if n == 1 else LClass.zero()
        resid = target - prod.coeff(n)
        fLn = LClass.from_poly(f.substitute_power(n))
        coeffs.append(resid / fLn)
    return WittSeries(order, tuple(coeffs))


def _check_in_S(f: LPoly):
    if not f or any(e < 0 for e in f.c):
        raise NotInS(f"{f} is not in the multiplicative family")
    g = f.shift(-f.valuation())
    while g.degree() > 0:
        for b in range(g.degree(), 0, -1):
            q = g.divexact(LPoly({b: 1, 0: -1}))
            if q is not None:
                g = q
                break
        else:
            raise NotInS(f"{f} has a factor outside x^a * prod(x^b - 1)")
    if g.constant() != 1:
        raise NotInS(f"{f} has content {g.constant()} != 1")


# ---------------------------------------------------------------------------
# Euler specialization: L -> q, expanded in Z((q^-1))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EulerSeries:
    """Truncated Laurent series in q^-1: coeffs maps k to the q^{-k} coefficient."""

    depth: int
    coeffs: tuple  # ((k, coeff), ...) sorted by k; k ranges over >= -top

    @staticmethod
    def make(cdict: dict[int, int], depth: int) -> "EulerSeries":
        return EulerSeries(depth, tuple(sorted(
            (k, v) for k, v in cdict.items() if v and k <= depth)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def truncate(self, depth: int) -> "EulerSeries":
        return EulerSeries.make({k: v for k, v in self.coeffs if k <= depth}, depth)

    def __add__(self, other: "EulerSeries") -> "EulerSeries":
        depth = min(self.depth, other.depth)
        out = dict(self.coeffs)
        for k, v in other.coeffs:
            out[k] = out.get(k, 0) + v
        return EulerSeries.make(out, depth)

    def __mul__(self, other: "EulerSeries") -> "EulerSeries":
        depth = min(self.depth, other.depth)
        out: dict[int, int] = {}
        for k1, v1 in self.coeffs:
            for k2, v2 in other.coeffs:
                if k1 + k2 <= depth:
                    out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return EulerSeries.make(out, depth)

    def __str__(self):
        if not self.coeffs:
            return f"0 + O(q^-{self.depth + 1})"
        parts = []
        for k, v in self.coeffs:
            if k == 0:
                t = str(abs(v))
            else:
                base = f"q^{-k}" if k < 0 else f"q^-{k}"
                t = base if abs(v) == 1 else f"{abs(v)}{base}"
            parts.append(("-" if v < 0 else ("+" if parts else "")) + t)
        return "".join(parts) + f" + O(q^-{self.depth + 1})"


def euler_specialize(x: LClass, depth: int | None = None) -> EulerSeries:
    """Substitute L -> q and expand in powers of q^-1 down to q^-depth.

    Exact long division of integer Laurent polynomials; for rational
    functions, depth max-degree + 1 already separates distinct values.
    """
    if depth is None:
        depth = 2 * x.total_degree() + 4
    num = x.num
    if not num:
        return EulerSeries.make({}, depth)
    den = x.den_poly()
    out: dict[int, int] = {}
    rem = dict(num.c)
    dd = den.degree()
    # den is monic by construction
    low_stop = -depth  # emit powers q^e with e >= -depth
    while rem:
        e = max(rem)
        if e - dd < low_stop:
            break
        c = rem[e]
        out[-(e - dd)] = c
        for eo, vo in den.c.items():
            ee = eo + e - dd
            w = rem.get(ee, 0) - vo * c
            if w:
                rem[ee] = w
            else:
                rem.pop(ee, None)
    return EulerSeries.make(out, depth)


def lclass_to_json_str(x: LClass) -> str:
    return json.dumps(x.to_json())
