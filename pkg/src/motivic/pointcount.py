"""F_q point-counting oracles for symmetric powers and twisted configuration spaces.

Everything here is an independent numeric check on the symbolic side: counts
are exact integers obtained from zeta-style exponential formulas with
Fraction arithmetic, and integrality failures signal inconsistent inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
import re


class InvalidQ(ValueError):
    """q is not a prime power."""


class NonIntegralCount(ArithmeticError):
    """A quotient count came out non-integral; the expression is inconsistent."""


# ---------------------------------------------------------------------------
# Expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Point:
    def count(self, q, r=1):
        return 1

    def __str__(self):
        return "pt"


@dataclass(frozen=True)
class Affine:
    m: int

    def count(self, q, r=1):
        return q ** (r * self.m)

    def __str__(self):
        return f"A{self.m}"


@dataclass(frozen=True)
class Gm:
    def count(self, q, r=1):
        return q ** r - 1

    def __str__(self):
        return "Gm"


@dataclass(frozen=True)
class Etale:
    """Finite etale set: points permuted by Frobenius."""

    perm: tuple  # 0-based images

    def count(self, q, r=1):
        p = list(range(len(self.perm)))
        for _ in range(r):
            p = [self.perm[i] for i in p]
        return sum(1 for i, j in enumerate(p) if i == j)

    def __str__(self):
        return "etale[" + ",".join(str(i + 1) for i in self.perm) + "]"


@dataclass(frozen=True)
class Product:
    parts: tuple

    def count(self, q, r=1):
        out = 1
        for p in self.parts:
            out *= p.count(q, r)
        return out

    def __str__(self):
        return "*".join(f"({p})" if isinstance(p, Union) else str(p)
                        for p in self.parts)


@dataclass(frozen=True)
class Union:
    parts: tuple

    def count(self, q, r=1):
        return sum(p.count(q, r) for p in self.parts)

    def __str__(self):
        return "+".join(str(p) for p in self.parts)


CountExpr = (Point, Affine, Gm, Etale, Product, Union)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return True  # q itself prime


def count_points(x, q: int, r: int = 1) -> int:
    """|X(F_{q^r})| by structural recursion."""
    if not is_prime_power(q):
        raise InvalidQ(f"{q} is not a prime power")
    if r < 1:
        raise InvalidQ("r must be >= 1")
    return x.count(q, r)


# expression grammar: pt | A<m> | Gm | etale[i,j,...] (1-based images) | + | * | ()
_EXPR_TOKEN = re.compile(r"\s*(etale\[[\d,\s]*\]|pt|A\d+|Gm|\+|\*|\(|\))")


def parse_expr(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _EXPR_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad token at {text[pos:]!r}")
        toks.append(m.group(1))
        pos = m.end()
    toks.append(None)
    i = 0

    def peek():
        return toks[i]

    def advance():
        nonlocal i
        i += 1
        return toks[i - 1]

    def atom():
        t = advance()
        if t == "pt":
            return Point()
        if t == "Gm":
            return Gm()
        if t is not None and t.startswith("A"):
            return Affine(int(t[1:]))
        if t is not None and t.startswith("etale["):
            body = t[len("etale["):-1].strip()
            imgs = [int(s) - 1 for s in body.split(",")] if body else []
            if sorted(imgs) != list(range(len(imgs))):
                raise ValueError(f"{t} is not a permutation")
            return Etale(tuple(imgs))
        if t == "(":
            e = expr()
            if advance() != ")":
                raise ValueError("unbalanced parentheses")
            return e
        raise ValueError(f"unexpected token {t!r}")

    def term():
        parts = [atom()]
        while peek() == "*":
            advance()
            parts.append(atom())
        return parts[0] if len(parts) == 1 else Product(tuple(parts))

    def expr():
        parts = [term()]
        while peek() == "+":
            advance()
            parts.append(term())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    out = expr()
    if peek() is not None:
        raise ValueError("trailing tokens")
    return out


# ---------------------------------------------------------------------------
# Partitions and cycle types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleType:
    """Partition of n as multiplicities {part_length: count}."""

    mults: tuple  # sorted ((l, m_l), ...)

    @staticmethod
    def from_parts(parts) -> "CycleType":
        out: dict[int, int] = {}
        for p in parts:
            out[p] = out.get(p, 0) + 1
        return CycleType(tuple(sorted(out.items())))

    @property
    def n(self) -> int:
        return sum(l * m for l, m in self.mults)

    def z(self) -> int:
        """Centralizer order prod l^{m_l} m_l!."""
        out = 1
        for l, m in self.mults:
            out *= l ** m * math.factorial(m)
        return out


def partitions(n: int):
    """All partitions of n as weakly decreasing tuples."""
    if n == 0:
        yield ()
        return
    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    yield from rec(n, n)


@lru_cache(maxsize=None)
def _moebius(n: int) -> int:
    if n == 1:
        return 1
    out, m = 1, n
    for p in range(2, n + 1):
        if p * p > m:
            break
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
    if m > 1:
        out = -out
    return out


def exact_degree_count(l: int, q: int) -> int:
    """Number of elements of F_{q^l} of exact degree l over F_q."""
    return sum(_moebius(l // d) * q ** d for d in range(1, l + 1) if l % d == 0)


# ---------------------------------------------------------------------------
# Symmetric powers via the zeta exponential
# ---------------------------------------------------------------------------

def sym_power_counts(x, q: int, upto: int, r: int = 1) -> list[int]:
    """(|sigma^1 X|, ..., |sigma^upto X|) over F_{q^r}.

    sum_n |sigma^n X| t^n = exp(sum_k |X(F_{q^rk})| t^k / k); exact Fractions,
    with integrality of every coefficient asserted.
    """
    cs = [count_points(x, q, r * k) for k in range(1, upto + 1)]
    e = [Fraction(1)]
    for n in range(1, upto + 1):
        s = sum(Fraction(cs[k - 1]) * e[n - k] for k in range(1, n + 1))
        e.append(s / n)
    out = []
    for n in range(1, upto + 1):
        if e[n].denominator != 1:
            raise NonIntegralCount(f"sigma^{n} count {e[n]} is not integral")
        out.append(int(e[n]))
    return out


def twisted_conf_count(lam: CycleType, q: int) -> int:
    """Configurations in Conf^n(A^1) fixed by (permutation of type lam) o Frobenius.

    For each l, pick m_l pairwise distinct exact-degree-l Frobenius orbits:
    prod_l prod_{j<m_l} (E_l - j*l).
    """
    out = 1
    for l, m in lam.mults:
        e_l = exact_degree_count(l, q)
        for j in range(m):
            out *= e_l - j * l
    return out


def sigma_Y_count_multi(colors, q: int) -> int:
    """Count of [prod_i X_i^{n_i}] x_{prod Sigma_{n_i}} Conf^m(A^1) over F_q.

    colors is a list of (counts_i, n_i) with counts_i(l) = |X_i(F_{q^l})| and
    m = sum n_i.  The configuration factor couples all colors (its points are
    globally pairwise distinct), so the average over prod Sigma_{n_i} runs
    over tuples of cycle types whose union feeds one twisted configuration
    count.  The action on the configuration factor is free.
    """
    total = Fraction(0)

    def rec(idx, acc_mults, weight):
        nonlocal total
        if idx == len(colors):
            combined = CycleType(tuple(sorted(acc_mults.items())))
            total += weight * twisted_conf_count(combined, q)
            return
        cnt, n_i = colors[idx]
        for parts in partitions(n_i):
            lam = CycleType.from_parts(parts)
            fix = 1
            for l, m in lam.mults:
                fix *= cnt(l) ** m
            merged = dict(acc_mults)
            for l, m in lam.mults:
                merged[l] = merged.get(l, 0) + m
            rec(idx + 1, merged, weight * Fraction(fix, lam.z()))

    rec(0, {}, Fraction(1))
    if total.denominator != 1:
        raise NonIntegralCount(f"free-quotient count {total} not integral")
    return int(total)


def sigma_Y_count(counts, n: int, q: int) -> int:
    """|X^n x_{Sigma_n} Conf^n(A^1)| over F_q, where counts(l) = |X(F_{q^l})|."""
    return sigma_Y_count_multi([(counts, n)], q)


def sigma_Y_count_expr(x, n: int, q: int) -> int:
    return sigma_Y_count(lambda l: count_points(x, q, l), n, q)


def verify_symmetric_identity(x, n: int, q: int) -> dict:
    """Check sigma^n({X}{A^1}) against the partition-indexed stratum sum,
    and the scaling |sigma^n(A^1 x X)| = q^n |sigma^n X|.

    The lambda-stratum is the coupled quotient
    [prod_i (sigma^{lambda_i} X)^{n_i}] x_{prod Sigma_{n_i}} Conf^m(A^1):
    the configuration points of different part sizes stay pairwise distinct
    (this is the stratum appearing in the decomposition of (X x A^1)^n, and
    the identity fails numerically for independent configuration factors).
    """
    xa1 = Product((x, Affine(1)))
    lhs = sym_power_counts(xa1, q, n)[n - 1]
    rhs = 0
    for parts in partitions(n):
        mult: dict[int, int] = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        colors = []
        for v, m in mult.items():
            # counts of sigma^v(X) over extensions, via nested zeta counts
            def cnt(l, v=v):
                return sym_power_counts(x, q, v, r=l)[v - 1]
            colors.append((cnt, m))
        rhs += sigma_Y_count_multi(colors, q)
    sig_x = sym_power_counts(x, q, n)[n - 1]
    return {
        "n": n, "q": q, "expr": str(x),
        "lhs": lhs, "rhs": rhs, "holds": lhs == rhs,
        "scaling_lhs": lhs, "scaling_rhs": q ** n * sig_x,
        "scaling_holds": lhs == q ** n * sig_x,
    }


def stratified_affine_count(n: int, q: int) -> dict:
    """Counts of the strata of A^n/Sigma_n by repetition pattern lambda.

    The lambda-stratum is Conf^m(A^1)/prod_l Sigma_{m_l} (m = number of
    blocks); its F_q-count is the free-action average with the coupling
    between block sizes handled by the combined cycle type.  The total must
    be q^n (monic degree-n polynomials).
    """
    one = lambda l: 1
    strata = {}
    for parts in partitions(n):
        lam = CycleType.from_parts(parts)
        strata[parts] = sigma_Y_count_multi([(one, m) for _, m in lam.mults], q)
    return {"strata": strata, "total": sum(strata.values()), "expected": q ** n}


# library of expression shapes used by the verification grids
def expression_library():
    return [
        Point(),
        Affine(1),
        Affine(2),
        Gm(),
        Union((Affine(1), Point())),                     # P^1
        Etale((1, 2, 0)),                                # 3-cycle Frobenius
        Etale((0, 1)),                                   # two rational points
        Product((Gm(), Union((Point(), Point())))),      # Gm x (2 points)
    ]
