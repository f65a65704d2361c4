"""Equivalence flags on {1..n}: conjugacy classes, stabilizers, and the
recursion certifying that the class of the classifying stack of a symmetric
group is 1.

A flag is a strictly increasing chain of set partitions above the (implicit)
discrete partition.  Two flags are conjugate under the symmetric group
exactly when their nested block structures are isomorphic, so conjugacy
classes are enumerated directly as recursively sorted "type trees" - no
canonicalization search is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import math

from .lefschetz import LClass, LPoly


class SizeLimit(ValueError):
    """Ground set too large for the configured resource guard."""


MAX_N = 9


def _guard(n: int, limit: int | None = None):
    lim = MAX_N if limit is None else limit
    if not 1 <= n <= lim:
        raise SizeLimit(f"n={n} outside 1..{lim}")


# ---------------------------------------------------------------------------
# Set partitions and flags
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n}; blocks sorted by (size, smallest element)."""

    n: int
    blocks: tuple  # tuple of tuples of ints

    @staticmethod
    def make(n: int, blocks) -> "SetPartition":
        bl = tuple(sorted((tuple(sorted(b)) for b in blocks),
                          key=lambda b: (len(b), b[0])))
        seen = [x for b in bl for x in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}: {blocks}")
        return SetPartition(n, bl)

    @staticmethod
    def discrete(n: int) -> "SetPartition":
        return SetPartition.make(n, [[i] for i in range(1, n + 1)])

    @staticmethod
    def full(n: int) -> "SetPartition":
        return SetPartition.make(n, [list(range(1, n + 1))])

    def index_of(self) -> dict:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        idx = other.index_of()
        return all(len({idx[x] for x in b}) == 1 for b in self.blocks)

    def is_discrete(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def apply(self, perm: dict) -> "SetPartition":
        return SetPartition.make(self.n, [[perm[x] for x in b] for b in self.blocks])

    def __str__(self):
        return "|".join("".join(str(x) for x in b) for b in self.blocks)

    @staticmethod
    def parse(text: str, n: int | None = None) -> "SetPartition":
        blocks = [[int(ch) for ch in part] for part in text.split("|")]
        size = n if n is not None else max(x for b in blocks for x in b)
        return SetPartition.make(size, blocks)


@dataclass(frozen=True)
class EquivFlag:
    """Strict chain R_1 < R_2 < ... < R_k of partitions, R_0 = discrete implicit."""

    n: int
    chain: tuple  # of SetPartition

    @staticmethod
    def make(n: int, chain) -> "EquivFlag":
        chain = tuple(chain)
        if not chain:
            raise ValueError("flag must have length >= 1")
        prev = SetPartition.discrete(n)
        for r in chain:
            if r.n != n:
                raise ValueError("mixed ground sets")
            if not (prev.refines(r) and prev != r):
                raise ValueError(f"chain not strictly increasing at {r}")
            prev = r
        if chain[0].is_discrete():
            raise ValueError("chain must exclude the discrete partition")
        return EquivFlag(n, chain)

    @property
    def length(self) -> int:
        return len(self.chain)

    @property
    def top(self) -> SetPartition:
        return self.chain[-1]

    def type_forest(self):
        """Nested-multiset encoding; the complete conjugacy invariant.

        A level-j node is the sorted tuple of its level-(j-1) children (the
        blocks of R_{j-1} inside it); level-0 nodes are single elements.
        """
        def block_type(elts, j):
            if j == 0:
                return ()
            if j == 1:
                return tuple(() for _ in elts)
            idx = self.chain[j - 2].index_of()
            sub: dict[int, list] = {}
            for x in elts:
                sub.setdefault(idx[x], []).append(x)
            return tuple(sorted(block_type(tuple(v), j - 1)
                                for v in sub.values()))
        k = self.length
        return tuple(sorted(block_type(b, k) for b in self.top.blocks))

    def __str__(self):
        return " < ".join(str(p) for p in self.chain)


# ---------------------------------------------------------------------------
# Type trees: conjugacy classes of flags without enumeration of chains
# ---------------------------------------------------------------------------
#
# A level-k tree is a sorted tuple of level-(k-1) trees; a level-0 tree is
# the atom ().  Leaves are ground-set elements.  A flag class of length k on
# n elements is a multiset of level-k trees with n leaves total, subject to
# global strictness: at every level 1..k some node must actually split.

@lru_cache(maxsize=None)
def _trees(s: int, k: int):
    """All level-k trees with s leaves, as (type, order, strictmask)."""
    if k == 0:
        return (((), 1, 0),) if s == 1 else ()
    atoms = []
    for t in range(1, s + 1):
        for ty, order, mask in _trees(t, k - 1):
            atoms.append((t, ty, order, mask))
    atoms.sort(key=lambda a: (a[0], a[1]))
    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            kids = []
            order = 1
            mask = 0
            count = 0
            for (t, ty, o, m), mult in chosen:
                kids.extend([ty] * mult)
                order *= o ** mult * math.factorial(mult)
                mask |= m
                count += mult
            if count >= 2:
                mask |= 1 << k
            out.append((tuple(sorted(kids)), order, mask))
            return
        for i in range(start, len(atoms)):
            t = atoms[i][0]
            if t > remaining:
                break
            for mult in range(1, remaining // t + 1):
                rec(i + 1, remaining - mult * t, chosen + [(atoms[i], mult)])

    rec(0, s, [])
    return tuple(out)


def _leafcount(ty) -> int:
    if ty == ():
        return 1
    return sum(_leafcount(c) for c in ty)


@dataclass(frozen=True)
class FlagClass:
    """Conjugacy class of flags with its basic numerical data."""

    rep: EquivFlag
    n_f: int          # length of the chain
    d_f: int          # number of blocks of the top partition
    stab_order: int
    orbit_size: int

    def to_json(self) -> dict:
        return {"flag": [str(p) for p in self.rep.chain],
                "n_f": self.n_f, "d_f": self.d_f,
                "stab_order": self.stab_order, "orbit_size": self.orbit_size}


def _materialize(forest, k: int, n: int) -> EquivFlag:
    """Build the canonical representative flag of a forest of level-k trees."""
    counter = [0]
    leaf_sets: list[list[list[int]]] = [[] for _ in range(k + 1)]

    def walk(ty, level):
        if level == 0:
            counter[0] += 1
            leaf = counter[0]
            leaf_sets[0].append([leaf])
            return [leaf]
        elts = []
        for child in ty:
            elts += walk(child, level - 1)
        leaf_sets[level].append(elts)
        return elts

    for ty in sorted(forest):
        walk(ty, k)
    chain = [SetPartition.make(n, leaf_sets[lvl]) for lvl in range(1, k + 1)]
    return EquivFlag.make(n, chain)


def enumerate_flag_classes(n: int, limit: int | None = None) -> list[FlagClass]:
    """One FlagClass per Sigma_n-orbit of strict flags of length >= 1."""
    _guard(n, limit)
    out = []
    nfact = math.factorial(n)
    for k in range(1, n):
        want = (1 << (k + 1)) - 2  # bits 1..k all set
        atoms = []
        for t in range(1, n + 1):
            for ty, order, mask in _trees(t, k):
                atoms.append((t, ty, order, mask))
        atoms.sort(key=lambda a: (a[0], a[1]))
        forests = []

        def rec(start, remaining, chosen):
            if remaining == 0:
                forests.append(list(chosen))
                return
            for i in range(start, len(atoms)):
                t = atoms[i][0]
                if t > remaining:
                    break
                for mult in range(1, remaining // t + 1):
                    rec(i + 1, remaining - mult * t, chosen + [(atoms[i], mult)])

        rec(0, n, [])
        for chosen in forests:
            mask = 0
            order = 1
            trees = []
            for (t, ty, o, m), mult in chosen:
                mask |= m
                order *= o ** mult * math.factorial(mult)
                trees.extend([ty] * mult)
            if mask & want != want:
                continue
            rep = _materialize(tuple(trees), k, n)
            out.append(FlagClass(rep=rep, n_f=k, d_f=len(trees),
                                 stab_order=order,
                                 orbit_size=nfact // order))
    out.sort(key=lambda c: (c.n_f, c.rep.type_forest()))
    return out


# ---------------------------------------------------------------------------
# Stabilizer decomposition as products and wreaths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Symmetric:
    t: int

    def order(self) -> int:
        return math.factorial(self.t)

    def __str__(self):
        return f"S{self.t}"


@dataclass(frozen=True)
class Wreath:
    inner: object
    t: int

    def order(self) -> int:
        return self.inner.order() ** self.t * math.factorial(self.t)

    def __str__(self):
        return f"Wr({self.inner},{self.t})"


@dataclass(frozen=True)
class ProductTree:
    parts: tuple

    def order(self) -> int:
        out = 1
        for p in self.parts:
            out *= p.order()
        return out

    def __str__(self):
        return "x".join(str(p) for p in self.parts)


def _group_of_forest(forest):
    """Automorphism group of a multiset of trees, as a structure tree.

    Isomorphic trees of multiplicity t contribute (inner wr Sigma_t);
    distinct isomorphism types multiply.
    """
    from collections import Counter
    cnt = Counter(forest)
    parts = []
    for ty in sorted(cnt):
        inner = _group_of_tree(ty)
        t = cnt[ty]
        if isinstance(inner, Symmetric) and inner.t == 1:
            parts.append(Symmetric(t))
        elif t == 1:
            parts.append(inner)
        else:
            parts.append(Wreath(inner, t))
    if len(parts) == 1:
        return parts[0]
    return ProductTree(tuple(parts))


def _group_of_tree(ty):
    if ty == ():
        return Symmetric(1)
    return _group_of_forest(ty)


def stabiliser_decomposition(f: EquivFlag):
    """Product/wreath tree for the group of permutations preserving the flag."""
    return _group_of_forest(f.type_forest())


def stabiliser_order_bruteforce(f: EquivFlag) -> int:
    """|N_R| by direct search over all permutations; oracle for small n."""
    import itertools
    count = 0
    for perm in itertools.permutations(range(1, f.n + 1)):
        pm = {i + 1: perm[i] for i in range(f.n)}
        if all(r.apply(pm) == r for r in f.chain):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Characteristic polynomial and the recursion identity
# ---------------------------------------------------------------------------

def char_poly_sigma(n: int) -> LPoly:
    """x^n - x for n >= 2 (only the full partition is invariant), x for n=1.

    Sign convention (-1)^{n_f+1} in the flag sum; the statement-level sign
    (-1)^{n_f} contradicts the telescoping expansion and x^n - x itself.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p = LPoly({n: 1})
    if n >= 2:
        # invariant strict flags: only (full); n_f = 1, d_f = 1
        p = p - LPoly({1: 1})
    return p


def recursion_identity(n: int, limit: int | None = None) -> dict:
    """Check L^n = (L^n - L^{n-1}) + sum_f (-1)^{n_f+1} L^{d_f} exactly.

    The sum runs over conjugacy class representatives of strict flags, with
    every {B N(f)} = 1 and {V_e/Sigma_n} = L^n - L^{n-1} (monic squarefree
    polynomials of degree n).
    """
    if n < 2:
        raise SizeLimit("recursion needs n >= 2")
    _guard(n, limit)
    classes = enumerate_flag_classes(n, limit)
    lhs = LClass.from_poly(LPoly({n: 1}))
    free = LPoly({n: 1, n - 1: -1})
    total = LPoly(free.c)
    terms = []
    for c in classes:
        sign = 1 if (c.n_f + 1) % 2 == 0 else -1
        total = total + LPoly({c.d_f: sign})
        terms.append({"flag": [str(p) for p in c.rep.chain],
                      "n_f": c.n_f, "d_f": c.d_f, "sign": sign})
    rhs = LClass.from_poly(total)
    return {"n": n, "holds": lhs == rhs, "lhs": lhs, "rhs": rhs,
            "free_stratum": LClass.from_poly(free),
            "num_classes": len(classes), "terms": terms}


# ---------------------------------------------------------------------------
# The induction certificate for {B Sigma_n} = 1
# ---------------------------------------------------------------------------

def _derive_group(tree, n: int, uses: set) -> dict:
    """Derivation that the classifying-stack class of `tree` is 1.

    Wreath layers use sigma_s^t(1) = {B Sigma_t} = 1 with t < n; products
    multiply; Symmetric(t) leaves cite the overall induction for t < n.
    """
    if isinstance(tree, Symmetric):
        if tree.t > 1:
            uses.add(tree.t)
        return {"group": str(tree), "rule": "induction",
                "cites": f"BSigma_{tree.t}=1"}
    if isinstance(tree, Wreath):
        if tree.t > 1:
            uses.add(tree.t)
        return {"group": str(tree), "rule": "wreath",
                "outer": f"sigma_s^{tree.t}(1) = BSigma_{tree.t} = 1",
                "inner": _derive_group(tree.inner, n, uses)}
    return {"group": str(tree), "rule": "product",
            "parts": [_derive_group(p, n, uses) for p in tree.parts]}


def bsigma_certificate(n: int, limit: int | None = None) -> dict:
    """Value of the class for Sigma_n (always 1) plus an induction certificate.

    The recursion identity is divided by the characteristic polynomial
    L^n - L (a unit of the localization); flag stabilizers reduce through
    their product/wreath decomposition to smaller symmetric groups.
    """
    _guard(n, limit)
    if n == 1:
        return {"n": 1, "value": LClass.one(), "derivation": [], "uses": []}
    classes = enumerate_flag_classes(n, limit)
    uses: set[int] = set()
    derivations = []
    normal_terms = []   # flags normalised by the whole group: moved left
    rhs = LPoly({n: 1, n - 1: -1})
    lhs = LPoly({n: 1})
    for c in classes:
        sign = 1 if (c.n_f + 1) % 2 == 0 else -1
        if c.stab_order == math.factorial(n):
            lhs = lhs - LPoly({c.d_f: sign})
            normal_terms.append({"flag": [str(p) for p in c.rep.chain],
                                 "moved_left": True, "sign": sign})
            continue
        tree = stabiliser_decomposition(c.rep)
        derivations.append({
            "flag": [str(p) for p in c.rep.chain],
            "stabiliser": str(tree), "order": c.stab_order,
            "sign": sign, "d_f": c.d_f,
            "derivation": _derive_group(tree, n, uses),
        })
        rhs = rhs + LPoly({c.d_f: sign})
    phi = LClass.from_poly(lhs)          # = L^n - L, the char polynomial
    value = LClass.from_poly(rhs) / phi  # unit division in the localization
    cert = {"n": n, "value": value,
            "char_poly": lhs,
            "normalised_flags": normal_terms,
            "derivation": derivations,
            "uses": sorted(uses),
            "grounding": "BSigma_1=1"}
    return cert


def certificate_is_valid(cert: dict) -> bool:
    """Structural validity: value 1, every citation strictly smaller than n."""
    n = cert["n"]
    if cert["value"] != LClass.one():
        return False
    if n == 1:
        return True
    if any(t >= n for t in cert["uses"]):
        return False

    def check(node) -> bool:
        rule = node["rule"]
        if rule == "induction":
            t = int(node["cites"].split("_")[1].split("=")[0])
            return t < n
        if rule == "wreath":
            return check(node["inner"])
        return all(check(p) for p in node["parts"])

    return all(check(d["derivation"]) for d in cert["derivation"])


# ---------------------------------------------------------------------------
# Brute-force oracles (small n)
# ---------------------------------------------------------------------------

def all_partitions_of_set(n: int):
    """Every SetPartition of {1..n} (Bell(n) of them)."""
    def rec(i, blocks):
        if i > n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()
    for bl in rec(1, []):
        yield SetPartition.make(n, bl)


def count_strict_chains(n: int) -> int:
    """Number of strict chains discrete < R_1 < ... < R_k (k >= 1), directly."""
    parts = list(all_partitions_of_set(n))
    coarser = {p: [q for q in parts if p != q and p.refines(q)] for p in parts}
    total = 0
    stack = [p for p in parts if not p.is_discrete()]
    while stack:
        p = stack.pop()
        total += 1
        stack.extend(coarser[p])
    return total
