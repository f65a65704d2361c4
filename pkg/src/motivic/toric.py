"""Equivariant toric machinery: group-stable smooth complete simplicial fans,
Chow character series, Neron-Severi inclusion-exclusion checks, and the
lambda-series identity for classifying stacks of finite abelian groups.

All series live in Z[[s]] (or Z[[s^-1]]) with virtual-character coefficients;
everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import itertools
import math

from .reps import (FinGroup, VirtualCharacter, IntMatrix, mat, mat_identity,
                   mat_mul, mat_vec, det_bareiss, smith_normal_form,
                   kernel_basis, solve_exact, lambda_character)


class NonPolynomial(ArithmeticError):
    """Chow series failed to terminate; fan is not smooth and complete."""


class NotGenerating(ValueError):
    pass


# ---------------------------------------------------------------------------
# Polynomial/series helpers (coefficient lists, index = degree)
# ---------------------------------------------------------------------------

def poly_mul(a, b, trunc=None):
    n = len(a) + len(b) - 1
    if trunc is not None:
        n = min(n, trunc + 1)
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0 or i >= n:
            continue
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return out


def series_inv(a, trunc):
    """Inverse of an integer power series with a[0] = 1, to the given order."""
    assert a[0] == 1
    out = [1]
    for n in range(1, trunc + 1):
        s = 0
        for k in range(1, min(n, len(a) - 1) + 1):
            s += a[k] * out[n - k]
        out.append(-s)
    return out


def det_one_minus_sM(m: IntMatrix):
    """Coefficients of det(1 - s*M) as a list of ints (degree 0..n)."""
    n = len(m)
    out = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        # product over i of (delta - s*m)[i][perm[i]]: each factor is
        # [1,-m_ii] on the diagonal and [0,-m_ij] off it
        coeff = sign
        degree = 0
        ok = True
        for i, j in enumerate(perm):
            if i == j:
                continue
            if m[i][j] == 0:
                ok = False
                break
            coeff *= -m[i][j]
            degree += 1
        if not ok:
            continue
        # remaining diagonal factors (1 - s*m_ii) expand binomially
        diag = [i for i in range(n) if perm[i] == i]
        sub = [coeff]
        for i in diag:
            sub = poly_mul(sub, [1, -m[i][i]])
        for d, c in enumerate(sub):
            out[degree + d] += c
    return out


def _perm_sign(perm) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        ln = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def mat_inverse_exact(m: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix (exact, asserts integrality)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = [[a[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in out for x in row)
    return mat([[int(x) for x in row] for row in out])


# ---------------------------------------------------------------------------
# Fans with a finite group action
# ---------------------------------------------------------------------------

@dataclass
class GFan:
    """Smooth complete simplicial fan with a finite matrix-group action.

    cones holds every face (as a frozenset of ray indices) including the
    empty one; the group is generated by unimodular matrices permuting rays.
    """

    rank: int
    rays: tuple            # tuple of int tuples
    cones: frozenset       # of frozensets
    group: FinGroup
    matrices: dict         # element index -> IntMatrix
    ray_perms: dict        # element index -> tuple

    @staticmethod
    def make(rank, rays, maximal_cones, generators=()):
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        cones = set()
        for c in maximal_cones:
            c = frozenset(c)
            for k in range(len(c) + 1):
                for f in itertools.combinations(sorted(c), k):
                    cones.add(frozenset(f))
        cones = frozenset(cones)
        gen_mats = [mat(g) for g in generators]
        elems = [mat_identity(rank)]
        index = {elems[0]: 0}
        frontier = [elems[0]]
        while frontier:
            nxt = []
            for m in frontier:
                for g in gen_mats:
                    p = mat_mul(g, m)
                    if p not in index:
                        if len(index) > 20000:
                            raise ValueError("matrix group too large")
                        index[p] = len(elems)
                        elems.append(p)
                        nxt.append(p)
            frontier = nxt
        table = [[index[mat_mul(a, b)] for b in elems] for a in elems]
        group = FinGroup(table, check=False,
                         gens=[index[g] for g in gen_mats], label="fan group")
        ray_index = {r: i for i, r in enumerate(rays)}
        matrices = {}
        perms = {}
        for i, m in enumerate(elems):
            matrices[i] = m
            img = []
            for r in rays:
                v = mat_vec(m, r)
                if v not in ray_index:
                    raise ValueError(f"group does not permute rays: {m} {r}")
                img.append(ray_index[v])
            perms[i] = tuple(img)
        return GFan(rank, rays, cones, group, matrices, perms)

    def maximal_cones(self):
        return [c for c in self.cones if len(c) == self.rank]

    def stable_cones(self, g: int):
        p = self.ray_perms[g]
        return [c for c in self.cones if frozenset(p[i] for i in c) == c]

    def to_json(self) -> dict:
        gens = self.group.generators()
        return {"rank": self.rank, "rays": [list(r) for r in self.rays],
                "cones": [sorted(c) for c in self.maximal_cones()],
                "generators": [{"matrix": [list(r) for r in self.matrices[g]],
                                "ray_perm": [p + 1 for p in self.ray_perms[g]]}
                               for g in gens]}

    @staticmethod
    def from_json(obj: dict) -> "GFan":
        gens = [g["matrix"] for g in obj.get("generators", [])]
        fan = GFan.make(obj["rank"], obj["rays"], obj["cones"], gens)
        for g in obj.get("generators", []):
            if "ray_perm" in g:
                gm = mat(g["matrix"])
                want = tuple(p - 1 for p in g["ray_perm"])
                idx = next(i for i, m in fan.matrices.items() if m == gm)
                if fan.ray_perms[idx] != want:
                    raise ValueError("declared ray_perm does not match matrix")
        return fan


def _is_primitive(v) -> bool:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    return g == 1


def validate_fan(fan: GFan) -> dict:
    """Check all fan invariants; returns a report, never raises."""
    failures = []
    n = fan.rank
    if len(set(fan.rays)) != len(fan.rays):
        failures.append("duplicate rays")
    for i, r in enumerate(fan.rays):
        if not _is_primitive(r):
            failures.append(f"ray {i} not primitive")
    for c in fan.cones:
        if not c:
            continue
        m = mat([[fan.rays[i][k] for i in sorted(c)] for k in range(n)])
        dd, _, _ = smith_normal_form(m)
        diag = [dd[i][i] for i in range(len(c))]
        if any(d != 1 for d in diag):
            failures.append(f"cone {sorted(c)} not smooth (invariants {diag})")
    maxc = fan.maximal_cones()
    if not maxc:
        failures.append("no maximal cones")
    for c in fan.cones:
        if len(c) == n - 1:
            inc = [m for m in maxc if c <= m]
            if len(inc) != 2:
                failures.append(
                    f"wall {sorted(c)} lies in {len(inc)} maximal cones")
    # dual graph connectivity
    if maxc:
        adj = {i: set() for i in range(len(maxc))}
        for i, a in enumerate(maxc):
            for j in range(i + 1, len(maxc)):
                if len(a & maxc[j]) == n - 1:
                    adj[i].add(j)
                    adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(maxc):
            failures.append("dual graph not connected")
    for g in range(fan.group.n):
        m = fan.matrices[g]
        if abs(det_bareiss(m)) != 1:
            failures.append(f"group matrix {g} not unimodular")
        p = fan.ray_perms[g]
        for c in fan.cones:
            if frozenset(p[i] for i in c) not in fan.cones:
                failures.append(f"element {g} does not preserve cone {sorted(c)}")
                break
    return {"valid": not failures, "failures": failures}


# ---------------------------------------------------------------------------
# Chow character series
# ---------------------------------------------------------------------------

def _chow_series_raw(rank, cones, ray_perm, matrix, guard=3):
    """det(1 - s*g|M) * sum over g-stable faces of prod s^|c|/(1 - s^|c|),
    truncated at degree rank + guard; must vanish above rank."""
    trunc = rank + guard
    total = [0] * (trunc + 1)
    for c in cones:
        if frozenset(ray_perm[i] for i in c) != c:
            continue
        term = [1]
        for ln in _cycle_lengths(ray_perm, c):
            # s^ln / (1 - s^ln) = s^ln + s^2ln + ...
            geo = [0] * (trunc + 1)
            for k in range(ln, trunc + 1, ln):
                geo[k] = 1
            term = poly_mul(term, geo, trunc)
        for d, v in enumerate(term):
            total[d] += v
    out = poly_mul(det_one_minus_sM(matrix), total, trunc)
    out += [0] * (trunc + 1 - len(out))
    if any(out[rank + 1:]):
        raise NonPolynomial(f"Chow series has degree > {rank}: {out}")
    return out[:rank + 1]


def _cycle_lengths(perm, support):
    seen = set()
    for i in support:
        if i in seen:
            continue
        j = perm[i]
        ln = 1
        seen.add(i)
        while j != i:
            seen.add(j)
            j = perm[j]
            ln += 1
        yield ln


def chow_series_at(fan: GFan, g: int, guard=3):
    return _chow_series_raw(fan.rank, fan.cones, fan.ray_perms[g],
                            fan.matrices[g], guard)


def chow_characters(fan: GFan) -> list:
    """Chow groups as virtual characters, degree 0..rank.

    The value at the identity is the Betti/h-vector; coefficients assemble
    one VirtualCharacter per degree.
    """
    reps = fan.group.class_reps()
    per_rep = [chow_series_at(fan, r) for r in reps]
    return [VirtualCharacter.make(fan.group, [pr[k] for pr in per_rep])
            for k in range(fan.rank + 1)]


# ---------------------------------------------------------------------------
# Star fans (stratum closures) and the NS inclusion-exclusion
# ---------------------------------------------------------------------------

def star_fan_data(fan: GFan, cone):
    """Quotient-lattice data of the stratum closure along `cone`.

    Returns (rank', proj, lift, star_rays, star_cones, ray_map) where proj is
    the projection matrix M -> M/span(cone rays) in a basis where the image
    lattice is Z^{rank'}, and lift is a right inverse of proj.
    """
    t = len(cone)
    n = fan.rank
    if t == 0:
        ident = mat_identity(n)
        rays = list(fan.rays)
        return (n, ident, ident, rays,
                {c: c for c in fan.cones}, {i: i for i in range(len(rays))})
    b = mat([[fan.rays[i][k] for i in sorted(cone)] for k in range(n)])
    dd, u, v = smith_normal_form(b)
    assert all(dd[i][i] == 1 for i in range(t)), "cone not part of a basis"
    proj = mat([u[i] for i in range(t, n)])
    uinv = mat_inverse_exact(u)
    lift = mat([[uinv[i][j] for j in range(t, n)] for i in range(n)])
    star_rays = []
    ray_map = {}
    for i in range(len(fan.rays)):
        if i in cone:
            continue
        if frozenset(cone | {i}) in fan.cones:
            vimg = mat_vec(proj, fan.rays[i])
            if vimg not in star_rays:
                star_rays.append(vimg)
            ray_map[i] = star_rays.index(vimg)
    star_cones = set()
    for c in fan.cones:
        if cone <= c:
            star_cones.add(frozenset(ray_map[i] for i in c - cone))
    return (n - t, proj, lift, star_rays, frozenset(star_cones), ray_map)


def ns_series_at(fan: GFan, g: int):
    """NS_s of the open torus at group element g, via inclusion-exclusion
    over g-stable faces with signature weights."""
    n = fan.rank
    out = [0] * (n + 1)
    p = fan.ray_perms[g]
    for cone in fan.cones:
        if frozenset(p[i] for i in cone) != cone:
            continue
        sign = (-1) ** len(cone) * _perm_sign_on_subset(p, cone)
        rank2, proj, lift, srays, scones, rmap = star_fan_data(fan, cone)
        gmat2 = mat_mul(proj, mat_mul(fan.matrices[g], lift))
        sperm = [None] * len(srays)
        for i, si in rmap.items():
            sperm[si] = rmap[p[i]]
        series = _chow_series_raw(rank2, scones, tuple(sperm), gmat2)
        for d, v in enumerate(series):
            out[d] += sign * v
    return out


def _perm_sign_on_subset(perm, support) -> int:
    sign = 1
    for ln in _cycle_lengths(perm, support):
        if ln % 2 == 0:
            sign = -sign
    return sign


def lattice_character(fan: GFan) -> VirtualCharacter:
    """Character of the fan lattice M."""
    reps = fan.group.class_reps()
    return VirtualCharacter.make(
        fan.group, [sum(fan.matrices[r][i][i] for i in range(fan.rank))
                    for r in reps])


def ray_module_character(fan: GFan) -> VirtualCharacter:
    """Character of the permutation module Z[S] on the rays."""
    reps = fan.group.class_reps()
    return VirtualCharacter.make(
        fan.group, [sum(1 for i, j in enumerate(fan.ray_perms[r]) if i == j)
                    for r in reps])


def ray_kernel_character(fan: GFan) -> VirtualCharacter:
    """Character of ker(Z[S] -> M), the relation lattice of the rays."""
    rows = mat([[fan.rays[j][i] for j in range(len(fan.rays))]
                for i in range(fan.rank)])
    basis = kernel_basis(rows)
    reps = fan.group.class_reps()
    vals = []
    for r in reps:
        p = fan.ray_perms[r]
        tr = 0
        if basis:
            cols = []
            for bvec in basis:
                w = [0] * len(fan.rays)
                for i, x in enumerate(bvec):
                    w[p[i]] += x
                coords = solve_exact(basis, tuple(w))
                if coords is None:
                    raise ArithmeticError("ray kernel not stable")
                cols.append(coords)
            tr = sum(cols[i][i] for i in range(len(basis)))
        vals.append(tr)
    return VirtualCharacter.make(fan.group, vals)


def ns_torus_check(fan: GFan) -> dict:
    """Degreewise check of the torus NS formulas.

    part 1: the degree-k piece equals (-1)^{n-k} lambda^{n-k} of the lattice
    character; part 2: the degree-(n-1) piece equals the ray-relation
    character minus the ray permutation character.
    """
    n = fan.rank
    reps = fan.group.class_reps()
    per_rep = [ns_series_at(fan, r) for r in reps]
    ns_chars = [VirtualCharacter.make(fan.group, [pr[k] for pr in per_rep])
                for k in range(n + 1)]
    chi_m = lattice_character(fan)
    part1 = []
    for k in range(n + 1):
        lam = lambda_character(chi_m, n - k)
        want = lam if (n - k) % 2 == 0 else -lam
        part1.append({"degree": k, "holds": ns_chars[k] == want,
                      "ns": [str(v) for v in ns_chars[k].values],
                      "expected": [str(v) for v in want.values]})
    chi_ker = ray_kernel_character(fan)
    chi_zs = ray_module_character(fan)
    want2 = chi_ker - chi_zs
    got2 = ns_chars[n - 1] if n >= 1 else None
    part2 = {"holds": got2 == want2,
             "ns_deg_n_minus_1": [str(v) for v in got2.values],
             "kernel_minus_rays": [str(v) for v in want2.values]}
    return {"rank": n, "part1": part1, "part2": part2,
            "ns_degrees": [[str(v) for v in c.values] for c in ns_chars],
            "kernel_char": [str(v) for v in chi_ker.values],
            "holds": all(p["holds"] for p in part1) and part2["holds"]}


def signature_character(fan: GFan) -> dict:
    """sum over stable faces of (-1)^|T| sign(g|T), asserted equal to
    (-1)^rank * lambda^rank of the lattice character (the determinant)."""
    reps = fan.group.class_reps()
    vals = []
    for r in reps:
        p = fan.ray_perms[r]
        s = 0
        for cone in fan.cones:
            if frozenset(p[i] for i in cone) == cone:
                s += (-1) ** len(cone) * _perm_sign_on_subset(p, cone)
        vals.append(s)
    got = VirtualCharacter.make(fan.group, vals)
    lam = lambda_character(lattice_character(fan), fan.rank)
    want = lam if fan.rank % 2 == 0 else -lam
    dets = VirtualCharacter.make(
        fan.group, [(-1) ** fan.rank * det_bareiss(fan.matrices[r])
                    for r in reps])
    return {"character": got, "holds": got == want and got == dets,
            "values": [str(v) for v in got.values]}


# ---------------------------------------------------------------------------
# Library fans
# ---------------------------------------------------------------------------

def fan_projective(n: int, sym_action: bool = False) -> GFan:
    """The fan of P^n: rays e_1..e_n and -sum e_i; optionally the full
    permutation action of Sigma_{n+1} on the rays (lattice Z^{n+1}/diag)."""
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    maxc = [tuple(sorted(set(range(n + 1)) - {i})) for i in range(n + 1)]
    gens = []
    if sym_action and n >= 1:
        def matrix_for(perm):
            cols = []
            for i in range(n):
                cols.append(rays[perm[i]])
            return mat([[cols[j][i] for j in range(n)] for i in range(n)])
        swap = list(range(n + 1))
        swap[0], swap[1] = 1, 0
        cyc = list(range(1, n + 1)) + [0]
        gens = [matrix_for(swap), matrix_for(cyc)]
    return GFan.make(n, rays, maxc, gens)


def fan_p1_power(k: int, swap_gens=()) -> GFan:
    """(P^1)^k: rays +-e_i; swap_gens are transpositions (i, j) of factors."""
    rays = []
    for i in range(k):
        rays.append(tuple(1 if j == i else 0 for j in range(k)))
        rays.append(tuple(-1 if j == i else 0 for j in range(k)))
    maxc = []
    for signs in itertools.product((0, 1), repeat=k):
        maxc.append(tuple(2 * i + signs[i] for i in range(k)))
    gens = []
    for (i, j) in swap_gens:
        m = [[0] * k for _ in range(k)]
        for a in range(k):
            b = j if a == i else (i if a == j else a)
            m[b][a] = 1
        gens.append(m)
    return GFan.make(k, rays, maxc, gens)


def fan_twisted_torus(n: int) -> GFan:
    """The P^{n-1} fan with the full Sigma_n permutation of its n rays
    (the lattice is Z[{1..n}]/Z, the twisted (n-1)-torus model)."""
    return fan_projective(n - 1, sym_action=True)


# ---------------------------------------------------------------------------
# NS_s({B A}) = lambda_{-1/s}({A}) for finite abelian A
# ---------------------------------------------------------------------------

def _char_lambda_series(chi: VirtualCharacter, trunc: int, alternating=True):
    """[lambda^0 chi, ..., lambda^trunc chi], with (-1)^i signs if alternating."""
    out = []
    for i in range(trunc + 1):
        lam = lambda_character(chi, i)
        if alternating and i % 2 == 1:
            lam = -lam
        out.append(lam)
    return out


def _vc_series_mul(a, b, trunc, group):
    out = [VirtualCharacter.zero(group) for _ in range(trunc + 1)]
    for i, x in enumerate(a[:trunc + 1]):
        for j, y in enumerate(b[:trunc + 1]):
            if i + j <= trunc:
                out[i + j] = out[i + j] + x * y
    return out


def _vc_series_inv(a, trunc, group):
    one = VirtualCharacter.trivial(group)
    out = [one]
    for n in range(1, trunc + 1):
        s = VirtualCharacter.zero(group)
        for k in range(1, n + 1):
            if k < len(a):
                s = s + a[k] * out[n - k]
        out.append(-s)
    return out


def bclass_abelian_series(orders, auto_gens, gen_set, trunc=None) -> dict:
    """Verify NS_s({B A}) = lambda_{-1/s}({A}) through two pipelines.

    A = prod Z/orders[i] with automorphism group generated by the integer
    matrices auto_gens; gen_set is an action-stable generating subset S.
    Pipeline one expands det(1 - u g|N')/det(1 - u g|N) per class (u = 1/s);
    pipeline two applies lambda operations to the virtual character
    {N'} - {N} of the presentation ker -> Z[S] -> A.
    """
    k = len(orders)
    elems = list(itertools.product(*[range(d) for d in orders]))
    eidx = {e: i for i, e in enumerate(elems)}

    def apply_mat(m, x):
        return tuple(sum(m[i][j] * x[j] for j in range(k)) % orders[i]
                     for i in range(k))

    perm_gens = []
    for m in auto_gens:
        img = tuple(eidx[apply_mat(m, e)] for e in elems)
        if sorted(img) != list(range(len(elems))):
            raise ValueError("matrix does not act invertibly on A")
        perm_gens.append(img)
    if perm_gens:
        group = FinGroup.from_permutations(perm_gens, len(elems),
                                           label="Aut action")
    else:
        group = FinGroup.cyclic(1)

    s_elems = [tuple(s) for s in gen_set]
    sset = set(s_elems)
    # closure under addition must reach all of A
    reach = {tuple([0] * k)}
    frontier = list(reach)
    while frontier:
        nxt = []
        for x in frontier:
            for s in s_elems:
                y = tuple((a + b) % d for a, b, d in zip(x, s, orders))
                if y not in reach:
                    reach.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(reach) != len(elems):
        raise NotGenerating(f"S generates only {len(reach)} of {len(elems)}")

    # permutation action of the group on S
    def s_perm(g):
        if group.n == 1:
            return tuple(range(len(s_elems)))
        # group elements are permutations of A; read off images of S
        p = group.perms[g]
        out = []
        for s in s_elems:
            t = elems[p[eidx[s]]]
            if t not in sset:
                raise NotGenerating("S is not action-stable")
            out.append(s_elems.index(t))
        return tuple(out)

    # kernel lattice of Z[S] -> A
    rows = []
    for i in range(k):
        rows.append([s[i] for s in s_elems])
    # solve rows . x = 0 modulo orders: kernel of the combined integer map
    aug = mat([rows[i] + [orders[i] if j == i else 0 for j in range(k)]
               for i in range(k)])
    kb = kernel_basis(aug)
    gens_lattice = [tuple(v[:len(s_elems)]) for v in kb]
    # reduce the generating set to a basis of the projection
    gmat = mat(gens_lattice)
    dd, u, v = smith_normal_form(gmat)
    vin = mat_inverse_exact(v)
    basis = []
    for i in range(min(len(gens_lattice), len(s_elems))):
        if dd[i][i]:
            basis.append(tuple(dd[i][i] * x for x in vin[i]))
    assert len(basis) == len(s_elems), "kernel must have full rank"

    trunc = trunc if trunc is not None else 2 * len(s_elems) + 4
    reps = group.class_reps()

    # pipeline one: determinant ratio per class representative
    series_det = []
    for r in reps:
        p = s_perm(r)
        pm = mat([[1 if p[j] == i else 0 for j in range(len(s_elems))]
                  for i in range(len(s_elems))])
        cols = []
        for bvec in basis:
            w = mat_vec(pm, bvec)
            c = solve_exact(basis, w)
            if c is None:
                raise ArithmeticError("action does not preserve the kernel")
            cols.append(c)
        bmat = mat(list(zip(*cols)))
        numer = det_one_minus_sM(bmat)
        denom = det_one_minus_sM(pm)
        inv = series_inv(denom, trunc)
        prod = poly_mul(numer, inv, trunc)
        series_det.append(prod + [0] * (trunc + 1 - len(prod)))

    det_chars = [VirtualCharacter.make(group, [sd[d] for sd in series_det])
                 for d in range(trunc + 1)]

    # pipeline two: lambda series of the virtual character {N'} - {N}
    chi_n = VirtualCharacter.make(
        group, [sum(1 for i, j in enumerate(s_perm(r)) if i == j)
                for r in reps])
    chi_ker_vals = []
    for r in reps:
        p = s_perm(r)
        pm = mat([[1 if p[j] == i else 0 for j in range(len(s_elems))]
                  for i in range(len(s_elems))])
        cols = [solve_exact(basis, mat_vec(pm, bvec)) for bvec in basis]
        chi_ker_vals.append(sum(cols[i][i] for i in range(len(basis))))
    chi_ker = VirtualCharacter.make(group, chi_ker_vals)
    lam_ker = _char_lambda_series(chi_ker, trunc)
    lam_n = _char_lambda_series(chi_n, trunc)
    lam_chars = _vc_series_mul(lam_ker, _vc_series_inv(lam_n, trunc, group),
                               trunc, group)

    agree = all(det_chars[d] == lam_chars[d] for d in range(trunc + 1))
    is_one = all(lam_chars[d].is_zero() for d in range(1, trunc + 1))
    return {
        "orders": list(orders), "group_order": group.n, "trunc": trunc,
        "agree": agree,
        "series": [[str(v) for v in c.values] for c in lam_chars],
        "trivial_action": group.n == 1,
        "series_is_one": is_one,
        "kernel_char": [str(v) for v in chi_ker.values],
        "rays_char": [str(v) for v in chi_n.values],
    }
