"""Finite groups of weighted-linear projective maps: closure, fixed loci, orbits,
invariant lines, normalizers and fingerprint identification."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, asdict
from functools import lru_cache
from importlib import resources
from math import gcd

from .exactalg import roots_in_field
from .projspace import WLinMap, WProjPoint, apply, _inverse, _det

DEFAULT_BOUND = 10000


class ClosureBoundExceeded(RuntimeError):
    pass


class NotASubgroup(ValueError):
    pass


class EigenvalueNotFound(ArithmeticError):
    pass


# ---------------------------------------------------------------- abstract finite groups

def _close(gens, mul, identity, bound):
    """Breadth-first closure.  Returns elements, index map and, for every element but
    the identity, the (parent index, generator index) with elem = parent * gen."""
    elems = [identity]
    index = {identity: 0}
    parent = [None]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elems[i]
        for k, g in enumerate(gens):
            y = mul(x, g)
            if y not in index:
                if len(elems) >= bound:
                    raise ClosureBoundExceeded(f"closure exceeds {bound} elements")
                index[y] = len(elems)
                elems.append(y)
                parent.append((i, k))
                queue.append(index[y])
    return elems, index, parent


def _cayley(elems, index, parent, gens, mul):
    """Full multiplication table from right multiplication by generators."""
    n = len(elems)
    right = [[index[mul(x, g)] for g in gens] for x in elems]
    table = []
    for i in range(n):
        row = [0] * n
        row[0] = i
        for j in range(1, n):
            p, k = parent[j]
            row[j] = right[row[p]][k]
        table.append(row)
    return table


class FiniteGroup:
    """A group given by its multiplication table on 0..n-1 (0 is the identity)."""

    def __init__(self, table, gens=None):
        self.table = table
        self.n = len(table)
        self.gens = list(gens) if gens is not None else list(range(1, self.n))
        row0 = table[0]
        if any(row0[j] != j for j in range(self.n)):
            raise ValueError("element 0 must be the identity")
        self._inv = [row.index(0) for row in table]

    @classmethod
    def from_permutations(cls, perms, bound: int = DEFAULT_BOUND) -> "FiniteGroup":
        perms = [tuple(p) for p in perms]
        deg = max((len(p) for p in perms), default=0)
        ident = tuple(range(deg))

        def mul(a, b):
            return tuple(a[i] for i in b)

        elems, index, parent = _close(perms, mul, ident, bound)
        table = _cayley(elems, index, parent, perms, mul)
        return cls(table, [index[p] for p in perms])

    def __len__(self):
        return self.n

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def element_order(self, a) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def orders(self):
        return [self.element_order(a) for a in range(self.n)]

    def closure(self, gens) -> frozenset:
        seen = {0}
        queue = deque([0])
        gens = list(gens)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def commutator(self, a, b):
        t, i = self.table, self._inv
        return t[t[i[a]][i[b]]][t[a][b]]

    def normal_closure(self, gens) -> frozenset:
        gens = set(gens)
        while True:
            N = self.closure(gens)
            new = set()
            for g in self.gens:
                gi = self._inv[g]
                for h in gens:
                    c = self.table[self.table[g][h]][gi]
                    if c not in N:
                        new.add(c)
            if not new:
                return N
            gens |= new

    def derived_subgroup(self) -> frozenset:
        comms = {self.commutator(a, b) for a in self.gens for b in self.gens}
        comms.discard(0)
        return self.normal_closure(comms) if comms else frozenset({0})

    def center(self) -> frozenset:
        t = self.table
        return frozenset(z for z in range(self.n) if all(t[z][g] == t[g][z] for g in self.gens))

    def normalizer(self, H) -> frozenset:
        """Normalizer of the subgroup with element set H (a frozenset of indices)."""
        H = frozenset(H)
        hgens = _generators_of(self, H)
        t, inv = self.table, self._inv
        return frozenset(g for g in range(self.n)
                         if all(t[t[g][h]][inv[g]] in H for h in hgens))

    def abelian_invariants(self):
        D = self.derived_subgroup()
        coset = [None] * self.n
        reps = []
        for x in range(self.n):
            if coset[x] is None:
                cid = len(reps)
                reps.append(x)
                for d in D:
                    coset[self.table[x][d]] = cid
        m = len(reps)
        qorder = []
        for r in reps:
            k, x = 1, r
            while coset[x] != coset[0]:
                x = self.table[x][r]
                k += 1
            qorder.append(k)
        return _invariant_factors(qorder, m)

    def fingerprint(self) -> "GroupFingerprint":
        orders = self.orders()
        hist = Counter(orders)
        exp = 1
        for o in hist:
            exp = exp * o // gcd(exp, o)
        return GroupFingerprint(
            order=self.n, exponent=exp,
            order_histogram=tuple(sorted(hist.items())),
            abelian_invariants=tuple(self.abelian_invariants()),
            center_order=len(self.center()),
            derived_order=len(self.derived_subgroup()))

    def subgroup_table(self, H) -> "FiniteGroup":
        """H (a set of indices closed under the product) as a group in its own right."""
        elems = [0] + sorted(x for x in H if x != 0)
        pos = {x: i for i, x in enumerate(elems)}
        try:
            table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        except KeyError:
            raise NotASubgroup("set is not closed under the product") from None
        return FiniteGroup(table)


def _generators_of(G: FiniteGroup, H) -> list:
    """A small generating set of the subgroup H (greedy)."""
    gens = []
    span = frozenset({0})
    for h in sorted(H, key=lambda x: -G.element_order(x)):
        if h not in span:
            gens.append(h)
            span = G.closure(gens)
            if len(span) == len(H):
                break
    return gens


def _factorint(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors(orders, m):
    """Invariant factors of an abelian group of order m from its element orders."""
    if m == 1:
        return []
    per_prime = {}
    for p, e in _factorint(m).items():
        # s_j = log_p #{x : x^(p^j) = 1}
        s = [0]
        for j in range(1, e + 1):
            cnt = sum(1 for o in orders if (p ** j) % o == 0)
            s.append(_ilog(cnt, p))
        # number of cyclic factors of exponent >= j is s_j - s_(j-1)
        ge = [s[j] - s[j - 1] for j in range(1, e + 1)]
        exps = []
        for j in range(e, 0, -1):
            cnt = ge[j - 1] - (ge[j] if j < e else 0)
            exps += [j] * cnt
        per_prime[p] = sorted(exps, reverse=True)
    k = max(len(v) for v in per_prime.values())
    factors = [1] * k
    for p, exps in per_prime.items():
        for i, e in enumerate(exps):
            factors[i] *= p ** e
    return sorted(factors)


def _ilog(n, p):
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    exponent: int
    order_histogram: tuple
    abelian_invariants: tuple
    center_order: int
    derived_order: int

    def __post_init__(self):
        if sum(c for _, c in self.order_histogram) != self.order:
            raise ValueError("order histogram does not sum to the order")
        if self.order % self.center_order or self.order % self.derived_order:
            raise ValueError("center and derived subgroup orders must divide the order")

    def as_dict(self):
        d = asdict(self)
        d["order_histogram"] = {str(k): v for k, v in self.order_histogram}
        d["abelian_invariants"] = list(self.abelian_invariants)
        return d


# ---------------------------------------------------------------- reference groups

@lru_cache(maxsize=None)
def reference_groups() -> dict:
    """Named groups shipped as permutation generators."""
    text = resources.files("dpverify").joinpath("data/reference_groups.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def reference_fingerprint(name: str) -> GroupFingerprint:
    refs = reference_groups()
    if name not in refs:
        raise KeyError(f"no reference model named {name!r}")
    return FiniteGroup.from_permutations(refs[name]["generators"]).fingerprint()


def match_named(fp: GroupFingerprint, name: str) -> bool:
    return fp == reference_fingerprint(name)


def identify(fp: GroupFingerprint) -> list:
    """All reference names whose fingerprint equals fp."""
    return [n for n in reference_groups() if reference_fingerprint(n) == fp]


# ---------------------------------------------------------------- projective groups

def _identity_like(g: WLinMap) -> WLinMap:
    f = g.field
    n = len(g.block)
    return WLinMap([[f.one if i == j else f.zero for j in range(n)] for i in range(n)],
                   [f.one] * len(g.heavy), f)


class ProjGroup:
    """Finite group of canonically scaled weighted-linear maps."""

    def __init__(self, gens, bound: int = DEFAULT_BOUND, identity: WLinMap | None = None):
        gens = list(gens)
        if not gens and identity is None:
            raise ValueError("need at least one generator or an explicit identity")
        for g in gens:
            g.check_invertible()
        ident = identity if identity is not None else _identity_like(gens[0])
        self.generators = gens
        elems, index, parent = _close(gens, lambda a, b: a * b, ident, bound)
        self.elements = elems
        self.index = index
        self._abstract = None
        self._parent = parent

    @classmethod
    def from_elements(cls, elements, generators=None) -> "ProjGroup":
        elements = list(elements)
        gens = generators if generators is not None else elements[1:]
        ident = next(e for e in elements if e.is_identity())
        return cls(gens, bound=len(elements) + 1, identity=ident)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    @property
    def field(self):
        return self.elements[0].field

    @property
    def weights(self):
        return self.elements[0].weights

    def abstract(self) -> FiniteGroup:
        if self._abstract is None:
            table = _cayley(self.elements, self.index, self._parent, self.generators,
                            lambda a, b: a * b)
            self._abstract = FiniteGroup(table, [self.index[g] for g in self.generators])
        return self._abstract

    def fingerprint(self) -> GroupFingerprint:
        return self.abstract().fingerprint()

    def indices_of(self, H) -> frozenset:
        try:
            return frozenset(self.index[h] for h in (H.elements if isinstance(H, ProjGroup) else H))
        except KeyError:
            raise NotASubgroup("subgroup element not found in the ambient group") from None

    def subgroup(self, gens) -> "ProjGroup":
        for g in gens:
            if g not in self.index:
                raise NotASubgroup(f"{g!r} is not in the ambient group")
        return ProjGroup(gens, bound=self.order + 1, identity=self.elements[0])

    def preserves(self, F) -> bool:
        return all(g.preserves(F) for g in self.generators)

    def __repr__(self):
        return f"ProjGroup(order={self.order})"


def group_closure(gens, bound: int = DEFAULT_BOUND) -> ProjGroup:
    return ProjGroup(gens, bound)


def normalizer(ambient: ProjGroup, H: ProjGroup) -> ProjGroup:
    idx = ambient.indices_of(H)
    A = ambient.abstract()
    if len(A.closure(idx)) != len(idx):
        raise NotASubgroup("H is not closed inside the ambient group")
    N = A.normalizer(idx)
    elems = [ambient.elements[i] for i in sorted(N)]
    gens = [ambient.elements[i] for i in _generators_of(A, N)]
    if not gens:
        return ProjGroup([], identity=elems[0])
    return ProjGroup(gens, bound=len(elems) + 1, identity=ambient.elements[0])


def fingerprint(G) -> GroupFingerprint:
    return G.fingerprint()


def subgroups_isomorphic_to_s3(G: ProjGroup) -> list:
    """All subgroups of G isomorphic to S3, as index sets."""
    A = G.abstract()
    orders = A.orders()
    threes = [x for x in range(A.n) if orders[x] == 3]
    twos = [x for x in range(A.n) if orders[x] == 2]
    seen = set()
    out = []
    for c in threes:
        for s in twos:
            if A.mul(A.mul(s, c), s) == A.inv(c):
                H = A.closure([c, s])
                if len(H) == 6 and H not in seen:
                    seen.add(H)
                    out.append(H)
    return out


# ---------------------------------------------------------------- eigenstructure

def charpoly(M, field):
    """Characteristic polynomial of M (low degree first, monic), Faddeev-LeVerrier."""
    n = len(M)
    zero, one = field.zero, field.one
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    coeffs = [zero] * n + [one]
    Mk = [row[:] for row in ident]
    c = one
    AM = None
    for k in range(1, n + 1):
        if k == 1:
            AM = [list(r) for r in M]
        else:
            AM = _mm(M, Mk)
        tr = sum((AM[i][i] for i in range(n)), zero)
        c = -tr / field(k)
        coeffs[n - k] = c
        Mk = [[AM[i][j] + (c if i == j else zero) for j in range(n)] for i in range(n)]
    return coeffs


def _mm(A, B):
    n, m, k = len(A), len(B), len(B[0])
    zero = A[0][0] * 0 if n else None
    return [[sum((A[i][t] * B[t][j] for t in range(m)), zero) for j in range(k)] for i in range(n)]


def nullspace(M, field):
    """Basis of the right kernel of M."""
    rows = [list(r) for r in M]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def _rank(vectors, field) -> int:
    if not vectors:
        return 0
    n = len(vectors[0])
    return n - len(nullspace_rows(vectors, field))


def nullspace_rows(vectors, field):
    return nullspace(vectors, field)


def eigenvalues(M, field):
    """Eigenvalues of M lying in the field (roots of unity are tried first)."""
    cp = charpoly(M, field)
    return roots_in_field(cp, field)


def eigenspaces(M, field):
    """[(eigenvalue, basis)], raising when the eigenvalues do not all lie in the field
    or M is not diagonalizable."""
    n = len(M)
    vals = eigenvalues(M, field)
    out = []
    total = 0
    for lam in vals:
        A = [[M[i][j] - (lam if i == j else field.zero) for j in range(n)] for i in range(n)]
        B = nullspace(A, field)
        out.append((lam, B))
        total += len(B)
    if total != n:
        raise EigenvalueNotFound("eigenvalues outside the field or non-diagonalizable element")
    return out


# ---------------------------------------------------------------- fixed loci

@dataclass
class LinearComponent:
    """Projective linear subspace of a weighted space: span of weight-1 vectors,
    optionally together with the weight-2 coordinate direction."""
    basis: list
    heavy: bool

    def dim(self) -> int:
        return len(self.basis) + (1 if self.heavy else 0) - 1


def _intersect_spans(A, B, field, n):
    """Intersection of two subspaces of K^n given by bases."""
    if not A or not B:
        return []
    # solve sum x_i a_i = sum y_j b_j
    cols = [list(a) for a in A] + [[-x for x in b] for b in B]
    M = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    ker = nullspace(M, field)
    vecs = []
    for k in ker:
        v = [field.zero] * n
        for i, a in enumerate(A):
            if k[i]:
                v = [x + k[i] * y for x, y in zip(v, a)]
        vecs.append(v)
    # independent subset
    out = []
    for v in vecs:
        if _rank(out + [v], field) > len(out):
            out.append(v)
    return out


def fixed_components(g: WLinMap):
    """Fixed locus of one element as a list of linear components."""
    field = g.field
    M = [list(r) for r in g.block]
    comps = []
    for lam, basis in eigenspaces(M, field):
        heavy = bool(g.heavy) and all(h == lam * lam for h in g.heavy)
        comps.append(LinearComponent(basis, heavy))
    if g.heavy and not any(c.heavy for c in comps):
        comps.append(LinearComponent([], True))
    return comps


def _intersect_components(A: LinearComponent, B: LinearComponent, field, n):
    basis = _intersect_spans(A.basis, B.basis, field, n)
    heavy = A.heavy and B.heavy
    if not basis and not heavy:
        return None
    return LinearComponent(basis, heavy)


@dataclass
class FixedLocus:
    points: list
    curves: list             # (LinearComponent, restricted equation)
    unresolved: list          # (LinearComponent, distinct point count) when points leave the field


def fixed_locus(S, G: ProjGroup) -> FixedLocus:
    field = S.field
    gens = [g for g in G.generators if not g.is_identity()]
    nb = len(gens[0].block) if gens else (4 if S.degree == 3 else 3)
    if not gens:
        ident = [[field.one if i == j else field.zero for j in range(nb)] for i in range(nb)]
        comps = [LinearComponent(ident, S.degree == 2)]
    else:
        comps = fixed_components(gens[0])
        for g in gens[1:]:
            nxt = []
            for a in comps:
                for b in fixed_components(g):
                    c = _intersect_components(a, b, field, nb)
                    if c is not None:
                        nxt.append(c)
            comps = nxt
    return _locus_on_surface(S, comps)


def _component_point(c: LinearComponent, coeffs, heavy_val, S):
    field = S.field
    nb = len(c.basis[0]) if c.basis else (4 if S.degree == 3 else 3)
    v = [field.zero] * nb
    for a, b in zip(coeffs, c.basis):
        v = [x + a * y for x, y in zip(v, b)]
    coords = v + ([heavy_val] if S.degree == 2 else [])
    return WProjPoint(coords, S.weights, field)


def _locus_on_surface(S, comps) -> FixedLocus:
    from .polyalg import PolyRing, binary_form
    field = S.field
    points, curves, unresolved = [], [], []

    def add(p):
        if p not in points:
            points.append(p)

    for c in comps:
        d = c.dim()
        if S.degree == 3:
            if d == 0:
                p = _component_point(c, [field.one], None, S)
                if S.contains(p):
                    add(p)
            elif d == 1:
                pts = _points_on_line(S, c.basis[0], c.basis[1])
                for p in pts:
                    add(p)
                cnt = _line_point_count(S, c.basis[0], c.basis[1])
                if cnt is None:
                    curves.append((c, None))
                elif cnt > len(pts):
                    unresolved.append((c, cnt))
            else:
                curves.append((c, _restrict(S, c)))
        else:
            k = len(c.basis)
            if k == 0:
                # (0:0:0:1) is never on t3^2 + F4 = 0
                continue
            if k == 1 and not c.heavy:
                p = _component_point(c, [field.one], field.zero, S)
                if S.contains(p):
                    add(p)
            elif k == 1 and c.heavy:
                v = c.basis[0]
                F4 = S.branch_quartic()
                val = F4.evaluate(v)
                # t3^2 = -F4(v)
                for r in roots_in_field([val, field.zero, field.one], field):
                    add(WProjPoint(list(v) + [r], S.weights, field))
                if len(roots_in_field([val, field.zero, field.one], field)) < (2 if val else 1):
                    unresolved.append((c, 2 if val else 1))
            elif k == 2 and not c.heavy:
                # a line of the plane with t3 = 0: finitely many points where F4 vanishes
                a, b = c.basis
                pts = _points_on_line(S, a + [field.zero], b + [field.zero])
                for p in pts:
                    add(p)
                cnt = _line_point_count(S, a + [field.zero], b + [field.zero])
                if cnt is None:
                    curves.append((c, None))
                elif cnt > len(pts):
                    unresolved.append((c, cnt))
            else:
                curves.append((c, _restrict(S, c)))
    return FixedLocus(points, curves, unresolved)


def _restrict(S, c: LinearComponent):
    """Equation of S restricted to the component, in coordinates along its basis."""
    from .polyalg import PolyRing
    field = S.field
    k = len(c.basis)
    names = tuple(f"u{i}" for i in range(k)) + (("w",) if S.degree == 2 and c.heavy else ())
    weights = (1,) * k + ((2,) if S.degree == 2 and c.heavy else ())
    R = PolyRing(field, names, weights)
    us = R.gens()
    nb = len(c.basis[0])
    imgs = []
    for j in range(nb):
        f = R.zero()
        for i in range(k):
            if c.basis[i][j]:
                f = f + us[i] * c.basis[i][j]
        imgs.append(f)
    if S.degree == 2:
        imgs.append(us[k] if c.heavy else R.zero())
    return S.F.substitute(imgs, R)


def _line_restriction_form(S, a, b):
    from .polyalg import PolyRing, binary_form
    R = PolyRing(S.field, ("s", "t"))
    s, t = R.gens()
    G = S.F.substitute([s * x + t * y for x, y in zip(a, b)], R)
    return binary_form(G, 0, 1, S.F.weighted_degree())


def _points_on_line(S, a, b):
    """Points of S on the line span(a, b) whose coordinates lie in the field."""
    field = S.field
    c = _line_restriction_form(S, a, b)   # c_k of s^k t^(d-k)
    if not any(c):
        return []
    out = []
    # roots with t != 0: set t = 1, polynomial in s with coefficients c_k
    if any(c[1:]):
        for r in roots_in_field(c, field):
            out.append(WProjPoint([r * x + y for x, y in zip(a, b)], S.weights, field))
    # root at t = 0 (the point a) when the top coefficient vanishes
    if not c[-1]:
        out.append(WProjPoint(list(a), S.weights, field))
    uniq = []
    for p in out:
        if p not in uniq:
            uniq.append(p)
    return uniq


def _line_point_count(S, a, b):
    from .polyalg import binary_distinct_roots
    c = _line_restriction_form(S, a, b)
    if not any(c):
        return None
    return binary_distinct_roots(c)


# ---------------------------------------------------------------- orbits and lines

def orbit(G: ProjGroup, p: WProjPoint) -> list:
    out = []
    for g in G.elements:
        q = apply(g, p)
        if q not in out:
            out.append(q)
    return out


class InfiniteFamily:
    def __repr__(self):
        return "InfiniteFamily"

    def __eq__(self, other):
        return isinstance(other, InfiniteFamily)

    def __hash__(self):
        return 0


INFINITE_FAMILY = InfiniteFamily()


def _distinct_eigen_element(G: ProjGroup):
    for g in G.elements:
        if g.is_identity():
            continue
        try:
            sp = eigenspaces([list(r) for r in g.block], g.field)
        except EigenvalueNotFound:
            continue
        if all(len(b) == 1 for _, b in sp):
            vecs = [b[0] for _, b in sp]
            vecs.sort(key=lambda v: next(i for i, x in enumerate(v) if x))
            return g, vecs
    return None, None


def _span_invariant(g: WLinMap, basis, field) -> bool:
    imgs = []
    for v in basis:
        imgs.append([sum((g.block[i][j] * v[j] for j in range(len(v))), field.zero)
                     for i in range(len(v))])
    return _rank(list(basis) + imgs, field) == len(basis)


def invariant_lines_finite(G: ProjGroup):
    """The G-invariant lines of P^3 as pairs of spanning vectors, or INFINITE_FAMILY."""
    field = G.field
    g, vecs = _distinct_eigen_element(G)
    if g is None:
        # every element has a repeated eigenvalue; for abelian groups a joint
        # eigenspace of dimension >= 2 gives infinitely many invariant lines
        A = G.abstract()
        if all(A.mul(a, b) == A.mul(b, a) for a in A.gens for b in A.gens):
            return INFINITE_FAMILY
        raise NotImplementedError("no element with distinct eigenvalues in a non-abelian group")
    n = len(vecs)
    lines = []
    for i in range(n):
        for j in range(i + 1, n):
            basis = [vecs[i], vecs[j]]
            if all(_span_invariant(h, basis, field) for h in G.generators):
                lines.append((i, j, basis))
    return lines


def line_orbit_table(S, G: ProjGroup):
    """For each invariant line: the points of S on it and the sorted orbit lengths."""
    lines = invariant_lines_finite(G)
    if lines is INFINITE_FAMILY:
        return INFINITE_FAMILY
    rows = []
    for i, j, basis in lines:
        pts = _points_on_line(S, basis[0], basis[1])
        cnt = _line_point_count(S, basis[0], basis[1])
        if cnt is not None and cnt != len(pts):
            raise EigenvalueNotFound("intersection points leave the field")
        lengths = []
        done = []
        for p in pts:
            if p in done:
                continue
            orb = orbit(G, p)
            done += orb
            lengths.append(len(orb))
        rows.append({"line": (i, j), "points": pts, "orbit_lengths": sorted(lengths)})
    return rows
