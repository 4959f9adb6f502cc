"""Weighted projective points, weighted-linear maps and rational self-maps of a surface."""

from __future__ import annotations

import random

from .exactalg import BadPrime, PrimeField, PrimeReduction, roots_mod_p
from .polyalg import MPoly, PolyRing, principal_normal_form, principal_pivot


class BasePointError(ValueError):
    """All components of a rational map vanish at the point."""


class DegenerateComposition(ValueError):
    pass


def _field_of(values):
    for v in values:
        if hasattr(v, "field"):
            return v.field
    raise ValueError("cannot infer the coefficient field")


# ---------------------------------------------------------------- points

class WProjPoint:
    """Point of a weighted projective space, stored canonically normalized.

    The first nonzero weight-1 coordinate is scaled to 1; if every weight-1
    coordinate vanishes, the first nonzero weight-2 coordinate is scaled to 1.
    """

    __slots__ = ("coords", "weights", "field")

    def __init__(self, coords, weights=None, field=None):
        coords = list(coords)
        self.weights = tuple(weights) if weights is not None else (1,) * len(coords)
        if len(self.weights) != len(coords):
            raise ValueError("one weight per coordinate")
        if field is None:
            field = _field_of(coords)
        self.field = field
        coords = [field(c) for c in coords]
        if not any(coords):
            raise ValueError("all coordinates vanish")
        self.coords = tuple(self._normalize(coords))

    def _normalize(self, c):
        w = self.weights
        for i, x in enumerate(c):
            if x and w[i] == 1:
                lam = self.field.one / x
                return [v * lam ** w[k] if v else v for k, v in enumerate(c)]
        for i, x in enumerate(c):
            if x and w[i] == 2:
                inv = self.field.one / x  # λ² = 1/x
                return [v * inv ** (w[k] // 2) if v else v for k, v in enumerate(c)]
        for i, x in enumerate(c):
            if x:
                if any(v and w[k] % w[i] for k, v in enumerate(c)):
                    raise NotImplementedError("unsupported weight pattern")
                inv = self.field.one / x
                return [v * inv ** (w[k] // w[i]) if v else v for k, v in enumerate(c)]
        raise ValueError("all coordinates vanish")

    def __eq__(self, other):
        return isinstance(other, WProjPoint) and self.weights == other.weights \
            and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def reduce(self, r) -> "WProjPoint":
        return WProjPoint([r(c) for c in self.coords], self.weights, r.target)

    def serialize(self):
        return [c.serialize() for c in self.coords]


def point_eq(p: WProjPoint, q: WProjPoint) -> bool:
    if p.weights != q.weights:
        raise ValueError("weight mismatch")
    return p == q


def point(coords, weights=None, field=None) -> WProjPoint:
    return WProjPoint(coords, weights, field)


# ---------------------------------------------------------------- linear maps

def _matmul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(k):
            s = None
            for t in range(m):
                a = Ai[t]
                if a:
                    b = B[t][j]
                    if b:
                        s = a * b if s is None else s + a * b
            row.append(s)
        out.append(row)
    return out


def _det(M, field):
    n = len(M)
    A = [list(r) for r in M]
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c]
        inv = field.one / A[c][c]
        for r in range(c + 1, n):
            if A[r][c]:
                f = A[r][c] * inv
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return det


def _inverse(M, field):
    n = len(M)
    A = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        inv = field.one / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


class WLinMap:
    """Projective transformation acting linearly on weight-1 coordinates and by scalars
    on weight-2 coordinates.  Stored with the first nonzero block entry equal to one."""

    __slots__ = ("block", "heavy", "field", "_key")

    def __init__(self, block, heavy=(), field=None, normalize=True):
        if field is None:
            field = _field_of([x for row in block for x in row] + list(heavy))
        self.field = field
        block = [[field(x) for x in row] for row in block]
        heavy = [field(h) for h in heavy]
        if normalize:
            lead = next(x for row in block for x in row if x)
            if lead != field.one:
                inv = field.one / lead
                block = [[x * inv if x else x for x in row] for row in block]
                inv2 = inv * inv
                heavy = [h * inv2 for h in heavy]
        self.block = tuple(tuple(r) for r in block)
        self.heavy = tuple(heavy)
        self._key = (self.block, self.heavy)

    @property
    def n(self):
        return len(self.block) + len(self.heavy)

    @property
    def weights(self):
        return (1,) * len(self.block) + (2,) * len(self.heavy)

    def check_invertible(self):
        if not _det(self.block, self.field) or not all(self.heavy):
            raise ValueError("map is not invertible")
        return True

    def __eq__(self, other):
        return isinstance(other, WLinMap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other: "WLinMap") -> "WLinMap":
        """Composition self ∘ other."""
        blk = _matmul(self.block, other.block)
        zero = self.field.zero
        blk = [[zero if x is None else x for x in row] for row in blk]
        return WLinMap(blk, [a * b for a, b in zip(self.heavy, other.heavy)], self.field)

    def inverse(self) -> "WLinMap":
        return WLinMap(_inverse(self.block, self.field), [self.field.one / h for h in self.heavy],
                       self.field)

    def is_identity(self) -> bool:
        n = len(self.block)
        one, zero = self.field.one, self.field.zero
        return all(self.block[i][j] == (one if i == j else zero) for i in range(n) for j in range(n)) \
            and all(h == one for h in self.heavy)

    def order(self, bound: int = 10000) -> int:
        g = self
        k = 1
        while not g.is_identity():
            g = g * self
            k += 1
            if k > bound:
                raise ValueError("element order exceeds bound")
        return k

    def __call__(self, p: WProjPoint) -> WProjPoint:
        return apply(self, p)

    def images(self, ring: PolyRing):
        """Linear forms substituted for the coordinates when pulling back a polynomial."""
        gens = ring.gens()
        out = []
        for row in self.block:
            f = ring.zero()
            for a, t in zip(row, gens):
                if a:
                    f = f + t * a
            out.append(f)
        nb = len(self.block)
        for k, h in enumerate(self.heavy):
            out.append(gens[nb + k] * h)
        return out

    def pullback(self, F: MPoly) -> MPoly:
        return F.substitute(self.images(F.ring), F.ring)

    def preserves(self, F: MPoly) -> bool:
        """F∘g is a nonzero multiple of F."""
        G = self.pullback(F)
        m = next(iter(F.terms))
        c = G.coeff(m) / F.terms[m]
        return bool(c) and G == F * c

    def reduce(self, r) -> "WLinMap":
        return WLinMap([[r(x) for x in row] for row in self.block], [r(h) for h in self.heavy],
                       r.target)

    def as_rational_map(self, ring: PolyRing) -> "RationalMap":
        return RationalMap(self.images(ring))

    def serialize(self):
        return {"block": [[x.serialize() for x in row] for row in self.block],
                "heavy": [h.serialize() for h in self.heavy]}

    def __repr__(self):
        return f"WLinMap({[list(r) for r in self.block]}, heavy={list(self.heavy)})"


def diagonal(field, entries, nheavy: int = 0) -> WLinMap:
    n = len(entries) - nheavy
    blk = [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)]
    return WLinMap(blk, entries[n:], field)


def permutation(field, perm, heavy=()) -> WLinMap:
    """Map sending coordinate vector t to (t[perm[0]], t[perm[1]], ...)."""
    n = len(perm)
    blk = [[field.one if j == perm[i] else field.zero for j in range(n)] for i in range(n)]
    return WLinMap(blk, heavy, field)


# ---------------------------------------------------------------- rational maps

class RationalMap:
    """Self-map given by weighted-homogeneous components (denominators cleared)."""

    def __init__(self, components):
        comps = list(components)
        if not comps:
            raise ValueError("no components")
        ring = comps[0].ring
        self.ring = ring
        self.components = comps
        ks = set()
        for c, w in zip(comps, ring.weights):
            if not c:
                continue
            ds = c.weighted_degrees()
            if len(ds) != 1:
                raise ValueError("component is not weighted-homogeneous")
            d = ds.pop()
            if d % w:
                raise ValueError("component degree incompatible with weight")
            ks.add(d // w)
        if len(ks) > 1:
            raise ValueError("components have inconsistent degrees")
        if not ks:
            raise ValueError("all components are zero")
        self.k = ks.pop()

    @classmethod
    def from_fractions(cls, numerators, den: MPoly, powers):
        """Clear a common denominator: component i is numerators[i] / den**powers[i]."""
        ring = numerators[0].ring
        w = ring.weights
        # smallest m with m*w_i >= powers[i] for all i
        m = max((-(-p // wi) for p, wi in zip(powers, w)), default=0)
        comps = []
        for num, p, wi in zip(numerators, powers, w):
            comps.append(num * den ** (m * wi - p))
        return cls(comps)

    def __repr__(self):
        return "RationalMap(" + ", ".join(repr(c) for c in self.components) + ")"

    def __call__(self, p: WProjPoint) -> WProjPoint:
        return apply(self, p)

    def reduce(self, r, ring=None) -> "RationalMap":
        ring = ring or self.ring.with_field(r.target)
        return RationalMap([c.map_coeffs(r, ring) for c in self.components])

    def serialize(self):
        from .scenario_io import poly_to_json
        return [poly_to_json(c) for c in self.components]


def identity_map(ring: PolyRing) -> RationalMap:
    return RationalMap(ring.gens())


def apply(m, p: WProjPoint) -> WProjPoint:
    if isinstance(m, WLinMap):
        if p.weights != m.weights:
            raise ValueError("weight mismatch")
        nb = len(m.block)
        v = list(p.coords)
        out = []
        for row in m.block:
            s = p.field.zero
            for a, x in zip(row, v[:nb]):
                if a and x:
                    s = s + a * x
            out.append(s)
        out += [h * x for h, x in zip(m.heavy, v[nb:])]
        return WProjPoint(out, p.weights, p.field)
    vals = [c.evaluate(p.coords) if c else p.field.zero for c in m.components]
    if not any(vals):
        raise BasePointError(f"base point {p!r}")
    return WProjPoint(vals, p.weights, p.field)


def _surface_poly(S) -> MPoly:
    return S.F if hasattr(S, "F") else S


def compose_mod_surface(f: RationalMap, g: RationalMap, S) -> RationalMap:
    """f∘g reduced modulo the surface equation."""
    F = _surface_poly(S)
    ring = f.ring
    imgs = [principal_normal_form(c, F) for c in g.components]
    comps = []
    for c in f.components:
        comps.append(_substitute_mod(c, imgs, F) if c else c)
    if not any(comps):
        raise DegenerateComposition("all components vanish modulo the surface")
    return _strip_common_monomial(RationalMap_unchecked(ring, comps))


def _substitute_mod(poly: MPoly, images, F: MPoly) -> MPoly:
    ring = poly.ring
    cache = [dict() for _ in images]

    def power(i, e):
        c = cache[i]
        if e not in c:
            if e == 1:
                c[e] = images[i]
            else:
                h = e // 2
                c[e] = principal_normal_form(power(i, h) * power(i, e - h), F)
        return c[e]

    acc = ring.zero()
    # group terms by their exponent in the first variables to reuse partial products
    for m, coef in poly.terms.items():
        t = ring.const(coef)
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
        acc = acc + t
    return principal_normal_form(acc, F)


def RationalMap_unchecked(ring, comps) -> RationalMap:
    r = RationalMap.__new__(RationalMap)
    r.ring = ring
    r.components = comps
    degs = [c.weighted_degree() // w for c, w in zip(comps, ring.weights) if c]
    r.k = degs[0] if degs else 0
    return r


def _strip_common_monomial(f: RationalMap) -> RationalMap:
    """Divide out a common monomial factor h (component i by h^{w_i})."""
    ring = f.ring
    w = ring.weights
    n = ring.nvars
    common = None
    for c, wi in zip(f.components, w):
        if not c:
            continue
        mins = [min(m[v] for m in c.terms) // wi for v in range(n)]
        common = mins if common is None else [min(a, b) for a, b in zip(common, mins)]
    if not common or not any(common):
        return f
    comps = []
    for c, wi in zip(f.components, w):
        sh = [e * wi for e in common]
        comps.append(MPoly(ring, {tuple(a - b for a, b in zip(m, sh)): v for m, v in c.terms.items()}))
    return RationalMap_unchecked(ring, comps)


def proportional_mod_surface(f: RationalMap, g: RationalMap, S) -> bool:
    """True iff f and g agree as maps on the surface (weighted cross products vanish mod F)."""
    F = _surface_poly(S)
    if f.ring.weights != g.ring.weights or len(f.components) != len(g.components):
        raise ValueError("arity mismatch")
    w = f.ring.weights
    fr = [principal_normal_form(c, F) for c in f.components]
    gr = [principal_normal_form(c, F) for c in g.components]
    if not any(fr) or not any(gr):
        return False
    n = len(fr)
    for i in range(n):
        for j in range(i + 1, n):
            a = fr[i] ** w[j] * gr[j] ** w[i]
            b = fr[j] ** w[i] * gr[i] ** w[j]
            if principal_normal_form(a - b, F):
                return False
    return True


def is_involution_on(S, f: RationalMap) -> bool:
    ff = compose_mod_surface(f, f, S)
    return proportional_mod_surface(ff, identity_map(f.ring), S)


# ---------------------------------------------------------------- finite-field sampling

def surface_points_mod_p(F: MPoly, r: PrimeReduction | None, count: int, rng: random.Random,
                         max_tries: int = 10000):
    """Random points of {F = 0} over F_p (F reduced by r when r is given)."""
    if r is not None:
        Fp = F.map_coeffs(r, F.ring.with_field(r.target))
    else:
        Fp = F
    field = Fp.ring.field
    p = field.p
    v = principal_pivot(Fp)
    n = Fp.ring.nvars
    if v is None:
        v = n - 1
    w = Fp.ring.weights
    out = []
    seen = set()
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        vals = [field(rng.randrange(p)) for _ in range(n)]
        if not any(vals[i] for i in range(n) if i != v and w[i] == 1):
            continue
        deg = Fp.degree_in(v)
        coeffs = [0] * (deg + 1)
        for m, c in Fp.terms.items():
            t = c
            for i, e in enumerate(m):
                if e and i != v:
                    t = t * vals[i] ** e
            coeffs[m[v]] = (coeffs[m[v]] + t.v) % p
        if not any(coeffs[1:]):
            continue
        roots = sorted(roots_mod_p(coeffs, p, rng))
        if not roots:
            continue
        vals[v] = field(roots[rng.randrange(len(roots))])
        pt = WProjPoint(vals, w, field)
        if pt not in seen:
            seen.add(pt)
            out.append(pt)
    return out


def reduction_for(field, min_prime: int = 1000, exclude=()) -> PrimeReduction:
    """A degree-one prime of the field above min_prime."""
    from .exactalg import split_primes
    return split_primes(field, 1, start=min_prime, exclude=exclude)[0]


def equivariance_witness(S, f: RationalMap, G, samples: int = 4, seed: int = 0):
    """Map g -> g' with f∘g ~ g'∘f on S, or None when some g has no witness.

    Candidates are filtered by evaluating at random points over a finite field
    and then confirmed exactly modulo F.
    """
    F = _surface_poly(S)
    ring = F.ring
    elements = list(G.elements) if hasattr(G, "elements") else list(G)
    rng = random.Random(seed)
    red = None
    pts = []
    for attempt in range(4):
        try:
            red = reduction_for(ring.field, 1000 + 7919 * attempt)
            fp = f.reduce(red)
            pts = []
            for P in surface_points_mod_p(F, red, 4 * samples, rng):
                try:
                    pts.append((P, apply(fp, P)))
                except BasePointError:
                    continue
                if len(pts) >= samples:
                    break
            if len(pts) >= samples:
                break
        except BadPrime:
            continue
    reduced = {g: g.reduce(red) for g in elements}
    witness = {}
    for g in elements:
        gp = reduced[g]
        lhs = []
        for P, fP in pts:
            try:
                lhs.append(apply(fp, apply(gp, P)))
            except BasePointError:
                lhs.append(None)
        found = None
        for h in elements:
            hp = reduced[h]
            if all(l is None or l == apply(hp, fP) for l, (P, fP) in zip(lhs, pts)):
                fg = RationalMap([c.substitute(g.images(ring), ring) for c in f.components])
                hf = RationalMap([c for c in apply_linear_to_components(h, f.components)])
                if proportional_mod_surface(fg, hf, F):
                    found = h
                    break
        if found is None:
            return None
        witness[g] = found
    return witness


def apply_linear_to_components(h: WLinMap, comps):
    nb = len(h.block)
    ring = comps[0].ring
    out = []
    for row in h.block:
        s = ring.zero()
        for a, c in zip(row, comps[:nb]):
            if a:
                s = s + c * a
        out.append(s)
    for k, sc in enumerate(h.heavy):
        out.append(comps[nb + k] * sc)
    return out
