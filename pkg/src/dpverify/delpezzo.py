"""Del Pezzo surfaces of degree 3 (cubics in P^3) and 2 (quartics in P(1,1,1,2)),
and the point predicates behind Geiser and Bertini base loci."""

from __future__ import annotations

from .polyalg import (INCONCLUSIVE, MPoly, PolyRing, binary_common_roots, binary_distinct_roots,
                      binary_form, binary_squarefree, projective_zero_empty, univ_gcd, udivmod,
                      utrim, umul, squarefree_part, DEFAULT_BUDGET)
from .projspace import WProjPoint


class SingularSurface(ValueError):
    pass


class NotOnSurface(ValueError):
    pass


class LineInSurface(ValueError):
    pass


class DelPezzoSurface:
    """S = {F = 0}: a cubic in P^3 (degree 3) or t3^2 + F4 in P(1,1,1,2) (degree 2)."""

    def __init__(self, F: MPoly, check_smooth: bool = True, budget: int = DEFAULT_BUDGET):
        w = F.ring.weights
        if F.ring.nvars != 4:
            raise ValueError("surfaces live in a 4-variable ring")
        if not F.is_homogeneous():
            raise ValueError("F must be weighted-homogeneous")
        if w == (1, 1, 1, 1):
            if F.weighted_degree() != 3:
                raise ValueError("a cubic surface needs a degree 3 equation")
            self.degree = 3
        elif w == (1, 1, 1, 2):
            if F.weighted_degree() != 4:
                raise ValueError("a degree 2 Del Pezzo surface needs a weighted quartic")
            if F.coeff((0, 0, 0, 2)) != F.ring.field.one or any(
                    m[3] == 1 for m in F.terms):
                raise ValueError("expected the shape t3^2 + F4(t0, t1, t2)")
            self.degree = 2
        else:
            raise ValueError(f"unsupported weights {w}")
        self.F = F
        self.ring = F.ring
        self.field = F.ring.field
        self.weights = w
        if check_smooth:
            ok = is_smooth(self, budget)
            if ok is not True:
                raise SingularSurface("surface is singular" if ok is False else
                                      "smoothness check inconclusive")

    def __repr__(self):
        return f"DelPezzoSurface(degree={self.degree}, F={self.F!r})"

    def contains(self, p: WProjPoint) -> bool:
        return not self.F.evaluate(p.coords)

    def point(self, coords) -> WProjPoint:
        p = WProjPoint(coords, self.weights, self.field)
        if not self.contains(p):
            raise NotOnSurface(f"{p!r} is not on the surface")
        return p

    def branch_quartic(self) -> MPoly:
        """F4 as a ternary quartic (degree 2 surfaces only)."""
        if self.degree != 2:
            raise ValueError("only degree 2 surfaces have a branch quartic")
        r3 = PolyRing(self.field, self.ring.names[:3])
        terms = {m[:3]: c for m, c in self.F.terms.items() if m[3] == 0}
        return MPoly(r3, terms)

    def reduce(self, r) -> "DelPezzoSurface":
        Fp = self.F.map_coeffs(r, self.ring.with_field(r.target))
        return DelPezzoSurface(Fp, check_smooth=False)

    def gradient_at(self, p: WProjPoint):
        return [d.evaluate(p.coords) if d else self.field.zero for d in self.F.partials()]


def is_smooth(S: DelPezzoSurface, budget: int = DEFAULT_BUDGET):
    """True, False or INCONCLUSIVE (Gröbner budget exhausted)."""
    if S.degree == 3:
        gens = [S.F] + [d for d in S.F.partials() if d]
        return projective_zero_empty(gens, budget)
    F4 = S.branch_quartic()
    return projective_zero_empty([F4] + [d for d in F4.partials() if d], budget)


def quartic_is_smooth(C4: MPoly, budget: int = DEFAULT_BUDGET):
    return projective_zero_empty([C4] + [d for d in C4.partials() if d], budget)


# ---------------------------------------------------------------- linear algebra helpers

def _rank3(rows, field) -> bool:
    """Whether three vectors in K^4 are independent (some 3x3 minor nonzero)."""
    from itertools import combinations
    from .projspace import _det
    for cols in combinations(range(len(rows[0])), 3):
        if _det([[r[c] for c in cols] for r in rows], field):
            return True
    return False


def _kernel_of_form(coeffs, field):
    """Basis of {x : sum coeffs[i] x[i] = 0}."""
    n = len(coeffs)
    j = next(i for i, c in enumerate(coeffs) if c)
    out = []
    for i in range(n):
        if i == j:
            continue
        v = [field.zero] * n
        v[i] = field.one
        v[j] = -coeffs[i] / coeffs[j]
        out.append(v)
    return out


def plane_through(points, field):
    """Linear form (coefficient list) vanishing on three independent points of P^3."""
    from .projspace import _det
    rows = [list(p) for p in points]
    out = []
    for k in range(4):
        cols = [c for c in range(4) if c != k]
        m = _det([[r[c] for c in cols] for r in rows], field)
        out.append(m if k % 2 == 0 else -m)
    if not any(out):
        raise ValueError("points are not independent")
    lead = next(c for c in out if c)
    return [c / lead for c in out]


# ---------------------------------------------------------------- tangent sections

class TangentSection:
    """Tangent plane at p and the plane cubic B(x, y, z) = F(x*u + y*v + z*p).

    With p sent to (0:0:1) the section has the shape z*B2(x, y) + B3(x, y).
    """

    def __init__(self, plane, basis, B: MPoly):
        self.plane = plane          # coefficients of the tangent linear form
        self.basis = basis          # [u, v, p] as coordinate vectors
        self.B = B
        field = B.ring.field
        self.B2 = MPoly(B.ring, {m: c for m, c in B.terms.items() if m[2] == 1})
        self.B3 = MPoly(B.ring, {m: c for m, c in B.terms.items() if m[2] == 0})
        if any(m[2] >= 2 for m in B.terms):
            raise ValueError("point is singular on the section")
        self._field = field

    def plane_form(self, ring: PolyRing) -> MPoly:
        out = ring.zero()
        for c, t in zip(self.plane, ring.gens()):
            if c:
                out = out + t * c
        return out

    def binary_forms(self):
        x, y = 0, 1
        r = self.B.ring
        b2 = MPoly(r, {(m[0], m[1], 0): c for m, c in self.B2.terms.items()})
        return binary_form(b2, x, y, 2), binary_form(self.B3, x, y, 3)

    def to_ambient(self, xyz):
        u, v, p = self.basis
        return [xyz[0] * a + xyz[1] * b + xyz[2] * c for a, b, c in zip(u, v, p)]


def tangent_section(S: DelPezzoSurface, p: WProjPoint) -> TangentSection:
    if S.degree != 3:
        raise ValueError("tangent sections are defined here for cubic surfaces")
    if not S.contains(p):
        raise NotOnSurface(f"{p!r} is not on S")
    field = S.field
    grad = S.gradient_at(p)
    if not any(grad):
        raise SingularSurface(f"S is singular at {p!r}")
    pv = list(p.coords)
    ker = _kernel_of_form(grad, field)
    basis = None
    for i in range(3):
        for j in range(i + 1, 3):
            if _rank3([ker[i], ker[j], pv], field):
                basis = [ker[i], ker[j], pv]
                break
        if basis:
            break
    plane_ring = PolyRing(field, ("x", "y", "z"))
    x, y, z = plane_ring.gens()
    imgs = []
    for k in range(4):
        f = plane_ring.zero()
        for coef, var in zip((basis[0][k], basis[1][k], basis[2][k]), (x, y, z)):
            if coef:
                f = f + var * coef
        imgs.append(f)
    B = S.F.substitute(imgs, plane_ring)
    return TangentSection(grad, basis, B)


def eckardt_test(S: DelPezzoSurface, p: WProjPoint) -> bool:
    """Three distinct lines of S through p: the section is a cone over p with a squarefree base."""
    ts = tangent_section(S, p)
    if ts.B2:
        return False
    _, b3 = ts.binary_forms()
    return binary_squarefree(b3)


def lines_through_count(S: DelPezzoSurface, p: WProjPoint) -> int:
    """Distinct lines of S through p: common roots of B2 and B3 in the pencil at p."""
    ts = tangent_section(S, p)
    b2, b3 = ts.binary_forms()
    if not any(b2):
        return binary_distinct_roots(b3)
    if not any(b3):
        return binary_distinct_roots(b2)
    return binary_common_roots(b2, b3)


def line_directions(S: DelPezzoSurface, p: WProjPoint):
    """Points q != p spanning lines of S through p whose direction lies in the field."""
    from .exactalg import roots_in_field
    from .polyalg import binary_gcd
    ts = tangent_section(S, p)
    b2, b3 = ts.binary_forms()
    field = S.field
    if not any(b2):
        g, inf = binary_gcd(b3, [field.zero] * 4)
    elif not any(b3):
        g, inf = binary_gcd(b2, [field.zero] * 3)
    else:
        g, inf = binary_gcd(b2, b3)
    dirs = []
    if len(g) > 1:
        for r in roots_in_field(g, field):
            dirs.append([r, field.one, field.zero])
    if inf:
        dirs.append([field.one, field.zero, field.zero])
    out = []
    for d in dirs:
        q = WProjPoint(ts.to_ambient(d), S.weights, field)
        out.append(q)
    return out


def line_in_surface(S: DelPezzoSurface, a: WProjPoint, b: WProjPoint) -> bool:
    coeffs = _line_restriction(S, a, b)
    return not any(coeffs)


def _line_restriction(S, a, b):
    """Coefficients c_k of s^k t^(3-k) in F(s*a + t*b)."""
    field = S.field
    r = PolyRing(field, ("s", "t"))
    s, t = r.gens()
    imgs = [s * x + t * y for x, y in zip(a.coords, b.coords)]
    G = S.F.substitute(imgs, r)
    return binary_form(G, 0, 1, 3)


def invariant_line_third_point(S: DelPezzoSurface, q1: WProjPoint, q2: WProjPoint,
                               require_transversal: bool = True) -> WProjPoint:
    """Residual intersection point of the line q1q2 with the cubic S."""
    if not (S.contains(q1) and S.contains(q2)):
        raise NotOnSurface("both points must lie on S")
    c = _line_restriction(S, q1, q2)
    # F(s q1 + t q2) = s t (a s + b t) with a = c[2], b = c[1]
    a, b = c[2], c[1]
    if not a and not b:
        raise LineInSurface("line contained in S")
    if require_transversal and (not a or not b):
        raise ValueError("line is tangent to S at one of the points")
    coords = [b * x - a * y for x, y in zip(q1.coords, q2.coords)]
    return WProjPoint(coords, S.weights, S.field)


def tangent_condition(S: DelPezzoSurface, p1: WProjPoint, p2: WProjPoint) -> bool:
    """Neither point lies on the tangent plane of the other."""
    g1 = S.gradient_at(p1)
    g2 = S.gradient_at(p2)
    v1 = sum((a * b for a, b in zip(g1, p2.coords)), S.field.zero)
    v2 = sum((a * b for a, b in zip(g2, p1.coords)), S.field.zero)
    return bool(v1) and bool(v2)


class ConicWitness:
    def __init__(self, third_point, lines, planes):
        self.third_point = third_point
        self.line_count = lines
        self.planes = planes

    def __repr__(self):
        return f"ConicWitness(third={self.third_point!r}, lines={self.line_count}, planes={self.planes})"


def conic_through_pair(S: DelPezzoSurface, p1: WProjPoint, p2: WProjPoint):
    """A conic of S through p1 and p2, or None.

    A plane through the line p1p2 cuts S in a conic through both points plus a
    residual line exactly when that line meets p1p2 at the third intersection
    point r of the line with S.  So a conic exists iff some line of S passes
    through r.  The witness lists r, the number of such lines, and the planes
    spanned by p1p2 and each line whose direction is defined over the field.
    """
    if line_in_surface(S, p1, p2):
        raise LineInSurface("line p1p2 is contained in S")
    r = invariant_line_third_point(S, p1, p2, require_transversal=False)
    n = lines_through_count(S, r)
    if n == 0:
        return None
    planes = []
    for q in line_directions(S, r):
        try:
            planes.append(plane_through([p1.coords, p2.coords, q.coords], S.field))
        except ValueError:
            continue
    return ConicWitness(r, n, planes)


def conic_exists(S: DelPezzoSurface, p1: WProjPoint, p2: WProjPoint) -> bool:
    """Counting-only form of conic_through_pair; works over prime fields too."""
    if line_in_surface(S, p1, p2):
        raise LineInSurface("line p1p2 is contained in S")
    r = invariant_line_third_point(S, p1, p2, require_transversal=False)
    return lines_through_count(S, r) > 0


def geiser_base_ok(S: DelPezzoSurface, p: WProjPoint) -> bool:
    return lines_through_count(S, p) == 0


def bertini_base_ok(S: DelPezzoSurface, p1: WProjPoint, p2: WProjPoint) -> bool:
    if lines_through_count(S, p1) or lines_through_count(S, p2):
        return False
    if line_in_surface(S, p1, p2):
        return False
    if conic_exists(S, p1, p2):
        return False
    return tangent_condition(S, p1, p2)


# ---------------------------------------------------------------- bitangents

def _square_conditions(a):
    """Polynomial conditions (in the coefficient ring) for a4 s^4 + ... + a0 t^4 = c*h^2.

    Returns (E1, E2) for the chart a4 != 0 and (a3, disc) for the chart a4 = 0.
    """
    a0, a1, a2, a3, a4 = a
    E1 = 8 * a1 * a4 * a4 - a3 * (4 * a2 * a4 - a3 * a3)
    E2 = 64 * a0 * a4 * a4 * a4 - (4 * a2 * a4 - a3 * a3) ** 2
    disc = a1 * a1 - 4 * a0 * a2
    return E1, E2, disc


def _is_square_quartic(a) -> bool:
    a0, a1, a2, a3, a4 = a
    if not any(a):
        return True
    E1, E2, disc = _square_conditions(a)
    if a4:
        return not E1 and not E2
    return not a3 and not disc


def line_is_bitangent(C4: MPoly, line) -> bool:
    """Whether the plane line {sum l_k x_k = 0} meets the quartic C4 as c*h^2."""
    field = C4.ring.field
    lv = [field(c) for c in line]
    k = next((i for i, x in enumerate(lv) if x), None)
    if k is None:
        raise ValueError("zero line")
    ring = PolyRing(field, ("s", "t"))
    s, t = ring.gens()
    free = [i for i in range(3) if i != k]
    imgs = [None] * 3
    imgs[free[0]], imgs[free[1]] = s, t
    imgs[k] = -(s * lv[free[0]] + t * lv[free[1]]) * lv[k] ** -1
    f = binary_form(C4.substitute(imgs, ring), 0, 1, 4)
    a = utrim(f)
    if not a:
        raise ValueError("line is a component of the quartic")
    if (4 - (len(a) - 1)) % 2:
        return False
    if len(a) == 1:
        return True
    r = squarefree_part(a)
    n, m = len(a) - 1, len(r) - 1
    if n % m or (n // m) % 2:
        return False
    p = [field.one]
    for _ in range(n // m):
        p = umul(p, r)
    return [c * a[-1] for c in p] == a


def bitangent_through(C4: MPoly, q) -> bool:
    """Whether some line through the plane point q meets the quartic C4 in c*h^2
    (a bitangent or a hyperflex line)."""
    field = C4.ring.field
    qv = [field(c) for c in (q.coords if hasattr(q, "coords") else q)]
    c = next(i for i, x in enumerate(qv) if x)
    others = [i for i in range(3) if i != c]
    v1 = [field.zero] * 3
    v2 = [field.zero] * 3
    v1[others[0]] = field.one
    v2[others[1]] = field.one
    ring = PolyRing(field, ("s", "t", "u"))
    s, t, u = ring.gens()
    imgs = [s * qv[k] + t * (v1[k] + u * v2[k]) for k in range(3)]
    G = C4.substitute(imgs, ring)
    # a_k(u): coefficient of s^k t^(4-k)
    coeffs = [[field.zero] * (G.degree_in(2) + 1) for _ in range(5)]
    for m, cf in G.terms.items():
        coeffs[m[0]][m[2]] = cf
    a = [utrim(cs) for cs in coeffs]
    from .polyalg import umul

    def add(x, y):
        n = max(len(x), len(y))
        return utrim([(x[i] if i < len(x) else field.zero) + (y[i] if i < len(y) else field.zero)
                      for i in range(n)])

    def sc(k, x):
        return [c * k for c in x]

    def sub(x, y):
        return add(x, sc(-1, y))

    a0, a1, a2, a3, a4 = a
    t4 = sub(sc(4, umul(a2, a4)), umul(a3, a3))
    E1 = sub(sc(8, umul(a1, umul(a4, a4))), umul(a3, t4))
    E2 = sub(sc(64, umul(a0, umul(a4, umul(a4, a4)))), umul(t4, t4))
    disc = sub(umul(a1, a1), sc(4, umul(a0, a2)))
    found = False
    # chart a4(u) != 0
    if not E1 and not E2:
        if a4:
            return True
    else:
        g = univ_gcd(E1, E2) if (E1 or E2) else None
        if g is not None and len(g) > 1:
            if a4:
                h = univ_gcd(g, a4)
                while len(h) > 1:
                    g, _ = udivmod(g, h)
                    h = univ_gcd(g, a4)
            if len(g) > 1:
                found = True
    # chart a4(u) = 0
    if not found and (not a4 or len(a4) > 1):
        polys = [x for x in (a4, a3, disc) if x]
        if not polys:
            found = True
        else:
            h = polys[0]
            for x in polys[1:]:
                h = univ_gcd(h, x)
            if len(h) > 1:
                found = True
    if found:
        return True
    # the line through q and v2 (u at infinity)
    imgs = [s * qv[k] + t * v2[k] for k in range(3)]
    H = C4.substitute(imgs, PolyRing(field, ("s", "t", "u")))
    b = [field.zero] * 5
    for m, cf in H.terms.items():
        b[m[0]] = cf
    return _is_square_quartic(b)


def bertini_base_ok_dp2(S: DelPezzoSurface, p: WProjPoint) -> bool:
    """Off the ramification curve {t3 = 0} and on no (-1)-curve."""
    if S.degree != 2:
        raise ValueError("degree 2 surfaces only")
    if not S.contains(p):
        raise NotOnSurface(f"{p!r} is not on S")
    if not p.coords[3]:
        return False
    return not bitangent_through(S.branch_quartic(), p.coords[:3])


def orbit_length_bound(d: int) -> int:
    """Largest orbit length that can be a non-canonical centre on a degree d Del Pezzo surface."""
    if d not in (1, 2, 3):
        raise ValueError("degree must be 1, 2 or 3")
    return d - 1


def catalog(type_id: str, **params):
    """Catalog entry by type id; see :mod:`dpverify.catalog`."""
    from .catalog import catalog as _catalog
    return _catalog(type_id, **params)
