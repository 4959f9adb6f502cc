"""Chord-tangent group law on plane cubics with an arbitrary base point, pencil
members of Del Pezzo surfaces, translations induced by pairs of involutions and
non-torsion certificates by reduction modulo primes."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from math import isqrt

from .exactalg import BadPrime, PrimeReduction, modulus_roots_mod_p
from .polyalg import MPoly, PolyRing, binary_form, projective_zero_empty
from .projspace import BasePointError, RationalMap, WProjPoint


class SingularCurve(ValueError):
    pass


class BadReduction(ArithmeticError):
    pass


class NotATranslation(ValueError):
    pass


class PlaneCubic:
    """A nonsingular plane cubic {B = 0} together with the chart that produced it."""

    def __init__(self, B: MPoly, chart: "Chart | None" = None, check: bool = True):
        if B.ring.nvars != 3 or B.ring.weights != (1, 1, 1):
            raise ValueError("plane cubics live in P^2")
        if not B.is_homogeneous() or B.weighted_degree() != 3:
            raise ValueError("B must be a ternary cubic form")
        self.B = B
        self.field = B.ring.field
        self.chart = chart
        self.nonsingular = None
        if check:
            ok = projective_zero_empty([B] + [d for d in B.partials() if d])
            if ok is not True:
                raise SingularCurve("curve is singular" if ok is False else
                                    "smoothness check inconclusive")
            self.nonsingular = True

    def __repr__(self):
        return f"PlaneCubic({self.B!r})"

    def point(self, coords) -> WProjPoint:
        p = WProjPoint(coords, (1, 1, 1), self.field)
        if not self.contains(p):
            raise ValueError(f"{p!r} is not on the curve")
        return p

    def contains(self, p: WProjPoint) -> bool:
        return not self.B.evaluate(p.coords)

    def reduce(self, r: PrimeReduction) -> "PlaneCubic":
        Bp = self.B.map_coeffs(r, self.B.ring.with_field(r.target))
        return PlaneCubic(Bp, None, check=False)


# ---------------------------------------------------------------- charts

class Chart:
    """Passage between points of a pencil member on the surface and points of the
    plane cubic model.  ``member`` coordinates are ambient coordinates minus the
    eliminated one."""

    member_weights: tuple

    def member_point(self, p: WProjPoint) -> WProjPoint:
        raise NotImplementedError

    def member_map(self, f: RationalMap) -> list:
        raise NotImplementedError

    def to_curve(self, q: WProjPoint) -> WProjPoint:
        raise NotImplementedError

    def from_curve(self, P: WProjPoint) -> WProjPoint:
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError


class PlaneChart(Chart):
    """Member of the pencil {lam*t_i = mu*t_j} of a cubic surface; t_i is eliminated."""

    def __init__(self, S, i: int, j: int, lam, mu):
        field = S.field
        lam, mu = field(lam), field(mu)
        if not lam and not mu:
            raise ValueError("(lam : mu) must not be (0 : 0)")
        if not lam:
            # the plane is t_j = 0: eliminate t_j instead
            i, j, lam, mu = j, i, mu, lam
            self.ratio = field.zero
        else:
            self.ratio = mu / lam
        self.S, self.i, self.j, self.lam, self.mu = S, i, j, lam, mu
        self.keep = [k for k in range(4) if k != i]
        self.field = field
        self.member_weights = (1, 1, 1)
        plane = PolyRing(field, tuple(S.ring.names[k] for k in self.keep))
        self.plane_ring = plane
        self._images = self._ambient_images(plane)
        self.B = S.F.substitute(self._images, plane)

    def _ambient_images(self, ring):
        gens = ring.gens()
        imgs = []
        for k in range(4):
            if k == self.i:
                imgs.append(gens[self.keep.index(self.j)] * self.ratio)
            else:
                imgs.append(gens[self.keep.index(k)])
        return imgs

    def member_point(self, p):
        c = p.coords
        if self.lam * c[self.i] - self.mu * c[self.j]:
            raise ValueError(f"{p!r} is not on the pencil member")
        return WProjPoint([c[k] for k in self.keep], (1, 1, 1), self.field)

    def member_map(self, f):
        return [f.components[k].substitute(self._images, self.plane_ring) for k in self.keep]

    def to_curve(self, q):
        return q

    def from_curve(self, P):
        return P

    def ambient_point(self, P):
        vals = []
        for k in range(4):
            if k == self.i:
                vals.append(P.coords[self.keep.index(self.j)] * self.ratio)
            else:
                vals.append(P.coords[self.keep.index(k)])
        return WProjPoint(vals, (1, 1, 1, 1), self.field)

    def describe(self):
        return {"kind": "plane", "i": self.i, "j": self.j,
                "lam": self.lam.serialize(), "mu": self.mu.serialize()}


class CubeChart(Chart):
    """Member {t_b = theta*t_a} of a degree 2 surface where the equation involves
    t_b only through t_b^3, so only theta^3 = c is needed.  With a rational root
    r0 of the binary quartic, s = t_a - r0*t_0 splits off and the member maps
    birationally to the plane cubic Y*Z^2 + g3(X, Y) via (X:Y:Z) = (t_0 s : s^2 : t_3).
    """

    def __init__(self, S, a: int, b: int, cube, r0):
        field = S.field
        self.S, self.a, self.b = S, a, b
        self.cube = field(cube)
        self.r0 = field(r0)
        self.field = field
        self.member_weights = (1, 1, 2)
        if S.degree != 2 or a == 0 or b == 0 or {a, b} != {1, 2}:
            raise ValueError("cube chart expects a degree 2 surface and the pencil in t_1, t_2")
        # member ring: (t_0, t_a, t_3)
        mr = PolyRing(field, (S.ring.names[0], S.ring.names[a], S.ring.names[3]), (1, 1, 2))
        self.member_ring = mr
        self.Fm = self._reduce_cubes(S.F)
        # split off s = t_a - r0 t_0 from the binary quartic part
        quart = MPoly(mr, {m: c for m, c in self.Fm.terms.items() if m[2] == 0})
        u = PolyRing(field, ("X", "Y"))
        X, Y = u.gens()
        # quartic in (t_0, s): substitute t_a = s + r0 t_0
        q_s = quart.substitute([X, Y + X * self.r0, u.zero()], u)
        if q_s.coeff((4, 0)):
            raise ValueError("r0 is not a root of the member's binary quartic")
        # q_s = Y * g3(X, Y)
        g3 = MPoly(u, {(m[0], m[1] - 1): c for m, c in q_s.terms.items()})
        if self.Fm.coeff((0, 0, 2)) != field.one or any(m[2] == 1 for m in self.Fm.terms):
            raise ValueError("expected t_3^2 + quartic")
        pr = PolyRing(field, ("X", "Y", "Z"))
        Xp, Yp, Zp = pr.gens()
        self.plane_ring = pr
        self.g3 = g3
        self.B = Yp * Zp * Zp + g3.substitute([Xp, Yp], pr)

    def _reduce_cubes(self, poly: MPoly) -> MPoly:
        terms = {}
        for m, c in poly.terms.items():
            eb = m[self.b]
            if eb % 3:
                raise ValueError("component depends on t_b beyond its cube")
            k = eb // 3
            e = (m[0], m[self.a] + 3 * k, m[3])
            terms[e] = terms.get(e, poly.ring.field.zero) + c * self.cube ** k
        return MPoly(self.member_ring, {e: c for e, c in terms.items() if c})

    def member_point(self, p):
        c = p.coords
        if c[self.b] ** 3 != self.cube * c[self.a] ** 3:
            raise ValueError(f"{p!r} is not on the pencil member")
        return WProjPoint([c[0], c[self.a], c[3]], (1, 1, 2), self.field)

    def member_map(self, f):
        return [self._reduce_cubes(f.components[k]) for k in (0, self.a, 3)]

    def to_curve(self, q):
        t0, ta, t3 = q.coords
        s = ta - self.r0 * t0
        if not s and not t3:
            return WProjPoint([0, 0, 1], (1, 1, 1), self.field)
        return WProjPoint([t0 * s, s * s, t3], (1, 1, 1), self.field)

    def from_curve(self, P):
        X, Y, Z = P.coords
        if not X and not Y:
            return WProjPoint([self.field.one, self.r0, self.field.zero], (1, 1, 2), self.field)
        return WProjPoint([X, Y + self.r0 * X, Z * Y], (1, 1, 2), self.field)

    def describe(self):
        return {"kind": "cube", "a": self.a, "b": self.b, "cube": self.cube.serialize(),
                "r0": self.r0.serialize()}


def pencil_member(S, spec: dict, lam_mu=None) -> PlaneCubic:
    """Plane cubic model of a member of a pencil on S.

    spec kinds: {"kind": "plane", "i", "j"} with lam_mu giving {lam*t_i = mu*t_j};
    {"kind": "cube", "a", "b", "cube", "r0"} for a degree 2 surface.
    """
    kind = spec["kind"]
    if kind == "plane":
        lam, mu = lam_mu if lam_mu is not None else (spec["lam"], spec["mu"])
        ch = PlaneChart(S, spec["i"], spec["j"], lam, mu)
    elif kind == "cube":
        ch = CubeChart(S, spec["a"], spec["b"], spec["cube"], spec["r0"])
    else:
        raise ValueError(f"unknown pencil kind {kind!r}")
    return PlaneCubic(ch.B, ch)


def curve_map(C: PlaneCubic, f: RationalMap):
    """The self-map of C induced by a surface map preserving the pencil member."""
    ch = C.chart
    comps = ch.member_map(f)
    w = ch.member_weights

    def run(P):
        q = ch.from_curve(P)
        vals = [c.evaluate(q.coords) for c in comps]
        if not any(vals):
            raise BasePointError(f"base point {q!r}")
        img = ch.to_curve(WProjPoint(vals, w, C.field))
        if not C.contains(img):
            raise ValueError("map does not preserve the pencil member")
        return img

    return run


# ---------------------------------------------------------------- group law

def _restrict_line(C, P, Q):
    r = PolyRing(C.field, ("s", "t"))
    s, t = r.gens()
    G = C.B.substitute([s * x + t * y for x, y in zip(P.coords, Q.coords)], r)
    return binary_form(G, 0, 1, 3)


def _other_point_on_tangent(C, P):
    field = C.field
    grad = [d.evaluate(P.coords) if d else field.zero for d in C.B.partials()]
    if not any(grad):
        raise SingularCurve(f"curve singular at {P!r}")
    j = next(i for i, g in enumerate(grad) if g)
    for k in range(3):
        if k == j:
            continue
        v = [field.zero] * 3
        v[k] = field.one
        v[j] = -grad[k] / grad[j]
        # independent of P?
        if any(v[a] * P.coords[b] != v[b] * P.coords[a] for a in range(3) for b in range(3)):
            return WProjPoint(v, (1, 1, 1), field)
    raise AssertionError("tangent line degenerate")


def third_intersection(C: PlaneCubic, P: WProjPoint, Q: WProjPoint) -> WProjPoint:
    """Residual intersection of the line PQ (tangent line when P = Q) with C."""
    if P != Q:
        c = _restrict_line(C, P, Q)
        if not any(c):
            raise AssertionError("line contained in a nonsingular cubic")
        a, b = c[2], c[1]
        coords = [b * x - a * y for x, y in zip(P.coords, Q.coords)]
        return WProjPoint(coords, (1, 1, 1), C.field)
    R = _other_point_on_tangent(C, P)
    c = _restrict_line(C, P, R)
    if not any(c):
        raise AssertionError("line contained in a nonsingular cubic")
    # c = t^2 (c1 s + c0 t)
    coords = [c[0] * x - c[1] * y for x, y in zip(P.coords, R.coords)]
    return WProjPoint(coords, (1, 1, 1), C.field)


def ec_add(C, O, P, Q):
    return third_intersection(C, third_intersection(C, P, Q), O)


def ec_neg(C, O, P):
    return third_intersection(C, P, third_intersection(C, O, O))


def ec_mul(C, O, n: int, P):
    if n < 0:
        return ec_mul(C, O, -n, ec_neg(C, O, P))
    acc, base = O, P
    while n:
        if n & 1:
            acc = ec_add(C, O, acc, base)
        n >>= 1
        if n:
            base = ec_add(C, O, base, base)
    return acc


def is_flex(C, P) -> bool:
    return third_intersection(C, P, P) == P


def flex_relative(C, O, n: int, P):
    """The translation vector, relative to base O, of the map x -> x + n*P computed
    in a group whose identity is a flex.  Independent of the flex when O is a flex
    (then it is n*P) or when 3 divides n."""
    if is_flex(C, O):
        return ec_mul(C, O, n, P)
    if n % 3:
        raise ValueError("non-flex base point needs n divisible by 3")
    # with a flex identity, third(O, O) = -2O and n*P + O = n*_O P (+) (-n/3)*_O third(O, O)
    return ec_add(C, O, ec_mul(C, O, n, P), ec_mul(C, O, -n // 3, third_intersection(C, O, O)))


@dataclass
class TranslationClass:
    T: WProjPoint
    O: WProjPoint
    samples: list = dfield(default_factory=list)


def translation_of(C: PlaneCubic, O, f, g, samples) -> TranslationClass:
    """T with (g o f)(p) = p (+) T for every sample p; f, g are curve self-maps."""
    if len(samples) < 3:
        raise ValueError("need at least three samples")
    Ts = []
    used = []
    for p in samples:
        try:
            img = g(f(p))
        except BasePointError:
            continue
        Ts.append(ec_add(C, O, img, ec_neg(C, O, p)))
        used.append(p)
    if len(Ts) < 3:
        raise ValueError("fewer than three usable samples")
    if any(T != Ts[0] for T in Ts[1:]):
        raise NotATranslation("samples give different translation vectors")
    return TranslationClass(Ts[0], O, used)


def sample_curve_points(C: PlaneCubic, O, seeds, count: int, avoid=()):
    """Field points of C of the form a*P + b*Q for seed points P, Q and small a, b."""
    out = []
    seen = set(avoid) | {O}
    seeds = list(seeds)
    combos = [(a, b) for s in range(2, 8) for a in range(-s, s + 1) for b in (s - abs(a), abs(a) - s)]
    for a, b in combos:
        P = ec_mul(C, O, a, seeds[0])
        if len(seeds) > 1:
            P = ec_add(C, O, P, ec_mul(C, O, b, seeds[1]))
        if P not in seen:
            seen.add(P)
            out.append(P)
            if len(out) >= count:
                break
    return out


# ---------------------------------------------------------------- finite fields

def _int_poly(C: PlaneCubic):
    return [(c.v, m) for m, c in C.B.terms.items()]


def curve_points_mod_p(C: PlaneCubic, r: PrimeReduction | None = None):
    """(count, points) of the cubic over F_p; C is reduced by r when given."""
    Cp = C.reduce(r) if r is not None else C
    field = Cp.field
    p = field.p
    ok = projective_zero_empty([Cp.B] + [d for d in Cp.B.partials() if d])
    if ok is not True:
        raise BadReduction(f"bad reduction at p={p}")
    terms = _int_poly(Cp)
    pts = []

    def val(x, y, z):
        s = 0
        for c, (a, b, e) in terms:
            s += c * pow(x, a, p) * pow(y, b, p) * pow(z, e, p)
        return s % p

    for x in range(p):
        for y in range(p):
            if val(x, y, 1) == 0:
                pts.append((x, y, 1))
    for x in range(p):
        if val(x, 1, 0) == 0:
            pts.append((x, 1, 0))
    if val(1, 0, 0) == 0:
        pts.append((1, 0, 0))
    n = len(pts)
    if (n - (p + 1)) ** 2 > 4 * p:
        raise AssertionError(f"Hasse bound violated: {n} points over F_{p}")
    return n, [WProjPoint(list(q), (1, 1, 1), field) for q in pts]


def _factor(n):
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def point_order(C, O, P, group_order: int) -> int:
    m = group_order
    for q in set(_factor(group_order)):
        while m % q == 0 and ec_mul(C, O, m // q, P) == O:
            m //= q
    if ec_mul(C, O, m, P) != O:
        raise AssertionError("order does not divide the group order")
    return m


@dataclass
class PrimeRecord:
    p: int
    root: int
    curve_order: int
    point_order: int


@dataclass
class NontorsionCertificate:
    records: list
    conclusion: str
    candidates: list
    skipped: list

    def as_dict(self):
        return {"records": [r.__dict__ for r in self.records], "conclusion": self.conclusion,
                "candidates": self.candidates, "skipped": self.skipped}


def _in_admissible(n, m, p):
    if n % m:
        return False
    q = n // m
    while q % p == 0:
        q //= p
    return q == 1


def _vp(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def admissible_intersection(records):
    """Orders n lying in every set {m_p * p^a : a >= 0}, or None if infinitely many
    candidates remain (fewer than two distinct primes)."""
    recs = list(records)
    primes = {r.p for r in recs}
    if len(primes) < 2:
        return None
    r1 = recs[0]
    r2 = next(r for r in recs if r.p != r1.p)
    a = _vp(r2.point_order, r1.p) - _vp(r1.point_order, r1.p)
    cands = []
    if a >= 0:
        n = r1.point_order * r1.p ** a
        if _in_admissible(n, r2.point_order, r2.p):
            cands.append(n)
    return [n for n in cands if all(_in_admissible(n, r.point_order, r.p) for r in recs)]


def _candidate_reductions(field, primes, max_prime):
    if primes is None:
        primes = [p for p in range(3, max_prime + 1, 2) if all(p % d for d in range(3, isqrt(p) + 1, 2))]
    for p in primes:
        roots = modulus_roots_mod_p(field, p)
        if roots:
            yield PrimeReduction(field, p, roots[0])


def nontorsion_certificate(C: PlaneCubic, O, T, primes=None, count: int = 5,
                           max_prime: int = 101) -> NontorsionCertificate:
    """Certify that T has infinite order in (C, O) by reduction at good odd primes.

    Uses at most ``count`` primes of good reduction; stops early once the
    admissible order sets have an empty intersection.
    """
    records, skipped = [], []
    for r in _candidate_reductions(C.field, primes, max_prime):
        if len(records) >= count:
            break
        if r.p > max_prime or r.p == 2:
            skipped.append({"p": r.p, "reason": "outside the enumeration range"})
            continue
        try:
            Cp = C.reduce(r)
            Op = WProjPoint([r(x) for x in O.coords], (1, 1, 1), Cp.field)
            Tp = WProjPoint([r(x) for x in T.coords], (1, 1, 1), Cp.field)
            n, _ = curve_points_mod_p(Cp)
        except (BadPrime, BadReduction, ValueError, ZeroDivisionError) as exc:
            skipped.append({"p": r.p, "reason": str(exc) or type(exc).__name__})
            continue
        records.append(PrimeRecord(r.p, r.root, n, point_order(Cp, Op, Tp, n)))
        cands = admissible_intersection(records)
        if cands is not None and not cands:
            return NontorsionCertificate(records, "nontorsion", [], skipped)
    cands = admissible_intersection(records)
    return NontorsionCertificate(records, "inconclusive", cands if cands is not None else [],
                                 skipped)
