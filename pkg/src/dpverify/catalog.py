"""Catalog of del Pezzo G-surfaces: normal forms, group generators, named points,
explicit involutions, elliptic pencils and the claims checked for each entry.

Every entry is built as a plain JSON document (the same layout as the shipped
scenario files) and then loaded through :mod:`dpverify.scenario`.
"""

from __future__ import annotations

from fractions import Fraction

from .delpezzo import SingularSurface, is_smooth
from .exactalg import field_cyclotomic
from .polyalg import INCONCLUSIVE, PolyRing
from .projspace import WLinMap
from .scenario import NAMES, SurfaceScenario, load_document, weights_for
from .scenario_io import poly_to_json


class UnknownType(KeyError):
    pass


def symbols_for(field) -> dict:
    """Named constants available in expressions: z, e<n> (primitive n-th roots), i, s2, s3."""
    N = field.cyclotomic_index
    M = N if N % 2 == 0 else 2 * N
    out = {"z": field.zeta()}
    for n in (3, 4, 6, 7, 8, 9, 12, 14, 18, 24):
        if M % n == 0:
            out[f"e{n}"] = field.root_of_unity(n)
    if "e4" in out:
        out["i"] = out["e4"]
    if "e8" in out:
        out["s2"] = field.sqrt2()
    if "e12" in out:
        out["s3"] = field.sqrt3()
    return out


class _Doc:
    """Accumulates one scenario document from expression strings."""

    def __init__(self, type_id, label, n, degree=3, params=None, extra_symbols=None):
        self.field = field_cyclotomic(n)
        self.degree = degree
        self.ring = PolyRing(self.field, NAMES, weights_for(degree))
        self.sym = symbols_for(self.field)
        self.params = dict(params or {})
        for k, v in self.params.items():
            self.sym[k] = self.field(Fraction(v)) if not hasattr(v, "field") else v
        self.sym.update(extra_symbols or {})
        self.doc = {"type_id": type_id, "label": label, "degree": degree,
                    "field": self.field.descriptor(),
                    "parameters": {k: _param_json(v) for k, v in self.params.items()},
                    "generators": [], "ambient_generators": [], "points": {}, "maps": {},
                    "pencils": {}, "models": {}, "claims": []}

    def poly(self, text, ring=None, sym=None):
        return (ring or self.ring).parse(text, sym or self.sym)

    def elem(self, text, ring=None, sym=None):
        return self.poly(str(text), ring, sym).constant_coeff()

    def surface(self, text):
        self.F = self.poly(text)
        self.doc["surface"] = poly_to_json(self.F)

    def linmap(self, exprs, ring=None, sym=None):
        return _linmap(exprs, ring or self.ring, sym or self.sym)

    def gens(self, *maps):
        self.doc["generators"] = [self.linmap(m).serialize() for m in maps]

    def ambient(self, *maps):
        self.doc["ambient_generators"] = [self.linmap(m).serialize() for m in maps]

    def points(self, **pts):
        for k, v in pts.items():
            self.doc["points"][k] = [self.elem(c).serialize() for c in v]

    def map(self, name, comps, **subs):
        out = []
        for c in comps:
            for k, v in subs.items():
                c = c.replace(k, f"({v})")
            out.append(poly_to_json(self.poly(c)))
        self.doc["maps"][name] = out

    def pencil(self, name, spec, lam_mu=None):
        self.doc["pencils"][name] = {"spec": spec, "lam_mu": lam_mu}

    def model(self, name, n, degree, surface, groups, params=None):
        K = field_cyclotomic(n)
        ring = PolyRing(K, NAMES, weights_for(degree))
        sym = symbols_for(K)
        sym.update({k: K(Fraction(v)) for k, v in (params or {}).items()})
        F = ring.parse(surface, sym)
        self.doc["models"][name] = {
            "field": K.descriptor(), "degree": degree, "surface": poly_to_json(F),
            "groups": {g: [_linmap(m, ring, sym).serialize() for m in ms]
                       for g, ms in groups.items()}}

    def variant_surface(self, text, **params):
        sym = dict(self.sym)
        sym.update({k: self.field(Fraction(v)) for k, v in params.items()})
        return poly_to_json(self.poly(text, sym=sym))

    def claim(self, kind, expected, **inputs):
        self.doc["claims"].append({"kind": kind, "inputs": inputs, "expected": expected})


def _param_json(v):
    return v.serialize() if hasattr(v, "serialize") else str(Fraction(v))


def _linmap(exprs, ring, sym) -> WLinMap:
    """Linear map from its coordinate images, e.g. ["t0", "e3*t2", "t3", "t1"]."""
    field = ring.field
    nb = sum(1 for w in ring.weights if w == 1)
    polys = [ring.parse(e, sym) for e in exprs]
    block, heavy = [], []
    for k, p in enumerate(polys):
        if k < nb:
            row = [field.zero] * nb
            for m, c in p.terms.items():
                j = next((j for j, e in enumerate(m) if e), None)
                if j is None or sum(m) != 1 or j >= nb:
                    raise ValueError(f"image {exprs[k]!r} is not linear in the weight-one variables")
                row[j] = c
            block.append(row)
        else:
            for m, c in p.terms.items():
                if m != tuple(1 if j == k else 0 for j in range(len(m))):
                    raise ValueError(f"heavy image {exprs[k]!r} must be a multiple of {NAMES[k]}")
                heavy.append(c)
            if not p.terms:
                raise ValueError("heavy image is zero")
    return WLinMap(block, heavy, field)


# ---------------------------------------------------------------- cubic surfaces

FERMAT = "t0^3+t1^3+t2^3+t3^3"
FERMAT_AUT = (["e3*t0", "t1", "t2", "t3"], ["t0", "e3*t1", "t2", "t3"],
              ["t0", "t1", "e3*t2", "t3"], ["t1", "t0", "t2", "t3"], ["t1", "t2", "t3", "t0"])


def _type_3a2(alpha=0):
    d = _Doc("3A2", "3A2, order 3", 3, params={"alpha": alpha})
    d.surface("t0^3+t1^3+t2^3+t3^3+alpha*t0*t1*t2")
    d.gens(["t0", "t1", "t2", "e3*t3"])
    fermat = Fraction(alpha) == 0
    if fermat:
        d.ambient(*FERMAT_AUT)
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 3, group="G")
    d.claim("fixed-locus", {"points": [], "curves": 1, "unresolved": 0}, group="G")
    d.claim("orbit-table", "infinite", group="G")
    d.claim("base-locus-admissible-count", "infinite", involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    if fermat:
        d.claim("generator-preserves", True, group="Aut")
        d.claim("group-order", 648, group="Aut")
        d.claim("normalizer-order", 162, ambient="Aut", subgroup="G")
        d.claim("normalizer-fingerprint", "3^3:S3", ambient="Aut", subgroup="G")
    return d


def _type_e6a2(alpha=2):
    d = _Doc("E6(a2)", "E6(a2), order 6", 3, params={"alpha": alpha})
    text = "t0^3+t1^3+t3^3+t2^2*(alpha*t0+t1)"
    d.surface(text)
    d.gens(["t0", "t1", "-t2", "e3*t3"])
    d.points(a=[1, -1, 0, 0], b=[1, "-e3", 0, 0], c=[1, "-e3^2", 0, 0], e=[0, 0, 1, 0])
    d.model("fermat", 3, 3, FERMAT, {"Aut": FERMAT_AUT, "G": [["e3*t1", "e3*t0", "e3*t2", "t3"]]})
    d.claim("smoothness", True)
    d.claim("smoothness", False, surface=d.variant_surface(text, alpha=1), note="alpha=1")
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["a", "b", "c", "e"], "curves": 0, "unresolved": 0},
            group="G")
    for p in "abc":
        d.claim("eckardt", {"eckardt": False}, point=p)
        d.claim("line-count", 0, point=p)
    d.claim("eckardt", {"eckardt": True, "plane": [alpha, 1, 0, 0]}, point="e")
    d.claim("line-count", 3, point="e")
    d.claim("base-locus-admissible-count", 3, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", "infinite", involution="bertini", group="G")
    d.claim("group-order", 648, group="model:fermat:Aut")
    d.claim("generator-preserves", True, group="model:fermat:G")
    d.claim("normalizer-order", 18, ambient="model:fermat:Aut", subgroup="model:fermat:G")
    d.claim("normalizer-fingerprint", "3^2x2", ambient="model:fermat:Aut",
            subgroup="model:fermat:G")
    return d


def _type_a5a1_cubic(lam=0):
    d = _Doc("A5+A1", "A5+A1, order 6, cubic", 12, params={"lam": lam})
    d.surface("t3^2*t1+t0^3+t1^3+t2^3+lam*t0*t1*t2")
    d.gens(["t0", "e3^2*t1", "e3*t2", "e6*t3"])
    d.points(p0=[1, 0, 0, 0], p1=[0, 1, 0, 0], p2=[0, 0, 1, 0], p3=[0, 0, 0, 1],
             q1=[0, "i", 0, 1], q2=[0, "-i", 0, 1])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["p3"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("eckardt", {"eckardt": True, "plane": [0, 1, 0, 0]}, point="p3")
    d.claim("line-count", 3, point="p3")
    d.claim("orbit-table", [
        {"line": [0, 1], "orbit_lengths": [3]},
        {"line": [0, 2], "orbit_lengths": [3]},
        {"line": [0, 3], "orbit_lengths": [1]},
        {"line": [1, 2], "orbit_lengths": [3]},
        {"line": [1, 3], "orbit_lengths": [1, 2], "points": ["p3", "q1", "q2"]},
        {"line": [2, 3], "orbit_lengths": [1]},
    ], group="G")
    d.claim("conic-pair", {"exists": True, "third_point": "p3"}, pair=["q1", "q2"])
    d.claim("base-locus-admissible-count", 0, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _type_e6a1():
    d = _Doc("E6(a1)", "E6(a1), order 9", 9)
    d.surface("t3^2*t1+t1^2*t2+t2^2*t3+t0^3")
    d.gens(["t0", "z^4*t1", "z*t2", "z^7*t3"])
    d.points(p1=[0, 1, 0, 0], p2=[0, 0, 1, 0], p3=[0, 0, 0, 1])
    d.map("phi_p1", ["t0*t2", "-t1*t2-t3^2", "t2^2", "t3*t2"])
    d.map("phi_p2", ["t0*t3", "t1*t3", "-t2*t3-t1^2", "t3^2"])
    d.map("phi_p3", ["t0*t1", "t1^2", "t2*t1", "-t3*t1-t2^2"])
    d.pencil("C11", {"kind": "plane", "i": 0, "j": 3}, [1, 1])
    d.model("fermat_s", 3, 3, FERMAT, {"Aut": FERMAT_AUT, "G": [["t0", "e3*t2", "t3", "t1"]]})
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 9, group="G")
    d.claim("fixed-locus", {"points": ["p1", "p2", "p3"], "curves": 0, "unresolved": 0},
            group="G")
    d.claim("eckardt", {"eckardt": False, "plane": [0, 0, 1, 0]}, point="p1")
    d.claim("eckardt", {"eckardt": False}, point="p2")
    d.claim("eckardt", {"eckardt": False}, point="p3")
    for p in ("p1", "p2", "p3"):
        d.claim("line-count", 0, point=p)
    d.claim("orbit-table", [
        {"line": [0, 1], "orbit_lengths": [1]},
        {"line": [0, 2], "orbit_lengths": [1]},
        {"line": [0, 3], "orbit_lengths": [1]},
        {"line": [1, 2], "orbit_lengths": [1, 1]},
        {"line": [1, 3], "orbit_lengths": [1, 1]},
        {"line": [2, 3], "orbit_lengths": [1, 1]},
    ], group="G")
    for m in ("phi_p1", "phi_p2", "phi_p3"):
        d.claim("involution-identity", True, map=m)
        d.claim("equivariance", True, map=m, group="G")
    tr = {"pencil": "C11", "base": "p2", "f": "phi_p1", "g": "phi_p2", "seeds": ["p1", "p2"]}
    d.claim("translation", {"multiple": -3, "of": "p2", "collinear": [["p1", "p2", "p2"]]}, **tr)
    d.claim("nontorsion", "nontorsion", **tr)
    d.claim("nontorsion", "inconclusive", **dict(tr, target="O"))
    d.claim("base-locus-admissible-count", 3, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    d.claim("group-order", 648, group="model:fermat_s:Aut")
    d.claim("generator-preserves", True, group="model:fermat_s:G")
    d.claim("normalizer-order", 18, ambient="model:fermat_s:Aut", subgroup="model:fermat_s:G")
    d.claim("normalizer-fingerprint", "D18", ambient="model:fermat_s:Aut",
            subgroup="model:fermat_s:G")
    return d


# Hessian-type model of the order-108 cubic: sum s_i^3 + 3(sqrt3 - 1) s1 s2 s3.
TYPE_III_CUBIC = "t0^3+t1^3+t2^3+t3^3+3*(s3-1)*t1*t2*t3"
TYPE_III_GENS = (["t0", "t1", "e3*t2", "e3^2*t3"], ["t0", "t2", "t3", "t1"],
                 ["s3*t0", "t1+t2+t3", "t1+e3*t2+e3^2*t3", "t1+e3^2*t2+e3*t3"])
TYPE_IV_GENS = (TYPE_III_GENS[0], TYPE_III_GENS[1], ["t0", "t1", "t3", "t2"])


def _type_e6():
    d = _Doc("E6", "E6, order 12", 12)
    d.surface("t3^2*t1+t2^2*t3+t0^3+t1^3")
    d.gens(["t0", "e3*t1", "e12*t2", "e6^5*t3"])
    d.points(p0=[1, 0, 0, 0], p1=[0, 1, 0, 0], p2=[0, 0, 1, 0], p3=[0, 0, 0, 1],
             q1=[0, "i", 0, 1], q2=[0, "-i", 0, 1])
    D = "t2^4+(t1^2+t3^2)^2"
    d.map("phi_q1q2", ["t0*D", "-t1*D-2*(t1^2+t3^2)*t0^3", "t2*D", "-t3*D-2*t2^2*t0^3"], D=D)
    d.map("phi_p3", ["t0*t1", "t1^2", "t2*t1", "-t3*t1-t2^2"])
    d.pencil("C11", {"kind": "plane", "i": 0, "j": 2}, [1, 1])
    d.model("typeIII", 12, 3, TYPE_III_CUBIC, {
        "Aut": TYPE_III_GENS,
        "G": [["s3*e3*t0", "t1+t2+t3", "t1+e3*t2+e3^2*t3", "t1+e3^2*t2+e3*t3"]]})
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 12, group="G")
    d.claim("fixed-locus", {"points": ["p2", "p3"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("eckardt", {"eckardt": True, "plane": [0, 0, 0, 1]}, point="p2")
    d.claim("eckardt", {"eckardt": False, "plane": [0, 1, 0, 0]}, point="p3")
    d.claim("eckardt", {"eckardt": False}, point="q1")
    d.claim("orbit-table", [
        {"line": [0, 1], "orbit_lengths": [3]},
        {"line": [0, 2], "orbit_lengths": [1]},
        {"line": [0, 3], "orbit_lengths": [1]},
        {"line": [1, 2], "orbit_lengths": [1]},
        {"line": [1, 3], "orbit_lengths": [1, 2], "points": ["p3", "q1", "q2"]},
        {"line": [2, 3], "orbit_lengths": [1, 1]},
    ], group="G")
    d.claim("conic-pair", {"exists": False, "third_point": "p3"}, pair=["q1", "q2"])
    d.claim("tangent-condition", True, pair=["q1", "q2"])
    for m in ("phi_q1q2", "phi_p3"):
        d.claim("involution-identity", True, map=m)
        d.claim("equivariance", True, map=m, group="G")
    tr = {"pencil": "C11", "base": "p3", "f": "phi_q1q2", "g": "phi_p3", "seeds": ["q1", "p3"]}
    d.claim("translation", {"multiple": -3, "of": "p3", "collinear": [["q1", "q2", "p3"]]}, **tr)
    d.claim("nontorsion", "nontorsion", **tr)
    d.claim("nontorsion", "inconclusive", **dict(tr, target="O"))
    d.claim("base-locus-admissible-count", 1, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 1, involution="bertini", group="G")
    d.claim("generator-preserves", True, group="model:typeIII:Aut")
    d.claim("group-order", 108, group="model:typeIII:Aut")
    d.claim("group-order", 12, group="model:typeIII:G")
    d.claim("normalizer-order", 12, ambient="model:typeIII:Aut", subgroup="model:typeIII:G")
    d.claim("normalizer-fingerprint", "12", ambient="model:typeIII:Aut",
            subgroup="model:typeIII:G")
    return d


NONCYCLIC_G = (["e3*t0", "e3^2*t1", "t2", "t3"], ["t1", "t0", "t2", "t3"])
SWAP23 = ["t0", "t1", "t3", "t2"]


def _noncyclic_doc(type_id, label, a, b, with_swap):
    d = _Doc(type_id, label, 3, params={"a": a, "b": b})
    d.surface("t0^3+t1^3+t2^3+t3^3+t0*t1*(a*t2+b*t3)")
    gens = NONCYCLIC_G + ((SWAP23,) if with_swap else ())
    d.gens(*gens)
    if Fraction(a) == Fraction(b):
        d.ambient(*NONCYCLIC_G, SWAP23)
    d.points(p0=[0, 0, 1, -1], p1=[0, 0, 1, "-e3"], p2=[0, 0, 1, "-e3^2"])
    return d


def _noncyclic_s3(a=1, b=1):
    d = _noncyclic_doc("noncyclic_S3", "S3 acting on t0^3+t1^3+t2^3+t3^3+t0t1(at2+bt3)",
                       a, b, False)
    d.map("phi_p0", ["3*D*t0", "3*D*t1", "3*D*t3-(a-b)*t0*t1", "3*D*t2+(a-b)*t0*t1"],
          D="t2+t3")
    d.map("phi_p1", ["3*D*t0", "3*D*t1", "3*D*e3^2*t3-(a-e3*b)*t0*t1",
                     "3*D*e3*t2+(e3*a-e3^2*b)*t0*t1"], D="t2+e3^2*t3")
    d.map("phi_p2", ["3*D*t0", "3*D*t1", "3*D*e3*t3-(a-e3^2*b)*t0*t1",
                     "3*D*e3^2*t2+(e3^2*a-e3*b)*t0*t1"], D="t2+e3*t3")
    d.pencil("C11", {"kind": "plane", "i": 0, "j": 1}, [1, 1])
    default = (Fraction(a), Fraction(b)) == (1, 1)
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["p0", "p1", "p2"], "curves": 0, "unresolved": 0},
            group="G")
    for m in ("phi_p0", "phi_p1", "phi_p2"):
        d.claim("involution-identity", True, map=m)
        d.claim("equivariance", True, map=m, group="G")
    if not default:
        return d
    d.claim("eckardt", {"eckardt": True, "plane": [0, 0, 1, 1]}, point="p0")
    d.claim("eckardt", {"eckardt": False}, point="p1")
    d.claim("eckardt", {"eckardt": False}, point="p2")
    d.claim("conic-pair", {"exists": True, "plane": [1, 1, 0, 0], "third_point": "p0"},
            pair=["p1", "p2"])
    tr = {"pencil": "C11", "base": "p0", "f": "phi_p1", "g": "phi_p2", "seeds": ["p1", "p2"]}
    d.claim("translation", {"multiple": 2, "of": "p1", "collinear": [["p1", "p2", "p0"]]}, **tr)
    d.claim("nontorsion", "nontorsion", **tr)
    d.claim("nontorsion", "inconclusive", **dict(tr, target="O"))
    d.claim("base-locus-admissible-count", 2, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    d.claim("generator-preserves", True, group="Aut")
    d.claim("group-order", 12, group="Aut")
    d.claim("normalizer-order", 12, ambient="Aut", subgroup="G")
    d.claim("normalizer-fingerprint", "S3x2", ambient="Aut", subgroup="G")
    d.model("typeIII", 12, 3, TYPE_III_CUBIC, {"Aut": TYPE_III_GENS})
    d.model("typeIV", 12, 3, TYPE_III_CUBIC, {"Aut": TYPE_IV_GENS})
    d.model("typeV", 3, 3, FERMAT, {"Aut": (["t1", "t0", "t2", "t3"], ["t1", "t2", "t3", "t0"])})
    for m, order, name in (("typeIII", 18, "S3x3"), ("typeIV", 18, "S3x3"), ("typeV", 6, "S3")):
        amb = f"model:{m}:Aut"
        d.claim("normalizer-order", order, ambient=amb, subgroup={"all_s3": True})
        d.claim("normalizer-fingerprint", name, ambient=amb, subgroup={"all_s3": True})
    return d


def _noncyclic_2xs3(a=1, b=1):
    if Fraction(a) != Fraction(b):
        raise ValueError("the extra involution swapping t2, t3 needs a = b")
    d = _noncyclic_doc("noncyclic_2xS3", "2xS3 acting on t0^3+t1^3+t2^3+t3^3+at0t1(t2+t3)",
                       a, b, True)
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 12, group="G")
    d.claim("fixed-locus", {"points": ["p0"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("eckardt", {"eckardt": True, "plane": [0, 0, 1, 1]}, point="p0")
    d.claim("conic-pair", {"exists": True, "plane": [1, 1, 0, 0], "third_point": "p0"},
            pair=["p1", "p2"])
    d.claim("base-locus-admissible-count", 0, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _fermat():
    d = _Doc("fermat", "Fermat cubic with a noncyclic S3", 3, params={"a": 0, "b": 0})
    d.surface(FERMAT)
    d.gens(*NONCYCLIC_G)
    d.ambient(*FERMAT_AUT)
    d.points(p0=[0, 0, 1, -1], p1=[0, 0, 1, "-e3"], p2=[0, 0, 1, "-e3^2"])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("generator-preserves", True, group="Aut")
    d.claim("group-order", 6, group="G")
    d.claim("group-order", 648, group="Aut")
    d.claim("fixed-locus", {"points": ["p0", "p1", "p2"], "curves": 0, "unresolved": 0},
            group="G")
    d.claim("eckardt", {"eckardt": True, "plane": [0, 0, 1, 1]}, point="p0")
    for p in ("p0", "p1", "p2"):
        d.claim("eckardt", {"eckardt": True}, point=p)
        d.claim("line-count", 3, point=p)
    d.claim("base-locus-admissible-count", 0, involution="geiser", group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


# ---------------------------------------------------------------- degree 2

GAMMA = ["t0", "t1", "t2", "-t3"]


def _type_a1_7():
    d = _Doc("A1^7", "A1^7, order 2 (Bertini involution)", 4, degree=2)
    d.surface("t3^2+t0^3*t1+t1^3*t2+t2^3*t0+t0^2*t1*t2")
    d.gens(GAMMA)
    d.points(p0=[1, 0, 0, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 2, group="G")
    d.claim("fixed-locus", {"points": [], "curves": 1, "unresolved": 0}, group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


# type III model of the quartic t0^4 + a t0^2 t1^2 + t1^4 with a = 2 sqrt3 i
TYPE3_QUARTIC = "t3^2+t2^4+t0^4+2*s3*i*t0^2*t1^2+t1^4"
TYPE3_AUT = (GAMMA, ["t1", "t0", "t2", "-t3"], ["i*t1", "-i*t0", "t2", "-t3"],
             ["t0", "t1", "i*t2", "-t3"],
             ["e8^7*t0+e8^7*t1", "e8^5*t0+e8*t1", "s2*e12*t2", "2*e6*t3"])
TYPE5_AUT = TYPE3_AUT[:4]
CYCLIC4 = ["t0", "t1", "i*t2", "t3"]


def _type_2a3a1(a=0):
    d = _Doc("2A3+A1", "2A3+A1, order 4", 4, degree=2, params={"a": a})
    text = "t3^2+t2^4+t0^4+a*t0^2*t1^2+t1^4"
    d.surface(text)
    d.gens(CYCLIC4)
    if Fraction(a) == 0:
        d.ambient(GAMMA, ["t1", "t0", "t2", "t3"], ["t0", "t2", "t1", "t3"],
                  ["t0", "i*t1", "t2", "-t3"], ["t0", "t1", "i*t2", "-t3"])
    d.claim("smoothness", True)
    d.claim("smoothness", False, surface=d.variant_surface(text, a=2), note="a=2")
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 4, group="G")
    d.claim("fixed-locus", {"points": [], "curves": 1, "unresolved": 0}, group="G")
    d.claim("bitangent", {"bitangent": False}, line=[0, 0, 1])
    d.claim("base-locus-admissible-count", "infinite", involution="bertini", group="G")
    if Fraction(a) == 0:
        d.claim("generator-preserves", True, group="Aut")
        d.claim("group-order", 192, group="Aut")
        d.claim("normalizer-order", 64, ambient="Aut", subgroup="G")
        d.claim("normalizer-fingerprint", "2x4^2:2", ambient="Aut", subgroup="G")
    d.model("typeIII", 24, 2, TYPE3_QUARTIC, {"Aut": TYPE3_AUT, "G": [CYCLIC4]})
    d.model("typeV", 4, 2, "t3^2+t2^4+t0^4+t0^2*t1^2+t1^4", {"Aut": TYPE5_AUT, "G": [CYCLIC4]})
    for m, order, name in (("typeIII", 96, "2x4A4"), ("typeV", 32, "2xAS16")):
        d.claim("generator-preserves", True, group=f"model:{m}:Aut")
        d.claim("group-order", order, group=f"model:{m}:Aut")
        d.claim("normalizer-order", order, ambient=f"model:{m}:Aut", subgroup=f"model:{m}:G")
        d.claim("normalizer-fingerprint", name, ambient=f"model:{m}:Aut",
                subgroup=f"model:{m}:G")
    return d


def _type_e7a4():
    d = _Doc("E7(a4)", "E7(a4), order 6", 3, degree=2)
    d.surface("t3^2+t2^3*(t0+2*t1)+t0*t1*(t0^2-t1^2)")
    d.gens(["t0", "t1", "e3*t2", "-t3"])
    d.points(r=[0, 0, 1, 0], p0=[1, 0, 0, 0], p1=[0, 1, 0, 0], p2=[1, 1, 0, 0], p3=[1, -1, 0, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["r", "p0", "p1", "p2", "p3"], "curves": 0,
                            "unresolved": 0}, group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _type_a5a1_dp2(a=1):
    d = _Doc("A5+A1_dP2", "A5+A1, order 6, degree 2", 3, degree=2, params={"a": a})
    d.surface("t3^2+t2^3*t0+t0^4+t1^4+a*t0^2*t1^2")
    d.gens(["t0", "-t1", "e3*t2", "-t3"])
    d.points(r=[0, 0, 1, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["r"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _type_d6a2a1(alpha=1, beta=1):
    d = _Doc("D6(a2)+A1", "D6(a2)+A1, order 6", 3, degree=2,
             params={"alpha": alpha, "beta": beta})
    d.surface("t3^2+t0*(t0^3+t1^3+t2^3)+t1*t2*(alpha*t0^2+beta*t1*t2)")
    d.gens(["t0", "e3*t1", "e3^2*t2", "-t3"])
    d.points(p1=[0, 1, 0, 0], p2=[0, 0, 1, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 6, group="G")
    d.claim("fixed-locus", {"points": ["p1", "p2"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _type_e7a2():
    d = _Doc("E7(a2)", "E7(a2), order 12", 12, degree=2)
    d.surface("t3^2+t0^4+t1^4+t0*t2^3")
    d.gens(["t0", "i*t1", "e3*t2", "t3"])
    d.points(r=[0, 0, 1, 0], p1=[1, 0, 0, "i"], p2=[1, 0, 0, "-i"])
    for name, s in (("phi_p1", "i"), ("phi_p2", "(-i)")):
        d.map(name, [f"-2*t0*D+{s}*t2^3", "2*t1*D", "2*t2*D",
                     f"-4*{s}*t0^2*D^2-4*t1^4*D-{s}*t2^6"], D=f"t3-{s}*t0^2")
    d.pencil("Ccube", {"kind": "cube", "a": 1, "b": 2, "cube": "-17/2", "r0": "1/2"})
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 12, group="G")
    d.claim("fixed-locus", {"points": ["r", "p1", "p2"], "curves": 0, "unresolved": 0},
            group="G")
    for m in ("phi_p1", "phi_p2"):
        d.claim("involution-identity", True, map=m)
        d.claim("equivariance", True, map=m, group="G")
    tr = {"pencil": "Ccube", "base": {"curve": [0, 0, 1]}, "f": "phi_p2", "g": "phi_p1",
          "seeds": ["p1", "p2"]}
    d.claim("translation", {"multiple": 4, "of": "p2", "collinear": [["p1", "p2", "O"]]}, **tr)
    d.claim("nontorsion", "nontorsion", **tr)
    d.claim("nontorsion", "inconclusive", **dict(tr, target="O"))
    d.claim("base-locus-admissible-count", 2, involution="bertini", group="G")
    d.model("typeIII", 24, 2, TYPE3_QUARTIC, {"Aut": TYPE3_AUT})
    d.claim("normalizer-order", 24, ambient="model:typeIII:Aut",
            subgroup={"all_cyclic_of_order": 12})
    d.claim("normalizer-fingerprint", "2x12", ambient="model:typeIII:Aut",
            subgroup={"all_cyclic_of_order": 12})
    return d


def _type_e7a1():
    d = _Doc("E7(a1)", "E7(a1), order 14", 14, degree=2)
    d.surface("t3^2+t0^3*t1+t1^3*t2+t2^3*t0")
    d.gens(["e7*t0", "e7^4*t1", "e7^2*t2", "-t3"])
    d.points(p0=[1, 0, 0, 0], p1=[0, 1, 0, 0], p2=[0, 0, 1, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 14, group="G")
    d.claim("fixed-locus", {"points": ["p0", "p1", "p2"], "curves": 0, "unresolved": 0},
            group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


def _type_e7():
    d = _Doc("E7", "E7, order 18", 9, degree=2)
    d.surface("t3^2+t0^4+t0*t1^3+t2^3*t1")
    d.gens(["t0", "e3*t1", "e9^2*t2", "-t3"])
    d.points(p1=[0, 1, 0, 0], p2=[0, 0, 1, 0])
    d.claim("smoothness", True)
    d.claim("generator-preserves", True, group="G")
    d.claim("group-order", 18, group="G")
    d.claim("fixed-locus", {"points": ["p1", "p2"], "curves": 0, "unresolved": 0}, group="G")
    d.claim("base-locus-admissible-count", 0, involution="bertini", group="G")
    return d


BUILDERS = {
    "3A2": _type_3a2,
    "E6(a2)": _type_e6a2,
    "A5+A1": _type_a5a1_cubic,
    "E6(a1)": _type_e6a1,
    "E6": _type_e6,
    "fermat": _fermat,
    "noncyclic_S3": _noncyclic_s3,
    "noncyclic_2xS3": _noncyclic_2xs3,
    "A1^7": _type_a1_7,
    "2A3+A1": _type_2a3a1,
    "E7(a4)": _type_e7a4,
    "A5+A1_dP2": _type_a5a1_dp2,
    "D6(a2)+A1": _type_d6a2a1,
    "E7(a2)": _type_e7a2,
    "E7(a1)": _type_e7a1,
    "E7": _type_e7,
}

TYPE_IDS = tuple(BUILDERS)


def document(type_id: str, **params) -> dict:
    try:
        builder = BUILDERS[type_id]
    except KeyError:
        raise UnknownType(type_id) from None
    return builder(**params).doc


def check_scenario(sc: SurfaceScenario) -> SurfaceScenario:
    """Raise SingularSurface unless the surface is smooth, and ValueError when a listed
    generator does not preserve its equation."""
    verdict = is_smooth(sc.surface)
    if verdict is INCONCLUSIVE:
        raise SingularSurface(f"{sc.type_id}: smoothness check was inconclusive")
    if not verdict:
        raise SingularSurface(f"{sc.type_id} with {sc.parameters or 'default parameters'} "
                              "is singular")
    for ref in ["G", "Aut"] + [f"model:{m}:{g}" for m, mod in sc.models.items()
                               for g in mod.groups]:
        for g in sc.group_generators(ref):
            if not g.preserves(sc.surface_for(ref).F):
                raise ValueError(f"{sc.type_id}: a generator of {ref} does not preserve "
                                 "the surface")
    return sc


def catalog(type_id: str, **params) -> SurfaceScenario:
    """Build and check a catalog entry (see ``check_scenario``)."""
    return check_scenario(load_document(document(type_id, **params)))
