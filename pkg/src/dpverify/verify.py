"""Claim evaluation for scenario documents.

Each claim kind maps to a checker returning an observed value in the same JSON
shape as the claim's ``expected`` field, plus an optional certificate payload.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dfield
from fractions import Fraction

from .delpezzo import (DelPezzoSurface, LineInSurface, bertini_base_ok, bertini_base_ok_dp2,
                       bitangent_through, conic_through_pair, eckardt_test, geiser_base_ok,
                       invariant_line_third_point, is_smooth, line_is_bitangent,
                       lines_through_count, tangent_condition, tangent_section)
from .elliptic import (curve_map, flex_relative, nontorsion_certificate, pencil_member,
                       sample_curve_points, third_intersection, translation_of)
from .exactalg import BadPrime
from .gaction import (INFINITE_FAMILY, ClosureBoundExceeded, ProjGroup, fixed_locus, identify,
                      line_orbit_table, match_named, subgroups_isomorphic_to_s3)
from .polyalg import DEFAULT_BUDGET, INCONCLUSIVE
from .projspace import (BasePointError, WProjPoint, apply, equivariance_witness,
                        is_involution_on, reduction_for, surface_points_mod_p)
from .scenario import SurfaceScenario
from .scenario_io import SchemaError, poly_from_json

PASS, FAIL, INCONC = "pass", "fail", "inconclusive"
CURVE_SAMPLES = 10
# large enough that a sample hitting one of the finitely many special points is rare
CURVE_PRIME = 100_000


class Inconclusive(Exception):
    """The check ran but could not decide the claim."""


@dataclass
class Options:
    seed: int = 0
    primes: list | None = None
    gb_budget: int = DEFAULT_BUDGET
    timings: bool = False


@dataclass
class ClaimResult:
    index: int
    kind: str
    inputs: dict
    expected: object
    observed: object
    result: str
    payload: dict = dfield(default_factory=dict)
    seconds: float | None = None

    def as_dict(self):
        d = {"index": self.index, "kind": self.kind, "inputs": self.inputs,
             "expected": self.expected, "observed": self.observed, "result": self.result,
             "payload": self.payload}
        if self.seconds is not None:
            d["seconds"] = round(self.seconds, 3)
        return d


# ---------------------------------------------------------------- helpers

def _proportional(u, v) -> bool:
    u, v = list(u), list(v)
    if len(u) != len(v):
        return False
    k = next((i for i, x in enumerate(u) if x), None)
    m = next((i for i, x in enumerate(v) if x), None)
    if k is None or k != m:
        return False
    return all(a * v[k] == b * u[k] for a, b in zip(u, v))


def _name_of(sc: SurfaceScenario, p):
    for k, q in sc.points.items():
        if q == p:
            return k
    return p.serialize()


def _curve_point_to_surface(c, vals, S, r):
    """Ambient point mod p from reduced component coordinates."""
    Fp = r.target
    k = len(c.basis)
    nb = len(c.basis[0])
    v = [Fp(0)] * nb
    for i in range(k):
        for j in range(nb):
            if c.basis[i][j]:
                v[j] = v[j] + vals[i] * r(c.basis[i][j])
    if S.degree == 2:
        v.append(vals[k] if c.heavy else Fp(0))
    return WProjPoint(v, S.weights, Fp)


def _sample_component(S, c, eq, r, rng, count=CURVE_SAMPLES):
    """count random F_p points on a fixed curve component, as ambient points of S mod p."""
    pts = surface_points_mod_p(eq, r, count, rng)
    return [_curve_point_to_surface(c, q.coords, S, r) for q in pts]


def _index_two_subgroups(G: ProjGroup) -> list:
    """Index-2 subgroups of G as index sets."""
    A = G.abstract()
    n = A.n
    Q = A.closure([A.mul(x, x) for x in range(n)])
    if (n // len(Q)) % 2 or len(Q) == n:
        return []
    reps, covered = [], set(Q)
    for x in range(n):
        if x not in covered:
            reps.append(x)
            covered |= {A.mul(x, q) for q in Q}
    out = set()
    for k in range(len(reps) + 1):
        for sub in itertools.combinations(reps, k):
            H = A.closure(list(Q) + list(sub))
            if 2 * len(H) == n:
                out.add(H)
    return sorted(out, key=sorted)


def _group_from_indices(G: ProjGroup, idx) -> ProjGroup:
    elems = [G.elements[i] for i in sorted(idx)]
    return ProjGroup(elems[1:] or [], bound=G.order + 1, identity=G.elements[0])


# ---------------------------------------------------------------- base loci

def admissible_count(S: DelPezzoSurface, G: ProjGroup, involution: str, seed: int = 0):
    """Number of G-orbits of admissible Geiser (degree 3) or Bertini centres.

    Returns an int, "infinite" when a fixed curve passes the test at every one of
    ten sampled points over F_p, or raises Inconclusive.
    """
    rng = random.Random(seed)
    payload = {"finite": [], "curves": []}
    if S.degree == 2:
        if involution != "bertini":
            raise SchemaError("degree 2 surfaces only carry Bertini centres here")
        return _bertini_dp2(S, G, rng, payload), payload
    if involution == "geiser":
        return _geiser(S, G, rng, payload), payload
    if involution == "bertini":
        return _bertini_cubic(S, G, rng, payload), payload
    raise SchemaError(f"unknown involution {involution!r}")


def _curve_verdict(oks, payload, label, p):
    good = sum(oks)
    payload["curves"].append({"component": label, "prime": p, "samples": len(oks),
                              "admissible": good})
    if len(oks) < CURVE_SAMPLES:
        raise Inconclusive(f"only {len(oks)} sample points found on a fixed curve")
    if good == len(oks):
        return True
    if good == 0:
        return False
    raise Inconclusive("fixed curve has both admissible and non-admissible samples")


def _geiser(S, G, rng, payload):
    fl = fixed_locus(S, G)
    if fl.unresolved:
        raise Inconclusive("fixed points outside the scenario field")
    count = 0
    for p in fl.points:
        ok = geiser_base_ok(S, p)
        payload["finite"].append({"point": p.serialize(), "admissible": ok})
        count += ok
    infinite = False
    for c, eq in fl.curves:
        if eq is None:          # a line of S: every point lies on it
            payload["curves"].append({"component": "line in S", "admissible": 0})
            continue
        r = reduction_for(S.field, CURVE_PRIME)
        Sp = S.reduce(r)
        oks = [geiser_base_ok(Sp, q) for q in _sample_component(S, c, eq, r, rng)]
        infinite |= _curve_verdict(oks, payload, f"dim {c.dim()}", r.p)
    return "infinite" if infinite else count


def _bertini_cubic(S, G, rng, payload):
    A = G.abstract()
    seen, count = set(), 0
    infinite = False
    for H in _index_two_subgroups(G):
        Hg = _group_from_indices(G, H)
        swap = G.elements[next(x for x in range(A.n) if x not in H)]
        fl = fixed_locus(S, Hg)
        if fl.unresolved:
            raise Inconclusive("fixed points of an index-2 subgroup outside the field")
        for q in fl.points:
            q2 = apply(swap, q)
            key = frozenset((q, q2))
            if q2 == q or key in seen:
                continue
            seen.add(key)
            ok = _bertini_pair_ok(S, q, q2)
            payload["finite"].append({"pair": [q.serialize(), q2.serialize()], "admissible": ok})
            count += ok
        for c, eq in fl.curves:
            if eq is None:
                continue
            r = reduction_for(S.field, CURVE_PRIME)
            Sp = S.reduce(r)
            swp = swap.reduce(r)
            oks = []
            for q in _sample_component(S, c, eq, r, rng, 4 * CURVE_SAMPLES):
                q2 = apply(swp, q)
                if q2 == q:
                    continue
                oks.append(_bertini_pair_ok(Sp, q, q2))
                if len(oks) == CURVE_SAMPLES:
                    break
            infinite |= _curve_verdict(oks, payload, f"dim {c.dim()}", r.p)
    return "infinite" if infinite else count


def _bertini_pair_ok(S, q1, q2) -> bool:
    try:
        return bertini_base_ok(S, q1, q2)
    except LineInSurface:
        return False


def _bertini_dp2(S, G, rng, payload):
    fl = fixed_locus(S, G)
    for c, n in fl.unresolved:
        if c.heavy:
            raise Inconclusive("fixed points off the ramification curve outside the field")
    count = 0
    for p in fl.points:
        ok = bertini_base_ok_dp2(S, p)
        payload["finite"].append({"point": p.serialize(), "admissible": ok})
        count += ok
    infinite = False
    for c, eq in fl.curves:
        if not c.heavy or eq is None:
            # the component lies in {t3 = 0}: every point is on the ramification curve
            payload["curves"].append({"component": "ramification", "admissible": 0})
            continue
        r = reduction_for(S.field, CURVE_PRIME)
        Sp = S.reduce(r)
        oks = [bertini_base_ok_dp2(Sp, q) for q in _sample_component(S, c, eq, r, rng)]
        infinite |= _curve_verdict(oks, payload, f"dim {c.dim()}", r.p)
    return "infinite" if infinite else count


# ---------------------------------------------------------------- claim checkers

def _c_smoothness(sc, inp, opt):
    S = sc.surface
    if "surface" in inp:
        S = DelPezzoSurface(poly_from_json(inp["surface"], sc.ring), check_smooth=False)
    v = is_smooth(S, budget=opt.gb_budget)
    if v is INCONCLUSIVE:
        raise Inconclusive("Groebner budget exhausted")
    return bool(v), {}


def _c_preserves(sc, inp, opt):
    ref = inp["group"]
    F = sc.surface_for(ref).F
    bad = [n for n, g in enumerate(sc.group_generators(ref)) if not g.preserves(F)]
    return not bad, {"failing_generators": bad} if bad else {}


def _c_group_order(sc, inp, opt):
    return sc.group(inp["group"]).order, {}


def _c_fixed_locus(sc, inp, opt):
    fl = fixed_locus(sc.surface_for(inp["group"]), sc.group(inp["group"]))
    names = sorted(_name_of(sc, p) for p in fl.points if isinstance(_name_of(sc, p), str))
    unnamed = [p.serialize() for p in fl.points if not isinstance(_name_of(sc, p), str)]
    obs = {"points": names, "curves": len(fl.curves), "unresolved": len(fl.unresolved)}
    if unnamed:
        obs["unnamed"] = unnamed
    return obs, {}


def _c_orbit_table(sc, inp, opt):
    S = sc.surface_for(inp["group"])
    tab = line_orbit_table(S, sc.group(inp["group"]))
    if tab is INFINITE_FAMILY:
        return "infinite", {}
    return [{"line": list(r["line"]), "orbit_lengths": r["orbit_lengths"],
             "points": sorted(str(_name_of(sc, p)) for p in r["points"])} for r in tab], {}


def _c_eckardt(sc, inp, opt):
    S, p = sc.surface, sc.point(inp["point"])
    plane = tangent_section(S, p).plane
    return {"eckardt": eckardt_test(S, p), "plane": [x.serialize() for x in plane]}, {}


def _c_line_count(sc, inp, opt):
    return lines_through_count(sc.surface, sc.point(inp["point"])), {}


def _c_conic_pair(sc, inp, opt):
    S = sc.surface
    p1, p2 = (sc.point(n) for n in inp["pair"])
    w = conic_through_pair(S, p1, p2)
    r = invariant_line_third_point(S, p1, p2, require_transversal=False)
    obs = {"exists": w is not None, "third_point": _name_of(sc, r)}
    if w is not None:
        obs["planes"] = [[x.serialize() for x in pl] for pl in w.planes]
    return obs, {}


def _c_tangent_condition(sc, inp, opt):
    p1, p2 = (sc.point(n) for n in inp["pair"])
    return tangent_condition(sc.surface, p1, p2), {}


def _c_bitangent(sc, inp, opt):
    C4 = sc.surface.branch_quartic()
    if "line" in inp:
        return {"bitangent": line_is_bitangent(C4, inp["line"])}, {}
    p = sc.point(inp["point"])
    return {"bitangent": bitangent_through(C4, p.coords[:3]),
            "admissible": bertini_base_ok_dp2(sc.surface, p)}, {}


def _c_involution(sc, inp, opt):
    f = sc.map(inp["map"])
    S = sc.surface
    exact = is_involution_on(S, f)
    rng = random.Random(opt.seed)
    r = reduction_for(S.field)
    fp = f.reduce(r)
    checked, tries = 0, 0
    while checked < 5 and tries < 50:
        tries += 1
        for q in surface_points_mod_p(S.F, r, 1, rng):
            try:
                back = apply(fp, apply(fp, q))
            except BasePointError:
                continue
            if back != q:
                return False, {"prime": r.p, "counterexample": q.serialize()}
            checked += 1
    if checked < 5:
        raise Inconclusive("too few sample points off the base locus")
    return exact, {"prime": r.p, "samples": checked}


def _c_equivariance(sc, inp, opt):
    G = sc.group(inp["group"])
    w = equivariance_witness(sc.surface, sc.map(inp["map"]), G, seed=opt.seed)
    if w is None:
        return False, {}
    ok = len(w) == G.order and len(set(w.values())) == G.order
    return ok, {"witnessed": len(w)}


def _pencil(sc, inp):
    pen = sc.pencils[inp["pencil"]]
    spec = dict(pen["spec"])
    for k in ("cube", "r0"):
        if k in spec:
            spec[k] = Fraction(spec[k])
    lam_mu = pen.get("lam_mu")
    if lam_mu is not None:
        lam_mu = tuple(sc.field(Fraction(x)) for x in lam_mu)
    C = pencil_member(sc.surface, spec, lam_mu)
    ch = C.chart

    def cpt(ref, O=None):
        if ref == "O":
            return O
        if isinstance(ref, dict):
            return C.point([sc.field(Fraction(x)) if not isinstance(x, list) else
                            sc.field.from_coeffs([Fraction(y) for y in x]) for x in ref["curve"]])
        return ch.to_curve(ch.member_point(sc.point(ref)))

    O = cpt(inp["base"])
    return C, O, (lambda ref: cpt(ref, O))


def _translation(sc, inp):
    C, O, cpt = _pencil(sc, inp)
    f = curve_map(C, sc.map(inp["f"]))
    g = curve_map(C, sc.map(inp["g"]))
    seeds = [cpt(s) for s in inp["seeds"]]
    samples = sample_curve_points(C, O, seeds, 6, avoid=seeds)
    return C, O, cpt, translation_of(C, O, f, g, samples)


def _c_translation(sc, inp, opt):
    exp = inp.get("_expected") or {}
    C, O, cpt, tr = _translation(sc, inp)
    obs = {}
    if "multiple" in exp:
        target = flex_relative(C, O, exp["multiple"], cpt(exp["of"]))
        obs["multiple"] = exp["multiple"] if target == tr.T else None
        obs["of"] = exp["of"]
    if "collinear" in exp:
        obs["collinear"] = [[a, b, c] if third_intersection(C, cpt(a), cpt(b)) == cpt(c)
                            else [a, b, _name_of(sc, third_intersection(C, cpt(a), cpt(b)))]
                            for a, b, c in exp["collinear"]]
    return obs, {"T": tr.T.serialize(), "O": O.serialize(), "samples": len(tr.samples),
                 "curve": str(C.B)}


def _c_nontorsion(sc, inp, opt):
    C, O, cpt, tr = _translation(sc, inp)
    T = O if inp.get("target") == "O" else tr.T
    cert = nontorsion_certificate(C, O, T, primes=opt.primes)
    return cert.conclusion, cert.as_dict()


def _subgroup_sets(sc, amb: ProjGroup, spec):
    A = amb.abstract()
    if isinstance(spec, str):
        H = sc.group(spec)
        idx = amb.indices_of(H)
        return [idx]
    if "all_cyclic_of_order" in spec:
        n = spec["all_cyclic_of_order"]
        orders = A.orders()
        out = {A.closure([x]) for x in range(A.n) if orders[x] == n}
        return sorted(out, key=sorted)
    if spec.get("all_s3"):
        return subgroups_isomorphic_to_s3(amb)
    raise SchemaError(f"bad subgroup selector {spec!r}")


def _normalizers(sc, inp):
    amb = sc.group(inp["ambient"])
    A = amb.abstract()
    subs = _subgroup_sets(sc, amb, inp["subgroup"])
    if not subs:
        raise Inconclusive("no subgroup matches the selector")
    return A, [A.normalizer(H) for H in subs]


def _c_normalizer_order(sc, inp, opt):
    A, Ns = _normalizers(sc, inp)
    orders = sorted({len(N) for N in Ns})
    return (orders[0] if len(orders) == 1 else orders), {"subgroups": len(Ns)}


def _c_normalizer_fp(sc, inp, opt):
    A, Ns = _normalizers(sc, inp)
    exp = inp.get("_expected")
    fps = [A.subgroup_table(N).fingerprint() for N in Ns]
    if exp is not None and all(match_named(fp, exp) for fp in fps):
        return exp, {"subgroups": len(Ns)}
    names = sorted({"/".join(identify(fp)) or f"unnamed group of order {fp.order}" for fp in fps})
    observed = names[0] if len(names) == 1 else names
    return observed, {"subgroups": len(Ns), "fingerprints": [fp.as_dict() for fp in fps]}


def _c_admissible(sc, inp, opt):
    S = sc.surface_for(inp["group"])
    n, payload = admissible_count(S, sc.group(inp["group"]), inp["involution"], seed=opt.seed)
    return n, payload


CHECKERS = {
    "smoothness": _c_smoothness,
    "generator-preserves": _c_preserves,
    "group-order": _c_group_order,
    "fixed-locus": _c_fixed_locus,
    "orbit-table": _c_orbit_table,
    "eckardt": _c_eckardt,
    "line-count": _c_line_count,
    "conic-pair": _c_conic_pair,
    "tangent-condition": _c_tangent_condition,
    "bitangent": _c_bitangent,
    "involution-identity": _c_involution,
    "equivariance": _c_equivariance,
    "translation": _c_translation,
    "nontorsion": _c_nontorsion,
    "normalizer-order": _c_normalizer_order,
    "normalizer-fingerprint": _c_normalizer_fp,
    "base-locus-admissible-count": _c_admissible,
}


# ---------------------------------------------------------------- comparison

def _matches(sc, kind, expected, observed) -> bool:
    if kind == "eckardt":
        if observed["eckardt"] != expected["eckardt"]:
            return False
        if "plane" in expected:
            want = [sc.field(Fraction(x)) if not isinstance(x, list)
                    else sc.field.from_coeffs([Fraction(y) for y in x]) for x in expected["plane"]]
            got = [sc.field(Fraction(x)) if not isinstance(x, list)
                   else sc.field.from_coeffs([Fraction(y) for y in x]) for x in observed["plane"]]
            return _proportional(want, got)
        return True
    if kind == "conic-pair":
        if observed["exists"] != expected["exists"]:
            return False
        if "third_point" in expected and observed["third_point"] != expected["third_point"]:
            return False
        if "plane" in expected:
            want = [sc.field(Fraction(x)) for x in expected["plane"]]
            return any(_proportional(want, [sc.field.from_coeffs([Fraction(y) for y in x])
                                            if isinstance(x, list) else sc.field(Fraction(x))
                                            for x in pl])
                       for pl in observed.get("planes", []))
        return True
    if kind == "orbit-table":
        if expected == "infinite" or observed == "infinite":
            return expected == observed
        if len(expected) != len(observed):
            return False
        for e, o in zip(expected, observed):
            if e["line"] != o["line"] or e["orbit_lengths"] != o["orbit_lengths"]:
                return False
            if "points" in e and sorted(e["points"]) != o["points"]:
                return False
        return True
    if kind == "fixed-locus":
        return (sorted(expected["points"]) == observed["points"]
                and expected.get("curves", 0) == observed["curves"]
                and expected.get("unresolved", 0) == observed["unresolved"]
                and "unnamed" not in observed)
    if kind == "bitangent":
        return all(observed.get(k) == v for k, v in expected.items())
    if kind == "translation":
        return all(observed.get(k) == v for k, v in expected.items())
    return expected == observed


def run_claim(sc: SurfaceScenario, index: int, claim: dict, opt: Options) -> ClaimResult:
    kind = claim["kind"]
    inputs = dict(claim.get("inputs", {}))
    expected = claim["expected"]
    t0 = time.perf_counter()
    call_inputs = dict(inputs, _expected=expected)
    local = Options(opt.seed + index, opt.primes, opt.gb_budget, opt.timings)
    payload = {}
    try:
        observed, payload = CHECKERS[kind](sc, call_inputs, local)
        result = PASS if _matches(sc, kind, expected, observed) else FAIL
    except Inconclusive as exc:
        observed, result, payload = None, INCONC, {"reason": str(exc)}
    except SchemaError:
        raise
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"claim {index} ({kind}): bad inputs: {exc}") from exc
    except (ValueError, ArithmeticError, BadPrime, ClosureBoundExceeded) as exc:
        observed, result, payload = None, FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    seconds = time.perf_counter() - t0 if opt.timings else None
    return ClaimResult(index, kind, inputs, expected, observed, result, payload, seconds)
