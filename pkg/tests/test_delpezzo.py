import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dpverify.catalog import catalog, symbols_for
from dpverify.delpezzo import (DelPezzoSurface, NotOnSurface, SingularSurface, bertini_base_ok,
                               bertini_base_ok_dp2, bitangent_through, conic_exists,
                               eckardt_test, geiser_base_ok, is_smooth, line_in_surface,
                               line_is_bitangent, lines_through_count, orbit_length_bound,
                               quartic_is_smooth, tangent_condition)
from dpverify.exactalg import field_cyclotomic, split_primes
from dpverify.polyalg import PolyRing, parse_poly
from dpverify.projspace import WProjPoint
from dpverify.scenario_io import poly_from_json

K = field_cyclotomic(12)
R3 = PolyRing(K, ("t0", "t1", "t2", "t3"))
R2 = PolyRing(K, ("t0", "t1", "t2", "t3"), (1, 1, 1, 2))
Q = field_cyclotomic(1)
PLANE = PolyRing(Q, ("x", "y", "z"))


def singular_points_mod_p(F, red):
    """Brute-force count of singular F_p-points of a projective cubic."""
    Fp = F.map_coeffs(red, F.ring.with_field(red.target))
    parts = Fp.partials()
    count = 0
    for v in itertools.product(range(red.p), repeat=4):
        if not any(v) or next(x for x in v if x) != 1:
            continue
        vals = [red.target(x) for x in v]
        if not Fp.evaluate(vals) and all(not d or not d.evaluate(vals) for d in parts):
            count += 1
    return count


def fermat_lines():
    """The 27 lines t_a + e t_b = t_c + e' t_d = 0 of the Fermat cubic."""
    w = K.root_of_unity(3)
    out = []
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        for j, k in itertools.product(range(3), repeat=2):
            out.append(((a, b, w ** j), (c, d, w ** k)))
    return out


def on_line(p, line):
    return all(p[a] + e * p[b] == K.zero for a, b, e in line)


def test_singular_variant_oracle():
    sc = catalog("E6(a2)")
    claim = next(c for c in sc.claims if c["kind"] == "smoothness" and c["expected"] is False)
    Fv = poly_from_json(claim["inputs"]["surface"], sc.ring)
    assert is_smooth(sc.surface) is True
    assert is_smooth(DelPezzoSurface(Fv, check_smooth=False)) is False
    with pytest.raises(SingularSurface):
        DelPezzoSurface(Fv)
    for red in split_primes(sc.field, 2, start=13):
        assert singular_points_mod_p(sc.F, red) == 0
        assert singular_points_mod_p(Fv, red) > 0


def test_degree_two_smoothness_is_branch_quartic_smoothness():
    # t0^4 + a t0^2 t1^2 + t1^4 has a repeated root iff a^2 = 4
    for a, smooth in ((0, True), (1, True), (2, False), (-2, False), (6, True)):
        F = parse_poly(f"t3^2+t2^4+t0^4+{a}*t0^2*t1^2+t1^4", R2)
        assert is_smooth(DelPezzoSurface(F, check_smooth=False)) is smooth


def test_shape_checks():
    with pytest.raises(ValueError):
        DelPezzoSurface(parse_poly("t0^4+t1^4", R3), check_smooth=False)
    with pytest.raises(ValueError):
        DelPezzoSurface(parse_poly("t3^2+t0*t3+t1^4+t2^4+t0^4", R2), check_smooth=False)
    S = DelPezzoSurface(parse_poly("t0^3+t1^3+t2^3+t3^3", R3))
    with pytest.raises(NotOnSurface):
        S.point([1, 0, 0, 0])


@pytest.fixture(scope="module")
def fermat():
    return DelPezzoSurface(parse_poly("t0^3+t1^3+t2^3+t3^3", R3))


def test_fermat_line_counts_match_explicit_lines(fermat):
    lines = fermat_lines()
    w = K.root_of_unity(3)
    pts = [[0, 0, 1, -1], [0, 0, 1, -w], [1, -1, 1, -1], [1, -w, 0, 0], [1, -1, w, -w * w]]
    for c in pts:
        p = fermat.point(c)
        want = sum(on_line(p, L) for L in lines)
        assert lines_through_count(fermat, p) == want
        assert eckardt_test(fermat, p) is (want == 3)
        assert geiser_base_ok(fermat, p) is (want == 0)


def test_line_in_surface(fermat):
    a = fermat.point([1, -1, 0, 0])
    b = fermat.point([0, 0, 1, -1])
    c = fermat.point([1, -1, 1, -1])
    assert line_in_surface(fermat, a, b)
    assert line_in_surface(fermat, a, c)


def test_scenario_pairs():
    e6 = catalog("E6")
    q1, q2 = e6.point("q1"), e6.point("q2")
    assert not conic_exists(e6.surface, q1, q2)
    assert tangent_condition(e6.surface, q1, q2)
    assert bertini_base_ok(e6.surface, q1, q2)
    nc = catalog("noncyclic_S3")
    assert conic_exists(nc.surface, nc.point("p1"), nc.point("p2"))
    assert not bertini_base_ok(nc.surface, nc.point("p1"), nc.point("p2"))


def test_bitangent_known_lines():
    C4 = parse_poly("x^4+y^4+z^4", PLANE)
    assert not line_is_bitangent(C4, [1, 0, 0])
    # x = -(y + z) restricts to 2 (y^2 + y z + z^2)^2
    assert line_is_bitangent(C4, [1, 1, 1])
    assert not line_is_bitangent(C4, [1, 1, 0])
    K8 = field_cyclotomic(8)
    P8 = PolyRing(K8, ("x", "y", "z"))
    e = K8.zeta()  # e^4 = -1, so x = e*y meets the quartic in z^4 only
    assert line_is_bitangent(parse_poly("x^4+y^4+z^4", P8), [K8.one, -e, K8.zero])


quad = st.lists(st.integers(-3, 3), min_size=6, max_size=6)
cubic = st.lists(st.integers(-3, 3), min_size=10, max_size=10)
lin = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any)


def _form(coeffs, deg):
    x, y, z = PLANE.gens()
    mons = [x ** i * y ** j * z ** (deg - i - j) for i in range(deg + 1) for j in range(deg + 1 - i)]
    return sum((c * m for c, m in zip(coeffs, mons)), PLANE.zero())


@settings(max_examples=60)
@given(quad, cubic, lin, lin)
def test_bitangent_by_construction_and_sympy(qc, cc, lc, other):
    x, y, z = PLANE.gens()
    q, c = _form(qc, 2), _form(cc, 3)
    l = lc[0] * x + lc[1] * y + lc[2] * z
    C4 = q * q + l * c
    if not C4 or not any(C4.substitute([x, y, z], PLANE).terms):
        return
    try:
        assert line_is_bitangent(C4, lc)
    except ValueError:
        return  # the line is a component
    # independent oracle for another line: all square-free multiplicities even
    k = next(i for i, v in enumerate(other) if v)
    s, t = sympy.symbols("s t")
    free = [i for i in range(3) if i != k]
    sub = {free[0]: s, free[1]: t}
    sub[k] = -(other[free[0]] * s + other[free[1]] * t) / sympy.Integer(other[k])
    X, Y, Z = sympy.symbols("x y z")
    expr = sympy.sympify(str(_sym(C4)))
    r = sympy.expand(expr.subs({X: sub[0], Y: sub[1], Z: sub[2]}, simultaneous=True))
    if r == 0:
        return
    _, factors = sympy.sqf_list(r, s, t)
    want = all(m % 2 == 0 for _, m in factors)
    assert line_is_bitangent(C4, other) is want


def _sym(p):
    X, Y, Z = sympy.symbols("x y z")
    return sum(sympy.Rational(str(c.to_fraction())) * X ** m[0] * Y ** m[1] * Z ** m[2]
               for m, c in p.terms.items())


def fermat_quartic_bitangents(K8):
    """The 28 bitangents of x^4 + y^4 + z^4: twelve lines u = e v with e^4 = -1 and
    sixteen lines x + a y + b z with a^4 = b^4 = 1."""
    z8 = K8.zeta()
    odd = [z8 ** k for k in (1, 3, 5, 7)]
    units = [K8.i() ** k for k in range(4)]
    out = []
    for u, v in ((0, 1), (1, 2), (0, 2)):
        for e in odd:
            L = [K8.zero] * 3
            L[u], L[v] = K8.one, -e
            out.append(L)
    for a in units:
        for b in units:
            out.append([K8.one, a, b])
    return out


def test_fermat_quartic_bitangent_oracle():
    K8 = field_cyclotomic(8)
    P8 = PolyRing(K8, ("x", "y", "z"))
    C4 = parse_poly("x^4+y^4+z^4", P8)
    lines = fermat_quartic_bitangents(K8)
    assert len({tuple(map(repr, L)) for L in lines}) == 28
    assert all(line_is_bitangent(C4, L) for L in lines)
    for q in ([0, 0, 1], [1, 0, 0], [1, 1, 0], [1, 2, 5], [3, -1, 2], [0, 1, 1]):
        qv = [K8(c) for c in q]
        want = any(sum((a * b for a, b in zip(L, qv)), K8.zero) == K8.zero for L in lines)
        assert bitangent_through(C4, q) is want, q


def test_bertini_dp2_conditions():
    K8 = field_cyclotomic(8)
    R = PolyRing(K8, ("t0", "t1", "t2", "t3"), (1, 1, 1, 2))
    S = DelPezzoSurface(parse_poly("t3^2+t2^4+t0^4+t1^4", R))
    # the ramification curve t3 = 0 is excluded
    assert not bertini_base_ok_dp2(S, S.point([1, 0, K8.zeta(), 0]))
    # (0:0:1) lies on the hyperflex lines x = e y
    p = S.point([0, 0, 1, K8.i()])
    assert not bertini_base_ok_dp2(S, p)
    with pytest.raises(ValueError):
        bertini_base_ok_dp2(catalog("E6").surface, catalog("E6").point("q1"))


def test_orbit_length_bound():
    assert [orbit_length_bound(d) for d in (1, 2, 3)] == [0, 1, 2]
    with pytest.raises(ValueError):
        orbit_length_bound(4)
    assert quartic_is_smooth(parse_poly("x^4+y^4+z^4", PLANE)) is True
