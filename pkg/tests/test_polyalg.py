import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dpverify.exactalg import field_cyclotomic
from dpverify.polyalg import (INCONCLUSIVE, Inconclusive, PolyRing, binary_common_roots,
                              binary_distinct_roots, binary_form, binary_squarefree,
                              buchberger, distinct_root_count, format_poly, is_groebner,
                              normal_form, parse_poly, principal_normal_form,
                              projective_zero_empty, affine_zero_empty, squarefree,
                              univ_gcd)

Q = field_cyclotomic(1)
R = PolyRing(Q, ("x", "y", "z"))
SX, SY, SZ = sympy.symbols("x y z")


def to_sympy(p):
    out = 0
    for m, c in p.terms.items():
        out += sympy.Rational(c.to_fraction().numerator, c.to_fraction().denominator) \
            * SX ** m[0] * SY ** m[1] * SZ ** m[2]
    return sympy.expand(out)


def from_sympy(e):
    return parse_poly(str(sympy.expand(e)).replace("**", "^"), R)


SYSTEMS = [
    ["x^2 + y^2 + z^2 - 1", "x*y - z", "x - y + z^2"],
    ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
    ["x*y*z - 1", "x + y + z", "x*y + y*z + z*x"],
    ["y^2 - x^3 - x", "x^2 + z^2 - y"],
]


def test_parse_and_format_round_trip():
    p = parse_poly("3*x^2*y - y*z/2 + 7", R)
    assert parse_poly(format_poly(p), R) == p
    assert to_sympy(p) == sympy.sympify("3*x**2*y - y*z/2 + 7")


def test_parse_rejects_garbage():
    with pytest.raises((ValueError, SyntaxError)):
        parse_poly("x +* y", R)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 3), st.integers(0, 3),
                          st.integers(0, 3)), min_size=1, max_size=6),
       st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 3), st.integers(0, 3),
                          st.integers(0, 3)), min_size=1, max_size=6))
def test_arithmetic_matches_sympy(ta, tb):
    a = sum((R.monomial((i, j, k), c) for c, i, j, k in ta), R.zero())
    b = sum((R.monomial((i, j, k), c) for c, i, j, k in tb), R.zero())
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))
    assert to_sympy(a ** 2) == sympy.expand(to_sympy(a) ** 2)


@pytest.mark.parametrize("system", SYSTEMS)
def test_groebner_matches_sympy(system):
    gens = [parse_poly(s, R) for s in system]
    gb = buchberger(gens)
    assert is_groebner(gb)
    oracle = sympy.groebner([sympy.sympify(s.replace("^", "**")) for s in system],
                            SX, SY, SZ, order="grevlex", domain="QQ")
    # same ideal: each basis reduces the other to zero
    for g in oracle.exprs:
        assert not normal_form(from_sympy(g), gb)
    for g in gb:
        assert oracle.reduce(to_sympy(g))[1] == 0
    assert len(gb) == len(oracle.exprs)


@settings(max_examples=80)
@given(st.sampled_from(SYSTEMS),
       st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 3), st.integers(0, 3),
                          st.integers(0, 3)), min_size=1, max_size=5),
       st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 2), st.integers(0, 2),
                          st.integers(0, 2)), min_size=1, max_size=3))
def test_normal_form_idempotent_and_ideal_invariant(system, tp, th):
    gens = [parse_poly(s, R) for s in system]
    gb = buchberger(gens)
    p = sum((R.monomial((i, j, k), c) for c, i, j, k in tp), R.zero())
    h = sum((R.monomial((i, j, k), c) for c, i, j, k in th), R.zero())
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r
    assert normal_form(p + h * gens[0], gb) == r


def test_budget_exhaustion_is_inconclusive():
    gens = [parse_poly(s, R) for s in SYSTEMS[0]]
    with pytest.raises(Inconclusive):
        buchberger(gens, budget=3)
    P = PolyRing(Q, ("x", "y", "z"))
    assert projective_zero_empty([P.var(0) ** 2, P.var(1) ** 2, P.var(2) ** 2 + P.var(0) * P.var(1)],
                                 budget=1) == INCONCLUSIVE


def test_projective_and_affine_emptiness():
    x, y, z = R.gens()
    assert projective_zero_empty([x, y, z]) is True
    assert projective_zero_empty([x * y, z]) is False
    assert projective_zero_empty([x ** 2 + y ** 2, x * z, y * z, z ** 2 - x * y]) is True
    assert affine_zero_empty([x * y - 1, x]) is True
    assert affine_zero_empty([x * y - 1]) is False


def test_principal_normal_form_kills_multiples():
    F = parse_poly("x^3 + y^3 + z^3", R)
    p = parse_poly("x^2*y + z", R)
    assert not principal_normal_form(p * F, F)
    assert principal_normal_form(p, F) == p


def test_univariate_gcd_matches_sympy():
    t = sympy.Symbol("t")
    a = sympy.expand((t - 1) ** 2 * (t + 2) * (t ** 2 + 1))
    b = sympy.expand((t - 1) * (t + 2) ** 3)
    conv = lambda e: [Q(int(c)) for c in sympy.Poly(e, t).all_coeffs()[::-1]]
    g = univ_gcd(conv(a), conv(b))
    want = sympy.Poly(sympy.gcd(a, b), t).monic().all_coeffs()[::-1]
    assert [c.to_fraction() for c in g] == [sympy.Rational(w) for w in want]
    assert not squarefree(conv(a))
    assert distinct_root_count(conv(a)) == 4


def test_binary_forms_count_root_at_infinity():
    x, y, z = R.gens()
    # s^2 * u has two distinct projective roots, one double at infinity
    f = binary_form(x ** 2 * y, 0, 1)
    assert binary_distinct_roots(f) == 2
    assert not binary_squarefree(f)
    g = binary_form(y * (x - y) * (x + y), 0, 1)
    assert binary_squarefree(g)
    assert binary_common_roots(f, g) == 1
