import random

import pytest
from hypothesis import given, settings, strategies as st

from dpverify.catalog import catalog
from dpverify.exactalg import field_cyclotomic
from dpverify.polyalg import PolyRing, parse_poly
from dpverify.projspace import (BasePointError, RationalMap, WLinMap, WProjPoint, apply,
                                compose_mod_surface, diagonal, equivariance_witness,
                                identity_map, is_involution_on, permutation,
                                proportional_mod_surface, reduction_for, surface_points_mod_p)

K = field_cyclotomic(12)
W2 = (1, 1, 1, 2)


def test_weighted_point_normalization():
    p = WProjPoint([1, 2, 3, 4], W2, K)
    assert p == WProjPoint([2, 4, 6, 16], W2, K)
    assert p != WProjPoint([2, 4, 6, 8], W2, K)
    assert WProjPoint([0, 0, 0, 5], W2, K).coords[3] == K.one
    with pytest.raises(ValueError):
        WProjPoint([0, 0, 0, 0], W2, K)


def test_unweighted_point_scaling():
    i = K.i()
    assert WProjPoint([0, i, 0, 1]) == WProjPoint([0, -1, 0, i])


def test_wlinmap_scaling_is_projective():
    blk = [[2, 1, 0], [0, 1, 0], [0, 0, 3]]
    g = WLinMap(blk, [5], K)
    lam = K(7)
    h = WLinMap([[lam * x for x in row] for row in blk], [lam * lam * 5], K)
    assert g == h
    # the heavy coordinate scales by the square, not linearly
    assert g != WLinMap([[lam * x for x in row] for row in blk], [lam * 5], K)


def test_inverse_and_order():
    g = diagonal(K, [1, K.zeta(), K.zeta() ** 2, 1])
    assert g.order() == 12
    assert (g * g.inverse()).is_identity()
    s = permutation(K, [1, 2, 0, 3])
    assert s.order() == 3


maps = st.sampled_from([
    diagonal(K, [1, K.i(), -1, 1]),
    permutation(K, [1, 0, 2, 3]),
    WLinMap([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]], (), K),
    diagonal(K, [K.zeta(), 1, 1, K.zeta() ** 5]),
])
points = st.lists(st.integers(-3, 3), min_size=4, max_size=4).filter(any)


@settings(max_examples=100)
@given(maps, maps, maps, points)
def test_action_is_compatible_with_composition(g, h, k, c):
    p = WProjPoint(c, None, K)
    assert apply(g * h, p) == apply(g, apply(h, p))
    assert (g * h) * k == g * (h * k)
    assert apply(g.inverse(), apply(g, p)) == p


def test_rational_map_degree_checks():
    R = PolyRing(K, ("t0", "t1", "t2", "t3"))
    with pytest.raises(ValueError):
        RationalMap([parse_poly(s, R) for s in ("t0^2", "t1", "t2^2", "t3^2")])
    f = RationalMap([parse_poly(s, R) for s in ("t1*t2", "t0*t2", "t0*t1", "t3^2")])
    assert f.k == 2
    with pytest.raises(BasePointError):
        f(WProjPoint([1, 0, 0, 0], None, K))


@pytest.fixture(scope="module")
def noncyclic():
    return catalog("noncyclic_S3")


def test_explicit_involutions(noncyclic):
    S = noncyclic.surface
    for name in ("phi_p0", "phi_p1", "phi_p2"):
        assert is_involution_on(S, noncyclic.map(name))
    assert is_involution_on(S, identity_map(noncyclic.ring))


def test_linear_order_three_is_not_an_involution(noncyclic):
    g = noncyclic.group("G").elements
    three = next(h for h in g if h.order() == 3)
    assert not is_involution_on(noncyclic.surface, three.as_rational_map(noncyclic.ring))


def test_composition_matches_pointwise(noncyclic):
    S = noncyclic.surface
    f, g = noncyclic.map("phi_p1"), noncyclic.map("phi_p2")
    fg = compose_mod_surface(f, g, S)
    red = reduction_for(noncyclic.field)
    rng = random.Random(3)
    checked = 0
    for P in surface_points_mod_p(S.F, red, 20, rng):
        try:
            want = apply(f.reduce(red), apply(g.reduce(red), P))
            got = apply(fg.reduce(red), P)
        except BasePointError:
            continue
        assert want == got
        checked += 1
    assert checked >= 10
    assert not proportional_mod_surface(fg, identity_map(noncyclic.ring), S)


def test_sampled_points_lie_on_surface(noncyclic):
    red = reduction_for(noncyclic.field)
    Fp = noncyclic.F.map_coeffs(red, noncyclic.ring.with_field(red.target))
    pts = surface_points_mod_p(noncyclic.F, red, 25, random.Random(1))
    assert len(pts) == 25
    assert all(not Fp.evaluate(list(P.coords)) for P in pts)


def test_equivariance_witness(noncyclic):
    G = noncyclic.group("G")
    w = equivariance_witness(noncyclic.surface, noncyclic.map("phi_p0"), G)
    assert w is not None and set(w) == set(G.elements)
    assert all(w[g] in G for g in G.elements)
