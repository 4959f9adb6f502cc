import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from dpverify.exactalg import (BadPrime, FieldMismatch, NumberField, PrimeReduction,
                               cyclotomic_poly, euler_phi, field_cyclotomic,
                               field_from_descriptor, roots_in_field, roots_mod_p,
                               split_primes)

from conftest import elements

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 9, 12, 14, 18, 24])
def test_cyclotomic_poly_matches_sympy(n):
    want = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in want]
    assert euler_phi(n) == sympy.totient(n)


@pytest.mark.parametrize("n", [3, 4, 8, 12, 24])
def test_primitive_root_has_order_n(n):
    K = field_cyclotomic(n)
    z = K.zeta()
    assert z ** n == K.one
    assert all(z ** k != K.one for k in range(1, n))


def test_named_square_roots(q12):
    assert q12.i() ** 2 == q12(-1)
    assert q12.sqrt3() ** 2 == q12(3)
    K8 = field_cyclotomic(8)
    assert K8.sqrt2() ** 2 == K8(2)


def test_inverse_and_division(q12):
    a = q12.from_coeffs([1, 2, Fraction(-1, 3), 5])
    assert a * a.inverse() == q12.one
    with pytest.raises(ZeroDivisionError):
        q12.zero.inverse()


def test_minimal_polynomial_oracle(q12):
    # 1 + sqrt(3) satisfies x^2 - 2x - 2
    a = q12.one + q12.sqrt3()
    assert a * a - 2 * a - 2 == q12.zero
    w = q12.zeta(4)  # primitive cube root of unity
    assert w * w + w + 1 == q12.zero


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_cyclotomic(3).one + field_cyclotomic(4).one


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        NumberField([-1, 0, 1])  # x^2 - 1


def test_descriptor_round_trip(q12):
    assert field_from_descriptor(q12.descriptor()) is q12
    K = field_from_descriptor({"modulus": [-2, 0, 1]})
    assert K.gen ** 2 == K(2)


@pytest.mark.parametrize("p", [7, 13, 101, 1009])
def test_roots_mod_p_brute_force(p):
    rng = random.Random(p)
    for _ in range(20):
        coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 7))]
        if not any(c % p for c in coeffs[1:]):
            continue
        want = {x for x in range(p) if sum(c * pow(x, k, p) for k, c in enumerate(coeffs)) % p == 0}
        assert roots_mod_p(coeffs, p, random.Random(0)) == want


def test_split_primes_are_one_mod_n():
    for r in split_primes(field_cyclotomic(12), 5):
        assert r.p % 12 == 1


def test_bad_prime_raised(q3):
    r = split_primes(q3, 1, start=7)[0]
    with pytest.raises(BadPrime):
        r(q3(Fraction(1, 7)))


def test_roots_in_field(q12):
    # x^3 - 3x over Q(zeta_12): roots 0, ±sqrt3
    s = q12.sqrt3()
    roots = roots_in_field([0, -3, 0, 1], q12)
    assert sorted(map(repr, roots)) == sorted(map(repr, [q12.zero, s, -s]))
    # (x - 1)^3 (x - i): repeated exact roots are deflated before the numeric stage
    i = q12.i()
    poly = [q12.one]
    for r in (q12.one, q12.one, q12.one, i):
        poly = [(poly[k - 1] if k else q12.zero) - r * (poly[k] if k < len(poly) else q12.zero)
                for k in range(len(poly) + 1)]
    assert set(map(repr, roots_in_field(poly, q12))) == {repr(q12.one), repr(i)}


FIELDS = [field_cyclotomic(n) for n in (3, 8, 12, 24)]


@pytest.mark.parametrize("K", FIELDS, ids=lambda K: K.label)
def test_reduction_homomorphism_random_pairs(K):
    """Reduction to F_p respects + and * on 1000 random pairs per field."""
    rng = random.Random(K.degree)
    reds = split_primes(K, 3, start=50)
    for _ in range(1000):
        a, b = K.random(rng), K.random(rng)
        r = reds[rng.randrange(len(reds))]
        assert r(a + b) == r(a) + r(b)
        assert r(a * b) == r(a) * r(b)
        if r(b):
            try:
                q = r(a / b)
            except BadPrime:
                # p divides the norm of b: a/b is not p-integral in the power basis
                continue
            assert q == r(a) / r(b)


@settings(max_examples=200)
@given(st.data())
def test_field_axioms(data):
    K = data.draw(st.sampled_from(FIELDS))
    a, b, c = (data.draw(elements(K)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == K.zero
    if a:
        assert a * a.inverse() == K.one


@settings(max_examples=100)
@given(st.integers(2, 30))
def test_prime_reduction_rejects_non_roots(k):
    K = field_cyclotomic(3)
    r = split_primes(K, 1, start=31)[0]
    bad = (r.root + k) % r.p
    if pow(bad, 2, r.p) + bad + 1 != r.p and (bad * bad + bad + 1) % r.p:
        with pytest.raises(ValueError):
            PrimeReduction(K, r.p, bad)
