"""Exact arithmetic in simple number fields Q[x]/(m) and in prime fields.

Elements of a number field are stored as an integer numerator vector in the
power basis plus one positive common denominator.  Prime-field elements wrap a
residue.  Both kinds expose the same small protocol (``zero``, ``one``,
``__call__`` for coercion, arithmetic operators, ``bool``) so that polynomial
and geometric code can run unchanged over either.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache


class BadPrime(ArithmeticError):
    """Raised when a reduction hits an element whose denominator is divisible by p."""


class FieldMismatch(TypeError):
    pass


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"cannot read {v!r} as a rational")


# ---------------------------------------------------------------- univariate Q[x]
# Polynomials here are lists of Fractions, low degree first, no trailing zeros.

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = _trim(a)
    return _trim(q), a


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qsub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qxgcd(a, b):
    """Return (g, s) with s*a == g (mod b) and g the monic gcd."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub(s0, _qmul(q, s1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _qdivmod(num, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


# ---------------------------------------------------------------- prime fields

class PrimeField:
    """The field with p elements."""

    def __init__(self, p: int):
        if p < 2 or not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)
        self.degree = 1
        self.label = f"GF({p})"

    def __call__(self, v) -> "Mod":
        if isinstance(v, Mod):
            return v
        if isinstance(v, int):
            return Mod(v % self.p, self.p)
        v = _as_fraction(v)
        if v.denominator % self.p == 0:
            raise BadPrime(f"bad prime for element: {v}")
        return Mod(v.numerator * pow(v.denominator, -1, self.p) % self.p, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.label

    def elements(self):
        return (Mod(i, self.p) for i in range(self.p))

    def random(self, rng: random.Random) -> "Mod":
        return Mod(rng.randrange(self.p), self.p)


class Mod:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v
        self.p = p

    def _coerce(self, o):
        if isinstance(o, Mod):
            return o.v
        if isinstance(o, int):
            return o % self.p
        return NotImplemented

    def __add__(self, o):
        w = self._coerce(o)
        if w is NotImplemented:
            return w
        return Mod((self.v + w) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._coerce(o)
        if w is NotImplemented:
            return w
        return Mod((self.v - w) % self.p, self.p)

    def __rsub__(self, o):
        w = self._coerce(o)
        if w is NotImplemented:
            return w
        return Mod((w - self.v) % self.p, self.p)

    def __mul__(self, o):
        w = self._coerce(o)
        if w is NotImplemented:
            return w
        return Mod(self.v * w % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v % self.p, self.p)

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("inverse of zero")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        w = self._coerce(o)
        if w is NotImplemented:
            return w
        if not w:
            raise ZeroDivisionError("division by zero")
        return Mod(self.v * pow(w, -1, self.p) % self.p, self.p)

    def __rtruediv__(self, o):
        return Mod(self._coerce(o), self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        if isinstance(o, Mod):
            return self.v == o.v and self.p == o.p
        if isinstance(o, int):
            return self.v == o % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    @property
    def field(self):
        return PrimeField(self.p)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------- number fields

class NumberField:
    """Q[x]/(m) for a monic irreducible m with rational coefficients.

    ``modulus`` is given low degree first and is made monic.  Irreducibility is
    probed (see ``irreducibility_probe``) unless the field is built by
    ``field_cyclotomic``, where irreducibility is classical.
    """

    def __init__(self, modulus, label: str | None = None, *, check: bool = True,
                 cyclotomic_index: int | None = None):
        m = _trim([_as_fraction(c) for c in modulus])
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        lead = m[-1]
        m = [c / lead for c in m]
        self.modulus = tuple(m)
        self.degree = len(m) - 1
        self.label = label or f"Q[x]/({_fmt_upoly(m)})"
        self.cyclotomic_index = cyclotomic_index
        if check and not irreducibility_probe(m):
            raise ValueError(f"modulus {self.label} failed the irreducibility probe")
        self._build_tables()
        self.zero = AlgNum(self, (0,) * self.degree, 1)
        self.one = AlgNum(self, (1,) + (0,) * (self.degree - 1), 1)
        self.gen = self.one if self.degree == 1 else AlgNum(
            self, (0, 1) + (0,) * (self.degree - 2), 1)
        if self.degree == 1:
            # x itself is the rational -m0
            self.gen = self(-m[0])

    def _build_tables(self):
        d = self.degree
        # x^k mod m for k in [d, 2d-2], as rational vectors with one common denominator
        rows = []
        cur = [Fraction(0)] * d
        cur = [-c for c in self.modulus[:d]]  # x^d
        for _ in range(max(d - 1, 1)):
            rows.append(cur)
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            nxt = [nxt[i] - top * self.modulus[i] for i in range(d)]
            cur = nxt
        den = 1
        for r in rows:
            for c in r:
                den = den * c.denominator // math.gcd(den, c.denominator)
        self._red_den = den
        self._red = [tuple(int(c * den) for c in r) for r in rows]

    def __call__(self, v) -> "AlgNum":
        if isinstance(v, AlgNum):
            if v.field is not self:
                if v.field == self:
                    return AlgNum(self, v.num, v.den)
                raise FieldMismatch("element from another field")
            return v
        if isinstance(v, (list, tuple)):
            return self.from_coeffs(v)
        f = _as_fraction(v)
        return AlgNum._make(self, (f.numerator,) + (0,) * (self.degree - 1), f.denominator)

    def from_coeffs(self, coeffs) -> "AlgNum":
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > self.degree:
            # reduce a longer vector (a polynomial in the generator)
            out = self.zero
            p = self.one
            for c in cs:
                out = out + p * self(c)
                p = p * self.gen
            return out
        cs = cs + [Fraction(0)] * (self.degree - len(cs))
        den = 1
        for c in cs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return AlgNum._make(self, tuple(int(c * den) for c in cs), den)

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return self.label

    def descriptor(self) -> dict:
        if self.cyclotomic_index is not None:
            return {"cyclotomic": self.cyclotomic_index}
        return {"modulus": [str(c) for c in self.modulus]}

    def random(self, rng: random.Random, bound: int = 5, den: int = 3) -> "AlgNum":
        return self.from_coeffs([Fraction(rng.randint(-bound, bound), rng.randint(1, den))
                                 for _ in range(self.degree)])

    # ---- roots of unity
    def zeta(self, k: int = 1) -> "AlgNum":
        """ζ_n^k for the cyclotomic generator."""
        if self.cyclotomic_index is None:
            raise ValueError("not a cyclotomic field")
        return self.gen ** (k % self.cyclotomic_index)

    def root_of_unity(self, n: int, k: int = 1) -> "AlgNum":
        """A fixed primitive n-th root of unity raised to k (requires n | N or 2N)."""
        N = self.cyclotomic_index
        if N is None:
            raise ValueError("not a cyclotomic field")
        M = N if N % 2 == 0 else 2 * N
        if M % n:
            raise ValueError(f"Q(zeta_{N}) does not contain zeta_{n}")
        step = M // n
        z = self.gen if M == N else -self.gen  # -ζ_N is a primitive 2N-th root when N odd
        return z ** ((step * k) % M)

    def unit_roots(self):
        """All roots of unity of a cyclotomic field, as (order, element)."""
        N = self.cyclotomic_index
        M = N if N % 2 == 0 else 2 * N
        out = []
        for k in range(M):
            out.append((M // math.gcd(M, k), self.root_of_unity(M, k)))
        return out

    def i(self) -> "AlgNum":
        return self.root_of_unity(4)

    def sqrt2(self) -> "AlgNum":
        z = self.root_of_unity(8)
        return z + z ** 7

    def sqrt3(self) -> "AlgNum":
        z = self.root_of_unity(12)
        return z + z ** 11

    def embeddings(self, dps: int = 60):
        """Numeric images of the generator under all complex embeddings."""
        import mpmath
        with mpmath.workdps(dps):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(self.modulus)]
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * dps)
        return roots


def _fmt_upoly(m):
    terms = []
    for k in range(len(m) - 1, -1, -1):
        c = m[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and c == 1:
            terms.append(mono)
        elif mono:
            terms.append(f"{c}*{mono}")
        else:
            terms.append(str(c))
    return " + ".join(terms)


def field_cyclotomic(n: int) -> NumberField:
    """Q(ζ_n) = Q[x]/(Φ_n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _cyclotomic_cached(n)


@lru_cache(maxsize=None)
def _cyclotomic_cached(n: int) -> NumberField:
    return NumberField(cyclotomic_poly(n), f"Q(zeta_{n})", check=False, cyclotomic_index=n)


def field_from_descriptor(desc: dict) -> NumberField:
    if "cyclotomic" in desc:
        return field_cyclotomic(int(desc["cyclotomic"]))
    if "modulus" in desc:
        return NumberField([_as_fraction(c) for c in desc["modulus"]])
    raise ValueError(f"bad field descriptor {desc!r}")


class AlgNum:
    """Element of a NumberField in the power basis: (num[0] + num[1] x + ...) / den."""

    __slots__ = ("field", "num", "den", "_h")

    def __init__(self, field: NumberField, num, den: int = 1):
        self.field = field
        self.num = tuple(num)
        self.den = den
        self._h = None

    @staticmethod
    def _make(field, num, den):
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        if den != 1:
            g = math.gcd(den, *num)
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
        return AlgNum(field, num, den)

    @property
    def coeffs(self):
        return tuple(Fraction(c, self.den) for c in self.num)

    def _other(self, o):
        if isinstance(o, AlgNum):
            if o.field is not self.field and o.field != self.field:
                raise FieldMismatch("elements of different fields")
            return o
        if isinstance(o, (int, Fraction)):
            return self.field(o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return AlgNum._make(self.field, tuple(a + b for a, b in zip(self.num, o.num)), self.den)
        return AlgNum._make(self.field,
                            tuple(a * o.den + b * self.den for a, b in zip(self.num, o.num)),
                            self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        if isinstance(o, int):
            if o == 0:
                return self.field.zero
            return AlgNum._make(self.field, tuple(a * o for a in self.num), self.den)
        o = self._other(o)
        if o is None:
            return NotImplemented
        F = self.field
        d = F.degree
        a, b = self.num, o.num
        if d == 1:
            return AlgNum._make(F, (a[0] * b[0],), self.den * o.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        rd = F._red_den
        if rd == 1:
            low = prod[:d]
            for k in range(d, 2 * d - 1):
                c = prod[k]
                if c:
                    row = F._red[k - d]
                    for i in range(d):
                        if row[i]:
                            low[i] += c * row[i]
            return AlgNum._make(F, tuple(low), self.den * o.den)
        low = [c * rd for c in prod[:d]]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = F._red[k - d]
                for i in range(d):
                    low[i] += c * row[i]
        return AlgNum._make(F, tuple(low), self.den * o.den * rd)

    __rmul__ = __mul__

    def inverse(self) -> "AlgNum":
        if not self:
            raise ZeroDivisionError("division by zero in number field")
        F = self.field
        if F.degree == 1:
            return F(Fraction(self.den, self.num[0]))
        g, s = _qxgcd(list(self.coeffs), list(F.modulus))
        if len(g) != 1:
            raise ArithmeticError("modulus is reducible: element shares a factor with it")
        return F.from_coeffs(s)

    def __truediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __bool__(self):
        return any(self.num)

    def __eq__(self, o):
        if isinstance(o, AlgNum):
            return self.num == o.num and self.den == o.den and (
                o.field is self.field or o.field == self.field)
        if isinstance(o, (int, Fraction)):
            return self == self.field(o)
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.num, self.den))
        return self._h

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def __repr__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if k == 0 else f"{c}*x^{k}" if k > 1 else f"{c}*x")
        return "(" + " + ".join(parts) + ")"

    def serialize(self):
        if self.is_rational():
            return str(self.to_fraction())
        return [str(c) for c in self.coeffs]

    def numeric(self, emb):
        """Value under the embedding x -> emb (an mpmath number)."""
        out = 0
        p = 1
        for c in self.num:
            if c:
                out += c * p
            p *= emb
        return out / self.den


# ---------------------------------------------------------------- reduction mod p

class PrimeReduction:
    """Ring homomorphism Z_(p)[x]/(m) -> F_p sending x to ``root``."""

    def __init__(self, field: NumberField, p: int, root: int):
        self.field = field
        self.p = p
        self.root = root % p
        self.target = PrimeField(p)
        m = field.modulus
        den = 1
        for c in m:
            den = den * c.denominator // math.gcd(den, c.denominator)
        if den % p == 0:
            raise BadPrime(f"modulus has denominator divisible by {p}")
        val = sum(int(c * den) * pow(self.root, k, p) for k, c in enumerate(m)) % p
        if val:
            raise ValueError(f"{root} is not a root of the modulus mod {p}")
        self._powers = [pow(self.root, k, p) for k in range(field.degree)]

    def __call__(self, a) -> Mod:
        return reduce_mod_prime(a, self)

    def __repr__(self):
        return f"PrimeReduction(p={self.p}, root={self.root})"


def reduce_mod_prime(a, r: PrimeReduction) -> Mod:
    p = r.p
    if isinstance(a, (int, Fraction)):
        a = r.field(a)
    if a.den % p == 0:
        raise BadPrime(f"bad prime for element: denominator {a.den} divisible by {p}")
    s = 0
    for c, w in zip(a.num, r._powers):
        if c:
            s += c * w
    return Mod(s * pow(a.den, -1, p) % p, p)


def modulus_roots_mod_p(field: NumberField, p: int) -> list[int]:
    """Residues r with m(r) = 0 mod p (brute force for small p, splitting otherwise)."""
    den = 1
    for c in field.modulus:
        den = den * c.denominator // math.gcd(den, c.denominator)
    if den % p == 0:
        return []
    coeffs = [int(c * den) % p for c in field.modulus]
    return sorted(roots_mod_p(coeffs, p))


def split_primes(field: NumberField, count: int, start: int = 3, odd_only: bool = True,
                 exclude=()) -> list[PrimeReduction]:
    """The first ``count`` primes >= start with a degree-one root of the modulus."""
    out = []
    p = max(start, 2)
    while len(out) < count:
        if is_probable_prime(p) and (p % 2 or not odd_only) and p not in exclude:
            rs = modulus_roots_mod_p(field, p)
            if rs:
                out.append(PrimeReduction(field, p, rs[0]))
        p += 1
    return out


# ---------------------------------------------------------------- F_p[x] helpers
# Dense lists of ints mod p, low degree first.

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        if c:
            for i in range(db + 1):
                a[i + k] = (a[i + k] - c * b[i]) % p
        a.pop()
        _ptrim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(_ptrim(out), m, p)


def _ppowmod(base, e, m, p):
    out = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            out = _pmulmod(out, base, m, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, m, p)
    return out


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pdiv(a, b, p):
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db + 1):
            a[i + k] = (a[i + k] - c * b[i]) % p
        a.pop()
        _ptrim(a)
    return _ptrim(q)


def roots_mod_p(coeffs, p: int, rng: random.Random | None = None) -> set[int]:
    """Distinct roots in F_p of a polynomial given by integer coefficients."""
    f = _ptrim([c % p for c in coeffs])
    if not f:
        raise ValueError("zero polynomial has every residue as a root")
    if len(f) == 1:
        return set()
    if p < 64:
        return {x for x in range(p) if sum(c * pow(x, k, p) for k, c in enumerate(f)) % p == 0}
    xp = _ppowmod([0, 1], p, f, p)
    diff = list(xp) + [0] * max(0, 2 - len(xp))
    diff[1] = (diff[1] - 1) % p
    diff = _ptrim(diff)
    g = _pgcd(f, diff, p) if diff else f
    rng = rng or random.Random(p)
    out = set()
    _split(g, p, rng, out)
    return out


def _split(g, p, rng, out):
    if len(g) <= 1:
        return
    if len(g) == 2:
        out.add(-g[0] * pow(g[1], -1, p) % p)
        return
    while True:
        a = rng.randrange(p)
        h = _ppowmod([a, 1], (p - 1) // 2, g, p)
        h = list(h) + [0] * max(0, 1 - len(h))
        h[0] = (h[0] - 1) % p
        d = _pgcd(g, _ptrim(h), p)
        if 1 < len(d) < len(g):
            _split(d, p, rng, out)
            _split(_pdiv(g, d, p), p, rng, out)
            return


def _factor_degrees_mod_p(coeffs, p):
    """Distinct-degree factorization pattern (multiset of degrees) of a squarefree poly mod p."""
    f = _ptrim([c % p for c in coeffs])
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    degs = []
    h = [0, 1]
    d = 0
    while len(f) > 1:
        d += 1
        if 2 * d > len(f) - 1:
            degs.append(len(f) - 1)
            break
        h = _ppowmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _ptrim(diff), p)
        if len(g) > 1:
            k = (len(g) - 1) // d
            degs.extend([d] * k)
            f = _pdiv(f, g, p)
            h = _pmod(h, f, p) if len(f) > 1 else h
    return degs


def irreducibility_probe(modulus) -> bool:
    """Cheap irreducibility evidence for a monic rational modulus.

    Rejects a rational root outright.  For degree >= 4 it also compares the
    factor-degree patterns mod several good primes: a factorization over Q of
    degree k must show up as a sum of local factor degrees equal to k for every
    good prime, so an empty intersection of achievable proper degrees proves
    irreducibility.  When the patterns leave room for a factor, the probe
    returns False only if some degree survives all primes tried.
    """
    m = [_as_fraction(c) for c in modulus]
    den = 1
    for c in m:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in m]
    d = len(ints) - 1
    if d == 1:
        return True
    # rational root test on the integer polynomial
    a0, ad = ints[0], ints[-1]
    if a0 == 0:
        return False
    for u in _divisors(abs(a0)):
        for v in _divisors(abs(ad)):
            for s in (1, -1):
                x = Fraction(s * u, v)
                if sum(c * x ** k for k, c in enumerate(ints)) == 0:
                    return False
    if d <= 3:
        return True
    possible = set(range(1, d))
    tried = 0
    p = 3
    while tried < 12 and len(possible) > 0:
        p += 2
        if not is_probable_prime(p) or ad % p == 0:
            continue
        f = [c % p for c in ints]
        df = [(k * c) % p for k, c in enumerate(f)][1:]
        if len(_pgcd(f, _ptrim(df), p)) > 1:
            continue
        degs = _factor_degrees_mod_p(ints, p)
        sums = {0}
        for dg in degs:
            sums |= {s + dg for s in sums}
        possible &= sums
        tried += 1
    return not possible


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i * i != n:
                out.append(n // i)
        i += 1
    return out


# ---------------------------------------------------------------- roots in a field

def roots_in_field(coeffs, field: NumberField, dps: int = 70):
    """Distinct roots in ``field`` of a univariate polynomial with coefficients in it.

    ``coeffs`` is a list of field elements, low degree first.  Numeric roots are
    computed under every complex embedding, the power-basis coordinates of a
    candidate are recovered from a Vandermonde solve and rationalized, and only
    exactly verified candidates are returned.
    """
    import mpmath
    cs = [field(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    if len(cs) <= 1:
        if not cs:
            raise ValueError("zero polynomial")
        return []

    def ev(x):
        out = field.zero
        for c in reversed(cs):
            out = out * x + c
        return out

    found = []
    # cheap exact candidates first: 0 and roots of unity
    cands = [field.zero]
    if field.cyclotomic_index is not None:
        cands += [z for _, z in field.unit_roots()]
    else:
        cands += [field.one, -field.one]
    for z in cands:
        if z not in found and not ev(z):
            found.append(z)
    # deflate the exact roots (with multiplicity) so the numeric stage sees simple roots
    for z in found:
        while len(cs) > 1:
            q = [field.zero] * (len(cs) - 1)
            acc = field.zero
            for k in range(len(cs) - 1, 0, -1):
                acc = acc * z + cs[k]
                q[k - 1] = acc
            if acc * z + cs[0]:
                break
            cs = q
    if len(cs) <= 1:
        return found
    degree = len(found) + len(cs) - 1
    d = field.degree
    if d == 1:
        with mpmath.workdps(dps):
            num = [mpmath.mpf(c.num[0]) / c.den for c in reversed(cs)]
            rts = mpmath.polyroots(num, maxsteps=400, extraprec=6 * dps)
            for r in rts:
                if abs(mpmath.im(r)) > mpmath.mpf(10) ** (-dps // 2):
                    continue
                f = Fraction(mpmath.nstr(mpmath.re(r), dps, strip_zeros=False)).limit_denominator(10 ** (dps // 3))
                z = field(f)
                if z not in found and not ev(z):
                    found.append(z)
        return found
    with mpmath.workdps(dps):
        embs = field.embeddings(dps)
        # group embeddings into conjugate pairs; a root's image under a conjugate embedding
        # is the conjugate of its image under the partner
        tol = mpmath.mpf(10) ** (-dps // 2)
        used = [False] * d
        reps = []
        partner = {}
        for j, e in enumerate(embs):
            if used[j]:
                continue
            used[j] = True
            if abs(mpmath.im(e)) < tol:
                reps.append(j)
                continue
            for k in range(j + 1, d):
                if not used[k] and abs(embs[k] - mpmath.conj(e)) < tol:
                    used[k] = True
                    partner[k] = j
                    break
            reps.append(j)
        root_sets = []
        for j in reps:
            poly = [c.numeric(embs[j]) for c in reversed(cs)]
            root_sets.append(mpmath.polyroots(poly, maxsteps=400, extraprec=6 * dps))
        V = mpmath.matrix(d, d)
        for j in range(d):
            for k in range(d):
                V[j, k] = embs[j] ** k
        Vinv = V ** -1

        def rec(idx, chosen):
            if idx == len(reps):
                vals = [None] * d
                for j, r in zip(reps, chosen):
                    vals[j] = r
                for k, j in partner.items():
                    vals[k] = mpmath.conj(vals[j])
                coords = Vinv * mpmath.matrix(vals)
                fr = []
                for k in range(d):
                    c = coords[k]
                    if abs(mpmath.im(c)) > mpmath.mpf(10) ** (-dps // 3):
                        return
                    fr.append(Fraction(mpmath.nstr(mpmath.re(c), dps, strip_zeros=False))
                              .limit_denominator(10 ** (dps // 3)))
                z = field.from_coeffs(fr)
                if z not in found and not ev(z):
                    found.append(z)
                return
            for r in root_sets[idx]:
                rec(idx + 1, chosen + [r])
                if len(found) >= degree:
                    return

        rec(0, [])
    return found
