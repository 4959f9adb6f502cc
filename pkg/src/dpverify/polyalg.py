"""Sparse weighted multivariate polynomials, univariate gcds and a Buchberger engine."""

from __future__ import annotations

import ast
import heapq
from fractions import Fraction
from itertools import combinations


class Inconclusive(Exception):
    """A computation stopped at its step budget; no answer is claimed."""


INCONCLUSIVE = "inconclusive"
DEFAULT_BUDGET = 100000


class PolyRing:
    """Coefficient domain plus variable names and positive weights."""

    def __init__(self, field, names, weights=None):
        if isinstance(names, int):
            names = [f"t{i}" for i in range(names)]
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars or any(w <= 0 for w in self.weights):
            raise ValueError("one positive weight per variable is required")

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.weights == other.weights)

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {self.names}, {self.weights})"

    def var(self, i) -> "MPoly":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return MPoly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def const(self, c) -> "MPoly":
        c = self.field(c)
        return MPoly(self, {(0,) * self.nvars: c} if c else {})

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)

    def monomial(self, exps, c=1) -> "MPoly":
        c = self.field(c)
        return MPoly(self, {tuple(exps): c} if c else {})

    def with_field(self, field) -> "PolyRing":
        return PolyRing(field, self.names, self.weights)

    def parse(self, text: str, symbols: dict | None = None) -> "MPoly":
        return parse_poly(text, self, symbols)


class MPoly:
    """Polynomial as a map exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # ---- construction helpers
    def _lift(self, o):
        if isinstance(o, MPoly):
            if o.ring is not self.ring and o.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return o
        return self.ring.const(o)

    def copy(self):
        return MPoly(self.ring, dict(self.terms))

    # ---- arithmetic
    def __add__(self, o):
        o = self._lift(o)
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) + (-self)

    def __mul__(self, o):
        if not isinstance(o, MPoly):
            c = self.ring.field(o)
            if not c:
                return self.ring.zero()
            return MPoly(self.ring, {m: v * c for m, v in self.terms.items()})
        o = self._lift(o)
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return MPoly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        return self * c

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, o):
        if isinstance(o, MPoly):
            return self.terms == o.terms
        return self == self.ring.const(o)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return format_poly(self)

    # ---- structure
    def weighted_degree_of(self, m) -> int:
        return sum(e * w for e, w in zip(m, self.ring.weights))

    def weighted_degrees(self) -> set:
        return {self.weighted_degree_of(m) for m in self.terms}

    def weighted_degree(self) -> int:
        ds = self.weighted_degrees()
        if not ds:
            return -1
        return max(ds)

    def is_homogeneous(self) -> bool:
        return len(self.weighted_degrees()) <= 1

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def variables(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def partial(self, i: int) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                n = list(m)
                n[i] -= 1
                out[tuple(n)] = c * m[i]
        return MPoly(self.ring, {m: c for m, c in out.items() if c})

    def partials(self):
        return [self.partial(i) for i in range(self.ring.nvars)]

    def map_coeffs(self, fn, ring: PolyRing) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return MPoly(ring, out)

    def evaluate(self, values):
        """Value at a point given by one coefficient-domain element per variable."""
        field = None
        total = None
        pw = [dict() for _ in values]
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    cache = pw[i]
                    v = cache.get(e)
                    if v is None:
                        v = values[i] ** e
                        cache[e] = v
                    t = t * v
            total = t if total is None else total + t
        if total is None:
            field = self.ring.field
            return field.zero
        return total

    def substitute(self, images, ring: PolyRing | None = None) -> "MPoly":
        """Ring homomorphism sending variable i to images[i] (an MPoly or a constant)."""
        ring = ring or (images[0].ring if images and isinstance(images[0], MPoly) else self.ring)
        imgs = [im if isinstance(im, MPoly) else ring.const(im) for im in images]
        if len(imgs) != self.ring.nvars:
            raise ValueError("arity mismatch in substitution")
        cache = [dict() for _ in imgs]

        def power(i, e):
            c = cache[i]
            if e not in c:
                if e == 1:
                    c[e] = imgs[i]
                else:
                    h = e // 2
                    c[e] = power(i, h) * power(i, e - h)
            return c[e]

        out = ring.zero()
        acc = {}
        for m, c in self.terms.items():
            t = ring.const(c)
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            for mm, cc in t.terms.items():
                v = acc.get(mm)
                acc[mm] = cc if v is None else v + cc
        out = MPoly(ring, {m: c for m, c in acc.items() if c})
        return out

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.ring, {m: c for m, c in self.terms.items()
                                 if self.weighted_degree_of(m) == d})

    def content_normalized(self) -> "MPoly":
        """Scale so the leading coefficient (grevlex) is one."""
        if not self.terms:
            return self
        lm = max(self.terms, key=order_key("grevlex", self.ring.weights))
        return self * (self.ring.field.one / self.terms[lm])


def format_poly(p: MPoly) -> str:
    if not p.terms:
        return "0"
    names = p.ring.names
    key = order_key("grevlex", p.ring.weights)
    parts = []
    for m in sorted(p.terms, key=key, reverse=True):
        c = p.terms[m]
        mono = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e)
        cs = repr(c)
        if not mono:
            parts.append(cs)
        elif c == p.ring.field.one:
            parts.append(mono)
        elif c == -p.ring.field.one:
            parts.append("-" + mono)
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts)


# ---------------------------------------------------------------- parsing

def parse_poly(text: str, ring: PolyRing, symbols: dict | None = None) -> MPoly:
    """Parse +,-,*,/,** and ^ over the ring's variables and named constants.

    ``symbols`` maps extra names (for example ``i`` or ``e3``) to field
    elements.  Division is only allowed by constants.
    """
    symbols = dict(symbols or {})
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    field = ring.field

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, (int,)):
                return ring.const(node.value)
            if isinstance(node.value, str):
                return ring.const(Fraction(node.value))
            raise ValueError(f"unsupported constant {node.value!r}")
        if isinstance(node, ast.Name):
            if node.id in ring.names:
                return ring.var(node.id)
            if node.id in symbols:
                return ring.const(symbols[node.id])
            raise ValueError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
                    raise ValueError("exponent must be a literal integer")
                return a ** node.right.value
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.variables() or not b:
                    raise ValueError("division by a non-constant")
                return a * (field.one / b.constant_coeff())
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")

    return ev(tree)


# ---------------------------------------------------------------- monomial orders

def order_key(order: str, weights):
    """Sort key: larger key means larger monomial."""
    if order == "grevlex":
        w = tuple(weights)
        return lambda m: (sum(a * b for a, b in zip(m, w)),) + tuple(-x for x in reversed(m))
    if order == "lex":
        return lambda m: m
    if order.startswith("lexpivot:"):
        v = int(order.split(":")[1])
        return lambda m: (m[v],) + m
    raise ValueError(f"unknown order {order!r}")


def leading_term(p: MPoly, order: str = "grevlex"):
    key = order_key(order, p.ring.weights)
    m = max(p.terms, key=key)
    return m, p.terms[m]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _msub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class GroebnerBasis:
    def __init__(self, ring: PolyRing, generators, order: str):
        self.ring = ring
        self.generators = list(generators)
        self.order = order
        key = order_key(order, ring.weights)
        self._key = key
        self._lead = []
        for g in self.generators:
            m = max(g.terms, key=key)
            self._lead.append((m, g.terms[m], g.terms))

    def leading_monomials(self):
        return [m for m, _, _ in self._lead]

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading_monomials())

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({len(self.generators)} generators, order={self.order})"


class _Budget:
    def __init__(self, n):
        self.left = n

    def spend(self, k=1):
        self.left -= k
        if self.left < 0:
            raise Inconclusive("inconclusive (budget)")


def _reduce_terms(terms, lead, key, field, budget=None, full=True):
    """Division remainder of ``terms`` by polynomials with leading data ``lead``."""
    p = dict(terms)
    heap = [(_neg(key(m)), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, lc, gt in lead:
            if _divides(lm, m):
                if budget is not None:
                    budget.spend()
                q = c / lc
                sh = _msub(m, lm)
                for gm, gc in gt.items():
                    if gm == lm:
                        continue
                    mm = tuple(x + y for x, y in zip(gm, sh))
                    old = p.get(mm)
                    if old is None:
                        p[mm] = -q * gc
                        heapq.heappush(heap, (_neg(key(mm)), mm))
                    else:
                        v = old - q * gc
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
    return rem


def _neg(k):
    return tuple(-x for x in k)


def normal_form(p: MPoly, gb: GroebnerBasis, budget: int | None = None) -> MPoly:
    """Remainder of p on division by the basis; zero iff p lies in the ideal."""
    b = _Budget(budget) if budget else None
    return MPoly(p.ring, _reduce_terms(p.terms, gb._lead, gb._key, p.ring.field, b))


def _monic(terms, key, field):
    m = max(terms, key=key)
    inv = field.one / terms[m]
    return {k: v * inv for k, v in terms.items()}


def buchberger(gens, order: str = "grevlex", budget: int = DEFAULT_BUDGET,
               reduce_result: bool = True) -> GroebnerBasis:
    """Gröbner basis with the product and chain criteria.

    Raises ``Inconclusive`` when more than ``budget`` reduction steps are needed.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    field = ring.field
    key = order_key(order, ring.weights)
    bud = _Budget(budget)
    basis = []   # list of term dicts (monic)
    leads = []   # (lm, lc, terms)
    pairs = []
    counter = 0

    def add(terms):
        nonlocal counter
        terms = _monic(terms, key, field)
        lm = max(terms, key=key)
        k = len(basis)
        basis.append(terms)
        leads.append((lm, field.one, terms))
        for i in range(k):
            if leads[i] is None:
                continue
            l = _lcm(leads[i][0], lm)
            counter += 1
            heapq.heappush(pairs, (key(l), counter, i, k, l))

    for g in gens:
        r = _reduce_terms(g.terms, [x for x in leads if x is not None], key, field, bud)
        if r:
            if not any(max(r, key=key)):
                return GroebnerBasis(ring, [ring.one()], order)
            add(r)

    done = set()
    while pairs:
        _, _, i, j, l = heapq.heappop(pairs)
        done.add((i, j))
        li, lj = leads[i][0], leads[j][0]
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(leads[k][0], l):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        bud.spend()
        si = _msub(l, li)
        sj = _msub(l, lj)
        s = {}
        for m, c in basis[i].items():
            s[tuple(x + y for x, y in zip(m, si))] = c
        for m, c in basis[j].items():
            mm = tuple(x + y for x, y in zip(m, sj))
            v = s.get(mm)
            if v is None:
                s[mm] = -c
            else:
                v = v - c
                if v:
                    s[mm] = v
                else:
                    del s[mm]
        if not s:
            continue
        r = _reduce_terms(s, leads, key, field, bud)
        if r:
            if not any(max(r, key=key)):
                return GroebnerBasis(ring, [ring.one()], order)
            add(r)

    polys = basis
    if reduce_result:
        polys = _interreduce(basis, key, field, bud)
    return GroebnerBasis(ring, [MPoly(ring, t) for t in polys], order)


def _interreduce(basis, key, field, bud):
    # drop elements whose leading monomial is divisible by another's
    items = sorted(basis, key=lambda t: key(max(t, key=key)))
    minimal = []
    for t in items:
        lm = max(t, key=key)
        if any(_divides(max(s, key=key), lm) for s in minimal):
            continue
        minimal = [s for s in minimal if not _divides(lm, max(s, key=key))]
        minimal.append(t)
    out = []
    for idx, t in enumerate(minimal):
        others = [(max(s, key=key), field.one, s) for k, s in enumerate(minimal) if k != idx]
        lm = max(t, key=key)
        tail = {m: c for m, c in t.items() if m != lm}
        r = _reduce_terms(tail, others, key, field, bud)
        r[lm] = t[lm]
        out.append(_monic(r, key, field))
    return sorted(out, key=lambda t: key(max(t, key=key)))


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    key = gb._key
    field = gb.ring.field
    for (li, ci, ti), (lj, cj, tj) in combinations(gb._lead, 2):
        l = _lcm(li, lj)
        s = {}
        for m, c in ti.items():
            s[tuple(x + y for x, y in zip(m, _msub(l, li)))] = c / ci
        for m, c in tj.items():
            mm = tuple(x + y for x, y in zip(m, _msub(l, lj)))
            v = s.get(mm, field.zero) - c / cj
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        if s and _reduce_terms(s, gb._lead, key, field):
            return False
    return True


def projective_zero_empty(gens, budget: int = DEFAULT_BUDGET):
    """True iff the weighted-homogeneous generators have no common projective zero.

    Decided by the leading monomials of a Gröbner basis containing a pure
    power of every variable.  Returns ``INCONCLUSIVE`` if the budget runs out.
    """
    gens = [g for g in gens if g]
    if not gens:
        return False
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("generators must be weighted-homogeneous")
    try:
        gb = buchberger(gens, "grevlex", budget)
    except Inconclusive:
        return INCONCLUSIVE
    n = gens[0].ring.nvars
    pure = set()
    for m in gb.leading_monomials():
        nz = [i for i, e in enumerate(m) if e]
        if len(nz) == 1:
            pure.add(nz[0])
        elif not nz:
            return True
    return len(pure) == n


def affine_zero_empty(gens, budget: int = DEFAULT_BUDGET):
    """True iff the affine variety of the generators is empty (1 lies in the ideal)."""
    try:
        gb = buchberger(gens, "grevlex", budget)
    except Inconclusive:
        return INCONCLUSIVE
    return gb.is_unit()


def principal_pivot(F: MPoly) -> int | None:
    """A variable v such that F = c*v^k + (terms of lower degree in v)."""
    for v in range(F.ring.nvars):
        k = F.degree_in(v)
        tops = [m for m in F.terms if m[v] == k]
        if k > 0 and len(tops) == 1 and sum(tops[0]) == k:
            return v
    return None


def principal_normal_form(p: MPoly, F: MPoly) -> MPoly:
    """Normal form of p modulo the principal ideal (F).

    Uses lex with a pivot variable first when one exists (see
    ``principal_pivot``), else weighted grevlex.  A single polynomial is
    always a Gröbner basis, so the remainder is canonical for the chosen order.
    """
    v = principal_pivot(F)
    order = f"lexpivot:{v}" if v is not None else "grevlex"
    return normal_form(p, GroebnerBasis(F.ring, [F], order))


# ---------------------------------------------------------------- univariate
# Dense coefficient lists over a field, low degree first.

def utrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def udivmod(a, b):
    a = utrim(a)
    b = utrim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(a) < len(b):
        return [], a
    inv = b[-1] ** -1 if hasattr(b[-1], "__pow__") else 1 / b[-1]
    q = [None] * (len(a) - len(b) + 1)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv
        k = len(a) - 1 - db
        q[k] = c
        for i in range(db):
            a[i + k] = a[i + k] - c * b[i]
        a.pop()
        a = utrim(a)
    zero = b[-1] * 0
    return utrim([zero if x is None else x for x in q]), a


def umonic(a):
    a = utrim(a)
    if not a:
        return a
    inv = a[-1] ** -1
    return [c * inv for c in a]


def uderiv(a):
    return utrim([c * k for k, c in enumerate(a)][1:])


def umul(a, b):
    if not a or not b:
        return []
    zero = a[0] * 0
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return utrim(out)


def subresultant_prs(a, b):
    """Subresultant polynomial remainder sequence of a and b (deg a >= deg b)."""
    a, b = utrim(a), utrim(b)
    if len(a) < len(b):
        a, b = b, a
    seq = [a, b]
    if not b:
        return [a]
    g = a[0] * 0 + 1
    h = g
    while True:
        a, b = seq[-2], seq[-1]
        delta = len(a) - len(b)
        # pseudo-remainder
        lc = b[-1]
        r = list(a)
        for _ in range(delta + 1):
            r = [c * lc for c in r]
        _, r = udivmod(r, b)
        if not r:
            break
        denom = g * h ** delta
        r = [c / denom for c in r]
        seq.append(utrim(r))
        g = lc
        h = h ** (1 - delta) * g ** delta if delta <= 1 else (g ** delta) / (h ** (delta - 1))
    return seq


def univ_gcd(a, b):
    """Monic gcd of two univariate dense polynomials (last subresultant, normalized)."""
    a, b = utrim(a), utrim(b)
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    if not a:
        return umonic(b)
    if not b:
        return umonic(a)
    return umonic(subresultant_prs(a, b)[-1])


def squarefree(a) -> bool:
    a = utrim(a)
    if not a:
        raise ValueError("zero polynomial")
    return len(univ_gcd(a, uderiv(a))) == 1


def squarefree_part(a):
    a = utrim(a)
    g = univ_gcd(a, uderiv(a)) if len(a) > 1 else [a[0] ** 0]
    q, r = udivmod(a, g)
    assert not r
    return umonic(q)


def distinct_root_count(a) -> int:
    """Number of distinct roots over an algebraic closure."""
    return len(squarefree_part(a)) - 1


def to_univariate(p: MPoly, var: int):
    """Dense coefficient list of p as a polynomial in one variable (others absent)."""
    field = p.ring.field
    if p.variables() - {var}:
        raise ValueError("polynomial is not univariate in the requested variable")
    deg = p.degree_in(var)
    out = [field.zero] * (deg + 1)
    for m, c in p.terms.items():
        out[m[var]] = c
    return utrim(out)


# ---------------------------------------------------------------- binary forms
# A binary form of degree d is a list of d+1 coefficients c_k of x^k y^(d-k).

def binary_form(p: MPoly, x: int, y: int, degree: int | None = None):
    """Coefficient list of a form in variables x, y (others absent)."""
    field = p.ring.field
    if p.variables() - {x, y}:
        raise ValueError("not a binary form in the requested variables")
    if degree is None:
        degree = p.total_degree()
    out = [field.zero] * (degree + 1)
    for m, c in p.terms.items():
        out[m[x]] = c
    return out


def binary_gcd(f, g):
    """gcd of two binary forms as (dehomogenized gcd, multiplicity of root at infinity).

    Forms are coefficient lists as in ``binary_form``; the point (1:0) is the
    root at infinity of the dehomogenization at y=1.
    """
    def inf_mult(h):
        if not any(h):
            return None
        d = len(h) - 1
        top = max(k for k, c in enumerate(h) if c)
        return d - top

    fi, gi = inf_mult(f), inf_mult(g)
    fa, ga = utrim(f), utrim(g)
    if fi is None and gi is None:
        raise ValueError("both forms are zero")
    if fi is None:
        return umonic(ga), gi
    if gi is None:
        return umonic(fa), fi
    return univ_gcd(fa, ga), min(fi, gi)


def binary_distinct_roots(f) -> int:
    """Distinct projective roots of a nonzero binary form."""
    g, inf = binary_gcd(f, [c * 0 for c in f])
    return distinct_root_count(g) + (1 if inf else 0)


def binary_common_roots(f, g) -> int:
    """Number of distinct common projective roots of two binary forms."""
    h, inf = binary_gcd(f, g)
    return distinct_root_count(h) + (1 if inf else 0)


def binary_squarefree(f) -> bool:
    """True iff the nonzero binary form has only simple roots."""
    d = len(f) - 1
    a = utrim(f)
    if not a:
        return False
    inf = d - (len(a) - 1)
    if inf > 1:
        return False
    return len(a) == 1 or squarefree(a)
