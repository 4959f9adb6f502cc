"""Write the named reference groups as permutation generators.

Each group is built from an explicit model (permutations, matrices or a
semidirect product rule) and shipped as its regular permutation representation
when no small natural action is at hand.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

from dpverify.gaction import _close, FiniteGroup

OUT = Path(__file__).resolve().parents[1] / "src" / "dpverify" / "data" / "reference_groups.json"


def cycle(n, *cycles):
    p = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return p


def shift(perm, k, n):
    """Embed a permutation on range(len(perm)) at offset k inside range(n)."""
    out = list(range(n))
    for i, j in enumerate(perm):
        out[k + i] = k + j
    return out


def direct(*factors):
    """Disjoint-union action of a direct product; factors are (degree, generators)."""
    n = sum(d for d, _ in factors)
    gens, off = [], 0
    for d, gs in factors:
        gens += [shift(g, off, n) for g in gs]
        off += d
    return n, gens


def regular(gens, mul, identity):
    elems, index, _ = _close(gens, mul, identity, 10000)
    return [[index[mul(g, x)] for x in elems] for g in gens]


# -------- models
def cyclic(n):
    return n, [cycle(n, list(range(n)))]


def dihedral(n):
    return n, [cycle(n, list(range(n))), [(-i) % n for i in range(n)]]


def sym3():
    return 3, [cycle(3, [0, 1, 2]), cycle(3, [0, 1])]


def sym4():
    return 4, [cycle(4, [0, 1, 2, 3]), cycle(4, [0, 1])]


def wreath3_s3():
    return 9, [cycle(9, [0, 1, 2]), cycle(9, [0, 3, 6], [1, 4, 7], [2, 5, 8]),
               cycle(9, [0, 3], [1, 4], [2, 5])]


def wreath4_2():
    return 8, [cycle(8, [0, 1, 2, 3]), cycle(8, [0, 4], [1, 5], [2, 6], [3, 7])]


def heisenberg_ext(M):
    """H_3(3) in symplectic coordinates extended by the automorphism (v, c) -> (Mv, c)."""
    def mat_pow(k):
        R = ((1, 0), (0, 1))
        for _ in range(k):
            R = tuple(tuple(sum(R[i][t] * M[t][j] for t in range(2)) % 3 for j in range(2))
                      for i in range(2))
        return R
    order = 1
    while mat_pow(order) != ((1, 0), (0, 1)):
        order += 1

    def act(k, h):
        A = mat_pow(k)
        x, y, c = h
        return ((A[0][0] * x + A[0][1] * y) % 3, (A[1][0] * x + A[1][1] * y) % 3, c)

    def mul(a, b):
        (h, k), (h2, k2) = a, b
        x2, y2, c2 = act(k, h2)
        x, y, c = h
        return ((x + x2) % 3, (y + y2) % 3, (c + c2 + 2 * (x * y2 - x2 * y)) % 3), (k + k2) % order

    e = ((0, 0, 0), 0)
    gens = [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 0), 1)]
    perms = regular(gens, mul, e)
    return len(perms[0]), perms


class GI:
    """Gaussian rational a + b i."""
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        return GI(self.a + o.a, self.b + o.b)

    def __mul__(self, o):
        return GI(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    def key(self):
        return (self.a, self.b)


def matgroup(gens):
    def mul(A, B):
        return tuple(tuple((A[i][0] * B[0][j] + A[i][1] * B[1][j]).key() for j in range(2))
                     for i in range(2))

    def lift(K):
        return tuple(tuple(GI(*x) for x in row) for row in K)

    keyed = [tuple(tuple(x.key() for x in row) for row in g) for g in gens]

    def kmul(a, b):
        return mul(lift(a), lift(b))

    ident = ((GI(1).key(), GI(0).key()), (GI(0).key(), GI(1).key()))
    perms = regular(keyed, kmul, ident)
    return len(perms[0]), perms


def four_a4():
    h = Fraction(1, 2)
    qi = ((GI(0, 1), GI(0)), (GI(0), GI(0, -1)))
    omega = ((GI(h, h), GI(h, h)), (GI(-h, h), GI(h, -h)))
    scalar_i = ((GI(0, 1), GI(0)), (GI(0), GI(0, 1)))
    return matgroup([qi, omega, scalar_i])


def pauli():
    X = ((GI(0), GI(1)), (GI(1), GI(0)))
    Z = ((GI(1), GI(0)), (GI(0), GI(-1)))
    scalar_i = ((GI(0, 1), GI(0)), (GI(0), GI(0, 1)))
    return matgroup([X, Z, scalar_i])


MODELS = {
    "12": (cyclic(12), "cyclic group of order 12"),
    "2x12": (direct(cyclic(2), cyclic(12)), "cyclic 2 times cyclic 12"),
    "D18": (dihedral(9), "dihedral group of order 18 acting on a 9-gon"),
    "S3": (sym3(), "symmetric group on 3 letters"),
    "S4": (sym4(), "symmetric group on 4 letters"),
    "S3x2": (direct(sym3(), cyclic(2)), "S3 times a cyclic group of order 2"),
    "S3x3": (direct(sym3(), cyclic(3)), "S3 times a cyclic group of order 3"),
    "3^2x2": (direct(cyclic(3), cyclic(3), cyclic(2)), "elementary abelian 3^2 times 2"),
    "3^3:S3": (wreath3_s3(), "wreath product of Z3 by S3 on 9 points"),
    "H3(3):2": (heisenberg_ext(((2, 0), (0, 2))), "Heisenberg group over F3 extended by -1 on H/Z"),
    "H3(3):4": (heisenberg_ext(((0, 2), (1, 0))), "Heisenberg group over F3 extended by an order 4 symplectic map"),
    "2x4^2:2": (direct(cyclic(2), wreath4_2()), "2 times the wreath product Z4 wr Z2"),
    "2x4A4": (direct(cyclic(2), four_a4()), "2 times the binary tetrahedral group joined with i*I"),
    "2xAS16": (direct(cyclic(2), pauli()), "2 times the Pauli group <X, Z, iI>"),
}


def main():
    out = {}
    for name, ((deg, gens), desc) in MODELS.items():
        G = FiniteGroup.from_permutations(gens)
        out[name] = {"description": desc, "degree": deg, "order": G.n, "generators": gens}
    fps = {n: FiniteGroup.from_permutations(v["generators"]).fingerprint() for n, v in out.items()}
    names = list(fps)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if fps[a] == fps[b]:
                sys.exit(f"fingerprint collision between {a} and {b}")
    OUT.write_text(json.dumps(out, separators=(",", ":")) + "\n")
    for n, v in out.items():
        print(f"{n:10s} order {v['order']}")


if __name__ == "__main__":
    main()
