#!/usr/bin/env python3
"""Produce fixtures/block_fixtures.json from scratch.

Independent cross-check data for the C++ engine: ordinary character degrees
are computed with the eigenvector method on class-multiplication matrices
over a large prime field, characters are lifted to exact cyclotomic integers
class by class, and central characters are reduced into a small finite field
of characteristic p to partition the characters into p-blocks.  Only the
block invariants that are isomorphism-invariant are emitted, canonically
sorted, so the permutation representations chosen here do not need to match
the ones in the C++ catalog.

Run from the repository root:  python3 scripts/make_block_fixtures.py
"""

import json
import math
import os
from fractions import Fraction

from sympy import cyclotomic_poly, factorint, isprime, Symbol


# ---------------------------------------------------------------- permutations

def pmul(a, b):
    return tuple(b[a[i]] for i in range(len(a)))


def pinv(a):
    r = [0] * len(a)
    for i, j in enumerate(a):
        r[j] = i
    return tuple(r)


def closure(gens):
    degree = len(gens[0])
    identity = tuple(range(degree))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elems)


def perm_order(a):
    identity = tuple(range(len(a)))
    x, n = a, 1
    while x != identity:
        x = pmul(x, a)
        n += 1
    return n


# ----------------------------------------------------------------- group zoo

def cycles_to_perm(degree, cycles):
    img = list(range(degree))
    for cyc in cycles:
        for i in range(len(cyc)):
            img[cyc[i]] = cyc[(i + 1) % len(cyc)]
    return tuple(img)


def regular_representation(table):
    """table: dict (a, b) -> product over an element list."""
    elems = sorted({a for a, _ in table})
    index = {e: i for i, e in enumerate(elems)}
    gens = []
    for g in elems:
        gens.append(tuple(index[table[(e, g)]] for e in elems))
    return gens


def quaternion_group():
    # units {+-1, +-i, +-j, +-k} encoded as (sign, axis), axis 0 = 1
    def mul(a, b):
        sa, xa = a
        sb, xb = b
        if xa == 0:
            return (sa * sb, xb)
        if xb == 0:
            return (sa * sb, xa)
        if xa == xb:
            return (-sa * sb, 0)
        # i*j=k, j*k=i, k*i=j and anticommutativity
        third = 6 - xa - xb
        sign = 1 if (xa, xb) in ((1, 2), (2, 3), (3, 1)) else -1
        return (sa * sb * sign, third)

    elems = [(s, x) for s in (1, -1) for x in range(4)]
    table = {(a, b): mul(a, b) for a in elems for b in elems}
    elems_sorted = sorted(table[(a, b)] for a in elems[:1] for b in elems)
    index = {e: i for i, e in enumerate(sorted(elems))}
    gens = []
    for g in [(1, 1), (1, 2)]:  # i and j generate
        gens.append(tuple(index[mul(e, g)] for e in sorted(elems)))
    return gens


def sl23_group():
    # 2x2 matrices of determinant 1 over F_3 acting on the 8 nonzero vectors
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def act(m, v):
        a, b, c, d = m
        return ((a * v[0] + b * v[1]) % 3, (c * v[0] + d * v[1]) % 3)

    gens = []
    for m in [(1, 1, 0, 1), (0, 2, 1, 0)]:  # shear and rotation, det 1
        gens.append(tuple(index[act(m, v)] for v in vectors))
    return gens


GROUPS = {
    "S3": [cycles_to_perm(3, [[0, 1]]), cycles_to_perm(3, [[0, 1, 2]])],
    "S4": [cycles_to_perm(4, [[0, 1]]), cycles_to_perm(4, [[0, 1, 2, 3]])],
    "S5": [cycles_to_perm(5, [[0, 1]]), cycles_to_perm(5, [[0, 1, 2, 3, 4]])],
    "A4": [cycles_to_perm(4, [[0, 1, 2]]), cycles_to_perm(4, [[1, 2, 3]])],
    "A5": [cycles_to_perm(5, [[0, 1, 2, 3, 4]]), cycles_to_perm(5, [[0, 1, 2]])],
    "D8": [cycles_to_perm(4, [[0, 1, 2, 3]]), cycles_to_perm(4, [[1, 3]])],
    "D12": [cycles_to_perm(6, [[0, 1, 2, 3, 4, 5]]), cycles_to_perm(6, [[1, 5], [2, 4]])],
    "Q8": quaternion_group(),
    "SL(2,3)": sl23_group(),
}

PRIMES = [2, 3, 5]


# ----------------------------------------------------- classes and constants

def conjugacy_classes(elems):
    elem_set = set(elems)
    assert all(pmul(a, b) in elem_set for a in elems[:3] for b in elems)
    seen = {}
    classes = []
    for x in elems:
        if x in seen:
            continue
        orbit = {pmul(pmul(pinv(g), x), g) for g in elems}
        rep = min(orbit)
        for y in orbit:
            seen[y] = len(classes)
        classes.append((rep, sorted(orbit)))
    # identity first, then by representative
    classes.sort(key=lambda c: c[0])
    class_of = {}
    for idx, (_, members) in enumerate(classes):
        for y in members:
            class_of[y] = idx
    return classes, class_of


def structure_constants(classes, class_of):
    k = len(classes)
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        for kk in range(k):
            z = classes[kk][0]
            for x in classes[i][1]:
                j = class_of[pmul(pinv(x), z)]
                a[i][j][kk] += 1
    return a


# ------------------------------------------------------------ mod-l algebra

def mat_det(mat, l):
    m = [row[:] for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % l), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col] % l
        inv = pow(m[col][col], l - 2, l)
        for r in range(col + 1, n):
            f = m[r][col] * inv % l
            if f:
                for c in range(col, n):
                    m[r][c] = (m[r][c] - f * m[col][c]) % l
    return det % l


def charpoly(mat, l):
    n = len(mat)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x * (r == c) - mat[r][c]) % l for c in range(n)] for r in range(n)]
        ys.append(mat_det(shifted, l))
    # Lagrange interpolation
    coeffs = [0] * (n + 1)
    for i, xi in enumerate(xs):
        num = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if i == j:
                continue
            denom = denom * (xi - xj) % l
            new = [0] * (len(num) + 1)
            for t, c in enumerate(num):
                new[t] = (new[t] - c * xj) % l
                new[t + 1] = (new[t + 1] + c) % l
            num = new
        f = ys[i] * pow(denom, l - 2, l) % l
        for t, c in enumerate(num):
            coeffs[t] = (coeffs[t] + f * c) % l
    return coeffs  # coeffs[t] * x^t


def poly_roots(coeffs, l):
    return [x for x in range(l) if sum(c * pow(x, t, l) for t, c in enumerate(coeffs)) % l == 0]


def kernel(mat, l):
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] % l), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], l - 2, l)
        m[row] = [c * inv % l for c in m[row]]
        for r in range(n):
            if r != row and m[r][col] % l:
                f = m[r][col]
                m[r] = [(m[r][c2] - f * m[row][c2]) % l for c2 in range(n)]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-m[r][fc]) % l
        basis.append(v)
    return basis


def central_characters(a, classes, order, l):
    k = len(classes)
    rstate = 12345

    def rnd():
        nonlocal rstate
        rstate = (rstate * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        return (rstate >> 16) % l

    for _ in range(64):
        rs = [rnd() for _ in range(k)]
        mat = [[sum(rs[i] * a[i][j][kk] for i in range(k)) % l for kk in range(k)]
               for j in range(k)]
        roots = poly_roots(charpoly(mat, l), l)
        if len(set(roots)) != k:
            continue
        omegas = []
        ok = True
        for lam in set(roots):
            shifted = [[(mat[r][c] - lam * (r == c)) % l for c in range(k)] for r in range(k)]
            basis = kernel(shifted, l)
            if len(basis) != 1:
                ok = False
                break
            w = basis[0]
            if w[0] % l == 0:
                ok = False
                break
            inv = pow(w[0], l - 2, l)
            omegas.append([c * inv % l for c in w])
        if ok and len(omegas) == k:
            return omegas
    raise RuntimeError("no splitting combination found")


# -------------------------------------------------------------- GF(p^m)

class GF:
    def __init__(self, p, m):
        self.p, self.m = p, m
        self.q = p ** m
        self.mod = self._find_irreducible()
        self.one = tuple([1] + [0] * (m - 1))
        self.zero = tuple([0] * m)

    def _polmulmod(self, a, b, mod, p):
        res = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                res[i + j] = (res[i + j] + ca * cb) % p
        # reduce by monic mod
        d = len(mod) - 1
        for i in range(len(res) - 1, d - 1, -1):
            c = res[i]
            if c:
                for j in range(d + 1):
                    res[i - d + j] = (res[i - d + j] - c * mod[j]) % p
        return res[:d]

    def _is_irreducible(self, f):
        p, m = self.p, len(f) - 1
        x = [0, 1]
        xp = x[:]
        for k in range(1, m // 2 + 1):
            # xp = x^(p^k) mod f
            for _ in range(1):
                pass
            cur = xp
            for _ in range(1):
                pass
            # raise cur to p-th power
            t = [1]
            base = cur[:]
            e = p
            while e:
                if e & 1:
                    t = self._polmulmod(t, base, f, p)
                base = self._polmulmod(base, base, f, p)
                e >>= 1
            xp = t
            diff = [(xp[i] if i < len(xp) else 0) - (x[i] if i < len(x) else 0) for i in
                    range(max(len(xp), len(x)))]
            diff = [c % p for c in diff]
            if self._polgcd(diff, f, p) != [1]:
                return False
        return True

    def _polgcd(self, a, b, p):
        a, b = a[:], b[:]
        while any(c % p for c in b):
            while b and b[-1] % p == 0:
                b.pop()
            inv = pow(b[-1], p - 2, p)
            while len(a) >= len(b) and any(c % p for c in a):
                while a and a[-1] % p == 0:
                    a.pop()
                if len(a) < len(b):
                    break
                f = a[-1] * inv % p
                off = len(a) - len(b)
                for i, c in enumerate(b):
                    a[off + i] = (a[off + i] - f * c) % p
            a, b = b, a
        while a and a[-1] % p == 0:
            a.pop()
        if not a:
            return []
        inv = pow(a[-1], p - 2, p)
        return [c * inv % p for c in a]

    def _find_irreducible(self):
        p, m = self.p, self.m
        if m == 1:
            return [0, 1]
        for code in range(p ** m):
            coeffs = []
            c = code
            for _ in range(m):
                coeffs.append(c % p)
                c //= p
            f = coeffs + [1]
            if f[0] == 0:
                continue
            if self._is_irreducible(f):
                return f
        raise RuntimeError("no irreducible polynomial found")

    def mul(self, a, b):
        return tuple(self._polmulmod(list(a), list(b), self.mod, self.p) +
                     [0] * 0)[: self.m] if self.m > 1 else ((a[0] * b[0]) % self.p,)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def scalar(self, n):
        return tuple([n % self.p] + [0] * (self.m - 1))

    def pow(self, a, e):
        r = self.one
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def element_order(self, a, factored):
        n = self.q - 1
        for prime in factored:
            while n % prime == 0 and self.pow(a, n // prime) == self.one:
                n //= prime
        return n

    def generator(self):
        factored = list(factorint(self.q - 1)) if self.q > 2 else []
        for code in range(1, self.q):
            coeffs = []
            c = code
            for _ in range(self.m):
                coeffs.append(c % self.p)
                c //= self.p
            a = tuple(coeffs)
            if self.q == 2 or self.element_order(a, factored) == self.q - 1:
                return a
        raise RuntimeError("no generator")


# ---------------------------------------------------------------- cyclotomic

def phi_coeffs(n):
    x = Symbol("x")
    return [int(c) for c in reversed(cyclotomic_poly(n, x).as_poly(x).all_coeffs())]


def reduce_mod_phi(coeffs, n):
    """coeffs: list of Fractions for powers 0..n-1 of zeta_n; reduce mod Phi_n."""
    phi = phi_coeffs(n)
    d = len(phi) - 1
    res = [Fraction(c) for c in coeffs]
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            for j in range(d + 1):
                res[i - d + j] -= c * phi[j]
    return res[:d]


# ----------------------------------------------------------------- the oracle

def valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def block_records(name, gens, p):
    elems = closure(gens)
    order = len(elems)
    if order % p != 0:
        return None
    classes, class_of = conjugacy_classes(elems)
    k = len(classes)
    a = structure_constants(classes, class_of)
    exponent = 1
    orders = {x: perm_order(x) for x in elems}
    for x in elems:
        exponent = exponent * orders[x] // math.gcd(exponent, orders[x])

    l = exponent + 1
    while l < 4 * order * order or not isprime(l) or (l - 1) % exponent != 0:
        l += exponent
        while (l - 1) % exponent != 0:
            l += 1

    omegas = central_characters(a, classes, order, l)

    # degrees and character values mod l
    inv_class = [class_of[pinv(classes[j][0])] for j in range(k)]
    chars = []
    for w in omegas:
        s = sum(w[j] * w[inv_class[j]] % l * pow(len(classes[j][1]), l - 2, l)
                for j in range(k)) % l
        d2 = order * pow(s, l - 2, l) % l
        d = math.isqrt(d2)
        assert d * d == d2 and d >= 1, (name, d2)
        chi = [d * w[j] % l * pow(len(classes[j][1]), l - 2, l) % l for j in range(k)]
        chars.append((d, w, chi))
    assert sum(d * d for d, _, _ in chars) == order

    # p-modular reduction target
    pa = valuation(exponent, p)
    e = exponent // p ** pa
    m = 1
    while (p ** m - 1) % e != 0:
        m += 1
    field = GF(p, m)
    z = field.pow(field.generator(), (field.q - 1) // e) if e > 1 else field.one
    t = pow(p ** pa, -1, e) if e > 1 else 0

    pr = next(g for g in range(2, l) if all(
        pow(g, (l - 1) // q, l) != 1 for q in factorint(l - 1)))

    def lift_and_reduce(d, chi, j):
        g = classes[j][0]
        n = orders[g]
        wn = pow(pr, (l - 1) // n, l)
        cs = []
        x = tuple(range(len(g)))
        powers = []
        for _ in range(n):
            powers.append(chi[class_of[x]])
            x = pmul(x, g)
        ninv = pow(n, l - 2, l)
        for mm in range(n):
            c = ninv * sum(powers[u] * pow(wn, (-u * mm) % n, l) for u in range(n)) % l
            assert c <= d, (name, p, j, c, d)
            cs.append(c)
        assert sum(cs) == d
        size = len(classes[j][1])
        coeffs = [Fraction(size * c, d) for c in cs]
        red = reduce_mod_phi(coeffs, n)
        val = field.zero
        zn = field.pow(z, (t * (exponent // n)) % e) if e > 1 else field.one
        znp = field.one
        for fr in red:
            assert fr.denominator == 1, (name, p, j, fr)
            val = field.add(val, field.mul(field.scalar(int(fr)), znp))
            znp = field.mul(znp, zn)
        return val

    lambdas = []
    for d, w, chi in chars:
        lambdas.append(tuple(lift_and_reduce(d, chi, j) for j in range(k)))

    trivial = next(i for i, (d, _, chi) in enumerate(chars)
                   if d == 1 and all(c == 1 for c in chi))

    blocks = {}
    for i, lam in enumerate(lambdas):
        blocks.setdefault(lam, []).append(i)

    nu_g = valuation(order, p)
    records = []
    for lam, members in blocks.items():
        degrees = sorted(chars[i][0] for i in members)
        min_nu = min(valuation(chars[i][0], p) for i in members)
        defect = nu_g - min_nu
        am = sum(1 for i in members if valuation(chars[i][0], p) == min_nu)
        k1 = sum(1 for i in members if nu_g - valuation(chars[i][0], p) == 1)
        records.append({
            "degrees": degrees,
            "defect": defect,
            "defect_group_order": p ** defect,
            "am": am,
            "k1": k1,
            "principal": trivial in members,
        })
    records.sort(key=lambda r: (r["degrees"], r["defect"], r["am"], r["k1"],
                                r["principal"]))
    return records


def main():
    out = {}
    for name, gens in GROUPS.items():
        out[name] = {}
        for p in PRIMES:
            records = block_records(name, gens, p)
            if records is None:
                continue
            out[name][str(p)] = records
            print(f"{name} p={p}: {len(records)} blocks")
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(root, "fixtures", "block_fixtures.json")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(out, f, indent=2, sort_keys=True)
        f.write("\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
