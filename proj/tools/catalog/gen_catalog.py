#!/usr/bin/env python3
"""Regenerates data/catalog.json.

Every isomorphism class of order <= 24 plus a few named larger groups, each
given by permutation generators in cycle notation. The C++ loader re-checks
orders and pairwise non-isomorphism, so this script only has to produce
plausible generators.

Usage: python3 tools/catalog/gen_catalog.py > data/catalog.json
"""

import json
import sys

# Permutations are tuples of 0-based images; (p * q)[i] = q[p[i]].


def mul(p, q):
    return tuple(q[x] for x in p)


def identity(d):
    return tuple(range(d))


def closure_order(gens, d):
    seen = {identity(d)}
    frontier = [identity(d)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def cycle(points, d):
    img = list(range(d))
    for a, b in zip(points, points[1:] + points[:1]):
        img[a] = b
    return tuple(img)


def to_cycles(p):
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


class Def:
    def __init__(self, name, degree, gens, order, tags=()):
        self.name = name
        self.degree = degree
        self.gens = [g for g in gens if g != identity(degree)]
        self.order = order
        self.tags = list(tags)
        got = closure_order(self.gens, degree) if self.gens else 1
        if got != order:
            raise SystemExit(f"{name}: closure order {got} != {order}")

    def record(self):
        return {
            "name": self.name,
            "degree": self.degree,
            "generators": [to_cycles(g) for g in self.gens],
            "expected_order": self.order,
            "tags": self.tags,
        }


def shift(p, k, d):
    img = list(range(d))
    for i, x in enumerate(p):
        img[i + k] = x + k
    return tuple(img)


def product(name, a, b, tags=()):
    d = a.degree + b.degree
    gens = [shift(g, 0, d) for g in a.gens] + [shift(g, a.degree, d) for g in b.gens]
    return Def(name, d, gens, a.order * b.order, tags)


def cyclic(n):
    if n == 1:
        return Def("C1", 1, [], 1, ["cyclic", "abelian"])
    return Def(f"C{n}", n, [cycle(list(range(n)), n)], n, ["cyclic", "abelian"])


def dihedral(n):
    if n == 1:
        return Def("D2", 2, [cycle([0, 1], 2)], 2, ["dihedral"])
    if n == 2:
        return Def("D4", 4, [cycle([0, 1], 4), cycle([2, 3], 4)], 4, ["dihedral"])
    r = cycle(list(range(n)), n)
    s = tuple((-i) % n for i in range(n))
    return Def(f"D{2 * n}", n, [r, s], 2 * n, ["dihedral"])


def semidirect_cyclic(name, n, m, k, tags=()):
    order_k = 1
    while pow(k, order_k, n) != 1:
        order_k += 1
    if m % order_k:
        raise SystemExit(f"{name}: bad action exponent")
    d = n if order_k == m else n + m
    x = tuple(list((i + 1) % n for i in range(n)) + list(range(n, d)))
    y = list((k * i) % n for i in range(n)) + list(range(n, d))
    if d > n:
        for j in range(m):
            y[n + j] = n + (j + 1) % m
    return Def(name, d, [x, tuple(y)], n * m, tags)


def regular(name, gens_abstract, op, ident, tags=()):
    idx = {ident: 0}
    order = [ident]
    i = 0
    while i < len(order):
        for g in gens_abstract:
            y = op(order[i], g)
            if y not in idx:
                idx[y] = len(order)
                order.append(y)
        i += 1
    d = len(order)
    perms = [tuple(idx[op(x, g)] for x in order) for g in gens_abstract]
    return Def(name, d, perms, d, tags)


def dicyclic(name, n, tags=()):
    # x^a y^b with x of order 2n, y^2 = x^n, y x y^-1 = x^-1.
    m = 2 * n

    def op(u, v):
        a1, b1 = u
        a2, b2 = v
        if b1 == 0:
            return ((a1 + a2) % m, b2)
        if b2 == 0:
            return ((a1 - a2) % m, 1)
        return ((a1 - a2 + n) % m, 0)

    return regular(name, [(1, 0), (0, 1)], op, (0, 0), tags)


def c3_extension(name, h, signs, tags=()):
    # C3 x| H where H acts through signs[i] = -1 (inversion) on C3; realized
    # inside S3 x H as {(c * t^eps(h), h)}.
    d = 3 + h.degree
    gens = [shift(cycle([0, 1, 2], 3), 0, d)]
    for g, sgn in zip(h.gens, signs):
        p = shift(g, 3, d)
        if sgn < 0:
            p = mul(p, shift(cycle([0, 1], 3), 0, d))
        gens.append(p)
    return Def(name, d, gens, 3 * h.order, tags)


def matrix_action(name, p, mats, order, tags=()):
    pts = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    gens = []
    for (a, b), (c, e) in [((m[0], m[1]), (m[2], m[3])) for m in mats]:
        gens.append(tuple(idx[((a * x + b * y) % p, (c * x + e * y) % p)] for x, y in pts))
    return Def(name, len(pts), gens, order, tags)


def pauli():
    # 2x2 matrices over Z[i]; entries as (re, im).
    def cm(u, v):
        return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def ca(u, v):
        return (u[0] + v[0], u[1] + v[1])

    def op(a, b):
        return (
            ca(cm(a[0], b[0]), cm(a[1], b[2])),
            ca(cm(a[0], b[1]), cm(a[1], b[3])),
            ca(cm(a[2], b[0]), cm(a[3], b[2])),
            ca(cm(a[2], b[1]), cm(a[3], b[3])),
        )

    z, o, mo, i = (0, 0), (1, 0), (-1, 0), (0, 1)
    X = (z, o, o, z)
    Z = (o, z, z, mo)
    iI = (i, z, z, i)
    return regular("C4oD8", [X, Z, iI], op, (o, z, z, o), ["central_product"])


def semidirect_16_3():
    # (C4 x C2) x| C2 with c a c^-1 = a b.
    def phi(n):
        x, y = n
        return (x, (y + x) % 2)

    def op(u, v):
        (x1, y1, c1), (x2, y2, c2) = u, v
        n2 = (x2, y2)
        if c1:
            n2 = phi(n2)
        return ((x1 + n2[0]) % 4, (y1 + n2[1]) % 2, (c1 + c2) % 2)

    return regular("(C4xC2):C2", [(1, 0, 0), (0, 1, 0), (0, 0, 1)], op, (0, 0, 0))


def main():
    c = {n: cyclic(n) for n in range(1, 25)}
    v4 = product("C2xC2", c[2], c[2], ["abelian"])
    s3 = Def("S3", 3, [cycle([0, 1, 2], 3), cycle([0, 1], 3)], 6, ["symmetric"])
    d8 = dihedral(4)
    q8 = dicyclic("Q8", 2, ["quaternion"])
    a4 = Def("A4", 4, [cycle([0, 1, 2], 4), cycle([1, 2, 3], 4)], 12, ["alternating"])
    dic3 = semidirect_cyclic("Dic3", 3, 4, 2, ["dicyclic"])
    c4xc2 = product("C4xC2", c[4], c[2], ["abelian"])
    c2_3 = product("C2xC2xC2", v4, c[2], ["abelian"])

    defs = [c[n] for n in range(1, 25)]
    defs += [
        v4,
        s3,
        c4xc2,
        c2_3,
        d8,
        q8,
        product("C3xC3", c[3], c[3], ["abelian"]),
        dihedral(5),
        product("C6xC2", c[6], c[2], ["abelian"]),
        a4,
        dihedral(6),
        dic3,
        dihedral(7),
        # order 16
        product("C4xC4", c[4], c[4], ["abelian"]),
        product("C8xC2", c[8], c[2], ["abelian"]),
        product("C4xC2xC2", c4xc2, c[2], ["abelian"]),
        product("C2xC2xC2xC2", c2_3, c[2], ["abelian"]),
        dihedral(8),
        semidirect_cyclic("SD16", 8, 2, 3, ["semidihedral"]),
        semidirect_cyclic("M16", 8, 2, 5, ["modular"]),
        dicyclic("Q16", 4, ["quaternion"]),
        semidirect_cyclic("C4:C4", 4, 4, 3),
        semidirect_16_3(),
        product("C2xD8", c[2], d8),
        product("C2xQ8", c[2], q8),
        pauli(),
        # order 18
        product("C6xC3", c[6], c[3], ["abelian"]),
        dihedral(9),
        product("C3xS3", c[3], s3),
        Def("(C3xC3):C2", 6,
            [cycle([0, 1, 2], 6), cycle([3, 4, 5], 6),
             mul(cycle([1, 2], 6), cycle([4, 5], 6))], 18, ["generalized_dihedral"]),
        # order 20
        product("C10xC2", c[10], c[2], ["abelian"]),
        dihedral(10),
        semidirect_cyclic("Dic5", 5, 4, 4, ["dicyclic"]),
        semidirect_cyclic("F20", 5, 4, 2, ["frobenius"]),
        # order 21, 22
        semidirect_cyclic("C7:C3", 7, 3, 2, ["frobenius"]),
        dihedral(11),
        # order 24
        product("C12xC2", c[12], c[2], ["abelian"]),
        product("C6xC2xC2", product("C6xC2", c[6], c[2]), c[2], ["abelian"]),
        semidirect_cyclic("C3:C8", 3, 8, 2),
        matrix_action("SL2(F3)", 3, [(1, 1, 0, 1), (1, 0, 1, 1)], 24, ["special_linear"]),
        c3_extension("Dic6", q8, [1, -1], ["dicyclic"]),
        product("C4xS3", c[4], s3),
        product("C2xDic3", c[2], dic3),
        c3_extension("C3:D8", d8, [-1, 1]),
        dihedral(12),
        product("C3xD8", c[3], d8),
        product("C3xQ8", c[3], q8),
        Def("S4", 4, [cycle([0, 1, 2, 3], 4), cycle([0, 1], 4)], 24, ["symmetric"]),
        product("C2xA4", c[2], a4),
        product("C2xC2xS3", v4, s3),
        # named larger groups
        Def("A5", 5, [cycle([0, 1, 2], 5), cycle([2, 3, 4], 5)], 60, ["alternating", "named"]),
        Def("S5", 5, [cycle([0, 1, 2, 3, 4], 5), cycle([0, 1], 5)], 120, ["symmetric", "named"]),
    ]
    for d in defs:
        d.tags.append(f"order:{d.order}")
    doc = {
        "format": "gil-catalog",
        "version": 1,
        "aliases": {"PGL2(F5)": "S5"},
        "expected_counts": {
            str(n): k for n, k in zip(
                range(1, 25),
                [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15])
        },
        "groups": [d.record() for d in defs],
    }
    json.dump(doc, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
