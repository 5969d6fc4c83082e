#!/usr/bin/env python3
"""Writes the Cayley-table fixtures used by the tests and the search library."""
import itertools
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def table_from(elements, mul):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[mul(a, b)] for b in elements] for a in elements]


def write(path, elements, mul, identity):
    rows = table_from(elements, mul)
    ident = elements.index(identity)
    with open(path, "w") as f:
        f.write(f"order={len(elements)} identity={ident}\n")
        for r in rows:
            f.write(" ".join(map(str, r)) + "\n")


def metacyclic(n, k):
    # C_n x| C_2 with s r s = r^k
    els = [(i, e) for e in range(2) for i in range(n)]

    def mul(x, y):
        (i, e), (j, f) = x, y
        return ((i + (k if e else 1) * j) % n, (e + f) % 2)

    return els, mul, (0, 0)


def dicyclic(n):
    # r^(2n) = 1, s^2 = r^n, s r s^-1 = r^-1
    m = 2 * n
    els = [(i, e) for e in range(2) for i in range(m)]

    def mul(x, y):
        (i, e), (j, f) = x, y
        if e == 0:
            return ((i + j) % m, f)
        if f == 0:
            return ((i - j) % m, 1)
        return ((i - j + n) % m, 0)

    return els, mul, (0, 0)


def c4_by_c4():
    els = [(i, e) for e in range(4) for i in range(4)]

    def mul(x, y):
        (i, e), (j, f) = x, y
        return ((i + (-1) ** e * j) % 4, (e + f) % 4)

    return els, mul, (0, 0)


def direct_with_c2(base):
    els0, mul0, id0 = base
    els = [(x, c) for c in range(2) for x in els0]

    def mul(x, y):
        return (mul0(x[0], y[0]), (x[1] + y[1]) % 2)

    return els, mul, (id0, 0)


def c4c2_by_c2(phi):
    # (Z4 x Z2) x| C2 where the C2 generator acts by the involutive automorphism phi
    els = [((i, j), c) for c in range(2) for i in range(4) for j in range(2)]

    def act(c, x):
        return phi(x) if c else x

    def mul(x, y):
        (a, c), (b, d) = x, y
        b2 = act(c, b)
        return (((a[0] + b2[0]) % 4, (a[1] + b2[1]) % 2), (c + d) % 2)

    return els, mul, ((0, 0), 0)


def abelian(factors):
    els = list(itertools.product(*[range(f) for f in factors]))

    def mul(x, y):
        return tuple((a + b) % f for a, b, f in zip(x, y, factors))

    return els, mul, tuple(0 for _ in factors)


def s3():
    els = list(itertools.permutations(range(3)))

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    return els, mul, (0, 1, 2)


def signature(els, mul, ident):
    def order(x):
        k, y = 1, x
        while y != ident:
            y, k = mul(y, x), k + 1
        return k

    orders = sorted(order(x) for x in els)
    center = sum(all(mul(x, y) == mul(y, x) for y in els) for x in els)
    squares = len({mul(x, x) for x in els})
    return (tuple(orders), center, squares)


def main():
    out16 = os.path.join(ROOT, "data", "groups16")
    lib16 = {
        "d16": metacyclic(8, 7),
        "sd16": metacyclic(8, 3),
        "m16": metacyclic(8, 5),
        "q16": dicyclic(4),
        "c4_c4": c4_by_c4(),
        "c2_d8": direct_with_c2(metacyclic(4, 3)),
        "c2_q8": direct_with_c2(dicyclic(2)),
        "c4c2_c2": c4c2_by_c2(lambda x: (x[0], (x[0] + x[1]) % 2)),
        "pauli": c4c2_by_c2(lambda x: ((x[0] + 2 * x[1]) % 4, x[1])),
    }
    sigs = set()
    for name, (els, mul, ident) in lib16.items():
        sig = signature(els, mul, ident)
        if sig[1] == 16:
            sys.exit(f"{name} is abelian")
        sigs.add(sig)
        write(os.path.join(out16, name + ".cayley"), els, mul, ident)
    if len(sigs) != len(lib16):
        sys.exit("order-16 library contains isomorphic groups")

    small = os.path.join(ROOT, "tests", "data", "groups")
    write(os.path.join(small, "s3.cayley"), *s3())
    write(os.path.join(small, "d8.cayley"), *metacyclic(4, 3))
    write(os.path.join(small, "q8.cayley"), *dicyclic(2))
    write(os.path.join(small, "z2xz2.cayley"), *abelian([2, 2]))


if __name__ == "__main__":
    main()
