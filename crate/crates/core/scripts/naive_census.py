#!/usr/bin/env python3
"""Brute-force census of small po-Gamma-semigroups.

Independent of the Rust enumerator: filters every table by a full
associativity scan, every relation by direct poset and compatibility checks,
groups structures into isomorphism classes by applying all relabelings, and
decides the regularity classes straight from their definitions.

Usage: naive_census.py [OUTPUT]   (default: print to stdout)
"""

import itertools
import json
import sys

CASES = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]


def tables(n, m):
    cells = n * m * n
    for t in itertools.product(range(n), repeat=cells):
        mul = lambda x, g, y: t[(x * m + g) * n + y]
        if all(
            mul(mul(x, g, y), h, z) == mul(x, g, mul(y, h, z))
            for x in range(n)
            for g in range(m)
            for y in range(n)
            for h in range(m)
            for z in range(n)
        ):
            yield t


def orders(n):
    """All partial orders as frozensets of pairs (reflexive pairs included)."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    diag = {(i, i) for i in range(n)}
    for bits in itertools.product((0, 1), repeat=len(off)):
        rel = diag | {p for p, b in zip(off, bits) if b}
        if any((j, i) in rel for (i, j) in rel if i != j):
            continue
        if any((i, k) not in rel for (i, j) in rel for (j2, k) in rel if j == j2):
            continue
        yield frozenset(rel)


def compatible(n, m, t, rel):
    mul = lambda x, g, y: t[(x * m + g) * n + y]
    for (x, y) in rel:
        for g in range(m):
            for z in range(n):
                if (mul(x, g, z), mul(y, g, z)) not in rel:
                    return False
                if (mul(z, g, x), mul(z, g, y)) not in rel:
                    return False
    return True


def key(n, m, t, rel):
    return (tuple(t), tuple((i, j) in rel for i in range(n) for j in range(n)))


def canonical(n, m, t, rel):
    best = None
    for s in itertools.permutations(range(n)):
        for p in itertools.permutations(range(m)):
            nt = [0] * (n * m * n)
            for x in range(n):
                for g in range(m):
                    for y in range(n):
                        nt[(s[x] * m + p[g]) * n + s[y]] = s[t[(x * m + g) * n + y]]
            nrel = {(s[i], s[j]) for (i, j) in rel}
            k = key(n, m, nt, nrel)
            if best is None or k < best:
                best = k
    return best


def classes(n, m, t, rel):
    mul = lambda x, g, y: t[(x * m + g) * n + y]
    le = lambda a, b: (a, b) in rel
    G, M = range(m), range(n)

    def every(pred):
        return all(pred(a) for a in M)

    return {
        "regular": every(lambda a: any(
            le(a, mul(mul(a, g, x), h, a)) for x in M for g in G for h in G)),
        "intra_regular": every(lambda a: any(
            le(a, mul(mul(mul(x, g, a), h, a), r, y))
            for x in M for y in M for g in G for h in G for r in G)),
        "right_regular": every(lambda a: any(
            le(a, mul(mul(a, g, a), h, x)) for x in M for g in G for h in G)),
        "left_regular": every(lambda a: any(
            le(a, mul(mul(x, g, a), h, a)) for x in M for g in G for h in G)),
    }


NAMES = ["regular", "intra_regular", "right_regular", "left_regular"]


def census(n, m):
    all_orders = list(orders(n))
    labeled = 0
    table_count = 0
    cls_labeled = dict.fromkeys(NAMES, 0)
    reps = {}
    for t in tables(n, m):
        table_count += 1
        for rel in all_orders:
            if not compatible(n, m, t, rel):
                continue
            labeled += 1
            c = classes(n, m, t, rel)
            for name in NAMES:
                cls_labeled[name] += c[name]
            reps.setdefault(canonical(n, m, t, rel), c)
    cls_iso = {name: sum(c[name] for c in reps.values()) for name in NAMES}
    return {
        "n": n,
        "m": m,
        "tables": table_count,
        "labeled": labeled,
        "up_to_iso": len(reps),
        "classes_labeled": cls_labeled,
        "classes_up_to_iso": cls_iso,
    }


def main():
    out = json.dumps([census(n, m) for n, m in CASES], indent=2)
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(out + "\n")
    else:
        print(out)


if __name__ == "__main__":
    main()
