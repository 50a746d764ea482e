#!/usr/bin/env python3
"""Brute-force reference values for the test suite.

Works directly in tensor space with exact fractions: F^n is the span of the
commutator images of all words, and its boundary is the Loday boundary
restricted to that span. Shares no code with the C++ library.
"""

import itertools
import json
import sys
from fractions import Fraction

CATALOG = {
    "abelian1": (1, {}),
    "abelian2": (2, {}),
    "abelian3": (3, {}),
    "abelian4": (4, {}),
    "L2": (2, {(0, 0): {1: 1}}),
    "N3": (3, {(0, 0): {1: 1}, (0, 1): {2: 1}}),
    "sl2": (3, {(0, 1): {1: 2}, (1, 0): {1: -2}, (0, 2): {2: -2}, (2, 0): {2: 2}, (1, 2): {0: 1}, (2, 1): {0: -1}}),
    "heis3": (3, {(0, 1): {2: 1}, (1, 0): {2: -1}}),
    # g + g* for L2 with the coadjoint action
    "doubleL2": (4, {(0, 0): {1: 1}, (0, 3): {2: -1}, (3, 0): {2: 2}}),
}


def bracket(alg, i, j):
    return alg[1].get((i, j), {})


def epsilon(word):
    """x1 (x) e{x2..xn} - (-1)^(n-1) e{x2..xn} (x) x1 as {tuple: Fraction}."""
    if len(word) == 1:
        return {tuple(word): Fraction(1)}
    rest = epsilon(word[1:])
    sign = -1 if (len(word) - 1) % 2 == 0 else 1
    out = {}
    for w, c in rest.items():
        out[(word[0],) + w] = out.get((word[0],) + w, 0) + c
        out[w + (word[0],)] = out.get(w + (word[0],), 0) + sign * c
    return {w: c for w, c in out.items() if c}


def loday(alg, t):
    out = {}
    for w, c in t.items():
        n = len(w)
        for i in range(n):
            for j in range(i + 1, n):
                s = 1 if i % 2 == 0 else -1
                for k, v in bracket(alg, w[i], w[j]).items():
                    u = list(w)
                    u[j] = k
                    del u[i]
                    u = tuple(u)
                    out[u] = out.get(u, 0) + s * c * v
    return {w: c for w, c in out.items() if c}


def rank(rows):
    rows = [dict(r) for r in rows if r]
    pivots = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            key = min(row)
            if key not in pivots:
                pivots[key] = row
                r += 1
                break
            p = pivots[key]
            f = row[key] / p[key]
            for k, v in p.items():
                row[k] = row.get(k, 0) - f * v
                if row[k] == 0:
                    del row[k]
    return r


def free_lie_span(m, n):
    return [epsilon(list(w)) for w in itertools.product(range(m), repeat=n)]


def homology(alg, top):
    m = alg[0]
    dims = [rank(free_lie_span(m, n)) for n in range(1, top + 1)]
    ranks = [0, 0] + [rank([loday(alg, t) for t in free_lie_span(m, n)]) for n in range(2, top + 1)]
    # ranks[n] = rank of the boundary out of F^n
    return [dims[k] - ranks[k + 1] - ranks[k + 2] for k in range(top - 1)], dims


def omega0(alg):
    m = alg[0]
    rel = []
    for x, y in itertools.product(range(m), repeat=2):
        rel.append({(x, y): Fraction(1), (y, x): Fraction(-1)} if x != y else {})
    for x, y, z in itertools.product(range(m), repeat=3):
        r = {}
        for k, v in bracket(alg, x, y).items():
            r[(k, z)] = r.get((k, z), 0) + v
        for k, v in bracket(alg, y, z).items():
            r[(x, k)] = r.get((x, k), 0) - v
        rel.append({a: b for a, b in r.items() if b})
    return m * m - rank(rel)


def main():
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    out = {}
    for name, alg in CATALOG.items():
        ha, dims = homology(alg, top)
        entry = {"HA": ha, "free_lie_dims": dims}
        if all(bracket(alg, i, j) == {k: -v for k, v in bracket(alg, j, i).items()}
               for i in range(alg[0]) for j in range(alg[0])):
            entry["omega0"] = omega0(alg)
        out[name] = entry
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
