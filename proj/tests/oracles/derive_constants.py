#!/usr/bin/env python3
"""Independent brute-force derivation of the golden constants frozen into the
C++ tests. Pure Python, shares no code with the library."""
from fractions import Fraction
from itertools import permutations, product, combinations


def triples(n):
    return [t for t in product(range(n), repeat=3) if len(set(t)) == 3]


def encode(rel, n):
    idx = {t: i for i, t in enumerate(triples(n))}
    return sum(1 << idx[t] for t in rel)


def relabel(rel, f):
    return {(f[x], f[y], f[z]) for (x, y, z) in rel}


def canonical(rel, n):
    return min(encode(relabel(rel, f), n) for f in permutations(range(n)))


def consistent(rel):
    return all((y, x, z) not in rel and (x, z, y) not in rel for (x, y, z) in rel)


# Q(4) with p=0, q=1, r=2, s=3.
P, Q, R, S = range(4)
d = {}
table = {  # row p s q r from the distance table
    (P, S): 1, (P, Q): 1, (P, R): 3,
    (S, P): 3, (S, Q): 2, (S, R): 3,
    (Q, P): 1, (Q, S): 2, (Q, R): 2,
    (R, P): 1, (R, S): 1, (R, Q): 2,
}
bq4 = {t for t in triples(4) if table[(t[0], t[2])] == table[(t[0], t[1])] + table[(t[1], t[2])]}
assert bq4 == {(P, Q, R), (R, P, Q), (S, Q, P), (Q, P, S)}, bq4
print("canonical_encoding_BQ4", canonical(bq4, 4))
print("identity_encoding_BQ4_pqrs", encode(bq4, 4))

# consistent patterns on one support
t3 = triples(3)
pats = [set(c) for k in range(7) for c in combinations(t3, k) if consistent(set(c))]
print("consistent_patterns", len(pats))

# raw counts and class structure
for n in (3, 4):
    supports = list(combinations(range(n), 3))
    per_support = []
    for sup in supports:
        ts = [t for t in triples(n) if set(t) == set(sup)]
        per_support.append([set(c) for k in range(7) for c in combinations(ts, k) if consistent(set(c))])
    raw = 0
    classes = {}
    for choice in product(*per_support):
        rel = set().union(*choice)
        raw += 1
        c = canonical(rel, n)
        classes[c] = classes.get(c, 0) + 1
    print(f"n={n} raw={raw} classes={len(classes)}")

# LP shape for B(Q(4)), quasi
eq = sum(1 for t in triples(4) if t in bq4)
strict = sum(1 for t in triples(4) if t not in bq4)
print("lp_counts pair_vars", 12, "positivity", 12, "equalities", eq, "strict", strict, "normalization", 1)
