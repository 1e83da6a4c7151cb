"""
A perspective from a graph with two ports
=========================================

Deleting the ports of a graph gives M, contracting them gives M'.  The
three-variable polynomial, the refined Dawson partition, and the census
of activity profiles follow.
"""

# %%
from mtutte import Graph, graphic_matroid, major_to_perspective

graph = Graph(
    list("abcde"),
    [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "a"), ("4", "c", "d"),
     ("5", "a", "e"), ("6", "d", "b"), ("7", "e", "c")],
)
p = major_to_perspective(graphic_matroid(graph), "67")
g = p.ground
print("r(M) =", p.m.rank, " r(M') =", p.mprime.rank)
print("circuits of M :", [g.fmt(c) for c in p.m.circuits])
print("circuits of M':", [g.fmt(c) for c in p.mprime.circuits])

# %%
# z counts the rank codrop.
from mtutte import tutte_corank_nullity

t = tutte_corank_nullity(p)
print("t =", t)

# %%
# Twenty witnesses, each spanning in M' and independent in M.
from collections import Counter

from mtutte import dawson_partition

parts = dawson_partition(p)
print(len(parts), "intervals, sizes", sorted(Counter(len(iv) for iv in parts).items()))

# %%
# Each interval of M (and of M') is a union of intervals of the perspective.
from mtutte import identity_perspective

for side, name in ((p.m, "M"), (p.mprime, "M'")):
    coarse = dawson_partition(identity_perspective(side))
    print(name, "has", len(coarse), "intervals")

# %%
# The census: counts of profiles over all subsets against counts over witnesses.
from mtutte import census

tables = census(p)
for (i, e, k), n in sorted(tables.b.items(), reverse=True):
    print(f"iota'={i} eps={e} rcd={k}: {n} witness(es)")

# %%
# phi swaps (nl, eps) inside each interval.
from mtutte import phi

a = g.mask("123")
b = phi(p, a)
print(g.fmt(a), "->", g.fmt(b), p.profile(a).stats, "->", p.profile(b).stats)

# %%
from mtutte import run_checks

print(run_checks(p, instance="two-port graph").text())
