"""
Activities and expansions on a four-element matroid
===================================================

A small rank-2 matroid, its Tutte polynomial, derivative cells and the nine
expansion families.  Run cell by cell in an editor that understands ``# %%``,
or top to bottom with ``python3 notebooks/m1_walkthrough.py``.
"""

# %%
# Two parallel edges 1, 2 plus edges 3 and 4 closing a triangle.
from mtutte import identity_perspective, matroid_from_bases

m = matroid_from_bases("1234", ["13", "14", "23", "24", "34"])
p = identity_perspective(m)
g = m.ground
print("rank", m.rank, "circuits", [g.fmt(c) for c in m.circuits])

# %%
# Corank-nullity sum and the basis-activity sum agree.
from mtutte import tutte_corank_nullity, tutte_indspan

t = tutte_corank_nullity(p)
print("t =", t)
assert tutte_indspan(p) == t

# %%
# Every subset with its activity sets.  Int and Ext are the active parts,
# P and Q the smallest elements of cocircuits avoiding / circuits inside it.
from mtutte.matroid import subset_key

for a in sorted(range(1 << m.n), key=subset_key):
    pr = p.profile(a)
    print(f"{g.fmt(a):10} Int={g.fmt(pr.int_active):6} P={g.fmt(pr.p_set):6} "
          f"Ext={g.fmt(pr.ext_active):6} Q={g.fmt(pr.q_set)}")

# %%
# The Dawson intervals: one per basis, tiling all 16 subsets.
from mtutte import dawson_partition

for iv in dawson_partition(p):
    print(g.fmt(iv.witness), "->", f"[{g.fmt(iv.bottom)}, {g.fmt(iv.top)}]", len(iv))

# %%
# A derivative read off the subsets whose |P| and |Q| match the order.
from mtutte import derivative_gf, derivative_terms

print("dt/dx =", t.diff("x"), "=", derivative_gf(p, 1, 0))
print("cell:", [g.fmt(a) for a in derivative_terms(p, 1, 0)])

# %%
# Nine families of subset expansions, each summing back to t.
from mtutte import FAMILIES, expansion_family

for fam in FAMILIES:
    summands, total = expansion_family(p, fam)
    assert total == t
    print(f"({fam}) {len(summands):2d} summands")

# %%
# A full run of the brute-force checks.
from mtutte import run_checks

print(run_checks(p, instance="four-element matroid").text())
