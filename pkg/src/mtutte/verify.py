"""Brute-force verification harness.

Every check compares two routes that share as little code as possible:
formal differentiation of the rank-based Tutte polynomial against activity
sums, rank-based witness enumeration against activity-built intervals, and
so on.  A failing check always carries a concrete counterexample.
"""

from __future__ import annotations

import random
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable

from .activity import act, basis_activities, unique_witness_circuit
from .matroid import MAX_ELEMENTS, Graph, GroundSet, Matroid, bits, graphic_matroid
from .perspective import (
    Perspective,
    colex_nearest,
    dawson_map,
    dawson_partition,
    identity_perspective,
    interval_of,
    is_dawson_partition,
    major_to_perspective,
    mp1,
    mp2,
    mp2_flats,
    mp3,
    mp4,
    partition_defects,
    phi,
    phi_star,
)
from .poly import Polynomial, poly_sum
from .tutte import (
    SYMBOLS,
    diagonal,
    diagonal_derivative_gf,
    derivative_gf,
    five_var,
    formal_derivative,
    max_orders,
    symbol_summands,
    tutte_corank_nullity,
    tutte_indspan,
    VARIANTS,
)


@dataclass
class CheckResult:
    name: str
    instance: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  -- {self.detail}" if self.detail else ""
        return f"{status}  {self.name:<22} {self.instance}{tail}"


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: VerificationReport) -> None:
        self.checks.extend(other.checks)

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = len(self.failures())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "instance": c.instance, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


# -- census -----------------------------------------------------------------


@dataclass
class CensusTables:
    a: dict  # (ι', ε, rcd, cr', nl) -> number of subsets
    b: dict  # (ι', ε, rcd) -> number of independent/spanning sets


def census(p: Perspective) -> CensusTables:
    a = Counter((pr.iota, pr.eps, pr.rcd, pr.cr, pr.nl) for pr in p.profiles)
    b = Counter((pr.iota, pr.eps, pr.rcd) for pr in map(p.profile, p.witnesses))
    return CensusTables(dict(a), dict(b))


def census_defects(tables: CensusTables) -> list[str]:
    """Index tuples where ``a[i-p, j-q, k, p, q] != C(i,p) C(j,q) b[i, j, k]``."""
    a, b = tables.a, tables.b
    bad = []
    for (i, j, k), cnt in b.items():
        for p in range(i + 1):
            for q in range(j + 1):
                want = comb(i, p) * comb(j, q) * cnt
                got = a.get((i - p, j - q, k, p, q), 0)
                if got != want:
                    bad.append(f"a[{i - p},{j - q},{k},{p},{q}]={got}, expected {want}")
    # every a entry must be accounted for by some b entry
    for (i0, j0, k, p, q), cnt in a.items():
        if b.get((i0 + p, j0 + q, k), 0) == 0:
            bad.append(f"a[{i0},{j0},{k},{p},{q}]={cnt} has no matching b[{i0 + p},{j0 + q},{k}]")
    return bad


# -- individual checks: each returns None on success or a counterexample ----


def _diff_text(got: Polynomial, want: Polynomial) -> str:
    return f"got {got}, expected {want}, difference {got - want}"


def check_derivative_theorem(p: Perspective):
    t = tutte_corank_nullity(p)
    max_p, max_q = max_orders(p)
    for dp in range(max_p + 2):
        for dq in range(max_q + 2):
            formal = formal_derivative(t, dp, dq)
            if (dp > max_p or dq > max_q) and formal:
                return f"derivative ({dp},{dq}) beyond the bound is {formal}"
            for variant in VARIANTS:
                gf = derivative_gf(p, dp, dq, variant)
                if gf != formal:
                    return f"({dp},{dq}) {variant}: " + _diff_text(gf, formal)
    return None


def check_partition_of_derivatives(p: Perspective):
    """Each subset lands in exactly one (cr', nl) cell and the cells tile 2^E."""
    cells = Counter((pr.cr, pr.nl) for pr in p.profiles)
    m, mp = p.m, p.mprime
    for a in range(1 << p.n):
        pr = p.profiles[a]
        if (pr.cr, pr.nl) != (mp.corank(a), m.nullity(a)):
            return f"{p.ground.fmt(a)}: |P|,|Q| = {(pr.cr, pr.nl)} but corank,nullity = {(mp.corank(a), m.nullity(a))}"
    if sum(cells.values()) != 1 << p.n:
        return "cells do not tile the Boolean lattice"
    return None


def check_diagonal_derivative(p: Perspective):
    td = diagonal(tutte_corank_nullity(p))
    max_p, max_q = max_orders(p)
    for dp in range(max_p + max_q + 2):
        formal = td.diff("x", dp)
        gf = diagonal_derivative_gf(p, dp)
        if formal != gf:
            return f"order {dp}: " + _diff_text(gf, formal)
    return None


def check_partition(p: Perspective):
    intervals = dawson_partition(p, check=False)
    defects = partition_defects(p.n, [(iv.bottom, iv.top) for iv in intervals])
    if defects:
        kind, a = defects[0]
        return f"{kind} subset {p.ground.fmt(a)}"
    rm, rp = p.m.rank_table, p.mprime.rank_table
    for iv in intervals:
        inside = [a for a in iv.members() if rm[a] == a.bit_count() and rp[a] == p.mprime.rank]
        if inside != [iv.witness]:
            return (
                f"interval [{p.ground.fmt(iv.bottom)},{p.ground.fmt(iv.top)}] holds witnesses "
                f"{[p.ground.fmt(w) for w in inside]}"
            )
    # the map A -> f(A) must land on the witness of the interval containing A
    owner = {}
    for iv in intervals:
        for a in iv.members():
            owner[a] = iv.witness
    for a in range(1 << p.n):
        if dawson_map(p, a) != owner[a]:
            return f"f({p.ground.fmt(a)}) = {p.ground.fmt(dawson_map(p, a))}, interval witness {p.ground.fmt(owner[a])}"
    return None


def check_interval_lemma(p: Perspective):
    g = p.ground
    for iv in dawson_partition(p, check=False):
        pb = p.profile(iv.witness)
        int_b, ext_b = pb.int_active, pb.ext_active
        for a in iv.members():
            pa = p.profile(a)
            expect = {
                "Int": int_b & a,
                "P": int_b & ~a,
                "Ext": ext_b & ~a,
                "Q": ext_b & a,
            }
            got = {"Int": pa.int_active, "P": pa.p_set, "Ext": pa.ext_active, "Q": pa.q_set}
            for key in expect:
                if expect[key] != got[key]:
                    return f"A={g.fmt(a)} in interval of {g.fmt(iv.witness)}: {key}={g.fmt(got[key])}, expected {g.fmt(expect[key])}"
    return None


def check_dualities(p: Perspective):
    g = p.ground
    for a in range(1 << p.n):
        pa = p.profile(a)
        for name, fn in (("phi", phi), ("phi*", phi_star)):
            img = fn(p, a)
            if fn(p, img) != a:
                return f"{name} is not an involution at {g.fmt(a)}"
            if dawson_map(p, img) != dawson_map(p, a):
                return f"{name}({g.fmt(a)}) leaves the Dawson interval"
        pi = p.profile(phi(p, a))
        if (pi.nl, pi.eps, pi.iota, pi.cr) != (pa.eps, pa.nl, pa.iota, pa.cr):
            return f"phi at {g.fmt(a)}: (nl,eps,iota,cr) {pa.nl, pa.eps, pa.iota, pa.cr} -> {pi.nl, pi.eps, pi.iota, pi.cr}"
        if (pi.q_set, pi.ext_active, pi.int_active, pi.p_set) != (pa.ext_active, pa.q_set, pa.int_active, pa.p_set):
            return f"phi at {g.fmt(a)} does not swap Q and Ext"
        ps = p.profile(phi_star(p, a))
        if (ps.cr, ps.iota, ps.nl, ps.eps) != (pa.iota, pa.cr, pa.nl, pa.eps):
            return f"phi* at {g.fmt(a)}: (cr,iota,nl,eps) {pa.cr, pa.iota, pa.nl, pa.eps} -> {ps.cr, ps.iota, ps.nl, ps.eps}"
        iv = interval_of(p, a)
        both = phi(p, phi_star(p, a))
        if both != iv.complement(a) or both not in iv:
            return f"phi∘phi*({g.fmt(a)}) = {g.fmt(both)}, interval complement is {g.fmt(iv.complement(a))}"
        if phi_star(p, phi(p, a)) != both:
            return f"phi and phi* do not commute at {g.fmt(a)}"
    return None


def check_census(p: Perspective):
    tables = census(p)
    if sum(tables.a.values()) != 1 << p.n:
        return "a-table does not count every subset"
    if sum(tables.b.values()) != len(p.witnesses):
        return "b-table does not count every independent/spanning set"
    bad = census_defects(tables)
    return bad[0] if bad else None


def check_colex(p: Perspective):
    fam = p.witnesses
    for a in range(1 << p.n):
        near = colex_nearest(fam, a)
        if near != dawson_map(p, a):
            return f"A={p.ground.fmt(a)}: colex-nearest {p.ground.fmt(near)} vs f(A)={p.ground.fmt(dawson_map(p, a))}"
    return None


def check_bgn(p: Perspective):
    intervals = dawson_partition(p, check=False)
    pairs = [(iv.bottom, iv.top) for iv in intervals]
    if partition_defects(p.n, pairs):
        return "intervals are not a partition"
    if not is_dawson_partition(pairs, p.n):
        ordered = sorted(pairs)
        for (b1, t1), (b2, t2) in zip(ordered, ordered[1:]):
            if t1 >= t2:
                g = p.ground
                return f"bottoms {g.fmt(b1)} < {g.fmt(b2)} but tops {g.fmt(t1)} >= {g.fmt(t2)}"
        return "colex characterisation rejected the partition"
    return None


def check_mp_axioms(p: Perspective):
    m, mp = p.m, p.mprime
    results = {
        "MP1": mp1(m, mp),
        "MP2": mp2(m, mp),
        "MP2'": mp2_flats(m, mp),
        "MP3": mp3(m, mp),
        "MP4": mp4(m, mp),
        "dual MP3": mp3(mp.dual(), m.dual()),
    }
    if len(set(results.values())) != 1:
        return f"axioms disagree: {results}"
    if not results["MP3"]:
        return "pair is not a perspective"
    return None


def check_refinement(p: Perspective):
    g = p.ground
    pm, pmp = identity_perspective(p.m), identity_perspective(p.mprime)
    for a in range(1 << p.n):
        ours, big_m, big_mp = interval_of(p, a), interval_of(pm, a), interval_of(pmp, a)
        for other, label in ((big_m, "M"), (big_mp, "M'")):
            if not (ours.bottom in other and ours.top in other):
                return f"interval of {g.fmt(a)} not inside its {label} interval"
        pr, prm, prp = p.profile(a), pm.profile(a), pmp.profile(a)
        if (
            pr.int_active & ~prm.int_active
            or pr.p_set & ~prm.p_set
            or pr.ext_active & ~prp.ext_active
            or pr.q_set & ~prp.q_set
        ):
            return f"activity containments fail at {g.fmt(a)}"
    return None


def check_uniqueness(p: Perspective):
    m = p.m
    for a in range(1 << p.n):
        pr = p.profile(a)
        for e in bits(pr.ext_active | pr.q_set):
            try:
                unique_witness_circuit(m, a, p.ground.labels[e])
            except AssertionError as exc:
                return f"A={p.ground.fmt(a)}, e={p.ground.labels[e]}: {exc}"
    return None


def check_activity_identities(p: Perspective):
    """Act-set identities, the Int/Ext duality, and basis activities."""
    g = p.ground
    for mat in (p.m, p.mprime):
        own, dual_side = identity_perspective(mat), identity_perspective(mat.dual())
        for a in range(1 << p.n):
            comp = g.full & ~a
            acts, costar = act(mat.circuits, a), act(mat.cocircuits, comp)
            prof = own.profile(a)
            if (prof.ext_active, prof.q_set) != (acts & ~a, acts & a):
                return f"Ext/Q vs Act at {g.fmt(a)}"
            if (prof.int_active, prof.p_set) != (costar & a, costar & ~a):
                return f"Int/P vs Act* at {g.fmt(a)}"
            if prof.int_active != dual_side.profile(comp).ext_active:
                return f"Int_M(A) != Ext_M*(E\\A) at {g.fmt(a)}"
            if prof.cr != mat.corank(a) or prof.nl != mat.nullity(a):
                return f"|P|,|Q| differ from corank,nullity at {g.fmt(a)}"
        for b in mat.bases:
            prof = own.profile(b)
            if basis_activities(mat, b) != (prof.iota, prof.eps):
                return f"basis activities disagree at {g.fmt(b)}"
    return None


def _multiset(terms: Iterable[Polynomial]) -> Counter:
    return Counter(terms)


def check_expansions(p: Perspective):
    t = tutte_corank_nullity(p)
    if tutte_indspan(p) != t:
        return "independent/spanning expansion: " + _diff_text(tutte_indspan(p), t)
    f5 = five_var(p)
    shifted = t.subs({"x": Polynomial.var("x") + Polynomial.var("u"), "y": Polynomial.var("y") + Polynomial.var("v")})
    if f5 != shifted:
        return "five-variable identity: " + _diff_text(f5, shifted)
    for fam, syms in SYMBOLS.items():
        reference = None
        for sym in syms:
            value = f5.subs(sym.bindings)
            if value != t:
                return f"symbol {sym} (family {fam}): " + _diff_text(value, t)
            summands = symbol_summands(p, sym)
            total = poly_sum(summands.values())
            if total != t or not total.is_integral():
                return f"summands of {sym} (family {fam}): " + _diff_text(total, t)
            ms = _multiset(summands.values())
            if reference is None:
                reference = ms
            elif ms != reference:
                return f"family {fam}: summand multiset of {sym} differs from {syms[0]}"
    return None


CHECKS: "OrderedDict[str, Callable[[Perspective], str | None]]" = OrderedDict(
    [
        ("derivative-theorem", check_derivative_theorem),
        ("derivative-cells", check_partition_of_derivatives),
        ("diagonal-derivative", check_diagonal_derivative),
        ("partition", check_partition),
        ("interval-lemma", check_interval_lemma),
        ("dualities", check_dualities),
        ("census-identity", check_census),
        ("colex-agreement", check_colex),
        ("bgn-characterization", check_bgn),
        ("mp-axiom-agreement", check_mp_axioms),
        ("refinement", check_refinement),
        ("uniqueness-witness", check_uniqueness),
        ("activity-identities", check_activity_identities),
        ("expansion-agreement", check_expansions),
    ]
)


def run_checks(p: Perspective, selection: Iterable[str] | str = "all", instance: str = "") -> VerificationReport:
    """Run the selected checks on ``p``; unknown names raise ``KeyError``."""
    if p.n > MAX_ELEMENTS:
        raise ValueError(f"ground set of {p.n} elements exceeds the exhaustive cap of {MAX_ELEMENTS}")
    if selection == "all" or selection == ["all"]:
        names = list(CHECKS)
    else:
        names = [selection] if isinstance(selection, str) else list(selection)
        for name in names:
            if name not in CHECKS:
                raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
    instance = instance or repr(p)
    report = VerificationReport()
    for name in names:
        try:
            detail = CHECKS[name](p)
        except Exception as exc:  # a crash inside a check is a failure with its message
            detail = f"raised {type(exc).__name__}: {exc}"
        report.checks.append(CheckResult(name, instance, detail is None, detail or ""))
    return report


# -- random instances -----------------------------------------------------------


def _gf_rank(rows: list[list[int]], q: int) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % q), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        rows[rank] = [(val * inv) % q for val in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % q:
                f = rows[i][col]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def linear_matroid(columns: list[list[int]], q: int, labels: Iterable) -> Matroid:
    """Column matroid of vectors over GF(q), q prime."""
    ground = GroundSet(labels)
    n = len(columns)
    if n == 0:
        raise ValueError("no columns")
    full = _gf_rank([list(row) for row in zip(*columns)], q)
    bases = []
    for combo in combinations(range(n), full):
        if full == 0:
            bases.append(0)
            continue
        rows = [list(row) for row in zip(*(columns[i] for i in combo))]
        if _gf_rank(rows, q) == full:
            bases.append(sum(1 << i for i in combo))
    return Matroid(ground, bases, validate=False)


def _random_matroid(rng: random.Random, labels: list[str]) -> Matroid:
    n = len(labels)
    if rng.random() < 0.5:
        nv = rng.randint(1, min(6, n + 1))
        verts = [f"v{i}" for i in range(nv)]
        edges = []
        for lab in labels:
            a = rng.choice(verts)
            b = a if rng.random() < 0.08 else rng.choice(verts)
            edges.append((lab, a, b))
        return graphic_matroid(Graph(verts, edges))
    q = rng.choice((2, 3))
    r = rng.randint(0, min(n, 5))
    cols = []
    for _ in labels:
        cols.append([rng.randrange(q) for _ in range(r)] if r else [0])
    return linear_matroid(cols, q, labels)


def random_instance(seed: int, n: int, kind: str = "perspective") -> Perspective:
    """Deterministic random matroid (as identity perspective) or perspective on ``n`` elements."""
    if not 1 <= n <= 10:
        raise ValueError("n must be between 1 and 10")
    rng = random.Random(f"{kind}:{seed}:{n}")
    labels = [str(i + 1) for i in range(n)]
    if kind == "matroid":
        return identity_perspective(_random_matroid(rng, labels))
    if kind != "perspective":
        raise ValueError(f"kind must be 'matroid' or 'perspective', not {kind!r}")
    k = rng.randint(1, 2)
    order = labels + [f"p{i + 1}" for i in range(k)]
    # ports sit at random positions of the major's order
    rng.shuffle(order)
    major = _random_matroid(rng, order)
    ports = [lab for lab in order if lab.startswith("p")]
    persp = major_to_perspective(major, ports)
    # rename so the surviving elements read 1..n in their inherited order
    return _relabel(persp)


def _relabel(p: Perspective) -> Perspective:
    labels = [str(i + 1) for i in range(p.n)]
    ground = GroundSet(labels)
    m = Matroid(ground, p.m.bases, validate=False)
    mp = Matroid(ground, p.mprime.bases, validate=False)
    return Perspective(m, mp)
