from collections import Counter
from fractions import Fraction

import pytest

from mtutte.matroid import free_matroid, uniform_matroid
from mtutte.perspective import identity_perspective
from mtutte.poly import ONE, Polynomial, ZERO, u, v, x, y, z
from mtutte.tutte import (
    FAMILIES,
    SYMBOLS,
    Symbol,
    all_symbols,
    derivative_gf,
    derivative_terms,
    diagonal_derivative_gf,
    expansion_family,
    five_var,
    five_var_terms,
    indspan_summands,
    specialize_symbol,
    symbol_summands,
    tutte_corank_nullity,
    tutte_indspan,
)

T_M1 = x**2 + x * y + y**2 + x + y
T_P2 = (x**2 + 3 * x + y + 3) * z**2 + (2 * x + 2 * y + 5) * z + y + 2
h = Fraction(1, 2)
q = Fraction(1, 4)

# Per-subset summands of the nine families on M1, columns (1) (2) (3) (3b) (3c)
# (3d) (3e) (4) (5); None is an empty cell.  Corrected cells: row 123 of (3)
# is xy/4, and in (3c) the y^2 belongs to row 1234 rather than 234.
M1_FAMILY_TABLE = {
    "": [(x - 1) ** 2, None, q * x**2, q * x**2, q * x**2, (x - 1) ** 2, x**2, None, (x - 1) ** 2],
    "1": [x - 1, None, q * x**2, q * x**2, q * x**2, x - 1, None, None, x - 1],
    "2": [x - 1, None, q * x * y, h * x, None, h * (x - 1) * y, h * x * y, None, (x - 1) * y],
    "3": [x - 1, None, q * x**2, q * x**2, q * x**2, x - 1, None, None, x - 1],
    "4": [x - 1, None, h * x, h * x, h * x, x - 1, x, None, x - 1],
    "12": [(x - 1) * (y - 1), None, q * x * y, h * x * (y - 1), h * x * y, h * (x - 1) * y, h * x * y, None, None],
    "13": [ONE, x**2, q * x**2, q * x**2, q * x**2, ONE, None, x**2, ONE],
    "14": [ONE, x, h * x, h * x, h * x, ONE, None, x, ONE],
    "23": [ONE, x * y, q * x * y, h * x, None, h * y, None, x, y],
    "24": [ONE, y, h * y, ONE, None, h * y, h * y, ONE, y],
    "34": [ONE, y**2, q * y**2, ONE, None, q * y**2, q * y**2, ONE, y**2],
    "123": [y - 1, None, q * x * y, h * x * (y - 1), h * x * y, h * y, None, x * (y - 1), None],
    "124": [y - 1, None, h * y, y - 1, y, h * y, h * y, y - 1, None],
    "134": [y - 1, None, q * y**2, y - 1, None, q * y**2, q * y**2, y - 1, None],
    "234": [y - 1, None, q * y**2, y - 1, None, q * y**2, q * y**2, y - 1, None],
    "1234": [(y - 1) ** 2, None, q * y**2, (y - 1) ** 2, y**2, q * y**2, q * y**2, (y - 1) ** 2, None],
}

# five-variable monomial per subset of M1 (activity exponents on x, y; corank/nullity on u, v)
M1_FIVE_VAR = {
    "13": x**2, "23": x * y, "34": y**2, "14": x, "24": y, "1": x * u, "3": x * u, "2": u * y,
    "4": u, "123": x * v, "134": y * v, "234": y * v, "124": v, "": u**2, "12": u * v, "1234": v**2,
}


def test_tutte_examples(id_m1, p2):
    assert tutte_corank_nullity(id_m1) == T_M1
    assert tutte_corank_nullity(p2) == T_P2
    assert tutte_corank_nullity(identity_perspective(free_matroid("1"))) == x
    assert tutte_corank_nullity(identity_perspective(uniform_matroid(0, "1"))) == y


def test_indspan_examples(id_m1, p2):
    g = id_m1.ground
    summands = indspan_summands(id_m1)
    assert {g.short(b): t for b, t in summands.items()} == {"13": x**2, "23": x * y, "34": y**2, "14": x, "24": y}
    want = Counter(
        [x**2 * z**2] + [x * z**2] * 3 + [y * z**2] + [z**2] * 3 + [x * z] * 2 + [y * z] * 2 + [z] * 5 + [y] + [ONE] * 2
    )
    assert Counter(indspan_summands(p2).values()) == want
    assert p2.ground.mask("2345") in indspan_summands(p2)
    assert indspan_summands(p2)[p2.ground.mask("2345")] == y
    assert tutte_indspan(p2) == T_P2
    assert tutte_indspan(identity_perspective(uniform_matroid(0, "1"))) == y


def test_derivative_examples(id_m1, p2):
    g = id_m1.ground
    assert derivative_gf(id_m1, 1, 0) == 2 * x + y + 1
    terms = derivative_terms(id_m1, 1, 0)
    assert {g.short(a): t for a, t in terms.items()} == {"1": x, "3": x, "2": y, "4": ONE}
    terms = derivative_terms(p2, 0, 1)
    assert {p2.ground.short(a): t for a, t in terms.items()} == {"123": z**2, "1234": z, "1235": z, "12345": ONE}
    assert derivative_gf(p2, 0, 1) == z**2 + 2 * z + 1
    assert derivative_gf(p2, 2, 0) == 2 * z**2
    assert derivative_terms(p2, 2, 0) == {0: z**2}
    for variant in ("cr-nl", "i-nl", "cr-e", "i-e"):
        assert derivative_gf(id_m1, 3, 0, variant) == ZERO
    terms = derivative_terms(id_m1, 1, 0, "i-nl")
    assert {g.short(a): t for a, t in terms.items()} == {"1": x, "3": x, "14": ONE, "23": y}
    assert derivative_gf(id_m1, 1, 0, "i-nl") == 2 * x + y + 1
    with pytest.raises(ValueError):
        derivative_gf(id_m1, 0, 0, "x-y")
    with pytest.raises(ValueError):
        derivative_gf(id_m1, -1, 0)


def test_m1_second_derivatives(id_m1):
    g = id_m1.ground
    assert {g.short(a) for a in derivative_terms(id_m1, 2, 0)} == {"∅"}
    assert {g.short(a) for a in derivative_terms(id_m1, 1, 1)} == {"12"}
    assert {g.short(a) for a in derivative_terms(id_m1, 0, 2)} == {"1234"}
    assert derivative_gf(id_m1, 2, 0) == 2 and derivative_gf(id_m1, 0, 2) == 2
    assert derivative_gf(id_m1, 1, 1) == 1


def test_diagonal_examples(id_m1, p2):
    assert diagonal_derivative_gf(id_m1, 1) == 6 * x + 2
    assert diagonal_derivative_gf(id_m1, 0) == 3 * x**2 + 2 * x
    for p in (id_m1, p2):
        top = p.mprime.rank + p.n - p.m.rank
        assert diagonal_derivative_gf(p, top + 1) == ZERO
    with pytest.raises(ValueError):
        diagonal_derivative_gf(p2, -1)


def test_five_var_m1_rows(id_m1):
    g = id_m1.ground
    assert {g.short(a) if a else "": t for a, t in five_var_terms(id_m1).items()} == M1_FIVE_VAR
    xs, ys = x + u, y + v
    assert five_var(id_m1) == xs**2 + xs * ys + ys**2 + xs + ys


def test_five_var_p2_and_free(p2):
    assert len(five_var_terms(p2)) == 32
    assert five_var(p2) == T_P2.subs({"x": x + u, "y": y + v})
    assert five_var_terms(p2)[0] == u**2 * z**2
    assert five_var_terms(p2)[p2.ground.mask("2345")] == y
    assert five_var(identity_perspective(free_matroid("1"))) == x + u


def test_family_table_m1(id_m1):
    g = id_m1.ground
    for col, fam in enumerate(FAMILIES):
        summands, total = expansion_family(id_m1, fam)
        got = {g.short(s.subset) if s.subset else "": s.monomial for s in summands}
        want = {row: cells[col] for row, cells in M1_FAMILY_TABLE.items() if cells[col] is not None}
        assert got == want, fam
        assert total == T_M1


def test_family_examples(id_m1):
    g = id_m1.ground
    fam1 = dict((s.subset, s.monomial) for s in expansion_family(id_m1, "1")[0])
    assert fam1[0] == (x - 1) ** 2
    fam3 = dict((s.subset, s.monomial) for s in expansion_family(id_m1, "3")[0])
    assert fam3[g.mask("24")] == y / 2
    fam4 = expansion_family(id_m1, "4")[0]
    assert {s.subset for s in fam4} == {a for a in range(16) if id_m1.m.is_spanning(a)}
    assert len(fam4) == 10
    fam3b = dict((s.subset, s.monomial) for s in expansion_family(id_m1, "3b")[0])
    assert fam3b[g.full] == (y - 1) ** 2
    with pytest.raises(ValueError):
        expansion_family(id_m1, "6")


def test_symbol_counts():
    assert [len(SYMBOLS[f]) for f in FAMILIES] == [4, 4, 1, 2, 2, 2, 2, 4, 4]
    assert len(all_symbols()) == 25
    assert str(SYMBOLS["5"][1]) == "[[1, x - 1, 0, y]]"
    assert str(SYMBOLS["3"][0]) == "[[1/2*x, 1/2*x, 1/2*y, 1/2*y]]"


def test_specialize_examples(id_m1, p2):
    assert specialize_symbol(id_m1, SYMBOLS["1"][0]) == T_M1
    assert specialize_symbol(id_m1, SYMBOLS["2"][0]) == T_M1
    assert specialize_symbol(p2, SYMBOLS["3"][0]) == T_P2


def test_every_symbol_on_fixtures(id_m1, p2):
    for p, t in ((id_m1, T_M1), (p2, T_P2)):
        for fam, sym in all_symbols():
            assert specialize_symbol(p, sym) == t, (fam, str(sym))
            total = sum(symbol_summands(p, sym).values(), ZERO)
            assert total == t and total.is_integral()


def test_within_family_multisets(id_m1, p2):
    for p in (id_m1, p2):
        for fam, syms in SYMBOLS.items():
            sets = [Counter(symbol_summands(p, s).values()) for s in syms]
            assert all(ms == sets[0] for ms in sets), fam


def test_families_differ_across(id_m1):
    firsts = {f: Counter(symbol_summands(id_m1, SYMBOLS[f][0]).values()) for f in FAMILIES}
    assert len({frozenset(c.items()) for c in firsts.values()}) == 9


def test_literal_symbol_readings_fail(id_m1):
    # [[1, x, 0, y]] without the -1 shift, and (3e) with x/2 in the y slots, do not reproduce t
    assert specialize_symbol(id_m1, Symbol(ONE, x, ZERO, y)) != T_M1
    assert specialize_symbol(id_m1, Symbol(x, ZERO, x / 2, x / 2)) != T_M1


def test_derivative_cells_tile_subsets(p2):
    seen = Counter()
    for dp in range(3):
        for dq in range(2):
            for a in derivative_terms(p2, dp, dq):
                seen[a] += 1
    assert sorted(seen) == list(range(32)) and set(seen.values()) == {1}


def test_summand_is_polynomial_not_monomial(id_m1):
    summands, _ = expansion_family(id_m1, "1")
    assert any(not s.monomial.is_monomial() for s in summands)
    assert isinstance(summands[0].monomial, Polynomial)
