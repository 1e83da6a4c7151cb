"""Tutte polynomials of matroid perspectives and their expansions.

All sums run over exact activity profiles; nothing here is evaluated
numerically.  For a plain matroid use :func:`identity_perspective`, which
makes every ``z`` exponent zero.

Symbol convention.  A symbol ``[[a, b, c, d]]`` substitutes ``a, b, c, d``
for ``x, u, y, v`` in the per-subset term

    x^cr'(A) * u^ι'(A) * y^nl(A) * v^ε(A) * z^rcd(A)

so ``[[x-1, 1, y-1, 1]]`` is the corank-nullity sum.  :func:`five_var`
itself is written with activities on ``x, y`` and corank/nullity on
``u, v``; the two polynomials coincide because both equal ``t(x+u, y+v, z)``.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .activity import ActivityProfile
from .perspective import Perspective
from .poly import ONE, Polynomial, poly_sum

_x, _u, _y, _v, _z = (Polynomial.var(n) for n in "xuyvz")


def _mono(coeff=1, **exps) -> Polynomial:
    return Polynomial.monomial(coeff, **{k: e for k, e in exps.items() if e})


def tutte_corank_nullity(p: Perspective) -> Polynomial:
    """Sum over all subsets of ``(x-1)^cr' (y-1)^nl z^rcd``, from rank queries only."""
    m, mp = p.m, p.mprime
    rm, rp = m.rank_table, mp.rank_table
    counts: dict = {}
    for a in range(1 << p.n):
        key = (mp.rank - rp[a], a.bit_count() - rm[a], (m.rank - mp.rank) - (rm[a] - rp[a]))
        counts[key] = counts.get(key, 0) + 1
    xm, ym = _x - 1, _y - 1
    return poly_sum(c * xm**i * ym**j * _z**k for (i, j, k), c in counts.items())


def tutte_indspan(p: Perspective) -> Polynomial:
    """Sum over independent/spanning sets of ``x^ι' y^ε z^rcd``."""
    return poly_sum(indspan_summands(p).values())


def indspan_summands(p: Perspective) -> "OrderedDict[int, Polynomial]":
    out = OrderedDict()
    for b in p.witnesses:
        prof = p.profile(b)
        out[b] = _mono(x=prof.iota, y=prof.eps, z=prof.rcd)
    return out


# which two statistics are pinned to (dp, dq), and which two become exponents of x and y
VARIANTS = {
    "cr-nl": (("cr", "nl"), ("iota", "eps")),
    "i-nl": (("iota", "nl"), ("cr", "eps")),
    "cr-e": (("cr", "eps"), ("iota", "nl")),
    "i-e": (("iota", "eps"), ("cr", "nl")),
}


def derivative_terms(p: Perspective, dp: int, dq: int, variant: str = "cr-nl") -> "OrderedDict[int, Polynomial]":
    """Per-subset monomials of :func:`derivative_gf`, before the ``dp! dq!`` factor."""
    try:
        (fix_x, fix_y), (exp_x, exp_y) = VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; choose from {sorted(VARIANTS)}") from None
    if dp < 0 or dq < 0:
        raise ValueError("derivative orders must be nonnegative")
    out = OrderedDict()
    for prof in p.profiles:
        if getattr(prof, fix_x) == dp and getattr(prof, fix_y) == dq:
            out[prof.subset] = _mono(x=getattr(prof, exp_x), y=getattr(prof, exp_y), z=prof.rcd)
    return out


def derivative_gf(p: Perspective, dp: int, dq: int, variant: str = "cr-nl") -> Polynomial:
    """Activity generating function equal to the ``(dp, dq)`` partial derivative of t."""
    terms = derivative_terms(p, dp, dq, variant)
    return factorial(dp) * factorial(dq) * poly_sum(terms.values())


def diagonal_derivative_gf(p: Perspective, dp: int) -> Polynomial:
    """``dp! * Σ x^(ι'+ε) z^rcd`` over subsets with ``cr' + nl = dp``."""
    if dp < 0:
        raise ValueError("derivative order must be nonnegative")
    terms = [_mono(x=pr.iota + pr.eps, z=pr.rcd) for pr in p.profiles if pr.cr + pr.nl == dp]
    return factorial(dp) * poly_sum(terms)


def five_var(p: Perspective) -> Polynomial:
    """``Σ x^ι' u^cr' y^ε v^nl z^rcd`` over all subsets."""
    return poly_sum(five_var_terms(p).values())


def five_var_terms(p: Perspective) -> "OrderedDict[int, Polynomial]":
    out = OrderedDict()
    for prof in p.profiles:
        out[prof.subset] = _mono(x=prof.iota, u=prof.cr, y=prof.eps, v=prof.nl, z=prof.rcd)
    return out


@dataclass(frozen=True)
class Symbol:
    """Values bound to ``x, u, y, v`` in the per-subset term (see module docstring)."""

    bind_x: Polynomial
    bind_u: Polynomial
    bind_y: Polynomial
    bind_v: Polynomial

    @property
    def bindings(self) -> dict:
        return {"x": self.bind_x, "u": self.bind_u, "y": self.bind_y, "v": self.bind_v}

    def __str__(self):
        return "[[" + ", ".join(str(b) for b in (self.bind_x, self.bind_u, self.bind_y, self.bind_v)) + "]]"

    def term(self, prof: ActivityProfile) -> Polynomial:
        return (
            _power(self.bind_x, prof.cr)
            * _power(self.bind_u, prof.iota)
            * _power(self.bind_y, prof.nl)
            * _power(self.bind_v, prof.eps)
            * _power(_z, prof.rcd)
        )


@lru_cache(maxsize=1024)
def _power(base: Polynomial, e: int) -> Polynomial:
    return base**e


def _sym(a, b, c, d) -> Symbol:
    return Symbol(*(ONE * w for w in (a, b, c, d)))


_xh, _yh = _x / 2, _y / 2

SYMBOLS: "OrderedDict[str, list[Symbol]]" = OrderedDict(
    [
        ("1", [_sym(_x - 1, 1, _y - 1, 1), _sym(_x - 1, 1, 1, _y - 1), _sym(1, _x - 1, _y - 1, 1), _sym(1, _x - 1, 1, _y - 1)]),
        ("2", [_sym(0, _x, 0, _y), _sym(0, _x, _y, 0), _sym(_x, 0, 0, _y), _sym(_x, 0, _y, 0)]),
        ("3", [_sym(_xh, _xh, _yh, _yh)]),
        ("3b", [_sym(_xh, _xh, _y - 1, 1), _sym(_xh, _xh, 1, _y - 1)]),
        ("3c", [_sym(_xh, _xh, _y, 0), _sym(_xh, _xh, 0, _y)]),
        ("3d", [_sym(_x - 1, 1, _yh, _yh), _sym(1, _x - 1, _yh, _yh)]),
        ("3e", [_sym(_x, 0, _yh, _yh), _sym(0, _x, _yh, _yh)]),
        ("4", [_sym(0, _x, _y - 1, 1), _sym(0, _x, 1, _y - 1), _sym(_x, 0, _y - 1, 1), _sym(_x, 0, 1, _y - 1)]),
        ("5", [_sym(_x - 1, 1, 0, _y), _sym(1, _x - 1, 0, _y), _sym(_x - 1, 1, _y, 0), _sym(1, _x - 1, _y, 0)]),
    ]
)

FAMILIES = tuple(SYMBOLS)


def all_symbols() -> list[tuple[str, Symbol]]:
    return [(fam, s) for fam, syms in SYMBOLS.items() for s in syms]


def specialize_symbol(p: Perspective, sym: Symbol) -> Polynomial:
    """Substitute the symbol into the five-variable polynomial."""
    return five_var(p).subs(sym.bindings)


def symbol_summands(p: Perspective, sym: Symbol) -> "OrderedDict[int, Polynomial]":
    """Nonzero per-subset summands of the expansion named by ``sym``."""
    out = OrderedDict()
    seen: dict = {}
    for prof in p.profiles:
        key = (prof.cr, prof.iota, prof.nl, prof.eps, prof.rcd)
        if key not in seen:
            seen[key] = sym.term(prof)
        term = seen[key]
        if term:
            out[prof.subset] = term
    return out


@dataclass(frozen=True)
class ExpansionSummand:
    subset: int
    monomial: Polynomial


def expansion_family(p: Perspective, family: str) -> tuple[list[ExpansionSummand], Polynomial]:
    """Summands of the first symbol of ``family`` and their total."""
    family = str(family)
    if family not in SYMBOLS:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    terms = symbol_summands(p, SYMBOLS[family][0])
    summands = [ExpansionSummand(a, t) for a, t in terms.items()]
    return summands, poly_sum(terms.values())


def max_orders(p: Perspective) -> tuple[int, int]:
    """Largest ``(dp, dq)`` with a possibly nonzero derivative: ``(r(M'), |E| - r(M))``."""
    return p.mprime.rank, p.n - p.m.rank


def formal_derivative(t: Polynomial, dp: int, dq: int) -> Polynomial:
    return t.diff("x", dp).diff("y", dq)


def diagonal(t: Polynomial) -> Polynomial:
    """``t`` with ``y`` set to ``x``."""
    return t.subs({"y": _x})
