"""Exact sparse polynomials over Q in the five variables x, u, y, v, z.

A :class:`Polynomial` is an immutable map from exponent vectors
``(ex, eu, ey, ev, ez)`` to nonzero :class:`fractions.Fraction` coefficients.
Arithmetic is closed under ``+``, ``-``, ``*`` and nonnegative integer
powers; division is only by scalars.

>>> x, y = Polynomial.var("x"), Polynomial.var("y")
>>> str((x + 1) * (x - 1))
'x^2 - 1'
>>> str(parse("x^2 + x*y + y^2 + x + y").diff("x"))
'2*x + y + 1'
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping, Union

VARIABLES = ("x", "u", "y", "v", "z")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {', '.join(VARIABLES)}") from None


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != _NVARS or min(exp) < 0:
                raise ValueError(f"bad exponent vector {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        # terms already canonical: tuple keys, nonzero Fraction values
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        c = Fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str) -> Polynomial:
        exp = [0] * _NVARS
        exp[_var_index(name)] = 1
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exps: int) -> Polynomial:
        """``Polynomial.monomial(2, x=1, z=2)`` is ``2*x*z^2``."""
        exp = [0] * _NVARS
        for name, e in exps.items():
            exp[_var_index(name)] = e
        return cls({tuple(exp): coeff})

    # -- read access ---------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self, name: str | None = None) -> int:
        """Total degree, or the degree in one variable; ``-1`` for zero."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = _var_index(name)
        return max(e[i] for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def variables(self) -> set[str]:
        used = set()
        for exp in self._terms:
            used.update(VARIABLES[i] for i, e in enumerate(exp) if e)
        return used

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.const(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exp, 0) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.is_zero() or set(other._terms) != {_ZERO_EXP}:
                raise ZeroDivisionError("division only by nonzero constants")
            other = other.constant_term()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial._raw({e: c / other for e, c in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus and substitution -------------------------------------

    def diff(self, name: str, order: int = 1) -> Polynomial:
        """Formal partial derivative, applied ``order`` times."""
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        i = _var_index(name)
        out = {}
        for exp, c in self._terms.items():
            e = exp[i]
            if e < order:
                continue
            falling = factorial(e) // factorial(e - order)
            new = list(exp)
            new[i] = e - order
            out[tuple(new)] = c * falling
        return Polynomial._raw(out)

    def subs(self, bindings: Mapping[str, Polynomial | Scalar]) -> Polynomial:
        """Simultaneous substitution; unbound variables pass through."""
        images = []
        for i, name in enumerate(VARIABLES):
            if name in bindings:
                img = self._coerce(bindings[name])
                if img is None:
                    raise TypeError(f"cannot substitute {bindings[name]!r} for {name}")
                images.append(img)
            else:
                images.append(None)
        unknown = set(bindings) - set(VARIABLES)
        if unknown:
            raise ValueError(f"unknown variable(s) {sorted(unknown)}")
        power_cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = images[i] ** e
            return power_cache[key]

        terms = []
        for exp, c in self._terms.items():
            kept = [0] * _NVARS
            term = Polynomial._raw({_ZERO_EXP: c})
            for i, e in enumerate(exp):
                if images[i] is None:
                    kept[i] = e
                elif e:
                    term = term * power(i, e)
            if any(kept):
                term = term * Polynomial._raw({tuple(kept): Fraction(1)})
            terms.append(term)
        return poly_sum(terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point; every occurring variable must be bound."""
        for name in self.variables():
            if name not in point:
                raise KeyError(f"unbound variable {name!r}")
        vals = [Fraction(point.get(name, 0)) for name in VARIABLES]
        total = Fraction(0)
        for exp, c in self._terms.items():
            t = c
            for v, e in zip(vals, exp):
                if e:
                    t *= v ** e
            total += t
        return total

    def collect(self, **exps: int) -> Polynomial:
        """Coefficient of the given monomial, as a polynomial in the other variables.

        ``p.collect(u=2, v=0)`` keeps the terms with ``u``-degree 2 and no
        ``v``, and strips ``u^2`` from them.
        """
        idx = {_var_index(k): e for k, e in exps.items()}
        out = {}
        for exp, c in self._terms.items():
            if all(exp[i] == e for i, e in idx.items()):
                new = list(exp)
                for i in idx:
                    new[i] = 0
                out[tuple(new)] = c
        return Polynomial._raw(out)

    # -- text ----------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def __str__(self):
        return canonical_text(self)

    def __repr__(self):
        return f"Polynomial({canonical_text(self)!r})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def canonical_text(p: Polynomial) -> str:
    """Deterministic rendering: total degree descending, then lex descending in x,u,y,v,z."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        factors = []
        for name, e in zip(VARIABLES, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _fmt_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<body>
          (?:\d+(?:\s*/\s*\d+)?|[xuyvz](?:\s*\^\s*\d+)?)
          (?:\s*\*\s*(?:\d+(?:\s*/\s*\d+)?|[xuyvz](?:\s*\^\s*\d+)?))*
        )\s*""",
    re.VERBOSE,
)


def parse(text: str) -> Polynomial:
    """Parse the rendering produced by :func:`canonical_text` (whitespace-tolerant)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    total = Polynomial()
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at offset {pos}: {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator at offset {pos}: {s!r}")
        first = False
        coeff = Fraction(-1 if m.group("sign") == "-" else 1)
        exp = [0] * _NVARS
        for factor in m.group("body").split("*"):
            factor = factor.replace(" ", "")
            if factor[0] in _INDEX:
                name, _, e = factor.partition("^")
                exp[_INDEX[name]] += int(e) if e else 1
            else:
                coeff *= Fraction(factor)
        total = total + Polynomial({tuple(exp): coeff})
        pos = m.end()
    return total


# Function forms of the methods above.


def partial_derivative(p: Polynomial, var: str, order: int = 1) -> Polynomial:
    return p.diff(var, order)


def substitute(p: Polynomial, bindings: Mapping[str, Polynomial | Scalar]) -> Polynomial:
    return p.subs(bindings)


def evaluate(p: Polynomial, point: Mapping[str, Scalar]) -> Fraction:
    return p.evaluate(point)


def poly_sum(polys: Iterable[Polynomial]) -> Polynomial:
    out: dict = {}
    for p in polys:
        for exp, c in p.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
    return Polynomial._raw(out)


x, u, y, v, z = (Polynomial.var(n) for n in VARIABLES)
ONE = Polynomial.const(1)
ZERO = Polynomial()
