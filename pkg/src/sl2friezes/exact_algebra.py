"""Exact arithmetic: Laurent polynomials over the integers and 2x2 matrices.

Python integers are arbitrary precision and ``fractions.Fraction`` is
always reduced with a positive denominator, so those two serve directly
as the integer and rational types.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Union

from .errors import NotDivisible, NotLaurent

Rational = Union[int, Fraction]


class Monomial(tuple):
    """A Laurent monomial, stored as sorted ``(variable, exponent)`` pairs.

    Zero exponents are dropped, so equal monomials compare and hash equal.
    """

    __slots__ = ()

    def __new__(cls, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[str, int] = {}
        for var, e in items:
            acc[var] = acc.get(var, 0) + int(e)
        return tuple.__new__(cls, sorted((v, e) for v, e in acc.items() if e))

    @classmethod
    def _raw(cls, pairs: tuple) -> "Monomial":
        return tuple.__new__(cls, pairs)

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        if not other:
            return self
        if not self:
            return other
        acc = dict(self)
        for v, e in other:
            s = acc.get(v, 0) + e
            if s:
                acc[v] = s
            else:
                del acc[v]
        return Monomial._raw(tuple(sorted(acc.items())))

    def inverse(self) -> "Monomial":
        return Monomial._raw(tuple((v, -e) for v, e in self))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def __pow__(self, k: int) -> "Monomial":
        if k == 0:
            return Monomial()
        return Monomial._raw(tuple((v, e * k) for v, e in self))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def exponent(self, var: str) -> int:
        for v, e in self:
            if v == var:
                return e
        return 0

    def variables(self) -> set[str]:
        return {v for v, _ in self}

    def __repr__(self) -> str:
        return f"Monomial({dict(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self)


ONE_MONO = Monomial()


def _grlex_key(m: Monomial, order: list[str]) -> tuple:
    return (m.degree, tuple(m.exponent(v) for v in order))


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    Instances are immutable. Arithmetic accepts plain ints on either side.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | int | None = None):
        if terms is None:
            clean: dict[Monomial, int] = {}
        elif isinstance(terms, int):
            clean = {ONE_MONO: terms} if terms else {}
        else:
            clean = {}
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                c = _as_int(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        return cls._wrap({Monomial({name: exp}): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({m: coeff} if coeff else {})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def variables(self) -> set[str]:
        out: set[str] = set()
        for m in self._terms:
            out.update(v for v, _ in m)
        return out

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONO in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONO, 0)

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Any) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "LaurentPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._wrap({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return LaurentPoly._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise NotLaurent(f"cannot invert non-monomial {self}")
            (m, c), = self._terms.items()
            if c not in (1, -1):
                raise NotLaurent(f"cannot invert {self} over the integers")
            return LaurentPoly._wrap({m ** k: c ** (-k)})
        result = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other: Any) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return lp_exact_div(self, other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({ONE_MONO: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(ONE_MONO, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation -----------------------------------------------------------
    def substitute_ones(self, names: Iterable[str]) -> "LaurentPoly":
        return lp_substitute_ones(self, names)

    def evaluate(self, values: Mapping[str, Rational]) -> Rational:
        """Substitute rational values for every variable."""
        total: Rational = 0
        for m, c in self._terms.items():
            t: Rational = c
            for v, e in m:
                x = values[v]
                t = t * (Fraction(x) ** e if e < 0 else x ** e)
            total += t
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    # text -----------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        order = sorted(self.variables())
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0], order))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for m, c in self.sorted_terms():
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = str(m)
            else:
                body = f"{abs(c)}*{m}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts e.g. ``"1 + 2*x + x^2 - x*y^-1"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        out = LaurentPoly()
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            sign = -1 if chunk[0] == "-" else 1
            body = chunk[1:] if chunk[0] in "+-" else chunk
            coeff = 1
            exps: dict[str, int] = {}
            for i, factor in enumerate(body.split("*")):
                if i == 0 and _INT_RE.fullmatch(factor):
                    coeff = int(factor)
                    continue
                mm = _FACTOR_RE.fullmatch(factor)
                if not mm:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                name, e = mm.group(1), int(mm.group(2) or 1)
                exps[name] = exps.get(name, 0) + e
            out = out + LaurentPoly({Monomial(exps): sign * coeff})
        return out


_INT_RE = re.compile(r"\d+")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?")


def _as_int(c: Any) -> int:
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    raise TypeError(f"LaurentPoly coefficients must be integers, got {c!r}")


def _coerce(x: Any) -> "LaurentPoly":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return LaurentPoly(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return LaurentPoly(int(x))
    return NotImplemented


def lp(x: LaurentPoly | int | str) -> LaurentPoly:
    """Convenience constructor: ints, canonical text, or an existing poly."""
    if isinstance(x, str):
        return LaurentPoly.parse(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot convert {x!r} to LaurentPoly")
    return c


def lp_arith(op: str, p: LaurentPoly, q: LaurentPoly | None = None) -> LaurentPoly:
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    raise ValueError(f"unknown op {op!r}")


def _split_monomial_content(p: LaurentPoly) -> tuple[Monomial, dict[tuple, Fraction], list[str]]:
    """Write p = m * P where P is an honest polynomial with no monomial factor.

    P is returned as exponent-vector -> coefficient over the returned
    variable order.
    """
    order = sorted(p.variables())
    lows = {v: min(m.exponent(v) for m in p._terms) for v in order}
    content = Monomial(lows)
    poly = {}
    for m, c in p._terms.items():
        poly[tuple(m.exponent(v) - lows[v] for v in order)] = Fraction(c)
    return content, poly, order


def lp_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p/q in the Laurent ring, or raise NotDivisible.

    Both operands are split as monomial times a polynomial free of monomial
    factors; the polynomial parts are divided in graded-lex order over the
    rationals, then integrality and ``r*q == p`` are checked.
    """
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return LaurentPoly()
    if q.is_monomial():
        (m, c), = q._terms.items()
        out = {}
        for pm, pc in p._terms.items():
            qq, rr = divmod(pc, c)
            if rr:
                raise NotDivisible(f"{p} is not divisible by {q}")
            out[pm / m] = qq
        return LaurentPoly._wrap(out)

    order = sorted(p.variables() | q.variables())
    mp, _, _ = _split_monomial_content(p)
    mq, _, _ = _split_monomial_content(q)

    def vec(m: Monomial, shift: Monomial) -> tuple:
        return tuple(m.exponent(v) - shift.exponent(v) for v in order)

    rem: dict[tuple, Fraction] = {vec(m, mp): Fraction(c) for m, c in p._terms.items()}
    den = {vec(m, mq): Fraction(c) for m, c in q._terms.items()}

    def key(e: tuple) -> tuple:
        return (sum(e), e)

    lead_q = max(den, key=key)
    lc_q = den[lead_q]
    heap = [(-sum(e), tuple(-x for x in e)) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple, Fraction] = {}
    while rem:
        while True:
            negdeg, nege = heapq.heappop(heap)
            lead = tuple(-x for x in nege)
            if lead in rem:
                break
        shift = tuple(a - b for a, b in zip(lead, lead_q))
        if any(s < 0 for s in shift):
            raise NotDivisible(f"{p} is not divisible by {q}")
        coef = rem[lead] / lc_q
        quot[shift] = quot.get(shift, 0) + coef
        for e, c in den.items():
            t = tuple(a + b for a, b in zip(e, shift))
            s = rem.get(t, 0) - coef * c
            if s:
                if t not in rem:
                    heapq.heappush(heap, (-sum(t), tuple(-x for x in t)))
                rem[t] = s
            else:
                rem.pop(t, None)
    shift_mono = mp / mq
    out: dict[Monomial, int] = {}
    for e, c in quot.items():
        if c.denominator != 1:
            raise NotDivisible(f"{p} / {q} has non-integral coefficients")
        if c:
            out[Monomial(zip(order, e)) * shift_mono] = int(c)
    r = LaurentPoly._wrap(out)
    if r * q != p:
        raise NotDivisible(f"verification failed for {p} / {q}")
    return r


def lp_substitute_ones(p: LaurentPoly, names: Iterable[str]) -> LaurentPoly:
    names = set(names)
    out: dict[Monomial, int] = {}
    for m, c in p._terms.items():
        m2 = Monomial._raw(tuple((v, e) for v, e in m if v not in names))
        s = out.get(m2, 0) + c
        if s:
            out[m2] = s
        else:
            out.pop(m2, None)
    return LaurentPoly._wrap(out)


@dataclass(frozen=True)
class RationalFunction:
    """A quotient of Laurent polynomials; equality is by cross-multiplication."""

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self) -> None:
        object.__setattr__(self, "num", lp(self.num))
        object.__setattr__(self, "den", lp(self.den))
        if not self.den:
            raise ZeroDivisionError("zero denominator")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (LaurentPoly, int)):
            other = RationalFunction(lp(other), LaurentPoly(1))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"


def _as_rf(x: Any) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(lp(x), LaurentPoly(1))


def rf_normalize_to_laurent(f: RationalFunction) -> LaurentPoly:
    """Return the Laurent polynomial equal to f, or raise NotLaurent."""
    try:
        return lp_exact_div(f.num, f.den)
    except NotDivisible as exc:
        raise NotLaurent(str(exc)) from None


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix ``[[a, b], [c, d]]`` over any commutative ring."""

    a: Any
    b: Any
    c: Any
    d: Any

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]]) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    __mul__ = __matmul__

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            raise ValueError("negative power")
        out, base = Mat2.identity(), self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def det(self) -> Any:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Any:
        return self.a + self.d

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def entry(self, i: int, j: int) -> Any:
        """1-based entry, so ``m.entry(2, 2)`` is the lower-right value."""
        return ((self.a, self.b), (self.c, self.d))[i - 1][j - 1]

    def rows(self) -> list[list[Any]]:
        return [[self.a, self.b], [self.c, self.d]]

    def entries_nonnegative(self) -> bool:
        return min(self.a, self.b, self.c, self.d) >= 0
