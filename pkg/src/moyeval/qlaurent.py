"""Exact Laurent polynomials in q, quantum integers and binomials, multisets,
and arithmetic modulo cyclotomic polynomials.

Exponents are stored in half-units: the key ``e2`` stands for ``q**(e2/2)``.
Only polynomials whose exponents are all integral may be rendered.
"""
from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        # integer exponents -> coefficients
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[2 * int(e)] = c.get(2 * int(e), 0) + v
        self._c = {k: v for k, v in c.items() if v}
        self._hash = None

    @classmethod
    def from_half(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = {k: v for k, v in coeffs.items() if v}
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent=0, coeff: int = 1) -> "LaurentPoly":
        """``coeff * q**exponent``; the exponent may be a half-integer."""
        e2 = Fraction(exponent) * 2
        if e2.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
        return cls.from_half({int(e2): coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.from_half({0: c})

    # -- inspection -------------------------------------------------------

    @property
    def half_coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coeffs(self) -> dict[int, int]:
        """Integer-exponent view; raises if a half-integer exponent remains."""
        if not self.is_integral():
            raise ValueError("polynomial has half-integer exponents")
        return {k // 2: v for k, v in self._c.items()}

    def is_integral(self) -> bool:
        return all(k % 2 == 0 for k in self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self) -> Fraction:
        return Fraction(min(self._c), 2)

    def max_exp(self) -> Fraction:
        return Fraction(max(self._c), 2)

    def terms(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(k, 2), v) for k, v in sorted(self._c.items())]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly.from_half(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly.from_half({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._c) == 1:
            (k2, v2), = other._c.items()
            return self.mul_monomial(k2, v2)
        if len(self._c) == 1:
            (k1, v1), = self._c.items()
            return other.mul_monomial(k1, v1)
        c: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly.from_half(c)

    __rmul__ = __mul__

    def mul_monomial(self, e2: int, coeff: int = 1) -> "LaurentPoly":
        """Multiply by ``coeff * q**(e2/2)``."""
        if coeff == 0:
            return ZERO
        return LaurentPoly.from_half({k + e2: v * coeff for k, v in self._c.items()})

    def shift(self, exponent) -> "LaurentPoly":
        return self.mul_monomial(int(Fraction(exponent) * 2))

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials have inverses")
            (k, v), = self._c.items()
            return LaurentPoly.from_half({k * n: v ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "LaurentPoly":
        return LaurentPoly.from_half({-k: v for k, v in self._c.items()})

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division from the top degree; quotient coefficients must be integral."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        top_d = max(other._c)
        lead = other._c[top_d]
        low_d = min(other._c)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - top_d < min(self._c, default=0) - low_d:
                break
            c = rem[top]
            if c % lead:
                break
            f = c // lead
            shift = top - top_d
            quot[shift] = f
            for k, v in other._c.items():
                kk = k + shift
                nv = rem.get(kk, 0) - f * v
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return LaurentPoly.from_half(quot), LaurentPoly.from_half(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"non-exact division: ({self}) / ({other}) leaves {r}")
        return q

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- evaluation / rendering -------------------------------------------

    def eval_complex(self, q0: complex) -> complex:
        if q0 == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        root = cmath.sqrt(complex(q0))
        return sum(v * root ** k for k, v in self._c.items())

    def __str__(self):
        if not self._c:
            return "0"
        if not self.is_integral():
            raise ValueError("cannot render a polynomial with half-integer exponents")
        parts = []
        for k in sorted(self._c):
            e, v = k // 2, self._c[k]
            if e == 0:
                parts.append(str(v))
            elif e == 1:
                parts.append(f"{v}*q")
            else:
                parts.append(f"{v}*q^{e}")
        return " + ".join(parts)

    def __repr__(self):
        if self.is_integral():
            return f"LaurentPoly('{self}')"
        return f"LaurentPoly.from_half({dict(sorted(self._c.items()))})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)

_TERM = re.compile(r"^([+-]?\d+)(?:\*q(?:\^([+-]?\d+))?)?$")


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical rendering, e.g. ``-1*q^-2 + 2 + 1*q^4``."""
    text = text.strip()
    if text == "0":
        return ZERO
    coeffs: dict[int, int] = {}
    for i, raw in enumerate(text.split(" + ")):
        m = _TERM.match(raw.strip())
        if not m:
            raise ValueError(f"bad polynomial term {raw!r} at position {i}")
        c = int(m.group(1))
        if "*q" in raw:
            e = int(m.group(2)) if m.group(2) is not None else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)


# -- quantum numbers --------------------------------------------------------

@lru_cache(maxsize=None)
def qint(n: int) -> LaurentPoly:
    """Quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
    if n > 0:
        return LaurentPoly({-1 - n + 2 * i: 1 for i in range(1, n + 1)})
    if n == 0:
        return ZERO
    return -qint(-n)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Quantum binomial, via exact division of the defining product."""
    if k < 0:
        return ZERO
    num = ONE
    for i in range(k):
        num = num * qint(n - i)
    if num.is_zero():
        return ZERO
    den = ONE
    for i in range(1, k + 1):
        den = den * qint(i)
    return num.exact_div(den)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


# -- multisets --------------------------------------------------------------

def as_multiplicities(y, bound: int) -> tuple[int, ...]:
    """Normalize a multiset (mapping element->mult, or iterable of elements)
    over ``1..bound`` into a tuple of multiplicities."""
    mult = [0] * bound
    items = y.items() if isinstance(y, Mapping) else ((x, 1) for x in y)
    for x, m in items:
        if not 1 <= x <= bound:
            raise ValueError(f"element {x} outside ground set 1..{bound}")
        if m < 0:
            raise ValueError(f"negative multiplicity for {x}")
        mult[x - 1] += m
    return tuple(mult)


def multiset_degree(n: int, y) -> int:
    """Degree of the multiset ``y`` in the ordered set 1..n.

    Every ground element x contributes (#y above x) - (#y below x).  For
    plain subsets the elements of ``y`` cancel pairwise, so restricting x to
    the complement gives the same value; for multisets only the unrestricted
    sum has the multiset generating function qbinom(-n, k) (up to sign).
    """
    mult = as_multiplicities(y, n)
    deg = 0
    for x in range(1, n + 1):
        deg += sum(mult[x:])        # y > x
        deg -= sum(mult[:x - 1])    # y < x
    return deg


def subsets(n: int, k: int) -> Iterable[tuple[int, ...]]:
    """k-subsets of 1..n as multiplicity tuples, colex order."""
    if k < 0 or k > n:
        return
    if n == 0:
        yield ()
        return
    # colex: subsets not containing n first
    yield from (s + (0,) for s in subsets(n - 1, k))
    yield from (s + (1,) for s in subsets(n - 1, k - 1))


def multisubsets(n: int, k: int) -> Iterable[tuple[int, ...]]:
    """k-multisubsets of 1..n as multiplicity tuples, graded lex order."""
    if k < 0:
        return
    if n == 0:
        if k == 0:
            yield ()
        return
    for first in range(k, -1, -1):
        for rest in multisubsets(n - 1, k - first):
            yield (first,) + rest


# -- cyclotomic arithmetic --------------------------------------------------

def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Ordinary integer polynomials as ascending coefficient lists; den monic."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, d in enumerate(den):
                num[i - dd + j] -= c * d
    rem = num[:dd] if dd else []
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic(d)))
            assert not rem
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class CyclotomicElt:
    """Element of Z[q]/Phi_{2(N+1)}(q), i.e. a polynomial evaluated at
    q = exp(i*pi/(N+1))."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int]):
        self.order = order
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic(2 * (self.order + 1))

    def _check(self, other):
        if not isinstance(other, CyclotomicElt) or other.order != self.order:
            raise TypeError("cyclotomic elements of different orders")

    def __eq__(self, other):
        if not isinstance(other, CyclotomicElt):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            a[i] += v
        return CyclotomicElt(self.order, a)

    def __mul__(self, other):
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return CyclotomicElt(self.order, ())
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        _, rem = _poly_divmod(prod, list(self.modulus))
        return CyclotomicElt(self.order, rem)

    def is_zero(self) -> bool:
        return not self.coeffs

    def value(self) -> complex:
        q0 = cmath.exp(1j * cmath.pi / (self.order + 1))
        return sum(c * q0 ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"CyclotomicElt(order={self.order}, coeffs={self.coeffs})"


def cyclo_reduce(p: LaurentPoly, n: int) -> CyclotomicElt:
    """Reduce ``p`` at q = exp(i*pi/(n+1)); q^(2(n+1)) = 1 clears negative powers."""
    c = p.coeffs()
    period = 2 * (n + 1)
    if not c:
        return CyclotomicElt(n, ())
    lo = min(c)
    t = (-lo + period - 1) // period if lo < 0 else 0
    shift = t * period
    dense = [0] * (max(c) + shift + 1)
    for e, v in c.items():
        dense[e + shift] += v
    _, rem = _poly_divmod(dense, list(cyclotomic(period)))
    return CyclotomicElt(n, rem)


def eval_complex(p: LaurentPoly, q0: complex) -> complex:
    return p.eval_complex(q0)
