"""Independent reference computations used by the tests.

None of these touch the MOY evaluators: the q-identities are checked
directly, the Alexander polynomial comes from the reduced Burau matrix
(sympy determinant), and the Jones polynomial from a Kauffman bracket state
sum over Temperley-Lieb smoothings of the braid closure.
"""
from __future__ import annotations

import itertools

import sympy as sp

from moyeval.qlaurent import (ZERO, LaurentPoly, cyclo_reduce, multiset_degree,
                              multisubsets, qbinom, qint, subsets)


def mono(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(e, c)


# -- q-identities: each returns the list of failing parameter tuples -----------------------

def addition_failures():
    out = []
    for m in range(-8, 9):
        for n in range(-8, 9):
            a = mono(-n) * qint(m) + mono(m) * qint(n)
            b = mono(n) * qint(m) + mono(-m) * qint(n)
            if not qint(m + n) == a == b:
                out.append((m, n))
    return out


def telescoping_failures(tuples):
    out = []
    for a in tuples:
        k = len(a)
        first = sum((mono(sum(a[:h]) - sum(a[h + 1:])) * qint(a[h]) for h in range(k)), ZERO)
        second = sum((mono(-sum(a[:h]) + sum(a[h + 1:])) * qint(a[h]) for h in range(k)), ZERO)
        if not qint(sum(a)) == first == second:
            out.append(tuple(a))
    return out


def product_difference_failures():
    r = range(-6, 7)
    return [(k, m, n) for k in r for m in r for n in r
            if qint(m + k) * qint(n) - qint(m) * qint(n + k) != qint(k) * qint(n - m)]


def pascal_failures():
    return [(n, k) for n in range(-8, 9) for k in range(9)
            if qbinom(n, k) != mono(k) * qbinom(n - 1, k) + mono(k - n) * qbinom(n - 1, k - 1)]


def anti_pascal_rhs(n: int, k: int, exponent) -> LaurentPoly:
    return sum((mono(exponent(n, k, i), (-1) ** (k - i)) * qbinom(n + 1, i) for i in range(k + 1)), ZERO)


def anti_pascal_exponent(n, k, i):
    """Exponent obtained by iterating the Pascal rule k times."""
    return (i - k) * (n + 1) - i


def anti_pascal_failures():
    return [(n, k) for n in range(-8, 9) for k in range(9)
            if qbinom(n, k) != anti_pascal_rhs(n, k, anti_pascal_exponent)]


def vandermonde_failures():
    out = []
    for n1 in range(-5, 6):
        for n2 in range(-5, 6):
            for k in range(6):
                rhs = sum((mono(n1 * (k - k1) - n2 * k1) * qbinom(n1, k1) * qbinom(n2, k - k1)
                           for k1 in range(k + 1)), ZERO)
                if qbinom(n1 + n2, k) != rhs:
                    out.append((n1, n2, k))
    return out


def _as_dict(mult):
    return {x + 1: m for x, m in enumerate(mult) if m}


def subset_generating_failures():
    out = []
    for n in range(7):
        for k in range(7):
            plain = sum((mono(multiset_degree(n, _as_dict(y))) for y in subsets(n, k)), ZERO)
            multi = sum((mono(multiset_degree(n, _as_dict(y))) for y in multisubsets(n, k)), ZERO)
            if plain != qbinom(n, k) or multi * (-1) ** k != qbinom(-n, k):
                out.append((n, k))
    return out


def root_flip_failures(b_max=lambda N: 4):
    out = []
    for N in range(1, 5):
        for a in range(-4, 5):
            for b in range(b_max(N) + 1):
                lhs = cyclo_reduce(qbinom(N - 1 - a, b), N)
                rhs = cyclo_reduce(qbinom(-2 - a, b) * (-1) ** b, N)
                if lhs != rhs:
                    out.append((N, a, b))
    return out


def bar_failures():
    return [(n, k) for n in range(-8, 9) for k in range(9) if qbinom(n, k).bar() != qbinom(n, k)]


# -- sympy conversions ---------------------------------------------------------------------

t_sym = sp.Symbol("t")


def laurent_from_sympy(expr, var, scale: int = 1) -> LaurentPoly:
    """Convert a Laurent polynomial in ``var`` to LaurentPoly with var = q**scale."""
    expr = sp.expand(expr)
    num, den = sp.fraction(sp.together(expr))
    den_poly = sp.Poly(den, var)
    if len(den_poly.terms()) != 1:
        raise ValueError(f"not a Laurent polynomial: {expr}")
    (shift,), dc = den_poly.terms()[0]
    out = ZERO
    for (e,), c in sp.Poly(num, var).terms():
        cc = sp.Rational(c, dc)
        if cc.q != 1:
            raise ValueError(f"non-integral coefficient in {expr}")
        out = out + mono(scale * (e - shift), int(cc))
    return out


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """a = +-q^j b for some j."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    shift = a.min_exp() - b.min_exp()
    return any(a == b.shift(shift) * s for s in (1, -1))


# -- Alexander polynomial from the reduced Burau representation ------------------------------

def burau_matrix(word, strands):
    """Unreduced Burau image of a braid word in Z[t, t^-1]."""
    mat = sp.eye(strands)
    for g in word:
        i = abs(g) - 1
        gen = sp.eye(strands)
        if g > 0:
            gen[i, i], gen[i, i + 1], gen[i + 1, i], gen[i + 1, i + 1] = 1 - t_sym, t_sym, 1, 0
        else:
            gen[i, i], gen[i, i + 1], gen[i + 1, i], gen[i + 1, i + 1] = 0, 1, 1 / t_sym, 1 - 1 / t_sym
        mat = mat * gen
    return mat


def alexander(word, strands) -> LaurentPoly:
    """Alexander polynomial of the closure, in q with t = q^2, up to a unit."""
    if strands == 1:
        return mono(0)
    mat = burau_matrix(word, strands)
    # reduced Burau: drop the last row and column after the standard change of basis
    n = strands
    change = sp.Matrix(n, n, lambda r, c: 1 if c >= r else 0)
    red = (change.inv() * mat * change)[: n - 1, : n - 1]
    det = sp.factor(sp.simplify((sp.eye(n - 1) - red).det()))
    num = sp.cancel(det * (1 - t_sym) / (1 - t_sym ** n))
    return laurent_from_sympy(num, t_sym, scale=2)


# -- Jones polynomial from the Kauffman bracket ----------------------------------------------

def _loops(word, strands, smoothing):
    """Number of loops in the closure of a Temperley-Lieb smoothing."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for level, (g, cup) in enumerate(zip(word, smoothing)):
        i = abs(g) - 1
        for j in range(strands):
            if cup and j in (i, i + 1):
                continue
            union((j, level), (j, level + 1))
        if cup:
            union((i, level), (i + 1, level))
            union((i, level + 1), (i + 1, level + 1))
    top = len(word)
    for j in range(strands):
        union((j, 0), (j, top))
    return len({find((j, lv)) for j in range(strands) for lv in range(top + 1)})


def jones(word, strands) -> LaurentPoly:
    """Jones polynomial of the closure in q, V(t) with t = q^2.

    Kauffman bracket with <sigma> = A id + A^-1 e for positive letters, the
    normalization (-A^3)^{-writhe}, then A = t^{-1/4} = q^{-1/2}.
    Returned as a LaurentPoly in q (half-unit exponents are exact).
    """
    total = ZERO
    loop = -(mono(1) + mono(-1))    # -A^2 - A^-2 with A = q^{-1/2}
    a = mono(sp.Rational(-1, 2))
    a_inv = mono(sp.Rational(1, 2))
    for smoothing in itertools.product((False, True), repeat=len(word)):
        term = mono(0)
        for g, cup in zip(word, smoothing):
            positive = g > 0
            # positive letter: identity gets A, cup-cap gets A^-1; negative swaps them
            term = term * ((a if positive else a_inv) if not cup else (a_inv if positive else a))
        term = term * loop ** (_loops(word, strands, smoothing) - 1)
        total = total + term
    writhe = sum(1 if g > 0 else -1 for g in word)
    factor = mono(sp.Rational(3 * writhe, 2), (-1) ** writhe)    # (-A^3)^{-w}
    return total * factor
