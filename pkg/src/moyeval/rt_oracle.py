"""Algebraic evaluation of closed MOY graphs through exterior powers.

An upward wire of label k carries the q-exterior power of degree k of the
standard (N|M) super vector space; a downward wire carries its dual.  A
basis vector is a pair ``(I, J)``: ``I`` a strictly increasing tuple from
1..N (even vectors) and ``J`` a weakly increasing tuple from N+1..N+M (odd
vectors).  Merges, splits, cups and caps act by explicit linear maps on
these bases, and a closed diagram is the composite scalar.

Nothing here shares code with the coloring evaluators beyond the Laurent
polynomial arithmetic, which keeps the two approaches independent.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable

from .moy_core import Kind, SlicedDiagram
from .qlaurent import ONE, ZERO, LaurentPoly, multiset_degree, qbinom

Basis = tuple  # (I, J)


def pair_count(a: Iterable[int], b: Iterable[int], N: int) -> int:
    """|a < b|: pairs x in a, y in b with x before y, counted with multiplicity.

    Indices 1..N are even, the rest odd.  Within a parity the natural order
    is used; across parities odd indices come first.
    """
    def key(x):
        return (0, x) if x > N else (1, x)
    kb = sorted(key(y) for y in b)
    return sum(1 for x in a for y in kb if key(x) < y)


def binom_stat(j1: Iterable[int], j2: Iterable[int]) -> LaurentPoly:
    """[J1, J2] = product over x of qbinom(J1(x) + J2(x), J2(x))."""
    c1, c2 = Counter(j1), Counter(j2)
    out = ONE
    for x in set(c1) | set(c2):
        out = out * qbinom(c1[x] + c2[x], c2[x])
    return out


@lru_cache(maxsize=None)
def basis(k: int, N: int, M: int) -> tuple[Basis, ...]:
    """Basis of the degree-k exterior power, ordered by #I then I, J."""
    out = []
    for ke in range(0, min(k, N) + 1):
        for I in combinations(range(1, N + 1), ke):
            for J in combinations_with_replacement(range(N + 1, N + M + 1), k - ke):
                out.append((I, J))
    return tuple(out)


class LinearMap:
    """Sparse matrix between tensor products of wire spaces.

    Rows are keyed by input basis tuples (one ``(I, J)`` per wire); each
    maps to a list of ``(output tuple, coefficient)``.
    """

    def __init__(self, rows: dict):
        self.rows = {k: [(o, c) for o, c in v if not c.is_zero()] for k, v in rows.items()}

    def __call__(self, x: tuple) -> list:
        return self.rows.get(x, [])

    def compose(self, first: "LinearMap") -> "LinearMap":
        """``self`` after ``first``."""
        out = {}
        for x, ys in first.rows.items():
            acc: dict = {}
            for y, c in ys:
                for z, d in self(y):
                    acc[z] = acc.get(z, ZERO) + c * d
            out[x] = list(acc.items())
        return LinearMap(out)

    def tensor(self, other: "LinearMap") -> "LinearMap":
        out = {}
        for (x1, ys1), (x2, ys2) in product(self.rows.items(), other.rows.items()):
            out[x1 + x2] = [(y1 + y2, c1 * c2) for (y1, c1), (y2, c2) in product(ys1, ys2)]
        return LinearMap(out)

    def __eq__(self, other):
        keys = set(self.rows) | set(other.rows)
        def norm(rows):
            acc: dict = {}
            for y, c in rows:
                acc[y] = acc.get(y, ZERO) + c
            return {y: c for y, c in acc.items() if not c.is_zero()}
        return all(norm(self(k)) == norm(other(k)) for k in keys)


def identity_map(k: int, N: int, M: int) -> LinearMap:
    return LinearMap({(b,): [((b,), ONE)] for b in basis(k, N, M)})


def _deg(x: Iterable[int], N: int, M: int) -> int:
    return multiset_degree(N + M, list(x)) if N + M else 0


@lru_cache(maxsize=None)
def map_lambda(k: int, l: int, N: int, M: int) -> LinearMap:
    """Merge: b_{I1,J1} (x) b_{I2,J2} -> q^{-|(I1,J1) < (I2,J2)|} b_{I1+I2, J1+J2}."""
    rows = {}
    for b1 in basis(k, N, M):
        for b2 in basis(l, N, M):
            (I1, J1), (I2, J2) = b1, b2
            if set(I1) & set(I2):
                rows[(b1, b2)] = []
                continue
            out = (tuple(sorted(I1 + I2)), tuple(sorted(J1 + J2)))
            e = -pair_count(I1 + J1, I2 + J2, N)
            rows[(b1, b2)] = [((out,), LaurentPoly.monomial(e))]
    return LinearMap(rows)


@lru_cache(maxsize=None)
def map_Y(k: int, l: int, N: int, M: int) -> LinearMap:
    """Split: b_{I,J} -> sum over splittings of [J1,J2] q^{|(I2,J2) < (I1,J1)|} b_{I1,J1} (x) b_{I2,J2}."""
    rows = {}
    for b in basis(k + l, N, M):
        I, J = b
        acc: dict = {}
        for ke in range(0, min(k, len(I)) + 1):
            for I1 in combinations(I, ke):
                I2 = tuple(x for x in I if x not in I1)
                rest = Counter(J)
                for J1 in set(combinations(J, k - ke)):
                    J2c = rest - Counter(J1)
                    J2 = tuple(sorted(J2c.elements()))
                    if len(I2) + len(J2) != l:
                        continue
                    coef = binom_stat(J1, J2) * LaurentPoly.monomial(pair_count(I2 + J2, I1 + J1, N))
                    key = ((I1, J1), (I2, J2))
                    acc[key] = acc.get(key, ZERO) + coef
        rows[(b,)] = list(acc.items())
    return LinearMap(rows)


@lru_cache(maxsize=None)
def map_cup_left(k: int, N: int, M: int) -> LinearMap:
    """Leftward cup: 1 -> sum b_{I,J} (x) b^{I,J}."""
    return LinearMap({(): [((b, b), ONE) for b in basis(k, N, M)]})


@lru_cache(maxsize=None)
def map_cap_left(k: int, N: int, M: int) -> LinearMap:
    """Leftward cap: f (x) x -> f(x)."""
    return LinearMap({(b, b): [((), ONE)] for b in basis(k, N, M)})


@lru_cache(maxsize=None)
def map_cup_right(k: int, N: int, M: int) -> LinearMap:
    """Rightward cup: 1 -> sum q^{deg J - deg I} (-1)^{#J} b^{I,J} (x) b_{I,J}."""
    rows = []
    for b in basis(k, N, M):
        I, J = b
        rows.append(((b, b), LaurentPoly.monomial(_deg(J, N, M) - _deg(I, N, M), (-1) ** len(J))))
    return LinearMap({(): rows})


@lru_cache(maxsize=None)
def map_cap_right(k: int, N: int, M: int) -> LinearMap:
    """Rightward cap: b_{I,J} (x) b^{I,J} -> q^{deg I - deg J} (-1)^{#J}."""
    rows = {}
    for b in basis(k, N, M):
        I, J = b
        rows[(b, b)] = [((), LaurentPoly.monomial(_deg(I, N, M) - _deg(J, N, M), (-1) ** len(J)))]
    return LinearMap(rows)


def piece_map(kind: Kind, labels: tuple, N: int, M: int) -> LinearMap:
    if kind in (Kind.ID_UP, Kind.ID_DOWN):
        return identity_map(labels[0], N, M)
    if kind is Kind.CUP_RL:
        return map_cup_left(labels[0], N, M)
    if kind is Kind.CAP_RL:
        return map_cap_left(labels[0], N, M)
    if kind is Kind.CUP_LR:
        return map_cup_right(labels[0], N, M)
    if kind is Kind.CAP_LR:
        return map_cap_right(labels[0], N, M)
    if kind is Kind.MERGE:
        return map_lambda(labels[0], labels[1], N, M)
    if kind is Kind.SPLIT:
        return map_Y(labels[0], labels[1], N, M)
    raise ValueError(f"no algebraic map for {kind.value}")


def eval_algebraic(d: SlicedDiagram, N: int, M: int) -> LaurentPoly:
    """Scalar of a closed crossing-free diagram, slice by slice."""
    if not d.closed:
        raise ValueError("diagram must be closed")
    if d.n_marked:
        raise ValueError("marked diagrams are not supported")
    vec: dict = {(): ONE}
    for i, sl in enumerate(d.slices):
        maps = [piece_map(p.kind, p.labels, N, M) for p in sl]
        arities = [len(p.bottom()) for p in sl]
        new: dict = {}
        for x, c in vec.items():
            parts, pos = [], 0
            for a in arities:
                parts.append(x[pos:pos + a])
                pos += a
            images = [m(part) for m, part in zip(maps, parts)]
            for combo in product(*images):
                y = tuple(b for out, _ in combo for b in out)
                coef = c
                for _, f in combo:
                    coef = coef * f
                new[y] = new.get(y, ZERO) + coef
        vec = {y: c for y, c in new.items() if not c.is_zero()}
    return vec.get((), ZERO)
