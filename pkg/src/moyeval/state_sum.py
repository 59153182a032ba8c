"""Combinatorial (N|M)-evaluation of closed MOY graphs.

Two evaluators are provided.  ``eval_enum`` lists every coloring and
applies the global weight formulas; ``eval_dp`` sweeps the diagram bottom
to top, carrying the colors of the current horizontal cut and multiplying
local factors.  The second is the fast path; the first is its oracle.

A color of a wire is a pair ``(E, S)``: ``E`` is a bitmask over the even
indices 1..N (bit i-1 for index i) and ``S`` a tuple of multiplicities over
the odd indices 1..M.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterator, Sequence

from .moy_core import (CROSSINGS, EXTREMA, TURNING, Kind, Piece, SlicedDiagram,
                       binomial_weight, rotational, u_stat)
from .qlaurent import ONE, ZERO, LaurentPoly, multisubsets, qbinom, subsets

Color = tuple  # (E bitmask, S multiplicity tuple)


def popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def colors(k: int, N: int, M: int) -> tuple[Color, ...]:
    """All colors of a label-k wire: E-part size ascending, then E colex,
    then S graded lex."""
    out = []
    for ke in range(0, min(k, N) + 1):
        for e in subsets(N, ke):
            mask = sum(1 << i for i, x in enumerate(e) if x)
            for s in multisubsets(M, k - ke):
                out.append((mask, s))
    return tuple(out)


def color_rho_weight(c: Color, N: int, M: int) -> int:
    """Sum over the color's units of N+M-2h+1 (h its index in its family)."""
    mask, s = c
    w = sum(N + M - 2 * (i + 1) + 1 for i in range(N) if mask >> i & 1)
    w += sum(m * (N + M - 2 * (j + 1) + 1) for j, m in enumerate(s))
    return w


# -- reference enumerator ----------------------------------------------------------

def _require_closed_graph(d: SlicedDiagram):
    if not d.closed:
        raise ValueError("diagram must be closed")
    if d.has_crossings:
        raise ValueError("diagram must not contain crossings")


def enumerate_colorings(d: SlicedDiagram, N: int, M: int) -> Iterator[tuple[Color, ...]]:
    """Every (N|M)-coloring, as a tuple of per-edge colors (edge-id order)."""
    _require_closed_graph(d)
    g = d.edges
    n = g.n_edges
    # vertices become checkable once their largest edge id is assigned
    ready = defaultdict(list)
    for v in g.vertices:
        ready[max(v.left, v.right, v.thick)].append(v)
    choice: list = [None] * n

    def ok(v) -> bool:
        (el, sl), (er, sr), (et, st) = choice[v.left], choice[v.right], choice[v.thick]
        if el & er or el | er != et:
            return False
        return all(a + b == t for a, b, t in zip(sl, sr, st))

    def rec(i):
        if i == n:
            yield tuple(choice)
            return
        for c in colors(g.labels[i], N, M):
            choice[i] = c
            if all(ok(v) for v in ready[i]):
                yield from rec(i + 1)
        choice[i] = None

    yield from rec(0)


def sub_labelings(coloring: Sequence[Color], N: int, M: int):
    """The E- and S-sub-labelings (lists of per-edge label tuples)."""
    E = [tuple(c[0] >> i & 1 for c in coloring) for i in range(N)]
    S = [tuple(c[1][j] for c in coloring) for j in range(M)]
    return E, S


def weight_of(d: SlicedDiagram, coloring: Sequence[Color], N: int, M: int) -> LaurentPoly:
    """Signed weight of one coloring from the global formulas."""
    E, S = sub_labelings(coloring, N, M)
    ws = 0
    for i in range(M):
        for j in range(i + 1, M):
            ws += u_stat(d, S[j], S[i])
    for i in range(N):
        for j in range(i + 1, N):
            ws -= u_stat(d, E[j], E[i])
    # mixed term taken as u(S_j, E_i): the sign every local relation needs
    for i in range(N):
        for j in range(M):
            ws += u_stat(d, S[j], E[i])
    wr = sum((N + M - 2 * i + 1) * rotational(d, E[i - 1]) for i in range(1, N + 1))
    wr += sum((N + M - 2 * j + 1) * rotational(d, S[j - 1]) for j in range(1, M + 1))
    s = sum(rotational(d, S[j]) for j in range(M))
    if wr.denominator != 1 or s.denominator != 1:
        raise ArithmeticError(f"non-integral weight: w_rho={wr}, s={s}")
    mult = ONE
    for j in range(M):
        mult = mult * binomial_weight(d, S[j])
    sign = -1 if int(s) % 2 else 1
    return mult.mul_monomial(2 * (ws + int(wr)), sign)


def eval_enum(d: SlicedDiagram, N: int, M: int) -> LaurentPoly:
    total = ZERO
    for c in enumerate_colorings(d, N, M):
        total = total + weight_of(d, c, N, M)
    return total


# -- local tables for the transfer sweep ------------------------------------------------

def split_exponent(left: Color, right: Color, N: int, M: int) -> int:
    """Contribution of one split vertex to the s-weight."""
    le, ls = left
    re_, rs = right
    aE = [le >> i & 1 for i in range(N)]
    bE = [re_ >> i & 1 for i in range(N)]
    e = 0
    for i in range(M):
        for j in range(i + 1, M):
            e += ls[i] * rs[j] - ls[j] * rs[i]
    for i in range(N):
        for j in range(i + 1, N):
            e -= aE[i] * bE[j] - aE[j] * bE[i]
    for i in range(N):
        for j in range(M):
            e += aE[i] * rs[j] - ls[j] * bE[i]
    return e


@lru_cache(maxsize=None)
def _split_mult(left_s: tuple, right_s: tuple) -> LaurentPoly:
    out = ONE
    for a, b in zip(left_s, right_s):
        if a and b:
            out = out * qbinom(a + b, b)
    return out


def _extremum_table(kind: Kind, k: int, N: int, M: int):
    t = TURNING[kind]
    signed = kind in (Kind.CUP_LR, Kind.CAP_LR)
    rows = []
    for c in colors(k, N, M):
        sign = -1 if signed and sum(c[1]) % 2 else 1
        rows.append((c, LaurentPoly.from_half({t * color_rho_weight(c, N, M): sign})))
    return rows


@lru_cache(maxsize=None)
def local_table(kind: Kind, labels: tuple, N: int, M: int) -> dict:
    """Map from the piece's bottom colors to a list of (top colors, factor)."""
    table = defaultdict(list)
    if kind in (Kind.ID_UP, Kind.ID_DOWN):
        for c in colors(labels[0], N, M):
            table[(c,)].append(((c,), ONE))
    elif kind in (Kind.CUP_LR, Kind.CUP_RL):
        for c, f in _extremum_table(kind, labels[0], N, M):
            table[()].append(((c, c), f))
    elif kind in (Kind.CAP_LR, Kind.CAP_RL):
        for c, f in _extremum_table(kind, labels[0], N, M):
            table[(c, c)].append(((), f))
    elif kind is Kind.MERGE:
        a, b, _ = labels
        for cl in colors(a, N, M):
            for cr in colors(b, N, M):
                if cl[0] & cr[0]:
                    continue
                top = (cl[0] | cr[0], tuple(x + y for x, y in zip(cl[1], cr[1])))
                table[(cl, cr)].append(((top,), ONE))
    elif kind is Kind.SPLIT:
        a, b, _ = labels
        for cl in colors(a, N, M):
            for cr in colors(b, N, M):
                if cl[0] & cr[0]:
                    continue
                top = (cl[0] | cr[0], tuple(x + y for x, y in zip(cl[1], cr[1])))
                f = _split_mult(cl[1], cr[1]).mul_monomial(2 * split_exponent(cl, cr, N, M))
                table[(top,)].append(((cl, cr), f))
    elif kind in CROSSINGS:
        table = crossing_table(kind, labels, N, M)
    else:  # pragma: no cover
        raise ValueError(kind)
    return dict(table)


def crossing_terms(kind: Kind, n: int, m: int) -> list[tuple[LaurentPoly, list[list[Piece]]]]:
    """Expansion of one crossing (bottom labels n, m) as signed ladders."""
    terms = []
    for k in range(max(0, m - n), m + 1):
        sign = -1 if (m - k) % 2 else 1
        e = k - m if kind is Kind.CROSS_POS else m - k
        ladder = [
            [Piece(Kind.ID_UP, (n,)), Piece.split(k, m - k)],
            [Piece.merge(n, k), Piece(Kind.ID_UP, (m - k,))],
            [Piece.split(m, n + k - m), Piece(Kind.ID_UP, (m - k,))],
            [Piece(Kind.ID_UP, (m,)), Piece.merge(n + k - m, m - k)],
        ]
        terms.append((LaurentPoly.from_half({2 * e: sign}), ladder))
    return terms


@lru_cache(maxsize=None)
def crossing_table(kind: Kind, labels: tuple, N: int, M: int) -> dict:
    """Local table of a crossing, summed over its ladder expansion."""
    n, m = labels
    acc: dict = defaultdict(lambda: defaultdict(int))
    for coef, ladder in crossing_terms(kind, n, m):
        for cl in colors(n, N, M):
            for cr in colors(m, N, M):
                out = transfer(ladder, {(cl, cr): {0: 1}}, N, M)
                for top, val in out.items():
                    poly = LaurentPoly.from_half(val) * coef
                    for e2, v in poly.half_coeffs.items():
                        acc[(cl, cr, top)][e2] += v
    result = defaultdict(list)
    for (cl, cr, top), poly in acc.items():
        p = LaurentPoly.from_half(poly)
        if not p.is_zero():
            result[(cl, cr)].append((top, p))
    return dict(result)


# -- transfer sweep ----------------------------------------------------------------------

def _apply_piece(states: dict, p: Piece, offset: int, nb: int, N: int, M: int) -> dict:
    table = local_table(p.kind, p.labels, N, M)
    new: dict = {}
    for state, val in states.items():
        rows = table.get(state[offset:offset + nb])
        if not rows:
            continue
        head, tail = state[:offset], state[offset + nb:]
        for top, f in rows:
            ns = head + top + tail
            acc = new.get(ns)
            if acc is None:
                acc = new[ns] = {}
            for e1, c1 in val.items():
                for e2, c2 in f._c.items():
                    acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
    return {s: {e: c for e, c in v.items() if c} for s, v in new.items() if any(v.values())}


def transfer(slices: Sequence[Sequence[Piece]], states: dict, N: int, M: int,
             marked_wire: tuple[int, int] | None = None) -> dict:
    """Push a map ``bottom colors -> {half exponent: coeff}`` through slices.

    ``marked_wire`` is ``(interface, position)``; states with a non-empty
    E-part on that wire are discarded.
    """
    def mark(states, iface):
        if marked_wire is None or marked_wire[0] != iface:
            return states
        pos = marked_wire[1]
        return {s: v for s, v in states.items() if s[pos][0] == 0}

    states = mark(states, 0)
    for i, sl in enumerate(slices):
        offset = 0
        for p in sl:
            nb = len(p.bottom())
            states = _apply_piece(states, p, offset, nb, N, M)
            offset += len(p.top())
        states = mark(states, i + 1)
    return states


def eval_dp(d: SlicedDiagram, N: int, M: int, marked: bool = False) -> LaurentPoly:
    """Transfer-matrix evaluation.  Crossing pieces are expanded inline."""
    if not d.closed:
        raise ValueError("diagram must be closed")
    mw = d.marked_wire if marked else None
    if marked and mw is None:
        raise ValueError("diagram has no marked point")
    out = transfer(d.slices, {(): {0: 1}}, N, M, mw)
    return LaurentPoly.from_half(out.get((), {}))


def eval_marked(d: SlicedDiagram, N: int) -> LaurentPoly:
    """Marked (N|1)-evaluation: colorings whose marked wire has no E-part."""
    if d.marked_wire is None:
        raise ValueError("diagram has no marked point")
    return eval_dp(d, N, 1, marked=True)
