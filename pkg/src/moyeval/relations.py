"""Local MOY relations as pattern-in-context checks.

A relation is a linear identity between open tangles with the same bottom
and top boundary.  It is checked by gluing every term into the same closed
context: a random boundary-preserving tangle below, a fixed completion
tangle above that brings the top boundary back to the bottom one, and a
trace closure on the right.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .generators import identity_row
from .moy_core import DOWN, UP, Kind, Piece, SlicedDiagram, check, piece
from .qlaurent import ONE, ZERO, LaurentPoly, qbinom, qint

Rows = list[list[Piece]]
Wires = tuple[tuple[int, int], ...]


def rows_of(*specs: str) -> Rows:
    """Rows from comma-separated piece tokens, e.g. ``rows_of("I^ 1, S 1 1")``."""
    return [[piece(tok.strip()) for tok in spec.split(",")] for spec in specs]


@dataclass
class Relation:
    """sum(lhs) = sum(rhs) as tangles from ``bottom`` to ``top``."""

    name: str
    bottom: Wires
    top: Wires
    lhs: list[tuple[LaurentPoly, Rows]]
    rhs: list[tuple[LaurentPoly, Rows]]
    completion: Rows = field(default_factory=list)   # top -> bottom


def trace_closure(rows: Rows, wires: Wires) -> SlicedDiagram:
    """Close a tangle with equal bottom and top boundary ``wires`` on the right."""
    n = len(wires)
    back = [(lab, -d) for lab, d in reversed(wires)]
    slices = []
    for j in range(n):
        lab, d = wires[j]
        cup = Piece(Kind.CUP_RL if d == UP else Kind.CUP_LR, (lab,))
        slices.append(identity_row(wires[:j]) + [cup] + identity_row(back[n - j:]))
    closure = identity_row(back)
    for r in rows:
        slices.append(list(r) + closure)
    for j in reversed(range(n)):
        lab, d = wires[j]
        cap = Piece(Kind.CAP_LR if d == UP else Kind.CAP_RL, (lab,))
        slices.append(identity_row(wires[:j]) + [cap] + identity_row(back[n - j:]))
    return check(SlicedDiagram(tuple(tuple(s) for s in slices)), require_closed=True)


# -- random boundary-preserving contexts ---------------------------------------------------

def _pad(rows: Rows, before: Wires, after: Wires) -> Rows:
    return [identity_row(before) + r + identity_row(after) for r in rows]


def move_left_to_right(l: int, r: int, b: int) -> Rows:
    """Rung of label b from the left strand to the right one: [l, r] -> [l-b, r+b]."""
    return [[Piece.split(l - b, b), Piece(Kind.ID_UP, (r,))],
            [Piece(Kind.ID_UP, (l - b,)), Piece.merge(b, r)]]


def move_right_to_left(l: int, r: int, a: int) -> Rows:
    """Rung of label a from the right strand to the left one: [l, r] -> [l+a, r-a]."""
    return [[Piece(Kind.ID_UP, (l,)), Piece.split(a, r - a)],
            [Piece.merge(l, a), Piece(Kind.ID_UP, (r - a,))]]


def random_context(rng: random.Random, wires: Wires, depth: int = 2) -> Rows:
    """Random tangle from ``wires`` to ``wires`` built from bubbles and ladders."""
    rows: Rows = []
    for _ in range(rng.randint(0, depth)):
        ups = [i for i, (lab, d) in enumerate(wires) if d == UP]
        choices = []
        for i in ups:
            if wires[i][0] >= 2:
                choices.append(("bubble", i))
            if i + 1 < len(wires) and wires[i + 1][1] == UP:
                choices.append(("ladder", i))
        if not choices:
            break
        kind, i = rng.choice(choices)
        before, after = wires[:i], wires[i + 2 if kind == "ladder" else i + 1:]
        if kind == "bubble":
            c = wires[i][0]
            a = rng.randint(1, c - 1)
            rows += _pad([[Piece.split(a, c - a)], [Piece.merge(a, c - a)]], before, after)
        else:
            l, r = wires[i][0], wires[i + 1][0]
            if r and rng.random() < 0.5:
                a = rng.randint(1, r)
                rows += _pad(move_right_to_left(l, r, a) + move_left_to_right(l + a, r - a, a),
                             before, after)
            elif l:
                b = rng.randint(1, l)
                rows += _pad(move_left_to_right(l, r, b) + move_right_to_left(l - b, r + b, b),
                             before, after)
    return rows


def instantiate(rel: Relation, context: Rows) -> tuple[list, list]:
    """Closed diagrams for both sides of ``rel`` in ``context``."""
    def close(rows):
        return trace_closure(context + rows + rel.completion, rel.bottom)
    return ([(c, close(r)) for c, r in rel.lhs], [(c, close(r)) for c, r in rel.rhs])


def check_relation(rel: Relation, context: Rows, evaluate: Callable, N: int, M: int,
                   mirror: bool = False) -> bool:
    """Both sides agree in ``context``; with ``mirror`` the reflected
    relation is checked (mirrored diagrams, coefficients with q -> 1/q)."""
    left, right = instantiate(rel, context)

    def side(terms):
        if mirror:
            return sum((c.bar() * evaluate(d.mirror(), N, M) for c, d in terms), ZERO)
        return sum((c * evaluate(d, N, M) for c, d in terms), ZERO)
    return side(left) == side(right)


# -- the relation families ------------------------------------------------------------------

def U(k):
    return (k, UP)


def D(k):
    return (k, DOWN)


def associativity_split(a, b, c) -> Relation:
    return Relation(
        f"assoc-split({a},{b},{c})", (U(a + b + c),), (U(a), U(b), U(c)),
        [(ONE, rows_of(f"S {a + b} {c}", f"S {a} {b}, I^ {c}"))],
        [(ONE, rows_of(f"S {a} {b + c}", f"I^ {a}, S {b} {c}"))],
        rows_of(f"M {a} {b}, I^ {c}", f"M {a + b} {c}"))


def associativity_merge(a, b, c) -> Relation:
    return Relation(
        f"assoc-merge({a},{b},{c})", (U(a), U(b), U(c)), (U(a + b + c),),
        [(ONE, rows_of(f"M {a} {b}, I^ {c}", f"M {a + b} {c}"))],
        [(ONE, rows_of(f"I^ {a}, M {b} {c}", f"M {a} {b + c}"))],
        rows_of(f"S {a + b} {c}", f"S {a} {b}, I^ {c}"))


def digon(m, n) -> Relation:
    """Split then merge: qbinom(m+n, m) times the strand (n=1 gives [m+1])."""
    return Relation(
        f"digon({m},{n})", (U(m + n),), (U(m + n),),
        [(ONE, rows_of(f"S {m} {n}", f"M {m} {n}"))],
        [(qbinom(m + n, m), rows_of(f"I^ {m + n}"))])


def square_merge(x, r, s) -> Relation:
    return Relation(
        f"square-merge({x},{r},{s})", (U(x), U(r + s)), (U(x + r + s),),
        [(ONE, rows_of(f"I^ {x}, S {r} {s}", f"M {x} {r}, I^ {s}", f"M {x + r} {s}"))],
        [(qbinom(r + s, r), rows_of(f"M {x} {r + s}"))],
        rows_of(f"S {x} {r + s}"))


def dual_digon(m, n, N, M, left: bool = False) -> Relation:
    """Loop of label n on an upward strand of label m: qbinom(N-M-m, n)."""
    if left:
        rows = rows_of(f"U> {n}, I^ {m}", f"Iv {n}, M {n} {m}", f"Iv {n}, S {n} {m}",
                       f"C< {n}, I^ {m}")
    else:
        rows = rows_of(f"I^ {m}, U< {n}", f"M {m} {n}, Iv {n}", f"S {m} {n}, Iv {n}",
                       f"I^ {m}, C> {n}")
    side = "left" if left else "right"
    return Relation(f"dual-digon-{side}({m},{n})", (U(m),), (U(m),),
                    [(ONE, rows)], [(qbinom(N - M - m, n), rows_of(f"I^ {m}"))])


def circle(k, N, M, ccw: bool = True) -> Relation:
    rows = rows_of(f"U> {k}", f"C< {k}") if ccw else rows_of(f"U< {k}", f"C> {k}")
    return Relation(f"circle-{'ccw' if ccw else 'cw'}({k})", (), (), [(ONE, rows)],
                    [(qbinom(N - M, k), [])])


def _ef(l, r, a, b) -> Rows:
    """F^(b) (left to right) on [l, r] followed by E^(a) (right to left)."""
    return move_left_to_right(l, r, b) + move_right_to_left(l - b, r + b, a)


def _fe(l, r, a, b) -> Rows:
    """E^(a) on [l, r] followed by F^(b)."""
    return move_right_to_left(l, r, a) + move_left_to_right(l + a, r - a, b)


def general_square(l, r, a, b) -> Relation:
    """E^(a) F^(b) = sum_t qbinom(a-b+l-r, t) F^(b-t) E^(a-t) on strands [l, r]."""
    lam = l - r
    rhs = []
    for t in range(0, min(a, b) + 1):
        if a - t <= r and b - t <= l + a - t:
            rhs.append((qbinom(a - b + lam, t), _fe(l, r, a - t, b - t)))
    top = (U(l - b + a), U(r + b - a))
    if a >= b:
        completion = move_left_to_right(l - b + a, r + b - a, a - b)
    else:
        completion = move_right_to_left(l - b + a, r + b - a, b - a)
    return Relation(f"general-square({l},{r};{a},{b})", (U(l), U(r)), top,
                    [(ONE, _ef(l, r, a, b))], rhs, completion)


def easy_square(l, r) -> Relation:
    """Moving one unit right-to-left and back, versus left-to-right and back:
    the difference is [r-l] times the identity."""
    return Relation(f"easy-square({l},{r})", (U(l), U(r)), (U(l), U(r)),
                    [(ONE, _fe(l, r, 1, 1))],
                    [(qint(r - l), rows_of(f"I^ {l}, I^ {r}")), (ONE, _ef(l, r, 1, 1))])


# Down-oriented vertices as upward vertices wrapped in cups and caps.

def split_down(a, b) -> Rows:
    """From [d a, d b] to [d a+b]."""
    s = a + b
    return rows_of(f"U> {s}, Iv {a}, Iv {b}", f"Iv {s}, S {b} {a}, Iv {a}, Iv {b}",
                   f"Iv {s}, I^ {b}, C> {a}, Iv {b}", f"Iv {s}, C> {b}")


def merge_down(x, y) -> Rows:
    """From [d x+y] to [d y, d x]."""
    s = x + y
    return rows_of(f"U> {y}, Iv {s}", f"Iv {y}, U> {x}, I^ {y}, Iv {s}",
                   f"Iv {y}, Iv {x}, M {x} {y}, Iv {s}", f"Iv {y}, Iv {x}, C> {s}")


def bad_square(l, r, N, M) -> Relation:
    """Antiparallel strands [up l, down r] exchanging one unit through a
    square, one way versus the other: difference [N-M-l-r] times the identity."""
    gam = (_pad(rows_of(f"U< 1"), (U(l),), (D(r),))
           + _pad(split_down(1, r), (U(l), U(1)), ())
           + _pad(rows_of(f"M {l} 1"), (), (D(r + 1),))
           + _pad(rows_of(f"S {l} 1"), (), (D(r + 1),))
           + _pad(merge_down(r, 1), (U(l), U(1)), ())
           + _pad(rows_of("C> 1"), (U(l),), (D(r),)))
    phi = (_pad(rows_of(f"S {l - 1} 1"), (), (D(r),))
           + _pad(merge_down(r - 1, 1), (U(l - 1), U(1)), ())
           + _pad(rows_of("C> 1"), (U(l - 1),), (D(r - 1),))
           + _pad(rows_of("U< 1"), (U(l - 1),), (D(r - 1),))
           + _pad(split_down(1, r - 1), (U(l - 1), U(1)), ())
           + _pad(rows_of(f"M {l - 1} 1"), (), (D(r),)))
    return Relation(f"bad-square({l},{r})", (U(l), D(r)), (U(l), D(r)),
                    [(ONE, gam)],
                    [(qint(N - M - l - r), rows_of(f"I^ {l}, Iv {r}")), (ONE, phi)])


def bend(rows: Rows, a: int, b: int) -> Rows:
    """Turn a tangle [up a, down b] -> [up a, down b] by a quarter:
    the result goes from [down a, up a] to [down b, up b]."""
    return ([[Piece(Kind.ID_DOWN, (a,)), Piece(Kind.ID_UP, (a,)), Piece(Kind.CUP_LR, (b,))]]
            + _pad(rows, (D(a),), (U(b),))
            + [[Piece(Kind.CAP_RL, (a,)), Piece(Kind.ID_DOWN, (b,)), Piece(Kind.ID_UP, (b,))]])


def bent_square(m, N, M) -> Relation:
    """Square between a label-1 and a label-m antiparallel strand, seen with
    its rungs vertical: the coefficient [N-M-m-1] moves to the H-shaped term."""
    bs = bad_square(1, m, N, M)
    (_, gam), = bs.lhs
    (coef, ident), (_, phi) = bs.rhs
    return Relation(f"bent-square({m})", (D(1), U(1)), (D(m), U(m)),
                    [(ONE, bend(gam, 1, m))],
                    [(coef, bend(ident, 1, m)), (ONE, bend(phi, 1, m))],
                    rows_of(f"C< {m}", f"U> 1"))


def thin_square(m, n) -> Relation:
    """Rungs of label n between strands m and 1: the two surviving terms
    carry qbinom(m-1, n) and qbinom(m-1, n-1)."""
    rel = general_square(m, 1, n, n)
    rel.name = f"thin-square({m},{n})"
    return rel


def catalogue(N: int, M: int, max_label: int = 2) -> list[Relation]:
    """Every relation family at small labels."""
    L = max_label
    out: list[Relation] = []
    for k in range(0, L + 2):
        out += [circle(k, N, M, True), circle(k, N, M, False)]
    for a in range(L + 1):
        for b in range(L + 1):
            for c in range(L + 1):
                if 0 < a + b + c <= L + 1:
                    out += [associativity_split(a, b, c), associativity_merge(a, b, c)]
    for m in range(L + 1):
        for n in range(L + 1):
            out.append(digon(m, n))
            out += [dual_digon(m, n, N, M), dual_digon(m, n, N, M, left=True)]
    for x in range(L):
        for r in range(L):
            for t in range(L):
                out.append(square_merge(x, r, t))
    for l in range(1, L + 1):
        for r in range(1, L + 1):
            out += [easy_square(l, r), bad_square(l, r, N, M)]
    for l in range(L + 1):
        for r in range(L + 1):
            for a in range(r + 1):
                for b in range(l + 1):
                    out.append(general_square(l, r, a, b))
    for m in range(1, L + 1):
        out.append(bent_square(m, N, M))
        for n in range(1, m + 1):
            out.append(thin_square(m, n))
    return out
