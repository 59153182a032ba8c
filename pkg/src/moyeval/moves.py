"""Reidemeister move pairs and skein triples for labeled link diagrams."""
from __future__ import annotations

import random

from .moy_core import Kind, Piece, SlicedDiagram, expand_braid
from .relations import Rows, Wires, _pad, trace_closure


def _cross(sign: int, n: int, m: int) -> Piece:
    return Piece(Kind.CROSS_POS if sign > 0 else Kind.CROSS_NEG, (n, m))


def _id(k: int) -> Piece:
    return Piece(Kind.ID_UP, (k,))


def kink(label: int, sign: int, side: str) -> Rows:
    """A curl on an upward strand, on its right or left, with a crossing of ``sign``."""
    a = label
    if side == "right":
        return [[_id(a), Piece(Kind.CUP_RL, (a,))],
                [_cross(sign, a, a), Piece(Kind.ID_DOWN, (a,))],
                [_id(a), Piece(Kind.CAP_LR, (a,))]]
    return [[Piece(Kind.CUP_LR, (a,)), _id(a)],
            [Piece(Kind.ID_DOWN, (a,)), _cross(sign, a, a)],
            [Piece(Kind.CAP_RL, (a,)), _id(a)]]


def braid_rows(word, labels) -> Rows:
    """Rows of a braid word on upward strands with the given bottom labels."""
    labels = list(labels)
    rows = []
    for g in word:
        i = abs(g) - 1
        row = [_id(k) for k in labels[:i]]
        row.append(_cross(1 if g > 0 else -1, labels[i], labels[i + 1]))
        row += [_id(k) for k in labels[i + 2:]]
        rows.append(row)
        labels[i], labels[i + 1] = labels[i + 1], labels[i]
    return rows


def full_twist(labels) -> Rows:
    """Pure braid context (sigma_1 ... sigma_{n-1})^n: links every pair of strands."""
    n = len(labels)
    return braid_rows(list(range(1, n)) * n, labels)


def _close(rows: Rows, labels) -> SlicedDiagram:
    wires: Wires = tuple((k, 1) for k in labels)
    return trace_closure(rows, wires)


def move_pairs(max_label: int = 2) -> list[tuple[str, SlicedDiagram, SlicedDiagram]]:
    """Curated (name, before, after) pairs of isotopic labeled link diagrams."""
    out = []
    labs = range(1, max_label + 1)
    for a in labs:
        for b in labs:
            ctx = full_twist([a, b])
            for sign in (1, -1):
                for side in ("right", "left"):
                    out.append((f"R1{'+' if sign > 0 else '-'}{side}({a};{b})",
                                _close(ctx + _pad(kink(a, sign, side), (), ((b, 1),)), [a, b]),
                                _close(ctx, [a, b])))
                # braid-like R2 on the context strands
                out.append((f"R2{'+-' if sign > 0 else '-+'}({a},{b})",
                            _close(ctx + braid_rows([sign, -sign], [a, b]), [a, b]),
                            _close(ctx, [a, b])))
    for a in labs:
        for b in labs:
            for c in labs:
                for sign in (1, -1):
                    # a positive half twist after the move makes the braid pure
                    s = sign
                    out.append((f"R3{'+' if s > 0 else '-'}({a},{b},{c})",
                                expand_braid([s, 2 * s, s, 1, 2, 1], 3, labels=[a, b, c]),
                                expand_braid([2 * s, s, 2 * s, 1, 2, 1], 3, labels=[a, b, c])))
    return out


def skein_triple(word, strands: int, pos: int) -> tuple[SlicedDiagram, SlicedDiagram, SlicedDiagram]:
    """Label-1 closures with the letter at ``pos`` positive, negative and smoothed."""
    g = abs(word[pos])
    plus = list(word)
    plus[pos] = g
    minus = list(word)
    minus[pos] = -g
    zero_rows = braid_rows(word[:pos], [1] * strands) + [[_id(1)] * strands] \
        + braid_rows(word[pos + 1:], [1] * strands)
    return (expand_braid(plus, strands), expand_braid(minus, strands),
            _close(zero_rows, [1] * strands))


def random_skein_triple(rng: random.Random, max_strands: int = 3, max_len: int = 5):
    strands = rng.randint(2, max_strands)
    n = rng.randint(1, max_len)
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(n)]
    return word, strands, skein_triple(word, strands, rng.randrange(n))
