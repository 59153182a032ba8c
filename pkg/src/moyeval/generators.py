"""Random closed MOY graphs, random braids, and small building blocks."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .moy_core import DOWN, UP, Kind, Piece, SlicedDiagram, check


@dataclass(frozen=True)
class RandomDiagramConfig:
    max_label: int = 3
    max_slices: int = 8
    max_width: int = 6
    p_cup: float = 0.35
    p_vertex: float = 0.5
    max_tries: int = 10_000


def identity_piece(wire) -> Piece:
    label, direction = wire
    return Piece(Kind.ID_UP if direction == UP else Kind.ID_DOWN, (label,))


def identity_row(wires) -> list[Piece]:
    return [identity_piece(w) for w in wires]


def _cap_for(w1, w2):
    if w1[0] != w2[0] or w1[1] == w2[1]:
        return None
    return Piece(Kind.CAP_LR if w1[1] == UP else Kind.CAP_RL, (w1[0],))


def _random_slice(rng: random.Random, wires, cfg: RandomDiagramConfig, closing: bool):
    pieces = []
    i = 0
    width = len(wires)

    def maybe_cup():
        nonlocal width
        if not closing and width + 2 <= cfg.max_width and rng.random() < cfg.p_cup / max(1, len(wires)):
            kind = rng.choice([Kind.CUP_LR, Kind.CUP_RL])
            pieces.append(Piece(kind, (rng.randint(1, cfg.max_label),)))
            width += 2

    maybe_cup()
    while i < len(wires):
        w = wires[i]
        nxt = wires[i + 1] if i + 1 < len(wires) else None
        options = []
        if nxt is not None:
            cap = _cap_for(w, nxt)
            if cap is not None:
                options += [("cap", cap)] * (4 if closing else rng.random() < 0.3)
            if w[1] == UP and nxt[1] == UP and w[0] + nxt[0] <= cfg.max_label:
                options += [("merge", Piece.merge(w[0], nxt[0]))] * (2 if closing else 1)
        if not closing and w[1] == UP and w[0] >= 2 and width + 1 <= cfg.max_width:
            a = rng.randint(1, w[0] - 1)
            options += [("split", Piece.split(a, w[0] - a))] * 2
        use = options and rng.random() < (0.9 if closing else cfg.p_vertex)
        if use:
            kind, p = rng.choice(options)
            pieces.append(p)
            if kind in ("cap", "merge"):
                i += 2
                width -= 2 if kind == "cap" else 1
            else:
                i += 1
                width += 1
        else:
            pieces.append(identity_piece(w))
            i += 1
        maybe_cup()
    return pieces


def random_closed_diagram(rng: random.Random, cfg: RandomDiagramConfig | None = None) -> SlicedDiagram:
    """Random slices grown from the empty interface, then closed greedily;
    rejection-sampled until the result is a valid closed diagram."""
    cfg = cfg or RandomDiagramConfig()
    for _ in range(cfg.max_tries):
        slices = []
        wires: list = []
        grow = rng.randint(max(1, cfg.max_slices // 2 - 1), max(1, cfg.max_slices - 2))
        ok = True
        stalls = 0
        while True:
            closing = len(slices) >= grow
            if closing and not wires:
                break
            if len(slices) >= cfg.max_slices:
                ok = False
                break
            if not wires:
                kind = rng.choice([Kind.CUP_LR, Kind.CUP_RL])
                row = [Piece(kind, (rng.randint(1, cfg.max_label),))]
            else:
                row = _random_slice(rng, wires, cfg, closing)
            new = [w for p in row for w in p.top()]
            if row == identity_row(wires):
                stalls += 1
                if stalls > 20:
                    ok = False
                    break
                continue
            slices.append(tuple(row))
            wires = new
        if ok and slices:
            return check(SlicedDiagram(tuple(slices)), require_closed=True)
    raise RuntimeError("failed to sample a closed diagram")


def random_braid(rng: random.Random, max_strands: int = 4, max_len: int = 6,
                 min_strands: int = 1) -> tuple[list[int], int]:
    strands = rng.randint(min_strands, max_strands)
    if strands == 1:
        return [], 1
    n = rng.randint(0, max_len)
    word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(n)]
    return word, strands
