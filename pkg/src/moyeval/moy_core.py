"""Sliced (Morse-position) MOY graphs and labeled link diagrams.

A diagram is a bottom-to-top sequence of slices; each slice is a
left-to-right row of elementary pieces.  Wires between slices carry a
label and a direction (``UP`` or ``DOWN``).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .qlaurent import ONE, LaurentPoly, qbinom

UP, DOWN = 1, -1


class Kind(enum.Enum):
    ID_UP = "I^"
    ID_DOWN = "Iv"
    CUP_LR = "U>"
    CUP_RL = "U<"
    CAP_RL = "C<"
    CAP_LR = "C>"
    MERGE = "M"
    SPLIT = "S"
    CROSS_POS = "X+"
    CROSS_NEG = "X-"


# Turning of the strand through a cup/cap: +1 for counterclockwise traversal.
TURNING = {Kind.CUP_LR: 1, Kind.CAP_RL: 1, Kind.CUP_RL: -1, Kind.CAP_LR: -1}
EXTREMA = frozenset(TURNING)
CROSSINGS = frozenset({Kind.CROSS_POS, Kind.CROSS_NEG})

_MIRROR_KIND = {
    Kind.ID_UP: Kind.ID_UP, Kind.ID_DOWN: Kind.ID_DOWN,
    Kind.CUP_LR: Kind.CUP_RL, Kind.CUP_RL: Kind.CUP_LR,
    Kind.CAP_LR: Kind.CAP_RL, Kind.CAP_RL: Kind.CAP_LR,
    Kind.MERGE: Kind.MERGE, Kind.SPLIT: Kind.SPLIT,
    Kind.CROSS_POS: Kind.CROSS_NEG, Kind.CROSS_NEG: Kind.CROSS_POS,
}


class DiagramError(ValueError):
    """Structural problem with a diagram; ``errors`` holds located messages."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


@dataclass(frozen=True)
class Piece:
    """One elementary piece.

    ``labels`` is ``(k,)`` for identities, cups and caps; ``(left, right, thick)``
    for merges and splits; ``(bottom_left, bottom_right)`` for crossings.
    """

    kind: Kind
    labels: tuple[int, ...]
    marked: bool = False

    @classmethod
    def merge(cls, a, b, marked=False):
        return cls(Kind.MERGE, (a, b, a + b), marked)

    @classmethod
    def split(cls, a, b, marked=False):
        return cls(Kind.SPLIT, (a, b, a + b), marked)

    def bottom(self) -> list[tuple[int, int]]:
        k, lab = self.kind, self.labels
        if k is Kind.ID_UP:
            return [(lab[0], UP)]
        if k is Kind.ID_DOWN:
            return [(lab[0], DOWN)]
        if k in (Kind.CUP_LR, Kind.CUP_RL):
            return []
        if k is Kind.CAP_RL:
            return [(lab[0], DOWN), (lab[0], UP)]
        if k is Kind.CAP_LR:
            return [(lab[0], UP), (lab[0], DOWN)]
        if k is Kind.MERGE:
            return [(lab[0], UP), (lab[1], UP)]
        if k is Kind.SPLIT:
            return [(lab[2], UP)]
        return [(lab[0], UP), (lab[1], UP)]

    def top(self) -> list[tuple[int, int]]:
        k, lab = self.kind, self.labels
        if k is Kind.ID_UP:
            return [(lab[0], UP)]
        if k is Kind.ID_DOWN:
            return [(lab[0], DOWN)]
        if k is Kind.CUP_LR:
            return [(lab[0], DOWN), (lab[0], UP)]
        if k is Kind.CUP_RL:
            return [(lab[0], UP), (lab[0], DOWN)]
        if k in (Kind.CAP_LR, Kind.CAP_RL):
            return []
        if k is Kind.MERGE:
            return [(lab[2], UP)]
        if k is Kind.SPLIT:
            return [(lab[0], UP), (lab[1], UP)]
        return [(lab[1], UP), (lab[0], UP)]

    def mirrored(self) -> "Piece":
        if self.marked:
            raise ValueError("cannot mirror a marked piece")
        k = _MIRROR_KIND[self.kind]
        lab = self.labels
        if self.kind in (Kind.MERGE, Kind.SPLIT):
            lab = (lab[1], lab[0], lab[2])
        elif self.kind in CROSSINGS:
            lab = (lab[1], lab[0])
        return Piece(k, lab)

    def render(self) -> str:
        lab = self.labels
        if self.kind in (Kind.MERGE, Kind.SPLIT) and lab[2] == lab[0] + lab[1]:
            lab = lab[:2]
        s = f"{self.kind.value} " + " ".join(map(str, lab))
        return s + ("*" if self.marked else "")


@dataclass(frozen=True)
class Vertex:
    kind: Kind            # MERGE or SPLIT
    left: int             # edge ids
    right: int
    thick: int
    where: tuple[int, int]


@dataclass(frozen=True)
class EdgeGraph:
    """Edges of a crossing-free diagram, obtained by gluing wires through
    identities, cups and caps."""

    wire_edge: dict          # (interface, position) -> edge id
    labels: tuple[int, ...]  # edge id -> label
    vertices: tuple[Vertex, ...]
    extrema: tuple[tuple[int, int], ...]  # (edge id, turning)

    @property
    def n_edges(self) -> int:
        return len(self.labels)

    @cached_property
    def splits(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if v.kind is Kind.SPLIT)

    @cached_property
    def turning(self) -> tuple[int, ...]:
        t = [0] * self.n_edges
        for e, s in self.extrema:
            t[e] += s
        return tuple(t)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


@dataclass(frozen=True)
class SlicedDiagram:
    slices: tuple[tuple[Piece, ...], ...]
    bottom_wires: tuple[tuple[int, int], ...] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        if self.bottom_wires is None:
            first = self.slices[0] if self.slices else ()
            bw = tuple(w for p in first for w in p.bottom())
            object.__setattr__(self, "bottom_wires", bw)
        else:
            object.__setattr__(self, "bottom_wires", tuple(self.bottom_wires))

    # -- interfaces -------------------------------------------------------

    @cached_property
    def interfaces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """interfaces[i] is the wire list below slice i; the last is the top."""
        out = [self.bottom_wires]
        for s in self.slices:
            out.append(tuple(w for p in s for w in p.top()))
        return tuple(out)

    @property
    def top_wires(self):
        return self.interfaces[-1]

    @property
    def closed(self) -> bool:
        return not self.bottom_wires and not self.top_wires

    @cached_property
    def has_crossings(self) -> bool:
        return any(p.kind in CROSSINGS for s in self.slices for p in s)

    def piece_ports(self, i: int):
        """Yield (piece index, piece, bottom offset, top offset) for slice i."""
        b = t = 0
        for j, p in enumerate(self.slices[i]):
            yield j, p, b, t
            b += len(p.bottom())
            t += len(p.top())

    @cached_property
    def marked_wire(self) -> tuple[int, int] | None:
        for i in range(len(self.slices)):
            for j, p, b, t in self.piece_ports(i):
                if p.marked:
                    if p.bottom():
                        return (i, b)
                    return (i + 1, t)
        return None

    @property
    def n_marked(self) -> int:
        return sum(p.marked for s in self.slices for p in s)

    # -- structure --------------------------------------------------------

    @cached_property
    def edges(self) -> EdgeGraph:
        if self.has_crossings:
            raise ValueError("edge graph is only defined for crossing-free diagrams")
        uf = _UnionFind()
        for k, iface in enumerate(self.interfaces):
            for p in range(len(iface)):
                uf.find((k, p))
        raw_vertices = []
        raw_extrema = []
        for i in range(len(self.slices)):
            for j, p, b, t in self.piece_ports(i):
                if p.kind in (Kind.ID_UP, Kind.ID_DOWN):
                    uf.union((i, b), (i + 1, t))
                elif p.kind in (Kind.CUP_LR, Kind.CUP_RL):
                    uf.union((i + 1, t), (i + 1, t + 1))
                    raw_extrema.append(((i + 1, t), TURNING[p.kind]))
                elif p.kind in (Kind.CAP_LR, Kind.CAP_RL):
                    uf.union((i, b), (i, b + 1))
                    raw_extrema.append(((i, b), TURNING[p.kind]))
                elif p.kind is Kind.MERGE:
                    raw_vertices.append((p.kind, (i, b), (i, b + 1), (i + 1, t), (i, j)))
                else:
                    raw_vertices.append((p.kind, (i + 1, t), (i + 1, t + 1), (i, b), (i, j)))
        ids = {}
        wire_edge = {}
        labels = []
        for k, iface in enumerate(self.interfaces):
            for p, (lab, _) in enumerate(iface):
                r = uf.find((k, p))
                if r not in ids:
                    ids[r] = len(labels)
                    labels.append(lab)
                wire_edge[(k, p)] = ids[r]
        vertices = tuple(Vertex(kd, wire_edge[l], wire_edge[r], wire_edge[t], w)
                         for kd, l, r, t, w in raw_vertices)
        extrema = tuple((wire_edge[w], s) for w, s in raw_extrema)
        return EdgeGraph(wire_edge, tuple(labels), vertices, extrema)

    def labeling(self) -> tuple[int, ...]:
        """The diagram's own labels as an edge labeling."""
        return self.edges.labels

    def components(self) -> int:
        """Number of connected components (crossings join diagonal wires)."""
        uf = _UnionFind()
        for k, iface in enumerate(self.interfaces):
            for p in range(len(iface)):
                uf.find((k, p))
        for i in range(len(self.slices)):
            for j, p, b, t in self.piece_ports(i):
                kd = p.kind
                if kd in (Kind.ID_UP, Kind.ID_DOWN):
                    uf.union((i, b), (i + 1, t))
                elif kd in (Kind.CUP_LR, Kind.CUP_RL):
                    uf.union((i + 1, t), (i + 1, t + 1))
                elif kd in (Kind.CAP_LR, Kind.CAP_RL):
                    uf.union((i, b), (i, b + 1))
                elif kd in CROSSINGS:
                    uf.union((i, b), (i + 1, t + 1))
                    uf.union((i, b + 1), (i + 1, t))
                else:
                    ends = [(i, b + x) for x in range(len(p.bottom()))]
                    ends += [(i + 1, t + x) for x in range(len(p.top()))]
                    for e in ends[1:]:
                        uf.union(ends[0], e)
        return len({uf.find(x) for x in list(uf.parent)})

    def crossings(self) -> list[tuple[int, int, Piece]]:
        return [(i, j, p) for i, s in enumerate(self.slices)
                for j, p in enumerate(s) if p.kind in CROSSINGS]

    # -- transformations ---------------------------------------------------

    def mirror(self) -> "SlicedDiagram":
        """Reflection x -> -x."""
        bw = tuple(reversed(self.bottom_wires))
        return SlicedDiagram(tuple(tuple(p.mirrored() for p in reversed(s))
                                   for s in self.slices), bw)

    def stack(self, other: "SlicedDiagram") -> "SlicedDiagram":
        """``other`` placed on top of ``self``."""
        return SlicedDiagram(self.slices + other.slices, self.bottom_wires)

    def beside(self, other: "SlicedDiagram") -> "SlicedDiagram":
        """Horizontal disjoint union of two closed diagrams."""
        if not (self.closed and other.closed):
            raise ValueError("beside() needs closed diagrams")
        n = max(len(self.slices), len(other.slices))
        a = self.slices + ((),) * (n - len(self.slices))
        b = other.slices + ((),) * (n - len(other.slices))
        return SlicedDiagram(tuple(x + y for x, y in zip(a, b)))

    def render(self) -> str:
        return render_diagram(self)


# -- validation -----------------------------------------------------------------

def validate(d: SlicedDiagram, require_closed: bool = False) -> list[tuple[int, int, str]]:
    """Located structural errors ``(slice, piece, reason)``; empty when valid."""
    errors = []
    for i, s in enumerate(d.slices):
        for j, p in enumerate(s):
            lab = p.labels
            want = 3 if p.kind in (Kind.MERGE, Kind.SPLIT) else 2 if p.kind in CROSSINGS else 1
            if len(lab) != want:
                errors.append((i, j, f"{p.kind.value} expects {want} labels, got {len(lab)}"))
                continue
            if any(x < 0 for x in lab):
                errors.append((i, j, "negative label"))
            if want == 3 and lab[2] != lab[0] + lab[1]:
                errors.append((i, j, f"flow violated: {lab[0]}+{lab[1]} != {lab[2]}"))
        if errors:
            continue
        below = d.interfaces[i]
        got = tuple(w for p in s for w in p.bottom())
        if got != below:
            errors.append((i, -1, f"bottom wires {got} do not match interface {below}"))
    if d.n_marked > 1:
        errors.append((-1, -1, f"{d.n_marked} marked points; at most one allowed"))
    if require_closed and not d.closed:
        errors.append((-1, -1, "diagram is not closed"))
    return errors


def check(d: SlicedDiagram, require_closed: bool = False) -> SlicedDiagram:
    errs = validate(d, require_closed)
    if errs:
        raise DiagramError(errs)
    return d


# -- labelings ------------------------------------------------------------------

def is_flow_conserving(d: SlicedDiagram, lab: Sequence[int]) -> bool:
    return all(lab[v.left] + lab[v.right] == lab[v.thick] for v in d.edges.vertices)


def rotational(d: SlicedDiagram, lab: Sequence[int] | None = None) -> Fraction:
    """Rotational of the cabling: each cup/cap adds turning * label / 2."""
    g = d.edges
    lab = g.labels if lab is None else lab
    return Fraction(sum(t * lab[e] for e, t in g.extrema), 2)


def binomial_weight(d: SlicedDiagram, lab: Sequence[int] | None = None) -> LaurentPoly:
    g = d.edges
    lab = g.labels if lab is None else lab
    out = ONE
    for v in g.splits:
        out = out * qbinom(lab[v.left] + lab[v.right], lab[v.right])
    return out


def u_stat(d: SlicedDiagram, lab1: Sequence[int], lab2: Sequence[int]) -> int:
    total = 0
    for v in d.edges.splits:
        a1, b1 = lab1[v.left], lab1[v.right]
        a2, b2 = lab2[v.left], lab2[v.right]
        total += a2 * b1 - a1 * b2
    return total


# -- braids -----------------------------------------------------------------------

def expand_braid(word: Sequence[int], strands: int, label: int = 1, mark: bool = False,
                 labels: Sequence[int] | None = None, side: str = "right") -> SlicedDiagram:
    """Closure of a braid word (``i`` for sigma_i, ``-i`` for its inverse).

    The closing arcs run on the right (clockwise strands) or on the left
    (counterclockwise strands); both give the same link.  With ``mark`` the
    left-most strand carries the marked point just below the first letter.
    """
    if strands < 1:
        raise ValueError("need at least one strand")
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    for g in word:
        if g == 0 or abs(g) >= strands:
            raise ValueError(f"generator {g} out of range for {strands} strands")
    labs = list(labels) if labels is not None else [label] * strands
    if len(labs) != strands:
        raise ValueError("one label per strand required")

    def up(x):
        return Piece(Kind.ID_UP, (labs[x],))

    def down(x):
        return Piece(Kind.ID_DOWN, (labs[x],))

    right = side == "right"
    slices = []
    if right:
        for j in range(strands):
            slices.append([up(x) for x in range(j)] + [Piece(Kind.CUP_RL, (labs[j],))]
                          + [down(x) for x in reversed(range(j))])
        closure = [down(x) for x in reversed(range(strands))]
    else:
        for j in reversed(range(strands)):
            slices.append([down(x) for x in reversed(range(j + 1, strands))]
                          + [Piece(Kind.CUP_LR, (labs[j],))]
                          + [up(x) for x in range(j + 1, strands)])
        closure = [down(x) for x in reversed(range(strands))]
    cur = list(labs)
    body = []
    for g in word:
        i = abs(g) - 1
        kind = Kind.CROSS_POS if g > 0 else Kind.CROSS_NEG
        row = ([Piece(Kind.ID_UP, (cur[x],)) for x in range(i)]
               + [Piece(kind, (cur[i], cur[i + 1]))]
               + [Piece(Kind.ID_UP, (cur[x],)) for x in range(i + 2, strands)])
        body.append(row + closure if right else closure + row)
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    if cur != labs:
        raise ValueError("strand labels are not compatible with the closure")
    if mark and not body:
        row = [up(x) for x in range(strands)]
        body.append(row + closure if right else closure + row)
    if mark:
        at = 0 if right else strands
        first = body[0][at]
        body[0][at] = Piece(first.kind, first.labels, True)
    slices.extend(body)
    if right:
        for j in reversed(range(strands)):
            slices.append([up(x) for x in range(j)] + [Piece(Kind.CAP_LR, (labs[j],))]
                          + [down(x) for x in reversed(range(j))])
    else:
        for j in range(strands):
            slices.append([down(x) for x in reversed(range(j + 1, strands))]
                          + [Piece(Kind.CAP_RL, (labs[j],))]
                          + [up(x) for x in range(j + 1, strands)])
    return check(SlicedDiagram(tuple(tuple(s) for s in slices)))


# -- text format ---------------------------------------------------------------------

_KINDS = {k.value: k for k in Kind}
_PIECE = re.compile(r"^(I\^|Iv|U>|U<|C<|C>|M|S|X\+|X-)(\*?)((?:\s+\d+)*)\s*(\*?)$")


def parse_diagram(text: str, validate_result: bool = True) -> SlicedDiagram:
    """Parse the ``.moy``/``.lnk`` format (one ``slice:`` line per slice)."""
    slices = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        stripped = body.lstrip()
        col0 = len(body) - len(stripped) + 1
        if not stripped.startswith("slice:"):
            raise DiagramError([f"line {lineno}, col {col0}: expected 'slice:'"])
        rest = stripped[len("slice:"):]
        offset = col0 + len("slice:")
        pieces = []
        if rest.strip():
            pos = 0
            for tok in rest.split(","):
                col = offset + pos + (len(tok) - len(tok.lstrip()))
                pos += len(tok) + 1
                m = _PIECE.match(tok.strip())
                if not m:
                    raise DiagramError([f"line {lineno}, col {col}: cannot parse piece {tok.strip()!r}"])
                kind = _KINDS[m.group(1)]
                nums = tuple(int(x) for x in m.group(3).split())
                marked = bool(m.group(2) or m.group(4))
                if kind in (Kind.MERGE, Kind.SPLIT) and len(nums) == 2:
                    nums = nums + (nums[0] + nums[1],)
                pieces.append(Piece(kind, nums, marked))
        slices.append(tuple(pieces))
    d = SlicedDiagram(tuple(slices))
    if validate_result:
        check(d)
    return d


def render_diagram(d: SlicedDiagram) -> str:
    lines = []
    for s in d.slices:
        lines.append(("slice: " + ", ".join(p.render() for p in s)).rstrip())
    return "\n".join(lines) + "\n"


def piece(token: str) -> Piece:
    """Build one piece from its text token, e.g. ``piece("M 1 2")``."""
    return parse_diagram(f"slice: {token}", validate_result=False).slices[0][0]


def diagram(rows: Iterable[str], validate_result: bool = True) -> SlicedDiagram:
    """Build a diagram from slice bodies, e.g. ``diagram(["U> 1", "C< 1"])``."""
    return parse_diagram("\n".join("slice: " + r for r in rows), validate_result)
