"""Link invariants from labeled link diagrams.

Crossings are resolved into signed ladder graphs; the resulting closed
MOY graphs are evaluated by the transfer sweep.  The sweep can also expand
each crossing locally (the default), which avoids the 2^c blow-up of
distributing over all crossings at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .moy_core import CROSSINGS, Kind, Piece, SlicedDiagram, expand_braid
from .qlaurent import ONE, ZERO, CyclotomicElt, LaurentPoly, cyclo_reduce, qint
from .state_sum import crossing_terms, eval_dp


@dataclass(frozen=True)
class Normalization:
    framing: int   # k(D), exponent of q
    parity: int    # e(D), exponent of -1


def _identity_like(p: Piece) -> list[Piece]:
    """Identity pieces on the top wires of ``p``."""
    from .generators import identity_row
    return identity_row(p.top())


def expand_crossings(d: SlicedDiagram) -> list[tuple[LaurentPoly, SlicedDiagram]]:
    """All crossing-free resolutions with their coefficients."""
    spots = d.crossings()
    if not spots:
        return [(ONE, d)]
    options = [crossing_terms(p.kind, *p.labels) for _, _, p in spots]
    by_slice = {(i, j): n for n, (i, j, _) in enumerate(spots)}
    out = []
    for choice in product(*options):
        coef = ONE
        for c, _ in choice:
            coef = coef * c
        slices = []
        for i, sl in enumerate(d.slices):
            if not any((i, j) in by_slice for j in range(len(sl))):
                slices.append(sl)
                continue
            rows: list[list[Piece]] = [[], [], [], []]
            for j, p in enumerate(sl):
                if (i, j) in by_slice:
                    ladder = choice[by_slice[(i, j)]][1]
                    for r in range(4):
                        rows[r].extend(ladder[r])
                    if p.marked:
                        first = rows[0][-2]
                        rows[0][-2] = Piece(first.kind, first.labels, True)
                else:
                    rows[0].append(p)
                    for r in range(1, 4):
                        rows[r].extend(_identity_like(p))
            slices.extend(tuple(r) for r in rows)
        out.append((coef, SlicedDiagram(tuple(slices))))
    return out


def eval_link(d: SlicedDiagram, N: int, M: int, inline: bool = True) -> LaurentPoly:
    """The bracket of a labeled link diagram (no normalization)."""
    if inline:
        return eval_dp(d, N, M)
    total = ZERO
    for coef, g in expand_crossings(d):
        total = total + coef * eval_dp(g, N, M)
    return total


def normalization(d: SlicedDiagram, N: int, M: int) -> Normalization:
    k = e = 0
    for _, _, p in d.crossings():
        n, m = p.labels
        if n != m:
            continue
        sign = 1 if p.kind is Kind.CROSS_POS else -1
        k += sign * m * (N - M - m + 1)
        e += m
    return Normalization(k, e)


def invariant_P(d: SlicedDiagram, N: int, M: int) -> LaurentPoly:
    """Framing- and sign-normalized link invariant P_{N|M}."""
    nz = normalization(d, N, M)
    return eval_link(d, N, M).mul_monomial(2 * nz.framing, -1 if nz.parity % 2 else 1)


def marked_unknot(N: int) -> LaurentPoly:
    """Marked evaluation of the counterclockwise unknot of label N."""
    return eval_dp(expand_braid([], 1, label=N, mark=True), N, 1, marked=True)


def invariant_Q(word, strands: int, N: int) -> LaurentPoly:
    """Renormalized (N|1) invariant of a braid closure, all labels N.

    The braid is closed on the right and the result is divided by the
    value of the marked unknot (a unit) so that the unknot gets 1.
    """
    d = expand_braid(word, strands, label=N, mark=True)
    val = eval_dp(d, N, 1, marked=True).exact_div(marked_unknot(N))
    return -val if (N * len(word)) % 2 else val


def closure_components(word, strands: int) -> int:
    return expand_braid(word, strands).components()


@dataclass(frozen=True)
class KashaevResult:
    lhs: CyclotomicElt
    rhs: CyclotomicElt
    q_value: LaurentPoly
    p02_value: LaurentPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def kashaev_check(word, strands: int, N: int) -> KashaevResult:
    """Compare Q_{N|1} with the normalized colored Jones value at q = e^{i pi/(N+1)}.

    Both sides are reduced modulo the 2(N+1)-th cyclotomic polynomial.  The
    right side is (-1)^{N l} P_{0|2} / [N+1]; the division is exact as
    polynomials and is done before reduction, since [N+1] vanishes at the root.
    """
    q = invariant_Q(word, strands, N)
    d = expand_braid(word, strands, label=N)
    p02 = invariant_P(d, 0, 2)
    comps = d.components()
    signed = -p02 if (N * comps) % 2 else p02
    normalized = signed.exact_div(qint(N + 1))
    return KashaevResult(cyclo_reduce(q, N), cyclo_reduce(normalized, N), q, p02)


def colored_jones(d: SlicedDiagram, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(J_n, J'_n) of the mirror of the link, from P_{0|2} with all labels n."""
    labels = {p.labels[0] for s in d.slices for p in s if p.kind not in CROSSINGS and len(p.labels) == 1}
    labels |= {x for _, _, p in d.crossings() for x in p.labels}
    if labels - {n}:
        raise ValueError(f"all components must be labeled {n}")
    p02 = invariant_P(d, 0, 2)
    comps = d.components()
    j = -p02 if (n * comps) % 2 else p02
    return j, j.exact_div(qint(n + 1))
