"""Command-line front end: ``moy <subcommand> ...``.

Exit codes: 0 success, 1 parse or validation error, 2 a check suite failed.
"""
from __future__ import annotations

import argparse
import cmath
import json
import os
import random
import sys
from typing import Callable

from .generators import RandomDiagramConfig, random_braid, random_closed_diagram
from .link_calc import colored_jones, invariant_P, invariant_Q, kashaev_check
from .moy_core import DiagramError, SlicedDiagram, expand_braid, parse_diagram, rotational, binomial_weight
from .moves import move_pairs, random_skein_triple
from .qlaurent import ONE, ZERO, LaurentPoly, qbinom
from .relations import catalogue, check_relation, instantiate, random_context
from .rt_oracle import eval_algebraic
from .state_sum import eval_dp, eval_enum

SUITES = ("relations", "triangle", "mirror", "stability", "closed-forms", "circles",
          "reidemeister", "skein", "markov")


class UsageError(Exception):
    pass


def thread_cap() -> int:
    """Value of MOY_THREADS (default 1).  Evaluation is single-threaded, so the
    cap is validated but never changes a result."""
    raw = os.environ.get("MOY_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise UsageError(f"MOY_THREADS must be a positive integer, got {raw!r}")
    return n


def numeric(p: LaurentPoly, N: int) -> complex:
    return p.eval_complex(cmath.exp(1j * cmath.pi / (N + 1)))


def fmt_complex(z: complex) -> str:
    # rounding noise below the displayed precision is shown as 0
    tiny = 1e-12 * max(1.0, abs(z))
    re_, im = (0.0 if abs(x) < tiny else x for x in (z.real, z.imag))
    return f"{re_:.12g}{im:+.12g}i"


# -- inputs ---------------------------------------------------------------------------

def _labels(args) -> list[int] | None:
    if args.labels is None:
        return None
    return [int(x) for x in args.labels.replace(",", " ").split()]


def _word(args) -> list[int]:
    try:
        return [int(x) for x in args.braid.replace(",", " ").split()]
    except ValueError as e:
        raise UsageError(f"--braid: {e}") from None


def diagram_from(args, allow_braid: bool = True) -> SlicedDiagram:
    if args.input:
        try:
            with open(args.input) as f:
                text = f.read()
        except OSError as e:
            raise UsageError(str(e)) from None
        return parse_diagram(text)
    if allow_braid and args.braid is not None:
        if args.strands is None:
            raise UsageError("--braid needs --strands")
        try:
            return expand_braid(_word(args), args.strands, label=args.label, labels=_labels(args))
        except ValueError as e:
            raise UsageError(str(e)) from None
    raise UsageError("give an input file" + (" or --braid/--strands" if allow_braid else ""))


def _braid_args(args) -> tuple[list[int], int]:
    if args.braid is None or args.strands is None:
        raise UsageError("--braid and --strands are required")
    word = _word(args)
    for g in word:
        if g == 0 or abs(g) >= args.strands:
            raise UsageError(f"generator {g} out of range for {args.strands} strands")
    return word, args.strands


# -- commands -------------------------------------------------------------------------

def cmd_eval_graph(args) -> dict:
    d = diagram_from(args, allow_braid=False)
    if d.has_crossings:
        raise UsageError("eval-graph takes a crossing-free MOY graph; use eval-link for links")
    if not d.closed:
        raise UsageError("diagram is not closed")
    return {"value": eval_dp(d, args.N, args.M)}


def cmd_eval_link(args) -> dict:
    d = diagram_from(args)
    if not d.closed:
        raise UsageError("diagram is not closed")
    return {"value": invariant_P(d, args.N, args.M)}


def cmd_q1(args) -> dict:
    word, strands = _braid_args(args)
    return {"M": 1, "value": invariant_Q(word, strands, args.N)}


def cmd_kashaev(args) -> dict:
    word, strands = _braid_args(args)
    res = kashaev_check(word, strands, args.N)
    out = {"M": 1, "equal": res.equal, "Q": res.q_value, "P02": res.p02_value}
    out["numeric"] = {"lhs": fmt_complex(res.lhs.value()), "rhs": fmt_complex(res.rhs.value())}
    return out


def cmd_jones(args) -> dict:
    d = diagram_from(args)
    j, jp = colored_jones(d, args.label)
    return {"J": j, "J_normalized": jp}


# -- check suites ---------------------------------------------------------------------

def _pairs(max_sum: int):
    return [(N, M) for N in range(max_sum + 1) for M in range(max_sum + 1) if N + M <= max_sum]


# labels <= 3 and at most 10 slices; the brute-force triangle uses at most 8
CHECK_CONFIG = RandomDiagramConfig(max_label=3, max_slices=10)
TRIANGLE_CONFIG = RandomDiagramConfig(max_label=3, max_slices=8)


def suite_relations(rng, args):
    pairs = [(args.N, args.M)] if args.N is not None else \
        [(N, M) for N, M in _pairs(4) if -1 <= N - M <= 3]
    rels = [(N, M, r) for N, M in pairs for r in catalogue(N, M)]
    for _ in range(args.trials):
        N, M, rel = rng.choice(rels)
        ctx = random_context(rng, rel.bottom)
        mirror = rng.random() < 0.5
        if not check_relation(rel, ctx, eval_dp, N, M, mirror=mirror):
            shown = instantiate(rel, ctx)[0][0][1]
            yield f"{rel.name} at ({N}|{M}){' mirrored' if mirror else ''}", \
                shown.mirror() if mirror else shown


def _random_graph_checks(check: Callable, max_sum: int, cfg=CHECK_CONFIG):
    def suite(rng, args):
        pairs = [(args.N, args.M)] if args.N is not None else _pairs(max_sum)
        for _ in range(args.trials):
            d = random_closed_diagram(rng, cfg)
            N, M = rng.choice(pairs)
            msg = check(d, N, M)
            if msg:
                yield f"({N}|{M}): {msg}", d
    return suite


def _triangle(d, N, M):
    a, b, c = eval_enum(d, N, M), eval_dp(d, N, M), eval_algebraic(d, N, M)
    if not a == b == c:
        return f"enum {a}, dp {b}, algebraic {c}"


def _mirror(d, N, M):
    a, b = eval_dp(d, N, M), eval_dp(d.mirror(), N, M)
    if a.bar() != b:
        return f"value {a}, mirror {b}"


def _stability(d, N, M):
    a, b = eval_dp(d, N, M), eval_dp(d, N + 1, M + 1)
    if a != b:
        return f"({N}|{M}) gives {a}, ({N + 1}|{M + 1}) gives {b}"


def _closed_forms(d, N, M):
    rho = rotational(d)
    assert rho.denominator == 1, "rotational of a closed graph is an integer"
    b = binomial_weight(d)
    want = b if rho.numerator % 2 == 0 else -b
    got = eval_dp(d, M, M + 1)
    if got != want:
        return f"N-M=-1: {got} != {want}"
    g = d.edges
    circles = not g.vertices and all(k == 1 for k in g.labels)
    got = eval_dp(d, M + 1, M)
    if got != (ONE if circles else ZERO):
        return f"N-M=1: {got}"


def suite_circles(rng, args):
    pairs = [(args.N, args.M)] if args.N is not None else _pairs(4)
    for _ in range(args.trials):
        N, M = rng.choice(pairs)
        k = rng.randint(0, 4)
        for tok in ("U> {k}\nslice: C< {k}", "U< {k}\nslice: C> {k}"):
            d = parse_diagram("slice: " + tok.format(k=k))
            v = eval_dp(d, N, M)
            if v != qbinom(N - M, k):
                yield f"circle {k} at ({N}|{M}): {v}", d


def suite_reidemeister(rng, args):
    pairs = move_pairs(2)
    targets = [(args.N, args.M)] if args.N is not None else \
        [(N, M) for N, M in _pairs(4) if N - M <= 3 and N + M > 0]
    for _ in range(args.trials):
        name, a, b = rng.choice(pairs)
        N, M = rng.choice(targets)
        pa, pb = invariant_P(a, N, M), invariant_P(b, N, M)
        if pa != pb:
            yield f"{name} at ({N}|{M}): {pa} vs {pb}", a


def suite_skein(rng, args):
    targets = [(args.N, args.M)] if args.N is not None else \
        [(N, M) for N, M in _pairs(4) if N + M > 0]
    for _ in range(args.trials):
        word, strands, (p, m, z) = random_skein_triple(rng)
        N, M = rng.choice(targets)
        lhs = invariant_P(p, N, M).mul_monomial(2 * (M - N)) - invariant_P(m, N, M).mul_monomial(2 * (N - M))
        rhs = (LaurentPoly.monomial(-1) - LaurentPoly.monomial(1)) * invariant_P(z, N, M)
        if lhs != rhs:
            yield f"word {word} on {strands} strands at ({N}|{M})", p


def suite_markov(rng, args):
    for _ in range(args.trials):
        word, strands = random_braid(rng, 4, 6, min_strands=2)
        N = args.N if args.N is not None else rng.randint(1, 2)
        base = invariant_Q(word, strands, N)
        g = rng.randint(1, strands - 1) * rng.choice([1, -1])
        variants = [([g] + word + [-g], strands), ([1] + word + [-1], strands),
                    (word + [strands * rng.choice([1, -1])], strands + 1)]
        if word:
            variants.append((word[1:] + word[:1], strands))
        for w, s in variants:
            v = invariant_Q(w, s, N)
            if v != base:
                yield f"Q_{N}: {word}/{strands} gives {base}, {w}/{s} gives {v}", expand_braid(w, s)


SUITE_FUNCS = {
    "relations": suite_relations,
    "triangle": _random_graph_checks(_triangle, 3, TRIANGLE_CONFIG),
    "mirror": _random_graph_checks(_mirror, 4),
    "stability": _random_graph_checks(_stability, 3),
    "closed-forms": _random_graph_checks(_closed_forms, 3),
    "circles": suite_circles,
    "reidemeister": suite_reidemeister,
    "skein": suite_skein,
    "markov": suite_markov,
}


def cmd_check(args) -> dict:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = {}
    for name in names:
        rng = random.Random(f"{args.seed}:{name}")
        failures = []
        for msg, d in SUITE_FUNCS[name](rng, args):
            failures.append({"what": msg, "diagram": d.render() if d is not None else None})
            if len(failures) >= 5:
                break
        results[name] = {"trials": args.trials, "failures": failures}
    return {"suites": results}


COMMANDS = {
    "eval-graph": cmd_eval_graph,
    "eval-link": cmd_eval_link,
    "q1": cmd_q1,
    "kashaev": cmd_kashaev,
    "jones": cmd_jones,
    "check": cmd_check,
}


# -- rendering ------------------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, LaurentPoly):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def render(cmd: str, args, out: dict) -> str:
    if args.format == "json":
        doc = {"command": cmd, "N": args.N, "M": args.M}
        doc.update(_jsonable(out))
        if args.numeric and "value" in out:
            doc["numeric"] = fmt_complex(numeric(out["value"], args.N))
        return json.dumps(doc, sort_keys=True)
    lines = []
    if cmd == "check":
        for name, r in out["suites"].items():
            status = "ok" if not r["failures"] else "FAIL"
            lines.append(f"{name}: {status} ({r['trials']} trials)")
            for f in r["failures"]:
                lines.append(f"  counterexample: {f['what']}")
                if f["diagram"]:
                    lines += ["    " + ln for ln in f["diagram"].splitlines()]
    elif cmd == "kashaev":
        lines.append("equal" if out["equal"] else "not equal")
        lines.append(f"Q_{{{args.N}|1}} = {out['Q']}")
        lines.append(f"P_{{0|2}} = {out['P02']}")
        lines.append(f"numeric (display only) at q = exp(i pi/{args.N + 1}): "
                     f"lhs {out['numeric']['lhs']}, rhs {out['numeric']['rhs']}")
    elif cmd == "jones":
        lines.append(f"J = {out['J']}")
        lines.append(f"J' = {out['J_normalized']}")
    else:
        lines.append(str(out["value"]))
        if args.numeric:
            lines.append(f"numeric (display only) at q = exp(i pi/{args.N + 1}): "
                         f"{fmt_complex(numeric(out['value'], args.N))}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="moy", description="(N|M) MOY graph and link evaluations")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help=".moy or .lnk file")
        p.add_argument("--N", type=int, default=None)
        p.add_argument("--M", type=int, default=None)
        p.add_argument("--braid", help='braid word, e.g. "1 -2 1"')
        p.add_argument("--strands", type=int)
        p.add_argument("--label", type=int, default=1, help="label of every strand")
        p.add_argument("--labels", help="per-strand labels, e.g. \"1 2\"")
        p.add_argument("--trials", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--numeric", action="store_true")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name == "check":
            p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    return ap


def _normalize(cmd: str, args):
    if cmd in ("q1", "kashaev"):
        if args.M not in (None, 1):
            raise UsageError(f"{cmd} works with M = 1")
        args.M = 1
    if cmd == "check":
        # without --N the suites sweep their own (N|M) ranges
        if args.N is not None and args.M is None:
            args.M = 0
    elif cmd == "jones":
        args.N, args.M = 0, 2
    elif args.N is None:
        raise UsageError("--N is required")
    elif args.M is None:
        args.M = 0
    for v, name in ((args.N, "N"), (args.M, "M")):
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be non-negative")
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cmd = args.command
    try:
        thread_cap()
        _normalize(cmd, args)
        out = COMMANDS[cmd](args)
    except (UsageError, DiagramError) as e:
        msg = "\n".join(e.errors) if isinstance(e, DiagramError) else str(e)
        print(f"error: {msg}", file=sys.stderr)
        return 1
    print(render(cmd, args, out))
    if cmd == "check" and any(r["failures"] for r in out["suites"].values()):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
