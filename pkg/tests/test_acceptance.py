"""The ten acceptance criteria at their stated ranges and tolerances.

Every polynomial comparison is exact; numeric values are only compared for
the Kashaev display, at 1e-9.  Run with pytest, or directly with
``python3 tests/test_acceptance.py`` for the pass/fail lines alone.
"""
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import oracles  # noqa: E402
from acceptance_log import record  # noqa: E402
from moyeval.generators import RandomDiagramConfig, random_braid, random_closed_diagram  # noqa: E402
from moyeval.link_calc import invariant_P, invariant_Q, kashaev_check  # noqa: E402
from moyeval.moves import move_pairs, random_skein_triple  # noqa: E402
from moyeval.moy_core import binomial_weight, expand_braid, parse_diagram, rotational  # noqa: E402
from moyeval.qlaurent import ONE, ZERO, LaurentPoly, qbinom  # noqa: E402
from moyeval.relations import catalogue, check_relation, random_context  # noqa: E402
from moyeval.rt_oracle import eval_algebraic  # noqa: E402
from moyeval.state_sum import eval_dp, eval_enum  # noqa: E402

TREFOIL = ([1, 1, 1], 2)
FIGURE_EIGHT = ([1, -2, 1, -2], 3)


def diagrams(seed, count, cfg):
    rng = random.Random(seed)
    return [random_closed_diagram(rng, cfg) for _ in range(count)]


def test_criterion_01_q_identities():
    start = time.perf_counter()
    rng = random.Random(1)
    tuples = [[rng.randint(-5, 5) for _ in range(rng.randint(1, 5))] for _ in range(500)]
    checks = {
        "addition": oracles.addition_failures(),
        "telescoping": oracles.telescoping_failures(tuples),
        "product-difference": oracles.product_difference_failures(),
        "pascal": oracles.pascal_failures(),
        "anti-pascal": oracles.anti_pascal_failures(),
        "vandermonde": oracles.vandermonde_failures(),
        "subsets": oracles.subset_generating_failures(),
        "root-flip": oracles.root_flip_failures(),
        "bar-symmetry": oracles.bar_failures(),
    }
    failures = [f"{name} {bad[0]} (+{len(bad) - 1} more)" for name, bad in checks.items() if bad]
    assert record(1, "q-identity suite", failures, time.perf_counter() - start, limit=10)


def test_criterion_02_circle_values():
    start = time.perf_counter()
    failures = []
    for N in range(5):
        for M in range(5):
            for k in range(5):
                for tok in ("U> {k}\nslice: C< {k}", "U< {k}\nslice: C> {k}"):
                    d = parse_diagram("slice: " + tok.format(k=k))
                    want = qbinom(N - M, k)
                    if not eval_dp(d, N, M) == eval_enum(d, N, M) == want:
                        failures.append((N, M, k, tok[:2]))
    assert record(2, "circle values", failures, time.perf_counter() - start)


def test_criterion_03_oracle_triangle():
    start = time.perf_counter()
    pairs = [(N, M) for N in range(4) for M in range(4) if N + M <= 3]
    rng = random.Random(3)
    failures = []
    for i, d in enumerate(diagrams(3, 200, RandomDiagramConfig(max_label=3, max_slices=8))):
        N, M = pairs[i % len(pairs)] if i < len(pairs) else rng.choice(pairs)
        if not eval_enum(d, N, M) == eval_dp(d, N, M) == eval_algebraic(d, N, M):
            failures.append((i, N, M))
    assert record(3, "oracle triangle on 200 diagrams", failures, time.perf_counter() - start, limit=300)


def test_criterion_04_relation_suite():
    start = time.perf_counter()
    pairs = [(N, M) for N in range(5) for M in range(5) if N + M <= 4 and -1 <= N - M <= 3]
    failures = []
    checked = 0
    for N, M in pairs:
        rng = random.Random(f"{N}|{M}")
        for rel in catalogue(N, M):
            for _ in range(2):
                ctx = random_context(rng, rel.bottom)
                for mirror in (False, True):
                    checked += 1
                    if not check_relation(rel, ctx, eval_dp, N, M, mirror=mirror):
                        failures.append((rel.name, N, M, mirror))
            if N + M <= 3:
                ctx = random_context(rng, rel.bottom)
                checked += 1
                if not check_relation(rel, ctx, eval_algebraic, N, M):
                    failures.append((rel.name, N, M, "algebraic"))
    assert checked > 2000
    assert record(4, f"relation suite ({checked} checks)", failures, time.perf_counter() - start)


def test_criterion_05_closed_forms():
    start = time.perf_counter()
    failures = []
    rng = random.Random(5)
    for i, d in enumerate(diagrams(5, 100, RandomDiagramConfig())):
        M = rng.randint(0, 2)
        rho = rotational(d)
        sign = -1 if rho.numerator % 2 else 1
        if rho.denominator != 1 or eval_dp(d, M, M + 1) != binomial_weight(d) * sign:
            failures.append((i, "N-M=-1", M))
        g = d.edges
        circles = not g.vertices and all(k == 1 for k in g.labels)
        if eval_dp(d, M + 1, M) != (ONE if circles else ZERO):
            failures.append((i, "N-M=1", M))
    assert record(5, "closed forms on 100 diagrams", failures, time.perf_counter() - start)


def test_criterion_06_link_invariance():
    start = time.perf_counter()
    pairs = [(N, M) for N in range(5) for M in range(5) if 0 < N + M <= 4 and N - M <= 3]
    failures = []
    for name, before, after in move_pairs(2):
        for N, M in pairs:
            if invariant_P(before, N, M) != invariant_P(after, N, M):
                failures.append((name, N, M))
    rng = random.Random(6)
    for i in range(60):
        word, strands, (plus, minus, zero) = random_skein_triple(rng)
        N, M = rng.choice(pairs)
        lhs = invariant_P(plus, N, M).mul_monomial(2 * (M - N)) - invariant_P(minus, N, M).mul_monomial(2 * (N - M))
        rhs = (LaurentPoly.monomial(-1) - LaurentPoly.monomial(1)) * invariant_P(zero, N, M)
        if lhs != rhs:
            failures.append(("skein", word, strands, N, M))
    assert record(6, "Reidemeister pairs and skein", failures, time.perf_counter() - start)


def test_criterion_07_markov():
    start = time.perf_counter()
    rng = random.Random(7)
    failures = []
    for i in range(60):
        word, strands = random_braid(rng, 4, 6, min_strands=2)
        N = 1 + i % 2
        base = invariant_Q(word, strands, N)
        g = rng.randint(1, strands - 1) * rng.choice([1, -1])
        variants = [([g] + word + [-g], strands), ([1] + word + [-1], strands),
                    ([-1] + word + [1], strands), (word + [strands * rng.choice([1, -1])], strands + 1)]
        if word:
            variants.append((word[1:] + word[:1], strands))
        # a braid relation inserted at a random position
        at = rng.randint(0, len(word))
        if strands >= 3:
            j = rng.randint(1, strands - 2)
            variants.append((word[:at] + [j, j + 1, j, -(j + 1), -j, -(j + 1)] + word[at:], strands))
        for w, s in variants:
            if invariant_Q(w, s, N) != base:
                failures.append((word, strands, w, s, N))
    for N in (1, 2):
        for word, strands in (([], 2), ([1, 1, 1], 3), ([1, -1], 3)):
            if invariant_Q(word, strands, N) != ZERO:
                failures.append(("split", word, strands, N))
    assert record(7, "Markov suite on 60 braids, split links vanish", failures, time.perf_counter() - start)


def test_criterion_08_alexander():
    start = time.perf_counter()
    failures = []
    for name, (word, strands) in (("trefoil", TREFOIL), ("figure-eight", FIGURE_EIGHT)):
        if not oracles.equal_up_to_unit(invariant_Q(word, strands, 1), oracles.alexander(word, strands)):
            failures.append(name)
    assert record(8, "Alexander of trefoil and figure-eight", failures, time.perf_counter() - start)


def test_criterion_09_kashaev():
    start = time.perf_counter()
    failures = []
    for N in (1, 2, 3):
        for name, (word, strands) in (("unknot", ([], 1)), ("trefoil", TREFOIL), ("figure-eight", FIGURE_EIGHT)):
            res = kashaev_check(word, strands, N)
            if not res.equal or abs(res.lhs.value() - res.rhs.value()) > 1e-9:
                failures.append((name, N))
    assert record(9, "Kashaev identity, 9 cases", failures, time.perf_counter() - start, limit=600)


def test_criterion_10_stability():
    start = time.perf_counter()
    rng = random.Random(10)
    pairs = [(N, M) for N in range(4) for M in range(4) if N + M <= 3]
    failures = []
    for i, d in enumerate(diagrams(10, 50, RandomDiagramConfig())):
        N, M = rng.choice(pairs)
        if eval_dp(d, N, M) != eval_dp(d, N + 1, M + 1):
            failures.append(("graph", i, N, M))
    for i in range(50):
        word, strands = random_braid(rng, 3, 5)
        d = expand_braid(word, strands, label=rng.randint(1, 2))
        N, M = rng.choice(pairs)
        if invariant_P(d, N, M) != invariant_P(d, N + 1, M + 1):
            failures.append(("link", word, strands, N, M))
    assert record(10, "N-M stability, 50 graphs and 50 links", failures, time.perf_counter() - start)


if __name__ == "__main__":
    ok = True
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                ok = False
    sys.exit(0 if ok else 1)
