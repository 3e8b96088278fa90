"""Acceptance suite: ten criteria, each printing one PASS/FAIL line.

Run under pytest (``pytest tests/test_acceptance.py -s`` shows the lines
inline; they are printed even without ``-s``) or directly with
``python3 tests/test_acceptance.py``.  Every comparison is exact.
"""

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from goldens import GOLDENS, S, normalised  # noqa: E402

from qmatrix.algebra import AlgebraElement, linearly_independent  # noqa: E402
from qmatrix.indexsets import IndexSet, leq_order, omega0, subsets  # noqa: E402
from qmatrix.laurent import ONE, Q, ZERO, LaurentPoly, NotDivisibleError, neg_q_integer, pow_neg_q, qhat  # noqa: E402
from qmatrix.minors import laplace_col_check, laplace_row_check, quantum_minor  # noqa: E402
from qmatrix.poisson import (  # noqa: E402
    VARIANTS,
    CommutativePoly,
    bracket,
    bracket_minors,
    classical_minor,
    semiclassical_bracket,
)
from qmatrix.relations import (  # noqa: E402
    ALL_KINDS,
    gen_pair_relation,
    quasicommutation_exponent,
    sweep_verify,
    verify_relation,
)
from qmatrix.rform import r_minor_closed, r_minor_oracle, r_minors_via_words  # noqa: E402

GOLDEN_INPUT = (S("45678"), S("12345"), S("123459"), S("456789"))
GOLDEN_VALUE = Q ** 2 * qhat() ** 3 * pow_neg_q(-3) * neg_q_integer(3) * neg_q_integer(2)


def shapes(n, sizes=None):
    sizes = range(1, n + 1) if sizes is None else sizes
    return [(R, C) for k in sizes if k <= n for R in subsets(n, k) for C in subsets(n, k)]


# -- the criteria ------------------------------------------------------------
# each returns (ok, detail)


def criterion_1():
    closed = r_minor_closed(*GOLDEN_INPUT)
    t = time.time()
    oracle = r_minor_oracle(*GOLDEN_INPUT, n=9)
    elapsed = time.time() - t
    expanded = LaurentPoly({5: 1, 3: -1, 1: -1, -3: 1, -5: 1, -7: -1})
    ok = closed == oracle == GOLDEN_VALUE == expanded
    return ok, f"closed={closed} oracle={oracle} (oracle {elapsed:.2f}s)"


def _support_quadruple(rng, n, k):
    # a size-k quadruple satisfying the set conditions, so the value is usually nonzero
    sets = subsets(n, k)
    while True:
        I, J, M = rng.choice(sets), rng.choice(sets), rng.choice(sets)
        if not leq_order(J, I) or not set(I & M) <= set(J) or not set(J) <= set(I | M):
            continue
        N = IndexSet(set(I & M) | (set(I | M) - set(J)))
        if len(N) == k:
            return I, J, M, N


def criterion_2():
    n = 4
    sh = shapes(n, (1, 2))
    bad, count, nonzero = [], 0, 0
    for I, J in sh:
        for M, N in sh:
            count += 1
            v = r_minors_via_words(I, J, M, N, n)
            nonzero += bool(v)
            if v != r_minor_closed(I, J, M, N):
                bad.append((I, J, M, N))
    rng = random.Random(20240601)
    s3 = subsets(6, 3)
    randoms = [tuple(rng.choice(s3) for _ in range(4)) for _ in range(100)]
    randoms += [_support_quadruple(rng, 6, 3) for _ in range(50)]
    rnz = 0
    for quad in randoms:
        v = r_minors_via_words(*quad, 6)
        rnz += bool(v)
        if v != r_minor_closed(*quad):
            bad.append(quad)
    detail = (
        f"{count} quadruples n=4 ({nonzero} nonzero), 100 uniform + 50 support-drawn size-3 in n=6 "
        f"({rnz} nonzero), {len(bad)} mismatches"
    )
    return not bad, detail + (f"; first {bad[0]}" if bad else "")


def criterion_3():
    fails = []
    for kind, sets, n, expected, lead in GOLDENS:
        rel = gen_pair_relation(kind, *map(S, sets), n)
        got = normalised(rel.term_map(), lead)
        if set(got) != set(expected) or got != normalised(expected, lead) or not verify_relation(rel):
            fails.append(kind)
    return not fails, f"{len(GOLDENS) - len(fails)}/{len(GOLDENS)} displayed relations reproduced and verified"


def criterion_4():
    t = time.time()
    reports = [sweep_verify(n, n, ALL_KINDS) for n in (1, 2, 3)]
    reports.append(sweep_verify(4, 2, ALL_KINDS))
    passed = sum(r.total_passed for r in reports)
    failed = sum(r.total_failed for r in reports)
    first = next((r.first_failure for r in reports if r.first_failure), None)
    detail = f"{passed} identities passed, {failed} failed, {time.time() - t:.1f}s"
    return failed == 0, detail + (f"; first {first}" if first else "")


def _one_row_value(i, j, I, J, sign):
    # qhat (-q)^(+-(|[1,i) & J| - |[1,j) & I|)) [i in J][j in I][I-j == J-i]
    if not (i in J and j in I and set(I) - {j} == set(J) - {i}):
        return ZERO
    e = len([x for x in J if x < i]) - len([x for x in I if x < j])
    return qhat() * pow_neg_q(sign * e)


def criterion_5():
    bad, checks = [], 0
    for n in range(1, 5):
        sh = shapes(n)
        for I, J in sh:
            for i in range(1, n + 1):
                expected = (Q if i in I else ONE) if I == J else ZERO
                for got in (r_minor_closed(I, J, [i], [i]), r_minor_closed([i], [i], I, J), r_minor_oracle(I, J, [i], [i], n)):
                    checks += 1
                    if got != expected:
                        bad.append(("diag", n, i, I, J))
                for j in range(1, n + 1):
                    if i < j:
                        expected = _one_row_value(i, j, I, J, 1)
                        pair = (r_minor_closed(I, J, [i], [j]), r_minor_oracle(I, J, [i], [j], n))
                    elif i > j:
                        expected = _one_row_value(i, j, I, J, -1)
                        pair = (r_minor_closed([i], [j], I, J), r_minor_oracle([i], [j], I, J, n))
                    else:
                        continue
                    checks += 2
                    if any(g != expected for g in pair):
                        bad.append(("offdiag", n, i, j, I, J))
            for M, N in sh:
                if I != J:
                    continue
                expected = Q ** len(I & M) if M == N else ZERO
                checks += 2
                if r_minor_closed(I, I, M, N) != expected or r_minor_closed(M, N, I, I) != expected:
                    bad.append(("principal", n, I, M, N))
    return not bad, f"{checks} special-case values checked, {len(bad)} mismatches" + (f"; first {bad[0]}" if bad else "")


def _splits(I):
    k = len(I)
    for a in range(1, k):
        for A in combinations(I, a):
            for B in combinations(I, k - a):
                yield IndexSet(A), IndexSet(B)


def criterion_6():
    bad, checks = [], 0
    for n in range(1, 5):
        for R, C in shapes(n):
            for A, B in _splits(R):
                checks += 1
                if not laplace_row_check(R, C, A, B, n):
                    bad.append(("row", R, C, A, B))
            for A, B in _splits(C):
                checks += 1
                if not laplace_col_check(R, C, A, B, n):
                    bad.append(("col", R, C, A, B))
    return not bad, f"{checks} row and column splits checked, {len(bad)} failures"


def criterion_7():
    bad, checks = [], 0
    for n in range(1, 5):
        sh = shapes(n)
        for I, J in sh:
            for M, N in sh:
                checks += 1
                v = r_minor_oracle(I, J, M, N, n)
                w = r_minor_closed(I, J, M, N)
                if v != w:
                    bad.append(("oracle", I, J, M, N))
                if r_minor_closed(N, M, J, I) != w or r_minor_oracle(N, M, J, I, n) != v:
                    bad.append(("transpose", I, J, M, N))
                wo = (omega0(M, n), omega0(N, n), omega0(I, n), omega0(J, n))
                if r_minor_closed(*wo) != w or r_minor_oracle(*wo, n) != v:
                    bad.append(("anti-transpose", I, J, M, N))
                if not leq_order(J, I) and v:
                    bad.append(("left vanishing", I, J, M, N))
                if not leq_order(M, N) and v:
                    bad.append(("right vanishing", I, J, M, N))
    return not bad, f"{checks} minor pairs over n<=4, {len(bad)} failures" + (f"; first {bad[0]}" if bad else "")


def _commutes(I, J, M, N, n, m):
    a, b = quantum_minor(I, J, n), quantum_minor(M, N, n)
    return (a * b - (b * a).scale(Q ** m)).is_zero()


def criterion_8():
    bad, confirmed, corner = [], 0, 0
    for n in range(1, 5):
        sh = shapes(n)
        for I, J in sh:
            for M, N in sh:
                m = quasicommutation_exponent(I, J, M, N)
                if m is None:
                    continue
                confirmed += 1
                if not _commutes(I, J, M, N, n, m):
                    bad.append((I, J, M, N, m))
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                I, N = IndexSet(range(1, r + 1)), IndexSet(range(1, s + 1))
                for J in subsets(n, r):
                    for M in subsets(n, s):
                        corner += 1
                        m = len(J & N) - len(I & M)
                        if quasicommutation_exponent(I, J, M, N) != m or not _commutes(I, J, M, N, n, m):
                            bad.append(("corner", I, J, M, N, m))
    detail = f"{confirmed} exponents confirmed by commutation, {corner} corner-minor cases, {len(bad)} failures"
    return not bad, detail + (f"; first {bad[0]}" if bad else "")


def _five_ways(I, J, M, N, n):
    out = [bracket(classical_minor(I, J), classical_minor(M, N))]
    out += [bracket_minors(v, I, J, M, N) for v in VARIANTS]
    out.append(semiclassical_bracket(I, J, M, N, n))
    return out


def criterion_9():
    bad, pairs, division_failures = [], 0, 0
    work = []
    for n in range(1, 4):
        sh = shapes(n)
        work += [(I, J, M, N, n) for I, J in sh for M, N in sh]
    rng = random.Random(77)
    sh4 = shapes(4)
    for _ in range(100):
        (I, J), (M, N) = rng.choice(sh4), rng.choice(sh4)
        work.append((I, J, M, N, 4))
    for I, J, M, N, n in work:
        pairs += 1
        try:
            ways = _five_ways(I, J, M, N, n)
        except NotDivisibleError:
            division_failures += 1
            continue
        if any(w != ways[0] for w in ways):
            bad.append((I, J, M, N))
    gens = [(i, j) for i in range(1, 4) for j in range(1, 4)]
    jacobi_bad = 0
    for _ in range(100):
        f, g, h = (
            CommutativePoly.monomial([rng.choice(gens) for _ in range(rng.randint(1, 3))], rng.choice([1, -1, 2, 3]))
            for _ in range(3)
        )
        if not (bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g))).is_zero():
            jacobi_bad += 1
    ok = not bad and not division_failures and not jacobi_bad
    detail = (
        f"{pairs} minor pairs ({len(bad)} disagreements, {division_failures} divisibility failures), "
        f"100 Jacobi triples ({jacobi_bad} failures)"
    )
    return ok, detail


def _pbw_sets(n):
    for k in range(1, n):
        for m in range(1, n - k + 1):
            Jstar = list(range(n - k + 1, n + 1))
            Nstar = list(range(1, m + 1))
            yield [quantum_minor(U, Nstar, n) * quantum_minor(V, Jstar, n) for U in subsets(n, m) for V in subsets(n, k)]


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def criterion_10():
    rng = random.Random(500)
    assoc_bad = grade_bad = 0
    for _ in range(500):
        n = rng.randint(1, 4)
        gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        a, b, c = (AlgebraElement.word(n, [rng.choice(gens) for _ in range(rng.randint(0, 4))]) for _ in range(3))
        ab = a * b
        if ab * c != a * (b * c):
            assoc_bad += 1
        for x, y in ((a, b), (ab, c)):
            xy = x * y
            if xy.is_zero():
                continue
            (rx, cx), (ry, cy) = x.grading(), y.grading()
            if xy.grading() != (_add(rx, ry), _add(cx, cy)):
                grade_bad += 1
    pbw_sets = [prods for n in (1, 2, 3) for prods in _pbw_sets(n)]
    pbw_bad = sum(1 for prods in pbw_sets if not linearly_independent(prods))
    ok = not (assoc_bad or grade_bad or pbw_bad)
    detail = (
        f"500 triples: {assoc_bad} associativity and {grade_bad} grading failures; "
        f"{len(pbw_sets)} factorised product families, {pbw_bad} dependent"
    )
    return ok, detail


CRITERIA = {
    1: ("golden r value in n=9", criterion_1),
    2: ("closed form equals the word recursion", criterion_2),
    3: ("four displayed relations term for term", criterion_3),
    4: ("exhaustive identity sweep", criterion_4),
    5: ("one-row and principal special cases", criterion_5),
    6: ("Laplace expansions", criterion_6),
    7: ("symmetry and vanishing of r", criterion_7),
    8: ("quasicommutation exponents", criterion_8),
    9: ("Poisson bracket agreement", criterion_9),
    10: ("algebra soundness", criterion_10),
}


def _line(k, ok, title, detail):
    return f"CRITERION {k} {'PASS' if ok else 'FAIL'}: {title}: {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    title, check = CRITERIA[k]
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(k, ok, title, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for k in sorted(CRITERIA):
        title, check = CRITERIA[k]
        t = time.time()
        ok, detail = check()
        failures += not ok
        print(_line(k, ok, title, detail) + f" [{time.time() - t:.1f}s]", flush=True)
    sys.exit(1 if failures else 0)
