"""Acceptance gate: one test per criterion, each with its own time limit.

Every criterion records PASS or FAIL in ``RESULTS``; the conftest hook prints
one line per criterion at the end of the run.  Running this file directly
(``python tests/test_acceptance.py``) does the same without pytest.
"""

from __future__ import annotations

import functools
import io
import json
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from itertools import permutations

from hypothesis import given, settings, strategies as st

from chromqsym.biject import bijection_report, tbar_tableaux
from chromqsym.cli import run
from chromqsym.formulas import (
    ClassParams,
    center_4_2,
    center_4_4,
    coeff_en_product,
    formula_4_2,
    formula_4_3,
    formula_4_4,
    formula_kchain,
)
from chromqsym.oracle import check_symmetry, coloring_table, expand_to_monomials
from chromqsym.orders import (
    EPOS_CLASS_1,
    EPOS_CLASS_2,
    FORMULA_4_2,
    FORMULA_4_4,
    KCHAIN,
    classify,
    enumerate_orders,
    enumerate_prime_orders,
    inc_graph,
    is_connected_order,
    num_edges,
    order_for,
    tag_names,
    validate,
)
from chromqsym.qpoly import (
    ONE,
    NonPolynomialRatio,
    TPoly,
    is_nonnegative,
    is_palindromic,
    is_unimodal,
    mul,
    multiset_inv_gf,
    q_factorial,
    q_int,
    q_ratio_factorial,
)
from chromqsym.symfun import e_expansion, expansions_equal
from chromqsym.tableaux import PTableau, all_ptableaux, inv_count
from chromqsym.verify import survey, sufficient_unimodal

RESULTS: dict[int, tuple[str, str, float]] = {}
TITLES: dict[int, str] = {}


def criterion(number: int, title: str, limit: float):
    """Record PASS/FAIL for one criterion; exceeding ``limit`` seconds is a failure."""

    def wrap(fn):
        TITLES[number] = title

        @functools.wraps(fn)
        def inner():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                RESULTS[number] = ("FAIL", title, time.perf_counter() - start)
                raise
            elapsed = time.perf_counter() - start
            if elapsed > limit:
                RESULTS[number] = ("FAIL", title, elapsed)
                raise AssertionError(f"criterion {number} took {elapsed:.2f}s > {limit}s")
            RESULTS[number] = ("PASS", title, elapsed)

        return inner

    return wrap


def summary_lines() -> list[str]:
    lines = []
    for k in sorted(TITLES):
        status, title, elapsed = RESULTS.get(k, ("FAIL", TITLES[k], 0.0))
        if k not in RESULTS:
            status = "NOT RUN"
        lines.append(f"{status} criterion {k:2d} [{elapsed:7.2f}s] {title}")
    return lines


def _cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(list(argv))
    return code, buf.getvalue()


PATH4 = validate((2, 3, 4))


@criterion(1, "golden example: P(2,3,4) expansion, 14 tableaux, T-bar sizes", 1.0)
def test_criterion_01_golden_example():
    code, out = _cli("expand", "--m", "2,3,4", "--json")
    assert code == 0
    e = json.loads(out)["result"]["e"]
    assert e == {"2,2": [0, 1, 1], "3,1": [0, 1, 1], "4": [1, 1, 1, 1]}
    assert sum(1 for _ in all_ptableaux(PATH4)) == 14
    sizes = {ell: sum(1 for _ in tbar_tableaux(PATH4, ell)) for ell in (2, 1, 0)}
    assert sizes == {2: 2, 1: 2, 0: 4}


@criterion(2, "reflection golden: P(3,3,4) and P(2,4,4)", 1.0)
def test_criterion_02_reflection_golden():
    q2 = q_int(2)
    want = {(4,): mul(q2, q_int(4)), (3, 1): mul(q2, q2).shift(1)}
    a = e_expansion(validate((3, 3, 4)))
    b = e_expansion(validate((2, 4, 4)))
    assert expansions_equal(a, b)
    assert expansions_equal(a, want)
    code, out = _cli("reflect", "--m", "3,3,4")
    assert code == 0 and out.splitlines()[1:] == ["2,4,4", "expansions-equal: true"]


@criterion(3, "inversion golden: inv = 6 on P(3,5,5,6,7,8,8)", 1.0)
def test_criterion_03_inversion_golden():
    P = validate((3, 5, 5, 6, 7, 8, 8))
    T = PTableau.of([[1, 4, 7], [3, 6], [2, 8], [5]])
    assert inv_count(inc_graph(P), T) == 6


@criterion(4, "closed forms equal the tableau pipeline for n <= 9", 600.0)
def test_criterion_04_formulas_match_enumeration():
    checked = 0
    for n in range(3, 10):
        for r in range(2, n):
            for s in range(1, r):
                E = e_expansion(order_for(FORMULA_4_2, n, r, s))
                assert expansions_equal(formula_4_2(ClassParams(n, r, s)), E), (n, r, s)
                checked += 1
                if s == 1:
                    assert expansions_equal(formula_4_3(n, r), E), (n, r)
                if s == r - 1:
                    assert expansions_equal(formula_kchain(n, r), E), (n, r)
            assert expansions_equal(formula_kchain(n, r), e_expansion(order_for(KCHAIN, n, r)))
        for r in range(2, n - 1):
            for s in range(2, r + 1):
                E = e_expansion(order_for(FORMULA_4_4, n, r, s))
                assert expansions_equal(formula_4_4(ClassParams(n, r, s)), E), (n, r, s)
                checked += 1
    # 4.2: sum over n of C(n-1, 2); 4.4: sum over n of C(n-2, 2)
    assert checked == sum((n - 1) * (n - 2) // 2 for n in range(3, 10)) + sum(
        (n - 3) * (n - 2) // 2 for n in range(4, 10)
    )


@criterion(5, "e_n product formula on every connected order n <= 7", 60.0)
def test_criterion_05_product_formula():
    count = 0
    for n in range(1, 8):
        for P in enumerate_prime_orders(n):
            assert coeff_en_product(P) == e_expansion(P).get((n,), TPoly()), P
            count += 1
    assert count == 1 + 1 + 2 + 5 + 14 + 42 + 132


@criterion(6, "coloring oracle equals the e-expansion for connected n <= 6", 120.0)
def test_criterion_06_oracle_equivalence():
    for n in range(1, 7):
        for P in enumerate_prime_orders(n):
            table = coloring_table(inc_graph(P), n)
            assert table == expand_to_monomials(e_expansion(P), n, "e"), P
            assert check_symmetry(table), P


@criterion(7, "palindromic about |E|/2 for every connected order n <= 8", 300.0)
def test_criterion_07_palindromicity():
    for n in range(1, 9):
        for P in enumerate_prime_orders(n):
            center = Fraction(num_edges(P), 2)
            for lam, p in e_expansion(P).items():
                assert is_palindromic(p, center), (P, lam)


@criterion(8, "psi/phi bijection and telescoping on class-1 orders n <= 7", 120.0)
def test_criterion_08_bijection_suite():
    checks = 0
    for n in range(2, 8):
        for P in enumerate_orders(n):
            if EPOS_CLASS_1 not in tag_names(classify(P)):
                continue
            for ell in range(n // 2 + 1):
                rep = bijection_report(P, ell)
                assert rep["ok"], (P, ell, rep)
                checks += 1
    assert checks > 0


@criterion(9, "census: survey(8) 429/120/10, survey(5) 14/11", 300.0)
def test_criterion_09_census():
    _, c8 = survey(8)
    assert (c8.total, c8.class1, c8.class2_only) == (429, 2**7 - 8, (8 - 3) * (8 - 4) // 2)
    assert (c8.total, c8.class1, c8.class2_only) == (429, 120, 10)
    _, c5 = survey(5)
    assert (c5.total, c5.class1) == (14, 11)


@criterion(10, "e-positivity of both classes; unimodal-sufficient with stated centers", 300.0)
def test_criterion_10_positivity():
    for n in range(2, 9):
        for P in enumerate_orders(n):
            if tag_names(classify(P)) & {EPOS_CLASS_1, EPOS_CLASS_2}:
                assert all(is_nonnegative(p) for p in e_expansion(P).values()), P
    for n in range(3, 10):
        for r in range(2, n):
            for s in range(1, r):
                E = e_expansion(order_for(FORMULA_4_2, n, r, s))
                assert sufficient_unimodal(E, center_4_2(n, r, s)), (n, r, s)
        for r in range(2, n - 1):
            for s in range(2, r + 1):
                E = e_expansion(order_for(FORMULA_4_4, n, r, s))
                assert sufficient_unimodal(E, center_4_4(n, r, s)), (n, r, s)


def _brute_multiset(mults):
    word = [v for v, c in enumerate(mults) for _ in range(c)]
    counts: dict[int, int] = {}
    for w in set(permutations(word)):
        k = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        counts[k] = counts.get(k, 0) + 1
    return TPoly(counts.get(k, 0) for k in range(max(counts) + 1))


def _compositions(total):
    if total == 0:
        yield []
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield [first] + rest


@st.composite
def _unimodal_palindrome(draw):
    steps = draw(st.lists(st.integers(0, 5), min_size=1, max_size=5))
    rising, acc = [], draw(st.integers(1, 3))
    for d in steps:
        acc += d
        rising.append(acc)
    body = rising + (rising[-2::-1] if draw(st.booleans()) else rising[::-1])
    shift = draw(st.integers(0, 3))
    return TPoly([0] * shift + body), Fraction(2 * shift + len(body) - 1, 2)


@criterion(11, "property suites: product unimodality, multiset g.f., q-ratio round trips", 60.0)
def test_criterion_11_property_suites():
    seen = []

    @settings(max_examples=1000, deadline=None, database=None)
    @given(_unimodal_palindrome(), _unimodal_palindrome())
    def product(a, b):
        (A, ca), (B, cb) = a, b
        C = mul(A, B)
        assert is_nonnegative(C) and is_unimodal(C) and is_palindromic(C, ca + cb)
        seen.append(1)

    product()
    assert len(seen) >= 1000

    multisets = 0
    for size in range(1, 9):
        for mults in _compositions(size):
            assert multiset_inv_gf(mults) == _brute_multiset(mults), mults
            multisets += 1
    assert multisets == 2**8 - 1

    @settings(max_examples=300, deadline=None, database=None)
    @given(
        st.lists(st.integers(0, 8), min_size=1, max_size=4),
        st.lists(st.integers(0, 8), max_size=4),
    )
    def roundtrip(num, den):
        try:
            q = q_ratio_factorial(num, den)
        except NonPolynomialRatio:
            return
        lhs, rhs = q, ONE
        for d in den:
            lhs = mul(lhs, q_factorial(d))
        for a in num:
            rhs = mul(rhs, q_factorial(a))
        assert lhs == rhs

    roundtrip()
    for a in range(0, 9):
        for b in range(0, a + 1):
            q = q_ratio_factorial([a], [b, a - b])
            assert mul(q, mul(q_factorial(b), q_factorial(a - b))) == q_factorial(a)


def main() -> int:
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except Exception as exc:  # noqa: BLE001 - report and keep going
            failed += 1
            print(f"{t.__name__}: {type(exc).__name__}: {exc}", file=sys.stderr)
    print("\n".join(summary_lines()))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
