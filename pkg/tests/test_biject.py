import pytest

from chromqsym.biject import (
    NotFirstClass,
    NotInTPrime,
    NotSecondClass,
    ShapeMismatch,
    bijection_report,
    coeff_via_tbar,
    phi,
    psi,
    second_class_coeffs,
    tbar_tableaux,
    tprime_test,
)
from chromqsym.formulas import ClassParams, coeff_en_product, formula_4_4
from chromqsym.orders import (
    EPOS_CLASS_1,
    EPOS_CLASS_2,
    FORMULA_4_4,
    classify,
    enumerate_orders,
    tag_names,
    validate,
)
from chromqsym.qpoly import TPoly, is_nonnegative, q_int
from chromqsym.symfun import e_expansion
from chromqsym.tableaux import PTableau

SEC31 = validate((3, 4, 6, 7, 7, 7))
PATH4 = validate((2, 3, 4))


def test_tprime_examples():
    T1 = PTableau.of([[1, 5], [2], [4], [6], [3], [7]])
    T2 = PTableau.of([[1, 5], [3], [2], [7], [6], [4]])
    assert not tprime_test(SEC31, T1, 1).member
    cert = tprime_test(SEC31, T2, 1)
    assert cert.member and cert.s == 4


def test_tprime_single_column_nonmember():
    T = PTableau.of([[4], [3], [2], [1]])
    assert not tprime_test(PATH4, T, 0).member


def test_tprime_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        tprime_test(PATH4, PTableau.of([[1, 3], [2, 4]]), 1)


def test_psi_example_and_inverse():
    T = PTableau.of([[1, 5], [3, 7], [2], [6], [4]])
    U = PTableau.of([[1, 5], [3], [2], [7], [6], [4]])
    assert psi(SEC31, T, 1) == U
    assert phi(SEC31, U, 1) == T


def test_psi_small_case():
    P = validate((2, 3))
    T = PTableau.of([[1, 3], [2]])
    U = psi(P, T, 0)
    # 2 is not below 3 in P, so 3 lands directly under row 1
    assert U == PTableau.of([[1], [3], [2]])
    assert phi(P, U, 0) == T


def test_phi_rejects_nonmembers():
    T1 = PTableau.of([[1, 5], [2], [4], [6], [3], [7]])
    with pytest.raises(NotInTPrime):
        phi(SEC31, T1, 1)


def test_tbar_examples():
    assert coeff_via_tbar(PATH4, 2) == TPoly([0, 1, 1])
    assert coeff_via_tbar(PATH4, 0) == q_int(4)
    assert [len(list(tbar_tableaux(PATH4, ell))) for ell in (0, 1, 2)] == [4, 2, 2]


def test_requires_first_class():
    with pytest.raises(NotFirstClass):
        coeff_via_tbar(validate((2, 3, 4, 5)), 0)
    with pytest.raises(NotSecondClass):
        second_class_coeffs(validate((2, 4, 4)))


def _first_class(max_n):
    for n in range(2, max_n + 1):
        for P in enumerate_orders(n):
            if EPOS_CLASS_1 in tag_names(classify(P)):
                yield P


def test_tbar_gives_every_two_row_coefficient():
    for P in _first_class(7):
        E = e_expansion(P)
        assert coeff_via_tbar(P, 0) == coeff_en_product(P) == E.get((P.n,), TPoly())
        for ell in range(1, P.n // 2 + 1):
            lam = (P.n - ell, ell)
            assert coeff_via_tbar(P, ell) == E.get(lam, TPoly())
        assert all(len(lam) <= 2 for lam in E)


@pytest.mark.parametrize("n", range(2, 7))
def test_bijection_reports(n):
    for P in _first_class(n):
        if P.n != n:
            continue
        for ell in range(n // 2 + 1):
            rep = bijection_report(P, ell)
            assert rep["ok"], (P, ell, rep)


def test_second_class_example():
    P = validate((4, 8, 8, 8, 8, 8, 9, 9))
    C = second_class_coeffs(P)
    assert all(is_nonnegative(p) for p in C.values())
    assert C == e_expansion(P)


def test_second_class_matches_pipeline():
    for n in range(5, 9):
        for P in enumerate_orders(n):
            tags = classify(P)
            if EPOS_CLASS_2 not in tag_names(tags):
                continue
            E = e_expansion(P)
            assert second_class_coeffs(P) == E
            assert set(E) <= {(n,), (n - 1, 1), (n - 2, 2), (n - 2, 1, 1)}


def test_formula_4_4_orders_via_second_class_route():
    seen = 0
    for n in range(4, 9):
        for P in enumerate_orders(n):
            for tag in classify(P):
                if tag.name == FORMULA_4_4:
                    E = formula_4_4(ClassParams(n, tag.r, tag.s))
                    assert second_class_coeffs(P) == E == e_expansion(P)
                    seen += 1
    assert seen == sum(k * (k + 1) // 2 for k in range(1, 6))
