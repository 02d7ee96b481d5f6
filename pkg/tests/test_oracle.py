import pytest

from chromqsym.oracle import (
    ImproperColoring,
    ascent_count,
    check_symmetry,
    chromatic_polynomial,
    coloring_table,
    e_monomials,
    expand_to_monomials,
    first_difference,
    is_palindromic_table,
    t_at_one,
)
from chromqsym.orders import enumerate_orders, graph, inc_graph, num_edges, validate
from chromqsym.qpoly import TPoly
from chromqsym.symfun import e_expansion
from chromqsym.tableaux import schur_expansion

K2 = graph(2, [(1, 2)])
PATH3 = inc_graph(validate((2, 3)))


def test_ascents():
    assert ascent_count(K2, (1, 2)) == 1
    assert ascent_count(K2, (2, 1)) == 0
    assert ascent_count(PATH3, (1, 2, 1)) == 1
    assert ascent_count(graph(3, []), (1, 1, 1)) == 0
    with pytest.raises(ImproperColoring):
        ascent_count(K2, (1, 1))


def test_coloring_table_small():
    assert coloring_table(K2, 2) == {(1, 1): TPoly([1, 1])}
    one = graph(1, [])
    assert coloring_table(one, 3) == {(1, 0, 0): TPoly([1]), (0, 1, 0): TPoly([1]), (0, 0, 1): TPoly([1])}


def test_e_monomials():
    assert e_monomials((2,), 2) == {(1, 1): 1}
    assert e_monomials((1, 1), 2) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}


def test_path_tables():
    assert coloring_table(PATH3, 3) == expand_to_monomials(schur_expansion(validate((2, 3))), 3, "s")
    P = validate((2, 3, 4))
    assert coloring_table(inc_graph(P), 4) == expand_to_monomials(e_expansion(P), 4, "e")


@pytest.mark.parametrize("n", range(1, 6))
def test_symmetric_and_palindromic(n):
    for P in enumerate_orders(n):
        M = coloring_table(inc_graph(P), n)
        assert check_symmetry(M)
        assert is_palindromic_table(M, num_edges(P))


def test_negative_controls():
    # path 1-3-2: a non-natural labelling of a unit interval graph
    bad = coloring_table(graph(3, [(1, 3), (2, 3)]), 3)
    assert not check_symmetry(bad)
    assert not check_symmetry({(2, 1, 0): TPoly([1])})


@pytest.mark.parametrize("n", range(1, 6))
def test_t_at_one_counts_colorings(n):
    for P in enumerate_orders(n):
        G = inc_graph(P)
        for k in range(1, n + 2):
            counts = t_at_one(coloring_table(G, k))
            assert sum(counts.values()) == chromatic_polynomial(G, k)


def test_chromatic_polynomial_examples():
    K = inc_graph(validate((4, 4, 4)))
    assert [chromatic_polynomial(K, k) for k in range(5)] == [0, 0, 0, 0, 24]
    P = inc_graph(validate((2, 3, 4)))
    assert chromatic_polynomial(P, 3) == 3 * 2**3
    assert chromatic_polynomial(graph(4, []), 2) == 16
    assert chromatic_polynomial(inc_graph(validate((5,) * 4)), 6) == 720


def test_first_difference():
    A = {(1, 1): TPoly([1, 1])}
    assert first_difference(A, dict(A)) is None
    expo, a, b = first_difference(A, {(1, 1): TPoly([1])})
    assert expo == (1, 1) and a == TPoly([1, 1]) and b == TPoly([1])


def test_too_few_colors_still_agrees():
    P = validate((3, 3, 4))
    assert coloring_table(inc_graph(P), 3) == expand_to_monomials(e_expansion(P), 3)
