"""
Brute-force colorings as an independent check
=============================================

Enumerate proper colorings, weight each by t^(ascents), and compare with the
monomial expansion of the computed e-expansion.
"""

from chromqsym.oracle import check_symmetry, coloring_table, expand_to_monomials, first_difference
from chromqsym.orders import enumerate_prime_orders, graph, inc_graph
from chromqsym.symfun import e_expansion

for n in range(1, 6):
    ok = 0
    for P in enumerate_prime_orders(n):
        table = coloring_table(inc_graph(P), n)
        other = expand_to_monomials(e_expansion(P), n)
        ok += first_difference(table, other) is None and check_symmetry(table)
    print(f"n={n}: {ok} orders agree")

# relabelling a path badly breaks symmetry
bad = coloring_table(graph(3, [(1, 3), (2, 3)]), 3)
print("path 1-3-2 symmetric?", check_symmetry(bad))
