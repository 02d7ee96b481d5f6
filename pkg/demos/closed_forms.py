"""
Closed forms against the tableau pipeline
=========================================

The families with known e-expansions are matched by ``classify``; the formula
for each is compared to the expansion computed from tableaux.
"""

from chromqsym.formulas import center_of_symmetry, closed_form
from chromqsym.orders import FORMULA_4_4, classify, enumerate_prime_orders, order_for
from chromqsym.symfun import e_expansion, expansions_equal, render

n = 6
hits = 0
for P in enumerate_prime_orders(n):
    cf = closed_form(P)
    if cf is None:
        continue
    tag, E = cf
    same = expansions_equal(E, e_expansion(P))
    hits += 1
    print(f"{P.key:12s} {str(tag):26s} agrees={same} center={center_of_symmetry(P)}")

print(hits, "orders on", n, "elements have a closed form")

# one expansion in full, with its q-bracket factorization
P = order_for(FORMULA_4_4, 7, 3, 2)
print(P)
print(sorted(str(t) for t in classify(P)))
print(render(closed_form(P)[1], "e"))
