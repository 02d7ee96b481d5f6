"""
From an m-sequence to the e-expansion
=====================================

Build the path on four vertices as a natural unit interval order, list its
P-tableaux, and convert the Schur coefficients to the elementary basis.
"""

from chromqsym import e_expansion, enumerate_ptableaux, inc_graph, parse_m, schur_expansion
from chromqsym.symfun import render
from chromqsym.tableaux import inv_count, partitions

P = parse_m("2,3,4")
G = inc_graph(P)
print(P, "edges:", sorted(G.edges))

# every P-tableau, grouped by shape, with its inversion count
for lam in partitions(P.n):
    tabs = list(enumerate_ptableaux(P, lam))
    if tabs:
        print(lam, [(T.rows, inv_count(G, T)) for T in tabs])

# Schur coefficients B_lam(t), then the e-basis
print(render(schur_expansion(P), "s"))
print(render(e_expansion(P), "e"))

# a bigger order with seven edges
Q = parse_m("3,3,4,6,6")
print(Q)
print(render(e_expansion(Q), "e"))
