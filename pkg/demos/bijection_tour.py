"""
The psi/phi bijection on two-column tableaux
============================================

For ``P(3,4,6,7,7,7)`` we follow one tableau through psi and back, then run
the full consistency report at every level l.
"""

from chromqsym.biject import bijection_report, phi, psi, tprime_test
from chromqsym.orders import parse_m
from chromqsym.tableaux import PTableau

P = parse_m("3,4,6,7,7,7")
T = PTableau.of([[1, 5], [3, 7], [2], [6], [4]])
U = psi(P, T, 1)
print("T =", T.rows)
print("psi(T) =", U.rows)
print("witness:", tprime_test(P, U, 1))
print("phi(psi(T)) == T:", phi(P, U, 1) == T)

for ell in range(P.n // 2 + 1):
    rep = bijection_report(P, ell)
    print(f"l={ell}: |T-bar'|={rep['tbar_count']:3d} |T'|={rep['tprime_count']:3d} "
          f"coeff={rep['coeff']} ok={rep['ok']}")
