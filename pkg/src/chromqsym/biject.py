"""The inversion-preserving bijection between two-column P-tableaux.

For the first class of orders (``m_1 = r < n`` and ``m_{r+1} = n``), tableaux of
shape ``2^(l+1) 1^(n-2l-2)`` are matched with the subset ``T'`` of tableaux of
shape ``2^l 1^(n-2l)``; the leftover tableaux give the e-coefficients.
Row indices in this module are 1-based, as in the tableau diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .orders import EPOS_CLASS_1, EPOS_CLASS_2, FORMULA_4_4, NUIOrder, classify, inc_graph, relation_matrix, tag_names
from .qpoly import TPoly
from .symfun import EExpansion
from .tableaux import PTableau, enumerate_ptableaux, gf_of, inv_count, shape_gf, two_column


class ShapeMismatch(ValueError):
    pass


class NotInTPrime(ValueError):
    pass


class NotFirstClass(ValueError):
    pass


class NotSecondClass(ValueError):
    pass


@dataclass(frozen=True)
class TPrimeCertificate:
    member: bool
    s: int | None = None


def _check_shape(P: NUIOrder, T: PTableau, ell: int):
    want = two_column(P.n, ell)
    if ell < 0 or 2 * ell > P.n or T.shape != want:
        raise ShapeMismatch(f"expected shape {want}, got {T.shape}")


def tprime_test(P: NUIOrder, T: PTableau, ell: int) -> TPrimeCertificate:
    """Look for ``s >= ell+2`` with ``a_{i,1} <_P a_{s,1}`` for all ``ell < i < s``."""
    _check_shape(P, T, ell)
    lt = relation_matrix(P)
    col = T.column(0)
    witness = None
    for s in range(ell + 2, len(col) + 1):
        if all(lt[col[i - 1]][col[s - 1]] for i in range(ell + 1, s)):
            if witness is None:
                witness = s
                if not __debug__:
                    break
            else:
                raise AssertionError(f"two witnesses {witness} and {s} for {T.rows}")
    if witness is None:
        return TPrimeCertificate(False)
    return TPrimeCertificate(True, witness)


def psi(P: NUIOrder, T: PTableau, ell: int) -> PTableau:
    """Move the last second-column entry into column 1 of a shape one column shorter."""
    _check_shape(P, T, ell + 1)
    lt = relation_matrix(P)
    rows = [list(r) for r in T.rows]
    x = rows[ell].pop()  # b_{ell+1, 2}
    s = len(rows) + 1  # default: append at the bottom
    for i in range(ell + 2, len(rows) + 1):
        if not lt[rows[i - 1][0]][x]:
            s = i
            break
    rows.insert(s - 1, [x])
    return PTableau.of(rows)


def phi(P: NUIOrder, T: PTableau, ell: int) -> PTableau:
    """Inverse of :func:`psi` on ``T'``: move ``a_{s,1}`` beside ``a_{ell+1,1}``."""
    cert = tprime_test(P, T, ell)
    if not cert.member:
        raise NotInTPrime(f"tableau {T.rows} has no witness at l={ell}")
    rows = [list(r) for r in T.rows]
    (x,) = rows.pop(cert.s - 1)
    rows[ell].append(x)
    return PTableau.of(rows)


def _require_first_class(P: NUIOrder):
    if EPOS_CLASS_1 not in tag_names(classify(P)):
        raise NotFirstClass(f"{P} does not satisfy m_1 = r < n and m_(r+1) = n")


def tbar_tableaux(P: NUIOrder, ell: int) -> Iterator[PTableau]:
    for T in enumerate_ptableaux(P, two_column(P.n, ell)):
        if not tprime_test(P, T, ell).member:
            yield T


def coeff_via_tbar(P: NUIOrder, ell: int) -> TPoly:
    """Coefficient of ``e_(n-l, l)`` as a sum over tableaux outside ``T'``."""
    _require_first_class(P)
    if ell < 0 or 2 * ell > P.n:
        return TPoly()
    return gf_of(tbar_tableaux(P, ell), inc_graph(P))


def second_class_coeffs(P: NUIOrder) -> EExpansion:
    """The four e-coefficients of a second-class order from four Schur coefficients.

    The same four shapes carry the whole Schur expansion of the FORMULA_4_4
    orders, so those are accepted as well.
    """
    if not tag_names(classify(P)) & {EPOS_CLASS_2, FORMULA_4_4}:
        raise NotSecondClass(f"{P} is not in the second class")
    n = P.n
    b1 = shape_gf(P, (1,) * n)
    b2 = shape_gf(P, two_column(n, 1))
    b22 = shape_gf(P, two_column(n, 2))
    b3 = shape_gf(P, (3,) + (1,) * (n - 3))
    out = {
        (n - 2, 1, 1): b3,
        (n - 2, 2): b22 - b3,
        (n - 1, 1): b2 - b22 - b3,
        (n,): b1 - b2 + b3,
    }
    return {lam: p for lam, p in out.items() if p}


def bijection_report(P: NUIOrder, ell: int) -> dict:
    """Exhaustively check psi/phi at one ``l`` and the telescoping identity."""
    _require_first_class(P)
    n = P.n
    G = inc_graph(P)

    upper = list(enumerate_ptableaux(P, two_column(n, ell + 1))) if 2 * ell + 2 <= n else []
    lower = list(enumerate_ptableaux(P, two_column(n, ell)))
    tprime = {T for T in lower if tprime_test(P, T, ell).member}
    tbar = [T for T in lower if T not in tprime]

    images = [psi(P, T, ell) for T in upper]
    image_set = set(images)
    injective = len(image_set) == len(images)
    onto_tprime = image_set == tprime
    psi_then_phi = all(phi(P, U, ell) == T for T, U in zip(upper, images))
    phi_then_psi = all(psi(P, phi(P, U, ell), ell) == U for U in tprime)
    inv_kept = all(inv_count(G, T) == inv_count(G, U) for T, U in zip(upper, images))

    coeff = gf_of(tbar, G)
    telescoping = gf_of(lower, G) - gf_of(upper, G) == coeff
    ok = injective and onto_tprime and psi_then_phi and phi_then_psi and inv_kept and telescoping
    return {
        "l": ell,
        "tbar_count": len(tbar),
        "tprime_count": len(tprime),
        "upper_count": len(upper),
        "coeff": coeff.to_json(),
        "injective": injective,
        "image_is_tprime": onto_tprime,
        "phi_psi_identity": psi_then_phi,
        "psi_phi_identity": phi_then_psi,
        "inv_preserved": inv_kept,
        "telescoping": telescoping,
        "ok": ok,
    }
