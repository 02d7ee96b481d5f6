"""Closed-form e-expansions for the families of orders where one is known."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .orders import (
    FORMULA_4_2,
    FORMULA_4_3,
    FORMULA_4_4,
    KCHAIN,
    NUIOrder,
    b_sequence,
    classify,
    inc_graph,
    num_edges,
)
from .qpoly import ONE, TPoly, exact_div, mul, q_factorial, q_int, q_ratio_factorial
from .symfun import EExpansion


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class ClassParams:
    n: int
    r: int
    s: int = 1


def _two_row(n: int, ell: int) -> tuple[int, ...]:
    return (n - ell, ell) if ell else (n,)


def _clean(E: dict) -> EExpansion:
    return {lam: p for lam, p in sorted(E.items()) if p}


def coeff_en_product(P: NUIOrder) -> TPoly:
    """``[n]_t * prod_i [b_i]_t``: the coefficient of ``e_n``."""
    out = q_int(P.n)
    for b in b_sequence(inc_graph(P)):
        out = mul(out, q_int(b))
    return out


def check_params_4_2(p: ClassParams):
    if not (1 <= p.s <= p.r - 1 and p.r <= p.n - 1):
        raise InvalidParams(f"need 1 <= s <= r-1 and r <= n-1, got {p}")


def formula_4_2(p: ClassParams) -> EExpansion:
    """Orders with ``m_1 = ... = m_s = r`` and ``m_{s+1} = n``."""
    check_params_4_2(p)
    n, r, s = p.n, p.r, p.s
    out = {}
    for ell in range(min(n - r, s) + 1):
        c = q_ratio_factorial(
            [n - r, s, r - ell - 1, n - s - ell - 1],
            [n - r - ell, s - ell, r - s - 1],
        )
        out[_two_row(n, ell)] = mul(c, q_int(n - 2 * ell)).shift((r - s) * ell)
    return _clean(out)


def formula_4_3(n: int, r: int) -> EExpansion:
    """Orders with ``m_1 = r`` and ``m_2 = n``."""
    if not 2 <= r <= n - 1:
        raise InvalidParams(f"need 2 <= r <= n-1, got n={n}, r={r}")
    f = q_factorial(n - 2)
    return _clean({
        (n,): mul(f, mul(q_int(n), q_int(r - 1))),
        (n - 1, 1): mul(f, q_int(n - r)).shift(r - 1),
    })


def formula_kchain(n: int, r: int) -> EExpansion:
    """Chains of two complete graphs ``K_r`` and ``K_{n-r+1}`` sharing a vertex."""
    if not 2 <= r <= n - 1:
        raise InvalidParams(f"need 2 <= r <= n-1, got n={n}, r={r}")
    base = mul(q_factorial(n - r), q_factorial(r - 1))
    return _clean({
        _two_row(n, ell): mul(base, q_int(n - 2 * ell)).shift(ell)
        for ell in range(min(n - r, r - 1) + 1)
    })


def check_params_4_4(p: ClassParams):
    if not (2 <= p.s <= p.r <= p.n - 2):
        raise InvalidParams(f"need 2 <= s <= r <= n-2, got {p}")


def _c31_symmetrized_twice(n: int, r: int, s: int) -> TPoly:
    # t^(r-1) (1 + t^(n-r-s)) written as t^(r-1) + t^(n-s-1) so n-r-s < 0 is fine
    a = mul(ONE.shift(r - 1) + ONE.shift(n - s - 1), q_int(n - 3))
    b = mul(mul(q_int(2), q_int(r - 2)), q_int(s - 1)).shift(n - s - 1)
    c = mul(mul(q_int(2), q_int(n - r - 1)), q_int(n - s - 2)).shift(r - 1)
    return mul(q_int(n - 2), a + b + c)


def formula_4_4(p: ClassParams) -> EExpansion:
    """Orders with ``m_1 = r``, ``m_2 = ... = m_s = n-1`` and ``m_{s+1} = n``."""
    check_params_4_4(p)
    n, r, s = p.n, p.r, p.s
    cn = mul(mul(q_int(n), q_int(n - 3)), mul(q_int(r - 1), q_int(n - s - 1)))
    c22 = mul(mul(q_int(2), q_int(n - r - 1)), q_int(s - 1)).shift(n + r - s - 3)
    c31 = mul(
        q_int(n - 2),
        q_int(n - 3).shift(n - s - 1)
        + mul(q_int(r - 2), q_int(s - 1)).shift(n - s)
        + mul(q_int(n - r - 1), q_int(n - s - 2)).shift(r - 1),
    )
    twice = _c31_symmetrized_twice(n, r, s)
    if exact_div(twice, TPoly([2])) != c31:
        raise AssertionError(f"symmetrized (n-1,1) coefficient disagrees for {p}")
    f = q_factorial(n - 4)
    return _clean({(n,): mul(f, cn), (n - 1, 1): mul(f, c31), (n - 2, 2): mul(f, c22)})


def center_of_symmetry(P: NUIOrder) -> Fraction:
    return Fraction(num_edges(P), 2)


def center_4_2(n: int, r: int, s: int) -> Fraction:
    return Fraction(comb(n, 2) - (n - r) * s, 2)


def center_4_4(n: int, r: int, s: int) -> Fraction:
    return Fraction(comb(n, 2) - (n - r + s - 1), 2)


_PRIORITY = (FORMULA_4_4, KCHAIN, FORMULA_4_3, FORMULA_4_2)


def closed_form(P: NUIOrder):
    """``(tag, expansion)`` from the most specific matching formula, or None."""
    tags = {t.name: t for t in classify(P)}
    for name in _PRIORITY:
        tag = tags.get(name)
        if tag is None:
            continue
        if name == FORMULA_4_4:
            return tag, formula_4_4(ClassParams(P.n, tag.r, tag.s))
        if name == KCHAIN:
            return tag, formula_kchain(P.n, tag.r)
        if name == FORMULA_4_3:
            return tag, formula_4_3(P.n, tag.r)
        return tag, formula_4_2(ClassParams(P.n, tag.r, tag.s))
    return None
