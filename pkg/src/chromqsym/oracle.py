"""Brute-force X_G(x, t) from proper colorings, in finitely many variables.

Deliberately naive: no symmetry reduction, so it can referee the
tableau/Jacobi-Trudi pipeline.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import factorial, prod
from typing import Mapping, Sequence

from .orders import IncGraph
from .qpoly import TPoly, add, mul
from .symfun import s_to_e

MonomialTable = dict[tuple[int, ...], TPoly]


class ImproperColoring(ValueError):
    pass


def ascent_count(G: IncGraph, kappa: Sequence[int]) -> int:
    """``kappa[v-1]`` is the color of vertex ``v``."""
    asc = 0
    for i, j in G.edges:
        a, b = kappa[i - 1], kappa[j - 1]
        if a == b:
            raise ImproperColoring(f"edge {{{i},{j}}} is monochromatic")
        if a < b:
            asc += 1
    return asc


def coloring_table(G: IncGraph, N: int) -> MonomialTable:
    """Sum ``t^asc(kappa) x_kappa`` over proper colorings ``[n] -> [N]``."""
    n = G.n
    earlier = [[] for _ in range(n + 1)]  # neighbours of v with smaller label
    for i, j in G.edges:
        earlier[j].append(i)
    acc: dict[tuple[int, ...], dict[int, int]] = {}
    kappa = [0] * (n + 1)

    def rec(v, asc):
        if v > n:
            expo = [0] * N
            for c in kappa[1:]:
                expo[c] += 1
            slot = acc.setdefault(tuple(expo), {})
            slot[asc] = slot.get(asc, 0) + 1
            return
        for c in range(N):
            gained = 0
            ok = True
            for u in earlier[v]:
                if kappa[u] == c:
                    ok = False
                    break
                if kappa[u] < c:
                    gained += 1
            if ok:
                kappa[v] = c
                rec(v + 1, asc + gained)

    if n == 0:
        return {(0,) * N: TPoly([1])}
    rec(1, 0)
    return {
        e: TPoly(d.get(k, 0) for k in range(max(d) + 1)) for e, d in sorted(acc.items())
    }


def _elementary(k: int, N: int) -> Counter:
    out = Counter()
    for S in combinations(range(N), k):
        expo = [0] * N
        for i in S:
            expo[i] = 1
        out[tuple(expo)] += 1
    return out


def _times(A: Counter, B: Counter) -> Counter:
    out = Counter()
    for a, x in A.items():
        for b, y in B.items():
            out[tuple(p + q for p, q in zip(a, b))] += x * y
    return out


def e_monomials(lam: Sequence[int], N: int) -> Counter:
    """``e_lam(x_1, ..., x_N)`` as a map exponent-vector -> integer."""
    out = Counter({(0,) * N: 1})
    for k in lam:
        out = _times(out, _elementary(k, N))
    return Counter({e: c for e, c in out.items() if c})


def expand_to_monomials(E: Mapping, N: int, basis: str = "e") -> MonomialTable:
    """Realize an e- or s-expansion as a polynomial in ``N`` variables.

    Schur functions go through their e-expansion first.
    """
    if basis == "s":
        E = s_to_e(E)
    elif basis != "e":
        raise ValueError(f"unknown basis {basis!r}")
    out: dict[tuple[int, ...], TPoly] = {}
    for lam, coeff in E.items():
        for expo, c in e_monomials(lam, N).items():
            out[expo] = add(out.get(expo, TPoly()), mul(coeff, TPoly([c])))
    return {e: p for e, p in sorted(out.items()) if p}


def _distinct_perms(expo: Sequence[int]) -> int:
    return factorial(len(expo)) // prod(factorial(c) for c in Counter(expo).values())


def check_symmetry(M: Mapping[tuple[int, ...], TPoly]) -> bool:
    """Every rearrangement of an exponent vector carries the same polynomial."""
    groups: dict[tuple[int, ...], list[TPoly]] = {}
    for expo, p in M.items():
        if not p:
            continue
        groups.setdefault(tuple(sorted(expo, reverse=True)), []).append(p)
    for key, polys in groups.items():
        if len(polys) != _distinct_perms(key):
            return False
        if any(p != polys[0] for p in polys):
            return False
    return True


def first_difference(A: Mapping, B: Mapping):
    """First exponent vector where two tables disagree, or None."""
    for expo in sorted(set(A) | set(B)):
        a, b = A.get(expo, TPoly()), B.get(expo, TPoly())
        if a != b:
            return expo, a, b
    return None


def is_palindromic_table(M: Mapping, degree: int) -> bool:
    """Entrywise ``p(t) == t^degree p(1/t)``."""
    for p in M.values():
        if len(p.coeffs) > degree + 1:
            return False
        if any(p[i] != p[degree - i] for i in range(degree + 1)):
            return False
    return True


def chromatic_polynomial(G: IncGraph, k: int) -> int:
    """Proper k-colorings by deletion-contraction."""

    def count(vertices: frozenset, edges: frozenset) -> int:
        if not edges:
            return k ** len(vertices)
        e = min(edges)
        u, v = e
        deleted = edges - {e}
        # contract v into u
        merged = set()
        for a, b in deleted:
            a = u if a == v else a
            b = u if b == v else b
            if a != b:
                merged.add((min(a, b), max(a, b)))
        return count(vertices, deleted) - count(vertices - {v}, frozenset(merged))

    return count(frozenset(range(1, G.n + 1)), frozenset(G.edges))


def t_at_one(M: Mapping) -> dict:
    return {e: p(1) for e, p in M.items() if p(1)}
