"""Schur-to-elementary conversion through the dual Jacobi-Trudi determinant."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Mapping, NamedTuple, Sequence

from .orders import NUIOrder, components
from .qpoly import ONE, TPoly, add, format_factored, mul
from .tableaux import Partition, as_partition, conjugate, partition_key, schur_expansion

EExpansion = dict[Partition, TPoly]
SExpansion = dict[Partition, TPoly]


class SignedEWord(NamedTuple):
    parts: Partition  # zeros dropped, sorted decreasingly
    sign: int


@lru_cache(maxsize=None)
def jacobi_trudi(lam: Partition) -> tuple[SignedEWord, ...]:
    """Leibniz terms of ``det[e_{lam'_i - i + j}]``, skipping vanishing products."""
    lam = as_partition(lam)
    conj = conjugate(lam)
    size = len(conj)
    words = []
    perm: list[int] = []
    taken = [False] * size

    def rec(i, subs):
        if i == size:
            inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
            parts = tuple(sorted((p for p in subs if p > 0), reverse=True))
            words.append(SignedEWord(parts, -1 if inversions % 2 else 1))
            return
        for j in range(size):
            if taken[j]:
                continue
            sub = conj[i] - i + j
            if sub < 0:
                continue
            taken[j] = True
            perm.append(j)
            rec(i + 1, subs + [sub])
            perm.pop()
            taken[j] = False

    rec(0, [])
    return tuple(words)


@lru_cache(maxsize=None)
def schur_in_e(lam: Partition) -> dict[Partition, int]:
    """Collected integer coefficients of ``s_lam`` in the e-basis."""
    out: dict[Partition, int] = {}
    for w in jacobi_trudi(lam):
        out[w.parts] = out.get(w.parts, 0) + w.sign
    return {mu: c for mu, c in out.items() if c}


def s_to_e(S: Mapping[Partition, TPoly]) -> EExpansion:
    out: dict[Partition, TPoly] = {}
    for lam, b in S.items():
        for mu, c in schur_in_e(tuple(lam)).items():
            out[mu] = add(out.get(mu, TPoly()), mul(b, TPoly([c])))
    return {mu: p for mu, p in sorted(out.items()) if p}


def e_product(A: Mapping[Partition, TPoly], B: Mapping[Partition, TPoly]) -> EExpansion:
    """Product of two e-expansions; ``e_lam * e_mu = e_{lam u mu}``."""
    out: dict[Partition, TPoly] = {}
    for lam, a in A.items():
        for mu, b in B.items():
            nu = tuple(sorted(lam + mu, reverse=True))
            out[nu] = add(out.get(nu, TPoly()), mul(a, b))
    return {nu: p for nu, p in sorted(out.items()) if p}


def e_expansion_connected(P: NUIOrder) -> EExpansion:
    return s_to_e(schur_expansion(P))


def e_expansion(P: NUIOrder) -> EExpansion:
    """``C_lambda(t)`` for every ``lambda``; disconnected orders factor over components."""
    out: EExpansion = {(): ONE}
    for _, comp in components(P):
        out = e_product(out, e_expansion_connected(comp))
    return out


def expansions_equal(A: Mapping, B: Mapping) -> bool:
    strip = lambda X: {tuple(k): v for k, v in X.items() if v}
    return strip(A) == strip(B)


def expansion_to_json(E: Mapping[Partition, TPoly]) -> dict[str, list]:
    return {partition_key(lam): p.to_json() for lam, p in sorted(E.items())}


def expansion_from_json(data: Mapping[str, Sequence]) -> dict[Partition, TPoly]:
    out = {}
    for key, coeffs in data.items():
        lam = as_partition(int(x) for x in key.split(",")) if key else ()
        out[lam] = TPoly.from_json(coeffs)
    return out


def dumps(E: Mapping[Partition, TPoly]) -> str:
    return json.dumps(expansion_to_json(E), sort_keys=True)


def render(E: Mapping[Partition, TPoly], basis: str = "e", max_k: int = 12) -> str:
    """One line per basis element, coefficients in factored q-bracket form when found."""
    lines = []
    for lam, p in sorted(E.items(), reverse=True):
        lines.append(f"{basis}_({partition_key(lam)}): {format_factored(p, max_k)}    [{p}]")
    return "\n".join(lines)
