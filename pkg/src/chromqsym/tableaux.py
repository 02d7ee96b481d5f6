"""P-tableaux, the G-inversion statistic and the Schur expansion of X_G(x, t)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .orders import IncGraph, NUIOrder, inc_graph, longest_chain, relation_matrix
from .qpoly import TPoly

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {parts}")
    return lam


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` with parts ``<= max_part``, lexicographically ascending."""
    if max_part is None:
        max_part = n
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, cap), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(n, max_part, [])
    return tuple(sorted(out))


def two_column(n: int, ell: int) -> Partition:
    """The shape ``2^ell 1^(n - 2 ell)``."""
    return (2,) * ell + (1,) * (n - 2 * ell)


def partition_key(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam))


@dataclass(frozen=True)
class PTableau:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows) -> PTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def column(self, j: int = 0) -> list[int]:
        return [r[j] for r in self.rows if len(r) > j]

    def row_of(self) -> dict[int, int]:
        return {x: i for i, row in enumerate(self.rows) for x in row}

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def is_ptableau(P: NUIOrder, T: PTableau) -> bool:
    lt = relation_matrix(P)
    entries = sorted(x for r in T.rows for x in r)
    if entries != list(range(1, P.n + 1)):
        return False
    shape = T.shape
    if any(a < b for a, b in zip(shape, shape[1:])) or 0 in shape:
        return False
    for i, row in enumerate(T.rows):
        for j, x in enumerate(row):
            if j > 0 and not lt[row[j - 1]][x]:
                return False
            if i > 0 and lt[x][T.rows[i - 1][j]]:
                return False
    return True


def enumerate_ptableaux(P: NUIOrder, lam: Sequence[int]) -> Iterator[PTableau]:
    """Lazily yield every P-tableau of shape ``lam``.

    Cells are filled row by row, left to right; the row-chain and the
    cell-above constraints are checked as each cell is placed.
    """
    lam = as_partition(lam)
    n = P.n
    if sum(lam) != n:
        raise ValueError(f"shape {lam} is not a partition of {n}")
    if lam and lam[0] > longest_chain(P):
        return
    lt = relation_matrix(P)
    cells = [(i, j) for i, L in enumerate(lam) for j in range(L)]
    grid = [[0] * L for L in lam]
    used = [False] * (n + 1)

    def rec(k):
        if k == len(cells):
            yield PTableau(tuple(tuple(r) for r in grid))
            return
        i, j = cells[k]
        for x in range(1, n + 1):
            if used[x]:
                continue
            if j > 0 and not lt[grid[i][j - 1]][x]:
                continue
            if i > 0 and lt[x][grid[i - 1][j]]:
                continue
            used[x] = True
            grid[i][j] = x
            yield from rec(k + 1)
            used[x] = False

    yield from rec(0)


def all_ptableaux(P: NUIOrder) -> Iterator[PTableau]:
    for lam in partitions(P.n):
        yield from enumerate_ptableaux(P, lam)


def inv_count(G: IncGraph, T: PTableau) -> int:
    """Edges ``{i, j}``, ``i < j``, with ``i`` in a strictly lower row than ``j``."""
    row = T.row_of()
    return sum(1 for i, j in G.edges if row[i] > row[j])


def gf_of(tableaux, G: IncGraph) -> TPoly:
    counts: dict[int, int] = {}
    for T in tableaux:
        k = inv_count(G, T)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return TPoly()
    return TPoly(counts.get(k, 0) for k in range(max(counts) + 1))


# --- fast generating functions -----------------------------------------


class _ShapeCounter:
    """Row-by-row dynamic programme for ``B_lambda(t)``.

    After a row is complete, what remains depends only on the set of used
    elements and the contents of that row, so partial results are memoized
    on ``(row index, used mask, previous row)``.
    """

    def __init__(self, P: NUIOrder):
        self.P = P
        n = P.n
        self.lt = relation_matrix(P)
        self.up = [0] * (n + 1)
        for i, j in inc_graph(P).edges:
            self.up[i] |= 1 << j
        self.chains = self._chains()

    def _chains(self) -> dict[int, list[tuple[tuple[int, ...], int]]]:
        n, lt = self.P.n, self.lt
        by_len: dict[int, list] = {}
        frontier = [(x,) for x in range(1, n + 1)]
        L = 1
        while frontier:
            by_len[L] = [(c, sum(1 << x for x in c)) for c in frontier]
            frontier = [c + (y,) for c in frontier for y in range(c[-1] + 1, n + 1) if lt[c[-1]][y]]
            L += 1
        return by_len

    def gf(self, lam: Partition) -> TPoly:
        if lam[0] not in self.chains:
            return TPoly()
        lt, up = self.lt, self.up
        full = sum(1 << x for x in range(1, self.P.n + 1))
        memo: dict = {}

        def rec(k, used, prev):
            if k == len(lam):
                return {0: 1} if used == full else {}
            key = (k, used, prev)
            hit = memo.get(key)
            if hit is not None:
                return hit
            out: dict[int, int] = {}
            L = lam[k]
            for c, cmask in self.chains.get(L, ()):
                if used & cmask:
                    continue
                if prev is not None and any(lt[c[j]][prev[j]] for j in range(L)):
                    continue
                w = sum(bin(used & up[x]).count("1") for x in c)
                sub = rec(k + 1, used | cmask, c)
                for d, cnt in sub.items():
                    out[d + w] = out.get(d + w, 0) + cnt
            memo[key] = out
            return out

        counts = rec(0, 0, None)
        if not counts:
            return TPoly()
        return TPoly(counts.get(d, 0) for d in range(max(counts) + 1))


def shape_gf(P: NUIOrder, lam: Sequence[int]) -> TPoly:
    """``B_lambda(t)``: sum of ``t^inv`` over P-tableaux of shape ``lam``."""
    lam = as_partition(lam)
    if sum(lam) != P.n:
        raise ValueError(f"shape {lam} is not a partition of {P.n}")
    return _ShapeCounter(P).gf(lam)


def schur_expansion(P: NUIOrder) -> dict[Partition, TPoly]:
    """Map ``lambda -> B_lambda(t)``; shapes without tableaux are omitted."""
    counter = _ShapeCounter(P)
    out = {}
    for lam in partitions(P.n, longest_chain(P)):
        b = counter.gf(lam)
        if b:
            out[lam] = b
    return out


def schur_expansion_bruteforce(P: NUIOrder) -> dict[Partition, TPoly]:
    """Same as :func:`schur_expansion` but by materialising every tableau."""
    G = inc_graph(P)
    out = {}
    for lam in partitions(P.n):
        b = gf_of(enumerate_ptableaux(P, lam), G)
        if b:
            out[lam] = b
    return out
