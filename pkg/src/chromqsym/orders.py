"""Natural unit interval orders, their incomparability graphs and Catalan paths.

Elements are labelled ``1..n`` throughout.  An order is given by its
m-sequence ``(m_1, ..., m_{n-1})`` with ``i <_P j`` iff ``j > m_i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class InvalidMSequence(ValueError):
    pass


class InvalidPath(ValueError):
    pass


class OutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class NUIOrder:
    n: int
    m: tuple[int, ...]

    def __post_init__(self):
        n, m = self.n, self.m
        if n < 1:
            raise InvalidMSequence(f"need at least one element, got n={n}")
        if len(m) != n - 1:
            raise InvalidMSequence(f"expected {n - 1} entries for n={n}, got {len(m)}")
        for i, mi in enumerate(m, start=1):
            if mi < i:
                raise InvalidMSequence(f"m_{i}={mi} < {i}")
            if mi > n:
                raise InvalidMSequence(f"m_{i}={mi} > n={n}")
            if i > 1 and mi < m[i - 2]:
                raise InvalidMSequence(f"not weakly increasing at position {i}: {m}")

    def mm(self, i: int) -> int:
        """``m_i`` with the convention ``m_n = n``."""
        return self.m[i - 1] if i < self.n else self.n

    def __str__(self):
        return f"P({','.join(map(str, self.m))})"

    @property
    def key(self) -> str:
        return ",".join(map(str, self.m))


def validate(m: Sequence[int]) -> NUIOrder:
    m = tuple(int(x) for x in m)
    return NUIOrder(len(m) + 1, m)


def parse_m(text: str) -> NUIOrder:
    """Parse a comma-separated m-sequence such as ``"3,3,4,6,6"``."""
    text = text.strip()
    if not text:
        return validate(())
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InvalidMSequence(f"cannot parse m-sequence {text!r}") from exc
    return validate(vals)


def less_than(P: NUIOrder, i: int, j: int) -> bool:
    if not (1 <= i <= P.n and 1 <= j <= P.n):
        raise OutOfRange(f"elements must lie in 1..{P.n}, got {i}, {j}")
    return i < P.n and j > P.m[i - 1]


def relation_matrix(P: NUIOrder) -> list[list[bool]]:
    """``lt[i][j]`` is ``i <_P j``; row/column 0 unused."""
    n = P.n
    lt = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n):
        for j in range(P.m[i - 1] + 1, n + 1):
            lt[i][j] = True
    return lt


@dataclass(frozen=True)
class IncGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e} is not an ordered pair inside 1..{self.n}")

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbours(self) -> dict[int, set[int]]:
        nb = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return nb


def graph(n: int, edges) -> IncGraph:
    """Arbitrary labelled graph on ``1..n``; used for negative controls."""
    return IncGraph(n, frozenset((min(e), max(e)) for e in edges))


def inc_graph(P: NUIOrder) -> IncGraph:
    edges = frozenset(
        (i, j) for i in range(1, P.n) for j in range(i + 1, P.m[i - 1] + 1)
    )
    return IncGraph(P.n, edges)


def num_edges(P: NUIOrder) -> int:
    return sum(mi - i for i, mi in enumerate(P.m, start=1))


def b_sequence(G: IncGraph) -> list[int]:
    """``b_i`` = number of neighbours ``j < i`` of ``i``, for ``i = 2..n``."""
    b = [0] * (G.n + 1)
    for _, j in G.edges:
        b[j] += 1
    return b[2:]


def is_connected_order(P: NUIOrder) -> bool:
    return all(mi > i for i, mi in enumerate(P.m, start=1))


def is_connected_graph(G: IncGraph) -> bool:
    if G.n <= 1:
        return True
    nb = G.neighbours()
    seen = {1}
    todo = deque([1])
    while todo:
        v = todo.popleft()
        for w in nb[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == G.n


def components(P: NUIOrder) -> list[tuple[int, NUIOrder]]:
    """Split at every ``m_i = i``; returns ``(offset, component)`` pairs.

    Element ``k`` of a component corresponds to ``offset + k`` in ``P``.
    """
    out = []
    start = 1
    for i in range(1, P.n + 1):
        if i == P.n or P.m[i - 1] == i:
            sub_m = tuple(P.m[k - 1] - (start - 1) for k in range(start, i))
            out.append((start - 1, validate(sub_m)))
            start = i + 1
    return out


def longest_chain(P: NUIOrder) -> int:
    best = [0] * (P.n + 1)
    for j in range(1, P.n + 1):
        best[j] = 1 + max(
            (best[i] for i in range(1, j) if j > P.m[i - 1]), default=0
        )
    return max(best[1:])


# --- Catalan paths -------------------------------------------------------


@dataclass(frozen=True)
class CatalanPath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise InvalidPath(f"steps must be over {{N, E}}: {self.steps!r}")
        if self.steps.count("N") != self.steps.count("E"):
            raise InvalidPath("unequal numbers of N and E steps")
        height = 0
        for c in self.steps:
            height += 1 if c == "N" else -1
            if height < 0:
                raise InvalidPath(f"path dips below the diagonal: {self.steps}")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps


def to_catalan(P: NUIOrder) -> CatalanPath:
    steps = []
    height = 0
    for i in range(1, P.n + 1):
        target = P.mm(i)
        steps.append("N" * (target - height))
        steps.append("E")
        height = target
    return CatalanPath("".join(steps))


def from_catalan(C: CatalanPath) -> NUIOrder:
    heights = []
    height = 0
    for c in C.steps:
        if c == "N":
            height += 1
        else:
            heights.append(height)
    if not heights:
        raise InvalidPath("empty path")
    return validate(heights[:-1])


def bounce_points(C: CatalanPath) -> list[int]:
    """Diagonal touch points ``0 = b_0 < b_1 < ... < b_r = n`` of the bounce path."""
    n = C.n
    # east_height[x]: height at which the east step starting at column x sits
    east_height = []
    height = 0
    for c in C.steps:
        if c == "N":
            height += 1
        else:
            east_height.append(height)
    pts = [0]
    x = 0
    while x < n:
        x = east_height[x]
        pts.append(x)
    return pts


def bounce_number(C: CatalanPath) -> int:
    return len(bounce_points(C)) - 1


def reflect_path(C: CatalanPath) -> CatalanPath:
    """Reflection about ``y = n - x``: reverse the word and swap N/E."""
    swap = {"N": "E", "E": "N"}
    return CatalanPath("".join(swap[c] for c in reversed(C.steps)))


def reflect(P: NUIOrder) -> NUIOrder:
    return from_catalan(reflect_path(to_catalan(P)))


# --- enumeration ---------------------------------------------------------


def enumerate_orders(n: int, prime: bool = False) -> Iterator[NUIOrder]:
    """All orders on ``n`` elements in lexicographic m-order."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(prefix: list[int]):
        i = len(prefix) + 1
        if i == n:
            yield validate(prefix)
            return
        lo = max(prefix[-1] if prefix else 1, i + 1 if prime else i)
        for mi in range(lo, n + 1):
            prefix.append(mi)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def enumerate_prime_orders(n: int) -> Iterator[NUIOrder]:
    return enumerate_orders(n, prime=True)


# --- formula classes -----------------------------------------------------


class ClassTag(NamedTuple):
    name: str
    r: int | None = None
    s: int | None = None

    def __str__(self):
        args = []
        if self.r is not None:
            args.append(f"r={self.r}")
        if self.s is not None:
            args.append(f"s={self.s}")
        return f"{self.name}({','.join(args)})" if args else self.name


EPOS_CLASS_1 = "EPOS_CLASS_1"
EPOS_CLASS_2 = "EPOS_CLASS_2"
FORMULA_4_2 = "FORMULA_4_2"
FORMULA_4_3 = "FORMULA_4_3"
FORMULA_4_4 = "FORMULA_4_4"
KCHAIN = "KCHAIN"


def _leading_run(m: Sequence[int], value: int, start: int = 0) -> int:
    k = start
    while k < len(m) and m[k] == value:
        k += 1
    return k - start


def classify(P: NUIOrder) -> frozenset[ClassTag]:
    n, m = P.n, P.m
    tags = set()
    if n < 2:
        return frozenset()
    r = m[0]

    # complete graph on {1..r} and on {r+1..n}
    if r < n and P.mm(r + 1) == n:
        tags.add(ClassTag(EPOS_CLASS_1, r))

    # m_1 = r, m_2 = ... = m_s = n-1, m_{s+1} = ... = n
    if r > 1:
        run = _leading_run(m, n - 1, start=1)
        s = 1 + run
        tail_ok = all(x == n for x in m[s:])
        if run >= 1 and tail_ok and r < s < n - 1:
            tags.add(ClassTag(EPOS_CLASS_2, r, s))
        if run >= 1 and tail_ok and 2 <= s <= r <= n - 2:
            tags.add(ClassTag(FORMULA_4_4, r, s))

    # m_1 = ... = m_s = r, m_{s+1} = ... = n
    s = _leading_run(m, r)
    if r <= n - 1 and 1 <= s <= r - 1 and all(x == n for x in m[s:]):
        tags.add(ClassTag(FORMULA_4_2, r, s))
        if s == 1 and r >= 2:
            tags.add(ClassTag(FORMULA_4_3, r))
        if s == r - 1:
            tags.add(ClassTag(KCHAIN, r))
    return frozenset(tags)


def tag_names(tags) -> set[str]:
    return {t.name for t in tags}


def order_for(which: str, n: int, r: int, s: int | None = None) -> NUIOrder:
    """The order matched by a closed-form family with the given parameters."""
    if which == FORMULA_4_2:
        return validate([r] * s + [n] * (n - 1 - s))
    if which == FORMULA_4_3:
        return validate([r] + [n] * (n - 2))
    if which == KCHAIN:
        return validate([r] * (r - 1) + [n] * (n - r))
    if which == FORMULA_4_4:
        return validate([r] + [n - 1] * (s - 1) + [n] * (n - 1 - s))
    raise ValueError(f"unknown family {which!r}")
