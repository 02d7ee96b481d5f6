"""Polynomials in ``t`` with exact integer coefficients, and q-analogs.

Everything here is pure: a :class:`TPoly` never changes after it is built.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class NonPolynomialRatio(ArithmeticError):
    """An exact quotient of q-factorials left a nonzero remainder."""


class TPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> TPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("the zero polynomial has no low degree")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly([other])
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                body = str(abs(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = ONE
        for _ in range(k):
            out = mul(out, self)
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> TPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return TPoly([0] * k + list(self.coeffs))

    def to_json(self) -> list:
        """Coefficient array; entries beyond 64-bit range become decimal strings."""
        return [c if -(2**63) <= c < 2**63 else str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> TPoly:
        return cls(int(x) for x in data)


def _coerce(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly([x])
    raise TypeError(f"cannot combine TPoly with {type(x).__name__}")


ZERO = TPoly()
ONE = TPoly([1])
T = TPoly([0, 1])


def add(a: TPoly, b: TPoly) -> TPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return TPoly(a[i] + b[i] for i in range(n))


def sub(a: TPoly, b: TPoly) -> TPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return TPoly(a[i] - b[i] for i in range(n))


def mul(a: TPoly, b: TPoly) -> TPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return TPoly(out)


def divmod_poly(a: TPoly, b: TPoly) -> tuple[TPoly, TPoly]:
    """Integer long division; the divisor's leading coefficient must divide evenly."""
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) <= db:
        return ZERO, a
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise NonPolynomialRatio(f"leading coefficient {lead} does not divide {c}")
        quot[k - db] = q
        for j, y in enumerate(b.coeffs):
            rem[k - db + j] -= q * y
    return TPoly(quot), TPoly(rem)


def exact_div(a: TPoly, b: TPoly) -> TPoly:
    q, r = divmod_poly(a, b)
    if r:
        raise NonPolynomialRatio(f"{a} is not divisible by {b}")
    return q


@lru_cache(maxsize=None)
def q_int(n: int) -> TPoly:
    """``[n]_t = 1 + t + ... + t^(n-1)``; ``q_int(0)`` is zero."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return TPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> TPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return mul(q_factorial(n - 1), q_int(n))


def q_ratio_factorial(num: Sequence[int], den: Sequence[int]) -> TPoly:
    """``prod [a]_t! / prod [b]_t!`` computed by exact division.

    Raises NonPolynomialRatio when the ratio is not a polynomial.
    """
    top = ONE
    for a in num:
        top = mul(top, q_factorial(a))
    bottom = ONE
    for b in den:
        bottom = mul(bottom, q_factorial(b))
    return exact_div(top, bottom)


def multiset_inv_gf(multiplicities: Sequence[int]) -> TPoly:
    """Inversion generating function over permutations of a multiset."""
    if not multiplicities:
        raise ValueError("need at least one multiplicity")
    if any(c <= 0 for c in multiplicities):
        raise ValueError("multiplicities must be positive")
    return q_ratio_factorial([sum(multiplicities)], list(multiplicities))


def is_nonnegative(p: TPoly) -> bool:
    return all(c >= 0 for c in p.coeffs)


def _doubled_center(center) -> int:
    c = Fraction(center)
    twice = 2 * c
    if twice.denominator != 1:
        raise ValueError(f"center {center} is not a multiple of 1/2")
    return int(twice)


def is_palindromic(p: TPoly, center) -> bool:
    """True iff ``p[i] == p[2*center - i]`` for every ``i``."""
    if p.is_zero():
        raise ValueError("palindromicity of the zero polynomial is undefined")
    twice = _doubled_center(center)
    lo = min(0, twice - p.degree)
    hi = max(p.degree, twice)
    return all(p[i] == p[twice - i] for i in range(lo, hi + 1))


def is_unimodal(p: TPoly) -> bool:
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def center_of(p: TPoly) -> Fraction:
    """Midpoint of the support of a nonzero polynomial."""
    return Fraction(p.low_degree + p.degree, 2)


def qbracket_factor(p: TPoly, max_k: int) -> tuple[int, list[int], TPoly] | None:
    """Best-effort factorization ``p = t^a * prod [k]_t * rest`` by trial division.

    Returns ``(a, ks, rest)`` or None for the zero polynomial.  Not unique.
    """
    if p.is_zero():
        return None
    a = p.low_degree
    rest = TPoly(p.coeffs[a:])
    ks = []
    for k in range(max_k, 1, -1):
        while rest.degree >= k - 1:
            q, r = divmod_poly(rest, q_int(k))
            if r:
                break
            ks.append(k)
            rest = q
    ks.sort()
    return a, ks, rest


def format_factored(p: TPoly, max_k: int = 12) -> str:
    """Human form such as ``t[2]_t[4]_t``; falls back to raw coefficients."""
    f = qbracket_factor(p, max_k)
    if f is None:
        return "0"
    a, ks, rest = f
    parts = []
    if len(rest.coeffs) == 1 and rest != ONE:
        parts.append(str(rest.coeffs[0]))
        rest = ONE
    if a == 1:
        parts.append("t")
    elif a > 1:
        parts.append(f"t^{a}")
    parts.extend(f"[{k}]_t" for k in ks)
    if rest != ONE:
        inner = str(rest)
        parts.append(f"({inner})" if parts else inner)
    return "".join(parts) if parts else "1"
