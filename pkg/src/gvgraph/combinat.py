"""Exact combinatorial primitives.

Binomial coefficients, Krawtchouk polynomial values, Hamming-ball volumes and
the q-ary entropy function, plus the parameter triple (q, n, d) shared by the
whole package.  Everything is arbitrary-precision integer arithmetic except
``entropy_q``, which returns a ``decimal.Decimal`` at a configurable number
of significant digits (default 50).  The entropy value feeds only
asymptotic-rate reporting; no bound or spectrum computation anywhere else
leaves exact integers and rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt

__all__ = [
    "GraphParams",
    "ball_volume",
    "binomial",
    "entropy_q",
    "is_prime",
    "krawtchouk",
]


def is_prime(m: int) -> bool:
    """Deterministic primality test by trial division."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for f in range(3, isqrt(m) + 1, 2):
        if m % f == 0:
            return False
    return True


@dataclass(frozen=True)
class GraphParams:
    """Parameters (q, n, d) of a Gilbert graph.

    Vertices are the q**n vectors over the integers mod q (q prime); two
    vertices are adjacent when their Hamming distance lies in [1, d-1].
    d = 1 gives the edgeless graph and d = n + 1 the complete graph; both
    are allowed and flagged as degenerate by the reporting layer.
    """

    q: int
    n: int
    d: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 1 <= self.d <= self.n + 1:
            raise ValueError(f"d must satisfy 1 <= d <= n + 1, got d={self.d} with n={self.n}")

    @property
    def num_vertices(self) -> int:
        return self.q**self.n

    @property
    def is_edgeless(self) -> bool:
        return self.d == 1

    @property
    def is_complete(self) -> bool:
        return self.d == self.n + 1

    @property
    def degree(self) -> int:
        """Regular degree of the graph: one less than the ball volume at d-1."""
        return ball_volume(self, self.d - 1) - 1


@lru_cache(maxsize=None)
def binomial(x: int, j: int) -> int:
    """C(x, j) for integers x >= 0, j >= 0, with C(x, 0) = 1 and 0 when j > x."""
    if x < 0 or j < 0:
        raise ValueError(f"binomial requires x >= 0 and j >= 0, got ({x}, {j})")
    if j == 0:
        return 1
    if j > x:
        return 0
    j = min(j, x - j)
    out = 1
    for i in range(1, j + 1):
        out = out * (x - i + 1) // i
    return out


def krawtchouk(k: int, x: int, n: int, q: int) -> int:
    """Exact value of K_k(x; n, q) = sum_j (-1)^j C(x,j) C(n-x,k-j) (q-1)^(k-j)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if not 0 <= x <= n:
        raise ValueError(f"x must lie in [0, n], got x={x}, n={n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    total = 0
    for j in range(k + 1):
        term = binomial(x, j) * binomial(n - x, k - j) * (q - 1) ** (k - j)
        total += -term if j & 1 else term
    return total


def ball_volume(params: GraphParams, radius: int) -> int:
    """Number of vectors of Hamming weight <= radius: sum of C(n,i)(q-1)^i."""
    if not 0 <= radius <= params.n:
        raise ValueError(f"radius must lie in [0, n], got {radius} with n={params.n}")
    q, n = params.q, params.n
    return sum(binomial(n, i) * (q - 1) ** i for i in range(radius + 1))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (str, Decimal)):
        return Fraction(Decimal(x) if isinstance(x, str) else x)
    raise TypeError(f"expected an exact rational (Fraction/int/Decimal/str), got {type(x).__name__}")


def entropy_q(q: int, x, digits: int = 50) -> Decimal:
    """q-ary entropy h_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x).

    ``x`` must be exact (Fraction, int, Decimal or a decimal string) with
    0 <= x <= 1 - 1/q; h_q(0) is 0 by continuity and h_q(1 - 1/q) = 1.
    The result carries ``digits`` significant decimal digits (default 50);
    floats are refused so no binary rounding ever enters the computation.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if digits < 1:
        raise ValueError("digits must be positive")
    xf = _as_fraction(x)
    if not 0 <= xf <= 1 - Fraction(1, q):
        raise ValueError(f"x must lie in [0, 1 - 1/q] = [0, {1 - Fraction(1, q)}], got {xf}")
    if xf == 0:
        return Decimal(0)
    with localcontext() as ctx:
        ctx.prec = digits + 10
        ln_q = Decimal(q).ln()
        xd = Decimal(xf.numerator) / Decimal(xf.denominator)
        yf = 1 - xf
        yd = Decimal(yf.numerator) / Decimal(yf.denominator)
        h = xd * (Decimal(q - 1).ln() / ln_q) - xd * (xd.ln() / ln_q) - yd * (yd.ln() / ln_q)
    with localcontext() as ctx:
        ctx.prec = digits
        return +h
