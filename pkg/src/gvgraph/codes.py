"""Linear codes from parity-check rows, exact distance verification, and
small-instance independence oracles.

A code here is always the joint kernel of its parity rows, so the minimum
distance equals the minimum nonzero codeword weight and is found by
enumerating the q^(n-s) codewords from a kernel basis.  The trivial code {0}
has no nonzero codeword; its distance is the explicit marker
``INFINITE_DISTANCE`` (math.inf), never a sentinel integer.

The file format ``gvpchk v1`` is plain UTF-8 text with LF newlines:

    # gvpchk v1
    q <integer>
    n <integer>
    s <integer>
    <s rows of n space-separated digits in [0, q), digit 1 first>

Parsers reject wrong magic, malformed headers, out-of-range digits, wrong
row length, and row rank below s.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass
from typing import Iterable

from .combinat import GraphParams, is_prime
from .errors import BudgetError, PchkFormatError, check_budget
from .modq import kernel_basis, rank
from .vectors import FqVector

__all__ = [
    "INFINITE_DISTANCE",
    "LinearCode",
    "codewords",
    "format_pchk",
    "gilbert_adjacency",
    "is_independent_set",
    "max_independent_set_oracle",
    "min_distance",
    "read_pchk",
    "write_pchk",
]

INFINITE_DISTANCE = math.inf

PCHK_MAGIC = "# gvpchk v1"

EXACT_SEARCH_CAP = 64


@dataclass(frozen=True)
class LinearCode:
    """The kernel of a full-rank set of parity-check rows over F_q."""

    q: int
    n: int
    parity_rows: tuple[FqVector, ...]
    verified_min_distance: int | float | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        for row in self.parity_rows:
            if row.q != self.q or row.n != self.n:
                raise ValueError("parity row parameters do not match the code")
        rows = [row.digits for row in self.parity_rows]
        if rows and rank(list(rows), self.q) != len(rows):
            raise ValueError("parity rows are linearly dependent")

    @property
    def s(self) -> int:
        return len(self.parity_rows)

    @property
    def dimension(self) -> int:
        return self.n - self.s

    @property
    def size(self) -> int:
        return self.q**self.dimension

    def with_verified_distance(self, distance: int | float) -> "LinearCode":
        return LinearCode(self.q, self.n, self.parity_rows, distance)


def codewords(code: LinearCode, budget: int | None = None) -> list[FqVector]:
    """All q^(n-s) vectors orthogonal to every parity row, zero included."""
    check_budget(code.size, budget, f"codeword enumeration of a [{code.n}, {code.dimension}] code")
    q, n = code.q, code.n
    basis = kernel_basis([row.digits for row in code.parity_rows], q, n)
    words = [FqVector.zero(q, n)]
    for vec in basis:
        b = FqVector(q, vec)
        multiples = [b.scale(c) for c in range(1, q)]
        words += [w.add(m) for m in multiples for w in words]
    return words


def min_distance(code: LinearCode, budget: int | None = None) -> int | float:
    """Exact minimum distance: least nonzero codeword weight, by enumeration."""
    if code.dimension == 0:
        return INFINITE_DISTANCE
    return min(w.weight for w in codewords(code, budget) if not w.is_zero)


def is_independent_set(params: GraphParams, vectors: Iterable[FqVector]) -> bool:
    """Whether all pairwise Hamming distances are at least d."""
    vecs = list(vectors)
    if len(set(vecs)) != len(vecs):
        raise ValueError("vectors must be distinct")
    for v in vecs:
        if v.q != params.q or v.n != params.n:
            raise ValueError("vector parameters do not match")
    for i, u in enumerate(vecs):
        for v in vecs[i + 1 :]:
            if u.hamming_distance(v) < params.d:
                return False
    return True


def gilbert_adjacency(params: GraphParams, budget: int | None = None) -> list[int]:
    """Adjacency bitmasks of the explicit Gilbert graph in rank order."""
    total = params.num_vertices
    check_budget(total * total, budget, f"explicit adjacency of G_({params.q},{params.n},{params.d})")
    vecs = list(FqVector.enumerate_all(params.q, params.n))
    adj = [0] * total
    for i, u in enumerate(vecs):
        for j in range(i + 1, total):
            if 1 <= u.hamming_distance(vecs[j]) <= params.d - 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _clique_cover_bound(cand: int, adj: list[int]) -> int:
    """Greedy clique cover size of the candidate set: an upper bound on its
    independence number, since an independent set meets each clique at most once."""
    covers = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        cand &= ~(1 << v)
        common = adj[v] & cand
        while common:
            u = (common & -common).bit_length() - 1
            cand &= ~(1 << u)
            common &= adj[u] & ~(1 << u)
        covers += 1
    return covers


def max_independent_set_oracle(params: GraphParams) -> tuple[int, frozenset[FqVector]]:
    """Exact independence number by branch and bound, for q^n <= 64.

    The returned size is deterministic; the witness is one maximizer.
    """
    total = params.num_vertices
    if total > EXACT_SEARCH_CAP:
        raise BudgetError(
            f"exact independence search is capped at {EXACT_SEARCH_CAP} vertices, got {total}"
        )
    adj = gilbert_adjacency(params)
    best_size = 0
    best_set = 0

    def expand(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        if size > best_size:
            best_size, best_set = size, chosen
        if not cand or size + _clique_cover_bound(cand, adj) <= best_size:
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        expand(cand & ~adj[v] & ~bit, chosen | bit, size + 1)
        expand(cand & ~bit, chosen, size)

    expand((1 << total) - 1, 0, 0)
    witness = frozenset(
        FqVector.from_rank(params.q, params.n, i) for i in range(total) if best_set >> i & 1
    )
    return best_size, witness


def format_pchk(code: LinearCode) -> str:
    """Canonical gvpchk v1 text for a code; byte-identical across runs."""
    lines = [PCHK_MAGIC, f"q {code.q}", f"n {code.n}", f"s {code.s}"]
    lines += [" ".join(str(x) for x in row.digits) for row in code.parity_rows]
    return "\n".join(lines) + "\n"


def write_pchk(path: str, code: LinearCode) -> None:
    """Atomically write the parity-check file (temp file + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gvpchk-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(format_pchk(code))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _header_int(line: str, key: str, lineno: int) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise PchkFormatError(f"line {lineno}: expected '{key} <integer>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise PchkFormatError(f"line {lineno}: {parts[1]!r} is not an integer") from None


def parse_pchk(text: str) -> LinearCode:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != PCHK_MAGIC:
        raise PchkFormatError(f"bad magic line: expected {PCHK_MAGIC!r}")
    if len(lines) < 4:
        raise PchkFormatError("missing header lines (need q, n, s)")
    q = _header_int(lines[1], "q", 2)
    n = _header_int(lines[2], "n", 3)
    s = _header_int(lines[3], "s", 4)
    if not is_prime(q):
        raise PchkFormatError(f"q must be prime, got {q}")
    if n < 1:
        raise PchkFormatError(f"n must be positive, got {n}")
    if s < 0:
        raise PchkFormatError(f"s must be nonnegative, got {s}")
    if len(lines) != 4 + s:
        raise PchkFormatError(f"expected {s} rows after the header, found {len(lines) - 4}")
    rows = []
    for offset, line in enumerate(lines[4:]):
        parts = line.split()
        if len(parts) != n:
            raise PchkFormatError(f"row {offset}: expected {n} digits, got {len(parts)}")
        try:
            digits = tuple(int(x) for x in parts)
        except ValueError:
            raise PchkFormatError(f"row {offset}: non-integer digit in {line!r}") from None
        if any(not 0 <= x < q for x in digits):
            raise PchkFormatError(f"row {offset}: digit out of range [0, {q})")
        rows.append(FqVector(q, digits))
    if rows and rank([r.digits for r in rows], q) != s:
        raise PchkFormatError(f"parity rows have rank below s = {s}")
    return LinearCode(q, n, tuple(rows))


def read_pchk(path: str) -> LinearCode:
    """Parse a gvpchk v1 file, rejecting any format violation."""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        text = handle.read()
    return parse_pchk(text.replace("\r\n", "\n"))
