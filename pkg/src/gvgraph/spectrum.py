"""Exact spectra of Gilbert graphs and of their descent-level quotients.

A Gilbert graph is a Cayley graph on (F_q^n, +) whose difference set is the
punctured Hamming ball {u : 1 <= w(u) <= d-1}, so its eigenvectors are the
q^n additive characters u -> z^<u,v> (z a primitive q-th root of unity) and
the eigenvalue attached to the character indexed by v is the character sum
over the difference set.  That sum is a real integer and depends only on
w(v): it equals K_{d-1}(w(v)-1; n-1, q) - 1 for w(v) != 0 and the regular
degree V_q(n, d-1) - 1 for v = 0.

Index-space conventions
-----------------------
At descent level t the character indices live in the quotient of F_q^n by
the span of the chosen pivot vectors.  Each coset is named by its canonical
representative: the unique member with zeros in every pivot column of the
span's reduced row-echelon basis, which is also the base-q smallest member
(digit 1 most significant).  A dense table stores one exact integer per
canonical representative, ordered by the base-q number formed by the free
columns; that ordering agrees with lexicographic order on the vectors, so
"first index attaining the minimum" is exactly the smallest argmin vector.

Level-0 tables are stored compressed by weight (n + 1 entries, each with
multiplicity C(n,w)(q-1)^w) and are expanded to a dense q^n table only when
a descent run needs per-vector values.

All tables are immutable after construction and safe to share across
threads; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .combinat import GraphParams, ball_volume, binomial, krawtchouk
from .errors import check_budget
from .modq import reduce_by_rref
from .vectors import FqVector

__all__ = [
    "RealEigenvector",
    "SpectrumTable",
    "build_spectrum_level0",
    "character_sum_oracle",
    "eigenvalue_level0",
    "min_eigenvalue",
    "real_eigenvector",
]


def eigenvalue_level0(params: GraphParams, weight: int) -> int:
    """Eigenvalue of any weight-``weight`` character index at level 0."""
    if not 0 <= weight <= params.n:
        raise ValueError(f"weight must lie in [0, n], got {weight} with n={params.n}")
    if weight == 0:
        return ball_volume(params, params.d - 1) - 1
    return krawtchouk(params.d - 1, weight - 1, params.n - 1, params.q) - 1


@dataclass(frozen=True)
class SpectrumTable:
    """Exact integer eigenvalues of a descent-level graph, indexed by characters.

    Either ``weight_values`` (level 0, compressed by weight) or ``values``
    (dense, one entry per canonical coset representative) is set.
    """

    params: GraphParams
    level: int
    pivots: tuple[FqVector, ...]
    rref_rows: tuple[tuple[int, ...], ...]
    pivot_cols: tuple[int, ...]
    free_cols: tuple[int, ...]
    values: tuple[int, ...] | None = None
    weight_values: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return self.params.q ** (self.params.n - self.level)

    @property
    def is_dense(self) -> bool:
        return self.values is not None

    @property
    def degree(self) -> int:
        """Eigenvalue of the zero character: the regular degree of the level graph."""
        if self.values is not None:
            return self.values[0]
        assert self.weight_values is not None
        return self.weight_values[0]

    def multiplicity_for_weight(self, weight: int) -> int:
        """Number of weight-``weight`` character indices: C(n,w)(q-1)^w."""
        q, n = self.params.q, self.params.n
        return binomial(n, weight) * (q - 1) ** weight

    def vector_at(self, index: int) -> FqVector:
        """Canonical representative at a dense-table position."""
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} out of range for table of size {self.size}")
        q, n = self.params.q, self.params.n
        digits = [0] * n
        for col in reversed(self.free_cols):
            index, digits[col] = divmod(index, q)
        return FqVector(q, tuple(digits))

    def index_of(self, v: FqVector) -> int:
        """Dense-table position of the coset of ``v`` (any representative)."""
        rep = self.canonicalize(v)
        q = self.params.q
        idx = 0
        for col in self.free_cols:
            idx = idx * q + rep.digits[col]
        return idx

    def canonicalize(self, v: FqVector) -> FqVector:
        """Base-q smallest member of the coset of ``v`` modulo the pivot span."""
        if v.q != self.params.q or v.n != self.params.n:
            raise ValueError("vector parameters do not match the table")
        if not self.rref_rows:
            return v
        return FqVector(
            v.q, reduce_by_rref(v.digits, list(self.rref_rows), list(self.pivot_cols), v.q)
        )

    def eigenvalue_of(self, v: FqVector) -> int:
        if self.values is not None:
            return self.values[self.index_of(v)]
        assert self.weight_values is not None
        if v.q != self.params.q or v.n != self.params.n:
            raise ValueError("vector parameters do not match the table")
        return self.weight_values[v.weight]

    def min_eigenvalue(self) -> tuple[int, FqVector]:
        """Minimum eigenvalue and its smallest attaining index.

        Ties break to the base-q smallest vector, digit 1 most significant.
        The zero index (whose eigenvalue is the degree, the maximum) is
        excluded from the argmin unless it is the only index.
        """
        q, n = self.params.q, self.params.n
        if self.values is not None:
            if self.size == 1:
                return self.values[0], FqVector.zero(q, n)
            vals = self.values
            arg = min(range(1, self.size), key=vals.__getitem__)
            return vals[arg], self.vector_at(arg)
        assert self.weight_values is not None
        best_w = min(range(1, n + 1), key=self.weight_values.__getitem__)
        argmin = FqVector(q, (0,) * (n - best_w) + (1,) * best_w)
        return self.weight_values[best_w], argmin

    def entries(self) -> Iterator[tuple[FqVector, int]]:
        """(canonical representative, eigenvalue) pairs in index order."""
        if self.values is None:
            raise ValueError("entries() requires a dense table; call densify() first")
        for i, lam in enumerate(self.values):
            yield self.vector_at(i), lam

    def weight_rows(self) -> Iterator[tuple[int, int, int]]:
        """(weight, eigenvalue, multiplicity) rows of a compressed level-0 table."""
        if self.weight_values is None:
            raise ValueError("weight_rows() requires a compressed level-0 table")
        for w, lam in enumerate(self.weight_values):
            yield w, lam, self.multiplicity_for_weight(w)

    def densify(self, budget: int | None = None) -> "SpectrumTable":
        """Expand a compressed level-0 table to one entry per vector."""
        if self.values is not None:
            return self
        assert self.weight_values is not None
        params = self.params
        q, n = params.q, params.n
        total = q**n
        check_budget(total, budget, f"dense level-0 spectrum of G_({q},{n},{params.d})")
        lam_w = self.weight_values
        if q == 2:
            dense = tuple(lam_w[i.bit_count()] for i in range(total))
        else:
            weights = [0] * total
            for i in range(1, total):
                weights[i] = weights[i // q] + (1 if i % q else 0)
            dense = tuple(lam_w[w] for w in weights)
        return SpectrumTable(
            params=params,
            level=0,
            pivots=(),
            rref_rows=(),
            pivot_cols=(),
            free_cols=tuple(range(n)),
            values=dense,
        )


def build_spectrum_level0(
    params: GraphParams, dense: bool = False, budget: int | None = None
) -> SpectrumTable:
    """Level-0 spectrum, compressed by weight unless ``dense`` is requested."""
    table = SpectrumTable(
        params=params,
        level=0,
        pivots=(),
        rref_rows=(),
        pivot_cols=(),
        free_cols=tuple(range(params.n)),
        weight_values=tuple(eigenvalue_level0(params, w) for w in range(params.n + 1)),
    )
    return table.densify(budget) if dense else table


def min_eigenvalue(table: SpectrumTable) -> tuple[int, FqVector]:
    """Minimum eigenvalue of a table and its smallest attaining index."""
    return table.min_eigenvalue()


def character_sum_oracle(difference_set: Iterable[FqVector], v: FqVector) -> int:
    """Brute-force eigenvalue of the character indexed by ``v``.

    Counts how many elements of the difference set land in each inner-product
    residue class.  For a set closed under multiplication by every nonzero
    scalar the classes 1..q-1 must be equally populated, making the
    root-of-unity sum the exact integer c_0 - c_1; unequal counts mean the
    closure precondition fails and a ValueError is raised.
    """
    q = v.q
    counts = [0] * q
    for u in difference_set:
        counts[u.dot(v)] += 1
    if q > 2 and any(c != counts[1] for c in counts[2:]):
        raise ValueError(
            "difference set is not closed under nonzero scalar multiplication: "
            f"residue counts {counts} are unequal beyond residue 0"
        )
    return counts[0] - counts[1]


@dataclass(frozen=True)
class RealEigenvector:
    """Real-valued eigenvector supported on two entry values, q-1 and -1.

    The entry at vertex u is q-1 when <u, 1_A> = 0 and -1 otherwise, where
    1_A is the indicator vector of the (1-based) support set A.  This is the
    sum of the q-1 character eigenvectors indexed by the nonzero multiples
    of 1_A, hence an eigenvector whose eigenvalue is the common level-0
    eigenvalue of weight |A|; its entries sum to zero and its squared norm
    is q^n (q-1).
    """

    params: GraphParams
    support: frozenset[int]
    eigenvalue: int

    @property
    def indicator(self) -> FqVector:
        digits = [0] * self.params.n
        for i in self.support:
            digits[i - 1] = 1
        return FqVector(self.params.q, tuple(digits))

    def entry(self, u: FqVector) -> int:
        return self.params.q - 1 if u.dot(self.indicator) == 0 else -1

    def dense_entries(self, budget: int | None = None) -> list[int]:
        params = self.params
        check_budget(params.num_vertices, budget, "dense real eigenvector")
        ind = self.indicator
        q = params.q
        return [q - 1 if u.dot(ind) == 0 else -1 for u in FqVector.enumerate_all(q, params.n)]

    @property
    def norm_squared(self) -> int:
        q, n = self.params.q, self.params.n
        return q**n * (q - 1)


def real_eigenvector(params: GraphParams, support: Iterable[int]) -> RealEigenvector:
    """The two-valued real eigenvector attached to a nonempty support set."""
    a = frozenset(support)
    if not a:
        raise ValueError("support set must be nonempty")
    if not all(1 <= i <= params.n for i in a):
        raise ValueError(f"support positions must lie in 1..{params.n}")
    return RealEigenvector(params, a, eigenvalue_level0(params, len(a)))
