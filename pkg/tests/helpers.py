"""Brute-force oracles shared by the test suite.

Everything here recomputes results from first principles -- explicit vector
enumeration, explicit character sums over materialized difference sets,
explicit induced subgraphs -- and never reuses the library's quotient-index
machinery, so agreement is a genuine two-route check.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np


def all_vectors(q, n):
    return list(itertools.product(range(q), repeat=n))


def weight(v):
    return sum(1 for x in v if x != 0)


def dot(u, v, q):
    return sum(a * b for a, b in zip(u, v)) % q


def hamming(u, v):
    return sum(1 for a, b in zip(u, v) if a != b)


def vadd(u, v, q):
    return tuple((a + b) % q for a, b in zip(u, v))


def vscale(c, v, q):
    return tuple((c * a) % q for a in v)


def char_sum(S, v, q):
    """Residue-count evaluation of the character sum over S at index v."""
    counts = [0] * q
    for u in S:
        counts[dot(u, v, q)] += 1
    assert all(c == counts[1] for c in counts[2:]), f"unequal residue counts {counts}"
    return counts[0] - counts[1]


def ball_volume_brute(q, n, r):
    return sum(comb(n, i) * (q - 1) ** i for i in range(r + 1))


def krawtchouk_genfunc(k, x, n, q):
    """Coefficient of z^k in (1 + (q-1) z)^(n-x) (1 - z)^x, by polynomial expansion."""

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return out

    def poly_pow(p, e):
        out = [1]
        for _ in range(e):
            out = poly_mul(out, p)
        return out

    poly = poly_mul(poly_pow([1, q - 1], n - x), poly_pow([1, -1], x))
    return poly[k] if k < len(poly) else 0


def gilbert_neighbor_lists(q, n, d):
    """Explicit adjacency of the Gilbert graph as index lists over rank order."""
    vecs = all_vectors(q, n)
    adj = [[] for _ in vecs]
    for i, u in enumerate(vecs):
        for j in range(i + 1, len(vecs)):
            if 1 <= hamming(u, vecs[j]) <= d - 1:
                adj[i].append(j)
                adj[j].append(i)
    return vecs, adj


def reference_descent(q, n, d):
    """Materialized-subgraph descent, entirely independent of the library.

    Holds the explicit vertex subspace and difference set at each level,
    evaluates every coset eigenvalue by a direct character sum, picks the
    smallest canonical (coset-minimal) representative attaining the minimum,
    and checks regularity, vertex counts and trace identities along the way.
    Returns (s, lambda_history, degree_history, pivots, min_distance).
    """
    vecs = all_vectors(q, n)
    S0 = [u for u in vecs if 1 <= weight(u) <= d - 1]
    zero = tuple([0] * n)
    pivots = []
    lam_hist = []
    deg_hist = []
    t = 0
    while True:
        Vt = [u for u in vecs if all(dot(u, p, q) == 0 for p in pivots)]
        St = [u for u in S0 if all(dot(u, p, q) == 0 for p in pivots)]
        D = len(St)
        assert len(Vt) == q ** (n - t)
        for u in Vt:
            degu = sum(1 for w in Vt if 1 <= hamming(u, w) <= d - 1)
            assert degu == D
        span = {zero}
        for p in pivots:
            span = {vadd(s, vscale(c, p, q), q) for s in span for c in range(q)}
        table = {}
        seen = set()
        for v in vecs:
            coset = frozenset(vadd(v, s, q) for s in span)
            if coset in seen:
                continue
            seen.add(coset)
            table[min(coset)] = char_sum(St, v, q)
        assert len(table) == q ** (n - t)
        assert sum(table.values()) == 0
        assert sum(x * x for x in table.values()) == len(Vt) * D
        assert table[zero] == D
        lam_min = min(table.values())
        if lam_min == 0:
            break
        argmin = min(rep for rep, val in table.items() if val == lam_min and rep != zero)
        lam_hist.append(lam_min)
        deg_hist.append(D)
        pivots.append(argmin)
        t += 1
        assert t <= n
    code = [u for u in vecs if all(dot(u, p, q) == 0 for p in pivots)]
    assert len(code) == q ** (n - t)
    mind = min((weight(u) for u in code if any(u)), default=None)
    return t, lam_hist, deg_hist, pivots, mind


def alpha_bruteforce(q, n, d):
    """Exact independence number by unpruned recursion; only for q^n <= 32."""
    vecs = all_vectors(q, n)
    N = len(vecs)
    assert N <= 32
    adj = [0] * N
    for i in range(N):
        for j in range(N):
            if i != j and 1 <= hamming(vecs[i], vecs[j]) <= d - 1:
                adj[i] |= 1 << j
    best = 0

    def expand(cand, size):
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        expand(cand & ~adj[v] & ~(1 << v), size + 1)
        expand(cand & ~(1 << v), size)

    expand((1 << N) - 1, 0)
    return best


def vector_matrix(q, n):
    """All q^n vectors in rank order as a numpy int8 matrix."""
    N = q**n
    M = np.zeros((N, n), dtype=np.int8)
    ranks = np.arange(N)
    for col in range(n - 1, -1, -1):
        M[:, col] = ranks % q
        ranks //= q
    return M


def residue_counts_by_weight(q, n):
    """counts[w, r, j] = #{u : weight(u) = w, <u, v_j> = r} for every index j.

    Vectorized residue tallies of all inner products, bucketed by the weight
    shell of the left argument; summing shells 1..d-1 gives the counts over
    the level-0 difference set for any d at once.
    """
    M = vector_matrix(q, n).astype(np.int32)
    G = (M @ M.T) % q
    weights = (M != 0).sum(axis=1)
    N = q**n
    counts = np.zeros((n + 1, q, N), dtype=np.int64)
    for w in range(n + 1):
        rows = np.nonzero(weights == w)[0]
        block = G[rows]
        for r in range(q):
            counts[w, r] = (block == r).sum(axis=0)
    return counts, weights


def pairwise_distance_matrix(M):
    """Hamming distances between all row pairs of a digit matrix."""
    N, n = M.shape
    dist = np.zeros((N, N), dtype=np.int16)
    for col in range(n):
        dist += M[:, col : col + 1] != M[:, col][None, :]
    return dist
