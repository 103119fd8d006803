"""Independent reference computations used to freeze expected test values.

Everything here is deliberately naive: dense Gaussian elimination over
Fraction lists, schoolbook polynomial arithmetic, and brute combinatorial
enumeration.  None of it shares code with the package's sparse kernel.
"""

from fractions import Fraction
from itertools import product


def dense_rows(vectors, keys=None):
    """Dense Fraction rows from dict-keyed sparse vectors."""
    if keys is None:
        keys = sorted(set().union(*[set(v) for v in vectors]) if vectors else set())
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in v.items():
            row[index[k]] = Fraction(c)
        rows.append(row)
    return rows, keys


def row_reduce(rows):
    """In-place reduced row echelon form; returns the rank."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def dense_rank(vectors):
    rows, _ = dense_rows(list(vectors))
    return row_reduce(rows)


def dense_membership(vectors, candidate):
    """True iff the candidate lies in the span of the vectors."""
    vs = list(vectors)
    return dense_rank(vs + [candidate]) == dense_rank(vs)


def dense_solve_in_span(vectors, target):
    """Coefficients with sum(c_i * v_i) = target, or None.

    Solves the column system by eliminating an augmented matrix whose
    columns are the vectors.
    """
    vs = list(vectors)
    keys = sorted(
        set().union(*[set(v) for v in vs + [target]]) if vs or target else set()
    )
    index = {k: i for i, k in enumerate(keys)}
    m = [[Fraction(0)] * (len(vs) + 1) for _ in keys]
    for j, v in enumerate(vs):
        for k, c in v.items():
            m[index[k]][j] = Fraction(c)
    for k, c in target.items():
        m[index[k]][len(vs)] = Fraction(c)
    rank = row_reduce(m)
    coeffs = [Fraction(0)] * len(vs)
    for row in m[:rank]:
        lead = next((j for j, c in enumerate(row) if c), None)
        if lead is None:
            continue
        if lead == len(vs):
            return None  # inconsistent
        coeffs[lead] = row[len(vs)]
    # verify (guards against free variables making the read-off wrong)
    check = {}
    for j, c in enumerate(coeffs):
        if not c:
            continue
        for k, v in vs[j].items():
            check[k] = check.get(k, Fraction(0)) + c * Fraction(v)
    target_f = {k: Fraction(c) for k, c in target.items() if c}
    if {k: c for k, c in check.items() if c} != target_f:
        return None
    return coeffs


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_pow(p, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def omission_patterns(n, s):
    """All subset tuples (J_1..J_s) with each i omitted from exactly one slot.

    Generated from the omission assignments directly; there are s^n of
    them and they are pairwise distinct.
    """
    patterns = set()
    for omit in product(range(1, s + 1), repeat=n):
        pattern = tuple(
            frozenset(i + 1 for i in range(n) if omit[i] != k)
            for k in range(1, s + 1)
        )
        patterns.add(pattern)
    return patterns


def binomial_mod2_truncated_power(exponent, truncation):
    """(t (x) 1 + 1 (x) t)^exponent over GF(2) with t^truncation = 0.

    Returns the set of surviving (i, j) exponent pairs.
    """

    def choose(a, b):
        from math import comb

        return comb(a, b)

    return {
        (k, exponent - k)
        for k in range(exponent + 1)
        if choose(exponent, k) % 2 == 1
        and k < truncation
        and exponent - k < truncation
    }
