"""Expected codeword length under the table-hopping chain.

Encoding a memoryless source walks a Markov chain on tables: from table i the
chain moves to j with the total probability of symbols sent there.  The cost
of a long message per symbol converges to the stationary average of the
per-table expected codeword lengths.  Everything is exact rational
arithmetic; rounding happens only in display helpers.
"""

from __future__ import annotations

from decimal import Decimal, ROUND_HALF_EVEN
from fractions import Fraction

from .core import check_same_alphabet
from .errors import NotRegular


def transition_matrix(code, dist):
    """Row-stochastic table-to-table matrix induced by the symbol weights."""
    check_same_alphabet(code, dist)
    m = code.num_tables
    rows = []
    for i in code.table_indices():
        row = [Fraction(0)] * m
        for s in code.alphabet:
            row[code.target(i, s)] += dist[s]
        rows.append(tuple(row))
    return tuple(rows)


def _solve_unique(rows, n):
    """Exact Gauss-Jordan on an augmented system; None unless the solution
    exists and is unique."""
    mat = [list(r) for r in rows]
    pivot_cols = []
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        head = mat[rank][col]
        mat[rank] = [v / head for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        pivot_cols.append(col)
        rank += 1
    for r in range(rank, len(mat)):
        if mat[r][n] != 0:
            return None
    if rank < n:
        return None
    solution = [Fraction(0)] * n
    for r, col in enumerate(pivot_cols):
        solution[col] = mat[r][n]
    return solution


def stationary_distribution(code, dist):
    """The unique row vector fixed by the transition matrix, summing to one.

    Raises NotRegular when the fixed vector is not unique, which happens
    exactly when no table is reachable from every table.
    """
    q = transition_matrix(code, dist)
    m = code.num_tables
    rows = []
    for j in range(m):
        row = [q[i][j] - (1 if i == j else 0) for i in range(m)]
        row.append(Fraction(0))
        rows.append(row)
    rows.append([Fraction(1)] * m + [Fraction(1)])
    solution = _solve_unique(rows, m)
    if solution is None:
        raise NotRegular("stationary distribution is not unique")
    return tuple(solution)


def table_length(code, dist, i):
    """Expected codeword length of one table."""
    check_same_alphabet(code, dist)
    return sum((dist[s] * len(code.code(i, s)) for s in code.alphabet),
               Fraction(0))


def average_length(code, dist):
    """Stationary per-symbol expected codeword length, as an exact Fraction."""
    pi = stationary_distribution(code, dist)
    return sum((pi[i] * table_length(code, dist, i)
                for i in code.table_indices()), Fraction(0))


def approx_decimal(x, places=4):
    """Round an exact rational for display, ties to even."""
    value = Decimal(x.numerator) / Decimal(x.denominator)
    return str(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))
