"""
Exact rank of integer matrices by fraction-free elimination.
"""
from functools import reduce
from math import gcd
from typing import List, Sequence


def _primitive(row: List[int]) -> List[int]:
    divisor = reduce(gcd, row, 0)
    if divisor > 1:
        return [entry // divisor for entry in row]
    return row


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank over the rationals of an integer matrix.

    Rows are eliminated by integer cross-multiplication and reduced by
    their gcd after every step, so no fractions appear.
    """
    matrix = [_primitive(list(row)) for row in rows if any(row)]
    if not matrix:
        return 0
    width = len(matrix[0])
    rank = 0
    for column in range(width):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][column]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        head = matrix[rank]
        for r in range(rank + 1, len(matrix)):
            factor = matrix[r][column]
            if factor:
                matrix[r] = _primitive([a * head[column] - factor * b for a, b in zip(matrix[r], head)])
        rank += 1
        if rank == len(matrix):
            break
    return rank


def direction_rank(n: int, pairs: Sequence[Sequence[int]]) -> int:
    """Rank of the vectors e_a - e_b (1-based) over the given pairs."""
    rows = []
    for a, b in pairs:
        row = [0] * n
        row[a - 1] += 1
        row[b - 1] -= 1
        rows.append(row)
    return integer_rank(rows)
