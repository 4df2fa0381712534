"""Exact Gaussian elimination for the small systems that fix free constants."""

from __future__ import annotations

from fractions import Fraction


class SingularSystem(ValueError):
    def __init__(self, consistent: bool):
        self.consistent = consistent
        super().__init__("consistent but underdetermined" if consistent else "inconsistent")


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Unique solution of rows @ x = rhs; raises SingularSystem otherwise."""
    n_unknowns = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n_unknowns):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    consistent = all(row[-1] == 0 for row in aug[r:])
    if not consistent or r < n_unknowns:
        raise SingularSystem(consistent)
    x = [Fraction(0)] * n_unknowns
    for i, col in enumerate(pivots):
        x[col] = aug[i][-1]
    return x
