"""
Abelianization of group presentations through the Smith normal form of the
exponent-sum relation matrix.
"""

from __future__ import annotations

import dataclasses

from .presentation import MonoidPresentation, Presentation
from .representations import IntegerMatrix


@dataclasses.dataclass(frozen=True)
class InvariantFactors:
    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if self.free_rank < 0 or any(d < 2 for d in self.torsion):
            raise ValueError("torsion factors must be >= 2 and free rank nonnegative")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion factors must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


def relation_matrix(p: Presentation) -> IntegerMatrix:
    """One row per relation, one column per generator, holding the exponent
    sums of ``lhs rhs^-1``. A presentation without relations gives a single
    zero row."""
    if p.kind != "group":
        raise MonoidPresentation(f"abelianization needs a group presentation, got {p.kind} {p.name}")
    gens = p.generators
    rows = [[lhs.exponent_sum(g) - rhs.exponent_sum(g) for g in gens] for lhs, rhs in p.relations]
    return IntegerMatrix.of(rows or [[0] * len(gens)])


def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """Diagonal of the Smith normal form, length ``min(rows, cols)``.

    Pivots on the entry of smallest nonzero absolute value, ties going to
    the lowest row and then the lowest column.

    >>> smith_normal_form(IntegerMatrix.of([[2, 4], [6, 8]]))
    [2, 4]
    """
    a = [list(r) for r in m.rows]
    nrows, ncols = m.shape
    diag = []
    for t in range(min(nrows, ncols)):
        while True:
            pivot = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    v = abs(a[i][j])
                    if v and (pivot is None or v < pivot[0]):
                        pivot = (v, i, j)
            if pivot is None:
                diag.extend([0] * (min(nrows, ncols) - t))
                return diag
            _, pi, pj = pivot
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                clean = clean and a[i][t] == 0
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                clean = clean and a[t][j] == 0
            if not clean:
                continue
            # pivot must divide the remaining block
            bad = next((i for i in range(t + 1, nrows)
                        if any(a[i][j] % p for j in range(t + 1, ncols))), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def invariant_factors(m: IntegerMatrix) -> InvariantFactors:
    diag = smith_normal_form(m)
    rank = sum(1 for d in diag if d)
    return InvariantFactors(tuple(d for d in diag if d > 1), m.shape[1] - rank)


def abelianization(p: Presentation) -> InvariantFactors:
    return invariant_factors(relation_matrix(p))
