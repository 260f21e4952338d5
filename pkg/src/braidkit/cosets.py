"""
Todd-Coxeter coset enumeration, HLT strategy.

Cosets are processed in creation order; at each live coset every relator
is scanned (and filled) in stored order, then any remaining holes in its
row are filled. Coincidences are resolved first-in-first-out with a
union-find forwarding array in the style of Holt, Eick and O'Brien,
*Handbook of Computational Group Theory*.

Column ``2*j`` holds generator ``j``, column ``2*j + 1`` its inverse.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .presentation import MonoidPresentation, Presentation
from .words import Word, free_reduce

DEFAULT_MAX_COSETS = 10**6


@dataclasses.dataclass(frozen=True)
class CosetTable:
    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.rows)

    def column(self, name: str, exponent: int = 1) -> int:
        j = self.generators.index(name)
        return 2 * j + (exponent < 0)

    def act(self, coset: int, word: Word) -> int:
        """Image of ``coset`` under ``word`` (right action)."""
        for name, k in word.letters:
            col = self.column(name, k)
            for _ in range(abs(k)):
                coset = self.rows[coset][col]
        return coset

    def is_closed(self, relators: Sequence[Word], subgroup: Sequence[Word] = ()) -> bool:
        """Independent check: complete, consistent, every relator loops at
        every coset and every subgroup generator loops at coset 0."""
        ncols = 2 * len(self.generators)
        for c, row in enumerate(self.rows):
            if len(row) != ncols:
                return False
            for x, d in enumerate(row):
                if not 0 <= d < len(self.rows) or self.rows[d][x ^ 1] != c:
                    return False
        for w in relators:
            if any(self.act(c, w) != c for c in range(len(self.rows))):
                return False
        return all(self.act(0, w) == 0 for w in subgroup)


@dataclasses.dataclass(frozen=True)
class EnumerationResult:
    cosets_used: int


@dataclasses.dataclass(frozen=True)
class Completed(EnumerationResult):
    index: int
    table: CosetTable


@dataclasses.dataclass(frozen=True)
class Overflow(EnumerationResult):
    pass


class _Full(Exception):
    pass


def _columns(word: Word, gens: dict[str, int]) -> list[int]:
    cols = []
    for name, k in free_reduce(word).letters:
        cols.extend([2 * gens[name] + (k < 0)] * abs(k))
    return cols


class _Enumerator:
    def __init__(self, ngens: int, relators: list[list[int]], max_cosets: int):
        self.ncols = 2 * ngens
        self.relators = relators
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.fwd: list[int] = [0]
        self.live = 1

    def define(self, c: int, x: int) -> int:
        table = self.table
        d = len(table)
        if d >= self.max_cosets:
            raise _Full
        row = [-1] * self.ncols
        row[x ^ 1] = c
        table.append(row)
        self.fwd.append(d)
        table[c][x] = d
        self.live += 1
        return d

    def rep(self, c: int) -> int:
        fwd = self.fwd
        root = c
        while fwd[root] != root:
            root = fwd[root]
        while fwd[c] != root:
            fwd[c], c = root, fwd[c]
        return root

    def _merge(self, a: int, b: int, queue: list[int]):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.fwd[b] = a
            self.live -= 1
            queue.append(b)

    def coincidence(self, a: int, b: int):
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(self.ncols):
                d = row[x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    self._merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(self, c: int, w: list[int]):
        table = self.table
        f, i = c, 0
        b, j = c, len(w) - 1
        while True:
            while i <= j:
                nxt = table[f][w[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][w[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def run(self, subgroup: list[list[int]]):
        for w in subgroup:
            self.scan_and_fill(0, w)
        fwd = self.fwd
        c = 0
        while c < len(self.table):
            for w in self.relators:
                if fwd[c] != c:
                    break
                self.scan_and_fill(c, w)
            if fwd[c] == c:
                row = self.table[c]
                for x in range(self.ncols):
                    if row[x] < 0:
                        self.define(c, x)
            c += 1

    def compact(self, names: tuple[str, ...]) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.fwd[c] == c]
        renum = {c: k for k, c in enumerate(live)}
        rows = tuple(tuple(renum[self.rep(d)] for d in self.table[c]) for c in live)
        return CosetTable(names, rows)


def enumerate_cosets(p: Presentation, subgroup: Sequence[Word] = (),
                     max_cosets: int = DEFAULT_MAX_COSETS) -> EnumerationResult:
    """Enumerate the cosets of the subgroup generated by ``subgroup``.

    Returns ``Completed`` with the index and the closed coset table, or
    ``Overflow`` once more than ``max_cosets`` cosets (live or dead) would be
    needed. Deterministic: same input, same table.
    """
    if p.kind != "group" or not p.alphabet.is_group:
        raise MonoidPresentation(f"coset enumeration needs a group presentation, got {p.kind} {p.name}")
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    gens = {g: j for j, g in enumerate(p.generators)}
    relators = [r for r in (_columns(w, gens) for w in p.relators()) if r]
    sub = [r for r in (_columns(w, gens) for w in subgroup) if r]
    e = _Enumerator(len(gens), relators, max_cosets)
    try:
        e.run(sub)
    except _Full:
        return Overflow(cosets_used=len(e.table))
    table = e.compact(p.generators)
    return Completed(cosets_used=len(e.table), index=e.live, table=table)


def index_of_parabolic(p: Presentation, generator_subset_words: Sequence[Word],
                       max_cosets: int = DEFAULT_MAX_COSETS) -> EnumerationResult:
    """Index of the subgroup generated by the given words (typically a
    subset of the standard generators, or conjugates of them)."""
    return enumerate_cosets(p, generator_subset_words, max_cosets)
