"""
Left-greedy Garside normal form for the braid group Br_n, and the integral
group ring of Br_n used to test singular braid relations.

A braid is written ``Delta^k A_1 ... A_m`` with each ``A_j`` a permutation
braid other than 1 and Delta, and every adjacent pair left-weighted: the
starting set of ``A_{j+1}`` lies inside the finishing set of ``A_j``.
Simples are stored as one-line permutation arrays under the same
convention as :func:`braidkit.representations.perm_image`, so the braid
``s1 s2`` has simple ``(2, 3, 1)``.

Inverse letters use ``s_i^-1 = Delta^-1 (Delta s_i^-1)`` and the fact that
``A Delta^-1 = Delta^-1 tau(A)`` with ``tau`` the flip ``i -> n - i``.
"""

from __future__ import annotations

import dataclasses
import re
from collections import defaultdict
from typing import Iterable, Iterator, Mapping

from .representations import Permutation
from .words import Alphabet, UnknownGenerator, Word

Perm = tuple[int, ...]  # 0-based one-line array


def _finishing(p: Perm) -> set[int]:
    """{i : A = A' s_i}, 1-based generator indices."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _starting(p: Perm) -> set[int]:
    """{i : A = s_i A'}"""
    inv = [0] * len(p)
    for j, v in enumerate(p):
        inv[v] = j
    return {i for i in range(1, len(p)) if inv[i - 1] > inv[i]}


def _right_mul_gen(p: Perm, i: int) -> Perm:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _left_div_gen(p: Perm, i: int) -> Perm:
    """Permutation of ``s_i^-1 A`` (swap the values i-1 and i, 0-based)."""
    a, b = i - 1, i
    return tuple(b if v == a else a if v == b else v for v in p)


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _flip(p: Perm) -> Perm:
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    changed = False
    while True:
        moves = _starting(b) - _finishing(a)
        if not moves:
            return a, b, changed
        i = min(moves)
        a, b = _right_mul_gen(a, i), _left_div_gen(b, i)
        changed = True


@dataclasses.dataclass(frozen=True)
class BraidNF:
    strands: int
    delta_power: int
    simples: tuple[Perm, ...]  # 0-based; see ``permutations`` for 1-based

    @property
    def permutations(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(tuple(v + 1 for v in p)) for p in self.simples)

    @property
    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.simples

    def __str__(self):
        simples = " ".join(str(p) for p in self.permutations)
        return f"Delta^{self.delta_power}" + (f" {simples}" if simples else "")

    def word(self) -> Word:
        """A word over ``s1 .. s{n-1}`` representing this braid."""
        n = self.strands
        alpha = Alphabet(f"s{i}" for i in range(1, n))
        letters = [(f"s{i}", 1 if self.delta_power > 0 else -1)
                   for _ in range(abs(self.delta_power)) for i in _positive_word(_delta(n))]
        for p in self.simples:
            letters.extend((f"s{i}", 1) for i in _positive_word(p))
        return Word(alpha, tuple(letters))


def _positive_word(p: Perm) -> list[int]:
    """Generator indices of a positive word for the permutation braid ``p``."""
    out = []
    p = tuple(p)
    while True:
        fin = _finishing(p)
        if not fin:
            break
        i = min(fin)
        out.append(i)
        p = _right_mul_gen(p, i)
    return out[::-1]


class _NF:
    """Mutable working copy of a normal form."""

    __slots__ = ("n", "k", "simples")

    def __init__(self, n: int, k: int = 0, simples: Iterable[Perm] = ()):
        self.n = n
        self.k = k
        self.simples = list(simples)

    def mul_delta(self, e: int):
        if e % 2:
            self.simples = [_flip(p) for p in self.simples]
        self.k += e

    def mul_simple(self, x: Perm):
        s = self.simples
        s.append(x)
        for j in range(len(s) - 2, -1, -1):
            s[j], s[j + 1], changed = _left_weight(s[j], s[j + 1])
            if not changed:
                break
        self._cleanup()

    def _cleanup(self):
        n, s = self.n, self.simples
        delta, ident = _delta(n), _identity(n)
        # a single right-to-left pass suffices in theory; sweep again as a guard
        dirty = True
        while dirty:
            dirty = False
            for j in range(len(s) - 1):
                s[j], s[j + 1], changed = _left_weight(s[j], s[j + 1])
                dirty = dirty or changed
        lead = 0
        while lead < len(s) and s[lead] == delta:
            lead += 1
        if lead:
            del s[:lead]
            self.k += lead
        while s and s[-1] == ident:
            s.pop()

    def mul_generator(self, i: int, sign: int):
        n = self.n
        if not 1 <= i <= n - 1:
            raise UnknownGenerator(f"s{i}", f"Br_{n}")
        if sign > 0:
            self.mul_simple(_right_mul_gen(_identity(n), i))
        else:
            self.mul_delta(-1)
            self.mul_simple(_right_mul_gen(_delta(n), i))

    def freeze(self) -> BraidNF:
        return BraidNF(self.n, self.k, tuple(self.simples))


_GEN = re.compile(r"^s(\d+)$")


def _letters(w: Word, n: int) -> Iterator[tuple[int, int]]:
    for name, k in w.letters:
        m = _GEN.match(name)
        if m is None or not 1 <= int(m.group(1)) <= n - 1:
            raise UnknownGenerator(name, f"Br_{n}")
        i = int(m.group(1))
        for _ in range(abs(k)):
            yield i, (1 if k > 0 else -1)


def braid_nf(w: Word, n: int) -> BraidNF:
    """Left-greedy normal form of a word over ``s1 .. s{n-1}``."""
    nf = _NF(n)
    for i, sign in _letters(w, n):
        nf.mul_generator(i, sign)
    return nf.freeze()


def nf_multiply(a: BraidNF, b: BraidNF) -> BraidNF:
    if a.strands != b.strands:
        raise ValueError("strand counts differ")
    nf = _NF(a.strands, a.delta_power, a.simples)
    nf.mul_delta(b.delta_power)
    for p in b.simples:
        nf.mul_simple(p)
    return nf.freeze()


def nf_mul_generator(a: BraidNF, i: int, sign: int) -> BraidNF:
    nf = _NF(a.strands, a.delta_power, a.simples)
    nf.mul_generator(i, sign)
    return nf.freeze()


def braid_equal(u: Word, v: Word, n: int) -> bool:
    return braid_nf(u, n) == braid_nf(v, n)


def identity_nf(n: int) -> BraidNF:
    return BraidNF(n, 0, ())


# -- group ring --------------------------------------------------------------

class GroupRingElement(Mapping[BraidNF, int]):
    """Finite integer combination of braids, keyed by normal form."""

    __slots__ = ("strands", "_terms")

    def __init__(self, strands: int, terms: Mapping[BraidNF, int] | Iterable[tuple[BraidNF, int]] = ()):
        acc: dict[BraidNF, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            if b.strands != strands:
                raise ValueError("strand counts differ")
            acc[b] += c
        self.strands = strands
        self._terms = {b: c for b, c in acc.items() if c}

    @classmethod
    def of_braid(cls, b: BraidNF, coeff: int = 1) -> "GroupRingElement":
        return cls(b.strands, {b: coeff})

    @classmethod
    def one(cls, n: int) -> "GroupRingElement":
        return cls.of_braid(identity_nf(n))

    def __getitem__(self, b: BraidNF) -> int:
        return self._terms[b]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.strands == other.strands and self._terms == other._terms

    def __hash__(self):
        return hash((self.strands, frozenset(self._terms.items())))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.strands, [*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.strands, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms = [(nf_multiply(a, b), ca * cb)
                 for a, ca in self._terms.items() for b, cb in other._terms.items()]
        return GroupRingElement(self.strands, terms)

    def mul_generator(self, i: int, sign: int) -> "GroupRingElement":
        return GroupRingElement(self.strands, [(nf_mul_generator(b, i, sign), c) for b, c in self._terms.items()])

    def __repr__(self):
        parts = [f"{c:+d}*({b})" for b, c in sorted(self._terms.items(), key=lambda t: (t[0].delta_power, t[0].simples))]
        return "GroupRingElement(" + " ".join(parts) + ")"


_SING = re.compile(r"^([sx])(\d+)$")


def desingularize(w: Word, n: int) -> GroupRingElement:
    """Image of a singular braid word under ``x_i -> s_i - s_i^-1``."""
    elt = GroupRingElement.one(n)
    for name, k in w.letters:
        m = _SING.match(name)
        if m is None or not 1 <= int(m.group(2)) <= n - 1:
            raise UnknownGenerator(name, f"SB_{n}")
        i = int(m.group(2))
        for _ in range(abs(k)):
            if m.group(1) == "s":
                elt = elt.mul_generator(i, 1 if k > 0 else -1)
            else:
                elt = elt.mul_generator(i, 1) - elt.mul_generator(i, -1)
    return elt


def ring_equal(a: GroupRingElement, b: GroupRingElement) -> bool:
    return a == b
