"""
Concrete evaluators for words: free-group automorphisms, permutations,
monomial matrices over roots of unity, and integer reflection matrices.

Words act left to right everywhere: the image of ``u v`` is "apply ``u``,
then ``v``". For matrices this is the ordinary product ``M(u) @ M(v)``;
for free-group automorphisms ``phi(uv)(x) = phi(v)(phi(u)(x))``. A
permutation's one-line array records the arrangement reached by applying
the position swaps of the word to ``1 .. n``, so ``s1 s2`` gives
``(2, 3, 1)``.
"""

from __future__ import annotations

import dataclasses
import functools
import re
from typing import Iterable, Sequence

from .words import BraidkitError, UnknownGenerator, Word


class RankMismatch(BraidkitError, ValueError):
    pass


class UnsupportedParams(BraidkitError, ValueError):
    pass


_INDEXED = re.compile(r"^([a-z]+?)(\d+)$")


def _split(name: str) -> tuple[str, int | None]:
    m = _INDEXED.match(name)
    if m:
        return m.group(1), int(m.group(2))
    return name, None


# -- free group automorphisms ----------------------------------------------

FreeWord = tuple[int, ...]  # letters +-(j+1) for x_{j+1}^{+-1}


def _free_reduce(letters: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def _free_inverse(w: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(w))


@dataclasses.dataclass(frozen=True)
class FreeGroupEndo:
    """Endomorphism of the free group on ``x1 .. x{rank}``, stored by the
    images of the basis as reduced words of signed indices."""

    rank: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, rank: int) -> "FreeGroupEndo":
        return cls(rank, tuple((j + 1,) for j in range(rank)))

    def apply(self, w: FreeWord) -> FreeWord:
        out: list[int] = []
        for a in w:
            img = self.images[abs(a) - 1]
            out.extend(img if a > 0 else _free_inverse(img))
        return _free_reduce(out)

    def then(self, other: "FreeGroupEndo") -> "FreeGroupEndo":
        """``self`` followed by ``other``."""
        if other.rank != self.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank}")
        return FreeGroupEndo(self.rank, tuple(other.apply(img) for img in self.images))

    def format_image(self, j: int) -> str:
        return " ".join(f"x{abs(a)}" + ("^-1" if a < 0 else "") for a in self.images[j]) or "1"

    def __str__(self):
        return ", ".join(f"x{j + 1} -> {self.format_image(j)}" for j in range(self.rank))


@functools.lru_cache(maxsize=None)
def _endo_generator(kind: str, i: int, sign: int, n: int) -> FreeGroupEndo:
    if not 1 <= i <= n - 1:
        raise UnknownGenerator(f"{kind}{i}", f"rank {n}")
    imgs = [(j + 1,) for j in range(n)]
    a, b = i, i + 1  # x_i, x_{i+1}
    if kind == "xi":
        imgs[a - 1], imgs[b - 1] = (b,), (a,)
    elif sign > 0:
        imgs[a - 1], imgs[b - 1] = (b,), (-b, a, b)
    else:
        imgs[a - 1], imgs[b - 1] = (a, b, -a), (a,)
    return FreeGroupEndo(n, tuple(imgs))


def artin_action(w: Word, n: int) -> FreeGroupEndo:
    """Evaluate a word over ``s1 .. s{n-1}`` (braid automorphisms) and
    ``xi1 .. xi{n-1}`` (letter swaps) as an automorphism of F_n."""
    endo = FreeGroupEndo.identity(n)
    for name, k in w.letters:
        kind, i = _split(name)
        if kind not in ("s", "xi") or i is None:
            raise UnknownGenerator(name, "braid-permutation alphabet")
        g = _endo_generator(kind, i, 1 if k > 0 else -1, n)
        for _ in range(abs(k)):
            endo = endo.then(g)
    return endo


def endo_equal(a: FreeGroupEndo, b: FreeGroupEndo) -> bool:
    if a.rank != b.rank:
        raise RankMismatch(f"ranks {a.rank} and {b.rank}")
    return a.images == b.images


# -- permutations ----------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Permutation:
    """Permutation of ``1 .. n`` as a one-line image array."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    def __len__(self):
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self`` followed by ``other`` (as position swaps)."""
        return Permutation(tuple(self.images[k - 1] for k in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, k in enumerate(self.images, 1):
            inv[k - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(k == j for j, k in enumerate(self.images, 1))

    def __str__(self):
        return "[" + " ".join(map(str, self.images)) + "]"


def perm_image(w: Word, n: int, images: dict[str, Permutation] | None = None) -> Permutation:
    """Image in the symmetric group S_n.

    Indexed generators ``s_i``, ``d_i``, ``x_i``, ``xi_i`` go to the
    transposition (i, i+1); the composite generators ``s`` and ``d`` to
    the product of all of them; band generators ``a{t}_{s}`` to (s, t);
    the extra nodes ``t``, ``r``, ``w`` to the identity. ``images``
    overrides any of these.
    """
    images = images or {}
    result = Permutation.identity(n)
    for name, k in w.letters:
        if name in images:
            g = images[name]
        else:
            g = _perm_generator(name, n)
        if k < 0:
            g = g.inverse()
        for _ in range(abs(k)):
            result = result * g
    return result


@functools.lru_cache(maxsize=None)
def _perm_generator(name: str, n: int) -> Permutation:
    if name in ("t", "r", "w"):
        return Permutation.identity(n)
    if name in ("s", "d"):
        p = Permutation.identity(n)
        for i in range(1, n):
            p = p * Permutation.transposition(n, i, i + 1)
        return p
    m = re.match(r"^a(\d+)_(\d+)$", name)
    if m:
        t, s = int(m.group(1)), int(m.group(2))
        if 1 <= s < t <= n:
            return Permutation.transposition(n, s, t)
    kind, i = _split(name)
    if kind in ("s", "d", "x", "xi") and i is not None and 1 <= i <= n - 1:
        return Permutation.transposition(n, i, i + 1)
    raise UnknownGenerator(name, f"S_{n} quotient")


# -- monomial matrices -----------------------------------------------------

@dataclasses.dataclass(frozen=True)
class MonomialMatrix:
    """Monomial matrix whose column ``j`` has the single nonzero entry
    ``zeta_m ** exps[j-1]`` in row ``perm(j)``; exact by construction."""

    modulus: int
    perm: Permutation
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != len(self.perm) or any(not 0 <= a < self.modulus for a in self.exps):
            raise ValueError("exponents must lie in [0, modulus)")

    @property
    def size(self) -> int:
        return len(self.exps)

    @classmethod
    def identity(cls, r: int, m: int) -> "MonomialMatrix":
        return cls(m, Permutation.identity(r), (0,) * r)

    @classmethod
    def diagonal(cls, m: int, exps: Sequence[int]) -> "MonomialMatrix":
        return cls(m, Permutation.identity(len(exps)), tuple(a % m for a in exps))

    @classmethod
    def transposition(cls, r: int, m: int, i: int) -> "MonomialMatrix":
        return cls(m, Permutation.transposition(r, i, i + 1), (0,) * r)

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        m = self.modulus
        exps = tuple((b + self.exps[other.perm(j) - 1]) % m for j, b in enumerate(other.exps, 1))
        return MonomialMatrix(m, self.perm * other.perm, exps)

    def inverse(self) -> "MonomialMatrix":
        m = self.modulus
        inv = self.perm.inverse()
        # column j of the inverse sits in row inv(j) with entry conj of self's column inv(j)
        exps = tuple((-self.exps[inv(j) - 1]) % m for j in range(1, self.size + 1))
        return MonomialMatrix(m, inv, exps)

    def __pow__(self, k: int) -> "MonomialMatrix":
        base = self if k >= 0 else self.inverse()
        out = MonomialMatrix.identity(self.size, self.modulus)
        for _ in range(abs(k)):
            out = out @ base
        return out

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.exps)

    def dense(self) -> list[list[int | None]]:
        """Rows of exponents, ``None`` for zero entries."""
        out: list[list[int | None]] = [[None] * self.size for _ in range(self.size)]
        for j, a in enumerate(self.exps, 1):
            out[self.perm(j) - 1][j - 1] = a
        return out


COMPLEX_FAMILIES = ("complex_2e_e_r", "complex_e_e_r", "complex_d_1_n")


def monomial_generators(family: str, **params) -> dict[str, MonomialMatrix]:
    """Generator images for the monomial model of a complex braid family.

    ``complex_2e_e_r`` (m = d e): ``t_i`` -> transposition (i-1, i),
    ``t = t2 ... t_r``, ``t2p`` -> ``t1 s1 t1^-1`` with
    ``t1 = diag(zeta_m, 1, ...)``, ``s`` -> ``t1^e``.
    ``complex_e_e_r``: the same with d = 1 and no ``s``.
    ``complex_d_1_n`` (m = d): ``s_i`` transpositions, ``s = s1 ... s{n-1}``,
    ``t`` -> ``diag(zeta_d, 1, ...)``.
    """
    def need(key, lo):
        v = params.get(key)
        if not isinstance(v, int) or v < lo:
            raise UnsupportedParams(f"{family} needs {key} >= {lo}, got {v!r}")
        return v

    if family == "complex_d_1_n":
        d, r = need("d", 2), need("n", 2)
        m, prefix = d, "s"
        gens = {f"s{i}": MonomialMatrix.transposition(r, m, i) for i in range(1, r)}
        gens["t"] = MonomialMatrix.diagonal(m, [1] + [0] * (r - 1))
        cycle = "s"
    elif family in ("complex_2e_e_r", "complex_e_e_r"):
        e, r = need("e", 2), need("r", 2 if family == "complex_2e_e_r" else 3)
        d = need("d", 2) if family == "complex_2e_e_r" else 1
        m = d * e
        gens = {f"t{i}": MonomialMatrix.transposition(r, m, i - 1) for i in range(2, r + 1)}
        t1 = MonomialMatrix.diagonal(m, [1] + [0] * (r - 1))
        gens["t2p"] = t1 @ gens["t2"] @ t1.inverse()
        if family == "complex_2e_e_r":
            # t1^e satisfies the alternating relation only when d = 2
            gens["s"] = t1 ** (-e)
        cycle = "t"
        prefix = "t"
    else:
        raise UnsupportedParams(f"no monomial model for {family}")
    first = 1 if prefix == "s" else 2
    prod = MonomialMatrix.identity(r, m)
    for i in range(first, first + r - 1):
        prod = prod @ gens[f"{prefix}{i}"]
    gens[cycle] = prod
    return gens


def monomial_image(w: Word, family: str, **params) -> MonomialMatrix:
    gens = monomial_generators(family, **params)
    some = next(iter(gens.values()))
    out = MonomialMatrix.identity(some.size, some.modulus)
    for name, k in w.letters:
        try:
            g = gens[name]
        except KeyError:
            raise UnknownGenerator(name, f"{family} monomial model") from None
        out = out @ (g ** k)
    return out


def closure(generators: Iterable, identity, limit: int = 10**6) -> set:
    """All products of the generators (breadth-first), for finite groups."""
    gens = list(generators)
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g if not isinstance(a, Permutation) else a * g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
                    if len(seen) > limit:
                        raise ValueError(f"closure exceeds {limit} elements")
        frontier = nxt
    return seen


# -- integer matrices and Coxeter reflections ------------------------------

@dataclasses.dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0] or len({len(r) for r in self.rows}) != 1:
            raise ValueError("integer matrix needs positive, consistent dimensions")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(int(a) for a in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        cols = list(zip(*other.rows))
        return IntegerMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def is_identity(self) -> bool:
        return self == IntegerMatrix.identity(len(self.rows)) if self.shape[0] == self.shape[1] else False

    def __str__(self):
        return "\n".join(" ".join(f"{a:3d}" for a in r) for r in self.rows)


def cartan_matrix(kind: str, n: int = 8) -> tuple[list[str], IntegerMatrix]:
    """Generator names and the integer Cartan matrix of type B_n, D_n or E8.

    Chain ``s1 .. s{n-1}`` is the linear part; the extra node is ``t``
    (B: double bond to s1), ``r`` (D: attached to s2) or ``w`` (E8:
    attached to s3 of the chain s1 .. s7).
    """
    if kind == "E8":
        n = 8
    if kind not in ("B", "D", "E8") or n < 3:
        raise UnsupportedParams(f"no Cartan data for {kind}{n}")
    extra, attach = {"B": ("t", 1), "D": ("r", 2), "E8": ("w", 3)}[kind]
    names = [f"s{i}" for i in range(1, n)] + [extra]
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 2):
        a[i][i + 1] = a[i + 1][i] = -1
    x, y = n - 1, attach - 1
    if kind == "B":
        a[x][y], a[y][x] = -2, -1
    else:
        a[x][y] = a[y][x] = -1
    return names, IntegerMatrix.of(a)


@functools.lru_cache(maxsize=None)
def reflection_generators(kind: str, n: int = 8) -> dict[str, IntegerMatrix]:
    names, cartan = cartan_matrix(kind, n)
    size = len(names)
    gens = {}
    for i, name in enumerate(names):
        rows = [list(r) for r in IntegerMatrix.identity(size).rows]
        for j in range(size):
            rows[i][j] -= cartan.rows[i][j]
        gens[name] = IntegerMatrix.of(rows)
    prod = IntegerMatrix.identity(size)
    for name in names[:-1]:
        prod = prod @ gens[name]
    gens["s"] = prod
    return gens


def _matrix_inverse_reflection_word(gens, name, k, kind, n):
    g = gens[name]
    if k > 0:
        return [g] * k
    if name == "s":
        inv = [gens[f"s{i}"] for i in range(n - 1, 0, -1)]
        return inv * (-k)
    return [g] * (-k)  # simple reflections are involutions


def coxeter_reflection_image(w: Word, kind: str, n: int = 8) -> IntegerMatrix:
    """Image in the reflection representation of the Coxeter group of type
    ``kind`` (B, D or E8). ``s`` stands for ``s1 s2 ... s{n-1}``."""
    gens = reflection_generators(kind, n)
    size = len(next(iter(gens.values())).rows)
    out = IntegerMatrix.identity(size)
    for name, k in w.letters:
        if name not in gens:
            raise UnknownGenerator(name, f"{kind} reflection representation")
        for g in _matrix_inverse_reflection_word(gens, name, k, kind, n):
            out = out @ g
    return out
