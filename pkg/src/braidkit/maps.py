"""
Translations between the canonical generators and the reduced
(two-generator plus extras) generating sets, and the band-generator
expansion.
"""

from __future__ import annotations

import dataclasses
from typing import Mapping

from .catalog import UnknownFamily, UnsupportedParams, band_name, catalog_build
from .words import Alphabet, Generator, Word, free_reduce, substitute


@dataclasses.dataclass(frozen=True)
class GeneratorMap:
    source: Alphabet
    target: Alphabet
    images: Mapping[str, Word]

    def __post_init__(self):
        missing = [g for g in self.source.names if g not in self.images]
        if missing:
            raise ValueError(f"map is not total: no image for {', '.join(missing)}")
        for name, img in self.images.items():
            if img.alphabet != self.target:
                raise ValueError(f"image of {name} is not over the target alphabet")
            if not img.is_reduced():
                raise ValueError(f"image of {name} is not reduced")

    def image(self, name: str) -> Word:
        return self.images[name]

    def __call__(self, w: Word) -> Word:
        return substitute(w, self)

    def __str__(self):
        return "\n".join(f"{g} -> {self.images[g]}" for g in self.source.names)


# short family key -> (composite letter, reduced generators, extra indexed series)
_PAIRS = {
    "artin": ("s", ["s1", "s"], []),
    "sphere": ("d", ["d1", "d"], []),
    "singular": ("s", ["s1", "s", "x1"], ["x"]),
    "bp": ("s", ["s1", "s", "xi1"], ["xi"]),
    "typeB": ("s", ["s1", "s", "t"], ["t"]),
    "typeD": ("s", ["s1", "s", "r"], ["r"]),
    "typeE8": ("s", ["s1", "s", "w"], ["w"]),
}

_ALIASES = {
    "artin_two_gen": "artin", "artin_canonical": "artin",
    "sphere_two_gen": "sphere", "sphere_canonical": "sphere",
    "singular_two_gen": "singular", "singular_canonical": "singular",
    "bp_reduced": "bp", "bp_canonical": "bp",
    "typeB_reduced": "typeB", "typeB_canonical": "typeB",
    "typeD_reduced": "typeD", "typeD_canonical": "typeD",
    "typeE8_reduced": "typeE8",
}


def pair_key(family: str) -> str:
    key = _ALIASES.get(family, family)
    if key not in _PAIRS:
        raise UnknownFamily(family)
    return key


def canonical_alphabet(family: str, n: int) -> Alphabet:
    key = pair_key(family)
    if key == "typeE8":
        n = 8
    if n < 3:
        raise UnsupportedParams("n >= 3 required")
    base = _PAIRS[key][0]
    chain = [f"{base}{i}" for i in range(1, n)]
    if key == "singular":
        return Alphabet([*chain, *(Generator(f"x{i}", False) for i in range(1, n))])
    if key == "bp":
        return Alphabet(chain + [f"xi{i}" for i in range(1, n)])
    extra = {"typeB": ["t"], "typeD": ["r"], "typeE8": ["w"]}.get(key, [])
    return Alphabet(chain + extra)


def reduced_alphabet(family: str) -> Alphabet:
    key = pair_key(family)
    names = _PAIRS[key][1]
    return Alphabet(Generator(g, not g.startswith("x") or g.startswith("xi")) for g in names)


def reduced_to_canonical(family: str, n: int) -> GeneratorMap:
    """``s1 -> s1``, ``s -> s1 s2 ... s{n-1}``, other reduced generators to
    themselves (``x1``, ``xi1``, ``t``, ``r``, ``w``)."""
    key = pair_key(family)
    if key == "typeE8":
        n = 8
    src, dst = reduced_alphabet(key), canonical_alphabet(key, n)
    base = _PAIRS[key][0]
    images = {}
    for g in src.names:
        if g == base:
            images[g] = Word(dst, tuple((f"{base}{i}", 1) for i in range(1, n)))
        else:
            images[g] = dst.gen(g)
    return GeneratorMap(src, dst, images)


def canonical_to_reduced(family: str, n: int) -> GeneratorMap:
    """``g_{i+1} -> s^i g_1 s^-i`` for each indexed series ``g``; extra
    generators to themselves."""
    key = pair_key(family)
    if key == "typeE8":
        n = 8
    src, dst = canonical_alphabet(key, n), reduced_alphabet(key)
    base = _PAIRS[key][0]
    series = [base] + _PAIRS[key][2]
    images = {}
    for g in src.names:
        head = g.rstrip("0123456789")
        idx = g[len(head):]
        if head in series and idx:
            i = int(idx) - 1
            letters = ((base, i), (f"{head}1", 1), (base, -i)) if i else ((f"{head}1", 1),)
            images[g] = free_reduce(Word(dst, letters))
        else:
            images[g] = dst.gen(g)
    return GeneratorMap(src, dst, images)


def bkl_expansion(t: int, s: int, n: int) -> Word:
    """Band generator ``a_{ts} = (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1)``."""
    if not 1 <= s < t <= n:
        raise IndexError(f"band generator a_{t}{s} out of range for n={n}")
    alpha = canonical_alphabet("artin", n)
    up = [(f"s{j}", 1) for j in range(t - 1, s, -1)]
    down = [(f"s{j}", -1) for j in range(s + 1, t)]
    return Word(alpha, tuple(up + [(f"s{s}", 1)] + down))


def bkl_to_canonical(n: int) -> GeneratorMap:
    src = catalog_build("bkl", n=n).alphabet
    dst = canonical_alphabet("artin", n)
    images = {band_name(t, s): bkl_expansion(t, s, n) for t in range(2, n + 1) for s in range(1, t)}
    return GeneratorMap(src, dst, images)


def push_relation(rel: tuple[Word, Word], m: GeneratorMap) -> tuple[Word, Word]:
    lhs, rhs = rel
    return substitute(lhs, m), substitute(rhs, m)
