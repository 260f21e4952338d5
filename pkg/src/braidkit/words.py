"""
Alphabets and signed words.

A word is stored run-length encoded: a tuple of ``(generator, exponent)``
syllables, so that ``s^-7`` costs one entry rather than seven. Words are
immutable and carry the alphabet they live over.

Text syntax: letters separated by whitespace, each letter is ``name`` or
``name^k`` with ``k`` a nonzero integer, e.g. ``"s1 s^2 s1 s^-2"``. The
empty string is the empty word.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Iterator, Sequence


class BraidkitError(Exception):
    """Base class for all errors raised by this package."""


class MalformedWord(BraidkitError, ValueError):
    pass


class NonInvertibleLetter(BraidkitError, ValueError):
    def __init__(self, generator: str):
        super().__init__(f"generator {generator} is not invertible")
        self.generator = generator


class UnknownGenerator(BraidkitError, KeyError):
    def __init__(self, generator: str, where: str = ""):
        msg = f"unknown generator {generator!r}" + (f" in {where}" if where else "")
        super().__init__(msg)
        self.generator = generator

    def __str__(self):
        return self.args[0]


_NAME_BAD = re.compile(r"[\s^]")
_LETTER = re.compile(r"^([^\s^]+)(?:\^(-?\d+))?$")


@dataclasses.dataclass(frozen=True)
class Generator:
    name: str
    invertible: bool = True


class Alphabet:
    """An ordered set of named generators, each flagged invertible or not."""

    __slots__ = ("generators", "_index")

    def __init__(self, generators: Iterable[Generator | str | tuple[str, bool]]):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = Generator(g)
            elif not isinstance(g, Generator):
                g = Generator(*g)
            gens.append(g)
        if not gens:
            raise ValueError("an alphabet needs at least one generator")
        index = {}
        for i, g in enumerate(gens):
            if not g.name or _NAME_BAD.search(g.name):
                raise ValueError(f"invalid generator name {g.name!r}")
            if g.name in index:
                raise ValueError(f"duplicate generator name {g.name!r}")
            index[g.name] = i
        self.generators: tuple[Generator, ...] = tuple(gens)
        self._index: dict[str, int] = index

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(name) from None

    def invertible(self, name: str) -> bool:
        return self.generators[self.index(name)].invertible

    @property
    def is_group(self) -> bool:
        return all(g.invertible for g in self.generators)

    def word(self, text: str | Sequence[tuple[str, int]] = ()) -> "Word":
        if isinstance(text, str):
            return Word.parse(self, text)
        return Word(self, tuple(text))

    def gen(self, name: str, exponent: int = 1) -> "Word":
        return Word(self, ((name, exponent),))

    @property
    def identity(self) -> "Word":
        return Word(self, ())

    def __contains__(self, name) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        parts = [g.name if g.invertible else f"{g.name}(noninv)" for g in self.generators]
        return f"Alphabet({', '.join(parts)})"


@dataclasses.dataclass(frozen=True)
class Word:
    """A word over an alphabet; ``letters`` is a tuple of (name, exponent)."""

    alphabet: Alphabet
    letters: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if not (isinstance(letter, tuple) and len(letter) == 2):
                raise MalformedWord(f"bad letter {letter!r}")
            name, k = letter
            if name not in self.alphabet:
                raise MalformedWord(f"generator {name!r} is not in {self.alphabet!r}")
            if not isinstance(k, int) or k == 0:
                raise MalformedWord(f"letter {name} has invalid exponent {k!r}")
            if k < 0 and not self.alphabet.invertible(name):
                raise MalformedWord(f"inverse of noninvertible generator {name}")

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "Word":
        letters = []
        for token in text.split():
            m = _LETTER.match(token)
            if m is None:
                raise MalformedWord(f"cannot parse letter {token!r}")
            k = int(m.group(2)) if m.group(2) is not None else 1
            letters.append((m.group(1), k))
        return cls(alphabet, tuple(letters))

    def __str__(self) -> str:
        return " ".join(n if k == 1 else f"{n}^{k}" for n, k in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return sum(abs(k) for _, k in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise MalformedWord("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** (-k)
        return Word(self.alphabet, self.letters * k)

    def expanded(self) -> Iterator[tuple[str, int]]:
        """Yield single letters ``(name, +1 | -1)`` one at a time."""
        for name, k in self.letters:
            e = 1 if k > 0 else -1
            for _ in range(abs(k)):
                yield name, e

    def generators(self) -> set[str]:
        return {n for n, _ in self.letters}

    def is_reduced(self) -> bool:
        return all(a[0] != b[0] for a, b in zip(self.letters, self.letters[1:]))

    def exponent_sum(self, name: str) -> int:
        return sum(k for n, k in self.letters if n == name)


def _reduce_letters(letters: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for name, k in letters:
        if stack and stack[-1][0] == name:
            k += stack.pop()[1]
            if k == 0:
                continue
        stack.append((name, k))
    return tuple(stack)


def free_reduce(w: Word) -> Word:
    """Merge adjacent syllables on the same generator and drop trivial ones.

    Only inverse pairs can cancel, so noninvertible letters always survive.
    """
    return Word(w.alphabet, _reduce_letters(w.letters))


def invert(w: Word) -> Word:
    for name, _ in w.letters:
        if not w.alphabet.invertible(name):
            raise NonInvertibleLetter(name)
    return Word(w.alphabet, tuple((n, -k) for n, k in reversed(w.letters)))


def substitute(w: Word, m) -> Word:
    """Apply a generator map ``m`` (anything with ``source``, ``target`` and
    ``image(name)``) letter by letter; the result is freely reduced."""
    if m.source != w.alphabet:
        raise MalformedWord("word alphabet does not match the source of the map")
    out: list[tuple[str, int]] = []
    for name, k in w.letters:
        image = m.image(name)
        if k < 0:
            image = invert(image)
        out.extend(image.letters * abs(k))
    return Word(m.target, _reduce_letters(out))


def concat(words: Iterable[Word], alphabet: Alphabet) -> Word:
    letters: list[tuple[str, int]] = []
    for w in words:
        letters.extend(w.letters)
    return Word(alphabet, tuple(letters))
