"""
Presentations and the line-oriented ``.pres`` format.

Format (``#`` starts a comment)::

    presentation <name>
    kind group | kind monoid
    gen <name> [noninv]
    ...
    rel <word> = <word>        # empty right side means the identity
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterable

from .words import Alphabet, BraidkitError, Generator, MalformedWord, Word, invert

KINDS = ("group", "monoid")


class MonoidPresentation(BraidkitError, ValueError):
    """Raised by group-only algorithms when handed a monoid presentation."""


@dataclasses.dataclass(frozen=True)
class Diagnostic:
    severity: str  # "warn" | "error"
    message: str
    line: int = 0
    column: int = 0

    def __str__(self):
        loc = f"{self.line}:{self.column}: " if self.line else ""
        return f"{loc}{self.severity}: {self.message}"


class Diagnostics(list):
    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self if d.severity == "error"]

    @property
    def warnings(self) -> list[Diagnostic]:
        return [d for d in self if d.severity == "warn"]

    @property
    def ok(self) -> bool:
        return not self.errors


class PresentationSyntaxError(BraidkitError, ValueError):
    def __init__(self, diagnostics: Diagnostics):
        self.diagnostics = diagnostics
        super().__init__("\n".join(str(d) for d in diagnostics.errors))


@dataclasses.dataclass(frozen=True)
class Presentation:
    name: str
    kind: str
    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...]
    params: dict = dataclasses.field(default_factory=dict, compare=False)

    @property
    def generators(self) -> tuple[str, ...]:
        return self.alphabet.names

    def relators(self) -> list[Word]:
        """Relations as words ``lhs * rhs^-1`` (groups only)."""
        if self.kind != "group" or not self.alphabet.is_group:
            raise MonoidPresentation(f"{self.name} is not a group presentation")
        return [lhs * invert(rhs) for lhs, rhs in self.relations]

    def word(self, text: str) -> Word:
        return Word.parse(self.alphabet, text)

    def with_relations(self, extra: Iterable[tuple[Word, Word]], name: str | None = None) -> "Presentation":
        return dataclasses.replace(
            self, name=name or self.name, relations=self.relations + tuple(extra)
        )

    def renamed(self, mapping: dict[str, str]) -> "Presentation":
        """Rename generators; names missing from ``mapping`` are kept."""
        alpha = Alphabet(Generator(mapping.get(g.name, g.name), g.invertible) for g in self.alphabet)

        def ren(w: Word) -> Word:
            return Word(alpha, tuple((mapping.get(n, n), k) for n, k in w.letters))

        rels = tuple((ren(a), ren(b)) for a, b in self.relations)
        return dataclasses.replace(self, alphabet=alpha, relations=rels)

    def __str__(self):
        return serialize(self)


def validate(p: Presentation) -> Diagnostics:
    diags = Diagnostics()
    if p.kind not in KINDS:
        diags.append(Diagnostic("error", f"unknown kind {p.kind!r}"))
    noninv = [g.name for g in p.alphabet if not g.invertible]
    if p.kind == "group" and noninv:
        diags.append(Diagnostic("error", f"group presentation has noninvertible generators {', '.join(noninv)}"))
    if p.kind == "monoid" and not noninv:
        diags.append(Diagnostic("warn", "kind should be group: every generator is invertible"))
    for i, (lhs, rhs) in enumerate(p.relations, 1):
        for side in (lhs, rhs):
            bad = False
            for name, k in side.letters:
                if name not in p.alphabet:
                    diags.append(Diagnostic("error", f"relation {i}: undeclared generator {name}"))
                    bad = True
                elif k < 0 and not p.alphabet.invertible(name):
                    diags.append(Diagnostic("error", f"relation {i}: inverse of noninvertible generator {name}"))
                    bad = True
            if not bad and not side.is_reduced():
                diags.append(Diagnostic("warn", f"relation {i}: side {side} is not freely reduced"))
    return diags


def serialize(p: Presentation) -> str:
    lines = [f"presentation {p.name}", f"kind {p.kind}"]
    for g in p.alphabet:
        lines.append(f"gen {g.name}" + ("" if g.invertible else " noninv"))
    for lhs, rhs in p.relations:
        lines.append(f"rel {lhs} = {rhs}".rstrip())
    return "\n".join(lines) + "\n"


_LETTER = re.compile(r"^([^\s^=]+)(?:\^(-?\d+))?$")


def _parse_word(text: str, offset: int, lineno: int, gens: dict[str, bool], diags: Diagnostics):
    """Parse one side of a relation; returns letters or None after recording errors."""
    letters = []
    ok = True
    for m in re.finditer(r"\S+", text):
        token, col = m.group(), offset + m.start() + 1
        lm = _LETTER.match(token)
        if lm is None or (lm.group(2) is not None and int(lm.group(2)) == 0):
            diags.append(Diagnostic("error", f"syntax error in letter {token!r}", lineno, col))
            ok = False
            continue
        name = lm.group(1)
        k = int(lm.group(2)) if lm.group(2) else 1
        if name not in gens:
            diags.append(Diagnostic("error", f"undeclared generator {name}", lineno, col))
            ok = False
        elif k < 0 and not gens[name]:
            diags.append(Diagnostic("error", f"inverse of noninvertible generator {name}", lineno, col))
            ok = False
        else:
            letters.append((name, k))
    return letters if ok else None


def parse_dsl(text: str) -> Presentation:
    """Parse a ``.pres`` document.

    Raises PresentationSyntaxError carrying line/column diagnostics.
    """
    diags = Diagnostics()
    name = kind = None
    gens: dict[str, bool] = {}
    raw_rels: list[tuple[list, list]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        col0 = line.index(head) + 1
        if name is None:
            if head != "presentation" or not rest or len(rest.split()) != 1:
                diags.append(Diagnostic("error", "expected 'presentation <name>'", lineno, col0))
                break
            name = rest
        elif kind is None:
            if head != "kind" or rest not in KINDS:
                diags.append(Diagnostic("error", "expected 'kind group' or 'kind monoid'", lineno, col0))
                break
            kind = rest
        elif head == "gen":
            parts = rest.split()
            if not parts or len(parts) > 2 or (len(parts) == 2 and parts[1] != "noninv"):
                diags.append(Diagnostic("error", "expected 'gen <name> [noninv]'", lineno, col0))
            elif raw_rels:
                diags.append(Diagnostic("error", "generators must be declared before relations", lineno, col0))
            elif "^" in parts[0] or "=" in parts[0]:
                diags.append(Diagnostic("error", f"invalid generator name {parts[0]!r}", lineno, col0))
            elif parts[0] in gens:
                diags.append(Diagnostic("error", f"duplicate generator {parts[0]}", lineno, col0))
            else:
                gens[parts[0]] = len(parts) == 1
        elif head == "rel":
            body_start = line.index("rel") + 3
            body = line[body_start:]
            if body.count("=") != 1:
                diags.append(Diagnostic("error", "expected 'rel <word> = <word>'", lineno, col0))
                continue
            eq = body.index("=")
            lhs = _parse_word(body[:eq], body_start, lineno, gens, diags)
            rhs = _parse_word(body[eq + 1:], body_start + eq + 1, lineno, gens, diags)
            if lhs is not None and rhs is not None:
                raw_rels.append((lhs, rhs))
        else:
            diags.append(Diagnostic("error", f"unknown directive {head!r}", lineno, col0))
    if not diags.errors:
        if name is None or kind is None:
            diags.append(Diagnostic("error", "missing 'presentation' or 'kind' header"))
        elif not gens:
            diags.append(Diagnostic("error", "no generators declared"))
    if diags.errors:
        raise PresentationSyntaxError(diags)
    alpha = Alphabet(Generator(g, inv) for g, inv in gens.items())
    try:
        rels = tuple((Word(alpha, tuple(a)), Word(alpha, tuple(b))) for a, b in raw_rels)
    except MalformedWord as exc:  # pragma: no cover - filtered above
        raise PresentationSyntaxError(Diagnostics([Diagnostic("error", str(exc))])) from exc
    return Presentation(name, kind, alpha, rels)


def load(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_dsl(fh.read())
