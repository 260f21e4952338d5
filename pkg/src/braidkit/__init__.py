"""Braid-type groups and monoids: presentations, normal forms, coset
enumeration, abelianization and verification of small-generator
presentations."""

__version__ = "0.1.0"

from .words import (  # noqa: E402
    Alphabet, BraidkitError, Generator, MalformedWord, NonInvertibleLetter, UnknownGenerator, Word,
    free_reduce, invert, substitute,
)
from .presentation import Presentation, PresentationSyntaxError, parse_dsl, serialize, validate  # noqa: E402
from .catalog import FAMILIES, catalog_build  # noqa: E402

__all__ = [
    "Alphabet", "BraidkitError", "Generator", "MalformedWord", "NonInvertibleLetter", "UnknownGenerator",
    "Word", "free_reduce", "invert", "substitute", "Presentation", "PresentationSyntaxError", "parse_dsl",
    "serialize", "validate", "FAMILIES", "catalog_build",
]
