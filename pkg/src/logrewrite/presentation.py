"""Group presentations, their monoid presentations and the initial logged
rewrite system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .orderings import OrderSpec, parse_letter_order
from .words import (
    Alphabet,
    GroupWord,
    MonoidWord,
    WordError,
    flip,
    mu,
    parse_group,
)
from .ysequences import EMPTY, POS, RelatorRef, YSequence, YTerm


class ParseError(WordError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[RelatorRef, ...]
    order: OrderSpec

    def relator(self, label: str) -> RelatorRef:
        for rho in self.relators:
            if rho.label == label:
                return rho
        raise WordError(f"unknown relator {label!r}")

    def relator_map(self) -> dict[str, RelatorRef]:
        return {rho.label: rho for rho in self.relators}


@dataclass(frozen=True)
class MonoidPresentation:
    """The associated monoid presentation: one relation per group relator
    plus the cancellation relations x+ x- for every signed letter."""

    alphabet: Alphabet
    relator_images: tuple[tuple[str, MonoidWord], ...]
    cancellation_pairs: tuple[MonoidWord, ...]


def monoid_presentation(p: Presentation) -> MonoidPresentation:
    images = tuple((rho.label, mu(rho.word)) for rho in p.relators)
    cancels = tuple(
        MonoidWord(p.alphabet, (c, flip(c))) for c in p.alphabet.letters()
    )
    return MonoidPresentation(p.alphabet, images, cancels)


def parse_presentation(
    text: str,
    *,
    order_override: Optional[str] = None,
    letter_order_override: Optional[str] = None,
) -> Presentation:
    """Parse the presentation file format.

    ::

        generators: a, b
        order: shortlex            # or: syllable
        letters: a+, a-, b+, b-    # optional letter order, least first
        relators:
          r1 = a^4
          r3 = a b a b^-1

    ``#`` starts a comment; relator words are whitespace separated with
    ``^k`` powers and are freely reduced on ingest.
    """
    alphabet: Optional[Alphabet] = None
    order_kind = "shortlex"
    letters_text: Optional[str] = None
    relator_items: list[tuple[str, str, int]] = []
    in_relators = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if sep and key in ("generators", "order", "letters", "relators"):
            in_relators = False
            if key == "generators":
                names = [n.strip() for n in value.split(",") if n.strip()]
                try:
                    alphabet = Alphabet(names)
                except WordError as exc:
                    raise ParseError(str(exc), lineno) from None
            elif key == "order":
                order_kind = value.strip().lower()
                if order_kind not in ("shortlex", "syllable"):
                    raise ParseError(f"unknown order {value.strip()!r}", lineno)
            elif key == "letters":
                letters_text = value.strip()
            else:
                in_relators = True
            continue
        if not in_relators:
            raise ParseError(f"unexpected line {line!r}", lineno)
        label, eq, word_text = line.partition("=")
        label = label.strip()
        if not eq or not label:
            raise ParseError(f"expected 'label = word', got {line!r}", lineno)
        if not word_text.strip():
            raise ParseError(f"relator {label!r} is empty", lineno)
        relator_items.append((label, word_text.strip(), lineno))

    if alphabet is None:
        raise ParseError("missing 'generators:' declaration", 1)
    if order_override:
        order_kind = order_override
    relators = []
    seen = set()
    for label, word_text, lineno in relator_items:
        if label in seen:
            raise ParseError(f"duplicate relator label {label!r}", lineno)
        seen.add(label)
        try:
            word = parse_group(alphabet, word_text)
        except WordError as exc:
            raise ParseError(str(exc), lineno) from None
        if word.is_identity():
            raise ParseError(f"relator {label!r} reduces to the empty word", lineno)
        relators.append(RelatorRef.make(label, word))

    letter_order: tuple[int, ...] = ()
    if letter_order_override is not None:
        letters_text = letter_order_override
    if letters_text:
        letter_order = parse_letter_order(alphabet, letters_text.split(","))
    order = OrderSpec(order_kind, alphabet, letter_order)
    return Presentation(alphabet, tuple(relators), order)


def initial_logged_rules(
    p: Presentation,
) -> list[tuple[MonoidWord, YSequence, MonoidWord]]:
    """The initial logged rules: one per relator plus one cancellation rule
    per signed letter (2|X| of them)."""
    empty = MonoidWord(p.alphabet)
    rules: list[tuple[MonoidWord, YSequence, MonoidWord]] = []
    for rho in p.relators:
        log = YSequence([YTerm(rho, POS, GroupWord(p.alphabet))])
        rules.append((mu(rho.word), log, empty))
    for c in p.alphabet.letters():
        rules.append((MonoidWord(p.alphabet, (c, flip(c))), EMPTY, empty))
    return rules
