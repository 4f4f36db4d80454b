"""Y-sequences: formal products of conjugated relators.

A term ``(rho^e)^u`` is a relator ``rho``, a sign ``e`` and a conjugating
word ``u`` in the free group.  Sequences of such terms carry the logging
information of every rewrite, and sequences with trivial boundary are
identities among the relations.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .words import (
    Alphabet,
    GroupWord,
    MonoidWord,
    NEG,
    POS,
    WordError,
    free_multiply,
    inverse,
    mu,
    parse_group,
    power,
    render_group,
)

NormalForm = Callable[[MonoidWord], MonoidWord]


@dataclass(frozen=True)
class RelatorRef:
    """A labelled relator with its root decomposition.

    ``word`` is the relator image in F(X); ``root`` is the shortest prefix
    ``v`` with ``word == v^m`` and ``root_power`` that ``m``.
    """

    label: str
    word: GroupWord
    root: GroupWord
    root_power: int

    @staticmethod
    def make(label: str, word: GroupWord) -> "RelatorRef":
        if word.is_identity():
            raise WordError(f"relator {label!r} is the empty word")
        root, m = _root_of(word)
        return RelatorRef(label, word, root, m)

    def __repr__(self) -> str:
        return f"RelatorRef({self.label}={render_group(self.word)})"


def _root_of(word: GroupWord) -> tuple[GroupWord, int]:
    n = len(word)
    for k in range(1, n + 1):
        if n % k:
            continue
        prefix = word.letters[:k]
        if prefix * (n // k) == word.letters:
            return GroupWord(word.alphabet, prefix), n // k
    raise AssertionError("unreachable: the word is its own root")


@dataclass(frozen=True)
class YTerm:
    relator: RelatorRef
    sign: int  # POS or NEG
    conjugator: GroupWord

    def inverted(self) -> "YTerm":
        return YTerm(self.relator, -self.sign, self.conjugator)

    def boundary(self) -> GroupWord:
        cached = _BOUNDARY_CACHE.get(self)
        if cached is None:
            w = self.relator.word if self.sign == POS else inverse(self.relator.word)
            u = self.conjugator
            cached = free_multiply(free_multiply(inverse(u), w), u)
            _BOUNDARY_CACHE[self] = cached
        return cached


_BOUNDARY_CACHE: dict = {}


class YSequence:
    """An element of the free monoid on the conjugated relators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[YTerm] = ()):
        self.terms = tuple(terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, YSequence) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"YSequence({render_ysequence(self)!r})"

    def is_empty(self) -> bool:
        return not self.terms

    def concat(self, other: "YSequence") -> "YSequence":
        return YSequence(self.terms + other.terms)


EMPTY = YSequence()


def boundary(s: YSequence) -> GroupWord:
    """The image in F(X): the product of the conjugated relator words."""
    if not s.terms:
        raise WordError("boundary of the empty sequence needs an alphabet; "
                        "use boundary_in(s, alphabet)")
    out = GroupWord(s.terms[0].relator.word.alphabet)
    for t in s.terms:
        out = free_multiply(out, t.boundary())
    return out


def boundary_in(s: YSequence, alphabet: Alphabet) -> GroupWord:
    if s.is_empty():
        return GroupWord(alphabet)
    return boundary(s)


def boundary_monoid(s: YSequence, alphabet: Alphabet) -> MonoidWord:
    """The boundary pushed into the monoid on the signed alphabet."""
    return mu(boundary_in(s, alphabet))


def act(s: YSequence, v: GroupWord) -> YSequence:
    """Right action of F(X): append ``v`` to every conjugator."""
    if v.is_identity() or s.is_empty():
        return s
    return YSequence(
        YTerm(t.relator, t.sign, free_multiply(t.conjugator, v)) for t in s.terms
    )


def invert(s: YSequence) -> YSequence:
    """Formal inverse: reverse the terms and flip each sign."""
    return YSequence(t.inverted() for t in reversed(s.terms))


def root_identity(rho: RelatorRef) -> YSequence:
    """The root module identity (rho^+)^v (rho^-); empty when the relator
    equals its own root."""
    if rho.root_power == 1:
        return EMPTY
    return YSequence(
        [YTerm(rho, POS, rho.root), YTerm(rho, NEG, GroupWord(rho.word.alphabet))]
    )


# -- simplification ----------------------------------------------------------


def cancel_adjacent(s: YSequence) -> YSequence:
    """Remove adjacent exact inverse pairs until none remain.

    This is the only move used on identity records: it never mixes in root
    identities, so what survives is what the raw relator cycles produced.
    """
    stack: list[YTerm] = []
    for t in s.terms:
        if (
            stack
            and stack[-1].relator == t.relator
            and stack[-1].sign == -t.sign
            and stack[-1].conjugator == t.conjugator
        ):
            stack.pop()
        else:
            stack.append(t)
    return YSequence(stack)


def _strip_conjugator(t: YTerm, use_root: bool) -> YTerm:
    """Absorb leading relator (or root) powers of the conjugator.

    ``(rho^e)^{w v} -> (rho^e)^{v}`` is Peiffer-neutral when ``w`` is the
    relator word; with ``use_root`` the root of the relator is absorbed as
    well, which changes the class only by a root module identity.
    """
    cached = _STRIP_CACHE.get((t, use_root))
    if cached is not None:
        return cached
    heads = [t.relator.word, inverse(t.relator.word)]
    if use_root and t.relator.root_power > 1:
        heads += [t.relator.root, inverse(t.relator.root)]
    u = t.conjugator
    changed = True
    while changed and len(u):
        changed = False
        for head in heads:
            candidate = free_multiply(inverse(head), u)
            if len(candidate) < len(u):
                u = candidate
                changed = True
                break
    out = t if u == t.conjugator else YTerm(t.relator, t.sign, u)
    _STRIP_CACHE[(t, use_root)] = out
    return out


_STRIP_CACHE: dict = {}


def _closure(terms: tuple, use_root: bool) -> tuple:
    """Strip conjugators, cancel adjacent pairs, and collapse sandwiches
    ``y^- Z y^+ -> Z^{delta y}`` until nothing applies."""
    terms = tuple(_strip_conjugator(t, use_root) for t in terms)
    while True:
        terms = tuple(cancel_adjacent(YSequence(terms)).terms)
        reduced = _sandwich_once(terms, use_root)
        if reduced is None:
            return terms
        terms = reduced


def _sandwich_once(terms: tuple, use_root: bool):
    for i in range(len(terms)):
        ti = terms[i]
        for j in range(i + 1, len(terms)):
            tj = terms[j]
            if (
                ti.relator == tj.relator
                and ti.sign == -tj.sign
                and ti.conjugator == tj.conjugator
            ):
                shift = inverse(ti.boundary())
                middle = [
                    _strip_conjugator(
                        YTerm(t.relator, t.sign, free_multiply(t.conjugator, shift)),
                        use_root,
                    )
                    for t in terms[i + 1 : j]
                ]
                return terms[:i] + tuple(middle) + terms[j + 1 :]
    return None


def _transpositions(terms: tuple, use_root: bool, max_conj: int):
    """Neighbours under the Peiffer exchange rule, both directions."""
    for i in range(len(terms) - 1):
        a, b = terms[i], terms[i + 1]
        # move a rightwards: (a b) -> (b a^{delta b})
        moved = YTerm(a.relator, a.sign, free_multiply(a.conjugator, b.boundary()))
        moved = _strip_conjugator(moved, use_root)
        if len(moved.conjugator) <= max_conj:
            yield terms[:i] + (b, moved) + terms[i + 2 :]
        # move b leftwards: (a b) -> (b^{(delta a)^-1} a)
        moved = YTerm(
            b.relator, b.sign, free_multiply(b.conjugator, inverse(a.boundary()))
        )
        moved = _strip_conjugator(moved, use_root)
        if len(moved.conjugator) <= max_conj:
            yield terms[:i] + (moved, a) + terms[i + 2 :]


def _seq_key(terms: tuple) -> tuple:
    return tuple(
        (t.relator.label, t.sign, t.conjugator.letters) for t in terms
    )


def _weight(terms: tuple) -> tuple[int, int]:
    return len(terms), sum(len(t.conjugator) for t in terms)


def root_normalize(s: YSequence) -> YSequence:
    """Term-wise absorption of relator-root powers from the conjugators,
    with adjacent cancellation, to a fixpoint.

    Changes the represented class only by root module identities; no
    reordering of terms is performed.
    """
    while True:
        stripped = cancel_adjacent(
            YSequence(tuple(_strip_conjugator(t, True) for t in s.terms))
        )
        if stripped == s:
            return s
        s = stripped


def peiffer_closure(s: YSequence, *, use_root_moves: bool = True) -> YSequence:
    """Cheap one-shot normalisation: conjugator absorption, adjacent
    cancellation and sandwich collapse, without the exchange-rule search.

    Much faster than :func:`simplify`; used to keep logs short during
    completion.
    """
    if s.is_empty():
        return s
    return YSequence(_closure(s.terms, use_root_moves))


def simplify(
    s: YSequence,
    nf: Optional[NormalForm] = None,
    *,
    use_root_moves: bool = True,
    max_nodes: int = 3000,
    max_terms: int = 24,
    max_stale: int = 400,
) -> YSequence:
    """Search for a short Peiffer-equivalent representative.

    Best-first search over cancellation, conjugator absorption and the
    exchange rule; terminates on the empty sequence, when the node budget
    runs out, or after ``max_stale`` expansions without improvement,
    returning the lightest sequence seen.  With ``use_root_moves`` the
    result may additionally differ from the input by root module
    identities, which is a valid alternative log.
    """
    del nf  # conjugator equivalence is decided by the strip moves alone
    if s.is_empty():
        return s
    if len(s) > max_terms:
        return YSequence(_closure(s.terms, use_root_moves))

    start = _closure(s.terms, use_root_moves)
    if not start:
        return EMPTY
    max_conj = max(len(t.conjugator) for t in start) + 2 * max(
        len(t.relator.word) for t in start
    )

    counter = itertools.count()
    heap = [(_weight(start), next(counter), start)]
    seen = {_seq_key(start)}
    best = start
    best_w = _weight(start)
    expanded = 0
    stale = 0
    while heap and expanded < max_nodes and stale < max_stale:
        w, _, terms = heapq.heappop(heap)
        if w < best_w:
            best, best_w = terms, w
            stale = 0
        else:
            stale += 1
        if not terms:
            return EMPTY
        expanded += 1
        for nxt in _transpositions(terms, use_root_moves, max_conj):
            nxt = _closure(nxt, use_root_moves)
            key = _seq_key(nxt)
            if key in seen:
                continue
            seen.add(key)
            heapq.heappush(heap, (_weight(nxt), next(counter), nxt))
            if not nxt:
                return EMPTY
    return YSequence(best)


# -- the primary identity property -------------------------------------------


def is_primary_identity(
    s: YSequence, nf: NormalForm, alphabet: Alphabet, *, max_terms: int = 20
) -> bool:
    """True when the terms pair off as inverse relator instances whose
    conjugator quotients lie in the normal closure of the relators.

    The quotient test is decided with the normal form function of a
    complete system for the same presentation.
    """
    if not boundary_in(s, alphabet).is_identity():
        raise WordError("primary identity test requires a boundary-trivial sequence")
    n = len(s)
    if n % 2:
        return False
    if n == 0:
        return True
    if n > max_terms:
        raise WordError(f"sequence too long for the pairing search ({n} terms)")

    terms = s.terms

    def compatible(i: int, j: int) -> bool:
        ti, tj = terms[i], terms[j]
        if ti.relator != tj.relator or ti.sign != -tj.sign:
            return False
        q = free_multiply(ti.conjugator, inverse(tj.conjugator))
        return len(nf(mu(q))) == 0

    def match(unused: frozenset) -> bool:
        if not unused:
            return True
        i = min(unused)
        rest = unused - {i}
        for j in rest:
            if compatible(i, j) and match(rest - {j}):
                return True
        return False

    return match(frozenset(range(n)))


# -- rendering and parsing ---------------------------------------------------
#
# `(r1^+)^{a^-1 b}` style; the empty sequence renders as `<idY>`.


def render_yterm(t: YTerm) -> str:
    sign = "+" if t.sign == POS else "-"
    head = f"({t.relator.label}^{sign})"
    if t.conjugator.is_identity():
        return head
    return f"{head}^{{{render_group(t.conjugator)}}}"


def render_ysequence(s: YSequence) -> str:
    if s.is_empty():
        return "<idY>"
    return " ".join(render_yterm(t) for t in s.terms)


def parse_ysequence(
    text: str, relators: dict[str, RelatorRef], alphabet: Alphabet
) -> YSequence:
    text = text.strip()
    if text in ("", "<idY>"):
        return EMPTY
    terms: list[YTerm] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] != "(":
            raise WordError(f"expected '(' at {text[pos:]!r}")
        close = text.index(")", pos)
        label, _, sign_text = text[pos + 1 : close].partition("^")
        if sign_text not in ("+", "-"):
            raise WordError(f"bad sign in term {text[pos:close + 1]!r}")
        if label not in relators:
            raise WordError(f"unknown relator {label!r}")
        conj = GroupWord(alphabet)
        pos = close + 1
        if text[pos : pos + 2] == "^{":
            end = text.index("}", pos)
            conj = parse_group(alphabet, text[pos + 2 : end])
            pos = end + 1
        terms.append(
            YTerm(relators[label], POS if sign_text == "+" else NEG, conj)
        )
    return YSequence(terms)


def conjugator_power(alphabet: Alphabet, base: str, n: int) -> GroupWord:
    """Convenience for fixtures: the reduced word ``base^n``."""
    return power(parse_group(alphabet, base), n)
