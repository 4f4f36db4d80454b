"""Logged rewrite systems, logged reduction and logged Knuth-Bendix
completion with identity harvesting.

Every rule (l, c, r) carries a Y-sequence certificate c with
``mu_inverse(l) = boundary(c) * mu_inverse(r)`` in the free group; logged
reduction threads these certificates so that any reduction w ->* I(w)
comes with an expression L(w) of w as a product of conjugated relators
times I(w).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Union

from .orderings import GT, LT, OrderSpec
from .presentation import Presentation, initial_logged_rules
from .words import (
    GroupWord,
    MonoidWord,
    WordError,
    free_multiply,
    inverse,
    mu,
    mu_inverse,
)
from .ysequences import (
    EMPTY,
    YSequence,
    act,
    boundary_in,
    invert,
    peiffer_closure,
    simplify,
)


class BudgetError(RuntimeError):
    """A reduction or completion limit was exceeded."""


@dataclass(frozen=True)
class Limits:
    max_rules: int = 10_000
    max_passes: int = 100
    max_word_len: int = 10_000
    max_steps: int = 100_000


@dataclass(frozen=True)
class LoggedRule:
    lhs: MonoidWord
    log: YSequence
    rhs: MonoidWord
    id: int
    origin: str = "initial"

    def holds(self) -> bool:
        """The defining identity l = (delta c) r in F(X)."""
        lhs = mu_inverse(self.lhs)
        rhs = free_multiply(
            boundary_in(self.log, self.lhs.alphabet), mu_inverse(self.rhs)
        )
        return lhs == rhs


class LoggedRewriteSystem:
    def __init__(
        self,
        presentation: Presentation,
        order: OrderSpec,
        rules: Iterable[LoggedRule],
        complete: bool = False,
    ):
        self.presentation = presentation
        self.order = order
        self.rules = list(rules)
        self.complete = complete
        self._rebuild_index()

    def _rebuild_index(self) -> None:
        # first-letter dispatch; rule lists stay sorted by id
        self._by_first: dict[int, list[LoggedRule]] = {}
        for rule in sorted(self.rules, key=lambda r: r.id):
            self._by_first.setdefault(rule.lhs.letters[0], []).append(rule)

    def rules_by_id(self) -> list[LoggedRule]:
        return sorted(self.rules, key=lambda r: r.id)

    def match_at(self, word: tuple, pos: int) -> Optional[LoggedRule]:
        """Lowest-id rule whose lhs occurs at ``pos``."""
        candidates = self._by_first.get(word[pos])
        if not candidates:
            return None
        best = None
        for rule in candidates:
            n = len(rule.lhs)
            if word[pos : pos + n] == rule.lhs.letters:
                if best is None or rule.id < best.id:
                    best = rule
        return best


def initial_logged_system(p: Presentation) -> LoggedRewriteSystem:
    rules = [
        LoggedRule(lhs, log, rhs, id=i, origin="initial")
        for i, (lhs, log, rhs) in enumerate(initial_logged_rules(p), start=1)
    ]
    return LoggedRewriteSystem(p, p.order, rules)


def logged_reduce(
    w: MonoidWord,
    sys: LoggedRewriteSystem,
    limits: Limits = Limits(),
    *,
    rightmost: bool = False,
) -> tuple[MonoidWord, YSequence]:
    """Reduce ``w`` to an irreducible word, recording the log.

    Deterministic: leftmost match, lowest rule id on ties (``rightmost``
    flips the scan direction; used by the confluence checks).
    """
    word = w.letters
    log_terms: list = []
    steps = 0
    while True:
        hit = None
        positions = range(len(word))
        if rightmost:
            positions = range(len(word) - 1, -1, -1)
        for pos in positions:
            rule = sys.match_at(word, pos)
            if rule is not None:
                hit = (pos, rule)
                break
        if hit is None:
            return MonoidWord(w.alphabet, word), YSequence(log_terms)
        steps += 1
        if steps > limits.max_steps:
            raise BudgetError(
                f"reduction budget exceeded on {MonoidWord(w.alphabet, word)!r}"
            )
        pos, rule = hit
        prefix = GroupWord(w.alphabet, word[:pos])
        contribution = act(rule.log, inverse(prefix))
        log_terms.extend(contribution.terms)
        word = word[:pos] + rule.rhs.letters + word[pos + len(rule.lhs) :]
        if len(word) > limits.max_word_len:
            raise BudgetError(
                f"word length budget exceeded while reducing {w!r}"
            )


def normal_form_fn(sys: LoggedRewriteSystem) -> Callable[[MonoidWord], MonoidWord]:
    """The normal form function of a complete system (log discarded)."""
    if not sys.complete:
        raise WordError("normal forms require a complete system")

    def nf(w: MonoidWord) -> MonoidWord:
        return logged_reduce(w, sys)[0]

    return nf


# -- overlaps and critical pairs ---------------------------------------------


@dataclass(frozen=True)
class OverlapDescriptor:
    """An occurrence u*l*v = l'*v' of two left-hand sides in one word.

    ``rule_a`` owns l' (the primed rule), ``rule_b`` owns l.  Type 1 means
    l is a subword of l' (v' empty); type 2 means a proper suffix of l'
    equals a proper prefix of l (v empty).
    """

    rule_a: int
    rule_b: int
    kind: str  # "type1" or "type2"
    u: MonoidWord
    v: MonoidWord
    vprime: MonoidWord

    def word(self, sys: LoggedRewriteSystem) -> MonoidWord:
        lhs = _rule(sys, self.rule_b).lhs
        return self.u.concat(lhs).concat(self.v)


def _rule(sys: LoggedRewriteSystem, rule_id: int) -> LoggedRule:
    for rule in sys.rules:
        if rule.id == rule_id:
            return rule
    raise WordError(f"no rule with id {rule_id}")


def find_overlaps(
    sys: LoggedRewriteSystem, frontier: Optional[set[int]] = None
) -> list[OverlapDescriptor]:
    """All type-1 and type-2 overlaps, each reported once.

    Self-overlaps of a rule with itself are included (proper ones only:
    the trivial identical occurrence is skipped).
    """
    out: list[OverlapDescriptor] = []
    seen: set = set()
    rules = sys.rules_by_id()
    empty = MonoidWord(sys.presentation.alphabet)
    for ra in rules:  # primed rule, owns l'
        for rb in rules:
            if frontier is not None and ra.id not in frontier and rb.id not in frontier:
                continue
            la, lb = ra.lhs.letters, rb.lhs.letters
            # type 1: lb occurs inside la
            if len(lb) <= len(la):
                for pos in range(len(la) - len(lb) + 1):
                    if la[pos : pos + len(lb)] != lb:
                        continue
                    if ra.id == rb.id and len(lb) == len(la):
                        continue  # a rule laid exactly on itself
                    desc = OverlapDescriptor(
                        ra.id,
                        rb.id,
                        "type1",
                        MonoidWord(sys.presentation.alphabet, la[:pos]),
                        MonoidWord(sys.presentation.alphabet, la[pos + len(lb) :]),
                        empty,
                    )
                    key = (desc.rule_a, desc.rule_b, desc.kind, desc.u.letters)
                    if key not in seen:
                        seen.add(key)
                        out.append(desc)
            # type 2: proper suffix of la equals proper prefix of lb
            for k in range(1, min(len(la), len(lb))):
                if la[len(la) - k :] == lb[:k]:
                    desc = OverlapDescriptor(
                        ra.id,
                        rb.id,
                        "type2",
                        MonoidWord(sys.presentation.alphabet, la[: len(la) - k]),
                        empty,
                        MonoidWord(sys.presentation.alphabet, lb[k:]),
                    )
                    key = (desc.rule_a, desc.rule_b, desc.kind, desc.u.letters)
                    if key not in seen:
                        seen.add(key)
                        out.append(desc)
    return out


@dataclass(frozen=True)
class Resolved:
    identity: YSequence


@dataclass(frozen=True)
class NewPair:
    zprime: MonoidWord
    log: YSequence
    z: MonoidWord


def process_overlap(
    o: OverlapDescriptor, sys: LoggedRewriteSystem, limits: Limits = Limits()
) -> Union[Resolved, NewPair]:
    """Reduce both descendants of the overlap word and compare.

    Returns the connecting Y-sequence either as a harvested identity (the
    pair resolves) or as the certificate of the new critical-pair rule,
    satisfying ``z' = boundary(log) * z`` in F(X).
    """
    ra = _rule(sys, o.rule_a)
    rb = _rule(sys, o.rule_b)
    z, d = logged_reduce(o.u.concat(rb.rhs).concat(o.v), sys, limits)
    zp, dp = logged_reduce(ra.rhs.concat(o.vprime), sys, limits)
    log = (
        invert(dp)
        .concat(invert(ra.log))
        .concat(act(rb.log, inverse(mu_inverse(o.u))))
        .concat(d)
    )
    if z == zp:
        return Resolved(identity=log)
    return NewPair(zprime=zp, log=log, z=z)


# -- completion --------------------------------------------------------------


@dataclass
class CompletionReport:
    final_system: LoggedRewriteSystem
    identities: list[YSequence] = field(default_factory=list)
    rules_formed: int = 0
    rules_removed: int = 0
    passes: int = 0


def logged_knuth_bendix(
    init: LoggedRewriteSystem,
    limits: Limits = Limits(),
    *,
    raw_logs: bool = False,
) -> CompletionReport:
    """Complete the system, harvesting an identity from every resolved
    critical pair.

    Each pass resolves every unprocessed overlap against a frozen snapshot
    of the system, adds the surviving critical-pair rules oriented by the
    system's ordering, then interreduces (redundant rules removed,
    right-hand sides normalised with log composition).  On success the
    final system is verified against every remaining overlap and marked
    complete.
    """
    sys = LoggedRewriteSystem(
        init.presentation, init.order, init.rules, complete=False
    )
    report = CompletionReport(final_system=sys)
    next_id = max((r.id for r in sys.rules), default=0) + 1
    processed: set = set()

    def overlap_key(o: OverlapDescriptor) -> tuple:
        return (o.rule_a, o.rule_b, o.kind, o.u.letters)

    while True:
        report.passes += 1
        if report.passes > limits.max_passes:
            return report  # complete stays False
        pending = [o for o in find_overlaps(sys) if overlap_key(o) not in processed]
        # overlaps of two logged (relator-derived) rules first, then the
        # ones involving free-cancellation rules; shorter words first
        by_id = {r.id: r for r in sys.rules}
        pending.sort(
            key=lambda o: (
                0
                if not (by_id[o.rule_a].log.is_empty() or by_id[o.rule_b].log.is_empty())
                else 1,
                len(o.word(sys)),
                o.rule_b,
                o.rule_a,
                len(o.u),
            )
        )
        snapshot = LoggedRewriteSystem(sys.presentation, sys.order, list(sys.rules))
        new_rules: list[LoggedRule] = []
        for o in pending:
            processed.add(overlap_key(o))
            result = process_overlap(o, snapshot, limits)
            if isinstance(result, Resolved):
                if not result.identity.is_empty():
                    report.identities.append(result.identity)
                continue
            cmp = sys.order.compare(result.z, result.zprime)
            if cmp == LT:
                lhs, log, rhs = result.zprime, result.log, result.z
            elif cmp == GT:
                lhs, log, rhs = result.z, invert(result.log), result.zprime
            else:  # pragma: no cover - z != z' guaranteed by process_overlap
                raise AssertionError("unordered critical pair")
            if not raw_logs:
                log = peiffer_closure(log)
            new_rules.append(
                LoggedRule(
                    lhs, log, rhs, id=next_id,
                    origin=f"critical-pair({o.rule_a},{o.rule_b})",
                )
            )
            next_id += 1
        sys.rules.extend(new_rules)
        sys._rebuild_index()
        report.rules_formed += len(new_rules)
        if len(sys.rules) > limits.max_rules:
            return report
        removed = _interreduce(sys, limits, raw_logs=raw_logs)
        report.rules_removed += removed
        if not new_rules and removed == 0:
            break

    # certification pass: every overlap of the final system must resolve
    for o in find_overlaps(sys):
        result = process_overlap(o, sys, limits)
        if isinstance(result, NewPair):  # pragma: no cover - loop converged
            return report
    sys.complete = True
    return report


def _interreduce(
    sys: LoggedRewriteSystem, limits: Limits, *, raw_logs: bool
) -> int:
    """Remove joinable redundant rules and normalise right-hand sides."""
    removed = 0
    changed = True
    while changed:
        changed = False
        # scan newest rules first so that of two equivalent rules the
        # earlier derivation is the one kept
        for rule in reversed(sys.rules_by_id()):
            others = LoggedRewriteSystem(
                sys.presentation,
                sys.order,
                [r for r in sys.rules if r.id != rule.id],
            )
            z1, _ = logged_reduce(rule.lhs, others, limits)
            if z1 != rule.lhs:
                z2, _ = logged_reduce(rule.rhs, others, limits)
                if z1 == z2:
                    sys.rules = others.rules
                    sys._rebuild_index()
                    removed += 1
                    changed = True
                    break
                continue  # unresolved pair; leave for the completion loop
            z2, d2 = logged_reduce(rule.rhs, others, limits)
            if z2 != rule.rhs:
                log = rule.log.concat(d2)
                if not raw_logs:
                    log = peiffer_closure(log)
                sys.rules = [r for r in sys.rules if r.id != rule.id]
                sys.rules.append(replace(rule, log=log, rhs=z2))
                sys._rebuild_index()
                changed = True
                break
    return removed


def complete_presentation(
    p: Presentation, limits: Limits = Limits(), *, raw_logs: bool = False
) -> CompletionReport:
    """Convenience: build the initial logged system and complete it."""
    return logged_knuth_bendix(initial_logged_system(p), limits, raw_logs=raw_logs)
