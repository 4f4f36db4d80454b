"""Cayley graphs, the section sigma, the morphism k1, separation
identities and the simplification pipeline.

For a finite group with a complete logged rewrite system, the vertices of
the Cayley graph are the irreducible words (one per group element) and
every edge [g, x] carries a Y-sequence k1 with
``boundary(k1) = (sigma g) x (sigma(g x))^-1``.  Walking a relator around
a vertex and collecting the edge values yields an identity among the
relations; over all (vertex, relator) pairs these generate the module of
identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .presentation import Presentation
from .rewriting import (
    CompletionReport,
    Limits,
    LoggedRewriteSystem,
    complete_presentation,
    logged_reduce,
)
from .words import (
    GroupWord,
    MonoidWord,
    WordError,
    free_multiply,
    gen_index,
    inverse,
    mu,
    mu_inverse,
    sign_of,
)
from .ysequences import (
    NEG,
    RelatorRef,
    YSequence,
    YTerm,
    act,
    boundary_in,
    cancel_adjacent,
    invert,
    is_primary_identity,
    peiffer_closure,
    root_normalize,
)


class InfiniteGroupError(RuntimeError):
    """The vertex closure exceeded its cap; the group is (probably)
    infinite.  Use the sampled ``identity_for`` / ``k1_for`` API instead."""


@dataclass(frozen=True)
class Edge:
    """The edge [g, x] for a vertex g and a positive generator x."""

    source: MonoidWord
    label: int  # generator index
    target: MonoidWord
    k1: YSequence


class CayleyGraph:
    def __init__(self, sys: LoggedRewriteSystem, vertices, edges):
        self.sys = sys
        self.vertices: list[MonoidWord] = list(vertices)
        self.edges: dict[tuple[MonoidWord, int], Edge] = dict(edges)

    def edge(self, g: MonoidWord, gen: int) -> Edge:
        return self.edges[(g, gen)]

    def __len__(self) -> int:
        return len(self.vertices)


def compute_k1(
    sys: LoggedRewriteSystem, g: MonoidWord, gen: int, limits: Limits = Limits()
) -> YSequence:
    """The chosen value k1[g, x]: the empty sequence when (sigma g)x is
    already irreducible, else the simplified log of reducing
    ``(sigma g) x (sigma(g x))^-1`` to the empty word."""
    alphabet = sys.presentation.alphabet
    step = MonoidWord(alphabet, g.letters + (2 * gen,))
    target, _ = logged_reduce(step, sys, limits)
    if target == step:
        return YSequence()
    full = mu(
        free_multiply(mu_inverse(step), inverse(mu_inverse(target)))
    )
    reduced, log = logged_reduce(full, sys, limits)
    if len(reduced):  # pragma: no cover - target is the normal form of step
        raise WordError(f"k1 word {full!r} did not reduce to the identity")
    # cancellation, conjugator absorption and term-wise root absorption
    # only -- no exchange-rule search, so chosen values stay close to the
    # raw reduction logs
    chosen = log
    while True:
        normalized = root_normalize(peiffer_closure(chosen, use_root_moves=False))
        if normalized == chosen:
            return chosen
        chosen = normalized


def build_cayley_graph(
    sys: LoggedRewriteSystem,
    vertex_cap: int = 10_000,
    limits: Limits = Limits(),
) -> CayleyGraph:
    """Breadth-first closure from the identity under right multiplication
    by the positive generators, with chosen k1 on every edge."""
    if not sys.complete:
        raise WordError("Cayley graph construction requires a complete system")
    alphabet = sys.presentation.alphabet
    origin = MonoidWord(alphabet)
    vertices = [origin]
    index = {origin}
    edges: dict[tuple[MonoidWord, int], Edge] = {}
    targets: dict[tuple[MonoidWord, int], MonoidWord] = {}
    frontier = [origin]
    while frontier:
        next_frontier = []
        for g in frontier:
            for gen in range(len(alphabet)):
                step = MonoidWord(alphabet, g.letters + (2 * gen,))
                target, _ = logged_reduce(step, sys, limits)
                if target not in index:
                    if len(vertices) >= vertex_cap:
                        raise InfiniteGroupError(
                            f"vertex cap {vertex_cap} exceeded; the group may be "
                            "infinite -- use identity_for/k1_for to sample"
                        )
                    index.add(target)
                    vertices.append(target)
                    next_frontier.append(target)
                targets[(g, gen)] = target
        frontier = next_frontier
    for (g, gen), target in targets.items():
        edges[(g, gen)] = Edge(g, gen, target, compute_k1(sys, g, gen, limits))
    return CayleyGraph(sys, vertices, edges)


def relator_cycle_edges(
    g: MonoidWord, rho: RelatorRef, graph: CayleyGraph
) -> list[tuple[Edge, int]]:
    """The relator cycle based at g, edge by edge.

    A positive letter contributes the forward edge at the current vertex;
    a negative letter moves against the arrow of the edge that lands on
    the current vertex, contributing it reversed (direction -1).
    """
    sys = graph.sys
    current = g
    out: list[tuple[Edge, int]] = []
    for c in mu(rho.word):
        gen = gen_index(c)
        if sign_of(c) > 0:
            e = graph.edge(current, gen)
            out.append((e, 1))
            current = e.target
        else:
            back = MonoidWord(current.alphabet, current.letters + (c,))
            source, _ = logged_reduce(back, sys)
            e = graph.edge(source, gen)
            if e.target != current:  # pragma: no cover - N is a function
                raise WordError("reverse edge does not land on the current vertex")
            out.append((e, -1))
            current = source
    if current != g:  # pragma: no cover - relators map to the identity
        raise WordError(f"relator cycle for {rho!r} did not close at {g!r}")
    return out


def separation_identity(
    g: MonoidWord, rho: RelatorRef, graph: CayleyGraph
) -> YSequence:
    """The identity of the relator cycle [g, rho]:
    ``(rho^-) . (k1 of the cycle)^{sigma g}``, adjacent inverse pairs
    cancelled.  Always boundary-trivial."""
    alphabet = g.alphabet
    cycle = YSequence()
    for e, direction in relator_cycle_edges(g, rho, graph):
        cycle = cycle.concat(e.k1 if direction > 0 else invert(e.k1))
    head = YSequence([YTerm(rho, NEG, GroupWord(alphabet))])
    iota = cancel_adjacent(head.concat(act(cycle, mu_inverse(g))))
    if not boundary_in(iota, alphabet).is_identity():  # pragma: no cover
        raise WordError(f"cycle identity for [{g!r}, {rho!r}] has a boundary")
    return iota


# -- the simplification pipeline ---------------------------------------------

KEPT = "kept"
TRIVIAL = "trivial"
DUPLICATE = "duplicate"
INVERSE_DUP = "inverse-dup"
CONJUGATE_DUP = "conjugate-dup"
PRIMARY = "primary"


@dataclass
class IdentityRecord:
    vertex: MonoidWord
    relator: RelatorRef
    sequence: YSequence  # as produced by separation_identity
    status: str = KEPT
    reduced: YSequence = field(default=None)  # Peiffer-short form, set by B5


def _sort_key(r: IdentityRecord) -> tuple:
    return (
        len(r.sequence),
        tuple(t.relator.label for t in r.sequence),
        len(r.vertex),
        r.vertex.letters,
    )


def simplify_identity_list(
    records: list[IdentityRecord], nf, graph: CayleyGraph
) -> list[IdentityRecord]:
    """Sort by (length, relator labels) and discard the redundant records.

    A record is dropped when its sequence is empty, satisfies the primary
    identity property, or matches an earlier kept record exactly, as an
    inverse, or as a conjugate by a group element.  Only adjacent inverse
    pairs are cancelled here -- no exchange-rule search -- so the kept
    forms are exactly what the relator cycles produced.
    """
    alphabet = graph.sys.presentation.alphabet
    ordered = sorted(records, key=_sort_key)
    kept_forms: list[YSequence] = []
    sigma_images = [mu_inverse(v) for v in graph.vertices]
    for rec in ordered:
        seq = rec.sequence
        rec.reduced = seq
        if seq.is_empty():
            rec.status = TRIVIAL
            continue
        try:
            primary = is_primary_identity(seq, nf, alphabet)
        except WordError:
            primary = False
        if primary:
            rec.status = PRIMARY
            continue
        if seq in kept_forms:
            rec.status = DUPLICATE
            continue
        inverted = cancel_adjacent(invert(seq))
        if inverted in kept_forms:
            rec.status = INVERSE_DUP
            continue
        conjugate = False
        for sigma in sigma_images:
            if sigma.is_identity():
                continue
            for candidate in (seq, inverted):
                moved = cancel_adjacent(act(candidate, sigma))
                if moved in kept_forms:
                    conjugate = True
                    break
            if conjugate:
                break
        if conjugate:
            rec.status = CONJUGATE_DUP
            continue
        rec.status = KEPT
        kept_forms.append(seq)
    return ordered


@dataclass
class PipelineResult:
    report: CompletionReport
    graph: CayleyGraph
    records: list[IdentityRecord]

    @property
    def kept(self) -> list[IdentityRecord]:
        return [r for r in self.records if r.status == KEPT]


def identities_pipeline(
    p: Presentation,
    limits: Limits = Limits(),
    vertex_cap: int = 10_000,
) -> PipelineResult:
    """Completion, Cayley graph, one identity per (vertex, relator) pair,
    then the discard pipeline."""
    report = complete_presentation(p, limits)
    if not report.final_system.complete:
        raise WordError("completion did not terminate; adjust the ordering or limits")
    sys = report.final_system
    graph = build_cayley_graph(sys, vertex_cap, limits)
    records = [
        IdentityRecord(g, rho, separation_identity(g, rho, graph))
        for g in graph.vertices
        for rho in p.relators
    ]
    from .rewriting import normal_form_fn

    records = simplify_identity_list(records, normal_form_fn(sys), graph)
    return PipelineResult(report, graph, records)


# -- sampled API for infinite groups -----------------------------------------


def identity_for(
    sys: LoggedRewriteSystem,
    g: GroupWord,
    rho: RelatorRef,
    limits: Limits = Limits(),
) -> YSequence:
    """A single separation identity for a user-supplied group element,
    without building the (possibly infinite) Cayley graph."""
    n, _ = logged_reduce(mu(g), sys, limits)
    sigma = mu_inverse(n)
    word = mu(free_multiply(free_multiply(sigma, rho.word), inverse(sigma)))
    reduced, log = logged_reduce(word, sys, limits)
    if len(reduced):  # pragma: no cover - conjugates of relators are trivial
        raise WordError(f"conjugated relator {word!r} did not reduce to the identity")
    head = YSequence([YTerm(rho, NEG, inverse(sigma))])
    return cancel_adjacent(head.concat(log))


def k1_for(
    sys: LoggedRewriteSystem,
    g: GroupWord,
    gen_name: str,
    limits: Limits = Limits(),
) -> YSequence:
    """The sampled edge value k1[g, x] for a user-supplied group element."""
    n, _ = logged_reduce(mu(g), sys, limits)
    gen = sys.presentation.alphabet.index(gen_name)
    return compute_k1(sys, n, gen, limits)
