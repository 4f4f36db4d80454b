"""Logged rewriting on two infinite groups.

The free abelian group on x, y completes under shortlex; its Cayley graph
is infinite, so identities are sampled one group element at a time.  The
trefoil knot group needs the syllable ordering to complete at all; its
critical-pair identities are all Peiffer-trivial.

Run with:  python3 demos/infinite_groups.py
"""

from pathlib import Path

from logrewrite import (
    complete_presentation,
    find_overlaps,
    identity_for,
    k1_for,
    parse_group,
    parse_presentation,
    render_monoid,
    render_ysequence,
    simplify,
)

HERE = Path(__file__).parent

print("== free abelian group < x, y ; xyx^-1y^-1 > ==")
abelian = parse_presentation((HERE / "abelian.pres").read_text())
system = complete_presentation(abelian).final_system
for rule in system.rules_by_id():
    print(f"  {render_monoid(rule.lhs):3s} -> {render_monoid(rule.rhs):5s}"
          f"  by  {render_ysequence(rule.log)}")

rho = abelian.relators[0]
print("\nsampled identities (all trivial, as commutators must be):")
for n, m in [(2, 1), (-1, 3), (3, -2)]:
    g = parse_group(abelian.alphabet, f"x^{n} y^{m}")
    iota = identity_for(system, g, rho)
    print(f"  [x^{n} y^{m}, r] simplifies to "
          f"{render_ysequence(simplify(iota))}")

print("\nsampled k1 values (m rule applications give m terms):")
for n, m in [(0, 2), (1, 3)]:
    g = parse_group(abelian.alphabet, f"x^{n} y^{m}")
    print(f"  k1[x^{n} y^{m}, x] = {render_ysequence(k1_for(system, g, 'x'))}")

print("\n== trefoil knot group < x, y ; x^3 y^-2 > ==")
trefoil = parse_presentation((HERE / "trefoil.pres").read_text())
system = complete_presentation(trefoil).final_system
for rule in system.rules_by_id():
    print(f"  {render_monoid(rule.lhs):4s} -> {render_monoid(rule.rhs):5s}"
          f"  by  {render_ysequence(rule.log)}")

words = sorted(
    {
        render_monoid(o.word(system))
        for o in find_overlaps(system)
        if o.rule_a != o.rule_b
    },
    key=lambda w: (len(w), w),
)
print(f"\nthe rules overlap on six words: {', '.join(words)}")
print("every critical pair resolves, certifying confluence.")
