import random

import pytest
from hypothesis import given, settings, strategies as st

from logrewrite.presentation import parse_presentation
from logrewrite.rewriting import (
    Limits,
    Resolved,
    complete_presentation,
    find_overlaps,
    initial_logged_system,
    logged_knuth_bendix,
    logged_reduce,
    normal_form_fn,
    process_overlap,
)
from logrewrite.words import (
    MonoidWord,
    WordError,
    free_multiply,
    mu_inverse,
    parse_monoid,
    render_monoid,
)
from logrewrite.ysequences import boundary_in, render_ysequence, simplify

from tests.conftest import ABELIAN_TEXT, Q8_TEXT, TREFOIL_TEXT


def words_over(alphabet, max_size=10):
    n = 2 * len(alphabet)
    return st.lists(
        st.integers(min_value=0, max_value=n - 1), max_size=max_size
    ).map(lambda ls: MonoidWord(alphabet, ls))


def check_logging_invariant(word, system, rightmost=False):
    """w = (boundary of the log) . (normal form) in the free group."""
    nf, log = logged_reduce(word, system, rightmost=rightmost)
    assert mu_inverse(word) == free_multiply(
        boundary_in(log, word.alphabet), mu_inverse(nf)
    )
    return nf, log


class TestInitialSystem:
    def test_q8_counts_and_invariant(self, q8):
        sys = initial_logged_system(q8)
        assert len(sys.rules) == 8  # 4 relators + 4 cancellation rules
        assert all(r.holds() for r in sys.rules)
        assert [r.id for r in sys.rules_by_id()] == list(range(1, 9))

    def test_not_complete(self, q8):
        sys = initial_logged_system(q8)
        assert not sys.complete
        with pytest.raises(WordError):
            normal_form_fn(sys)


class TestLoggedReduce:
    def test_relator_reduces_to_identity(self, q8, q8_system):
        w = parse_monoid(q8.alphabet, "bbbb")
        nf, log = check_logging_invariant(w, q8_system)
        assert nf.letters == ()
        assert not log.is_empty()

    def test_irreducible_word_logs_nothing(self, q8, q8_system):
        w = parse_monoid(q8.alphabet, "ab")
        nf, log = logged_reduce(w, q8_system)
        assert nf == w and log.is_empty()

    def test_abba(self, q8, q8_system):
        w = parse_monoid(q8.alphabet, "abba")
        nf, log = check_logging_invariant(w, q8_system)
        assert nf.letters == ()

    @given(st.data())
    def test_logging_invariant_random(self, q8, q8_system, data):
        w = data.draw(words_over(q8.alphabet))
        check_logging_invariant(w, q8_system)

    @given(st.data())
    def test_leftmost_rightmost_confluent(self, q8, q8_system, data):
        w = data.draw(words_over(q8.alphabet))
        left, _ = logged_reduce(w, q8_system)
        right, _ = logged_reduce(w, q8_system, rightmost=True)
        assert left == right

    def test_budget(self, q8, q8_system):
        from logrewrite.rewriting import BudgetError

        w = parse_monoid(q8.alphabet, "bbbb")
        with pytest.raises(BudgetError):
            logged_reduce(w, q8_system, Limits(max_steps=1))


class TestNormalFormFn:
    def test_idempotent_and_counts(self, q8, q8_system):
        nf = normal_form_fn(q8_system)
        seen = set()
        rng = random.Random(7)
        for _ in range(200):
            w = MonoidWord(
                q8.alphabet, [rng.randrange(4) for _ in range(rng.randrange(9))]
            )
            n = nf(w)
            assert nf(n) == n
            seen.add(n)
        assert len(seen) == 8  # the group order


class TestOverlaps:
    def test_trefoil_distinct_pair_overlap_words(self, trefoil_system):
        words = {
            render_monoid(o.word(trefoil_system))
            for o in find_overlaps(trefoil_system)
            if o.rule_a != o.rule_b
        }
        assert words == {"yYy", "YyY", "yYx", "Yyyx", "Yxxx", "yyxxx"}

    def test_trefoil_displayed_resolved_identity(self, trefoil_system):
        for o in find_overlaps(trefoil_system):
            if render_monoid(o.word(trefoil_system)) == "Yyyx":
                res = process_overlap(o, trefoil_system)
                assert isinstance(res, Resolved)
                assert (
                    render_ysequence(res.identity)
                    == "(r^-)^{y} (r^+)^{x^-1 y} (r^-)^{x^-1 y} (r^+)^{y}"
                )
                return
        pytest.fail("overlap word Yyyx not found")

    def test_complete_system_overlaps_all_resolve(self, q8_system):
        for o in find_overlaps(q8_system):
            res = process_overlap(o, q8_system)
            assert isinstance(res, Resolved)
            assert boundary_in(
                res.identity, q8_system.presentation.alphabet
            ).is_identity()


class TestCompletion:
    def test_q8_sixteen_rules(self, q8_report):
        sys = q8_report.final_system
        assert sys.complete
        assert len(sys.rules) == 16
        assert all(r.holds() for r in sys.rules)

    def test_q8_interreduced(self, q8_system):
        # no rule's lhs is reducible by the other rules
        for rule in q8_system.rules:
            others = [r for r in q8_system.rules if r.id != rule.id]
            assert not any(
                r.lhs.letters == rule.lhs.letters[i : i + len(r.lhs)]
                for r in others
                for i in range(len(rule.lhs) - len(r.lhs) + 1)
            )

    def test_abelian_rules(self, abelian_system):
        pairs = {
            (render_monoid(r.lhs), render_monoid(r.rhs))
            for r in abelian_system.rules
        }
        assert pairs == {
            ("xX", "<id>"),
            ("Xx", "<id>"),
            ("yY", "<id>"),
            ("Yy", "<id>"),
            ("yx", "xy"),
            ("yX", "Xy"),
            ("YX", "XY"),
            ("Yx", "xY"),
        }
        assert all(r.holds() for r in abelian_system.rules)

    def test_trefoil_rules_exact(self, trefoil_system):
        rendered = {
            (
                render_monoid(r.lhs),
                render_ysequence(r.log),
                render_monoid(r.rhs),
            )
            for r in trefoil_system.rules
        }
        assert rendered == {
            ("yY", "<idY>", "<id>"),
            ("Yy", "<idY>", "<id>"),
            ("xxx", "(r^+)", "yy"),
            ("yyx", "(r^-) (r^+)^{x^-1}", "xyy"),
            ("Yx", "(r^-)^{x^-1 y} (r^+)^{y}", "yxYY"),
            ("X", "(r^-)^{x}", "xxYY"),
        }

    def test_harvested_identities_boundary_trivial(self, q8_report, q8):
        assert q8_report.identities
        for s in q8_report.identities:
            assert boundary_in(s, q8.alphabet).is_identity()

    def test_pass_budget_leaves_incomplete(self, q8):
        report = logged_knuth_bendix(
            initial_logged_system(q8), Limits(max_passes=0)
        )
        assert not report.final_system.complete

    def test_rule_budget_leaves_incomplete(self, trefoil):
        report = logged_knuth_bendix(
            initial_logged_system(trefoil), Limits(max_rules=6)
        )
        assert not report.final_system.complete

    def test_raw_logs_variant_still_completes(self, q8):
        report = complete_presentation(q8, raw_logs=True)
        sys = report.final_system
        assert sys.complete and len(sys.rules) == 16
        assert all(r.holds() for r in sys.rules)

    def test_deterministic(self, q8, q8_system):
        again = complete_presentation(q8).final_system
        assert [
            (render_monoid(r.lhs), render_ysequence(r.log), render_monoid(r.rhs))
            for r in again.rules_by_id()
        ] == [
            (render_monoid(r.lhs), render_ysequence(r.log), render_monoid(r.rhs))
            for r in q8_system.rules_by_id()
        ]


class TestAcrossSystems:
    @pytest.mark.parametrize("text", [ABELIAN_TEXT, TREFOIL_TEXT])
    def test_logging_invariant_sampled(self, text):
        p = parse_presentation(text)
        system = complete_presentation(p).final_system
        rng = random.Random(11)
        for _ in range(100):
            w = MonoidWord(
                p.alphabet, [rng.randrange(4) for _ in range(rng.randrange(8))]
            )
            check_logging_invariant(w, system)
