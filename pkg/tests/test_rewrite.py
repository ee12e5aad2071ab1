import pytest
from hypothesis import given, assume, settings
from hypothesis.strategies import data, sampled_from
from liftmod import NoMatch, ScriptError, parse
from liftmod.homology import evalPsi
from liftmod.rewrite import (RULES, RewriteRule, FORWARD, BACKWARD, Step, matches, rewrite,
    parseScript, loadScript, replay)

from .strategies import words


class TestRules:
    def test_rule_set(self):
        assert set(RULES) == {"comm-ac", "braid-ab", "braid-bc", "braid-conj-ab", "braid-conj-bc"}

    def test_rules_checked_at_construction(self):
        with pytest.raises(ValueError):
            RewriteRule("bogus", parse("a b"), parse("b a"))
        with pytest.raises(ValueError):
            RewriteRule("involution", parse("a i"), parse("i a"))


class TestRewrite:
    def test_examples(self):
        assert rewrite("a b a", "braid-ab", 0) == parse("b a b")
        assert rewrite("a c", "comm-ac", 0) == parse("c a")
        assert rewrite("b c b^-1", "braid-conj-bc", 0, FORWARD) == parse("c^-1 b c")
        assert rewrite("c^-1 b c", "braid-conj-bc", 0, BACKWARD) == parse("b c b^-1")

    def test_matches_inside_runs(self):
        assert rewrite("a^2 c", "comm-ac", 1) == parse("a c a")

    def test_result_is_reduced(self):
        assert rewrite("c^-1 a c", "comm-ac", 1) == parse("a")

    def test_no_match(self):
        with pytest.raises(NoMatch):
            rewrite("a b a", "braid-ab", 1)
        with pytest.raises(NoMatch):
            rewrite("a b a", "braid-ab", -1)
        with pytest.raises(NoMatch):
            rewrite("a i", "comm-ac", 0)

    def test_unknown_rule(self):
        with pytest.raises(ValueError):
            rewrite("a b", "swap", 0)
        with pytest.raises(ValueError):
            rewrite("a c", "comm-ac", 0, "sideways")

    @settings(max_examples=1000)
    @given(words("abc", max_size=8), words("abc", max_size=8), sampled_from(sorted(RULES)),
        sampled_from((FORWARD, BACKWARD)), data())
    def test_preserves_psi(self, prefix, suffix, rule, direction, d):
        w = prefix * RULES[rule].sides(direction)[0] * suffix
        positions = [p for p in range(len(w)) if matches(w, rule, p, direction)]
        assume(positions)
        p = d.draw(sampled_from(positions))
        assert evalPsi(rewrite(w, rule, p, direction)) == evalPsi(w)


class TestScripts:
    def test_parse(self):
        steps = parseScript("# comment\nbraid-bc 0 forward\n\ncomm-ac 3  # trailing\n")
        assert steps == [Step("braid-bc", 0, FORWARD), Step("comm-ac", 3, FORWARD)]

    @pytest.mark.parametrize("text, line", [
        ("braid-bc 0 forward\nbraid-xy 0 forward", 2),
        ("braid-bc zero forward", 1),
        ("braid-bc 0 sideways", 1),
        ("braid-bc", 1),
        ("braid-bc -2", 1),
    ])
    def test_errors(self, text, line):
        with pytest.raises(ScriptError) as e:
            parseScript(text)
        assert e.value.line == line

    def test_shipped_scripts(self):
        words = list(replay("(b c)^6", loadScript("chain-bc-c2b.txt")))
        assert words[3] == parse("(c b)^6")
        assert words[-1] == parse("(c^2 b)^4")
        assert list(replay("(c^2 b)^4", loadScript("chain-c2b-c3b.txt")))[-1] == parse("(c^3 b)^3")

    def test_replay_failure_names_step(self):
        with pytest.raises(NoMatch) as e:
            list(replay("(b c)^6", [Step("braid-bc", 0), Step("braid-ab", 0)]))
        assert str(e.value).startswith("step 2")
