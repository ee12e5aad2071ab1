import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers
from liftmod import NotUnimodular, parse
from liftmod.matrix import Mat2
from liftmod.homology import evalPsi, blockForm
from liftmod.sl2 import SA, SB, Sl2Word, gcdSL2, sl2Decompose, sl2Embed, igcdex

from .strategies import sl2Words

big = integers(min_value=-10 ** 6, max_value=10 ** 6)


class TestGcd:
    @pytest.mark.parametrize("m, n, l, A", [
        (1, 0, 1, Mat2(0, 1, -1, 0)),
        (0, 5, 5, Mat2()),
        (6, 4, 2, Mat2(2, 1, -3, -1)),
        (0, 0, 0, Mat2()),
    ])
    def test_golden(self, m, n, l, A):
        assert gcdSL2(m, n) == (l, A)

    def test_negative_inputs(self):
        for m, n in [(-3, 0), (3, -6), (-4, -10), (0, -7)]:
            l, A = gcdSL2(m, n)
            assert l >= 0 and A.det() == 1 and A.vecmul((m, n)) == (0, l)

    def test_bezout_routine(self):
        x, y, l = igcdex(6, 4)
        assert 6 * x + 4 * y == l == 2

    @settings(max_examples=10000)
    @given(big, big)
    def test_fuzz(self, m, n):
        l, A = gcdSL2(m, n)
        assert A.det() == 1
        assert A.vecmul((m, n)) == (0, l)
        assert l >= 0
        if m or n: assert m % l == 0 and n % l == 0


class TestDecompose:
    def test_golden(self):
        assert sl2Decompose(Mat2()) == Sl2Word()
        assert sl2Decompose(Mat2(0, 1, -1, 1)) == Sl2Word([("SA", 1), ("SB", 1)])
        assert sl2Decompose(-Mat2()) == Sl2Word([("SA", 1), ("SB", 1), ("SA", 1)]) ** 2

    def test_minus_identity(self):
        assert (SA * SB * SA) ** 2 == -Mat2()

    def test_rejects_non_sl2(self):
        with pytest.raises(NotUnimodular):
            sl2Decompose(Mat2(0, 1, 1, 0))

    def test_target(self):
        C = Mat2(5, 7, 2, 3)
        w = sl2Decompose(C)
        assert w.target == C and w.evaluate() == C
        with pytest.raises(ValueError):
            Sl2Word([("SA", 1)], target=SB)

    @settings(max_examples=1000)
    @given(sl2Words())
    def test_round_trip(self, w):
        C = w.evaluate()
        assert sl2Decompose(C).evaluate() == C

    def test_large_entries(self):
        C = (SA ** 3 * SB ** -7) ** 15
        w = sl2Decompose(C)
        assert w.evaluate() == C
        assert len(w.runs) <= 4 * sum(abs(x).bit_length() + 1 for x in C)


class TestEmbed:
    def test_examples(self):
        assert sl2Embed(Sl2Word([("SA", 2)])) == parse("a^2")
        assert sl2Embed(Sl2Word()) == parse("1")
        assert sl2Embed(Sl2Word([("SA", 1), ("SB", -1)])) == parse("a b^-1")

    @given(sl2Words())
    def test_block(self, w):
        f = blockForm(evalPsi(w.embed()))
        assert f.A == w.evaluate() and f.v == (0, 0) and f.eps == 1

    def test_str(self):
        assert str(Sl2Word([("SA", 2), ("SB", -1)])) == "SA^2 SB^-1"
        assert str(Sl2Word()) == "1"
