import pytest
from hypothesis import given
from liftmod import NotUnimodular, ModulusMismatch
from liftmod.matrix import Mat2, Mat3, ResidueMat3
from liftmod.homology import PSI, evalPsi

from .strategies import words, moduli


class TestMat2:
    def test_product_and_det(self):
        A, B = Mat2(1, 1, 0, 1), Mat2(1, 0, -1, 1)
        assert A * B == Mat2(0, 1, -1, 1)
        assert (A * B).det() == 1
        assert Mat2(2, 0, 0, 3).det() == 6

    def test_inverse_and_power(self):
        A = Mat2(2, 1, -3, -1)
        assert A * A.inverse() == Mat2()
        assert A ** -2 == A.inverse() * A.inverse()
        assert Mat2(1, 1, 0, 1) ** 5 == Mat2(1, 5, 0, 1)
        with pytest.raises(NotUnimodular):
            Mat2(2, 0, 0, 1).inverse()

    def test_vecmul(self):
        assert Mat2(2, 1, -3, -1).vecmul((6, 4)) == (0, 2)

    def test_negative(self):
        assert -Mat2() == Mat2(-1, 0, 0, -1)


class TestMat3:
    def test_identity(self):
        assert Mat3() * Mat3() == Mat3()
        assert Mat3() == Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_generator_inverse(self):
        assert PSI["a"] * PSI["a"].inverse() == Mat3()

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodular):
            Mat3((1, 0, 0, 0, 2, 0, 0, 0, 1)).inverse()
        assert not Mat3((1, 0, 0, 0, 2, 0, 0, 0, 1)).isUnimodular()
        assert PSI["i"].isUnimodular()

    def test_mod(self):
        m = Mat3((1, 2, 0, 0, 1, 0, 0, 2, 1)).mod(2)
        assert tuple(m) == (1, 0, 0, 0, 1, 0, 0, 0, 1)
        assert m == ResidueMat3.identity(2)

    def test_parse(self):
        assert Mat3.parse("1 1 0, 0 1 0, 0 0 1") == PSI["a"]
        assert Mat3.parse("[[1,1,0],[0,1,0],[0,0,1]]") == PSI["a"]
        with pytest.raises(ValueError):
            Mat3.parse("1 2 3")
        with pytest.raises(ValueError):
            Mat3.parse("1 2 3 4 5 6 7 8 x")

    def test_block_and_entries(self):
        m = Mat3.block(Mat2(1, 1, 0, 1), (0, 1), 1)
        assert m == PSI["c"]
        assert m.entry(2, 1) == 1
        assert m.rows[2] == (0, 1, 1)

    def test_str(self):
        assert str(Mat3()) == "[[1, 0, 0],\n [0, 1, 0],\n [0, 0, 1]]"

    @given(words())
    def test_inverse_of_random_image(self, w):
        m = evalPsi(w)
        assert m.inverse() * m == Mat3()

    def test_large_entries_are_exact(self):
        m = evalPsi("(a b^-1)^60")
        assert max(abs(x) for x in m) > 2 ** 63
        assert m.det() == 1


class TestResidueMat3:
    def test_reduction(self):
        m = ResidueMat3((-1, 0, 0, 0, -1, 0, 0, 0, -1), 5)
        assert tuple(m) == (4, 0, 0, 0, 4, 0, 0, 0, 4)
        assert m.modulus == 5

    def test_modulus_mismatch(self):
        with pytest.raises(ModulusMismatch):
            ResidueMat3.identity(2) * ResidueMat3.identity(3)

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            ResidueMat3.identity(1)

    def test_inverse(self):
        m = PSI["c"].mod(7)
        assert m * m.inverse() == ResidueMat3.identity(7)
        assert m ** 7 == ResidueMat3.identity(7)
        with pytest.raises(NotUnimodular):
            Mat3((2, 0, 0, 0, 1, 0, 0, 0, 1)).mod(4).inverse()

    def test_unit_determinant(self):
        assert PSI["i"].mod(5).isUnimodular()
        assert Mat3((2, 0, 0, 0, 1, 0, 0, 0, 1)).mod(5).isUnimodular()
        assert not Mat3((2, 0, 0, 0, 1, 0, 0, 0, 1)).mod(4).isUnimodular()

    def test_equality_respects_modulus(self):
        assert ResidueMat3.identity(2) != ResidueMat3.identity(3)
        assert ResidueMat3.identity(2) != Mat3()
        assert hash(ResidueMat3.identity(5)) == hash(Mat3().mod(5))

    def test_key(self):
        assert ResidueMat3.identity(3).key == 1 + 3 ** 4 + 3 ** 8

    @given(words(max_size=12), moduli())
    def test_product_matches_exact(self, w, k):
        m = evalPsi(w)
        assert (m * m).mod(k) == m.mod(k) * m.mod(k)
