"""
多项式环测试
"""
import pytest
from fractions import Fraction
from math import comb

from src.errors import ArityError, DomainError, ParseError
from src.polyring import MPoly, ZSubstitution, poly_sum, q_binomial, q_factorial, q_integer


class TestMPolyArithmetic:
    """基本算术"""

    def test_zero_coefficients_dropped(self):
        """测试零系数不保存"""
        p = MPoly({(0, (1,)): 1, (1, (0,)): 0}, 1)
        assert len(p) == 1
        assert (MPoly.z_power(0, 1) - MPoly.z_power(0, 1)).is_zero()

    def test_arity_mismatch(self):
        """测试变量个数不一致"""
        with pytest.raises(ArityError):
            MPoly.one(1) + MPoly.one(2)
        with pytest.raises(ArityError):
            MPoly({(0, (1, 0)): 1}, 1)

    def test_negative_q_exponent_rejected(self):
        """测试负的 q 指数"""
        with pytest.raises(DomainError):
            MPoly({(-1, ()): 1}, 0)

    def test_multiplication_and_power(self):
        """测试乘法与幂"""
        one_plus_q = MPoly.from_q_coeffs([1, 1])
        assert (one_plus_q ** 2).q_coeffs() == [1, 2, 1]
        assert (one_plus_q * 3).q_coeffs() == [3, 3]
        assert one_plus_q ** 0 == MPoly.one()
        with pytest.raises(DomainError):
            one_plus_q ** -1

    def test_shift_monomial(self):
        """测试乘以单项式"""
        p = MPoly.one(2).shift_monomial(2, (1, 3))
        assert p == MPoly.monomial(2, (1, 3))

    def test_poly_sum(self):
        """测试求和"""
        total = poly_sum([MPoly.q_power(1), MPoly.q_power(1), MPoly.one()])
        assert total.q_coeffs() == [1, 2]
        assert poly_sum([], nz=2).is_zero()


class TestMPolySubstitution:
    """代换与特化"""

    def test_shift_z(self):
        """测试 z -> q z"""
        p = MPoly.z_power(0, 1, 2)
        assert p.shift_z(0, 1) == MPoly.monomial(2, (2,))

    def test_inverse_substitution(self):
        """测试 z_2 -> z_1^{-1}，z_1 -> 1"""
        p = MPoly.monomial(0, (1, 2))
        out = p.substitute(
            z_subs={0: ZSubstitution.constant(1), 1: ZSubstitution.inverse(0)},
            new_nz=1,
        )
        assert out == MPoly.monomial(0, (-2,))

    def test_fractional_q_exponent_rejected(self):
        """测试分数 q 指数"""
        p = MPoly.z_power(0, 1)
        with pytest.raises(DomainError):
            p.substitute(z_subs={0: ZSubstitution(q_shift=Fraction(1, 2), target=0)})

    def test_evaluate(self):
        """测试完全赋值"""
        p = MPoly({(1, (1,)): 2, (0, (0,)): 1}, 1)
        assert p.evaluate(2, [3]) == 13
        assert p.evaluate(Fraction(1, 2), [1]) == 2
        assert p.evaluate_at_one() == 3

    def test_coefficients(self):
        """测试取系数"""
        p = MPoly({(0, (0, 1)): 1, (1, (2, 1)): 4, (2, (2, 0)): 1}, 2)
        assert p.coefficient_of(1, 1) == MPoly({(0, (0,)): 1, (1, (2,)): 4}, 1)
        assert p.coefficient_of_z((2, 1)) == MPoly.q_power(1).scale(4)
        assert p.z_support() == [(0, 1), (2, 0), (2, 1)]

    def test_with_num_z_vars(self):
        """测试补零与截断"""
        p = MPoly.z_power(0, 1)
        assert p.with_num_z_vars(2) == MPoly.monomial(0, (1, 0))
        with pytest.raises(ArityError):
            MPoly.monomial(0, (0, 1)).with_num_z_vars(1)


class TestMPolySerialization:
    """序列化"""

    def test_text(self):
        """测试可读文本"""
        p = MPoly({(0, (0,)): 1, (0, (1,)): 1, (1, (1,)): 1, (0, (2,)): 1}, 1)
        assert p.to_text() == "1 + (1+q)*z1 + z1^2"
        assert MPoly.zero().to_text() == "0"
        assert MPoly.q_power(1).to_text() == "q"
        assert (-MPoly.q_power(2)).to_text() == "-q^2"

    def test_json(self):
        """测试 JSON 往返"""
        p = MPoly({(3, (1, 0)): 5, (0, (0, 2)): Fraction(1, 2)}, 2)
        assert MPoly.from_json(p.to_json()) == p

    def test_bad_json(self):
        """测试错误 JSON"""
        with pytest.raises(ParseError):
            MPoly.from_json("{not json")
        with pytest.raises(ParseError):
            MPoly.from_dict({"terms": []})


class TestQSeries:
    """q-二项式等"""

    def test_q_binomial(self):
        """测试 Gauss 二项式"""
        assert q_binomial(4, 2).q_coeffs() == [1, 1, 2, 1, 1]
        assert q_binomial(5, 0) == MPoly.one()
        assert q_binomial(2, 3).is_zero()
        assert q_binomial(3, -1).is_zero()

    def test_q_binomial_at_one(self):
        """测试 q = 1 时等于普通二项式系数"""
        assert q_binomial(7, 3).evaluate_at_one() == 35

    def test_q_binomial_box_partitions(self):
        """测试系数为 3×3 方格内的分拆计数，且与 q-阶乘公式一致"""
        assert q_binomial(6, 3).q_coeffs() == [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]
        assert q_binomial(6, 3) * q_factorial(3) * q_factorial(3) == q_factorial(6)
        assert q_binomial(9, 2) == q_binomial(9, 7)

    def test_q_binomial_large_upper_index(self):
        """测试上指标很大时不依赖递归深度"""
        coeffs = q_binomial(5000, 2).q_coeffs()
        assert sum(coeffs) == comb(5000, 2)
        assert coeffs == coeffs[::-1]
        assert len(coeffs) == 2 * 4998 + 1
        assert q_binomial(3000, 1).evaluate_at_one() == 3000

    def test_q_integer_and_factorial(self):
        """测试 q-整数与 q-阶乘"""
        assert q_integer(3).q_coeffs() == [1, 1, 1]
        assert q_factorial(3).q_coeffs() == [1, 2, 2, 1]
        assert q_factorial(0) == MPoly.one()
