"""
余不变量特征标与 Verlinde 代数测试
"""
import pytest

from src.coinvariants import (
    CoinvariantIdealSpec,
    VerlindeElement,
    check_verlinde_kostka,
    coinv_character,
    coinv_character_alternating,
    coinv_character_w3,
    fusion_dim_sum,
    fusion_rule,
    restrict_w3_character,
    verlinde_dim,
    verlinde_expansion,
)
from src.errors import DomainError, ShapeError
from src.partitions import partitions_of
from src.polyring import MPoly


class TestCoinvariantCharacter:
    """余不变量特征标"""

    def test_level_one(self):
        """测试 level 1、λ = (1)"""
        assert coinv_character(1, 0, (1,)) == MPoly.one(1)
        assert coinv_character(1, 1, (1,)) == MPoly.z_power(0, 1)

    def test_single_row(self):
        """测试 level 2、λ = (2)"""
        expected = MPoly({(0, (0,)): 1, (1, (2,)): 1}, 1)
        assert coinv_character(2, 0, (2,)) == expected

    def test_two_variable_form(self):
        """测试两变量形式及其限制"""
        w3 = coinv_character_w3(2, 0, (2,))
        assert w3 == MPoly({(0, (0, 2)): 1, (1, (1, 0)): 1}, 2)
        assert restrict_w3_character(w3, (2,)) == coinv_character(2, 0, (2,))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_three_forms_agree(self, k):
        """测试费米型、两变量限制、交错和三种形式一致"""
        for size in range(0, 6):
            for lam in partitions_of(size, max_rows=k):
                for l in range(k + 1):
                    base = coinv_character(k, l, lam)
                    assert coinv_character_alternating(k, l, lam) == base
                    assert restrict_w3_character(coinv_character_w3(k, l, lam), lam) == base

    def test_errors(self):
        """测试参数校验"""
        with pytest.raises(ShapeError):
            coinv_character(1, 0, (1, 1))
        with pytest.raises(DomainError):
            coinv_character(2, 3, (1,))
        with pytest.raises(DomainError):
            restrict_w3_character(MPoly.one(1), (1,))


class TestIdealSpec:
    """余不变量理想"""

    def test_create(self):
        """测试构造与幂零次数"""
        ideal = CoinvariantIdealSpec.create(2, 0)
        assert ideal.nilpotency == 3
        assert ideal.monomial_generators() == [((1, 0), 1), ((1, 1), 3)]
        with pytest.raises(DomainError):
            CoinvariantIdealSpec.create(2, 3)

    def test_retained_weight(self):
        """测试保留的权空间"""
        ideal = CoinvariantIdealSpec.create(2, 0)
        assert ideal.retained_weight(2, (1,), 2)
        assert not ideal.retained_weight(2, (0,), 2)
        assert ideal.retained_weight(3, (1, 0), 2)
        assert ideal.retained_weight(3, (0, 2), 2)
        with pytest.raises(DomainError):
            ideal.retained_weight(4, (0, 0, 0), 2)


class TestVerlinde:
    """Verlinde 代数"""

    def test_fusion_rule(self):
        """测试融合规则截断"""
        assert fusion_rule(2, 1, 1) == (0, 2)
        assert fusion_rule(1, 1, 1) == (0,)
        assert fusion_rule(3, 2, 3) == (1,)

    def test_multiplication(self):
        """测试乘法"""
        one = VerlindeElement.basis(2, 1)
        assert (one * one).coeffs == (1, 0, 1)
        assert (one ** 0) == VerlindeElement.unit(2)
        assert str(one * one) == "[0] + [2]"
        with pytest.raises(DomainError):
            one * VerlindeElement.unit(3)

    def test_expansion_matches_kostka(self):
        """测试展开系数等于 K^(k)_{l,μ}(1)"""
        assert verlinde_expansion((2,), 2).coeffs == (1, 0, 1)
        for k in (1, 2, 3):
            for mu in partitions_of(4, max_rows=k):
                report = check_verlinde_kostka(mu, k)
                assert report.passed, report.details

    def test_dimension(self):
        """测试余不变量维数"""
        assert verlinde_dim((2,), 2, 0) == 2
        assert fusion_dim_sum((2,), 2, 0) == 2
        assert verlinde_dim((2,), 2, 0) == coinv_character(2, 0, (2,)).evaluate_at_one()
        assert verlinde_dim((1, 1), 2, 2) == 1
