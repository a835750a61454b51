"""
暴力线性代数校验器测试
"""
import pytest
from fractions import Fraction

from src.characters import char_fermionic
from src.errors import DomainError, ResourceLimitError
from src.oracle import (
    CyclicModuleKind,
    EvaluationModule,
    FilteredTensorProduct,
    RowEchelon,
    VarIndex,
    admissible_pivots,
    cyclic_filtration_check,
    bareiss_rank,
    check_fusion_independence,
    clear_denominators,
    coinv_quotient_character,
    default_z,
    exact_rank,
    exact_sequence_check,
    expected_coinv_character,
    fusion_gr_character,
    generator_poly,
    hilbert_character,
    ideal_generators,
    mode_bound_check,
    monomial_grading,
    monomials,
    quotient_piece,
    reducible_restriction_check,
    sparse_rank,
    sympy_rank,
    variables,
    weight_vectors,
)
from src.oracle.ideal import generator_labels
from src.partitions import parse_spec
from src.polyring import MPoly
from src.verify import z_choices


class TestLinearAlgebra:
    """精确秩"""

    ROWS = [
        [2, 4, 6, 0],
        [1, 2, 3, 0],
        [0, 1, -1, 5],
        [3, 7, 8, 5],
    ]

    def test_bareiss_rank(self):
        """测试 Bareiss 秩"""
        assert bareiss_rank(self.ROWS) == 2
        assert bareiss_rank([]) == 0
        assert bareiss_rank([[0, 0], [0, 0]]) == 0

    def test_sympy_rank_matches(self):
        """测试 sympy 后端给出同一秩"""
        assert sympy_rank(self.ROWS) == bareiss_rank(self.ROWS)
        assert exact_rank(self.ROWS, method="sympy") == 2

    def test_row_order_irrelevant(self):
        """测试行顺序不影响秩"""
        permuted = [self.ROWS[3], self.ROWS[1], self.ROWS[2], self.ROWS[0]]
        assert bareiss_rank(permuted) == bareiss_rank(self.ROWS)
        assert sparse_rank([{i: c for i, c in enumerate(r) if c} for r in permuted]) == 2

    def test_unknown_method(self):
        """测试未知方法"""
        with pytest.raises(DomainError):
            exact_rank(self.ROWS, method="gauss")

    def test_row_echelon(self):
        """测试增量行阶梯形"""
        echelon = RowEchelon(3)
        assert echelon.add({0: 2, 1: 4})
        assert not echelon.add({0: 1, 1: 2})
        assert echelon.contains({0: -3, 1: -6})
        assert not echelon.contains({2: 1})
        assert echelon.add({1: 1, 2: 1})
        assert echelon.add({2: 7})
        assert echelon.is_full
        assert not echelon.add({0: 1})
        assert echelon.pivot_columns() == [0, 1, 2]

    def test_rows_stay_integral(self):
        """测试化简后的行是整数且已约去公因子"""
        echelon = RowEchelon()
        echelon.add({0: 6, 1: 9})
        assert echelon.rows() == [{0: 2, 1: 3}]

    def test_clear_denominators(self):
        """测试清分母"""
        assert clear_denominators([Fraction(1, 2), Fraction(1, 3), 1]) == [3, 2, 6]


class TestGradedRing:
    """分次多项式环"""

    def test_variables(self, two_v1_spec):
        """测试变量集合"""
        assert variables(two_v1_spec) == [VarIndex(1, 0), VarIndex(1, 1)]
        spec = parse_spec("3:1,2:1")
        assert variables(spec) == [VarIndex(1, 0), VarIndex(1, 1), VarIndex(2, 0)]

    def test_monomials(self, two_v1_spec):
        """测试单项式枚举"""
        assert monomials(two_v1_spec, 1, (2,)) == [(VarIndex(1, 0), VarIndex(1, 1))]
        assert monomials(two_v1_spec, 3, (2,)) == []
        assert monomial_grading((VarIndex(1, 0), VarIndex(1, 1)), 2) == (1, (2,))

    def test_monomial_cap(self, two_v1_spec):
        """测试单项式数量上限"""
        with pytest.raises(ResourceLimitError):
            monomials(two_v1_spec, 1, (2,), cap=0)

    def test_weight_vectors(self, two_v1_spec):
        """测试权向量范围"""
        assert weight_vectors(two_v1_spec) == [(0,), (1,), (2,)]


class TestIdeal:
    """理想 J(n,k) 与 R/J"""

    def test_generator_labels(self, two_v1_spec):
        """测试生成元标签 (ν, j, D)"""
        assert list(generator_labels(two_v1_spec, (2,))) == [((2,), 0, 2), ((2,), 1, 1)]

    def test_generator_polys(self, two_v1_spec):
        """测试生成元的齐次部分"""
        assert generator_poly(two_v1_spec, (2,), 1) == {(VarIndex(1, 0), VarIndex(1, 1)): 2}
        assert generator_poly(two_v1_spec, (2,), 2) == {(VarIndex(1, 1), VarIndex(1, 1)): 1}
        assert ideal_generators(two_v1_spec, 1, (2,)) == [{0: 2}]

    def test_quotient_pieces(self, two_v1_spec):
        """测试分次片段的商维数"""
        assert quotient_piece(two_v1_spec, 0, (2,)).quotient_dim == 1
        assert quotient_piece(two_v1_spec, 1, (2,)).quotient_dim == 0
        assert quotient_piece(two_v1_spec, 2, (2,)).quotient_dim == 0

    def test_hilbert_two_v1(self, two_v1_spec):
        """测试 V_1 ⊗ V_1 的 R/J 特征标"""
        assert hilbert_character(two_v1_spec).to_text() == "1 + (1+q)*z1 + z1^2"

    @pytest.mark.parametrize("text", ["2:2,2:2,2:1", "3:2,2:1", "3:1,3:1,2:1", "4:1,3:1"])
    def test_hilbert_equals_fermionic(self, text):
        """测试 R/J 特征标等于费米型公式"""
        spec = parse_spec(text)
        assert hilbert_character(spec) == char_fermionic(spec.mu_chain)

    def test_resource_limit(self, fresh_caches, restore_settings):
        """测试超过单项式上限时报错而不是截断"""
        restore_settings.max_monomials = 1
        with pytest.raises(ResourceLimitError):
            hilbert_character(parse_spec("2:2,2:2,2:1"))


class TestEvaluationModules:
    """赋值表示"""

    def test_abelian(self):
        """测试阿贝尔对称张量"""
        module = EvaluationModule.abelian(3, 2, 0, n=3)
        assert module.dim == 6
        assert module.check_relations()
        assert set(module.operators) == {"x1", "x2"}

    def test_sl2_irrep(self):
        """测试 sl2 不可约表示"""
        module = EvaluationModule.sl2_irrep(3)
        assert module.dim == 4
        assert module.check_relations()
        assert module.exponential("e") == {0: 1, 1: 3, 2: 3, 3: 1}

    def test_sl3_symmetric(self):
        """测试 sl3 对称张量"""
        module = EvaluationModule.sl3_symmetric(2, Fraction(1, 2))
        assert module.dim == 6
        assert module.z == Fraction(1, 2)
        assert module.check_relations()

    def test_sl2_reducible(self):
        """测试可约 sl2 模 W_r"""
        module = EvaluationModule.sl2_reducible(2)
        assert module.dim == 6
        assert module.check_relations()
        assert len(module.cyclic) == 3

    def test_negative_rank(self):
        """测试非法参数"""
        with pytest.raises(DomainError):
            EvaluationModule.sl2_irrep(-1)


class TestFusionProduct:
    """过滤张量积与融合积"""

    def test_default_z(self):
        """测试默认赋值点"""
        assert default_z(4) == [0, 1, -1, 2]

    def test_filtration_dims(self, two_v1_spec):
        """测试 V_1(0) ⊗ V_1(1) 的过滤"""
        modules = [EvaluationModule.abelian(2, 1, z, n=2) for z in (0, 1)]
        product = FilteredTensorProduct(modules, ["x1"], mode_bound=1)
        assert product.dim == 4
        assert product.dims() == [3, 4]

    def test_fusion_character(self, two_v1_spec):
        """测试融合积特征标等于 R/J 特征标"""
        assert fusion_gr_character(two_v1_spec, verify=True) == hilbert_character(two_v1_spec)

    @pytest.mark.parametrize("text", ["2:2,2:1", "3:1,2:1", "3:1,3:1"])
    def test_independent_of_z(self, text):
        """测试不依赖赋值点的选取"""
        spec = parse_spec(text)
        report = check_fusion_independence(spec, z_choices(spec.N))
        assert report.passed, report.details

    def test_rational_z(self):
        """测试有理赋值点"""
        spec = parse_spec("2:1,2:1,2:1")
        character = fusion_gr_character(spec, [Fraction(1, 2), Fraction(-1, 3), 2])
        assert character == hilbert_character(spec)

    def test_bad_z(self, two_v1_spec):
        """测试赋值点个数不符或重复"""
        with pytest.raises(DomainError):
            fusion_gr_character(two_v1_spec, [0])
        with pytest.raises(DomainError):
            fusion_gr_character(two_v1_spec, [1, 1])

    def test_mode_bound(self):
        """测试加大模式上限不改变过滤"""
        report = mode_bound_check(parse_spec("2:1,2:1,2:1"))
        assert report.passed, report.details


class TestExactSequence:
    """正合列"""

    def test_admissible_pivots(self):
        """测试枢轴条件"""
        assert admissible_pivots(parse_spec("2:2,2:1")) == [0]
        assert admissible_pivots(parse_spec("3:1,2:1")) == [0, 1]

    def test_check(self):
        """测试三个 R/J 特征标满足正合列"""
        report = exact_sequence_check(parse_spec("2:2,2:1"), 0)
        assert report.passed, report.details
        assert report.data["sub_spec"] == "2:1"
        assert report.data["quotient_spec"] == "2:1,2:1"
        assert report.data["dim"] == 6

    def test_check_rank_three(self):
        """测试 n = 3 的两个枢轴"""
        spec = parse_spec("3:1,2:1")
        for p in admissible_pivots(spec):
            report = exact_sequence_check(spec, p)
            assert report.passed, report.details

    def test_bad_pivot(self):
        """测试不满足条件的枢轴"""
        with pytest.raises(DomainError):
            exact_sequence_check(parse_spec("2:2,2:1"), 1)
        with pytest.raises(DomainError):
            exact_sequence_check(parse_spec("2:2,2:1"), 5)


class TestCoinvariantQuotient:
    """余不变量商"""

    def test_sl2(self, two_v1_spec):
        """测试 n = 2、μ = (2)"""
        assert coinv_quotient_character(two_v1_spec, 2, 0, verify=True) == MPoly.monomial(1, (1,))
        assert coinv_quotient_character(two_v1_spec, 2, 2) == MPoly.one(1)

    def test_sl3(self):
        """测试 n = 3、λ = (2)"""
        spec = parse_spec("3:1,3:1")
        expected = MPoly({(0, (0, 2)): 1, (1, (1, 0)): 1}, 2)
        assert coinv_quotient_character(spec, 2, 0, verify=True) == expected
        assert expected_coinv_character(spec, 2, 0) == expected

    def test_mixed_spec_rejected(self):
        """测试因子 n_p 不全相同"""
        with pytest.raises(DomainError):
            coinv_quotient_character(parse_spec("3:1,2:1"), 1, 0)
        with pytest.raises(DomainError):
            coinv_quotient_character(parse_spec("4:1"), 1, 0)


class TestCyclicFiltration:
    """换循环向量的过滤等式"""

    def test_sl2_coincident_points(self):
        """测试赋值点重合"""
        report = cyclic_filtration_check(CyclicModuleKind.SL2, [1, 1], [0, 0])
        assert report.passed, report.details

    def test_sl2_distinct_points(self):
        """测试赋值点不同"""
        report = cyclic_filtration_check(CyclicModuleKind.SL2, [2, 1], [0, 1])
        assert report.passed, report.details
        assert report.data["g_dims"][-1] == 6

    def test_sl3(self):
        """测试 sl3 情形"""
        report = cyclic_filtration_check(CyclicModuleKind.SL3, [1, 1], [0, 1])
        assert report.passed, report.details

    def test_reducible_restriction(self):
        """测试可约限制的维数序列"""
        report = reducible_restriction_check([1, 1], [0, 1])
        assert report.passed, report.details

    def test_z_count_mismatch(self):
        """测试赋值点个数不符"""
        with pytest.raises(DomainError):
            cyclic_filtration_check(CyclicModuleKind.SL2, [1, 1], [0])
