"""
特征标公式测试
"""
import pytest

from src.characters import (
    ReductionBranch,
    char_fermionic,
    char_recursive,
    check_modified_recursion,
    chi_tilde,
    exact_sequence_char_identity,
    f_factor,
    filtration_coefficients,
    recursion_tree,
    reduce_one_level,
    reduction_steps,
    supernomial,
    supernomial_table,
    top_level_chain,
)
from src.errors import ArityError, DomainError
from src.partitions import MChain, Partition, parse_spec
from src.polyring import MPoly


def q_poly(*coeffs):
    return MPoly.from_q_coeffs(coeffs)


class TestFFactor:
    """F 因子"""

    def test_single_row(self):
        """测试单行：退化为 q-二项式"""
        assert f_factor((2,), (1,)) == q_poly(1, 1)
        assert f_factor((3,), (3,)) == MPoly.one()

    def test_zero_when_not_contained(self):
        """测试二项式为零"""
        assert f_factor((1,), (2,)).is_zero()

    def test_length_padding(self):
        """测试更大的 L 得到同一多项式"""
        assert f_factor((2, 1), (1,)) == f_factor((2, 1), (1,), length=4)

    def test_two_rows(self):
        """测试两行时各 q-二项式的乘积"""
        assert f_factor((3, 2), (2, 1)) == q_poly(0, 1, 2, 1)


class TestFermionic:
    """费米型公式"""

    def test_two_v1(self, two_v1_spec):
        """测试 V_1 ⊗ V_1"""
        character = char_fermionic(two_v1_spec.mu_chain)
        assert character.to_text() == "1 + (1+q)*z1 + z1^2"

    def test_sl2_example(self, sl2_example_spec):
        """测试 V_2 ⊗ V_2 ⊗ V_1 的各 z 系数"""
        character = char_fermionic(sl2_example_spec.mu_chain)
        expected = [
            q_poly(1),
            q_poly(1, 1, 1),
            q_poly(1, 1, 2, 1),
            q_poly(1, 1, 2, 1),
            q_poly(1, 1, 1),
            q_poly(1),
        ]
        for power, value in enumerate(expected):
            assert character.coefficient_of_z((power,)) == value
        assert character.evaluate_at_one() == 18

    def test_dimension_matches_spec(self):
        """测试 q = z = 1 时等于张量积维数"""
        for text in ["3:2,2:1", "3:1,3:1", "3:2,3:1,2:2", "4:1,3:1"]:
            spec = parse_spec(text)
            assert char_fermionic(spec.mu_chain).evaluate_at_one() == spec.dimension()

    def test_one_level(self):
        """测试单层链"""
        assert char_fermionic(MChain([[2]])) == MPoly.one()
        with pytest.raises(ArityError):
            reduce_one_level(MChain([[2]]))

    def test_reduce_one_level(self):
        """测试单层约化的项"""
        terms = dict(reduce_one_level(MChain([[], [2]])))
        assert set(terms) == {Partition(), Partition([1]), Partition([2])}
        assert terms[Partition([1])] == MPoly({(0, (1,)): 1, (1, (1,)): 1}, 1)

    def test_nonnegative(self):
        """测试系数非负"""
        character = char_fermionic(parse_spec("3:2,3:1,2:1").mu_chain)
        assert character.is_nonnegative()


class TestRecursion:
    """正合列递归"""

    def test_reduction_steps(self):
        """测试一步约化的两个目标"""
        iota, psi = reduction_steps(MChain([[], [2]]))
        assert iota.branch == ReductionBranch.IOTA
        assert iota.target == MChain([[1], [2]])
        assert psi.branch == ReductionBranch.PSI
        assert psi.target == MChain([[], [1]])
        assert psi.coefficient == MPoly.z_power(0, 1)

    def test_no_steps_when_top_difference_empty(self):
        """测试顶层差为零"""
        assert reduction_steps(MChain([[1], [1]])) == []

    def test_non_spec_chain_rejected(self):
        """测试非 spec 链"""
        with pytest.raises(DomainError):
            char_recursive(MChain([[1], [1, 1]]))

    @pytest.mark.parametrize("text", ["2:1,2:1", "2:2,2:2,2:1", "3:2,2:1", "3:1,3:1,3:1", "4:1,3:1,2:1"])
    def test_recursive_equals_fermionic(self, text):
        """测试两种方法一致"""
        chain = parse_spec(text).mu_chain
        assert char_recursive(chain) == char_fermionic(chain)

    @pytest.mark.parametrize("text", ["2:2,2:1", "3:2,2:1", "3:1,3:1,2:2"])
    def test_exact_sequence_identity(self, text):
        """测试正合列特征标恒等式"""
        report = exact_sequence_char_identity(parse_spec(text).mu_chain)
        assert report.passed, report.details
        assert report.data["dim"] == report.data["dim_formula"]

    def test_recursion_tree(self):
        """测试递归树的边"""
        edges = recursion_tree(MChain([[], [1]]))
        assert [e.branch for e in edges] == [ReductionBranch.IOTA, ReductionBranch.PSI]

    def test_recursion_tree_modified_coefficients(self):
        """测试 ψ 边的修正系数随 ν^(1)_1 平移"""
        psi = {
            e.source.key(): e.modified_coefficient
            for e in recursion_tree(MChain([[], [3, 2]]))
            if e.branch == ReductionBranch.PSI
        }
        z1 = MPoly.z_power(0, 1)
        assert psi["-/3,2"] == z1
        assert psi["1,1/3,2"] == MPoly.q_power(1, 1) * z1
        assert psi["1,1/3,1"] == MPoly.q_power(1, 1) * z1
        assert psi["2,1/3,1"] == MPoly.q_power(2, 1) * z1


class TestModified:
    """修正特征标"""

    def test_chi_tilde_shift(self):
        """测试 z_a 乘以 q^{μ^(a)_1}"""
        chain = parse_spec("3:2,2:1").mu_chain
        assert chi_tilde(chain) == char_fermionic(chain).shift_z(1, 1)

    @pytest.mark.parametrize("text", ["2:2,2:1", "3:2,2:1", "3:1,2:1,2:1"])
    def test_modified_recursion(self, text):
        """测试修正形式的三项关系"""
        report = check_modified_recursion(parse_spec(text).mu_chain)
        assert report.passed, report.details

    def test_filtration_coefficients(self):
        """测试组合因子系数在 q = 1 时给出维数分解"""
        spec = parse_spec("3:1,2:1")
        chain = spec.mu_chain
        coefficients = filtration_coefficients(chain)
        total = MPoly.zero(2)
        for nu, c in coefficients.items():
            lower = chi_tilde(MChain(tuple(chain[:-2]) + (nu,))).with_num_z_vars(2)
            total = total + c * lower
        assert total == chi_tilde(chain)


class TestSupernomial:
    """q-超项式"""

    def test_values(self):
        """测试小例子"""
        assert supernomial((1, 1), (2,)) == q_poly(1, 1)
        assert supernomial((2, 0), (2,)) == MPoly.one()
        assert supernomial((0, 2), (2,)) == MPoly.one()

    def test_table(self):
        """测试整张表"""
        table = supernomial_table((2,), 2)
        assert table == {(2, 0): MPoly.one(), (1, 1): q_poly(1, 1), (0, 2): MPoly.one()}

    def test_table_sums_to_multinomial(self):
        """测试 q = 1 时求和为 n^{|μ|}（μ 为单行时）"""
        table = supernomial_table((3,), 3)
        assert sum(v.evaluate_at_one() for v in table.values()) == 27

    def test_errors(self):
        """测试参数错误"""
        with pytest.raises(DomainError):
            supernomial((1, 2), (2,))
        with pytest.raises(DomainError):
            supernomial((3, -1), (2,))
        with pytest.raises(DomainError):
            top_level_chain((1,), 0)
