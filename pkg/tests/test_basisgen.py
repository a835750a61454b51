"""
单项式基测试
"""
import pytest

from src.basisgen import (
    BasisMonomial,
    basis_census,
    build_basis,
    check_basis_census,
    format_monomial,
    parse_monomial,
    verify_basis,
)
from src.characters import char_fermionic
from src.errors import ParseError
from src.partitions import parse_spec


class TestBuildBasis:
    """递归构造"""

    def test_two_v1(self, two_v1_spec):
        """测试 V_1 ⊗ V_1 的基"""
        basis = build_basis(two_v1_spec)
        assert [format_monomial(m, 2) for m in basis] == ["1", "e[0]", "e[1]", "e[0]^2"]

    def test_sl2_example(self, sl2_example_spec):
        """测试 V_2 ⊗ V_2 ⊗ V_1 的 18 个单项式"""
        basis = build_basis(sl2_example_spec)
        assert len(basis) == 18
        assert basis_census(basis, 1) == char_fermionic(sl2_example_spec.mu_chain)

    @pytest.mark.parametrize("text", ["3:2,2:1", "3:1,3:1,2:2", "4:1,3:1,2:1"])
    def test_census_matches_fermionic(self, text):
        """测试各分次片段的个数等于费米型特征标"""
        spec = parse_spec(text)
        report = check_basis_census(build_basis(spec), spec)
        assert report.passed, report.details
        assert report.data["monomials"] == spec.dimension()

    def test_sorted(self, sl2_example_spec):
        """测试按 (权, 次数, 因子) 排序"""
        basis = build_basis(sl2_example_spec)
        keys = [m.sort_key() for m in basis]
        assert keys == sorted(keys)

    def test_empty_spec(self):
        """测试空 spec 的基只有 1"""
        basis = build_basis(parse_spec("-", 2))
        assert [format_monomial(m, 2) for m in basis] == ["1"]


class TestMonomialText:
    """单项式文本"""

    def test_format(self):
        """测试 n ≥ 3 的写法"""
        mono = BasisMonomial.from_factors([(2, 1), (1, 0), (1, 0)], 3)
        assert format_monomial(mono, 3) == "x1[0]^2x2[1]"
        assert mono.degree == 1
        assert mono.weight == (2, 1)

    def test_parse(self):
        """测试解析"""
        mono = parse_monomial("x1[0]^2x2[1]", 3)
        assert mono.factors == ((1, 0), (1, 0), (2, 1))
        assert parse_monomial("e[1]e[0]", 2).factors == ((1, 0), (1, 1))
        assert parse_monomial("1", 3).factors == ()

    def test_parse_errors(self):
        """测试格式错误"""
        with pytest.raises(ParseError):
            parse_monomial("e[0]", 3)
        with pytest.raises(ParseError):
            parse_monomial("x1[0]junk", 3)
        with pytest.raises(ParseError):
            parse_monomial("x3[0]", 3)
        with pytest.raises(ParseError):
            parse_monomial("", 3)

    def test_grading_validated(self):
        """测试记录的分次必须与因子一致"""
        with pytest.raises(ValueError):
            BasisMonomial(factors=((1, 0),), degree=1, weight=(1,))


class TestVerifyBasis:
    """基的校验"""

    @pytest.mark.parametrize("text", ["2:1,2:1", "2:2,2:2,2:1", "3:2,2:1"])
    def test_valid(self, text):
        """测试构造出的基通过校验"""
        spec = parse_spec(text)
        report = verify_basis(build_basis(spec), spec)
        assert report.passed, report.details

    def test_missing_monomial(self, sl2_example_spec):
        """测试缺少单项式时指出分次片段"""
        basis = build_basis(sl2_example_spec)[:-1]
        report = verify_basis(basis, sl2_example_spec)
        assert not report.passed
        assert "d=" in report.details

    def test_repeated_monomial(self, sl2_example_spec):
        """测试个数正确但有重复单项式"""
        basis = build_basis(sl2_example_spec)
        texts = [format_monomial(m, 2) for m in basis]
        assert "e[1]^2" in texts and "e[0]e[2]" in texts
        swapped = [m for m in basis if format_monomial(m, 2) != "e[1]^2"]
        swapped.append(parse_monomial("e[0]e[2]", 2))
        report = verify_basis(swapped, sl2_example_spec)
        assert not report.passed
        assert "(d=2, m=2)" in report.details

    def test_monomial_outside_ring(self, two_v1_spec):
        """测试 R 中不存在的变量"""
        basis = build_basis(two_v1_spec)
        swapped = [m for m in basis if format_monomial(m, 2) != "e[1]"]
        swapped.append(parse_monomial("e[5]", 2))
        report = verify_basis(swapped, two_v1_spec)
        assert not report.passed
