"""
命令行测试
"""
import json

import pytest

from src import __version__
from src.characters import char_fermionic
from src.cli import RunConfig, dispatch, main, parse_int_list, parse_rationals
from src.errors import ParseError
from src.partitions import parse_spec
from src.polyring import MPoly


@pytest.fixture(autouse=True)
def _isolate_settings(restore_settings):
    """--threads / --max-monomials 会改写全局配置"""
    yield


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


class TestParsing:
    """参数解析"""

    def test_int_list(self):
        """测试整数列表"""
        assert parse_int_list("3,2") == (3, 2)
        assert parse_int_list("-") == ()
        with pytest.raises(ParseError):
            parse_int_list("3,x")

    def test_rationals(self):
        """测试有理数列表"""
        assert [str(x) for x in parse_rationals("1,-1,1/2")] == ["1", "-1", "1/2"]
        with pytest.raises(ParseError):
            parse_rationals("1/0")


class TestCommands:
    """各子命令"""

    def test_char_text(self, capsys):
        """测试 char 文本输出"""
        code, out, _ = run(capsys, "char", "--spec", "2:1,2:1", "--format", "text")
        assert code == 0
        assert out == "1 + (1+q)*z1 + z1^2"

    def test_char_recursive_json(self, capsys):
        """测试 JSON 信封"""
        code, out, _ = run(capsys, "char", "--spec", "2:1,2:1", "--method", "recursive")
        assert code == 0
        envelope = json.loads(out)
        assert set(envelope) == {"command", "spec", "version", "result"}
        assert envelope["command"] == "char"
        assert envelope["spec"] == "2:1,2:1"
        assert envelope["version"] == __version__
        assert envelope["result"]["nz"] == 1

    def test_kostka(self, capsys):
        """测试限制 Kostka 多项式"""
        code, out, _ = run(capsys, "kostka", "--level", "2", "--l", "0", "--mu", "2", "--format", "text")
        assert code == 0
        assert out == "q"

    def test_char_json_round_trip(self, capsys):
        """测试 JSON 结果可还原为与直接计算相同的多项式"""
        code, out, _ = run(capsys, "char", "--spec", "2:1,2:1")
        assert code == 0
        result = MPoly.from_json(json.dumps(json.loads(out)["result"]))
        assert result == char_fermionic(parse_spec("2:1,2:1").mu_chain)

    def test_char_deterministic(self, capsys):
        """测试相同配置两次运行输出完全一致"""
        _, first, _ = run(capsys, "char", "--spec", "3:2,2:1", "--method", "recursive")
        _, second, _ = run(capsys, "char", "--spec", "3:2,2:1", "--method", "recursive")
        assert first == second
        assert first

    def test_kostka_restricted_flag(self, capsys):
        """测试显式 --restricted 与默认结果相同"""
        code, out, _ = run(
            capsys, "kostka", "--restricted", "--level", "2", "--l", "0", "--mu", "2", "--format", "text"
        )
        assert code == 0
        assert out == "q"

    def test_kostka_check_alternating(self, capsys):
        """测试交错和检查"""
        code, out, _ = run(
            capsys, "kostka", "--level", "2", "--l", "1", "--mu", "2,1", "--check-alternating", "--format", "text"
        )
        assert code == 0
        assert out == "pass"

    def test_supernomial(self, capsys):
        """测试单个超项式与整张表"""
        code, out, _ = run(capsys, "supernomial", "--mu", "2", "--lambda", "1,1", "--format", "text")
        assert code == 0
        assert out == "1 + q"
        code, out, _ = run(capsys, "supernomial", "--mu", "2", "--n", "2", "--format", "text")
        assert out.splitlines() == ["0,2: 1", "1,1: 1 + q", "2,0: 1"]

    def test_coinv_verify(self, capsys):
        """测试余不变量特征标及校验"""
        code, out, _ = run(
            capsys, "coinv", "--level", "2", "--l", "0", "--lambda", "2", "--verify", "--format", "text"
        )
        assert code == 0
        assert out == "1 + q*z1^2\npass"

    def test_oracle_coinv(self, capsys):
        """测试暴力商空间"""
        code, out, _ = run(capsys, "oracle", "--spec", "2:1,2:1", "--coinv", "2,0", "--format", "text")
        assert code == 0
        assert out == "q*z1"

    def test_oracle_z(self, capsys):
        """测试给定赋值点的融合积"""
        code, out, _ = run(capsys, "oracle", "--spec", "2:1,2:1", "--z", "1/2,-1", "--format", "text")
        assert code == 0
        assert out == "1 + (1+q)*z1 + z1^2"

    def test_basis(self, capsys):
        """测试单项式基与校验"""
        code, out, _ = run(capsys, "basis", "--spec", "2:1,2:1", "--verify", "--format", "text")
        assert code == 0
        assert out.splitlines() == ["1", "e[0]", "e[1]", "e[0]^2", "pass"]

    def test_out_file(self, capsys, tmp_path):
        """测试 --out 写文件"""
        target = tmp_path / "char.json"
        code, out, _ = run(capsys, "char", "--spec", "2:1,2:1", "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["command"] == "char"

    def test_verify_skipped_suite(self, capsys):
        """测试 verify 文本报告"""
        code, out, _ = run(capsys, "verify", "--suite", "coinv-sl3", "--max-rank", "2", "--format", "text")
        assert code == 0
        assert out == "coinv-sl3: skipped (0 cases, 0 failed) [max_rank < 3]"

    def test_verify_alternating(self, capsys):
        """测试小范围交错和套件"""
        code, out, _ = run(
            capsys, "verify", "--suite", "alternating", "--max-level", "1", "--max-partition", "2",
            "--threads", "1",
        )
        assert code == 0
        report = json.loads(out)["result"]
        assert report["suites"][0]["status"] == "passed"


class TestErrors:
    """错误与退出码"""

    def test_bad_label(self, capsys):
        """测试标签超出范围"""
        code, out, err = run(capsys, "kostka", "--level", "2", "--l", "3", "--mu", "2")
        assert code == 2
        assert out == ""
        assert "error:" in err

    def test_missing_level(self, capsys):
        """测试缺少 --level"""
        code, _, err = run(capsys, "kostka", "--mu", "2")
        assert code == 2
        assert "--level" in err

    def test_missing_required_option(self, capsys):
        """测试 argparse 必填参数"""
        with pytest.raises(SystemExit) as exc:
            main(["kostka", "--level", "2"])
        assert exc.value.code == 2

    def test_restricted_with_unrestricted(self, capsys):
        """测试 --restricted 与 --unrestricted 互斥"""
        with pytest.raises(SystemExit) as exc:
            main(["kostka", "--restricted", "--unrestricted", "0", "--mu", "2"])
        assert exc.value.code == 2
        code, output = dispatch(RunConfig(command="kostka", mu="2", restricted=True, unrestricted=0))
        assert code == 2
        assert output.startswith("error:")

    def test_bad_spec(self, capsys):
        """测试 spec 格式错误"""
        code, _, err = run(capsys, "char", "--spec", "2:x")
        assert code == 2
        assert "error:" in err

    def test_duplicate_z(self, capsys):
        """测试重复赋值点"""
        code, _, _ = run(capsys, "oracle", "--spec", "2:1,2:1", "--z", "1,1")
        assert code == 2

    def test_resource_limit(self, fresh_caches):
        """测试单项式上限触发时退出码为 1"""
        config = RunConfig(command="oracle", spec="2:2,2:2,2:1", max_monomials=1)
        code, output = dispatch(config)
        assert code == 1
        assert output.startswith("error:")
