"""
正合列特征标恒等式
"""
from src.models import VerificationReport
from src.partitions import MChain, chain_to_spec

from .fermionic import char_fermionic
from .recursion import reduction_steps


def exact_sequence_char_identity(chain: MChain) -> VerificationReport:
    """
    检查 χ[chain] = χ[ι 链](z_{n−1} → q z_{n−1}) + z_{n−1} χ[ψ 链]

    三个特征标都用费米型公式独立计算，同时检查维数等式。
    顶层差为零时恒等式退化为降层，直接比较 χ^(n) 与 χ^(n−1)。
    """
    chain = MChain(chain)
    name = f"exact-sequence-char[{chain}]"
    if chain.n < 2:
        return VerificationReport.check(name, True, "单层链，特征标为 1")
    steps = reduction_steps(chain)
    whole = char_fermionic(chain)
    if not steps:
        lower = char_fermionic(chain.drop_top()).with_num_z_vars(chain.n - 1)
        return VerificationReport.compare(name, whole, lower, "顶层差为零：降层")
    iota, psi = steps
    nz = chain.n - 1
    sub = char_fermionic(iota.target)
    quot = char_fermionic(psi.target)
    rhs = sub.shift_z(nz - 1, 1) + psi.coefficient * quot
    data = {
        "dim": whole.evaluate_at_one(),
        "dim_sub": sub.evaluate_at_one(),
        "dim_quotient": quot.evaluate_at_one(),
    }
    if chain.is_spec_chain():
        data["dim_formula"] = chain_to_spec(chain).dimension()
    report = VerificationReport.compare(name, whole, rhs, data=data)
    if report.passed and data["dim"] != data["dim_sub"] + data["dim_quotient"]:
        return VerificationReport(
            name=name, passed=False, details="维数等式不成立", data=data
        )
    return report
