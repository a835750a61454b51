"""
基的校验
(a) 各分次片段的个数等于 R/J 特征标系数；(b) 模 J(n,k) 线性无关
"""
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from src.characters import char_fermionic
from src.models import VerificationReport
from src.oracle import VarIndex, exact_rank, hilbert_character, quotient_piece
from src.partitions import FusionSpec

from .builder import BasisMonomial, basis_census

Grading = Tuple[int, Tuple[int, ...]]


def _by_piece(basis: Sequence[BasisMonomial]) -> Dict[Grading, List[BasisMonomial]]:
    pieces: Dict[Grading, List[BasisMonomial]] = {}
    for mono in basis:
        pieces.setdefault((mono.degree, mono.weight), []).append(mono)
    return pieces


def _piece_name(key: Grading) -> str:
    d, m = key
    return f"(d={d}, m={','.join(map(str, m))})"


def _independent_modulo_ideal(spec: FusionSpec, key: Grading, monos: List[BasisMonomial]) -> Tuple[bool, str]:
    d, m = key
    piece = quotient_piece(spec, d, m)
    cols = []
    for mono in monos:
        raw = tuple(VarIndex(a, i) for a, i in mono.factors)
        if raw not in piece.index:
            return False, f"{_piece_name(key)} 中单项式 {mono.factors} 不是 R 的元素"
        cols.append(piece.index[raw])
    if len(set(cols)) != len(cols):
        return False, f"{_piece_name(key)} 中有重复单项式"
    width = len(piece.basis)
    rows = []
    for relation in piece.relations.rows():
        dense = [0] * width
        for col, c in relation.items():
            dense[col] = c
        rows.append(dense)
    j_rank = len(rows)
    for col in cols:
        unit = [0] * width
        unit[col] = 1
        rows.append(unit)
    total = exact_rank(rows)
    if total != j_rank + len(cols):
        return False, f"{_piece_name(key)} 中的单项式模 J 线性相关: 秩 {total} < {j_rank} + {len(cols)}"
    return True, ""


def verify_basis(basis: Sequence[BasisMonomial], spec: FusionSpec) -> VerificationReport:
    """
    校验基：个数与分次、模 J 的线性无关性

    失败时 details 指出出问题的分次片段。
    """
    name = f"basis[{spec.text()}]"
    nz = spec.n - 1
    expected = hilbert_character(spec)
    census = basis_census(basis, nz)
    if census != expected:
        diff = expected - census
        first = diff.items()[0][0]
        details = f"{_piece_name((first[0], first[1]))} 的个数与 R/J 特征标不符"
        logger.warning(f"基校验失败: {name} {details}")
        return VerificationReport.compare(name, expected, census, details)
    for key, monos in sorted(_by_piece(basis).items()):
        ok, details = _independent_modulo_ideal(spec, key, monos)
        if not ok:
            logger.warning(f"基校验失败: {name} {details}")
            return VerificationReport.check(name, False, details, monomials=len(basis))
    return VerificationReport.check(name, True, monomials=len(basis), pieces=len(_by_piece(basis)))


def check_basis_census(basis: Sequence[BasisMonomial], spec: FusionSpec) -> VerificationReport:
    """基的分次特征标等于费米型公式"""
    return VerificationReport.compare(
        f"basis-census[{spec.text()}]",
        char_fermionic(spec.mu_chain),
        basis_census(basis, spec.n - 1),
        data={"monomials": len(basis), "dimension": spec.dimension()},
    )
