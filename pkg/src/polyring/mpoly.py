"""
稀疏多元多项式
变量为 q 与 z_1..z_{nz}，系数为任意精度整数（特化到有理数时可为 Fraction）
q 指数非负，z 指数可为负
"""
import json
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, field_validator

from src.errors import ArityError, ConsistencyError, DomainError, ParseError

Coefficient = Union[int, Fraction]
TermKey = Tuple[int, Tuple[int, ...]]


def _normalize_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class ZSubstitution(BaseModel):
    """z 变量的单项式代换  z_i -> scale * q^q_shift * z_target^power"""
    scale: Fraction = Field(Fraction(1), description="常数因子")
    q_shift: Fraction = Field(Fraction(0), description="q 的幂次（可为分数，结果必须是整数）")
    target: Optional[int] = Field(None, description="目标变量下标，None 表示代换为常数")
    power: int = Field(1, description="目标变量的幂次（可为负）")

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @field_validator("scale", "q_shift", mode="before")
    @classmethod
    def _to_fraction(cls, v):
        return Fraction(v)

    @classmethod
    def constant(cls, value: Coefficient) -> "ZSubstitution":
        return cls(scale=Fraction(value), target=None)

    @classmethod
    def shift(cls, target: int, q_shift: int = 1) -> "ZSubstitution":
        """z_i -> q^s z_target"""
        return cls(q_shift=Fraction(q_shift), target=target)

    @classmethod
    def inverse(cls, target: int) -> "ZSubstitution":
        """z_i -> z_target^{-1}"""
        return cls(target=target, power=-1)


class MPoly:
    """
    不可变稀疏多项式

    terms 把 (q 指数, z 指数元组) 映射到非零系数。
    """

    __slots__ = ("_terms", "_nz", "_hash")

    def __init__(self, terms: Optional[Mapping[TermKey, Coefficient]] = None, nz: int = 0):
        if nz < 0:
            raise ArityError(f"变量个数不能为负: {nz}")
        clean: Dict[TermKey, Coefficient] = {}
        if terms:
            for (qe, ze), c in terms.items():
                ze = tuple(ze)
                if len(ze) != nz:
                    raise ArityError(f"z 指数长度 {len(ze)} 与变量个数 {nz} 不符")
                if qe < 0:
                    raise DomainError(f"q 指数不能为负: {qe}")
                if c:
                    key = (int(qe), ze)
                    total = clean.get(key, 0) + c
                    if total:
                        clean[key] = _normalize_coeff(total)
                    else:
                        clean.pop(key, None)
        self._terms = clean
        self._nz = nz
        self._hash = None

    # ---- 构造 ----

    @classmethod
    def zero(cls, nz: int = 0) -> "MPoly":
        return cls({}, nz)

    @classmethod
    def one(cls, nz: int = 0) -> "MPoly":
        return cls.constant(1, nz)

    @classmethod
    def constant(cls, c: Coefficient, nz: int = 0) -> "MPoly":
        return cls({(0, (0,) * nz): c}, nz)

    @classmethod
    def monomial(cls, q_exp: int = 0, z_exps: Sequence[int] = (), coeff: Coefficient = 1) -> "MPoly":
        z = tuple(z_exps)
        return cls({(q_exp, z): coeff}, len(z))

    @classmethod
    def q_power(cls, e: int, nz: int = 0) -> "MPoly":
        return cls({(e, (0,) * nz): 1}, nz)

    @classmethod
    def z_power(cls, index: int, nz: int, power: int = 1) -> "MPoly":
        """z_{index+1}^power（下标从 0 开始）"""
        if not 0 <= index < nz:
            raise ArityError(f"变量下标 {index} 超出范围 [0, {nz})")
        z = [0] * nz
        z[index] = power
        return cls({(0, tuple(z)): 1}, nz)

    @classmethod
    def from_q_coeffs(cls, coeffs: Iterable[Coefficient], nz: int = 0) -> "MPoly":
        zero_z = (0,) * nz
        return cls({(d, zero_z): c for d, c in enumerate(coeffs) if c}, nz)

    # ---- 基本属性 ----

    @property
    def num_z_vars(self) -> int:
        return self._nz

    @property
    def terms(self) -> Dict[TermKey, Coefficient]:
        return dict(self._terms)

    def items(self) -> List[Tuple[TermKey, Coefficient]]:
        """规范顺序（按 (q, z) 字典序）的项"""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[TermKey, Coefficient]]:
        return iter(self.items())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_term(self) -> Coefficient:
        return self._terms.get((0, (0,) * self._nz), 0)

    def q_degree(self) -> int:
        """q 的最高次数（零多项式为 -1）"""
        return max((qe for qe, _ in self._terms), default=-1)

    def z_degree(self, index: int) -> int:
        self._check_var(index)
        return max((ze[index] for _, ze in self._terms), default=0)

    def z_min_degree(self, index: int) -> int:
        self._check_var(index)
        return min((ze[index] for _, ze in self._terms), default=0)

    def q_coeffs(self) -> List[Coefficient]:
        """仅含 q 的多项式的系数列表"""
        if self._nz and any(any(ze) for _, ze in self._terms):
            raise ArityError("多项式含有 z 变量，无法展开为 q 系数列表")
        out = [0] * (self.q_degree() + 1)
        for (qe, _), c in self._terms.items():
            out[qe] += c
        return out

    def _check_var(self, index: int):
        if not 0 <= index < self._nz:
            raise ArityError(f"变量下标 {index} 超出范围 [0, {self._nz})")

    def _check_arity(self, other: "MPoly"):
        if self._nz != other._nz:
            raise ArityError(f"变量个数不一致: {self._nz} != {other._nz}")

    # ---- 算术 ----

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check_arity(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other, self._nz)
        return NotImplemented

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        return MPoly(terms, self._nz)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({k: -c for k, c in self._terms.items()}, self._nz)

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[TermKey, Coefficient] = {}
        for (qa, za), ca in self._terms.items():
            for (qb, zb), cb in other._terms.items():
                key = (qa + qb, tuple(x + y for x, y in zip(za, zb)))
                terms[key] = terms.get(key, 0) + ca * cb
        return MPoly(terms, self._nz)

    __rmul__ = __mul__

    def scale(self, c: Coefficient) -> "MPoly":
        """数乘"""
        if not c:
            return MPoly.zero(self._nz)
        return MPoly({k: v * c for k, v in self._terms.items()}, self._nz)

    def __pow__(self, e: int) -> "MPoly":
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"只支持非负整数次幂: {e}")
        result = MPoly.one(self._nz)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift_monomial(self, q_exp: int = 0, z_exps: Optional[Sequence[int]] = None) -> "MPoly":
        """乘以单项式 q^a z^b"""
        z_shift = tuple(z_exps) if z_exps is not None else (0,) * self._nz
        if len(z_shift) != self._nz:
            raise ArityError(f"z 指数长度 {len(z_shift)} 与变量个数 {self._nz} 不符")
        terms = {}
        for (qe, ze), c in self._terms.items():
            terms[(qe + q_exp, tuple(x + y for x, y in zip(ze, z_shift)))] = c
        return MPoly(terms, self._nz)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self._nz)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._nz == other._nz and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nz, frozenset(self._terms.items())))
        return self._hash

    # ---- 变量操作 ----

    def with_num_z_vars(self, nz: int) -> "MPoly":
        """补零扩展（或去掉恒为零的尾部）z 变量"""
        if nz == self._nz:
            return self
        if nz > self._nz:
            pad = (0,) * (nz - self._nz)
            return MPoly({(qe, ze + pad): c for (qe, ze), c in self._terms.items()}, nz)
        for _, ze in self._terms:
            if any(ze[nz:]):
                raise ArityError(f"无法截断到 {nz} 个变量：高位变量出现非零指数")
        return MPoly({(qe, ze[:nz]): c for (qe, ze), c in self._terms.items()}, nz)

    def shift_z(self, index: int, q_shift: int = 1) -> "MPoly":
        """代换 z_index -> q^{q_shift} z_index"""
        return self.substitute(z_subs={index: ZSubstitution.shift(index, q_shift)})

    def substitute(
        self,
        q_val: Optional[Coefficient] = None,
        z_subs: Optional[Mapping[int, ZSubstitution]] = None,
        new_nz: Optional[int] = None,
    ) -> "MPoly":
        """
        精确代换

        Args:
            q_val: q 的数值（None 表示保留 q）
            z_subs: 变量下标 -> 代换；未列出的变量保持不变（同一下标）
            new_nz: 结果的变量个数，默认与原多项式相同

        Returns:
            代换后的多项式

        Raises:
            DomainError: 产生分数或负的 q 指数
        """
        z_subs = dict(z_subs or {})
        out_nz = self._nz if new_nz is None else new_nz
        for index in z_subs:
            self._check_var(index)
        for index, sub in z_subs.items():
            if sub.target is not None and not 0 <= sub.target < out_nz:
                raise ArityError(f"代换目标变量 {sub.target} 超出范围 [0, {out_nz})")
        for index in range(self._nz):
            if index not in z_subs and index >= out_nz:
                if any(ze[index] for _, ze in self._terms):
                    raise ArityError(f"变量 z{index + 1} 没有代换却不在结果中")

        terms: Dict[TermKey, Coefficient] = {}
        for (qe, ze), c in self._terms.items():
            coeff: Coefficient = c
            q_total = Fraction(qe)
            z_out = [0] * out_nz
            for index, e in enumerate(ze):
                if not e:
                    continue
                sub = z_subs.get(index)
                if sub is None:
                    z_out[index] += e
                    continue
                if e < 0 and sub.scale == 0:
                    raise DomainError("负幂变量不能代换为 0")
                coeff = coeff * sub.scale ** e
                q_total += sub.q_shift * e
                if sub.target is not None:
                    z_out[sub.target] += sub.power * e
            if q_total.denominator != 1:
                raise DomainError(f"代换产生分数 q 指数: {q_total}")
            q_int = int(q_total)
            if q_val is not None:
                coeff = coeff * Fraction(q_val) ** q_int
                q_int = 0
            elif q_int < 0:
                raise DomainError(f"代换产生负的 q 指数: {q_int}")
            key = (q_int, tuple(z_out))
            terms[key] = terms.get(key, 0) + coeff
        return MPoly(terms, out_nz)

    def specialize(
        self,
        q_val: Optional[Coefficient] = None,
        z_vals: Optional[Sequence[Optional[Union[Coefficient, ZSubstitution]]]] = None,
        new_nz: Optional[int] = None,
    ) -> "MPoly":
        """
        按位置给出的特化：z_vals[i] 为 None（保留）、常数或单项式代换
        """
        subs: Dict[int, ZSubstitution] = {}
        for index, val in enumerate(z_vals or []):
            if val is None:
                continue
            if isinstance(val, ZSubstitution):
                subs[index] = val
            else:
                subs[index] = ZSubstitution.constant(val)
        return self.substitute(q_val=q_val, z_subs=subs, new_nz=new_nz)

    def evaluate(self, q_val: Coefficient, z_vals: Sequence[Coefficient]) -> Coefficient:
        """完全赋值"""
        if len(z_vals) != self._nz:
            raise ArityError(f"需要 {self._nz} 个 z 值，得到 {len(z_vals)}")
        total: Coefficient = 0
        for (qe, ze), c in self._terms.items():
            term = Fraction(c) * Fraction(q_val) ** qe
            for v, e in zip(z_vals, ze):
                term *= Fraction(v) ** e
            total += term
        return _normalize_coeff(Fraction(total))

    def evaluate_at_one(self) -> Coefficient:
        """q = z = 1 时的值（即总维数）"""
        return _normalize_coeff(sum(self._terms.values()))

    def coefficient_of(self, index: int, power: int) -> "MPoly":
        """
        z_index^power 的系数

        Returns:
            去掉该变量后的多项式（变量个数减一）
        """
        self._check_var(index)
        terms = {}
        for (qe, ze), c in self._terms.items():
            if ze[index] == power:
                terms[(qe, ze[:index] + ze[index + 1:])] = c
        return MPoly(terms, self._nz - 1)

    def coefficient_of_z(self, z_exps: Sequence[int]) -> "MPoly":
        """z 单项式 z^z_exps 的系数，结果只含 q"""
        z = tuple(z_exps)
        if len(z) != self._nz:
            raise ArityError(f"z 指数长度 {len(z)} 与变量个数 {self._nz} 不符")
        return MPoly({(qe, ()): c for (qe, ze), c in self._terms.items() if ze == z}, 0)

    def z_support(self) -> List[Tuple[int, ...]]:
        """出现过的 z 单项式（规范顺序）"""
        return sorted({ze for _, ze in self._terms})

    def z_coefficients(self) -> Dict[Tuple[int, ...], "MPoly"]:
        """按 z 单项式分组的 q 多项式系数"""
        return {ze: self.coefficient_of_z(ze) for ze in self.z_support()}

    # ---- 正性 ----

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def assert_nonnegative(self, context: str = "") -> "MPoly":
        """所有系数非负，否则抛出 ConsistencyError"""
        bad = [(k, c) for k, c in self.items() if c < 0]
        if bad:
            (qe, ze), c = bad[0]
            raise ConsistencyError(
                f"{context or '特征标'} 出现负系数 {c} (q^{qe}, z={list(ze)})"
            )
        return self

    # ---- 序列化 ----

    def to_dict(self) -> dict:
        return {
            "nz": self._nz,
            "terms": [
                {"q": qe, "z": list(ze), "c": str(c)}
                for (qe, ze), c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "MPoly":
        try:
            nz = int(data["nz"])
            terms: Dict[TermKey, Coefficient] = {}
            for term in data["terms"]:
                key = (int(term["q"]), tuple(int(x) for x in term["z"]))
                terms[key] = terms.get(key, 0) + _normalize_coeff(Fraction(str(term["c"])))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"多项式 JSON 格式错误: {e}") from e
        return cls(terms, nz)

    @classmethod
    def from_json(cls, text: str) -> "MPoly":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"多项式 JSON 无法解析: {e}") from e
        return cls.from_dict(data)

    def to_text(self) -> str:
        """
        可读文本，按 z 单项式分组，例如 1 + (1+q)*z1 + z1^2
        """
        if not self._terms:
            return "0"
        pieces: List[Tuple[bool, str]] = []
        for ze in self.z_support():
            q_terms = sorted(
                (qe, c) for (qe, z), c in self._terms.items() if z == ze
            )
            z_text = _z_monomial_text(ze)
            if not z_text:
                for qe, c in q_terms:
                    pieces.append((c < 0, _q_term_text(abs(c), qe)))
            elif len(q_terms) == 1:
                qe, c = q_terms[0]
                coeff_text = _q_term_text(abs(c), qe)
                text = z_text if coeff_text == "1" else f"{coeff_text}*{z_text}"
                pieces.append((c < 0, text))
            else:
                inner = ""
                for qe, c in q_terms:
                    t = _q_term_text(abs(c), qe)
                    if not inner:
                        inner = f"-{t}" if c < 0 else t
                    else:
                        inner += f"-{t}" if c < 0 else f"+{t}"
                pieces.append((False, f"({inner})*{z_text}"))
        text = ""
        for negative, piece in pieces:
            if not text:
                text = f"-{piece}" if negative else piece
            else:
                text += f" - {piece}" if negative else f" + {piece}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()!r}, nz={self._nz})"


def _q_term_text(c: Coefficient, qe: int) -> str:
    if qe == 0:
        return str(c)
    q_text = "q" if qe == 1 else f"q^{qe}"
    return q_text if c == 1 else f"{c}*{q_text}"


def _z_monomial_text(ze: Tuple[int, ...]) -> str:
    parts = []
    for index, e in enumerate(ze):
        if e == 0:
            continue
        name = f"z{index + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def poly_sum(polys: Iterable[MPoly], nz: int = 0) -> MPoly:
    """多项式求和（空和为 0）"""
    terms: Dict[TermKey, Coefficient] = {}
    for p in polys:
        if p.num_z_vars != nz:
            raise ArityError(f"变量个数不一致: {p.num_z_vars} != {nz}")
        for key, c in p._terms.items():
            terms[key] = terms.get(key, 0) + c
    return MPoly(terms, nz)
