"""
领域错误定义
所有计算模块抛出的异常都继承自 FusionCharError
"""


class FusionCharError(Exception):
    """基础错误"""

    CODE = 1000

    def __init__(self, message: str, code: int = None):
        self.code = code if code is not None else self.CODE
        self.message = message
        super().__init__(f"Error {self.code}: {message}")


class ArityError(FusionCharError):
    """变量个数 / 层数不匹配"""
    CODE = 1001


class DomainError(FusionCharError):
    """参数超出运算定义域"""
    CODE = 1002


class ShapeError(FusionCharError):
    """分拆形状不合法（例如行数超过 level）"""
    CODE = 1003


class ParseError(FusionCharError):
    """文本格式错误"""
    CODE = 1004


class ResourceLimitError(FusionCharError):
    """超出配置的资源上限"""
    CODE = 1005


class ConsistencyError(FusionCharError):
    """内部恒等式失败（意味着实现有 bug）"""
    CODE = 1006


# CLI 退出码 2 对应的用法错误
USAGE_ERRORS = (ArityError, DomainError, ShapeError, ParseError)
