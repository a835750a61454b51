"""
fusionchar 主包
融合积分次特征标、限制 Kostka 多项式与 sl2 余不变量的精确计算
"""

__version__ = "1.0.0"
