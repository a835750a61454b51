"""
测试配置
"""
import pytest
import os
import sys

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

# 设置测试环境变量
os.environ.setdefault('FUSIONCHAR_THREADS', '2')
os.environ.setdefault('FUSIONCHAR_MAX_MONOMIALS', '20000')
os.environ.setdefault('FUSIONCHAR_RANK_METHOD', 'bareiss')
os.environ.setdefault('FUSIONCHAR_LOG_LEVEL', 'WARNING')


@pytest.fixture
def two_v1_spec():
    """两个 sl2 的 V_1：2:1,2:1"""
    from src.partitions import parse_spec
    return parse_spec("2:1,2:1")


@pytest.fixture
def sl2_example_spec():
    """正文例子 V_2 ⊗ V_2 ⊗ V_1（维数 18）"""
    from src.partitions import parse_spec
    return parse_spec("2:2,2:2,2:1")


@pytest.fixture
def fresh_caches():
    """清空所有记忆表，避免测试间污染"""
    from src.utils import clear_all_caches
    clear_all_caches()
    yield
    clear_all_caches()


@pytest.fixture
def restore_settings():
    """测试结束后恢复被修改的全局配置"""
    from src.config import settings
    saved = settings.model_dump()
    yield settings
    for key, value in saved.items():
        setattr(settings, key, value)
