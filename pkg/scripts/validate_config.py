#!/usr/bin/env python3
"""
配置验证工具
检查 FUSIONCHAR_ 环境变量（或 .env）给出的运行配置是否合法
"""
import os
import sys
from pathlib import Path
from typing import List

# 设置 PYTHONPATH 以便导入 src 模块
ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR))

RANK_METHODS = ("bareiss", "sympy")
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


def check_env_vars() -> List[str]:
    """列出已设置的 FUSIONCHAR_ 变量"""
    return sorted(k for k in os.environ if k.startswith("FUSIONCHAR_"))


def check_limits(settings) -> List[str]:
    """检查资源上限与扫描范围"""
    errors = []
    if settings.threads < 0:
        errors.append(f"FUSIONCHAR_THREADS 不能为负: {settings.threads}")
    if settings.max_monomials < 1:
        errors.append(f"FUSIONCHAR_MAX_MONOMIALS 必须为正: {settings.max_monomials}")
    if settings.memo_cap < 1:
        errors.append(f"FUSIONCHAR_MEMO_CAP 必须为正: {settings.memo_cap}")
    if settings.mode_margin < 0:
        errors.append(f"FUSIONCHAR_MODE_MARGIN 不能为负: {settings.mode_margin}")
    if settings.sweep_max_rank < 2:
        errors.append(f"FUSIONCHAR_SWEEP_MAX_RANK 至少为 2: {settings.sweep_max_rank}")
    if settings.sweep_max_level < 1:
        errors.append(f"FUSIONCHAR_SWEEP_MAX_LEVEL 至少为 1: {settings.sweep_max_level}")
    if settings.sweep_max_boxes > settings.sweep_boxes_cap:
        errors.append(
            f"FUSIONCHAR_SWEEP_MAX_BOXES = {settings.sweep_max_boxes} 超过上限 {settings.sweep_boxes_cap}"
        )
    if 2 * settings.sweep_max_factors > settings.sweep_boxes_cap:
        errors.append(
            f"FUSIONCHAR_SWEEP_BOXES_CAP = {settings.sweep_boxes_cap} 小于融合积扫描需要的 "
            f"2 * FUSIONCHAR_SWEEP_MAX_FACTORS = {2 * settings.sweep_max_factors}"
        )
    return errors


def check_backends(settings) -> List[str]:
    """检查精确秩后端与日志级别"""
    errors = []
    if settings.rank_method not in RANK_METHODS:
        errors.append(f"FUSIONCHAR_RANK_METHOD 应为 {' | '.join(RANK_METHODS)}: {settings.rank_method}")
    elif settings.rank_method == "sympy":
        try:
            import sympy  # noqa: F401
        except ImportError:
            errors.append("FUSIONCHAR_RANK_METHOD=sympy 但 sympy 未安装")
    if settings.log_level.upper() not in LOG_LEVELS:
        errors.append(f"FUSIONCHAR_LOG_LEVEL 无效: {settings.log_level}")
    return errors


def main():
    """主函数"""
    print("🔍 开始配置验证...\n")

    # 加载 .env
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        print("⚠️  python-dotenv 未安装，跳过 .env 加载")

    present = check_env_vars()
    if present:
        print("📋 已设置的变量:")
        for name in present:
            print(f"  • {name}={os.environ[name]}")
    else:
        print("ℹ️  未设置 FUSIONCHAR_ 变量，全部使用默认值")

    try:
        from src.config import Settings
        settings = Settings()
    except Exception as e:
        print(f"\n❌ 配置解析失败: {e}")
        return 1

    errors = check_limits(settings) + check_backends(settings)

    print("\n" + "=" * 50)
    if errors:
        print("❌ 配置验证失败:")
        for error in errors:
            print(f"  • {error}")
        return 1

    print("✅ 配置验证通过")
    print(f"  线程数: {settings.worker_count()}")
    print(f"  秩后端: {settings.rank_method}")
    print(f"  单项式上限: {settings.max_monomials}")
    print("\n运行以下命令开始：")
    print("  ./scripts/fusionchar.sh verify --format text")
    return 0


if __name__ == "__main__":
    sys.exit(main())
