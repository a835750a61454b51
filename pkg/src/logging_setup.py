"""
日志配置
标准库 logging 与 loguru 统一输出到 stderr，stdout 只留给计算结果
"""
import logging
import sys

from loguru import logger

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "WARNING", json_format: bool = False) -> None:
    """
    初始化日志

    Args:
        level: 日志级别
        json_format: 是否以 JSON 格式输出 loguru 日志
    """
    level = level.upper()

    logging.basicConfig(
        format=LOG_FORMAT,
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        force=True,
    )

    logger.remove()
    logger.add(sys.stderr, level=level, serialize=json_format)
