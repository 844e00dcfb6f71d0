import logging
import sys
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseSettings):
    """
    求解器配置，读取 BNS_ 前缀的环境变量以及当前目录的 .env 文件
    """

    model_config = SettingsConfigDict(env_prefix="BNS_", env_file=".env", extra="ignore")

    log_level: str = "INFO"
    log_format: str = LOG_FORMAT
    # 置换表: 记录已知失败的 (棋盘, 剩余预算)
    memoize: bool = True
    prune_maximal: bool = False
    bench_workers: int = Field(default=1, ge=1)
    oracle_max_buttons: int = Field(default=16, ge=0)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def setup_logging(level: Optional[str] = None) -> None:
    """
    配置日志，输出到 stderr（stdout 只输出结果文本）

    Args:
        level: 日志级别，None 表示使用配置中的级别
    """
    settings = get_settings()
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )
