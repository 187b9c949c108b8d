"""运行配置：JSON 默认值文件 < 环境变量（UVT_ 前缀）< 命令行参数。"""

from __future__ import annotations

from pathlib import Path
from typing import List, Optional, Tuple, Type

from pydantic import Field, field_validator
from pydantic_settings import (
    BaseSettings,
    JsonConfigSettingsSource,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from .cartan import DominantWeight

# 配置文件路径
CONFIG_FILE = Path(__file__).resolve().parent.parent / "uvt_config.json"

COMMANDS = ("crystal", "check", "global", "datum")
FORMATS = ("dot", "json", "tsv")


class RunConfig(BaseSettings):
    """一次命令行运行的全部参数"""

    model_config = SettingsConfigDict(env_prefix="UVT_", extra="ignore", json_file=CONFIG_FILE)

    command: str = Field(default="crystal", description="子命令")
    datum: Optional[Path] = Field(default=None, description="Cartan 数据 JSON 文件")
    hw: Optional[str] = Field(default=None, description="最高权 λ，如 1,0")
    hw2: Optional[str] = Field(default=None, description="第二个最高权 μ")
    depth: Optional[int] = Field(default=None, description="深度窗口 |ξ| ≤ depth")
    depth_cap: Optional[int] = Field(default=None, description="覆盖按秩的深度上限")
    format: Optional[str] = Field(default=None, description="输出格式 dot/json/tsv")
    output: Optional[Path] = Field(default=None, description="输出文件，缺省写到标准输出")
    suites: List[str] = Field(default_factory=list, description="要运行的检查套件")
    seed: int = Field(default=0, description="随机检查的种子")
    degree_bound: Optional[int] = Field(default=None, description="全局基求解的 v 次数界")
    binf: bool = Field(default=False, description="使用 B(∞) 而不是 B(λ)")
    t1_compare: bool = Field(default=False, description="附加 t=1 对照列")
    cache_dir: Optional[Path] = Field(default=None, description="权空间代表元的持久化目录")
    verbose: bool = Field(default=False, description="输出 DEBUG 日志")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, env_settings, dotenv_settings, JsonConfigSettingsSource(settings_cls)

    @field_validator("command")
    @classmethod
    def _check_command(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"未知命令 {value!r}，可选：{', '.join(COMMANDS)}")
        return value

    @field_validator("depth", "depth_cap", "degree_bound")
    @classmethod
    def _check_non_negative(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 0:
            raise ValueError(f"必须 ≥ 0，得到 {value}")
        return value

    @field_validator("format")
    @classmethod
    def _check_format(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in FORMATS:
            raise ValueError(f"不支持的格式 {value!r}，可选：{', '.join(FORMATS)}")
        return value

    # ------------------------------------------------------------------
    # 派生值
    # ------------------------------------------------------------------
    def lam(self) -> Optional[DominantWeight]:
        return DominantWeight.parse(self.hw) if self.hw else None

    def mu(self) -> Optional[DominantWeight]:
        return DominantWeight.parse(self.hw2) if self.hw2 else None

    def format_or(self, default: str, allowed: Tuple[str, ...]) -> str:
        """取出格式并核对当前命令是否支持。

        Raises:
            ValueError: 格式不适用于当前命令
        """
        fmt = self.format or default
        if fmt not in allowed:
            raise ValueError(f"命令 {self.command} 不支持格式 {fmt!r}，可选：{', '.join(allowed)}")
        return fmt

    def require_datum(self) -> Path:
        if self.datum is None:
            raise ValueError("缺少必需的参数: --datum")
        return self.datum
