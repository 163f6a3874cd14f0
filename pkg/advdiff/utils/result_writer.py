"""
Result Writer

把结果表写成 CSV 或 JSON，输出到文件或 stdout
"""

import json
import math
import sys
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from advdiff import __version__
from advdiff.utils.logger import logger


def _clean(value: Any) -> Any:
    """NaN/inf 在 JSON 中写作 null"""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if hasattr(value, "item"):
        return _clean(value.item())
    return value


class ResultWriter:
    """结果输出管理器"""

    def __init__(self, output_path: Optional[str] = None, fmt: str = "csv"):
        """
        初始化输出器

        Args:
            output_path: 输出文件路径，None 表示写到 stdout
            fmt: "csv" 或 "json"
        """
        if fmt not in ("csv", "json"):
            raise ValueError(f"unsupported output format: {fmt}")
        self.output_path = output_path
        self.fmt = fmt

    def render(self, df: pd.DataFrame, *, config: dict, key: str = "rows") -> str:
        """渲染为文本，同样的输入总是得到逐字节相同的输出"""
        if self.fmt == "csv":
            return df.to_csv(index=False, lineterminator="\n")
        records = [
            {column: _clean(value) for column, value in row.items()}
            for row in df.to_dict(orient="records")
        ]
        payload = {"version": __version__, "config": config, key: records}
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"

    def write(self, df: pd.DataFrame, *, config: dict, key: str = "rows") -> str:
        """
        写出结果

        Returns:
            str: 输出位置（文件路径或 "<stdout>"）
        """
        text = self.render(df, config=config, key=key)
        if self.output_path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return "<stdout>"

        path = Path(self.output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"已写出 {len(df)} 行结果到 {path}")
        return str(path)
