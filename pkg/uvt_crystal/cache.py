"""权空间代表元的缓存：进程内字典加可选的 JSON 持久化。"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import threading
from pathlib import Path
from typing import Any, Callable, Dict, Hashable, List, Optional

logger = logging.getLogger(__name__)

CACHE_ENV = "UVT_CACHE_DIR"


class BasisCache:
    """按键缓存计算结果，每个键只构造一次。

    持久化层只保存代表元（JSON 可序列化的列表），重建时由调用方重新计算 Gram 子式。
    """

    def __init__(self, directory: Optional[str | Path] = None) -> None:
        self._lock = threading.Lock()
        self._entries: Dict[Hashable, Any] = {}
        self._key_locks: Dict[Hashable, threading.Lock] = {}
        self._directory: Optional[Path] = Path(directory) if directory else None

    @property
    def directory(self) -> Optional[Path]:
        return self._directory

    def set_directory(self, directory: Optional[str | Path]) -> None:
        with self._lock:
            self._directory = Path(directory) if directory else None
        if self._directory is not None:
            self._directory.mkdir(parents=True, exist_ok=True)
            logger.info("权空间缓存目录：%s", self._directory)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self._key_locks.clear()

    def get_or_build(self, key: Hashable, builder: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._entries:
                return self._entries[key]
            key_lock = self._key_locks.setdefault(key, threading.Lock())
        with key_lock:
            with self._lock:
                if key in self._entries:
                    return self._entries[key]
            value = builder()
            with self._lock:
                self._entries[key] = value
            return value

    # ------------------------------------------------------------------
    # 持久化
    # ------------------------------------------------------------------
    def _path(self, name: str) -> Optional[Path]:
        if self._directory is None:
            return None
        digest = hashlib.sha256(name.encode("utf-8")).hexdigest()
        return self._directory / f"{digest}.json"

    def load_words(self, name: str) -> Optional[List[List[Any]]]:
        path = self._path(name)
        if path is None or not path.exists():
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                payload = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            logger.warning("缓存文件 %s 无法读取：%s", path, exc)
            return None
        if payload.get("key") != name:
            return None
        logger.info("缓存命中：%s", name)
        return payload.get("reps")

    def store_words(self, name: str, reps: List[List[Any]]) -> None:
        path = self._path(name)
        if path is None:
            return
        tmp = path.with_suffix(".tmp")
        try:
            with open(tmp, "w", encoding="utf-8") as f:
                json.dump({"key": name, "reps": reps}, f)
            os.replace(tmp, path)
        except OSError as exc:
            logger.warning("缓存文件 %s 写入失败：%s", path, exc)


_default_cache = BasisCache(os.environ.get(CACHE_ENV) or None)


def default_cache() -> BasisCache:
    return _default_cache


def configure_cache(directory: Optional[str | Path]) -> BasisCache:
    _default_cache.set_directory(directory)
    return _default_cache
