"""A small content-addressed result cache for long-running CLI jobs.

Keys are SHA-256 hashes over a canonical JSON rendering of the job inputs
plus the package version, so changing any input or upgrading the package
misses cleanly.  Values are the exact output byte strings; replaying a hit
reproduces the artifact bit-for-bit.  Corrupt entries are treated as
misses, and an unwritable directory degrades to no caching with a warning.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
from pathlib import Path

ENV_CACHE_DIR = "HEREDIT_CACHE_DIR"


def job_key(payload: dict) -> str:
    """Stable hash of a JSON-serializable description of the job inputs."""
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: Path | str | None):
        self.directory = Path(directory) if directory else None
        self._warned = False

    @staticmethod
    def from_options(flag_value: str | None, disabled: bool = False) -> "ResultCache":
        if disabled:
            return ResultCache(None)
        return ResultCache(flag_value or os.environ.get(ENV_CACHE_DIR) or None)

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _warn(self, message: str) -> None:
        if not self._warned:
            print(f"warning: {message}; continuing without cache", file=sys.stderr)
            self._warned = True

    def _path(self, key: str) -> Path:
        assert self.directory is not None
        return self.directory / f"{key}.json"

    def get(self, key: str) -> str | None:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            entry = json.loads(path.read_text())
            payload = entry["payload"]
            if not isinstance(payload, str):
                raise ValueError("payload must be a string")
            return payload
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError):
            return None  # corrupt entry: recompute

    def put(self, key: str, payload: str) -> bool:
        if not self.enabled:
            return False
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            # atomic rename keeps concurrent same-key writers safe
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as handle:
                json.dump({"key": key, "payload": payload}, handle)
            os.replace(tmp, self._path(key))
            return True
        except OSError as exc:
            self._warn(f"cache directory {self.directory} not writable ({exc})")
            return False
