"""Checksummed JSON result cache keyed by (n, kind, label, degree).

Entries live under the cache directory as one file each; a sha256 checksum
over the canonical payload encoding detects corruption, in which case the
entry is discarded (the caller recomputes and overwrites).
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from pathlib import Path

ENV_VAR = "KHECKE_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "khecke"


def _encode(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


class ResultCache:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root else default_cache_dir()

    def path(self, n: int, kind: str, label: str, degree: int) -> Path:
        safe = label if label else "empty"
        return self.root / f"n{n}" / kind / f"{safe}.d{degree}.json"

    def store(self, n: int, kind: str, label: str, degree: int, payload) -> Path:
        body = _encode(payload)
        record = {"checksum": hashlib.sha256(body.encode()).hexdigest(),
                  "payload": payload}
        path = self.path(n, kind, label, degree)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(record, sort_keys=True), "utf-8")
            tmp.replace(path)
        except OSError as exc:
            raise OSError(f"cache write failed at {path}: {exc}") from exc
        return path

    def load(self, n: int, kind: str, label: str, degree: int):
        """Payload, or None when missing/corrupt (corrupt entries warn)."""
        path = self.path(n, kind, label, degree)
        if not path.exists():
            return None
        try:
            record = json.loads(path.read_text("utf-8"))
            body = _encode(record["payload"])
            if hashlib.sha256(body.encode()).hexdigest() != record["checksum"]:
                raise ValueError("checksum mismatch")
            return record["payload"]
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"warning: corrupt cache entry {path} ({exc}); recomputing",
                  file=sys.stderr)
            return None
        except OSError as exc:
            print(f"warning: cannot read cache entry {path}: {exc}",
                  file=sys.stderr)
            return None
