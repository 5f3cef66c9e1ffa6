"""Content-addressed detection cache.

One JSON line per content hash: {hash, flags bitmask, parsed_ok,
detector_version}. The file is append-only; on load the last entry per
hash wins, entries from other detector versions or corrupt lines are
dropped. Entries are keyed by content, so concurrent writers can only
race to record the same value.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .detector import DETECTOR_VERSION, FeatureSet, detect_features


class DetectionCache:
    def __init__(self, path: Path | str | None = None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[str, FeatureSet] = {}
        self._lock = threading.Lock()
        self.parse_count = 0
        self.hit_count = 0
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        try:
            lines = self.path.read_text(encoding="utf-8").splitlines()
        except OSError:
            return
        for line in lines:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                if rec.get("detector_version") != DETECTOR_VERSION:
                    continue
                fs = FeatureSet.from_bitmask(int(rec["flags"]), bool(rec["parsed_ok"]))
                self._entries[str(rec["hash"])] = fs
            except (ValueError, KeyError, TypeError):
                continue  # corrupt entry: recomputed and re-appended on demand

    def _append(self, content_hash: str, fs: FeatureSet) -> None:
        if self.path is None:
            return
        rec = {
            "hash": content_hash,
            "flags": fs.to_bitmask(),
            "parsed_ok": fs.parsed_ok,
            "detector_version": DETECTOR_VERSION,
        }
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        except OSError:
            pass  # cache I/O failure degrades to uncached operation

    def detect(self, content_hash: str, source: str) -> FeatureSet:
        """Cached detection: parse each unique content exactly once."""
        with self._lock:
            hit = self._entries.get(content_hash)
            if hit is not None:
                self.hit_count += 1
                return hit
        fs = detect_features(source)
        with self._lock:
            self.parse_count += 1
            self._entries[content_hash] = fs
        self._append(content_hash, fs)
        return fs

    def __len__(self) -> int:
        return len(self._entries)
