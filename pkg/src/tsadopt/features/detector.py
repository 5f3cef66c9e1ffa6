"""Feature detection entry point: source text in, feature flags out."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..releases import FEATURE_IDS
from .parser import parse_flags
from .scanner import LexError, scan

# Bump whenever detection rules change; invalidates every cache entry.
DETECTOR_VERSION = "1"

_FEATURE_BITS = {fid: 1 << i for i, fid in enumerate(FEATURE_IDS)}


@dataclass(frozen=True)
class FeatureSet:
    """Per-file detection result over f0..f12.

    A file that failed to parse carries no flags at all.
    """

    flags: frozenset[str] = field(default_factory=frozenset)
    parsed_ok: bool = True

    def __post_init__(self):
        if not self.parsed_ok and self.flags:
            raise ValueError("unparsed files cannot carry feature flags")
        unknown = self.flags - set(FEATURE_IDS)
        if unknown:
            raise ValueError(f"unknown feature ids: {sorted(unknown)}")

    def to_bitmask(self) -> int:
        mask = 0
        for fid in self.flags:
            mask |= _FEATURE_BITS[fid]
        return mask

    @classmethod
    def from_bitmask(cls, mask: int, parsed_ok: bool) -> "FeatureSet":
        flags = frozenset(fid for fid, bit in _FEATURE_BITS.items() if mask & bit)
        return cls(flags, parsed_ok)


def detect_features(source: str) -> FeatureSet:
    """Detect which studied syntax features a TypeScript source uses.

    Pure function of the source bytes: lexical failures and unrecoverable
    top-level parse failures yield parsed_ok=False with no flags.
    """
    try:
        tokens = scan(source)
    except LexError:
        return FeatureSet(frozenset(), False)
    flags, ok = parse_flags(tokens)
    if not ok:
        return FeatureSet(frozenset(), False)
    return FeatureSet(flags, True)
