"""TypeScript syntax feature detection: scanner, parser, cache."""

from .cache import DetectionCache
from .detector import DETECTOR_VERSION, FeatureSet, detect_features
from .scanner import LexError, Token, TokenKind, scan

__all__ = [
    "DETECTOR_VERSION",
    "DetectionCache",
    "FeatureSet",
    "LexError",
    "Token",
    "TokenKind",
    "detect_features",
    "scan",
]
