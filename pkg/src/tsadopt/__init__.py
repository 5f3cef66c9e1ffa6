"""Measure when git-hosted projects first adopt TypeScript syntax features
and compiler versions, relative to each release date."""

__version__ = "0.1.0"
