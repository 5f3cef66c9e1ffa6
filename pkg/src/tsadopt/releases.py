"""Registry of the studied TypeScript versions and syntax features.

Thirteen syntactic features across eight 4.x compiler releases, each
feature tied to the release that introduced it. Adoption offsets are
measured in days relative to the formal release date (day zero);
negative offsets mean pre-release (beta/RC) adoption.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, timezone

FEATURE_IDS = (
    "f0", "f1", "f2", "f3", "f4", "f5", "f6",
    "f7", "f8", "f9", "f10", "f11", "f12",
)

FEATURE_NAMES: dict[str, str] = {
    "f0": "satisfies operator",
    "f1": "accessor property",
    "f2": "extends constraint on infer",
    "f3": "variance annotations in and out",
    "f4": "type import modifier",
    "f5": "import assertions",
    "f6": "static blocks in classes",
    "f7": "override modifier",
    "f8": "abstract construct signature",
    "f9": "template literal types",
    "f10": "key remapping in mapped types",
    "f11": "labeled tuple elements",
    "f12": "short-circuiting assignment",
}


@dataclass(frozen=True)
class Release:
    version: str
    release_date: date
    features: tuple[str, ...]


RELEASES: tuple[Release, ...] = (
    Release("4.9", date(2022, 11, 15), ("f0", "f1")),
    Release("4.7", date(2022, 5, 24), ("f2", "f3")),
    Release("4.5", date(2021, 11, 17), ("f4", "f5")),
    Release("4.4", date(2021, 8, 26), ("f6",)),
    Release("4.3", date(2021, 5, 26), ("f7",)),
    Release("4.2", date(2021, 2, 23), ("f8",)),
    Release("4.1", date(2020, 11, 19), ("f9", "f10")),
    Release("4.0", date(2020, 8, 20), ("f11", "f12")),
)

VERSION_RELEASE_DATES: dict[str, date] = {r.version: r.release_date for r in RELEASES}

FEATURE_RELEASE_DATES: dict[str, date] = {
    fid: r.release_date for r in RELEASES for fid in r.features
}

FEATURE_VERSIONS: dict[str, str] = {
    fid: r.version for r in RELEASES for fid in r.features
}


def release_date_for(subject: str) -> date:
    """Release date for a feature id ('f0'..'f12') or version string ('4.9')."""
    if subject in FEATURE_RELEASE_DATES:
        return FEATURE_RELEASE_DATES[subject]
    if subject in VERSION_RELEASE_DATES:
        return VERSION_RELEASE_DATES[subject]
    raise KeyError(f"unknown subject: {subject!r}")


def offset_days(first_use: datetime, release: date) -> int:
    """Whole-day offset of a first-use instant relative to a release date.

    Computed on UTC calendar days: same UTC day as the release is day 0,
    any instant on an earlier UTC day is negative.
    """
    if first_use.tzinfo is None:
        first_use = first_use.replace(tzinfo=timezone.utc)
    return (first_use.astimezone(timezone.utc).date() - release).days
