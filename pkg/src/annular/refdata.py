"""Bundled integer-sequence snapshots and an optional remote fetcher.

Snapshots of the relevant OEIS sequences ship inside the package so every
cross-check runs with zero network.  fetch_sequence can refresh a sequence
from oeis.org when the network is available; fetched values must agree with
the bundled snapshot on every overlapping index, anything else is a hard
error rather than a silent drift.
"""

from __future__ import annotations

import os
import urllib.request
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ReferenceMismatchError

__all__ = [
    "ALLOWED_SEQUENCES",
    "NO_NETWORK_ENV",
    "ReferenceSequence",
    "bundled_sequence",
    "fetch_sequence",
    "parse_bfile",
]

ALLOWED_SEQUENCES = frozenset(
    {"A002995", "A003239", "A003441", "A007595", "A047996", "A241926"}
)

#: Set (to any non-empty value) to skip all network access.
NO_NETWORK_ENV = "ANNULAR_NO_NETWORK"


@dataclass(frozen=True)
class ReferenceSequence:
    """An integer sequence with its first index and where it came from."""

    id: str
    offset: int
    values: tuple[int, ...]
    source: str  # "bundled" or "fetched"

    def value(self, index: int) -> int:
        if not self.offset <= index < self.offset + len(self.values):
            raise IndexError(
                f"{self.id} holds indices {self.offset}.."
                f"{self.offset + len(self.values) - 1}, asked for {index}"
            )
        return self.values[index - self.offset]

    def triangle(self, row: int, col: int) -> int:
        """Entry (row, col) of a triangle flattened as row*(row+1)/2 + col."""
        if not 0 <= col <= row:
            raise IndexError(f"triangle entry ({row}, {col}) out of range")
        return self.value(row * (row + 1) // 2 + col)

    def __len__(self) -> int:
        return len(self.values)


def parse_bfile(text: str) -> tuple[int, tuple[int, ...]]:
    """Parse b-file text: one "index value" pair per line.

    Blank lines and lines starting with "#" are ignored.  Indices must be
    consecutive; the first one is the sequence offset.
    """
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
    if not pairs:
        raise ValueError("b-file has no data lines")
    offset = pairs[0][0]
    for want, (index, _) in enumerate(pairs, start=offset):
        if index != want:
            raise ValueError(f"non-consecutive index {index}, expected {want}")
    return offset, tuple(value for _, value in pairs)


def _check_allowed(seq_id: str) -> None:
    if seq_id not in ALLOWED_SEQUENCES:
        raise ValueError(
            f"unknown sequence {seq_id!r}; available: {', '.join(sorted(ALLOWED_SEQUENCES))}"
        )


def bundled_sequence(seq_id: str) -> ReferenceSequence:
    """Load the snapshot shipped with the package."""
    _check_allowed(seq_id)
    text = resources.files("annular").joinpath(f"_data/{seq_id}.txt").read_text()
    offset, values = parse_bfile(text)
    return ReferenceSequence(seq_id, offset, values, "bundled")


def _cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(
        os.path.expanduser("~"), ".cache"
    )
    return Path(base) / "annular"


def _check_overlap(bundle: ReferenceSequence, fetched: ReferenceSequence) -> None:
    lo = max(bundle.offset, fetched.offset)
    hi = min(bundle.offset + len(bundle.values), fetched.offset + len(fetched.values))
    for index in range(lo, hi):
        if bundle.value(index) != fetched.value(index):
            raise ReferenceMismatchError(
                f"{bundle.id}: fetched value at index {index} is "
                f"{fetched.value(index)}, bundled snapshot has {bundle.value(index)}"
            )


def fetch_sequence(seq_id: str, *, timeout: float = 10.0) -> ReferenceSequence:
    """Fetch a sequence's b-file from oeis.org, with caching and fallback.

    With the NO_NETWORK_ENV variable set, or on any network failure, the
    bundled snapshot is returned (the failure case emits a warning).  A
    successful fetch is cached on disk and compared against the bundle on
    all overlapping indices; a disagreement raises ReferenceMismatchError.
    """
    _check_allowed(seq_id)
    bundle = bundled_sequence(seq_id)
    if os.environ.get(NO_NETWORK_ENV):
        return bundle
    cache_file = _cache_dir() / f"b{seq_id[1:]}.txt"
    if cache_file.exists():
        text = cache_file.read_text()
    else:
        url = f"https://oeis.org/{seq_id}/b{seq_id[1:]}.txt"
        try:
            with urllib.request.urlopen(url, timeout=timeout) as response:
                text = response.read().decode("utf-8")
        except OSError as exc:
            warnings.warn(
                f"could not fetch {seq_id} ({exc}); using the bundled snapshot",
                stacklevel=2,
            )
            return bundle
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(text)
    offset, values = parse_bfile(text)
    fetched = ReferenceSequence(seq_id, offset, values, "fetched")
    _check_overlap(bundle, fetched)
    return fetched
