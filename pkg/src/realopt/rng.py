"""Seeded random streams with stable, process-independent labels."""

from __future__ import annotations

import zlib

import numpy as np


def seeded_stream(seed: int, label: str) -> np.random.Generator:
    """Return a generator derived from ``seed`` and a named substream.

    The label is hashed with CRC32 so the mapping is stable across
    processes and Python versions (unlike the builtin ``hash``).
    """
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    key = zlib.crc32(label.encode("utf-8"))
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed), spawn_key=(key,)))
