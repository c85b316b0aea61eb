"""Deterministic random streams for reproducible parallel resampling.

Every random draw in the package flows from an :class:`RngStream`, a value
identifying one node of a seed tree. Streams are derived by *path*, never by
spawn order, so any worker can reconstruct the stream for a given
(cell, replication) without coordination and results cannot depend on how
work was scheduled across threads or processes.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1


def _label64(text: str) -> int:
    """Stable 64-bit integer for a string label (no process salt)."""
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "big")


@dataclass(frozen=True)
class RngStream:
    """A counter-style random stream identified by an integer path.

    The path is fed to :class:`numpy.random.SeedSequence`, and generators are
    backed by the counter-based Philox bit generator. Equal paths give
    bitwise-identical draw sequences on every run, platform, and schedule.
    """

    path: tuple[int, ...]

    @classmethod
    def root(cls, seed: int) -> "RngStream":
        return cls((int(seed) & _MASK64,))

    def child(self, *components: int | str) -> "RngStream":
        """Derive a sub-stream; components may be ints or string labels."""
        parts = tuple(
            _label64(c) if isinstance(c, str) else int(c) & _MASK64
            for c in components
        )
        return RngStream(self.path + parts)

    def seed_sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.path)

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        return np.random.Generator(np.random.Philox(self.seed_sequence()))

    def key64(self) -> np.uint64:
        """64-bit key for the in-kernel counter generator (see _kernels)."""
        state = self.child("kernel-key").seed_sequence().generate_state(1, np.uint64)
        return np.uint64(state[0])
