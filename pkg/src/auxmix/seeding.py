"""Deterministic random stream derivation.

A single integer seed drives every pipeline stage. Each consumer (data
sampling, each batch stream, augmentation, weight init) gets its own
named child stream, so adding or removing one consumer never shifts the
draws seen by another. Streams are derived by hashing the root seed with
a string path, which is stable across platforms and process restarts.
"""

from __future__ import annotations

import hashlib

import numpy as np
import torch


def _path_entropy(root_seed: int, path: tuple[str | int, ...]) -> list[int]:
    digest = hashlib.sha256(repr((int(root_seed),) + tuple(path)).encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 32, 4)]


def seed_sequence(root_seed: int, *path: str | int) -> np.random.SeedSequence:
    return np.random.SeedSequence(_path_entropy(root_seed, path))


def make_rng(root_seed: int, *path: str | int) -> np.random.Generator:
    """Derive an independent numpy Generator for the given stream name."""
    return np.random.default_rng(seed_sequence(root_seed, *path))


def make_torch_generator(root_seed: int, *path: str | int) -> torch.Generator:
    """Derive a CPU torch.Generator for the given stream name."""
    state = seed_sequence(root_seed, *path).generate_state(2, np.uint32)
    gen = torch.Generator(device="cpu")
    gen.manual_seed(int(state[0]) << 32 | int(state[1]))
    return gen
