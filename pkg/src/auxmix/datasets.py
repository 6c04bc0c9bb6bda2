"""Image sources for scenario construction.

Ships a procedurally generated "toy-shapes" dataset: ten glyph classes
rendered at 32x32 with randomized placement, scale, in-plane jitter,
color polarity, and pixel noise. Every glyph has a distinct canonical
orientation (no 90-degree rotational symmetry) so a 4-way rotation
pretext task is learnable on it, and no class is the mirror image of
another, so horizontal flips during training do not collide classes.

Generation is a pure function of a fixed master seed: the dataset is the
same byte-for-byte in every process, which keeps scenario construction
reproducible without any downloads. A CIFAR-10 adapter is provided for
local copies of the python-pickle batches; it never downloads anything.
"""

from __future__ import annotations

import pickle
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DatasetError
from .seeding import make_rng

TOY_SHAPES_SEED = 20240
TOY_SHAPES_SIDE = 32
TOY_SHAPES_PER_CLASS = 256

TOY_SHAPE_CLASSES = (
    "triangle",
    "tee",
    "ell",
    "arrow",
    "half_disk",
    "dagger",
    "vee",
    "steps",
    "ring_gap",
    "exclaim",
)

CIFAR10_CLASSES = (
    "airplane",
    "automobile",
    "bird",
    "cat",
    "deer",
    "dog",
    "frog",
    "horse",
    "ship",
    "truck",
)


@dataclass
class SourceDataset:
    """A pool of images scenarios are sampled from."""

    name: str
    images: np.ndarray  # (N, S, S, 3) float32 in [0, 1]
    labels: np.ndarray  # (N,) int64
    class_names: tuple[str, ...]
    sample_ids: list[str]
    _by_class: dict[int, np.ndarray] = field(default_factory=dict, repr=False)

    def class_index(self, class_name: str) -> int:
        try:
            return self.class_names.index(class_name)
        except ValueError:
            raise DatasetError(
                f"class {class_name!r} not in dataset {self.name!r}; "
                f"available: {', '.join(self.class_names)}"
            ) from None

    def indices_of_class(self, class_name: str) -> np.ndarray:
        k = self.class_index(class_name)
        if k not in self._by_class:
            self._by_class[k] = np.flatnonzero(self.labels == k)
        return self._by_class[k]

    @property
    def side(self) -> int:
        return int(self.images.shape[1])


# ---------------------------------------------------------------------------
# Toy-shapes rendering
# ---------------------------------------------------------------------------

def _glyph_mask(name: str, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Evaluate the canonical glyph predicate on (x, y) with y pointing up."""
    if name == "triangle":
        # Isoceles, apex up.
        return (y <= 0.65) & (y >= -0.55) & (np.abs(x) <= 0.55 * (0.65 - y) / 1.2)
    if name == "tee":
        bar = (np.abs(x) <= 0.62) & (y >= 0.32) & (y <= 0.62)
        stem = (np.abs(x) <= 0.15) & (y >= -0.62) & (y <= 0.32)
        return bar | stem
    if name == "ell":
        vert = (x >= -0.62) & (x <= -0.32) & (np.abs(y) <= 0.62)
        horiz = (x >= -0.62) & (x <= 0.62) & (y >= -0.62) & (y <= -0.32)
        return vert | horiz
    if name == "arrow":
        # Points right: triangular head plus a shaft.
        head = (x >= 0.05) & (x <= 0.65) & (np.abs(y) <= 0.55 * (0.65 - x) / 0.6)
        shaft = (x >= -0.65) & (x <= 0.05) & (np.abs(y) <= 0.14)
        return head | shaft
    if name == "half_disk":
        # Flat side up.
        return (x * x + y * y <= 0.55 **2) & (y <= 0.0)
    if name == "dagger":
        stem = (np.abs(x) <= 0.14) & (y >= -0.62) & (y <= 0.62)
        cross = (np.abs(x) <= 0.50) & (y >= 0.18) & (y <= 0.42)
        return stem | cross
    if name == "vee":
        # Hollow V: widening band open at the top.
        half_width = 0.45 * (y + 0.62)
        outer = np.abs(x) <= half_width
        inner = np.abs(x) <= half_width - 0.24
        return outer & ~inner & (y <= 0.60) & (y >= -0.62)
    if name == "steps":
        # Skyline ascending to the right (chiral).
        r1 = (x >= -0.65) & (x <= -0.20) & (y >= -0.65) & (y <= -0.25)
        r2 = (x >= -0.20) & (x <= 0.25) & (y >= -0.65) & (y <= 0.20)
        r3 = (x >= 0.25) & (x <= 0.65) & (y >= -0.65) & (y <= 0.60)
        return r1 | r2 | r3
    if name == "ring_gap":
        r2 = x * x + y * y
        ring = (r2 >= 0.30 **2) & (r2 <= 0.58 **2)
        gap = np.abs(np.arctan2(x, y)) <= 0.5  # wedge around "up"
        return ring & ~gap
    if name == "exclaim":
        bar = (np.abs(x) <= 0.14) & (y >= -0.05) & (y <= 0.65)
        dot = x * x + (y + 0.45) **2 <= 0.16 **2
        return bar | dot
    raise DatasetError(f"unknown toy glyph {name!r}")


def render_toy_shapes(
    class_name: str,
    count: int,
    side: int = TOY_SHAPES_SIDE,
    rng: np.random.Generator | None = None,
    noise_sigma: float = 0.07,
) -> np.ndarray:
    """Render `count` randomized instances of one glyph class.

    Each instance gets its own placement, scale, small in-plane rotation,
    foreground/background colors with random polarity, and pixel noise.
    Rendering is supersampled 2x and average-pooled for soft edges.
    Returns (count, side, side, 3) float32 in [0, 1].
    """
    if rng is None:
        rng = np.random.default_rng(0)
    n = count
    ss = 2 * side

    # Image-space coordinates in [-1, 1], y up.
    lin = (np.arange(ss) + 0.5) / ss * 2.0 - 1.0
    gx = lin[None, None, :]
    gy = -lin[None, :, None]

    cx = rng.uniform(-0.22, 0.22, n)[:, None, None]
    cy = rng.uniform(-0.22, 0.22, n)[:, None, None]
    base = rng.uniform(0.55, 0.85, n)
    sx = (base * rng.uniform(0.85, 1.15, n))[:, None, None]
    sy = (base * rng.uniform(0.85, 1.15, n))[:, None, None]
    theta = rng.uniform(-0.22, 0.22, n)[:, None, None]

    # Map image coordinates into the glyph's canonical frame.
    ux = (gx - cx) / sx
    uy = (gy - cy) / sy
    cos_t, sin_t = np.cos(theta), np.sin(theta)
    canon_x = cos_t * ux + sin_t * uy
    canon_y = -sin_t * ux + cos_t * uy

    mask = _glyph_mask(class_name, canon_x, canon_y).astype(np.float32)
    # 2x2 average pool back down to the target side.
    mask = mask.reshape(n, side, 2, side, 2).mean(axis=(2, 4))

    lo = rng.uniform(0.05, 0.40, (n, 1, 1, 3)).astype(np.float32)
    hi = rng.uniform(0.60, 0.95, (n, 1, 1, 3)).astype(np.float32)
    flip = rng.random(n) < 0.5
    fg = np.where(flip[:, None, None, None], lo, hi)
    bg = np.where(flip[:, None, None, None], hi, lo)

    img = bg + mask[..., None] * (fg - bg)
    img = img + rng.normal(0.0, noise_sigma, img.shape)
    return np.clip(img, 0.0, 1.0).astype(np.float32)


def _build_toy_shapes() -> SourceDataset:
    images = []
    labels = []
    ids = []
    for k, name in enumerate(TOY_SHAPE_CLASSES):
        rng = make_rng(TOY_SHAPES_SEED, "toy-shapes", name)
        imgs = render_toy_shapes(name, TOY_SHAPES_PER_CLASS, TOY_SHAPES_SIDE, rng)
        images.append(imgs)
        labels.append(np.full(TOY_SHAPES_PER_CLASS, k, dtype=np.int64))
        ids.extend(f"toy-shapes/{name}/{i:04d}" for i in range(TOY_SHAPES_PER_CLASS))
    return SourceDataset(
        name="toy-shapes",
        images=np.concatenate(images, axis=0),
        labels=np.concatenate(labels, axis=0),
        class_names=TOY_SHAPE_CLASSES,
        sample_ids=ids,
    )


# ---------------------------------------------------------------------------
# CIFAR-10 adapter (local files only, no downloads)
# ---------------------------------------------------------------------------

def _cifar10_dir() -> Path:
    import os

    root = Path(os.environ.get("AUXMIX_DATA_DIR", "data"))
    return root / "cifar-10-batches-py"


def _build_cifar10() -> SourceDataset:
    d = _cifar10_dir()
    if not d.is_dir():
        raise DatasetError(
            f"cifar10 adapter: {d} not found; place the python-pickle batches "
            "there (or set AUXMIX_DATA_DIR). auxmix never downloads data."
        )
    images, labels, ids = [], [], []
    files = [f"data_batch_{i}" for i in range(1, 6)] + ["test_batch"]
    for fname in files:
        path = d / fname
        if not path.exists():
            raise DatasetError(f"cifar10 adapter: missing batch file {path}")
        with open(path, "rb") as f:
            batch = pickle.load(f, encoding="bytes")
        data = batch[b"data"].reshape(-1, 3, 32, 32).transpose(0, 2, 3, 1)
        images.append(data.astype(np.float32) / 255.0)
        labels.append(np.asarray(batch[b"labels"], dtype=np.int64))
        ids.extend(f"cifar10/{fname}/{i:05d}" for i in range(len(batch[b"labels"])))
    return SourceDataset(
        name="cifar10",
        images=np.concatenate(images, axis=0),
        labels=np.concatenate(labels, axis=0),
        class_names=CIFAR10_CLASSES,
        sample_ids=ids,
    )


_BUILDERS = {
    "toy-shapes": _build_toy_shapes,
    "cifar10": _build_cifar10,
}

_CACHE: dict[str, SourceDataset] = {}


def get_dataset(name: str) -> SourceDataset:
    """Load a registered dataset by id. Results are cached per process."""
    if name not in _BUILDERS:
        raise DatasetError(
            f"unknown dataset id {name!r}; available: {', '.join(sorted(_BUILDERS))}"
        )
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


def dataset_available(name: str) -> bool:
    """True if get_dataset(name) would succeed without error."""
    if name == "cifar10":
        return _cifar10_dir().is_dir()
    return name in _BUILDERS
