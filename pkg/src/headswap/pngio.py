"""PNG and JSON persistence: 8-bit RGB images, indexed single-channel layouts,
metadata sidecars.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import ShapeError, TaxonomyError
from .layout import NUM_CLASSES

# Display palette for indexed layout PNGs; pixel values stay class indices.
LAYOUT_PALETTE = [
    (0, 0, 0),  # background
    (128, 0, 0),  # hat
    (255, 0, 0),  # hair
    (0, 85, 0),  # glove
    (170, 0, 51),  # sunglasses
    (255, 85, 0),  # upper-clothes
    (0, 0, 85),  # dress
    (0, 119, 221),  # coat
    (85, 85, 0),  # socks
    (0, 85, 85),  # pants
    (85, 51, 0),  # skin
    (52, 86, 128),  # scarf
    (0, 128, 0),  # skirt
    (0, 0, 255),  # face
    (51, 170, 221),  # left-arm
    (0, 255, 255),  # right-arm
    (85, 255, 170),  # left-leg
    (170, 255, 85),  # right-leg
    (255, 255, 0),  # left-shoe
    (255, 170, 0),  # right-shoe
]


def save_layout(path: str | Path, layout: np.ndarray) -> None:
    grid = np.asarray(layout)
    if grid.ndim != 2:
        raise ShapeError(f"layout must be 2-D, got {grid.shape}")
    img = Image.fromarray(grid.astype(np.uint8), mode="P")
    palette = list(sum(LAYOUT_PALETTE, ())) + [0] * (768 - 3 * NUM_CLASSES)
    img.putpalette(palette)
    img.save(path, format="PNG")


def load_layout(path: str | Path) -> np.ndarray:
    img = Image.open(path)
    if img.mode not in ("P", "L"):
        raise TaxonomyError(f"layout PNG must be indexed or grayscale, got mode {img.mode}")
    grid = np.asarray(img, dtype=np.uint8)
    if grid.max(initial=0) >= NUM_CLASSES:
        raise TaxonomyError(f"layout PNG {path} holds indices outside 0..{NUM_CLASSES - 1}")
    return grid


def save_image(path: str | Path, image: np.ndarray) -> None:
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ShapeError(f"image must be HxWx3, got {arr.shape}")
    data = np.rint(np.clip(arr, 0.0, 1.0) * 255.0).astype(np.uint8)
    Image.fromarray(data, mode="RGB").save(path, format="PNG")


def load_image(path: str | Path) -> np.ndarray:
    img = Image.open(path).convert("RGB")
    return np.asarray(img, dtype=np.float32) / 255.0


def save_json(path: str | Path, obj) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def load_json(path: str | Path):
    return json.loads(Path(path).read_text())
