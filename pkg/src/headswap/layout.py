"""Semantic layout model: class taxonomy, region masks, blending, augmentation,
neck alignment, and resolution changes.

A layout is a 2-D integer array (height x width) of class indices into the
20-class human-parsing taxonomy. All operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyRegionError, PartitionError, RangeError, ShapeError, TaxonomyError

CLASS_NAMES = (
    "background",
    "hat",
    "hair",
    "glove",
    "sunglasses",
    "upper-clothes",
    "dress",
    "coat",
    "socks",
    "pants",
    "skin",
    "scarf",
    "skirt",
    "face",
    "left-arm",
    "right-arm",
    "left-leg",
    "right-leg",
    "left-shoe",
    "right-shoe",
)

NUM_CLASSES = len(CLASS_NAMES)

BACKGROUND = 0
HAT = 1
HAIR = 2
GLOVE = 3
SUNGLASSES = 4
UPPER_CLOTHES = 5
DRESS = 6
COAT = 7
SOCKS = 8
PANTS = 9
SKIN = 10
SCARF = 11
SKIRT = 12
FACE = 13
LEFT_ARM = 14
RIGHT_ARM = 15
LEFT_LEG = 16
RIGHT_LEG = 17
LEFT_SHOE = 18
RIGHT_SHOE = 19


@dataclass(frozen=True)
class ClassTaxonomy:
    """The fixed 20-class taxonomy and its head / body / neck groupings."""

    names: tuple[str, ...] = CLASS_NAMES
    background_id: int = BACKGROUND
    head_group: frozenset[int] = frozenset({HAT, HAIR, SUNGLASSES, FACE})
    body_group: frozenset[int] = frozenset(
        {
            GLOVE,
            UPPER_CLOTHES,
            DRESS,
            COAT,
            SOCKS,
            PANTS,
            SCARF,
            SKIRT,
            LEFT_ARM,
            RIGHT_ARM,
            LEFT_LEG,
            RIGHT_LEG,
            LEFT_SHOE,
            RIGHT_SHOE,
        }
    )
    neck_group: frozenset[int] = frozenset({SKIN})

    def __post_init__(self) -> None:
        if len(self.names) != NUM_CLASSES or len(set(self.names)) != NUM_CLASSES:
            raise TaxonomyError(f"taxonomy needs {NUM_CLASSES} unique class names")
        groups = (self.head_group, self.body_group, self.neck_group)
        for group in groups:
            self._check_group(group)
            if self.background_id in group:
                raise TaxonomyError("background class cannot belong to a region group")
        if (self.head_group & self.body_group) or (self.head_group & self.neck_group) or (
            self.body_group & self.neck_group
        ):
            raise TaxonomyError("head/body/neck groups must be pairwise disjoint")

    def _check_group(self, group: frozenset[int]) -> None:
        for idx in group:
            if not 0 <= int(idx) < NUM_CLASSES:
                raise TaxonomyError(f"class index {idx} outside 0..{NUM_CLASSES - 1}")

    def class_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise TaxonomyError(f"unknown class name {name!r}") from None

    def resolve_group(self, spec: str) -> frozenset[int]:
        """Parse a comma-separated list of class names / group aliases into indices.

        Aliases: ``head``, ``body``, ``neck``, ``background``.
        """
        aliases = {
            "head": self.head_group,
            "body": self.body_group,
            "neck": self.neck_group,
            "background": frozenset({self.background_id}),
        }
        out: set[int] = set()
        for token in spec.split(","):
            token = token.strip()
            if not token:
                continue
            if token in aliases:
                out |= aliases[token]
            else:
                out.add(self.class_index(token))
        if not out:
            raise TaxonomyError(f"empty class group spec {spec!r}")
        return frozenset(out)


DEFAULT_TAXONOMY = ClassTaxonomy()


def _as_grid(layout: np.ndarray) -> np.ndarray:
    grid = np.asarray(layout)
    if grid.ndim != 2:
        raise ShapeError(f"layout must be 2-D, got shape {grid.shape}")
    return grid


def validate_layout(layout: np.ndarray, taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY) -> np.ndarray:
    """Check every cell is a valid class index; returns the grid as uint8."""
    grid = _as_grid(layout)
    if not np.issubdtype(grid.dtype, np.integer):
        raise TaxonomyError(f"layout dtype must be integer, got {grid.dtype}")
    if grid.size and (grid.min() < 0 or grid.max() >= NUM_CLASSES):
        raise TaxonomyError("layout contains class indices outside 0..19")
    return grid.astype(np.uint8)


def region_mask(
    layout: np.ndarray, group: frozenset[int] | set[int], taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY
) -> np.ndarray:
    """Binary mask of pixels whose class belongs to ``group``."""
    grid = validate_layout(layout, taxonomy)
    taxonomy._check_group(frozenset(group))
    return np.isin(grid, sorted(group)).astype(np.uint8)


@dataclass(frozen=True)
class RegionMaskSet:
    """Exact partition of the frame into head, body, and rest masks."""

    m_head: np.ndarray
    m_body: np.ndarray
    m_rest: np.ndarray

    def __post_init__(self) -> None:
        self.validate()

    @classmethod
    def from_masks(cls, head: np.ndarray, body: np.ndarray) -> "RegionMaskSet":
        """Build a partition from raw head/body masks.

        Overlaps resolve in favor of the head; the rest is the complement.
        """
        head = np.asarray(head, dtype=np.uint8)
        body = np.asarray(body, dtype=np.uint8)
        if head.shape != body.shape:
            raise ShapeError(f"mask shapes differ: {head.shape} vs {body.shape}")
        body = body & ~head & 1
        rest = (1 - head - body).astype(np.uint8)
        return cls(head & 1, body, rest)

    @classmethod
    def from_layouts(
        cls,
        l_head_src: np.ndarray,
        l_body_src: np.ndarray,
        taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY,
    ) -> "RegionMaskSet":
        """Head mask from the head source's head group, body mask from the body source."""
        return cls.from_masks(
            region_mask(l_head_src, taxonomy.head_group, taxonomy),
            region_mask(l_body_src, taxonomy.body_group, taxonomy),
        )

    def validate(self) -> None:
        for mask in (self.m_head, self.m_body, self.m_rest):
            m = np.asarray(mask)
            if m.shape != np.asarray(self.m_head).shape:
                raise ShapeError("region masks must share one shape")
            if m.size and not np.isin(m, (0, 1)).all():
                raise PartitionError("region masks must be {0,1}-valued")
        total = (
            np.asarray(self.m_head, dtype=np.int64)
            + np.asarray(self.m_body, dtype=np.int64)
            + np.asarray(self.m_rest, dtype=np.int64)
        )
        if total.size and not (total == 1).all():
            raise PartitionError("head + body + rest must equal 1 at every pixel")

    def downsample(self, f: int) -> "RegionMaskSet":
        """Partition-preserving nearest-neighbor downsampling by factor ``f``."""
        return RegionMaskSet(
            downsample_mask(self.m_head, f),
            downsample_mask(self.m_body, f),
            downsample_mask(self.m_rest, f),
        )


def blend_layouts(
    l1: np.ndarray,
    l2: np.ndarray,
    masks: RegionMaskSet,
    taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY,
) -> np.ndarray:
    """l1 under the head mask, l2 under the body mask, background elsewhere."""
    g1 = validate_layout(l1, taxonomy)
    g2 = validate_layout(l2, taxonomy)
    if g1.shape != g2.shape or g1.shape != np.asarray(masks.m_head).shape:
        raise ShapeError("layouts and masks must share one shape")
    out = np.full_like(g1, taxonomy.background_id)
    out[masks.m_head == 1] = g1[masks.m_head == 1]
    out[masks.m_body == 1] = g2[masks.m_body == 1]
    return out


def head_cover_augment(
    l_target: np.ndarray,
    l_cover: np.ndarray,
    taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY,
) -> np.ndarray:
    """Erase target neck/body pixels that lie under the cover layout's head.

    Pixels of ``l_target`` whose class is in the neck or body group and that
    sit inside ``l_cover``'s head-region silhouette become background; every
    other pixel is untouched.
    """
    target = validate_layout(l_target, taxonomy)
    cover_head = region_mask(l_cover, taxonomy.head_group, taxonomy)
    if target.shape != cover_head.shape:
        raise ShapeError(f"layout shapes differ: {target.shape} vs {cover_head.shape}")
    vulnerable = np.isin(target, sorted(taxonomy.neck_group | taxonomy.body_group))
    out = target.copy()
    out[vulnerable & (cover_head == 1)] = taxonomy.background_id
    return out


def remove_neck(layout: np.ndarray, taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY) -> np.ndarray:
    """Set every neck-group pixel to background."""
    grid = validate_layout(layout, taxonomy)
    out = grid.copy()
    out[np.isin(grid, sorted(taxonomy.neck_group))] = taxonomy.background_id
    return out


def _centroid(mask: np.ndarray) -> tuple[float, float]:
    ys, xs = np.nonzero(mask)
    return float(xs.mean()), float(ys.mean())


def lower_face_center(
    layout: np.ndarray,
    nose_y: float | None = None,
    taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY,
) -> tuple[float, float]:
    """Centroid (x, y) of the face pixels strictly below the nose row.

    Without ``nose_y`` the nose defaults to the vertical midpoint of the
    face bounding box. If no face pixel lies below the nose row, the full
    face centroid is returned.
    """
    grid = validate_layout(layout, taxonomy)
    face = grid == taxonomy.class_index("face")
    if not face.any():
        raise EmptyRegionError("layout has no face pixels")
    ys = np.nonzero(face)[0]
    if nose_y is None:
        nose_y = (ys.min() + ys.max()) / 2.0
    lower = face & (np.arange(grid.shape[0])[:, None] > nose_y)
    if not lower.any():
        return _centroid(face)
    return _centroid(lower)


def _round_half_away(x: float) -> int:
    return int(np.sign(x) * np.floor(abs(x) + 0.5))


@dataclass(frozen=True)
class NeckAlignment:
    """Horizontal shift aligning a head source to a body source."""

    delta_w: int
    head_center: tuple[float, float]
    body_center: tuple[float, float]


def neck_align(
    l_head_src: np.ndarray,
    l_body_src: np.ndarray,
    nose_y_head: float | None = None,
    nose_y_body: float | None = None,
    taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY,
) -> NeckAlignment:
    """Measure the horizontal deviation between the two lower-face centers.

    Positive ``delta_w`` means the head source must shift rightward to sit
    above the body source's neck.
    """
    head_center = lower_face_center(l_head_src, nose_y_head, taxonomy)
    body_center = lower_face_center(l_body_src, nose_y_body, taxonomy)
    delta_w = _round_half_away(body_center[0] - head_center[0])
    return NeckAlignment(delta_w=delta_w, head_center=head_center, body_center=body_center)


def shift_horizontal(content: np.ndarray, delta_w: int, fill) -> np.ndarray:
    """Translate a layout (2-D) or image (3-D, H x W x C) along x.

    Vacated columns are filled with ``fill``; dimensions are unchanged.
    """
    arr = np.asarray(content)
    if arr.ndim not in (2, 3):
        raise ShapeError(f"content must be 2-D or 3-D, got shape {arr.shape}")
    width = arr.shape[1]
    delta_w = int(delta_w)
    if abs(delta_w) >= width:
        raise RangeError(f"|delta_w|={abs(delta_w)} must be < width={width}")
    out = np.empty_like(arr)
    out[...] = fill
    if delta_w >= 0:
        out[:, delta_w:] = arr[:, : width - delta_w]
    else:
        out[:, :delta_w] = arr[:, -delta_w:]
    return out


def _nearest_indices(out_len: int, in_len: int) -> np.ndarray:
    # center-of-cell sampling; matches downsample_mask for integer factors
    idx = np.floor((np.arange(out_len) + 0.5) * in_len / out_len).astype(np.int64)
    return np.minimum(idx, in_len - 1)


def resize_nearest(layout: np.ndarray, out_w: int, out_h: int) -> np.ndarray:
    """Nearest-neighbor resize of a class-index grid (no class mixing)."""
    grid = _as_grid(layout)
    if out_w < 1 or out_h < 1:
        raise RangeError(f"target size must be >= 1, got {out_w}x{out_h}")
    in_h, in_w = grid.shape
    if (out_h, out_w) == (in_h, in_w):
        return grid.copy()
    rows = _nearest_indices(out_h, in_h)
    cols = _nearest_indices(out_w, in_w)
    return grid[np.ix_(rows, cols)]


def downsample_mask(mask: np.ndarray, f: int) -> np.ndarray:
    """Nearest-neighbor subsample of a binary mask by an integer factor.

    One source pixel (the cell center) is picked per output cell, so the
    three masks of a partition stay a partition after downsampling.
    """
    m = _as_grid(mask)
    if f < 1:
        raise RangeError(f"factor must be >= 1, got {f}")
    if m.shape[0] % f or m.shape[1] % f:
        raise ShapeError(f"mask shape {m.shape} not divisible by f={f}")
    return m[f // 2 :: f, f // 2 :: f].copy()


def layout_to_onehot(layout: np.ndarray, taxonomy: ClassTaxonomy = DEFAULT_TAXONOMY) -> np.ndarray:
    """One-hot encode a layout grid to float32 (num_classes, H, W)."""
    grid = validate_layout(layout, taxonomy)
    onehot = np.zeros((NUM_CLASSES,) + grid.shape, dtype=np.float32)
    h, w = grid.shape
    onehot[grid.reshape(-1), np.repeat(np.arange(h), w), np.tile(np.arange(w), h)] = 1.0
    return onehot
