"""Pure-numpy remap kernels (fallback backend).

The arithmetic (lerp form, clamp-then-floor) is kept in exactly the same
operation order as the compiled backend so both produce bit-identical
float64 results.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _rect_bounds(face_ids, rects):
    r = rects[face_ids]
    x0 = r[:, 0].astype(np.float64)
    y0 = r[:, 1].astype(np.float64)
    x1 = (r[:, 0] + r[:, 2] - 1).astype(np.float64)
    y1 = (r[:, 1] + r[:, 3] - 1).astype(np.float64)
    return x0, y0, x1, y1


def remap_nearest(src, face_ids, xs, ys, rects):
    """Sample src (h, w) float64 at rounded (xs, ys), clamped per-face."""
    x0, y0, x1, y1 = _rect_bounds(face_ids, rects)
    px = np.clip(xs, x0, x1)
    py = np.clip(ys, y0, y1)
    ix = np.floor(px + 0.5).astype(np.intp)
    iy = np.floor(py + 0.5).astype(np.intp)
    return src[iy, ix]


def remap_bilinear(src, face_ids, xs, ys, rects):
    """Bilinearly sample src (h, w) float64; neighbors clamped to the face."""
    x0, y0, x1, y1 = _rect_bounds(face_ids, rects)
    px = np.clip(xs, x0, x1)
    py = np.clip(ys, y0, y1)
    fx0 = np.floor(px)
    fy0 = np.floor(py)
    wx = px - fx0
    wy = py - fy0
    ix0 = fx0.astype(np.intp)
    iy0 = fy0.astype(np.intp)
    ix1 = np.minimum(ix0 + 1, x1.astype(np.intp))
    iy1 = np.minimum(iy0 + 1, y1.astype(np.intp))
    v00 = src[iy0, ix0]
    v01 = src[iy0, ix1]
    v10 = src[iy1, ix0]
    v11 = src[iy1, ix1]
    top = v00 + wx * (v01 - v00)
    bot = v10 + wx * (v11 - v10)
    return top + wy * (bot - top)
