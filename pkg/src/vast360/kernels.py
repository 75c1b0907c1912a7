"""Resampling kernels: remap (compiled or numpy backend) plus resizes.

The remap gather is the hot loop of reprojection and viewport extraction,
so it has a compiled Cython implementation selected at import time, with
a pure-numpy fallback producing bit-identical output.  Set the environment
variable ``VAST360_PURE_PYTHON=1`` to force the fallback.

Area-average and bilinear resizes are separable weighted sums implemented
once in numpy (they are matmul/cumsum bound, not gather bound).
"""

from __future__ import annotations

import os

import numpy as np

from . import _remap_np

if os.environ.get("VAST360_PURE_PYTHON"):
    _impl = _remap_np
else:
    try:
        from . import _remap_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _remap_np

BACKEND: str = _impl.BACKEND

SAMPLERS = ("nearest", "bilinear")


def available_backends() -> dict[str, object]:
    """Importable backend modules keyed by name (for tests and benchmarks)."""
    backends: dict[str, object] = {"python": _remap_np}
    try:
        from . import _remap_cy

        backends["cython"] = _remap_cy
    except ImportError:
        pass
    return backends


def remap(src: np.ndarray, face_ids: np.ndarray, xs: np.ndarray,
          ys: np.ndarray, rects: np.ndarray, sampler: str = "bilinear",
          _backend=None) -> np.ndarray:
    """Sample src at continuous atlas coordinates, one value per sample.

    xs/ys are pixel-index coordinates (pixel i center at i exactly) and are
    clamped to the atlas rectangle of each sample's source face, so bilinear
    neighborhoods never bleed across packed faces.  src may be (h, w) or
    (h, w, c), uint8 or float; uint8 input yields rounded uint8 output.
    """
    if sampler not in SAMPLERS:
        raise ValueError(f"unknown sampler {sampler!r}")
    backend = _backend if _backend is not None else _impl
    fn = backend.remap_bilinear if sampler == "bilinear" else backend.remap_nearest
    face_ids = np.ascontiguousarray(face_ids, dtype=np.int32)
    xs = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    ys = np.ascontiguousarray(ys, dtype=np.float64).ravel()
    rects = np.ascontiguousarray(rects, dtype=np.int32)
    ids = face_ids.ravel()

    was_u8 = src.dtype == np.uint8
    planes = src[..., None] if src.ndim == 2 else src
    out = np.empty((xs.size, planes.shape[2]), dtype=np.float64)
    for c in range(planes.shape[2]):
        plane = np.ascontiguousarray(planes[..., c], dtype=np.float64)
        out[:, c] = fn(plane, ids, xs, ys, rects)
    if src.ndim == 2:
        out = out[:, 0]
    if was_u8:
        out = np.clip(np.rint(out), 0.0, 255.0).astype(np.uint8)
    return out


def _area_integral_1d(arr: np.ndarray, n_out: int, axis: int) -> np.ndarray:
    """Exact box average over [i*s, (i+1)*s) spans via a cumulative integral."""
    arr = np.moveaxis(arr, axis, 0)
    n_in = arr.shape[0]
    s = n_in / n_out
    cum = np.concatenate(
        [np.zeros((1,) + arr.shape[1:]), np.cumsum(arr, axis=0)], axis=0
    )

    def integral_to(p: np.ndarray) -> np.ndarray:
        base = np.floor(p).astype(np.intp)
        frac = p - base
        base = np.minimum(base, n_in - 1)
        return cum[base] + frac[(...,) + (None,) * (arr.ndim - 1)] * arr[base]

    edges = np.arange(n_out + 1, dtype=np.float64) * s
    edges[-1] = float(n_in)
    ints = integral_to(edges)
    out = (ints[1:] - ints[:-1]) / s
    return np.moveaxis(out, 0, axis)


def resize_area(src: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Area-average downscale (separable box filter); upscaling not allowed."""
    if out_h < 1 or out_w < 1:
        raise ValueError("output dimensions must be >= 1")
    if out_h > src.shape[0] or out_w > src.shape[1]:
        raise ValueError("resize_area only downscales")
    was_u8 = src.dtype == np.uint8
    arr = src.astype(np.float64)
    arr = _area_integral_1d(arr, out_h, axis=0)
    arr = _area_integral_1d(arr, out_w, axis=1)
    if was_u8:
        arr = np.clip(np.rint(arr), 0.0, 255.0).astype(np.uint8)
    return arr


def _linear_1d(arr: np.ndarray, n_out: int, axis: int) -> np.ndarray:
    arr = np.moveaxis(arr, axis, 0)
    n_in = arr.shape[0]
    pos = (np.arange(n_out, dtype=np.float64) + 0.5) * (n_in / n_out) - 0.5
    pos = np.clip(pos, 0.0, n_in - 1.0)
    i0 = np.floor(pos).astype(np.intp)
    i1 = np.minimum(i0 + 1, n_in - 1)
    w = (pos - i0)[(...,) + (None,) * (arr.ndim - 1)]
    out = arr[i0] * (1.0 - w) + arr[i1] * w
    return np.moveaxis(out, 0, axis)


def resize_bilinear(src: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Separable bilinear resize with half-pixel center alignment."""
    if out_h < 1 or out_w < 1:
        raise ValueError("output dimensions must be >= 1")
    was_u8 = src.dtype == np.uint8
    arr = src.astype(np.float64)
    arr = _linear_1d(arr, out_h, axis=0)
    arr = _linear_1d(arr, out_w, axis=1)
    if was_u8:
        arr = np.clip(np.rint(arr), 0.0, 255.0).astype(np.uint8)
    return arr
