# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled remap kernels; arithmetic mirrors _remap_np bit for bit."""

import numpy as np

from libc.math cimport floor

BACKEND = "cython"


def remap_nearest(double[:, ::1] src, int[::1] face_ids,
                  double[::1] xs, double[::1] ys, int[:, ::1] rects):
    cdef Py_ssize_t n = xs.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, ix, iy
    cdef int f
    cdef double x0, y0, x1, y1, px, py
    with nogil:
        for i in range(n):
            f = face_ids[i]
            x0 = rects[f, 0]
            y0 = rects[f, 1]
            x1 = rects[f, 0] + rects[f, 2] - 1
            y1 = rects[f, 1] + rects[f, 3] - 1
            px = xs[i]
            if px < x0:
                px = x0
            elif px > x1:
                px = x1
            py = ys[i]
            if py < y0:
                py = y0
            elif py > y1:
                py = y1
            ix = <Py_ssize_t> floor(px + 0.5)
            iy = <Py_ssize_t> floor(py + 0.5)
            out[i] = src[iy, ix]
    return out_arr


def remap_bilinear(double[:, ::1] src, int[::1] face_ids,
                   double[::1] xs, double[::1] ys, int[:, ::1] rects):
    cdef Py_ssize_t n = xs.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, ix0, iy0, ix1, iy1, xmax, ymax
    cdef int f
    cdef double x0, y0, x1, y1, px, py, fx0, fy0, wx, wy
    cdef double v00, v01, v10, v11, top, bot
    with nogil:
        for i in range(n):
            f = face_ids[i]
            x0 = rects[f, 0]
            y0 = rects[f, 1]
            x1 = rects[f, 0] + rects[f, 2] - 1
            y1 = rects[f, 1] + rects[f, 3] - 1
            px = xs[i]
            if px < x0:
                px = x0
            elif px > x1:
                px = x1
            py = ys[i]
            if py < y0:
                py = y0
            elif py > y1:
                py = y1
            fx0 = floor(px)
            fy0 = floor(py)
            wx = px - fx0
            wy = py - fy0
            ix0 = <Py_ssize_t> fx0
            iy0 = <Py_ssize_t> fy0
            xmax = <Py_ssize_t> x1
            ymax = <Py_ssize_t> y1
            ix1 = ix0 + 1
            if ix1 > xmax:
                ix1 = xmax
            iy1 = iy0 + 1
            if iy1 > ymax:
                iy1 = ymax
            v00 = src[iy0, ix0]
            v01 = src[iy0, ix1]
            v10 = src[iy1, ix0]
            v11 = src[iy1, ix1]
            top = v00 + wx * (v01 - v00)
            bot = v10 + wx * (v11 - v10)
            out[i] = top + wy * (bot - top)
    return out_arr
