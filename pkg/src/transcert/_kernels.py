"""Hot floating-point loops: numba-compiled when available, numpy otherwise.

Set ``TRANSCERT_DISABLE_NUMBA=1`` to force the pure-numpy path.  Both paths
return identical results up to floating-point summation order.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("TRANSCERT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled by TRANSCERT_DISABLE_NUMBA")
    from numba import njit
    BACKEND = "numba"
except ImportError:
    njit = None
    BACKEND = "numpy"


# ---------------------------------------------------------------------------
# numpy reference implementations
# ---------------------------------------------------------------------------

def _ineq_entries_np(X, pi, e):
    a, b = X[:, 0, 0], X[:, 0, 1]
    c, d = X[:, 1, 0], X[:, 1, 1]
    M = np.empty_like(X)
    M[:, 0, 0] = a * a + b * c - pi * a + e
    M[:, 0, 1] = a * b + b * d - pi * b
    M[:, 1, 0] = c * a + d * c - pi * c
    M[:, 1, 1] = c * b + d * d - pi * d + e
    tr = a + d
    C = np.empty_like(X)
    C[:, 0, 0] = a * a - pi * a + e + b * c
    C[:, 0, 1] = b * (tr - pi)
    C[:, 1, 0] = c * (tr - pi)
    C[:, 1, 1] = d * d - pi * d + e + b * c
    return M, C


def _widths_np(verts, thetas):
    u = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
    proj = verts @ u.T
    return proj.max(axis=0) - proj.min(axis=0)


def _chords_np(verts, center, thetas):
    nxt = np.roll(verts, -1, axis=0)
    edge = nxt - verts
    normals = np.stack([edge[:, 1], -edge[:, 0]], axis=1)
    slack = np.einsum("ij,ij->i", normals, verts) - normals @ center
    u = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
    nu = normals @ u.T  # (edges, dirs)
    with np.errstate(divide="ignore", invalid="ignore"):
        t = slack[:, None] / nu
    fwd = np.where(nu > 0, t, np.inf).min(axis=0)
    back = np.where(nu < 0, -t, np.inf).min(axis=0)
    return fwd + back


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------

if njit is not None:

    @njit(cache=True)
    def _ineq_entries_nb(X, pi, e):
        n = X.shape[0]
        M = np.empty_like(X)
        C = np.empty_like(X)
        for k in range(n):
            a = X[k, 0, 0]
            b = X[k, 0, 1]
            c = X[k, 1, 0]
            d = X[k, 1, 1]
            M[k, 0, 0] = a * a + b * c - pi * a + e
            M[k, 0, 1] = a * b + b * d - pi * b
            M[k, 1, 0] = c * a + d * c - pi * c
            M[k, 1, 1] = c * b + d * d - pi * d + e
            tr = a + d
            C[k, 0, 0] = a * a - pi * a + e + b * c
            C[k, 0, 1] = b * (tr - pi)
            C[k, 1, 0] = c * (tr - pi)
            C[k, 1, 1] = d * d - pi * d + e + b * c
        return M, C

    @njit(cache=True)
    def _widths_nb(verts, thetas):
        m = verts.shape[0]
        out = np.empty(thetas.shape[0])
        for j in range(thetas.shape[0]):
            ux = np.cos(thetas[j])
            uy = np.sin(thetas[j])
            lo = np.inf
            hi = -np.inf
            for i in range(m):
                v = verts[i, 0] * ux + verts[i, 1] * uy
                if v < lo:
                    lo = v
                if v > hi:
                    hi = v
            out[j] = hi - lo
        return out

    @njit(cache=True)
    def _chords_nb(verts, center, thetas):
        m = verts.shape[0]
        nx = np.empty(m)
        ny = np.empty(m)
        slack = np.empty(m)
        for i in range(m):
            k = (i + 1) % m
            ex = verts[k, 0] - verts[i, 0]
            ey = verts[k, 1] - verts[i, 1]
            nx[i] = ey
            ny[i] = -ex
            slack[i] = ey * (verts[i, 0] - center[0]) - ex * (verts[i, 1] - center[1])
        out = np.empty(thetas.shape[0])
        for j in range(thetas.shape[0]):
            ux = np.cos(thetas[j])
            uy = np.sin(thetas[j])
            fwd = np.inf
            back = np.inf
            for i in range(m):
                nu = nx[i] * ux + ny[i] * uy
                if nu > 0:
                    t = slack[i] / nu
                    if t < fwd:
                        fwd = t
                elif nu < 0:
                    t = -slack[i] / nu
                    if t < back:
                        back = t
            out[j] = fwd + back
        return out

    _ineq_impl, _widths_impl, _chords_impl = _ineq_entries_nb, _widths_nb, _chords_nb
else:
    _ineq_impl, _widths_impl, _chords_impl = _ineq_entries_np, _widths_np, _chords_np


def ineq_entries(X: np.ndarray, pi: float, e: float):
    """Direct entries of X^2 - pi X + e I and their decomposed form, per sample."""
    return _ineq_impl(np.ascontiguousarray(X, dtype=np.float64), float(pi), float(e))


def polygon_widths(verts: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Width h(t) + h(t + pi) of a polygon for each direction angle."""
    return _widths_impl(np.ascontiguousarray(verts, dtype=np.float64),
                        np.ascontiguousarray(np.atleast_1d(thetas), dtype=np.float64))


def polygon_chords(verts: np.ndarray, center: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Length of the chord through ``center`` along each direction angle."""
    return _chords_impl(np.ascontiguousarray(verts, dtype=np.float64),
                        np.ascontiguousarray(center, dtype=np.float64),
                        np.ascontiguousarray(np.atleast_1d(thetas), dtype=np.float64))


def reference(name: str):
    """The numpy implementation of a kernel (used by tests and the benchmark)."""
    return {"ineq_entries": _ineq_entries_np, "polygon_widths": _widths_np,
            "polygon_chords": _chords_np}[name]
