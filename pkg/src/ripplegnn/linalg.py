"""Dense float64 kernels for the embedding update path.

Vectors are 1-D float64 arrays and matrices are 2-D row-major float64
arrays. Every kernel validates shapes up front and accepts an optional
caller-provided output buffer so hot loops can run allocation-free.
"""

import numpy as np

from .errors import DimMismatch, EmptyVector


def matvec(w, x, out=None):
    """y = W @ x."""
    if w.ndim != 2 or x.ndim != 1:
        raise DimMismatch(f"matvec needs a matrix and a vector, got {w.shape} and {x.shape}")
    if w.shape[1] != x.shape[0]:
        raise DimMismatch(f"matvec shapes {w.shape} x {x.shape} do not align")
    if out is None:
        return w @ x
    np.matmul(w, x, out=out)
    return out


def axpy(alpha, x, y, out=None):
    """Return y + alpha * x. ``out`` may alias x but not y."""
    if x.shape != y.shape:
        raise DimMismatch(f"axpy shapes {x.shape} vs {y.shape}")
    if out is None:
        return y + alpha * x
    np.multiply(x, alpha, out=out)
    out += y
    return out


def relu(x, out=None):
    """Elementwise max(0, x). ``out`` may alias x."""
    if out is None:
        return np.maximum(x, 0.0)
    return np.maximum(x, 0.0, out=out)


def argmax(x) -> int:
    """Index of the maximum entry; ties break toward the smallest index."""
    if x.size == 0:
        raise EmptyVector("argmax of empty vector")
    return int(np.argmax(x))
