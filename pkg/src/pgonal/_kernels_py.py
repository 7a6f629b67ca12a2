"""Pure numpy implementations of the hot kernels.

These are the fallback used when the compiled extension is unavailable.
Element tables are (N, n) uint8 arrays whose rows are image tuples sorted
lexicographically, so a row's position equals its element index and
byte-wise comparison agrees with lexicographic comparison of images.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "pure"


def _as_void(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    return rows.view(np.dtype((np.void, rows.shape[1]))).reshape(-1)


def lookup_rows(elements: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Indices of ``rows`` inside the sorted element table.

    Raises ``KeyError`` if any row is not present.
    """
    table_v = _as_void(elements)
    rows_v = _as_void(rows)
    idx = np.searchsorted(table_v, rows_v)
    if np.any(idx >= len(table_v)) or np.any(table_v[idx] != rows_v):
        raise KeyError("row is not an element of the table")
    return idx.astype(np.int64)


def mul_table(elements: np.ndarray) -> np.ndarray:
    """Dense Cayley table: entry (i, j) is the index of element i*j."""
    n_el = elements.shape[0]
    out = np.empty((n_el, n_el), dtype=np.int32)
    for i in range(n_el):
        # (i*j)(pt) = j_images[i_images[pt]]; one vectorized row per i.
        prods = elements[:, elements[i]]
        out[i] = lookup_rows(elements, prods)
    return out


def convolve(
    elements: np.ndarray,
    table: np.ndarray | None,
    idx_a: np.ndarray,
    num_a: np.ndarray,
    idx_b: np.ndarray,
    num_b: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Sparse convolution with integer coefficients.

    Returns the support indices (ascending) and their accumulated
    coefficients.  Within one left factor the products i*j for distinct j
    are distinct, so a fancy-indexed add is safe.
    """
    n_el = elements.shape[0]
    acc = np.zeros(n_el, dtype=np.int64)
    coefs_b = np.asarray(num_b, dtype=np.int64)
    if table is not None:
        for ia, na in zip(idx_a, num_a):
            acc[table[ia, idx_b]] += int(na) * coefs_b
    else:
        rows_b = elements[idx_b]
        for ia, na in zip(idx_a, num_a):
            prods = rows_b[:, elements[ia]]
            acc[lookup_rows(elements, prods)] += int(na) * coefs_b
    support = np.nonzero(acc)[0]
    return support.astype(np.int64), acc[support]
