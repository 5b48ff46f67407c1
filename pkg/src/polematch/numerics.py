"""Dense complex linear-algebra kernels used by every other module.

Matrices and vectors are plain ``numpy.ndarray`` objects with complex128
entries.  All functions validate finiteness of their inputs and are pure,
so they are safe to call concurrently.

The kernels are deliberately thin wrappers over LAPACK (via numpy/scipy):
the package-level contracts live here, the heavy lifting does not.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import NumericInputError, RankDeficientError, ShapeError, SingularMatrixError

__all__ = [
    "as_cmatrix",
    "minimal_singular_vector",
    "generalized_eigenvalues",
    "lstsq",
    "solve_dense",
]

#: Relative magnitude above which a generalized eigenvalue counts as infinite.
INF_EIGENVALUE_CAP = 1e14


def as_cmatrix(a, name="matrix"):
    """Coerce ``a`` to a 2-D complex array, rejecting NaN/Inf entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise NumericInputError(f"{name} contains non-finite entries")
    return m


def minimal_singular_vector(g):
    """Unit vector ``v`` minimizing ``v* G v`` for Hermitian PSD ``G``.

    Uses a full SVD, which is deterministic for a given input; the phase is
    normalized so the largest-magnitude component is real and positive,
    making downstream results reproducible bit-for-bit.
    """
    g = as_cmatrix(g, "G")
    n, m = g.shape
    if n != m or n < 1:
        raise ShapeError(f"G must be square and nonempty, got {g.shape}")
    _, _, vh = np.linalg.svd(g)
    v = vh[-1].conj()
    # fix the free unit phase deterministically
    k = int(np.argmax(np.abs(v)))
    pivot = v[k]
    if pivot != 0:
        v = v * (abs(pivot) / pivot)
    return v / np.linalg.norm(v)


def generalized_eigenvalues(a, e, inf_cap=INF_EIGENVALUE_CAP):
    """All finite eigenvalues of the pencil ``(A, E)`` plus the infinite count.

    Eigenvalues whose magnitude exceeds ``inf_cap`` times the largest input
    magnitude are classified as infinite, as are the exact infinities LAPACK
    reports for singular ``E``.  Finite eigenvalues are sorted by (real,
    imag) for reproducibility.

    Returns
    -------
    (ndarray, int)
        Sorted complex eigenvalues and the number of infinite eigenvalues.
    """
    a = as_cmatrix(a, "A")
    e = as_cmatrix(e, "E")
    if a.shape != e.shape or a.shape[0] != a.shape[1]:
        raise ShapeError(f"A and E must be square of equal size, got {a.shape} and {e.shape}")
    if np.array_equal(e, np.eye(e.shape[0])):
        # plain eigenproblem; also hits the fast real path when A is real
        ar = a.real if np.all(a.imag == 0) else a
        vals = np.linalg.eigvals(ar)
    else:
        vals = scipy.linalg.eigvals(a, e)
    scale = max(np.max(np.abs(a)), np.max(np.abs(e)), 1.0)
    finite_mask = np.isfinite(vals) & (np.abs(vals) <= inf_cap * scale)
    finite = vals[finite_mask]
    order = np.lexsort((finite.imag, finite.real))
    return finite[order], int(vals.size - finite.size)


def lstsq(a, b):
    """Minimizer ``X`` of the Frobenius norm of ``A X - B``.

    ``A`` must have at least as many rows as columns and full column rank;
    otherwise a :class:`RankDeficientError` carrying the estimated rank is
    raised.
    """
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    if a.shape[0] < a.shape[1]:
        raise ShapeError(f"A must have rows >= cols, got {a.shape}")
    if a.shape[0] != b.shape[0]:
        raise ShapeError(f"A and B row counts differ: {a.shape[0]} vs {b.shape[0]}")
    x, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < a.shape[1]:
        raise RankDeficientError(
            f"rank-deficient least-squares matrix: rank {rank} < {a.shape[1]} columns", rank
        )
    return x


def solve_dense(a, b, rcond_floor=1e-14):
    """Solve ``A X = B`` for square ``A``, rejecting (near-)singular systems.

    The reciprocal condition number is estimated from the LU factors; if it
    falls below ``rcond_floor`` a :class:`SingularMatrixError` is raised so
    callers can treat the point as lying on a pole of the pencil.
    """
    a = as_cmatrix(a, "A")
    b = as_cmatrix(b, "B")
    n = a.shape[0]
    if a.shape[1] != n:
        raise ShapeError(f"A must be square, got {a.shape}")
    if b.shape[0] != n:
        raise ShapeError(f"B row count {b.shape[0]} does not match A size {n}")
    try:
        lu, piv = scipy.linalg.lu_factor(a)
    except scipy.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"singular matrix: {exc}") from exc
    anorm = np.linalg.norm(a, 1)
    rcond, info = scipy.linalg.lapack.zgecon(lu, anorm)
    if info < 0 or not np.isfinite(rcond) or rcond < rcond_floor:
        raise SingularMatrixError(f"matrix singular within tolerance (rcond={rcond:.3e})")
    return scipy.linalg.lu_solve((lu, piv), b)
