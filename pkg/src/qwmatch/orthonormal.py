"""
Completing a single vector to an orthonormal basis of its coin space.

:func:`li_set` extends a nonzero vector ``a`` with standard basis vectors to a
linearly independent spanning set; :func:`gram_schmidt` orthonormalizes it
while keeping ``a / |a|`` as the first element.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

__all__ = ["ZETA_TOL", "OrthonormalizationError", "li_set", "gram_schmidt"]

ZETA_TOL = 1e-12


class OrthonormalizationError(ArithmeticError):
    """Input was (numerically) zero or linearly dependent."""


def li_set(a, dim: int | None = None, tol: float = ZETA_TOL) -> list[NDArray[np.complex128]]:
    """
    Extend ``a`` to ``dim`` linearly independent vectors.

    The result is ``[a] + zeta + rest``: ``zeta`` holds the basis vectors
    ``e_c`` with ``|a_c| <= tol`` (orthogonal to ``a``), ``rest`` the other
    basis vectors minus the one with the largest ``|a_c|`` (ties go to the
    smallest ``c``). Both groups keep ascending coin order.

    Parameters
    ----------
    a : array_like
        Vector of length ``dim``.
    dim : int, optional
        Coin dimension; defaults to ``len(a)``.
    tol : float
        Threshold below which a component of ``a`` counts as zero.

    Raises
    ------
    OrthonormalizationError
        If ``|a| <= tol``.
    """
    a = np.asarray(a, dtype=np.complex128).ravel()
    if dim is None:
        dim = a.shape[0]
    if a.shape[0] != dim or dim < 1:
        raise ValueError(f"vector of length {a.shape[0]} does not live in dimension {dim}")
    if np.linalg.norm(a) <= tol:
        raise OrthonormalizationError("cannot extend a zero vector")

    overlap = np.abs(a)
    zeta = np.flatnonzero(overlap <= tol)
    support = np.flatnonzero(overlap > tol)
    # argmax returns the first maximum, i.e. the smallest coin index on ties
    dropped = support[np.argmax(overlap[support])]
    rest = support[support != dropped]

    eye = np.eye(dim, dtype=np.complex128)
    return [a] + [eye[c] for c in zeta] + [eye[c] for c in rest]


def gram_schmidt(vectors, tol: float = ZETA_TOL) -> list[NDArray[np.complex128]]:
    """
    Modified Gram-Schmidt with one re-orthogonalization pass.

    Parameters
    ----------
    vectors : sequence of array_like
        Linearly independent vectors, processed in order.
    tol : float
        A residual norm at or below ``tol`` is treated as linear dependence.

    Returns
    -------
    list of ndarray
        Orthonormal vectors with the same span; the first is the normalized
        first input.
    """
    basis: list[NDArray[np.complex128]] = []
    for k, v in enumerate(vectors):
        w = np.array(v, dtype=np.complex128).ravel()
        for _ in range(2):
            for q in basis:
                w -= np.vdot(q, w) * q
        r = np.linalg.norm(w)
        if r <= tol:
            raise OrthonormalizationError(
                f"vector {k} is linearly dependent on its predecessors (residual {r:.3g})"
            )
        basis.append(w / r)
    return basis
