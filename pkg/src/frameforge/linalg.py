"""Complex dense linear algebra with tensor (Kronecker) structure.

Vectors and operators are plain numpy arrays of dtype complex128.  The
flattening convention is fixed once for the whole package: the first tensor
factor is the most significant index, so the multi-index (i_1, ..., i_m) on
factor dimensions (d_1, ..., d_m) maps to the flat index

    i_1 * d_2 * ... * d_m + i_2 * d_3 * ... * d_m + ... + i_m.

This is exactly numpy's row-major (C order) convention, so ``np.kron``
realizes the tensor product of both vectors and operators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotInjective

# Relative tolerance for all rank / invertibility decisions, as a multiple of
# the largest singular value.  Overridable per call.
DEFAULT_RTOL = 1e-9


def as_cvector(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got array of shape {x.shape}")
    return x


def as_coperator(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got array of shape {a.shape}")
    return a


@dataclass(frozen=True)
class SpaceShape:
    """Tensor factorization of an ambient space: C^{d_1} (x) ... (x) C^{d_m}."""

    factor_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.factor_dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError("factor dimensions must be positive")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def dim(self) -> int:
        return int(np.prod(self.factor_dims))

    def flatten(self, multi_index) -> int:
        if len(multi_index) != len(self.factor_dims):
            raise DimensionMismatch("multi-index length does not match factor count")
        flat = 0
        for i, d in zip(multi_index, self.factor_dims):
            if not 0 <= i < d:
                raise IndexError(f"index {i} out of range for factor of dimension {d}")
            flat = flat * d + i
        return flat

    def unflatten(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.dim:
            raise IndexError(f"flat index {flat} out of range for dimension {self.dim}")
        out = []
        for d in reversed(self.factor_dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))


def inner(x, y) -> complex:
    """Pairing <x, y>, linear in x and conjugate-linear in y."""
    x, y = as_cvector(x), as_cvector(y)
    if x.shape != y.shape:
        raise DimensionMismatch(f"vector dims {x.shape[0]} and {y.shape[0]} differ")
    return complex(np.vdot(y, x))  # np.vdot conjugates its first argument


def tensor_vec(x, y) -> np.ndarray:
    """Tensor product of vectors under the package flattening convention."""
    return np.kron(as_cvector(x), as_cvector(y))


def tensor_op(a, b) -> np.ndarray:
    """Kronecker product; satisfies (A(x)B)(x(x)y) = Ax (x) By."""
    return np.kron(as_coperator(a), as_coperator(b))


def adjoint(a) -> np.ndarray:
    return as_coperator(a).conj().T


def op_norm_extremes(a) -> tuple[float, float]:
    """Largest and smallest singular values of a nonempty matrix."""
    a = as_coperator(a)
    if a.size == 0:
        raise DimensionMismatch("empty matrix has no singular values")
    s = np.linalg.svd(a, compute_uv=False)
    return float(s[0]), float(s[-1])


def op_norm(a) -> float:
    return op_norm_extremes(a)[0]


def left_pseudo_inverse(a, tol: float = DEFAULT_RTOL) -> np.ndarray:
    """Moore-Penrose left inverse L with L @ A = I; requires A injective.

    Injectivity is decided by sigma_min > tol * sigma_max with tall shape.
    The returned L has operator norm 1 / sigma_min(A).
    """
    a = as_coperator(a)
    rows, cols = a.shape
    smax, smin = op_norm_extremes(a)
    if rows < cols or smin <= tol * smax:
        raise NotInjective(
            f"matrix of shape {rows}x{cols} with sigma_min={smin:.3e}, sigma_max={smax:.3e} is not injective"
        )
    return np.linalg.pinv(a)


def matrix_rank(a, tol: float = DEFAULT_RTOL) -> int:
    """Rank by singular values above tol * sigma_max."""
    a = as_coperator(a)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))
