"""Finite-Schmidt-rank operators on bipartite tensor spaces.

An operator F : C^{h1} (x) C^{h2} -> C^{k1} (x) C^{k2} is stored as a dense
(k1*k2) x (h1*h2) matrix under the package flattening convention.  Its
Schmidt rank is the minimal r with F = sum_k A_k (x) B_k.  Two independent
routes compute decompositions:

* ``reshuffle_rank`` permutes indices so that ordinary matrix rank equals
  Schmidt rank and reads a canonical decomposition off the SVD (the oracle);
* ``schmidt_decompose_deflation`` greedily extracts one elementary term per
  step via the quadratic map D, dropping the rank by exactly one each time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    BadNormalization,
    DimensionMismatch,
    LengthMismatch,
    NotAnInverse,
    PairingNotOne,
)
from .linalg import DEFAULT_RTOL, as_coperator, as_cvector


@dataclass(frozen=True)
class BipartiteShape:
    """Domain C^{h1} (x) C^{h2}, codomain C^{k1} (x) C^{k2}."""

    h1: int
    h2: int
    k1: int
    k2: int

    def __post_init__(self):
        if min(self.h1, self.h2, self.k1, self.k2) < 1:
            raise ValueError("all factor dimensions must be positive")

    @property
    def domain_dim(self) -> int:
        return self.h1 * self.h2

    @property
    def codomain_dim(self) -> int:
        return self.k1 * self.k2


@dataclass(frozen=True)
class FSROperator:
    """Sum of elementary tensor factor pairs (A_k, B_k) on a bipartite space."""

    shape: BipartiteShape
    terms: tuple[tuple[np.ndarray, np.ndarray], ...]

    def __post_init__(self):
        terms = []
        for a, b in self.terms:
            a, b = as_coperator(a), as_coperator(b)
            if a.shape != (self.shape.k1, self.shape.h1) or b.shape != (self.shape.k2, self.shape.h2):
                raise DimensionMismatch("term factor shapes do not match the bipartite shape")
            terms.append((a, b))
        object.__setattr__(self, "terms", tuple(terms))

    @property
    def rank_bound(self) -> int:
        return len(self.terms)

    def materialize(self) -> np.ndarray:
        out = np.zeros((self.shape.codomain_dim, self.shape.domain_dim), dtype=complex)
        for a, b in self.terms:
            out += np.kron(a, b)
        return out


def _check_operator(f, shape: BipartiteShape) -> np.ndarray:
    f = as_coperator(f)
    if f.shape != (shape.codomain_dim, shape.domain_dim):
        raise DimensionMismatch(
            f"operator shape {f.shape} does not match bipartite shape "
            f"{(shape.codomain_dim, shape.domain_dim)}"
        )
    return f


def embed_U1(u1, h2: int) -> np.ndarray:
    """Embedding x2 -> u1 (x) x2; operator norm equals ||u1||."""
    u1 = as_cvector(u1)
    return np.kron(u1.reshape(-1, 1), np.eye(h2))


def embed_U2(u2, h1: int) -> np.ndarray:
    """Embedding x1 -> x1 (x) u2; operator norm equals ||u2||."""
    u2 = as_cvector(u2)
    return np.kron(np.eye(h1), u2.reshape(-1, 1))


def contract_V1(v1, h, shape: BipartiteShape) -> np.ndarray:
    """Contraction of the first factor: y1 (x) y2 -> <y1, v1> y2."""
    v1, h = as_cvector(v1), as_cvector(h)
    if h.shape[0] != shape.codomain_dim or v1.shape[0] != shape.k1:
        raise DimensionMismatch("contract_V1: vector dims do not match the shape")
    return v1.conj() @ h.reshape(shape.k1, shape.k2)


def contract_V2(v2, h, shape: BipartiteShape) -> np.ndarray:
    """Contraction of the second factor: y1 (x) y2 -> <y2, v2> y1."""
    v2, h = as_cvector(v2), as_cvector(h)
    if h.shape[0] != shape.codomain_dim or v2.shape[0] != shape.k2:
        raise DimensionMismatch("contract_V2: vector dims do not match the shape")
    return h.reshape(shape.k1, shape.k2) @ v2.conj()


def P_uv(f, g, u1, u2, v1, v2, shape: BipartiteShape) -> tuple[np.ndarray, np.ndarray]:
    """Bilinear factor extraction (F, G) -> (A, B).

    A acts on the first factor: A x1 = contract_V2(v2, F(x1 (x) u2)).
    B acts on the second:       B x2 = contract_V1(v1, G(u1 (x) x2)).
    """
    f, g = _check_operator(f, shape), _check_operator(g, shape)
    u1, u2, v1, v2 = map(as_cvector, (u1, u2, v1, v2))
    fa = f @ embed_U2(u2, shape.h1)  # (k1*k2, h1)
    a = np.einsum("j,ijc->ic", v2.conj(), fa.reshape(shape.k1, shape.k2, shape.h1))
    gb = g @ embed_U1(u1, shape.h2)  # (k1*k2, h2)
    b = np.einsum("i,ijc->jc", v1.conj(), gb.reshape(shape.k1, shape.k2, shape.h2))
    return a, b


def D_uv(f, u1, u2, v1, v2, shape: BipartiteShape) -> tuple[np.ndarray, np.ndarray]:
    """Quadratic map D(F) = P(F, F); fixes rank-one operators up to <F(u), v>."""
    return P_uv(f, f, u1, u2, v1, v2, shape)


def pairing(f, u1, u2, v1, v2, shape: BipartiteShape) -> complex:
    """<F(u1 (x) u2), v1 (x) v2>."""
    f = _check_operator(f, shape)
    return linalg.inner(f @ np.kron(as_cvector(u1), as_cvector(u2)), np.kron(as_cvector(v1), as_cvector(v2)))


def deflate(f, u1, u2, v1, v2, shape: BipartiteShape, pairing_tol: float = 1e-9) -> np.ndarray:
    """Subtract D_{u,v}(F) from F; drops the Schmidt rank by exactly one.

    Requires the pairing <F(u1 (x) u2), v1 (x) v2> to equal 1 up to
    ``pairing_tol``.
    """
    f = _check_operator(f, shape)
    p = pairing(f, u1, u2, v1, v2, shape)
    if abs(p - 1.0) > pairing_tol:
        raise PairingNotOne(f"pairing is {p}, expected 1")
    a, b = D_uv(f, u1, u2, v1, v2, shape)
    return f - np.kron(a, b)


def schmidt_decompose_deflation(f, shape: BipartiteShape, tol: float = DEFAULT_RTOL) -> FSROperator:
    """Greedy deflation: one elementary term per step until the residual dies.

    Each step picks the elementary pair (u, v) = (e_{j1} (x) e_{j2},
    e_{i1} (x) e_{i2}) at the largest-modulus residual entry (full-pivot
    style), rescales v1 so the pairing is exactly 1, extracts the D term and
    subtracts it.  Stops when ||residual|| <= tol * ||F||.
    """
    f = _check_operator(f, shape)
    norm0 = np.linalg.norm(f)
    terms: list[tuple[np.ndarray, np.ndarray]] = []
    if norm0 == 0.0:
        return FSROperator(shape, ())
    residual = f.copy()
    max_steps = min(shape.k1 * shape.h1, shape.k2 * shape.h2)
    for _ in range(max_steps):
        if np.linalg.norm(residual) <= tol * norm0:
            break
        i, j = np.unravel_index(np.argmax(np.abs(residual)), residual.shape)
        i1, i2 = divmod(int(i), shape.k2)
        j1, j2 = divmod(int(j), shape.h2)
        u1 = np.eye(shape.h1, dtype=complex)[j1]
        u2 = np.eye(shape.h2, dtype=complex)[j2]
        v1 = np.eye(shape.k1, dtype=complex)[i1] * np.conj(1.0 / residual[i, j])
        v2 = np.eye(shape.k2, dtype=complex)[i2]
        a, b = D_uv(residual, u1, u2, v1, v2, shape)
        residual = residual - np.kron(a, b)
        terms.append((a, b))
    return FSROperator(shape, tuple(terms))


def reshuffle(f, shape: BipartiteShape) -> np.ndarray:
    """Index permutation R[(i1,j1),(i2,j2)] = F[(i1,i2),(j1,j2)].

    The ordinary rank of R is the Schmidt rank of F.
    """
    f = _check_operator(f, shape)
    return (
        f.reshape(shape.k1, shape.k2, shape.h1, shape.h2)
        .transpose(0, 2, 1, 3)
        .reshape(shape.k1 * shape.h1, shape.k2 * shape.h2)
    )


def reshuffle_rank(
    f, shape: BipartiteShape, tol: float = DEFAULT_RTOL, scale: float = 0.0
) -> tuple[int, FSROperator]:
    """Schmidt rank and a canonical decomposition via SVD of the reshuffle.

    Singular values below tol * max(sigma_max, scale) count as zero; pass the
    original operator's magnitude as ``scale`` when ranking residuals of a
    deflation, so float noise left over from subtraction ranks as zero.
    """
    r = reshuffle(f, shape)
    u, s, vh = np.linalg.svd(r)
    if s.size == 0 or s[0] <= tol * scale:
        return 0, FSROperator(shape, ())
    rank = int(np.count_nonzero(s > tol * max(s[0], scale)))
    terms = []
    for k in range(rank):
        scale = np.sqrt(s[k])
        a = scale * u[:, k].reshape(shape.k1, shape.h1)
        b = scale * vh[k, :].reshape(shape.k2, shape.h2)
        terms.append((a, b))
    return rank, FSROperator(shape, tuple(terms))


def is_fms(terms, tol: float = DEFAULT_RTOL) -> bool:
    """Finite minimal system test: both factor families linearly independent."""
    terms = list(terms)
    if not terms:
        return True
    first = np.array([as_coperator(a).ravel() for a, _ in terms])
    second = np.array([as_coperator(b).ravel() for _, b in terms])
    r = len(terms)
    return linalg.matrix_rank(first, tol) == r and linalg.matrix_rank(second, tol) == r


def spans_equal(terms_a, terms_b, side: int, tol: float = DEFAULT_RTOL) -> bool:
    """Whether the factor spans of two decompositions coincide on one side.

    ``side`` is 1 (first factors) or 2 (second factors).  Both term lists
    must have the same length; equality is decided by comparing the rank of
    the stacked flattening against the per-list ranks.
    """
    terms_a, terms_b = list(terms_a), list(terms_b)
    if len(terms_a) != len(terms_b):
        raise LengthMismatch(f"term counts {len(terms_a)} and {len(terms_b)} differ")
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    idx = side - 1
    fa = np.array([as_coperator(t[idx]).ravel() for t in terms_a])
    fb = np.array([as_coperator(t[idx]).ravel() for t in terms_b])
    ra, rb = linalg.matrix_rank(fa, tol), linalg.matrix_rank(fb, tol)
    if ra != rb:
        return False
    return linalg.matrix_rank(np.vstack([fa, fb]), tol) == ra


def inverse_factors(
    fsr: FSROperator,
    inv,
    side: str,
    u1,
    u2,
    v1,
    v2,
    tol: float = 1e-8,
) -> list[tuple[np.ndarray, np.ndarray]]:
    """Factor-wise inverse identities from a left or right inverse of F.

    For ``side="left"`` with L @ F = I, returns pairs (L_{1,k}, L_{2,k}) with

        sum_k L_{1,k} A_k = I_{h1}   and   sum_k L_{2,k} B_k = I_{h2},

    where L_{1,k} = V^{v2} L U^{B_k(u2)} needs <u2, v2> = 1 and
    L_{2,k} = V_{v1} L U_{A_k(u1)} needs <u1, v1> = 1.  The right case
    mirrors sum_k A_k R_{1,k} = I via adjoints.
    """
    shape = fsr.shape
    if shape.k1 != shape.h1 or shape.k2 != shape.h2:
        raise DimensionMismatch("inverse factors need a square bipartite shape")
    inv = as_coperator(inv)
    f = fsr.materialize()
    u1, u2, v1, v2 = map(as_cvector, (u1, u2, v1, v2))
    eye = np.eye(shape.domain_dim)
    if side == "left":
        if np.linalg.norm(inv @ f - eye) > tol * max(1.0, np.linalg.norm(f)):
            raise NotAnInverse("given matrix is not a left inverse of F")
    elif side == "right":
        if np.linalg.norm(f @ inv - eye) > tol * max(1.0, np.linalg.norm(f)):
            raise NotAnInverse("given matrix is not a right inverse of F")
    else:
        raise ValueError("side must be 'left' or 'right'")
    if abs(linalg.inner(u1, v1) - 1.0) > 1e-9 or abs(linalg.inner(u2, v2) - 1.0) > 1e-9:
        raise BadNormalization("need <u1, v1> = 1 and <u2, v2> = 1")

    if side == "right":
        # F R = I  <=>  R* is a left inverse of F* = sum A_k* (x) B_k*.
        adj_terms = FSROperator(shape, tuple((a.conj().T, b.conj().T) for a, b in fsr.terms))
        left = inverse_factors(adj_terms, inv.conj().T, "left", v1, v2, u1, u2, tol)
        return [(l1.conj().T, l2.conj().T) for l1, l2 in left]

    out = []
    for a_k, b_k in fsr.terms:
        m1 = inv @ embed_U2(b_k @ u2, shape.h1)  # (h1*h2, h1)
        l1 = np.einsum("j,ijc->ic", v2.conj(), m1.reshape(shape.h1, shape.h2, shape.h1))
        m2 = inv @ embed_U1(a_k @ u1, shape.h2)  # (h1*h2, h2)
        l2 = np.einsum("i,ijc->jc", v1.conj(), m2.reshape(shape.h1, shape.h2, shape.h2))
        out.append((l1, l2))
    return out
