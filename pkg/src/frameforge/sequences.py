"""Vector sequences: analysis/synthesis/frame operators, Bessel/frame/Riesz
classification, tensor products of sequences, and minimal sums.

A :class:`VectorSequence` is a finite indexed family {f_n} in C^m.  Its
analysis operator maps f to the coefficient vector (<f, f_n>)_n with respect
to the standard basis; the synthesis (preframe) operator is its adjoint and
the frame operator is S = F* F.

A :class:`MinimalSumSequence` holds d groups of r component sequences and
realizes the family

    f_{n_1,...,n_d} = sum_{k=1}^{r} f_{1,k,n_1} (x) ... (x) f_{d,k,n_d},

where for each group j the r component sequences are linearly independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DependentGroup, DimensionMismatch, EmptySequence, WrongRank
from .linalg import DEFAULT_RTOL

# Frame decision threshold: lower bound counts as positive when A > tol * B.
FRAME_TOL = 1e-10


@dataclass(frozen=True)
class VectorSequence:
    """Finite family of vectors in one space, stored as rows of a matrix."""

    vectors: np.ndarray  # shape (count, space_dim), complex

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] == 0 or v.shape[1] == 0:
            raise EmptySequence("a sequence needs at least one vector in a positive-dimensional space")
        object.__setattr__(self, "vectors", v)

    @classmethod
    def from_vectors(cls, vecs) -> "VectorSequence":
        return cls(np.array([linalg.as_cvector(v) for v in vecs]))

    @property
    def space_dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return self.vectors.shape[0]

    def __getitem__(self, n) -> np.ndarray:
        return self.vectors[n]


@dataclass(frozen=True)
class FrameReport:
    lower_bound: float  # optimal A = lambda_min of the frame operator
    bessel_bound: float  # optimal B = lambda_max of the frame operator
    is_frame: bool
    is_riesz: bool

    def to_dict(self) -> dict:
        return {
            "A": self.lower_bound,
            "B": self.bessel_bound,
            "is_frame": self.is_frame,
            "is_riesz": self.is_riesz,
        }


def analysis_operator(seq: VectorSequence) -> np.ndarray:
    """Matrix with row n = conj(f_n), so that (A f)[n] = <f, f_n>."""
    return seq.vectors.conj()


def synthesis_operator(seq: VectorSequence) -> np.ndarray:
    """Adjoint of the analysis operator; maps the n-th basis vector to f_n."""
    return analysis_operator(seq).conj().T


def frame_operator(seq: VectorSequence) -> np.ndarray:
    """S = F* F, Hermitian positive semidefinite on the ambient space."""
    a = analysis_operator(seq)
    return a.conj().T @ a


def classify(seq: VectorSequence, tol: float = FRAME_TOL) -> FrameReport:
    """Optimal frame bounds and Bessel/frame/Riesz classification.

    B is the squared operator norm of the analysis operator and A is the
    smallest eigenvalue of the frame operator.  The sequence is a frame when
    A > tol * B and a Riesz basis when additionally the analysis operator is
    square (count = space_dim), hence invertible.
    """
    s = frame_operator(seq)
    eig = np.linalg.eigvalsh(s)
    a_bound = float(max(eig[0], 0.0))
    b_bound = float(eig[-1])
    is_frame = a_bound > tol * b_bound
    is_riesz = is_frame and len(seq) == seq.space_dim
    return FrameReport(a_bound, b_bound, is_frame, is_riesz)


def tensor_sequences(seqs: list[VectorSequence]) -> VectorSequence:
    """Multi-indexed family {f_{1,n_1} (x) ... (x) f_{d,n_d}}.

    Vectors are ordered lexicographically in the multi-index, matching the
    package flattening convention.
    """
    if not seqs:
        raise EmptySequence("need at least one factor sequence")
    out = []
    for combo in itertools.product(*(s.vectors for s in seqs)):
        v = combo[0]
        for w in combo[1:]:
            v = np.kron(v, w)
        out.append(v)
    return VectorSequence(np.array(out))


def concatenate(seqs: list[VectorSequence]) -> VectorSequence:
    """Concatenation in group order; the frame operators add up."""
    if not seqs:
        raise EmptySequence("need at least one sequence")
    dim = seqs[0].space_dim
    for s in seqs:
        if s.space_dim != dim:
            raise DimensionMismatch("all sequences must share the ambient dimension")
    return VectorSequence(np.vstack([s.vectors for s in seqs]))


@dataclass(frozen=True)
class MinimalSumSequence:
    """d groups x r terms of component sequences; groups validated independent."""

    groups: tuple[tuple[VectorSequence, ...], ...]  # groups[j][k]

    @property
    def d(self) -> int:
        return len(self.groups)

    @property
    def r(self) -> int:
        return len(self.groups[0])

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(g[0]) for g in self.groups)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(g[0].space_dim for g in self.groups)


def build_minimal_sum(groups, tol: float = DEFAULT_RTOL) -> MinimalSumSequence:
    """Validate group shapes and per-group linear independence.

    Group j must hold r sequences of equal length N_j in dimension m_j, and
    the r sequences, flattened to vectors of length m_j * N_j, must have
    rank r.
    """
    groups = tuple(tuple(g) for g in groups)
    if not groups or any(not g for g in groups):
        raise EmptySequence("need at least one nonempty group")
    r = len(groups[0])
    for j, group in enumerate(groups):
        if len(group) != r:
            raise DimensionMismatch(f"group {j} has {len(group)} sequences, expected {r}")
        n, m = len(group[0]), group[0].space_dim
        for seq in group:
            if len(seq) != n or seq.space_dim != m:
                raise DimensionMismatch(f"sequences of group {j} must share length and dimension")
        flat = np.array([seq.vectors.ravel() for seq in group])
        if linalg.matrix_rank(flat, tol) < r:
            raise DependentGroup(j)
    return MinimalSumSequence(groups)


def materialize(ms: MinimalSumSequence) -> VectorSequence:
    """Expand the minimal sum into the full family on the product space.

    Length is prod(N_j), dimension prod(m_j), lexicographic order over the
    multi-index (n_1, ..., n_d).
    """
    out = []
    for multi in itertools.product(*(range(n) for n in ms.lengths)):
        acc = np.zeros(int(np.prod(ms.dims)), dtype=complex)
        for k in range(ms.r):
            v = ms.groups[0][k][multi[0]]
            for j in range(1, ms.d):
                v = np.kron(v, ms.groups[j][k][multi[j]])
            acc += v
        out.append(acc)
    return VectorSequence(np.array(out))


def verify_main_theorem(ms: MinimalSumSequence, tol: float = FRAME_TOL) -> dict:
    """Check the frame implication for a minimal sum of tensor products.

    Classifies the materialized family.  If it is a frame, every group's
    concatenation over k must be a frame; per-group spectral extremes are
    reported.  For r = 1 the product bounds must equal the products of the
    component bounds (both directions of the rank-one equivalence).
    """
    full = classify(materialize(ms), tol)
    report: dict = {"full": full.to_dict(), "r": ms.r, "d": ms.d}
    if not full.is_frame:
        report["claim"] = "no claim"
        return report
    report["claim"] = "every concatenated group must be a frame"
    per_group = []
    ok = True
    for j in range(ms.d):
        rep = classify(concatenate(list(ms.groups[j])), tol)
        per_group.append(rep.to_dict())
        ok = ok and rep.is_frame
    report["per_group"] = per_group
    report["all_groups_frames"] = ok
    if ms.r == 1:
        comps = [classify(ms.groups[j][0], tol) for j in range(ms.d)]
        prod_a = float(np.prod([c.lower_bound for c in comps]))
        prod_b = float(np.prod([c.bessel_bound for c in comps]))
        report["rank_one_check"] = {
            "component_product_A": prod_a,
            "component_product_B": prod_b,
            "bounds_multiply": bool(
                abs(prod_a - full.lower_bound) <= 1e-9 * max(1.0, full.bessel_bound)
                and abs(prod_b - full.bessel_bound) <= 1e-9 * max(1.0, full.bessel_bound)
            ),
            "all_components_frames": all(c.is_frame for c in comps),
        }
    return report


def two_term_disjunction_check(ms: MinimalSumSequence, tol: float = FRAME_TOL) -> dict:
    """For r = 2 frame sums, verify the three-branch disjunction.

    Either the first pure tensor family is a frame (branch 1), or the second
    is (branch 2), or some factor index i can be dropped from both groups so
    that every remaining component sequence is a frame (branch 3).
    """
    if ms.r != 2:
        raise WrongRank(f"disjunction check needs r = 2, got r = {ms.r}")
    full = classify(materialize(ms), tol)
    report: dict = {"full": full.to_dict()}
    if not full.is_frame:
        report["branch"] = None
        report["claim"] = "no claim"
        return report
    for k in (0, 1):
        pure = build_minimal_sum([[ms.groups[j][k]] for j in range(ms.d)])
        if classify(materialize(pure), tol).is_frame:
            report["branch"] = k + 1
            return report
    for i in range(ms.d):
        rest_ok = all(
            classify(ms.groups[j][k], tol).is_frame
            for j in range(ms.d)
            if j != i
            for k in (0, 1)
        )
        if rest_ok:
            report["branch"] = 3
            report["dropped_index"] = i
            return report
    report["branch"] = 0  # disjunction failed; callers treat this as an error
    return report
