"""Seeded verification suites over random instances.

Every suite draws from its own deterministic stream derived from the global
seed and a fixed per-suite key, so suites are order-independent and two runs
with the same seed produce identical reports.
"""

from __future__ import annotations

import numpy as np

from . import gabor, schmidt, sequences
from .linalg import inner, op_norm, tensor_op
from .schmidt import BipartiteShape, FSROperator
from .sequences import VectorSequence, build_minimal_sum, classify, concatenate, materialize


def suite_rng(seed: int, key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(key,)))


def _cnormal(rng, *shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_fsr_operator(rng, shape: BipartiteShape, r: int) -> FSROperator:
    """Random FSR operator whose oracle Schmidt rank is exactly r."""
    while True:
        terms = tuple(
            (_cnormal(rng, shape.k1, shape.h1), _cnormal(rng, shape.k2, shape.h2))
            for _ in range(r)
        )
        f = FSROperator(shape, terms)
        if schmidt.reshuffle_rank(f.materialize(), shape)[0] == r:
            return f


def random_vector_sequence(rng, dim: int, count: int) -> VectorSequence:
    return VectorSequence(_cnormal(rng, count, dim))


def random_frame_minimal_sum(rng, dims, lengths, r: int, max_tries: int = 50):
    """Random minimal sum whose materialization is a frame (retry until so)."""
    for _ in range(max_tries):
        groups = [
            [random_vector_sequence(rng, m, n) for _ in range(r)]
            for m, n in zip(dims, lengths)
        ]
        try:
            ms = build_minimal_sum(groups)
        except Exception:
            continue
        if classify(materialize(ms)).is_frame:
            return ms
    raise RuntimeError("failed to draw a frame minimal sum")


def branch3_minimal_sum(rng, m1: int = 3, n: int = 4):
    """r=2 frame instance forcing the cross-component branch.

    Both second-factor component sequences live on a single line of C^2, so
    neither pure tensor family is a frame, yet the sum is; dropping the
    second factor leaves two first-factor frames.
    """
    while True:
        g10 = random_vector_sequence(rng, m1, n)
        g11 = random_vector_sequence(rng, m1, n)
        coeff0 = _cnormal(rng, n)
        coeff1 = _cnormal(rng, n)
        e0 = np.array([1.0, 0.0], dtype=complex)
        e1 = np.array([0.0, 1.0], dtype=complex)
        g20 = VectorSequence(np.outer(coeff0, e0))
        g21 = VectorSequence(np.outer(coeff1, e1))
        try:
            ms = build_minimal_sum([[g10, g11], [g20, g21]])
        except Exception:
            continue
        if classify(materialize(ms)).is_frame:
            return ms


def branch1_minimal_sum(rng, m1: int = 2, m2: int = 2, n: int = 3, eps: float = 1e-2):
    """r=2 frame instance where the first pure tensor family is a frame."""
    while True:
        groups = [
            [random_vector_sequence(rng, m, n), VectorSequence(eps * _cnormal(rng, n, m))]
            for m in (m1, m2)
        ]
        try:
            ms = build_minimal_sum(groups)
        except Exception:
            continue
        pure = build_minimal_sum([[g[0]] for g in ms.groups])
        if classify(materialize(ms)).is_frame and classify(materialize(pure)).is_frame:
            return ms


def suite_prop22_identities(rng, trials: int) -> dict:
    """Contraction norm identities, the P norm bound, and D continuity."""
    worst_norm = 0.0
    bound_ok = True
    for _ in range(trials):
        shape = BipartiteShape(*rng.integers(2, 4, size=4))
        v1, v2 = _cnormal(rng, shape.k1), _cnormal(rng, shape.k2)
        u1, u2 = _cnormal(rng, shape.h1), _cnormal(rng, shape.h2)
        m1 = np.array([
            schmidt.contract_V1(v1, np.eye(shape.codomain_dim, dtype=complex)[:, c], shape)
            for c in range(shape.codomain_dim)
        ]).T
        m2 = np.array([
            schmidt.contract_V2(v2, np.eye(shape.codomain_dim, dtype=complex)[:, c], shape)
            for c in range(shape.codomain_dim)
        ]).T
        worst_norm = max(
            worst_norm,
            abs(op_norm(m1) - np.linalg.norm(v1)),
            abs(op_norm(m2) - np.linalg.norm(v2)),
        )
        f = _cnormal(rng, shape.codomain_dim, shape.domain_dim)
        g = _cnormal(rng, shape.codomain_dim, shape.domain_dim)
        a, b = schmidt.P_uv(f, g, u1, u2, v1, v2, shape)
        cap = (
            np.linalg.norm(u1) * np.linalg.norm(u2) * np.linalg.norm(v1) * np.linalg.norm(v2)
        )
        if op_norm(np.kron(a, b)) > cap * op_norm(f) * op_norm(g) + 1e-9:
            bound_ok = False
        da = np.kron(*schmidt.D_uv(f, u1, u2, v1, v2, shape))
        db = np.kron(*schmidt.D_uv(g, u1, u2, v1, v2, shape))
        lip = cap * (op_norm(f) + op_norm(g)) * op_norm(f - g)
        if op_norm(da - db) > lip + 1e-9:
            bound_ok = False
    return {
        "passed": bool(worst_norm <= 1e-10 and bound_ok),
        "trials": trials,
        "worst_norm_identity_error": worst_norm,
        "inequalities_ok": bound_ok,
    }


def suite_rank_one_fixed_point(rng, trials: int) -> dict:
    """D(F) = <F(u), v> F holds exactly when the oracle rank is one."""
    ok = True
    worst = 0.0
    for t in range(trials):
        shape = BipartiteShape(2, 3, 2, 3)
        r = 1 if t % 2 == 0 else 2
        f = random_fsr_operator(rng, shape, r).materialize()
        u1, u2 = _cnormal(rng, shape.h1), _cnormal(rng, shape.h2)
        v1, v2 = _cnormal(rng, shape.k1), _cnormal(rng, shape.k2)
        p = schmidt.pairing(f, u1, u2, v1, v2, shape)
        d = np.kron(*schmidt.D_uv(f, u1, u2, v1, v2, shape))
        resid = np.linalg.norm(d - p * f) / np.linalg.norm(f)
        if r == 1:
            worst = max(worst, resid)
            ok = ok and resid <= 1e-9
        else:
            ok = ok and resid > 1e-6
    return {"passed": bool(ok), "trials": trials, "worst_rank_one_residual": worst}


def suite_deflation_rank_law(rng, trials: int) -> dict:
    """Stepwise rank drop, term count vs oracle, and reconstruction error."""
    ok = True
    worst_recon = 0.0
    for t in range(trials):
        dims = tuple(rng.integers(2, 4, size=4))
        shape = BipartiteShape(*dims)
        max_rank = min(shape.k1 * shape.h1, shape.k2 * shape.h2, 4)
        r = 1 + t % max_rank
        f = random_fsr_operator(rng, shape, r).materialize()
        norm_f = np.linalg.norm(f)
        residual = f.copy()
        rank = r
        for _ in range(r):
            dec = schmidt.schmidt_decompose_deflation(residual, shape)
            # replay one pivot step to watch the rank drop
            a, b = dec.terms[0]
            residual = residual - np.kron(a, b)
            new_rank = schmidt.reshuffle_rank(residual, shape, tol=1e-7, scale=norm_f)[0]
            if new_rank != rank - 1:
                ok = False
                break
            rank = new_rank
        dec = schmidt.schmidt_decompose_deflation(f, shape)
        oracle_rank, _ = schmidt.reshuffle_rank(f, shape)
        recon = np.linalg.norm(f - dec.materialize()) / norm_f
        worst_recon = max(worst_recon, recon)
        ok = ok and dec.rank_bound == oracle_rank == r and recon <= 1e-8
    return {"passed": bool(ok), "trials": trials, "worst_reconstruction": worst_recon}


def suite_inverse_factors(rng, trials: int) -> dict:
    """Left and right factor identities on invertible rank-2 operators."""
    ok = True
    worst = 0.0
    shape = BipartiteShape(2, 2, 2, 2)
    for _ in range(trials):
        while True:
            fsr = random_fsr_operator(rng, shape, 2)
            f = fsr.materialize()
            if np.linalg.cond(f) < 1e6:
                break
        inv = np.linalg.inv(f)
        u1, v1 = _cnormal(rng, 2), _cnormal(rng, 2)
        v1 = v1 / np.conj(inner(u1, v1))
        u2, v2 = _cnormal(rng, 2), _cnormal(rng, 2)
        v2 = v2 / np.conj(inner(u2, v2))
        for side in ("left", "right"):
            pairs = schmidt.inverse_factors(fsr, inv, side, u1, u2, v1, v2)
            if side == "left":
                s1 = sum(l1 @ a for (l1, _), (a, _) in zip(pairs, fsr.terms))
                s2 = sum(l2 @ b for (_, l2), (_, b) in zip(pairs, fsr.terms))
            else:
                s1 = sum(a @ r1 for (r1, _), (a, _) in zip(pairs, fsr.terms))
                s2 = sum(b @ r2 for (_, r2), (_, b) in zip(pairs, fsr.terms))
            resid = max(
                np.linalg.norm(s1 - np.eye(2)), np.linalg.norm(s2 - np.eye(2))
            )
            worst = max(worst, resid)
            ok = ok and resid <= 1e-8
    return {"passed": bool(ok), "trials": trials, "worst_identity_residual": worst}


def suite_span_uniqueness(rng, trials: int) -> dict:
    """Deflation terms and reshuffle-SVD terms span the same factor spaces."""
    ok = True
    for t in range(trials):
        shape = BipartiteShape(2, 3, 2, 3)
        r = 1 + t % 3
        f = random_fsr_operator(rng, shape, r).materialize()
        dec = schmidt.schmidt_decompose_deflation(f, shape)
        _, canon = schmidt.reshuffle_rank(f, shape)
        if len(dec.terms) != len(canon.terms):
            ok = False
            continue
        ok = ok and schmidt.spans_equal(dec.terms, canon.terms, 1)
        ok = ok and schmidt.spans_equal(dec.terms, canon.terms, 2)
    return {"passed": bool(ok), "trials": trials}


def suite_tensor_bounds_multiply(rng, trials: int) -> dict:
    """Optimal bounds of tensor products are products of component bounds."""
    ok = True
    worst = 0.0
    for _ in range(trials):
        d = int(rng.integers(2, 4))
        seqs = [
            random_vector_sequence(rng, int(rng.integers(2, 4)), int(rng.integers(2, 5)))
            for _ in range(d)
        ]
        prod_rep = classify(sequences.tensor_sequences(seqs))
        comp = [classify(s) for s in seqs]
        a_exp = float(np.prod([c.lower_bound for c in comp]))
        b_exp = float(np.prod([c.bessel_bound for c in comp]))
        scale = max(1.0, b_exp)
        err = max(
            abs(prod_rep.lower_bound - a_exp) / scale,
            abs(prod_rep.bessel_bound - b_exp) / scale,
        )
        worst = max(worst, err)
        ok = ok and err <= 1e-9
    return {"passed": bool(ok), "trials": trials, "worst_bound_error": worst}


def suite_minimal_sum_frames(rng, trials: int) -> dict:
    """Frame minimal sums: concatenated groups are frames; Bessel bound is
    subadditive in the component bounds."""
    ok = True
    worst_ratio = 1.0
    for t in range(trials):
        d = 2 + t % 2
        r = 1 + t % 3
        dims = [int(rng.integers(2, 5)) for _ in range(d)]
        lengths = [m + int(rng.integers(0, 3)) for m in dims]
        ms = random_frame_minimal_sum(rng, dims, lengths, r)
        full = classify(materialize(ms))
        for j in range(ms.d):
            rep = classify(concatenate(list(ms.groups[j])))
            ratio = rep.lower_bound / rep.bessel_bound
            worst_ratio = min(worst_ratio, ratio)
            ok = ok and ratio > 1e-8
        cap = sum(
            np.sqrt(np.prod([classify(ms.groups[j][k]).bessel_bound for j in range(ms.d)]))
            for k in range(ms.r)
        ) ** 2
        ok = ok and full.bessel_bound <= cap + 1e-9 * max(1.0, cap)
    return {"passed": bool(ok), "trials": trials, "worst_group_ratio": worst_ratio}


def suite_two_term_disjunction(rng, trials: int) -> dict:
    """Constructed r=2 frame instances report a branch that re-verifies."""
    ok = True
    branch3 = 0
    for t in range(trials):
        ms = branch3_minimal_sum(rng) if t % 2 == 0 else branch1_minimal_sum(rng)
        report = sequences.two_term_disjunction_check(ms)
        if report["branch"] in (None, 0):
            ok = False
            continue
        if report["branch"] == 3:
            branch3 += 1
            i = report["dropped_index"]
            ok = ok and all(
                classify(ms.groups[j][k]).is_frame
                for j in range(ms.d)
                if j != i
                for k in (0, 1)
            )
        else:
            k = report["branch"] - 1
            pure = build_minimal_sum([[ms.groups[j][k]] for j in range(ms.d)])
            ok = ok and classify(materialize(pure)).is_frame
    return {"passed": bool(ok and branch3 >= min(5, trials // 2)), "trials": trials, "branch3_count": branch3}


def suite_gabor_density(rng, trials: int) -> dict:
    """Exhaustive divisor sweeps obey the discrete density law; the full
    lattice is tight with bound N * ||g||^2."""
    ok = True
    worst_tight = 0.0
    for n in (4, 6, 8, 12):
        for gen in ("gaussian", "twoexp", "sech"):
            w = gabor.sample_window(gen, n)
            for row in gabor.density_sweep(w):
                ok = ok and row["density_ok"]
            s = sequences.frame_operator(gabor.gabor_system(w, gabor.ZNLattice(n, 1, 1)))
            tight_err = np.linalg.norm(s - n * np.linalg.norm(w.g) ** 2 * np.eye(n))
            worst_tight = max(worst_tight, tight_err)
            ok = ok and tight_err <= 1e-10
    return {"passed": bool(ok), "trials": trials, "worst_tightness_error": worst_tight}


def suite_oversampling(rng, trials: int) -> dict:
    """Refined lattices scale valid frame bounds by the refinement factors."""
    ok = True
    cases = 0
    for n in (8, 12):
        for a in gabor.divisors(n):
            for b in gabor.divisors(n):
                for u in gabor.divisors(a):
                    for v in gabor.divisors(b):
                        if u == v == 1:
                            continue
                        w = gabor.ZNWindow(_cnormal(rng, n))
                        rep = gabor.oversample_check(w, gabor.ZNLattice(n, a, b), u, v)
                        ok = ok and rep["lower_ok"] and rep["upper_ok"]
                        cases += 1
    return {"passed": bool(ok), "trials": cases}


# (N, a, b, alpha, beta, c_phase) with alpha*b = beta*a = 0 mod N and the
# perturbing unitary squaring to the identity, so 1 + c * P is singular.
PERTURB_INSTANCES = [
    (8, 2, 2, 4, 4, 0.0),
    (8, 2, 2, 4, 0, 0.0),
    (8, 2, 2, 0, 4, 0.0),
    (8, 4, 2, 4, 4, 0.0),
    (8, 2, 4, 4, 4, 0.0),
    (12, 2, 2, 6, 6, 0.0),
    (12, 2, 2, 6, 0, 0.0),
    (12, 2, 1, 0, 6, 0.0),
    (12, 6, 2, 6, 6, 0.0),
    (16, 2, 2, 8, 8, 0.0),
    (16, 4, 4, 8, 8, 0.0),
    (6, 2, 2, 3, 3, 0.25),
]


def suite_perturbation(rng, trials: int) -> dict:
    """g + c M_beta T_alpha g loses the lower frame bound on the instance set."""
    ok = True
    worst_ratio = 0.0
    for n, a, b, alpha, beta, c_phase in PERTURB_INSTANCES:
        g = _cnormal(rng, n)
        w = gabor.ZNWindow(g / np.linalg.norm(g))
        rep = gabor.perturb_window(w, gabor.ZNLattice(n, a, b), alpha, beta, c_phase)
        worst_ratio = max(worst_ratio, rep["spectral_ratio"])
        ok = ok and rep["spectral_ratio"] < 1e-8
    return {"passed": bool(ok), "trials": len(PERTURB_INSTANCES), "worst_spectral_ratio": worst_ratio}


SUITES = [
    ("prop22_identities", suite_prop22_identities),
    ("rank_one_fixed_point", suite_rank_one_fixed_point),
    ("deflation_rank_law", suite_deflation_rank_law),
    ("inverse_factors", suite_inverse_factors),
    ("span_uniqueness", suite_span_uniqueness),
    ("tensor_bounds_multiply", suite_tensor_bounds_multiply),
    ("minimal_sum_frames", suite_minimal_sum_frames),
    ("two_term_disjunction", suite_two_term_disjunction),
    ("gabor_density", suite_gabor_density),
    ("oversampling", suite_oversampling),
    ("perturbation", suite_perturbation),
]


def run_all(seed: int, trials: int) -> dict:
    """Run every suite on its own seed-derived stream; report is deterministic."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    results = {}
    for key, (name, fn) in enumerate(SUITES):
        rng = suite_rng(seed, key)
        results[name] = fn(rng, trials)
    return {
        "seed": seed,
        "trials": trials,
        "suites": results,
        "all_passed": all(r["passed"] for r in results.values()),
    }
