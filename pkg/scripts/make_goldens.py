"""Regenerate the golden perturbation instances under tests/golden/.

Each instance records a window, lattice, shift pair and phase satisfying the
divisibility conditions, together with the oracle-computed spectral extremes
of the perturbed system.  Instances are kept only when the oracle confirms
the loss of the lower frame bound.
"""

import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from frameforge import gabor, io  # noqa: E402
from frameforge.verify import PERTURB_INSTANCES  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "tests" / "golden"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    generators = ["gaussian", "twoexp", "sech", "rational"]
    kept = 0
    for idx, (n, a, b, alpha, beta, c_phase) in enumerate(PERTURB_INSTANCES):
        w = gabor.sample_window(generators[idx % len(generators)], n)
        rep = gabor.perturb_window(w, gabor.ZNLattice(n, a, b), alpha, beta, c_phase)
        if rep["spectral_ratio"] >= 1e-8:
            print(f"skipping instance {idx}: ratio {rep['spectral_ratio']:.2e}")
            continue
        payload = {
            "window": io.window_to_dict(w),
            "N": n,
            "a": a,
            "b": b,
            "alpha": alpha,
            "beta": beta,
            "c_phase": c_phase,
            "lambda_min": rep["lambda_min"],
            "lambda_max": rep["lambda_max"],
            "spectral_ratio": rep["spectral_ratio"],
        }
        io.save_json(OUT / f"perturb_{kept:02d}.json", payload)
        kept += 1
    print(f"wrote {kept} golden instances to {OUT}")


if __name__ == "__main__":
    main()
