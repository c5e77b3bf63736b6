"""JSON / CSV serialization for all data files shared between modules."""

from __future__ import annotations

import csv
import json

import numpy as np

from .gabor import ZNWindow
from .schmidt import BipartiteShape, FSROperator
from .sequences import MinimalSumSequence, VectorSequence, build_minimal_sum

SWEEP_FIELDS = ["N", "a", "b", "count", "A", "B", "is_frame", "is_riesz", "ab_over_N"]


def vector_to_dict(x) -> dict:
    x = np.asarray(x, dtype=complex)
    return {"dim": int(x.shape[0]), "entries": [[float(z.real), float(z.imag)] for z in x]}


def vector_from_dict(d) -> np.ndarray:
    entries = np.array([complex(re, im) for re, im in d["entries"]])
    if entries.shape[0] != int(d["dim"]):
        raise ValueError(f"vector file declares dim {d['dim']} but has {entries.shape[0]} entries")
    return entries


def operator_to_dict(a) -> dict:
    a = np.asarray(a, dtype=complex)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def operator_from_dict(d) -> np.ndarray:
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = np.array([complex(re, im) for re, im in d["entries"]])
    if entries.shape[0] != rows * cols:
        raise ValueError(f"operator file declares {rows}x{cols} but has {entries.shape[0]} entries")
    return entries.reshape(rows, cols)


def sequence_to_dict(seq: VectorSequence) -> dict:
    return {
        "space_dim": seq.space_dim,
        "vectors": [vector_to_dict(v) for v in seq.vectors],
    }


def sequence_from_dict(d) -> VectorSequence:
    vecs = [vector_from_dict(v) for v in d["vectors"]]
    seq = VectorSequence.from_vectors(vecs)
    if seq.space_dim != int(d["space_dim"]):
        raise ValueError("sequence file dimension mismatch")
    return seq


def minimal_sum_to_dict(ms: MinimalSumSequence) -> dict:
    return {
        "d": ms.d,
        "r": ms.r,
        "groups": [[sequence_to_dict(s) for s in group] for group in ms.groups],
    }


def minimal_sum_from_dict(d) -> MinimalSumSequence:
    groups = [[sequence_from_dict(s) for s in group] for group in d["groups"]]
    ms = build_minimal_sum(groups)
    if ms.d != int(d["d"]) or ms.r != int(d["r"]):
        raise ValueError("minimal sum file d/r mismatch")
    return ms


def fsr_to_dict(f: FSROperator) -> dict:
    return {
        "shape": {"h1": f.shape.h1, "h2": f.shape.h2, "k1": f.shape.k1, "k2": f.shape.k2},
        "terms": [{"A": operator_to_dict(a), "B": operator_to_dict(b)} for a, b in f.terms],
    }


def fsr_from_dict(d) -> FSROperator:
    s = d["shape"]
    shape = BipartiteShape(int(s["h1"]), int(s["h2"]), int(s["k1"]), int(s["k2"]))
    terms = tuple(
        (operator_from_dict(t["A"]), operator_from_dict(t["B"])) for t in d["terms"]
    )
    return FSROperator(shape, terms)


def window_to_dict(w: ZNWindow) -> dict:
    d = vector_to_dict(w.g)
    d["N"] = w.N
    d["generator"] = w.generator
    return d


def window_from_dict(d) -> ZNWindow:
    return ZNWindow(vector_from_dict(d), d.get("generator"))


def save_json(path, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def write_sweep_csv(path, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in SWEEP_FIELDS})


def read_sweep_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        out = []
        for row in csv.DictReader(fh):
            out.append(
                {
                    "N": int(row["N"]),
                    "a": int(row["a"]),
                    "b": int(row["b"]),
                    "count": int(row["count"]),
                    "A": float(row["A"]),
                    "B": float(row["B"]),
                    "is_frame": row["is_frame"] == "True",
                    "is_riesz": row["is_riesz"] == "True",
                    "ab_over_N": float(row["ab_over_N"]),
                }
            )
        return out
