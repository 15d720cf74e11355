"""Input parsing and the end-to-end report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import curve, glreduce, numeric, pencil
from .cohomology import sw_report
from .errors import InputError, VerificationError
from .qqi import QQi

DEFAULT_OPTIONS = {"d_max": None, "sample_count": 500, "seed": 0, "skip_numeric": False}


@dataclass
class InputSpec:
    W: Optional[curve.WeierstrassSet] = None
    D: Optional[curve.RealDivisor] = None
    quadrics: Optional[numeric.QuadricPair] = None
    options: dict = field(default_factory=lambda: dict(DEFAULT_OPTIONS))


def parse_input(data: dict) -> InputSpec:
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    options = dict(DEFAULT_OPTIONS)
    extra = set(data.get("options", {})) - set(DEFAULT_OPTIONS)
    if extra:
        raise InputError(f"unknown options: {sorted(extra)}")
    options.update(data.get("options", {}))
    if "quadrics" in data:
        try:
            A = np.array(data["quadrics"]["A"], dtype=float)
            B = np.array(data["quadrics"]["B"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad quadrics block: {exc}") from exc
        if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise InputError("quadric matrices must be square and of equal size")
        if not (np.allclose(A, A.T) and np.allclose(B, B.T)):
            raise InputError("quadric matrices must be symmetric")
        return InputSpec(quadrics=numeric.QuadricPair(A, B), options=options)
    for key in ("genus", "weierstrass", "divisor"):
        if key not in data:
            raise InputError(f"missing required field '{key}'")
    try:
        W = curve.WeierstrassSet(data["genus"], data["weierstrass"])
        entries = []
        for item in data["divisor"]:
            if set(item) != {"point", "mult"}:
                raise InputError(f"divisor entry needs exactly 'point' and 'mult': {item}")
            entries.append((QQi.parse(item["point"]), item["mult"]))
        D = curve.RealDivisor(entries)
        curve.check_divisor(W, D)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from exc
    return InputSpec(W, D, options=options)


def load_input(path) -> InputSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return parse_input(data)


class StageError(Exception):
    def __init__(self, stage: str, exc: Exception):
        super().__init__(f"[{stage}] {exc}")
        self.stage = stage
        self.cause = exc
        self.witness = getattr(exc, "witness", None)


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InputError:
        raise
    except Exception as exc:
        raise StageError(name, exc) from exc


def curve_info(W, D) -> dict:
    W2, D2, phi = _stage("normalize", curve.normalize_chart, W, D)
    topo = curve.classify_topology(W2)
    profile = curve.interval_parities(W2, D2)
    return {"W": W2, "D": D2, "transform": phi, "topology": topo, "profile": profile}


def normal_form_stage(W, D) -> dict:
    nf = _stage("normal_form", pencil.real_normal_form, W, D)
    pen = _stage("pencil", pencil.build_pencil, W, D)
    basis = pencil.basis_change(pen)
    check = _stage("normal_form_check", pencil.verify_normal_form, pen, basis, nf)
    return {"normal_form": nf, "pencil": pen, "check": check}


def classify_stage(nf) -> dict:
    cfg = glreduce.lambda_config(nf)
    inv = _stage("glreduce", glreduce.reduce, cfg)
    out = {"lambda": cfg, "invariant": inv, "diffeo": None}
    if nf.genus == 2:
        out["diffeo"] = glreduce.genus2_lookup(inv)
    return out


def build_report(spec: InputSpec, *, skip_numeric=None, samples=None, seed=None,
                 dmax=None) -> dict:
    """Run every stage and return a JSON-ready record (raises StageError)."""
    opts = spec.options
    skip_numeric = opts["skip_numeric"] if skip_numeric is None else skip_numeric
    samples = opts["sample_count"] if samples is None else samples
    seed = opts["seed"] if seed is None else seed
    dmax = opts["d_max"] if dmax is None else dmax

    info = curve_info(spec.W, spec.D)
    W, D = info["W"], info["D"]
    nfs = normal_form_stage(W, D)
    nf = nfs["normal_form"]
    cls = classify_stage(nf)
    sw = _stage("stiefel_whitney", sw_report, W.genus, dmax)

    profile = info["profile"]
    record = {
        "input": {**spec.W.to_record(), "divisor": spec.D.to_record()},
        "chart": {"transform": info["transform"].to_record(), "weierstrass": W.to_record()["weierstrass"],
                  "divisor": D.to_record()},
        "topology": info["topology"].to_record(),
        "intervals": profile.to_record(),
        "normal_form": {**nf.to_record(), "check": nfs["check"].to_record()},
        "gl_invariant": cls["invariant"].to_record(),
        "lambda": cls["lambda"].to_record(),
        "sw": sw.to_record(),
    }
    if cls["diffeo"] is not None:
        record["diffeo"] = cls["diffeo"].to_record()
        row = glreduce.GENUS2_ROWS.get((W.n, profile.k))
        inv = cls["invariant"]
        if row != (inv.s, inv.partition):
            raise StageError("consistency", VerificationError(
                f"(n, k) = ({W.n}, {profile.k}) selects row {row}, "
                f"but the quadrics reduce to {(inv.s, inv.partition)}"))
    if profile.k % 2 != 1:
        raise StageError("consistency", VerificationError(f"k = {profile.k} is even"))
    if not skip_numeric:
        qp = numeric.quadric_matrices(nf)
        rep = _stage("numeric", numeric.verify, qp, samples, seed)
        record["numeric"] = rep.to_record()
    record["status"] = "ok" if record.get("numeric", {}).get("status", "ok") == "ok" else "failed"
    return record
