"""Batch IO surface: TOML configs, CSV snapshot/summary emission with
atomic writes, binary checkpoints for exact resume, and oracle comparison.

File layout of a run directory:
    config.toml          copy of the validated configuration
    cells_NNNN.csv       per-cell table for snapshot NNNN (footprint cells)
    front_NNNN.csv       ordered front polyline vertices for snapshot NNNN
    summary.csv          one row per snapshot (rewritten atomically)
    checkpoint.bin       latest full-state checkpoint (versioned header)

All numeric fields are written with shortest round-trip precision, so a
fixed configuration and build reproduce byte-identical outputs.
"""

import io as _io
import os
import pickle
import sys
from dataclasses import dataclass

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import controller, reference
from .errors import ConfigError, PlanarFracError
from .front import OUTSIDE, STATUS_NAMES, chain_polyline
from .properties import config_to_dict, validate

CHECKPOINT_MAGIC = b"PFCKPT01"

SUMMARY_COLUMNS = (
    "time", "volume", "injected", "leaked", "efficiency",
    "mean_front_distance", "min_front_distance", "max_front_distance",
    "half_length_x", "half_height_y", "inlet_width", "inlet_pressure",
    "max_width", "max_velocity", "n_channel", "n_ribbon", "n_tip", "n_active",
)


def parse_config(path, strict=True):
    """Read a TOML config file into a raw dict (validation in properties)."""
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError([f"{path}: {exc}"]) from exc


def load_config(path, strict=True):
    return validate(parse_config(path, strict=strict), strict=strict)


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _atomic_write(path, text):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


@dataclass
class Snapshot:
    """Everything emitted for one output time."""

    time: float
    cells: list          # (index, x, y, w, p, status, active) rows, footprint only
    polyline: list       # list of (m, 2) arrays, ordered loops
    scalars: dict


def make_snapshot(state, source_xy=(0.0, 0.0)):
    mesh = state.mesh
    foot = state.footprint()
    rows = [(int(k), mesh.cell_centers[k, 0], mesh.cell_centers[k, 1],
             float(state.w[k]), float(state.p[k]),
             STATUS_NAMES[int(state.status[k])], bool(state.active[k]))
            for k in foot]

    loops = chain_polyline(state.segments)
    sx, sy = source_xy
    if loops:
        verts = np.vstack(loops)
        dist = np.hypot(verts[:, 0] - sx, verts[:, 1] - sy)
        half_x = float(np.max(np.abs(verts[:, 0] - sx)))
        half_y = float(np.max(np.abs(verts[:, 1] - sy)))
        dmin, dmax, dmean = float(dist.min()), float(dist.max()), float(dist.mean())
    else:
        half_x = half_y = dmin = dmax = dmean = 0.0

    src_cell = mesh.locate(sx, sy)
    volume = state.volume()
    scalars = {
        "time": state.time,
        "volume": volume,
        "injected": state.injected,
        "leaked": state.leaked,
        "efficiency": volume / state.injected if state.injected > 0 else 1.0,
        "mean_front_distance": dmean,
        "min_front_distance": dmin,
        "max_front_distance": dmax,
        "half_length_x": half_x,
        "half_height_y": half_y,
        "inlet_width": float(state.w[src_cell]),
        "inlet_pressure": float(state.p[src_cell]),
        "max_width": float(state.w.max()),
        "max_velocity": float(state.v_front.max()),
        "n_channel": int(np.sum(state.status == 1)),
        "n_ribbon": int(np.sum(state.status == 2)),
        "n_tip": int(np.sum(state.status == 3)),
        "n_active": int(np.sum(state.active)),
    }
    return Snapshot(state.time, rows, loops, scalars)


def write_snapshot(snap, out_dir, index):
    """Write the cell table and polyline files for one snapshot."""
    buf = _io.StringIO()
    buf.write("cell,x,y,width,pressure,status,active\n")
    for k, x, y, w, p, status, active in snap.cells:
        buf.write(f"{k},{_fmt(x)},{_fmt(y)},{_fmt(w)},{_fmt(p)},{status},{int(active)}\n")
    _atomic_write(os.path.join(out_dir, f"cells_{index:04d}.csv"), buf.getvalue())

    buf = _io.StringIO()
    buf.write("loop,x,y\n")
    for li, loop in enumerate(snap.polyline):
        for x, y in loop:
            buf.write(f"{li},{_fmt(x)},{_fmt(y)}\n")
    _atomic_write(os.path.join(out_dir, f"front_{index:04d}.csv"), buf.getvalue())


def write_summary(rows, out_dir):
    buf = _io.StringIO()
    buf.write(",".join(SUMMARY_COLUMNS) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(row[c]) for c in SUMMARY_COLUMNS) + "\n")
    _atomic_write(os.path.join(out_dir, "summary.csv"), buf.getvalue())


def read_summary(path):
    """summary.csv -> dict of numpy columns."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        data = [line.strip().split(",") for line in fh if line.strip()]
    cols = {name: np.array([float(row[i]) for row in data])
            for i, name in enumerate(header)}
    return cols


class RunWriter:
    """Collects run() callbacks and keeps the run directory up to date."""

    def __init__(self, out_dir, cfg):
        self.out_dir = out_dir
        self.cfg = cfg
        os.makedirs(out_dir, exist_ok=True)
        self.rows = []
        self.index = 0
        write_config(config_to_dict(cfg), os.path.join(out_dir, "config.toml"))

    def on_snapshot(self, state, diag):
        # a rollback may retract previously emitted snapshots
        self.rows = [r for r in self.rows if r["time"] <= state.time * (1 + 1e-12)]
        snap = make_snapshot(state, self.cfg.injection.location)
        write_snapshot(snap, self.out_dir, len(self.rows))
        self.rows.append(snap.scalars)
        write_summary(self.rows, self.out_dir)

    def on_checkpoint(self, state, runner):
        payload = {
            "config": config_to_dict(self.cfg),
            "state": state,
            "runner": runner,
            "rows": self.rows,
        }
        tmp = os.path.join(self.out_dir, "checkpoint.bin.tmp")
        with open(tmp, "wb") as fh:
            fh.write(CHECKPOINT_MAGIC)
            pickle.dump(payload, fh, protocol=4)
        os.replace(tmp, os.path.join(self.out_dir, "checkpoint.bin"))


def write_config(cfg_dict, path):
    """Emit the validated config as TOML (subset sufficient for round-trip)."""

    def fmt_value(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, (int, np.integer)):
            return str(int(v))
        if isinstance(v, (float, np.floating)):
            f = float(v)
            return repr(f) if np.isfinite(f) else ("inf" if f > 0 else "-inf")
        if isinstance(v, str):
            return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
        if isinstance(v, (list, tuple, np.ndarray)):
            return "[" + ", ".join(fmt_value(x) for x in v) + "]"
        raise PlanarFracError(f"cannot serialize config value {v!r}")

    lines = []
    for section, content in cfg_dict.items():
        lines.append(f"[{section}]")
        for key, value in content.items():
            if value is None:
                continue
            if isinstance(value, dict):
                inner = ", ".join(f"{k} = {fmt_value(v)}" for k, v in value.items())
                lines.append(f"{key} = {{ {inner} }}")
            else:
                lines.append(f"{key} = {fmt_value(value)}")
        lines.append("")
    _atomic_write(path, "\n".join(lines))


def read_checkpoint(path):
    with open(path, "rb") as fh:
        magic = fh.read(len(CHECKPOINT_MAGIC))
        if magic != CHECKPOINT_MAGIC:
            raise PlanarFracError(f"{path}: not a checkpoint file")
        return pickle.load(fh)


def resume(out_dir, cfg_override=None):
    """Load the latest checkpoint of a run directory.

    Returns (cfg, state, runner, rows). A config override must agree with
    the stored mesh section (an incompatible grid cannot be resumed).
    """
    payload = read_checkpoint(os.path.join(out_dir, "checkpoint.bin"))
    stored = payload["config"]
    if cfg_override is not None:
        if cfg_override.get("mesh") != stored.get("mesh"):
            raise ConfigError(["resume: mesh section differs from the checkpoint"])
        stored = cfg_override
    cfg = validate(stored, strict=False)
    return cfg, payload["state"], payload["runner"], payload["rows"]


def run_to_directory(cfg, out_dir, fail_hook=None, resume_from=None):
    """Execute controller.run with file emission; returns (state, events)."""
    if resume_from is not None:
        cfg2, state, runner, rows = resume(resume_from)
        writer = RunWriter(out_dir, cfg2)
        writer.rows = rows
        initial = (state, runner)
        cfg = cfg2
    else:
        writer = RunWriter(out_dir, cfg)
        initial = None
    return controller.run(cfg, on_snapshot=writer.on_snapshot,
                          on_checkpoint=writer.on_checkpoint,
                          fail_hook=fail_hook, initial=initial)


def compare_with_oracle(summary_path, oracle, params, threshold=None,
                        skip_rows=1):
    """Relative errors of a run's summary series against a named oracle.

    oracle: radial_m | radial_k | pkn. params: dict with the oracle's
    physical parameters (e_prime, q, and mu_prime / k_prime / mu+h).
    Returns a report dict with per-time errors and the fitted late-time
    growth exponent; exit handling is left to the caller.
    """
    cols = read_summary(summary_path)
    t = cols["time"][skip_rows:]
    report = {"oracle": oracle, "times": t}

    if oracle == "radial_m":
        ref = np.array([reference.radial_m(ti, params["e_prime"],
                                           params["mu_prime"], params["q"]).radius
                        for ti in t])
        sim = cols["mean_front_distance"][skip_rows:]
        report["radius_error"] = np.abs(sim - ref) / ref
        errors = report["radius_error"]
    elif oracle == "radial_k":
        ref = np.array([reference.radial_k(ti, params["e_prime"],
                                           params["k_prime"], params["q"]).radius
                        for ti in t])
        sim = cols["mean_front_distance"][skip_rows:]
        report["radius_error"] = np.abs(sim - ref) / ref
        errors = report["radius_error"]
    elif oracle == "pkn":
        samples = [reference.pkn(ti, params["e_prime"], params["mu"],
                                 params["q"], params["h"]) for ti in t]
        ref_l = np.array([s.half_length for s in samples])
        ref_w = np.array([s.inlet_width for s in samples])
        report["length_error"] = np.abs(cols["half_length_x"][skip_rows:] - ref_l) / ref_l
        report["inlet_width_error"] = np.abs(cols["inlet_width"][skip_rows:] - ref_w) / ref_w
        errors = report["length_error"]
    else:
        raise PlanarFracError(f"unknown oracle '{oracle}'")

    if len(t) >= 5:
        half = len(t) // 2
        report["late_exponent"] = reference.leakoff_scaling_exponent(
            t[half:], cols["mean_front_distance"][skip_rows:][half:])
    report["max_error"] = float(np.max(errors)) if len(errors) else 0.0
    report["passed"] = threshold is None or report["max_error"] <= threshold
    return report
