"""Batch command line: run, resume, compare, info."""

import argparse
import sys

import numpy as np

from . import io
from .errors import PlanarFracError


def _cmd_run(args):
    cfg = io.load_config(args.config, strict=not args.lax)
    state, events = io.run_to_directory(cfg, args.out)
    for kind, t in events:
        print(f"{kind} at t={t:.6g}s")
    print(f"finished at t={state.time:.6g}s, "
          f"volume={state.volume():.6g} m^3, steps={state.step_count}")
    return 0


def _cmd_resume(args):
    out = args.out or args.resume_from
    state, events = io.run_to_directory(None, out, resume_from=args.resume_from)
    for kind, t in events:
        print(f"{kind} at t={t:.6g}s")
    print(f"finished at t={state.time:.6g}s, steps={state.step_count}")
    return 0


def _cmd_compare(args):
    params = {}
    if args.config:
        cfg = io.load_config(args.config, strict=False)
        src = cfg.mesh.locate(*cfg.injection.location)
        params = {
            "e_prime": cfg.material.e_prime,
            "q": cfg.injection.rate_at(0.0),
            "mu": cfg.fluid.viscosity,
            "mu_prime": 12.0 * cfg.fluid.viscosity,
            "k_prime": float(np.sqrt(32.0 / np.pi) * cfg.material.k_ic[src]),
        }
    for kv in args.param or ():
        key, val = kv.split("=", 1)
        params[key] = float(val)
    report = io.compare_with_oracle(args.summary, args.oracle, params,
                                    threshold=args.threshold)
    for key in sorted(report):
        if key.endswith("_error"):
            errs = report[key]
            print(f"{key}: max={np.max(errs):.4%} mean={np.mean(errs):.4%}")
    if "late_exponent" in report:
        print(f"late-time growth exponent: {report['late_exponent']:.4f}")
    print("PASS" if report["passed"] else "FAIL")
    return 0 if report["passed"] else 2


def _cmd_info(args):
    cfg = io.load_config(args.config, strict=not args.lax)
    mesh = cfg.mesh
    n = mesh.n_cells
    print(f"mesh: {mesh.nx} x {mesh.ny} cells "
          f"({mesh.dx:.6g} m x {mesh.dy:.6g} m each), {n} total")
    print(f"domain: [{mesh.x_min}, {mesh.x_max}] x [{mesh.y_min}, {mesh.y_max}] m")
    bytes_dense = n * n * 8
    print(f"elastic influence matrix: {n}^2 entries = {bytes_dense/1e9:.3f} GB "
          f"(double precision; halves in single)")
    print(f"coupled system worst case: {bytes_dense/1e9:.3f} GB more")
    print(f"material: E'={cfg.material.e_prime:.6g} Pa, "
          f"K_Ic in [{cfg.material.k_ic.min():.6g}, {cfg.material.k_ic.max():.6g}], "
          f"C_L in [{cfg.material.c_l.min():.6g}, {cfg.material.c_l.max():.6g}]")
    print(f"fluid: mu={cfg.fluid.viscosity:.6g} Pa.s, "
          f"turbulence={'on' if cfg.fluid.turbulence else 'off'}")
    print(f"injection at {cfg.injection.location}, "
          f"rates {list(cfg.injection.rates)} starting {list(cfg.injection.times)} s")
    print(f"sim: scheme={cfg.sim.scheme}, end_time={cfg.sim.end_time:.6g} s")
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="planarfrac",
        description="Planar 3D hydraulic fracture growth simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a simulation from a config file")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--out", required=True)
    p_run.add_argument("--lax", action="store_true",
                       help="warn instead of failing on unknown config keys")
    p_run.set_defaults(func=_cmd_run)

    p_res = sub.add_parser("resume", help="continue a run from its checkpoint")
    p_res.add_argument("--resume-from", required=True)
    p_res.add_argument("--out", help="output directory (default: resume dir)")
    p_res.set_defaults(func=_cmd_resume)

    p_cmp = sub.add_parser("compare", help="compare a summary series to an oracle")
    p_cmp.add_argument("--summary", required=True)
    p_cmp.add_argument("--oracle", required=True,
                       choices=("radial_m", "radial_k", "pkn"))
    p_cmp.add_argument("--config", help="config file supplying oracle parameters")
    p_cmp.add_argument("--param", action="append",
                       help="explicit oracle parameter key=value (repeatable)")
    p_cmp.add_argument("--threshold", type=float,
                       help="max relative error for exit code 0")
    p_cmp.set_defaults(func=_cmd_compare)

    p_info = sub.add_parser("info", help="print parsed config and memory estimate")
    p_info.add_argument("--config", required=True)
    p_info.add_argument("--lax", action="store_true")
    p_info.set_defaults(func=_cmd_info)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PlanarFracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
