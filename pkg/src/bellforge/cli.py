"""Command-line interface.

Subcommands:

  bell make        write a closed-form state as JSON
  bell integrate   evaluate the coherent-state integral and compare
  verify ...       run verification checks (unity, measure, antimap,
                   consistency, moments, fourier, rank, schmidt, all)
  export           dump walsh/clock/shift matrices as JSON

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or config error.
Stdout and every file written are byte-identical for identical flags and seed;
the wall-time line goes to stderr and is excluded from that contract.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

import numpy as np

from . import analysis, bell, fourier
from .errors import BellforgeError
from .flatmaps import (
    FlatMapId,
    cp1_catalog,
    cpn_catalog,
    flat_projector,
    flat_state,
    global_unitary,
    verify_antimap,
)
from .coherent import level_one_states_from_homogeneous, spin_states_from_homogeneous
from .projective import projector_of
from .quadrature import MCSpec, QuadratureSpecCP1, QuadratureSpecCP2, sample_fubini_study

DEFAULT_SEED = 0
QUAD_TOL = 1e-10
MC_TOL = 5e-3
ANTIMAP_TOL = 1e-12
CONSISTENCY_TOL = 1e-12
FOURIER_TOL = 1e-13
SCHMIDT_TOL = 1e-10
ENTROPY_TOL = 1e-9


class Check:
    """One named check: residual <= tolerance, or exact equality for ranks."""

    def __init__(self, name: str, value, tolerance, mode: str = "le"):
        self.name = name
        self.value = value
        self.tolerance = tolerance
        self.mode = mode

    @property
    def ok(self) -> bool:
        if self.mode == "eq":
            return self.value == self.tolerance
        return self.value <= self.tolerance


class Report:
    def __init__(self, command: str, config: dict):
        self.command = command
        self.config = config
        self.checks: list[Check] = []
        self.notes: list[str] = []

    def add(self, name, value, tolerance, mode="le") -> Check:
        check = Check(name, value, tolerance, mode)
        self.checks.append(check)
        return check

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def emit(self, out=sys.stdout) -> None:
        print(f"command: {self.command}", file=out)
        cfg = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(self.config.items()))
        print(f"config: {cfg}", file=out)
        for line in self.notes:
            print(line, file=out)
        for c in self.checks:
            rel = "==" if c.mode == "eq" else "<="
            status = "PASS" if c.ok else "FAIL"
            print(
                f"check {c.name}: value={_fmt(c.value)} {rel} {_fmt(c.tolerance)} {status}",
                file=out,
            )
        if self.checks:
            passed = sum(c.ok for c in self.checks)
            verdict = "PASS" if self.ok else "FAIL"
            print(f"result: {verdict} ({passed}/{len(self.checks)})", file=out)

    def write_csv(self, path: str) -> None:
        with open(path, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["check", "value", "tolerance", "status"])
            for c in self.checks:
                writer.writerow(
                    [c.name, _fmt(c.value), _fmt(c.tolerance), "PASS" if c.ok else "FAIL"]
                )

    def exit_code(self) -> int:
        return 0 if self.ok else 1


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("BELLFORGE_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


def _state_document(state: bell.BipartiteState) -> dict:
    return {
        "kind": "bipartite",
        "dim_a": state.dim_a,
        "dim_b": state.dim_b,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }


def _matrix_document(matrix: np.ndarray) -> dict:
    return {
        "kind": "matrix",
        "dim": matrix.shape[0],
        "entries": [
            [[float(v.real), float(v.imag)] for v in row] for row in np.asarray(matrix, complex)
        ],
    }


def _write_json(document: dict, path: str | None) -> None:
    text = json.dumps(document, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w") as handle:
            handle.write(text + "\n")


def _flat_from_args(args, parser) -> tuple[FlatMapId, int | None, int]:
    """Return (flat id, two_j or None, state dimension) from --space/--flat/--n/--p/--q."""
    space = args.space
    if args.flat:
        flat = FlatMapId.parse(args.flat)
        if space == "cp1" and flat.space != "cp1":
            parser.error(f"--flat {args.flat} does not belong to cp1")
        if space == "cp2" and (flat.space != "cpn" or flat.n != 2):
            parser.error(f"--flat {args.flat} does not belong to cp2")
        if space == "cpn" and flat.space != "cpn":
            parser.error(f"--flat {args.flat} does not belong to cpn")
    elif space == "cpn":
        if args.n is None:
            parser.error("--space cpn needs --n (and --p/--q or --flat)")
        flat = FlatMapId.cpn(args.n - 1, args.p, args.q)
    else:
        parser.error("--flat is required for cp1/cp2")
    if flat.space == "cp1":
        two_j = args.two_j if args.two_j is not None else 1
        return flat, two_j, two_j + 1
    if space == "cpn" and args.n is not None and flat.n != args.n - 1:
        parser.error(f"--n {args.n} (dimension) conflicts with --flat {args.flat}")
    return flat, None, flat.n + 1


def _closed_form_for(flat: FlatMapId, two_j: int | None) -> bell.BipartiteState:
    if flat.space == "cp1":
        return bell.closed_form_bell_cp1(two_j, flat.tag)
    return bell.generalized_bell(flat.n + 1, flat.p, flat.q)


def _closed_form_label(flat: FlatMapId, two_j: int | None) -> str:
    if flat.space == "cp1":
        sign = "(-1)^k " if flat.tag in (2, 4) else ""
        partner = "k" if flat.tag in (1, 2) else "2j-k"
        return f"sum_k {sign}|k>|{partner}> / sqrt(2j+1), 2j = {two_j}"
    d = flat.n + 1
    return (
        f"sum_k omega^({flat.p}k) |k>|k+{flat.q} mod {d}> / sqrt({d}), "
        f"omega = exp(2 pi i/{d})"
    )


def _quadrature_spec(args, flat: FlatMapId, two_j: int | None):
    if flat.space == "cp1":
        base = QuadratureSpecCP1.for_spin(two_j)
        return QuadratureSpecCP1(
            radial_nodes=args.radial_nodes or base.radial_nodes,
            angular_nodes=args.angular_nodes or base.angular_nodes,
        )
    return QuadratureSpecCP2(
        simplex_nodes=args.simplex_nodes or 4,
        angular_nodes=args.angular_nodes or 7,
    )


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_bell_make(args, parser) -> int:
    flat, two_j, _ = _flat_from_args(args, parser)
    state = _closed_form_for(flat, two_j)
    config = {"space": args.space, "flat": str(flat)}
    if two_j is not None:
        config["two_j"] = two_j
    report = Report("bell make", config)
    report.note(f"closed form: {_closed_form_label(flat, two_j)}")
    document = _state_document(state)
    if args.output:
        _write_json(document, args.output)
        report.note(f"wrote: {args.output}")
        report.emit()
    else:
        report.emit()
        _write_json(document, None)
    return 0


def _cmd_bell_integrate(args, parser) -> int:
    flat, two_j, dim = _flat_from_args(args, parser)
    seed = _resolve_seed(args)
    use_mc = args.mc_samples is not None
    if flat.space == "cpn" and flat.n > 2 and not use_mc:
        parser.error(f"CP^{flat.n} has no deterministic rule; pass --mc-samples")
    if use_mc:
        spec = MCSpec(samples=args.mc_samples, seed=seed)
        config_spec = {"mc_samples": args.mc_samples, "seed": seed}
        tolerance = args.tolerance if args.tolerance is not None else MC_TOL
    else:
        spec = _quadrature_spec(args, flat, two_j)
        config_spec = {k: getattr(spec, k) for k in spec.__dataclass_fields__}
        tolerance = args.tolerance if args.tolerance is not None else QUAD_TOL

    state, norm_residual = bell.fivel_bell(flat, spec, two_j=two_j)
    target = _closed_form_for(flat, two_j)
    distance = analysis.state_distance(state, target)

    config = {"space": args.space, "flat": str(flat), **config_spec}
    if two_j is not None:
        config["two_j"] = two_j
    report = Report("bell integrate", config)
    report.note(f"closed form: {_closed_form_label(flat, two_j)}")
    report.add("state-distance", distance, tolerance)
    report.add("norm-residual", norm_residual, tolerance)
    if args.output:
        _write_json(_state_document(state), args.output)
        report.note(f"wrote: {args.output}")
    report.emit()
    if args.csv:
        report.write_csv(args.csv)
    return report.exit_code()


def _verify_unity(args, parser, report: Report) -> None:
    tol = args.tolerance if args.tolerance is not None else QUAD_TOL
    if args.space == "cp1":
        two_j = args.two_j if args.two_j is not None else 1
        spec = None
        if args.radial_nodes or args.angular_nodes:
            base = QuadratureSpecCP1.for_spin(two_j)
            spec = QuadratureSpecCP1(
                radial_nodes=args.radial_nodes or base.radial_nodes,
                angular_nodes=args.angular_nodes or base.angular_nodes,
            )
        report.add(f"unity-cp1-two_j-{two_j}", analysis.resolution_of_unity_cp1(two_j, spec), tol)
    elif args.space == "cp2":
        spec = None
        if args.simplex_nodes or args.angular_nodes:
            spec = QuadratureSpecCP2(
                simplex_nodes=args.simplex_nodes or 4,
                angular_nodes=args.angular_nodes or 7,
            )
        report.add("unity-cp2", analysis.resolution_of_unity_cp2(spec), tol)
    else:
        parser.error("verify unity supports --space cp1 or cp2")


def _verify_measure(args, parser, report: Report) -> None:
    tol = args.tolerance if args.tolerance is not None else QUAD_TOL
    if args.space == "cp1":
        two_j = args.two_j if args.two_j is not None else 1
        value = analysis.total_measure_cp1(two_j)
        report.note(f"total measure: {_fmt(value)} (expected {two_j + 1})")
        report.add(f"measure-cp1-two_j-{two_j}", abs(value - (two_j + 1)), tol)
    elif args.space == "cp2":
        value = analysis.total_measure_cp2()
        report.note(f"total measure: {_fmt(value)} (expected 3)")
        report.add("measure-cp2", abs(value - 3.0), tol)
    else:
        parser.error("verify measure supports --space cp1 or cp2")


def _sampled_pairs(manifold_n: int, count: int, seed: int):
    rows = sample_fubini_study(manifold_n, MCSpec(samples=2 * count, seed=seed))
    return list(zip(rows[:count], rows[count:]))


def _verify_antimap(args, parser, report: Report) -> None:
    flat = FlatMapId.parse(args.flat) if args.flat else parser.error("--flat is required")
    tol = args.tolerance if args.tolerance is not None else ANTIMAP_TOL
    seed = _resolve_seed(args)
    two_j = args.two_j if args.two_j is not None else 1
    manifold_n = 1 if flat.space == "cp1" else flat.n
    pairs = _sampled_pairs(manifold_n, args.pairs, seed)
    value = verify_antimap(flat, pairs, two_j=two_j)
    report.add(f"antimap-{flat}", value, tol)


def _consistency_residual(flat: FlatMapId, points: int, seed: int, two_j: int) -> float:
    manifold_n = 1 if flat.space == "cp1" else flat.n
    rows = sample_fubini_study(manifold_n, MCSpec(samples=points, seed=seed))
    if flat.space == "cp1":
        states = spin_states_from_homogeneous(two_j, rows)
    else:
        states = level_one_states_from_homogeneous(rows)
    worst = 0.0
    for v in states:
        lhs = projector_of(flat_state(flat, v))
        rhs = flat_projector(flat, projector_of(v))
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return worst


def _verify_consistency(args, parser, report: Report) -> None:
    flat = FlatMapId.parse(args.flat) if args.flat else parser.error("--flat is required")
    tol = args.tolerance if args.tolerance is not None else CONSISTENCY_TOL
    seed = _resolve_seed(args)
    two_j = args.two_j if args.two_j is not None else 1
    value = _consistency_residual(flat, args.points, seed, two_j)
    report.add(f"state-vs-projector-{flat}", value, tol)


def _verify_moments(args, parser, report: Report) -> None:
    from .quadrature import moment_cp1

    tol = args.tolerance if args.tolerance is not None else QUAD_TOL
    two_j = args.two_j if args.two_j is not None else 1
    worst = 0.0
    for k in range(two_j + 1):
        worst = max(worst, abs(moment_cp1(two_j, k) - 1.0 / math.comb(two_j, k)))
    report.add(f"moments-two_j-{two_j}", worst, tol)


def _verify_fourier(args, parser, report: Report) -> None:
    tol = args.tolerance if args.tolerance is not None else FOURIER_TOL
    n = args.n if args.n is not None else 3
    report.add(f"shift-diagonalization-{n}", fourier.verify_shift_diagonalization(n), tol)
    w = fourier.walsh_hadamard(n)
    report.add(f"fourier-unitarity-{n}", float(np.linalg.norm(w @ w.conj().T - np.eye(n))), 1e-12)


def _rank_family(name: str, two_j: int | None, n: int | None):
    """Returns (states, expected rank); expected counts follow from orthogonality."""
    if name == "spin1":
        return [bell.closed_form_bell_cp1(2, t) for t in (1, 2, 3, 4)], 3
    if name == "cp1":
        tj = two_j if two_j is not None else 1
        return [bell.closed_form_bell_cp1(tj, t) for t in (1, 2, 3, 4)], 3 if tj == 2 else 4
    if name == "cp2":
        return [bell.closed_form_bell_cp2(p, q) for p in range(3) for q in range(3)], 9
    if name == "gen":
        d = n if n is not None else 2
        return [bell.generalized_bell(d, p, q) for p in range(d) for q in range(d)], d * d
    raise BellforgeError(f"unknown family {name!r}")


def _verify_rank(args, parser, report: Report) -> None:
    states, expected = _rank_family(args.family, args.two_j, args.n)
    rank = analysis.rank_of_family(states)
    report.note(f"family: {args.family} ({len(states)} states)")
    report.add(f"rank-{args.family}", rank, expected, mode="eq")


def _verify_schmidt(args, parser, report: Report) -> None:
    flat, two_j, dim = _flat_from_args(args, parser)
    tol = args.tolerance if args.tolerance is not None else SCHMIDT_TOL
    state = _closed_form_for(flat, two_j)
    data = analysis.schmidt(state)
    uniform = 1.0 / math.sqrt(dim)
    report.note(f"closed form: {_closed_form_label(flat, two_j)}")
    report.add(f"schmidt-flatness-{flat}", float(np.max(np.abs(data.singular_values - uniform))), tol)
    report.add(f"entropy-{flat}", abs(data.entropy - math.log(dim)), ENTROPY_TOL)
    report.add(f"norm-{flat}", abs(state.norm() - 1.0), tol)


def _verify_all(args, parser, report: Report) -> None:
    seed = _resolve_seed(args)
    for two_j in (1, 2, 5):
        report.add(f"unity-cp1-two_j-{two_j}", analysis.resolution_of_unity_cp1(two_j), QUAD_TOL)
    report.add("unity-cp2", analysis.resolution_of_unity_cp2(), QUAD_TOL)
    report.add("measure-cp1-two_j-3", abs(analysis.total_measure_cp1(3) - 4.0), QUAD_TOL)
    report.add("measure-cp2", abs(analysis.total_measure_cp2() - 3.0), QUAD_TOL)

    from .quadrature import moment_cp1

    worst = max(
        abs(moment_cp1(two_j, k) - 1.0 / math.comb(two_j, k))
        for two_j in range(0, 7)
        for k in range(two_j + 1)
    )
    report.add("moments-two_j-0..6", worst, QUAD_TOL)

    catalog = [(f, 1) for f in cp1_catalog()] + [(f, 2) for f in cp1_catalog()]
    catalog += [(f, None) for f in cpn_catalog(2)]
    antimap_worst = 0.0
    consistency_worst = 0.0
    for flat, two_j in catalog:
        manifold_n = 1 if flat.space == "cp1" else flat.n
        pairs = _sampled_pairs(manifold_n, 200, seed)
        antimap_worst = max(antimap_worst, verify_antimap(flat, pairs, two_j=two_j or 1))
        consistency_worst = max(
            consistency_worst, _consistency_residual(flat, 200, seed, two_j or 1)
        )
    report.add("antimap-catalog", antimap_worst, ANTIMAP_TOL)
    report.add("state-vs-projector-catalog", consistency_worst, CONSISTENCY_TOL)

    for n in (2, 3, 8):
        report.add(f"shift-diagonalization-{n}", fourier.verify_shift_diagonalization(n), FOURIER_TOL)

    states, expected = _rank_family("spin1", None, None)
    report.add("rank-spin1", analysis.rank_of_family(states), expected, mode="eq")

    bell_worst = 0.0
    schmidt_worst = 0.0
    targets = [(FlatMapId.cp1(t), tj) for t in (1, 2, 3, 4) for tj in (1, 2, 4)]
    targets += [(f, None) for f in cpn_catalog(2)]
    for flat, two_j in targets:
        state, _ = bell.fivel_bell(flat, two_j=two_j)
        closed = _closed_form_for(flat, two_j)
        bell_worst = max(bell_worst, analysis.state_distance(state, closed))
        data = analysis.schmidt(closed)
        dim = closed.dim_a
        schmidt_worst = max(
            schmidt_worst, float(np.max(np.abs(data.singular_values - 1.0 / math.sqrt(dim))))
        )
    report.add("bell-integral-vs-closed-form", bell_worst, QUAD_TOL)
    report.add("schmidt-flatness-catalog", schmidt_worst, SCHMIDT_TOL)


_VERIFY_CONFIG_KEYS = {
    "unity": ("space", "two_j", "radial_nodes", "angular_nodes", "simplex_nodes", "tolerance"),
    "measure": ("space", "two_j", "tolerance"),
    "antimap": ("flat", "two_j", "pairs", "tolerance"),
    "consistency": ("flat", "two_j", "points", "tolerance"),
    "moments": ("two_j", "tolerance"),
    "fourier": ("n", "tolerance"),
    "rank": ("family", "two_j", "n"),
    "schmidt": ("space", "flat", "two_j", "n", "p", "q", "tolerance"),
    "all": (),
}
_SEEDED_VERIFY = ("antimap", "consistency", "all")


def _cmd_verify(args, parser) -> int:
    handler = {
        "unity": _verify_unity,
        "measure": _verify_measure,
        "antimap": _verify_antimap,
        "consistency": _verify_consistency,
        "moments": _verify_moments,
        "fourier": _verify_fourier,
        "rank": _verify_rank,
        "schmidt": _verify_schmidt,
        "all": _verify_all,
    }[args.what]
    config = {
        key: vars(args)[key]
        for key in _VERIFY_CONFIG_KEYS[args.what]
        if vars(args).get(key) is not None
    }
    if args.what in _SEEDED_VERIFY:
        config["seed"] = _resolve_seed(args)
    report = Report(f"verify {args.what}", config)
    handler(args, parser, report)
    report.emit()
    if args.csv:
        report.write_csv(args.csv)
    return report.exit_code()


def _cmd_export(args, parser) -> int:
    builders = {"walsh": fourier.walsh_hadamard, "clock": fourier.clock, "shift": fourier.shift}
    matrix = builders[args.what](args.n)
    _write_json(_matrix_document(matrix), args.output)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common_flat_flags(sub) -> None:
    sub.add_argument("--space", choices=("cp1", "cp2", "cpn"), required=True)
    sub.add_argument("--two-j", dest="two_j", type=int, default=None)
    sub.add_argument("--flat", default=None, help="catalog id, e.g. cp1:3, cp2:b2, cpn:3:1:2")
    sub.add_argument("--n", type=int, default=None, help="factor dimension for --space cpn")
    sub.add_argument("--p", type=int, default=0)
    sub.add_argument("--q", type=int, default=0)


def _add_quadrature_flags(sub) -> None:
    sub.add_argument("--radial-nodes", dest="radial_nodes", type=int, default=None)
    sub.add_argument("--angular-nodes", dest="angular_nodes", type=int, default=None)
    sub.add_argument("--simplex-nodes", dest="simplex_nodes", type=int, default=None)
    sub.add_argument("--mc-samples", dest="mc_samples", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None, help="falls back to BELLFORGE_SEED, then 0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellforge",
        description="Coherent-state integrals on complex projective spaces "
        "and the maximally entangled states they produce.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    bell_cmd = commands.add_parser("bell", help="construct states")
    bell_sub = bell_cmd.add_subparsers(dest="what", required=True)

    make = bell_sub.add_parser("make", help="write a closed-form state")
    _add_common_flat_flags(make)
    make.add_argument("--output", default=None)
    make.set_defaults(func=_cmd_bell_make)

    integrate = bell_sub.add_parser("integrate", help="evaluate the integral numerically")
    _add_common_flat_flags(integrate)
    _add_quadrature_flags(integrate)
    integrate.add_argument("--tolerance", type=float, default=None)
    integrate.add_argument("--output", default=None)
    integrate.add_argument("--csv", default=None)
    integrate.set_defaults(func=_cmd_bell_integrate)

    verify = commands.add_parser("verify", help="run verification checks")
    verify_sub = verify.add_subparsers(dest="what", required=True)
    for name in ("unity", "measure", "antimap", "consistency", "moments", "fourier", "rank", "schmidt", "all"):
        sub = verify_sub.add_parser(name)
        sub.add_argument("--space", choices=("cp1", "cp2", "cpn"), default="cp1")
        sub.add_argument("--two-j", dest="two_j", type=int, default=None)
        sub.add_argument("--flat", default=None)
        sub.add_argument("--n", type=int, default=None)
        sub.add_argument("--p", type=int, default=0)
        sub.add_argument("--q", type=int, default=0)
        sub.add_argument("--pairs", type=int, default=1000)
        sub.add_argument("--points", type=int, default=1000)
        sub.add_argument("--family", choices=("spin1", "cp1", "cp2", "gen"), default="spin1")
        _add_quadrature_flags(sub)
        sub.add_argument("--tolerance", type=float, default=None)
        sub.add_argument("--csv", default=None)
        sub.set_defaults(func=_cmd_verify)

    export = commands.add_parser("export", help="dump a named matrix as JSON")
    export.add_argument("--what", choices=("walsh", "clock", "shift"), required=True)
    export.add_argument("--n", type=int, required=True)
    export.add_argument("--output", default=None)
    export.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args, parser)
    except BellforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        elapsed = time.perf_counter() - start
        print(f"wall-time: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
