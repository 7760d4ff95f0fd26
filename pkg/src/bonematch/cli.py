"""Command-line interface.

Subcommands: ``construct``, ``analyze``, ``lm``, ``verify``, ``sweep``,
``search``, ``export``.  Human-readable tables go to standard output;
machine-readable artifacts are written only through ``--out`` / ``--format``.
Exit codes: 0 all checks passed, 1 a check or trace validation failed,
2 usage error or size guard exceeded.

Randomized commands take an explicit ``--seed`` so runs are reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product
from pathlib import Path
from typing import Any, Sequence

from .errors import GuardExceededError
from .families import FAMILIES, FamilySpec, build_family
from .graphs import Graph
from .harness import (
    SearchConstraints,
    TheoremSpec,
    check_theorem,
    exhaustive_sweep,
    extremal_search,
    rows_to_csv,
)
from .lm import lm_root_sweep, lm_run, validate_trace
from .matching import deficiency, is_deficiency_critical, maximum_matching
from .serialize import (
    graph_key,
    graph_to_dot,
    graph_to_json_dict,
    read_graph_json,
    write_graph_json,
)
from .structure import (
    admitting_set,
    clique_number,
    local_independence_number,
    structure_profile,
)

__all__ = ["main", "run_cli"]


def _parse_params(text: str) -> dict[str, Any]:
    """``k=v,k2=v2`` with integer values; list-valued parameters use
    colon-separated elements (``a=1:2``)."""
    params: dict[str, Any] = {}
    for item in text.split(","):
        key, eq, value = item.partition("=")
        if not eq or not key.strip() or not value.strip():
            raise ValueError(f"malformed parameter {item!r}; expected k=v")
        key, value = key.strip(), value.strip()
        try:
            if ":" in value:
                params[key] = [int(x) for x in value.split(":")]
            else:
                params[key] = int(value)
        except ValueError:
            raise ValueError(f"parameter {key!r} needs integer value(s), got {value!r}") from None
    return params


def _parse_range(text: str) -> list[tuple[str, list[int]]]:
    """``m=3..7:2,n=4..6`` -> [("m", [3,5,7]), ("n", [4,5,6])]; a bare
    integer is a single-value range."""
    ranges: list[tuple[str, list[int]]] = []
    for item in text.split(","):
        key, eq, value = item.partition("=")
        if not eq or not key.strip() or not value.strip():
            raise ValueError(f"malformed range {item!r}; expected k=lo..hi[:step] or k=v")
        key, value = key.strip(), value.strip()
        try:
            if ".." in value:
                lo_text, _, rest = value.partition("..")
                hi_text, colon, step_text = rest.partition(":")
                step = int(step_text) if colon else 1
                if step < 1:
                    raise ValueError
                values = list(range(int(lo_text), int(hi_text) + 1, step))
            else:
                values = [int(value)]
        except ValueError:
            raise ValueError(f"malformed range value {value!r} for {key!r}") from None
        if not values:
            raise ValueError(f"range for {key!r} is empty")
        ranges.append((key, values))
    return ranges


def _fmt_set(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}" if values else "{}"


def _fmt_edges(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


def _print_kv(label: str, value: Any) -> None:
    print(f"{label:<14} {value}")


def _load_graph(path: str) -> Graph:
    return read_graph_json(path)


def _cmd_construct(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)
    G = build_family(args.family, params)
    spec = FamilySpec(args.family, tuple(
        (k, tuple(v) if isinstance(v, list) else v) for k, v in params.items()))
    _print_kv("graph", G.name or "(unnamed)")
    _print_kv("family", spec.label())
    _print_kv("vertices", G.n)
    _print_kv("edges", G.edge_count())
    if args.out:
        annotation = {"id": args.family,
                      "params": {k: v for k, v in params.items()}}
        write_graph_json(G, args.out, family=annotation)
        _print_kv("written", args.out)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    profile = structure_profile(G, i_max=args.max_bone)
    kd = deficiency(G)
    _print_kv("graph", G.name or graph_key(G))
    _print_kv("vertices", G.n)
    _print_kv("edges", G.edge_count())
    _print_kv("deficiency", kd)
    _print_kv("alpha_l", profile.alpha_l)
    _print_kv("omega", profile.omega)
    _print_kv("admitting", f"{_fmt_set(profile.admitting)} (cap {profile.admitting_cap})")
    _print_kv("snail horns", profile.snail_horn_count)
    _print_kv("claw-free", "yes" if profile.claw_free else "no")
    _print_kv("triangle-free", "yes" if profile.triangle_free else "no")
    if args.critical != "skip":
        crit = is_deficiency_critical(G, args.critical)
        _print_kv("criticality", f"{crit.verdict} (mode {crit.mode})")
    if args.out:
        payload = {"graph": graph_to_json_dict(G), "deficiency": kd,
                   "profile": profile.to_json_dict()}
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        _print_kv("written", args.out)
    return 0


def _cmd_lm(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    root = None if args.root == "auto" else int(args.root)
    trace = lm_run(G, root)
    exact = deficiency(G)
    _print_kv("graph", G.name or graph_key(G))
    _print_kv("root", trace.root)
    _print_kv("depth", trace.depth)
    _print_kv("bound", trace.bound)
    tight = " (tight)" if trace.bound == exact else f" (gap {trace.bound - exact})"
    _print_kv("exact", f"{exact}{tight}")
    if args.explain:
        for lvl in trace.levels:
            print(f"  level {lvl.level}:")
            print(f"    M          {_fmt_edges(lvl.matching) or '(empty)'}")
            print(f"    M'         {_fmt_edges(lvl.witness_matching) or '(empty)'}")
            print(f"    X residual {_fmt_set(lvl.x_residual)}")
            print(f"    Y residual {_fmt_set(lvl.y_residual)}")
            print(f"    Z          {_fmt_set(lvl.leftover)}")
    if args.sweep_roots:
        sweep = lm_root_sweep(G)
        best_root, best_bound = min(sweep, key=lambda rb: (rb[1], rb[0]))
        print("root sweep:")
        for r, b in sweep:
            marker = "  <- best" if (r, b) == (best_root, best_bound) else ""
            print(f"  root {r:>3}  bound {b}{marker}")
    profile = structure_profile(G)
    violations = validate_trace(G, trace, profile)
    if args.out:
        payload = {"graph": graph_to_json_dict(G), "trace": trace.to_json_dict(),
                   "exact": exact, "violations": [str(v) for v in violations]}
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        _print_kv("written", args.out)
    if violations:
        print("trace INVALID:")
        for v in violations:
            print(f"  {v}")
        return 1
    _print_kv("trace", "valid")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    spec = TheoremSpec(args.theorem, m=args.m, n=args.n, p=args.p)
    result = check_theorem(G, spec)
    _print_kv("graph", G.name or graph_key(G))
    _print_kv("theorem", result.theorem)
    for name, ok in result.hypotheses:
        print(f"  [{'ok' if ok else 'NO'}] {name}")
    _print_kv("hypotheses", "met" if result.hypotheses_met else "not met (vacuous)")
    if result.bound_value is not None:
        _print_kv("bound", result.bound_value)
    if result.actual_deficiency is not None:
        _print_kv("actual", result.actual_deficiency)
    if result.note:
        _print_kv("note", result.note)
    if args.out:
        payload = {"graph": graph_to_json_dict(G), "result": result.to_json_dict()}
        Path(args.out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        _print_kv("written", args.out)
    if result.indeterminate:
        _print_kv("verdict", "INDETERMINATE (guard exceeded)")
        return 2
    _print_kv("verdict", "pass" if result.passed else "FAIL")
    return 0 if result.passed else 1


def _theorem_spec_for_instance(theorem: str, args: argparse.Namespace,
                               instance_params: dict[str, Any]) -> TheoremSpec:
    # Explicit --m/--n/--p win; otherwise a same-named family parameter is
    # used, so e.g. `sweep --family t_tree --range m=3..7:2,n=4..6
    # --theorem cor-1.3` tracks the instance.
    kwargs: dict[str, int | None] = {}
    for name in ("m", "n", "p"):
        explicit = getattr(args, name)
        if explicit is not None:
            kwargs[name] = explicit
        elif isinstance(instance_params.get(name), int):
            kwargs[name] = instance_params[name]
        else:
            kwargs[name] = None
    return TheoremSpec(theorem, **kwargs)


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.family is None:
        if args.theorem is None:
            raise ValueError("sweep needs --theorem (with --nmax) or --family (with --range)")
        spec = TheoremSpec(args.theorem, m=args.m, n=args.n, p=args.p)
        report = exhaustive_sweep(args.nmax, spec, out_dir=args.out)
        _print_kv("theorem", report.theorem)
        _print_kv("n_max", report.n_max)
        _print_kv("connected", report.connected_count)
        _print_kv("hyp met", report.hypotheses_met_count)
        _print_kv("vacuous", report.vacuous_count)
        _print_kv("indeterminate", report.indeterminate_count)
        _print_kv("max kd (met)", report.max_deficiency_met)
        _print_kv("violations", len(report.violations))
        return 0 if report.passed else 1

    if args.range is None:
        raise ValueError("sweep --family requires --range")
    ranges = _parse_range(args.range)
    names, _ = FAMILIES[args.family] if args.family in FAMILIES else ((), None)
    if args.family not in FAMILIES:
        raise ValueError(f"unknown family {args.family!r}")
    extra = [k for k, _ in ranges if k not in names]
    if extra:
        raise ValueError(f"family {args.family!r} takes parameters {names}; "
                         f"range mentions {extra}")
    missing = [k for k in names if k not in {r for r, _ in ranges}]
    if missing:
        raise ValueError(f"range misses family parameters {missing}")
    rows: list[dict[str, Any]] = []
    failures = 0
    header = f"{'instance':<22} {'kd':>4} {'alpha_l':>8} {'omega':>6} {'admitting':>12}"
    if args.theorem:
        header += f" {'bound':>7} {'verdict':>8}"
    print(header)
    for combo in product(*(values for _, values in ranges)):
        params = {k: v for (k, _), v in zip(ranges, combo)}
        try:
            G = build_family(args.family, params)
        except ValueError as exc:
            label = FamilySpec(args.family, tuple(params.items())).label()
            print(f"{label:<22} skipped: {exc}")
            continue
        kd = deficiency(G)
        # guarded fields degrade to "?" per instance instead of aborting the sweep
        fields: dict[str, Any] = {}
        for key, compute in (("alpha_l", local_independence_number),
                             ("omega", clique_number),
                             ("admitting", admitting_set)):
            try:
                fields[key] = compute(G)
            except GuardExceededError:
                fields[key] = None
        admitting = fields["admitting"]
        row: dict[str, Any] = {
            "instance": G.name or graph_key(G), "n": G.n,
            "alpha_l": "?" if fields["alpha_l"] is None else fields["alpha_l"],
            "omega": "?" if fields["omega"] is None else fields["omega"],
            "admitting": "?" if admitting is None else " ".join(str(a) for a in sorted(admitting)),
            "deficiency": kd, "bound": "", "pass": True,
        }
        line = (f"{row['instance']:<22} {kd:>4} {row['alpha_l']!s:>8} "
                f"{row['omega']!s:>6} "
                f"{('?' if admitting is None else _fmt_set(admitting)):>12}")
        if args.theorem:
            spec = _theorem_spec_for_instance(args.theorem, args, params)
            result = check_theorem(G, spec)
            row["bound"] = "" if result.bound_value is None else result.bound_value
            row["pass"] = result.passed and not result.indeterminate
            verdict = ("indet" if result.indeterminate
                       else "vacuous" if result.vacuous
                       else "pass" if result.passed else "FAIL")
            if not row["pass"]:
                failures += 1
            line += f" {row['bound']!s:>7} {verdict:>8}"
        rows.append(row)
        print(line)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "instances.csv").write_text(rows_to_csv(rows))
        _print_kv("written", str(out_dir / "instances.csv"))
    return 1 if failures else 0


def _cmd_search(args: argparse.Namespace) -> int:
    constraints = SearchConstraints(
        n=args.n, alpha_l_max=args.alpha_l_max, omega_max=args.omega_max,
        admitting=args.admitting)
    report = extremal_search(constraints, iters=args.iters, seed=args.seed)
    _print_kv("n", args.n)
    _print_kv("iterations", report.iterations)
    _print_kv("seed", report.seed)
    _print_kv("feasible", report.feasible_seen)
    if report.best_graph is None:
        _print_kv("result", "empty (no feasible graph found)")
    else:
        _print_kv("best kd", report.best_deficiency)
        _print_kv("best graph", graph_key(report.best_graph))
    if report.mod_base is not None:
        if report.mod_hit is None:
            _print_kv("mod check", f"no graph to test (mod base {report.mod_base})")
        else:
            _print_kv("mod check",
                       f"kd == 1 (mod {report.mod_base}): {'yes' if report.mod_hit else 'no'}")
    if args.out:
        Path(args.out).write_text(
            json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
        _print_kv("written", args.out)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    G = _load_graph(args.graph)
    if args.format == "dot":
        text = graph_to_dot(G)
    else:
        text = json.dumps(graph_to_json_dict(G), indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        _print_kv("written", args.out)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bonematch",
        description="Matching deficiency, bone detection, levelling-matching "
                    "bounds, and extremal constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family instance")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--params", required=True,
                   help="k=v,... (lists colon-separated, e.g. a=1:2)")
    p.add_argument("--out", help="write canonical graph JSON here")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("analyze", help="structure profile and deficiency")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--max-bone", type=int, default=None,
                   help="cap on bone indices searched (default: complete)")
    p.add_argument("--critical", choices=["exhaustive", "delete-one", "skip"],
                   default="skip")
    p.add_argument("--out", help="write analysis JSON here")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lm", help="levelling-matching bound run")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--root", default="auto", help="auto | vertex id")
    p.add_argument("--explain", action="store_true",
                   help="print per-level matchings and leftovers")
    p.add_argument("--sweep-roots", action="store_true",
                   help="try every snail head and report the best bound")
    p.add_argument("--out", help="write trace JSON here")
    p.set_defaults(func=_cmd_lm)

    p = sub.add_parser("verify", help="run one theorem check on a graph")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--theorem", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--out", help="write CheckResult JSON here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive small-graph or family sweep")
    p.add_argument("--theorem", default=None)
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--family", default=None)
    p.add_argument("--range", default=None, help="m=3..7:2,n=4..6")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--out", help="directory for CSV + violation JSON artifacts")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("search", help="randomized extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha-l-max", type=int, default=None)
    p.add_argument("--omega-max", type=int, default=None)
    p.add_argument("--admitting", choices=["any", "empty", "odd", "even"],
                   default="any")
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="explicit seed; no wall-clock default")
    p.add_argument("--out", help="write SearchReport JSON here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("export", help="write a graph in a machine format")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--format", required=True, choices=["dot", "json"])
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_export)

    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
