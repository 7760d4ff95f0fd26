"""Executable checks for the deficiency bounds, sweeps, and randomized search.

Each check identifier names one quantitative claim (an upper bound on the
deficiency under structural hypotheses, or a structural consequence).  The
sweep driver runs a check over every labelled connected graph up to a size
cap; the search driver explores constrained graphs by hill climbing on the
deficiency.  A reported violation of any check would refute the underlying
claim and is treated as an implementation bug until proven otherwise.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Any, Callable

from .errors import GuardExceededError
from .graphs import Graph, build_graph, is_connected, snail_horns
from .matching import deficiency, is_deficiency_critical
from .serialize import graph_key, graph_to_json_dict
from .structure import admitting_set, clique_number, local_independence_number

__all__ = [
    "THEOREM_IDS",
    "TheoremSpec",
    "CheckResult",
    "check_theorem",
    "SweepReport",
    "exhaustive_sweep",
    "canonical_code",
    "random_connected",
    "SearchConstraints",
    "SearchReport",
    "extremal_search",
    "rows_to_csv",
]

_SWEEP_MAX = 7

THEOREM_IDS = (
    "thm-1.2-clawfree",
    "thm-1.3-bonefree",
    "thm-1.4-main",
    "thm-1.4-m3",
    "thm-1.6-q=2p+1",
    "thm-1.6-q=2p-1",
    "thm-1.8-single-even",
    "thm-1.8-all-even",
    "cor-1.3",
    "cor-2.3-snailhorn",
    "prop-5.1-mod",
)


@dataclass(frozen=True)
class TheoremSpec:
    """A check identifier plus whichever of ``m``, ``n``, ``p`` it consumes."""

    id: str
    m: int | None = None
    n: int | None = None
    p: int | None = None

    def __post_init__(self) -> None:
        if self.id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.id!r}")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check on one graph.

    ``hypotheses`` records the per-hypothesis breakdown.  A failed hypothesis
    yields a vacuous pass; an exceeded guard yields an indeterminate result
    that never counts as a pass.
    """

    theorem: str
    hypotheses: tuple[tuple[str, bool], ...]
    hypotheses_met: bool
    bound_value: int | None
    actual_deficiency: int | None
    passed: bool
    vacuous: bool
    indeterminate: bool = False
    note: str = ""
    details: tuple[tuple[str, Any], ...] = ()

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "hypotheses": {k: v for k, v in self.hypotheses},
            "hypotheses_met": self.hypotheses_met,
            "bound": self.bound_value,
            "actual": self.actual_deficiency,
            "pass": self.passed,
            "vacuous": self.vacuous,
            "indeterminate": self.indeterminate,
            "note": self.note,
        }


def _need(spec: TheoremSpec, name: str) -> int:
    value = getattr(spec, name)
    if value is None:
        raise ValueError(f"{spec.id} requires parameter {name}")
    return value


def _auto_n(spec: TheoremSpec, alpha_l: int) -> int:
    # The star-freeness parameter defaults to the smallest legal value that
    # the graph satisfies, so sweeps can run without per-graph parameters.
    return spec.n if spec.n is not None else max(alpha_l + 1, 4)


def _finish(spec: TheoremSpec, hyps: list[tuple[str, bool]], bound: int | None,
            actual: int | None, ok_when_met: bool, note: str = "",
            details: dict[str, Any] | None = None) -> CheckResult:
    met = all(v for _, v in hyps)
    return CheckResult(
        theorem=spec.id,
        hypotheses=tuple(hyps),
        hypotheses_met=met,
        bound_value=bound,
        actual_deficiency=actual,
        passed=True if not met else ok_when_met,
        vacuous=not met,
        note=note,
        details=tuple(sorted((details or {}).items())),
    )


def _check_clawfree(G: Graph, spec: TheoremSpec) -> CheckResult:
    alpha_l = local_independence_number(G)
    hyps = [("connected", is_connected(G)), ("alpha_l < 3", alpha_l < 3)]
    actual = deficiency(G)
    return _finish(spec, hyps, 1, actual, actual <= 1, details={"alpha_l": alpha_l})


def _check_bonefree(G: Graph, spec: TheoremSpec) -> CheckResult:
    alpha_l = local_independence_number(G)
    n = _auto_n(spec, alpha_l)
    admitting = admitting_set(G)
    hyps = [
        ("connected", is_connected(G)),
        ("n > 3", n > 3),
        ("alpha_l < n", alpha_l < n),
        ("no bones", not admitting),
    ]
    actual = deficiency(G)
    return _finish(spec, hyps, n - 2, actual, actual <= n - 2,
                   details={"alpha_l": alpha_l, "n": n, "admitting": sorted(admitting)})


def _pair_sum_condition(admitting: frozenset[int], m: int) -> bool:
    high = [a for a in admitting if a >= m]
    for p in high:
        for q in high:
            if p + q + 1 in admitting or p + q - 1 in admitting:
                return False
    return True


def _check_main(G: Graph, spec: TheoremSpec, m: int) -> CheckResult:
    if m < 3 or m % 2 == 0:
        raise ValueError(f"{spec.id} needs odd m >= 3, got {m}")
    alpha_l = local_independence_number(G)
    n = _auto_n(spec, alpha_l)
    admitting = admitting_set(G)
    hyps = [
        ("connected", is_connected(G)),
        ("n > 3", n > 3),
        ("alpha_l < n", alpha_l < n),
        ("admitting all odd", all(a % 2 == 1 for a in admitting)),
        ("no p+q+-1 in admitting", _pair_sum_condition(admitting, m)),
    ]
    bound = 2 * n - 5 if m == 3 else m * (n - 3) * (n - 2) ** ((m - 3) // 2) + 1
    actual = deficiency(G)
    return _finish(spec, hyps, bound, actual, actual <= bound,
                   details={"alpha_l": alpha_l, "n": n, "m": m, "admitting": sorted(admitting)})


def _check_two_odd(G: Graph, spec: TheoremSpec, delta: int) -> CheckResult:
    p = _need(spec, "p")
    if p < 3 or p % 2 == 0:
        raise ValueError(f"{spec.id} needs odd p >= 3, got {p}")
    q = 2 * p + delta
    alpha_l = local_independence_number(G)
    n = _auto_n(spec, alpha_l)
    admitting = admitting_set(G)
    hyps = [
        ("connected", is_connected(G)),
        ("n > 3", n > 3),
        ("alpha_l < n", alpha_l < n),
        (f"admitting within {{{p},{q}}}", admitting <= {p, q}),
    ]
    bound = 3 * n - 8 if delta == 1 else n * n - 3 * n + 1
    actual = deficiency(G)
    return _finish(spec, hyps, bound, actual, actual <= bound,
                   details={"alpha_l": alpha_l, "n": n, "p": p, "admitting": sorted(admitting)})


def _check_single_even(G: Graph, spec: TheoremSpec) -> CheckResult:
    m = _need(spec, "m")
    p = _need(spec, "p")
    if m <= 3:
        raise ValueError(f"{spec.id} needs m > 3, got {m}")
    if p < 1:
        raise ValueError(f"{spec.id} needs p >= 1, got {p}")
    alpha_l = local_independence_number(G)
    omega = clique_number(G)
    n = _auto_n(spec, alpha_l)
    admitting = admitting_set(G)
    hyps = [
        ("connected", is_connected(G)),
        ("n > 3", n > 3),
        ("alpha_l < n", alpha_l < n),
        ("omega < m", omega < m),
        (f"admitting within {{{2 * p}}}", admitting <= {2 * p}),
    ]
    bound = (m - 1) * (n - 3) + 1
    actual = deficiency(G)
    return _finish(spec, hyps, bound, actual, actual <= bound,
                   details={"alpha_l": alpha_l, "omega": omega, "n": n,
                            "admitting": sorted(admitting)})


def _check_all_even(G: Graph, spec: TheoremSpec) -> CheckResult:
    alpha_l = local_independence_number(G)
    omega = clique_number(G)
    n = _auto_n(spec, alpha_l)
    admitting = admitting_set(G)
    hyps = [
        ("connected", is_connected(G)),
        ("n > 3", n > 3),
        ("alpha_l < n", alpha_l < n),
        ("omega < 3", omega < 3),
        ("admitting all even", all(a % 2 == 0 for a in admitting)),
    ]
    bound = 2 * n - 6
    actual = deficiency(G)
    return _finish(spec, hyps, bound, actual, actual <= bound,
                   details={"alpha_l": alpha_l, "omega": omega, "n": n,
                            "admitting": sorted(admitting)})


def _check_tree_value(G: Graph, spec: TheoremSpec) -> CheckResult:
    m = _need(spec, "m")
    n = _need(spec, "n")
    if m < 3 or m % 2 == 0 or n <= 3:
        raise ValueError(f"{spec.id} needs odd m >= 3 and n > 3")
    hyps = [("connected", is_connected(G))]
    target = (n - 1) * (n - 2) ** ((m - 3) // 2) - 1
    actual = deficiency(G)
    return _finish(spec, hyps, target, actual, actual == target,
                   note="equality check", details={"m": m, "n": n})


def _check_snailhorn(G: Graph, spec: TheoremSpec) -> CheckResult:
    crit = is_deficiency_critical(G, "exhaustive")
    hyps = [
        ("connected", is_connected(G)),
        ("nontrivial", G.n >= 2),
        ("deficiency-critical", crit.verdict == "critical"),
    ]
    horns = len(snail_horns(G))
    return _finish(spec, hyps, None, crit.deficiency, horns >= 1,
                   details={"snail_horns": horns})


def _check_mod(G: Graph, spec: TheoremSpec) -> CheckResult:
    m = _need(spec, "m")
    n = _need(spec, "n")
    if m <= 3 or n <= 3:
        raise ValueError(f"{spec.id} needs m, n > 3")
    alpha_l = local_independence_number(G)
    omega = clique_number(G)
    hyps = [
        ("connected", is_connected(G)),
        ("alpha_l < n", alpha_l < n),
        ("omega < m", omega < m),
    ]
    actual = deficiency(G)
    return _finish(spec, hyps, None, actual, actual % (n - 3) == 1 % (n - 3),
                   note="congruence report, not an asserted bound",
                   details={"alpha_l": alpha_l, "omega": omega, "mod_base": n - 3})


def check_theorem(G: Graph, spec: TheoremSpec) -> CheckResult:
    """Evaluate one check on one graph.

    Hypotheses are evaluated exactly (complete admitting set).  When a size
    guard trips, the result is marked indeterminate and never counts as a
    pass.
    """
    try:
        if spec.id == "thm-1.2-clawfree":
            return _check_clawfree(G, spec)
        if spec.id == "thm-1.3-bonefree":
            return _check_bonefree(G, spec)
        if spec.id == "thm-1.4-main":
            return _check_main(G, spec, _need(spec, "m"))
        if spec.id == "thm-1.4-m3":
            return _check_main(G, spec, 3)
        if spec.id == "thm-1.6-q=2p+1":
            return _check_two_odd(G, spec, 1)
        if spec.id == "thm-1.6-q=2p-1":
            return _check_two_odd(G, spec, -1)
        if spec.id == "thm-1.8-single-even":
            return _check_single_even(G, spec)
        if spec.id == "thm-1.8-all-even":
            return _check_all_even(G, spec)
        if spec.id == "cor-1.3":
            return _check_tree_value(G, spec)
        if spec.id == "cor-2.3-snailhorn":
            return _check_snailhorn(G, spec)
        if spec.id == "prop-5.1-mod":
            return _check_mod(G, spec)
    except GuardExceededError as exc:
        return CheckResult(
            theorem=spec.id, hypotheses=(), hypotheses_met=False,
            bound_value=None, actual_deficiency=None, passed=False,
            vacuous=False, indeterminate=True, note=str(exc))
    raise ValueError(f"unknown theorem id {spec.id!r}")


@dataclass(frozen=True)
class SweepReport:
    """Aggregate outcome of a sweep; empty ``violations`` means the sweep passed."""

    theorem: str
    n_max: int
    connected_count: int
    checked_count: int
    hypotheses_met_count: int
    vacuous_count: int
    indeterminate_count: int
    max_deficiency_met: int | None
    violations: tuple[dict[str, Any], ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "connected": self.connected_count,
            "checked": self.checked_count,
            "hypotheses_met": self.hypotheses_met_count,
            "vacuous": self.vacuous_count,
            "indeterminate": self.indeterminate_count,
            "max_deficiency_met": self.max_deficiency_met,
            "violations": list(self.violations),
        }


def _all_labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def exhaustive_sweep(n_max: int, spec: TheoremSpec,
                     out_dir: str | Path | None = None) -> SweepReport:
    """Run a check over every labelled connected graph on at most ``n_max`` vertices.

    ``n_max`` is capped at 7.  With ``out_dir`` set, a per-instance CSV and a
    JSON dump of any violations are written there.
    """
    if n_max < 1 or n_max > _SWEEP_MAX:
        raise GuardExceededError(f"sweep needs 1 <= n_max <= {_SWEEP_MAX}, got {n_max}")
    connected = checked = met = vacuous = indeterminate = 0
    max_kd: int | None = None
    violations: list[dict[str, Any]] = []
    rows: list[dict[str, Any]] = []
    for n in range(1, n_max + 1):
        for G in _all_labelled_graphs(n):
            if not is_connected(G):
                continue
            connected += 1
            result = check_theorem(G, spec)
            checked += 1
            if result.indeterminate:
                indeterminate += 1
            elif not result.hypotheses_met:
                vacuous += 1
            else:
                met += 1
                kd = result.actual_deficiency
                if kd is not None and (max_kd is None or kd > max_kd):
                    max_kd = kd
                if not result.passed:
                    violations.append({
                        "graph": graph_to_json_dict(G),
                        "result": result.to_json_dict(),
                    })
            if out_dir is not None:
                rows.append(_instance_row(G, result))
    report = SweepReport(
        theorem=spec.id, n_max=n_max, connected_count=connected,
        checked_count=checked, hypotheses_met_count=met, vacuous_count=vacuous,
        indeterminate_count=indeterminate, max_deficiency_met=max_kd,
        violations=tuple(violations))
    if out_dir is not None:
        _write_sweep_artifacts(Path(out_dir), report, rows)
    return report


def _instance_row(G: Graph, result: CheckResult) -> dict[str, Any]:
    details = dict(result.details)
    return {
        "instance": G.name or graph_key(G),
        "n": G.n,
        "alpha_l": details.get("alpha_l", ""),
        "omega": details.get("omega", ""),
        "admitting": " ".join(str(a) for a in details.get("admitting", [])),
        "deficiency": "" if result.actual_deficiency is None else result.actual_deficiency,
        "bound": "" if result.bound_value is None else result.bound_value,
        "pass": result.passed,
    }


_CSV_COLUMNS = ["instance", "n", "alpha_l", "omega", "admitting", "deficiency", "bound", "pass"]


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in _CSV_COLUMNS})
    return buf.getvalue()


def _write_sweep_artifacts(out_dir: Path, report: SweepReport,
                           rows: list[dict[str, Any]]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "summary.json").write_text(
        json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
    (out_dir / "instances.csv").write_text(rows_to_csv(rows))
    for k, violation in enumerate(report.violations):
        (out_dir / f"violation-{k:04d}.json").write_text(
            json.dumps(violation, indent=2, sort_keys=True) + "\n")


def canonical_code(G: Graph) -> int:
    """Smallest adjacency bit-string over all vertex relabellings (guard: 7 vertices).

    Optional isomorphism dedup for sweep reporting; correctness never needs it.
    """
    if G.n > _SWEEP_MAX:
        raise GuardExceededError(f"canonical form limited to {_SWEEP_MAX} vertices")
    pairs = list(combinations(range(G.n), 2))
    index = {pair: k for k, pair in enumerate(pairs)}
    best: int | None = None
    for perm in permutations(range(G.n)):
        code = 0
        for u, v in G.edges():
            a, b = perm[u], perm[v]
            code |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or code < best:
            best = code
    return 0 if best is None else best


def random_connected(n: int, edge_prob: float, seed: int) -> Graph:
    """Uniform-ish random connected graph, reproducible from the seed.

    Samples G(n, p) and rejects disconnected draws; after 10^4 rejections a
    random spanning tree is laid down first and the G(n, p) edges added on
    top.
    """
    if n <= 0:
        raise ValueError(f"vertex count must be positive, got {n}")
    if not (0 < edge_prob <= 1):
        raise ValueError(f"edge probability must be in (0, 1], got {edge_prob}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(10_000):
        edges = [e for e in pairs if rng.random() < edge_prob]
        G = build_graph(n, edges)
        if is_connected(G):
            return G
    order = list(range(n))
    rng.shuffle(order)
    edges_set = set()
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = order[i], order[j]
        edges_set.add((a, b) if a < b else (b, a))
    for e in pairs:
        if rng.random() < edge_prob:
            edges_set.add(e)
    return build_graph(n, sorted(edges_set))


@dataclass(frozen=True)
class SearchConstraints:
    """Feasible region for the extremal search.

    ``admitting`` is one of ``any`` (unconstrained), ``empty`` (no bones),
    ``odd`` (at least one bone, all indices odd), ``even`` (at least one
    bone, all indices even).
    """

    n: int
    alpha_l_max: int | None = None
    omega_max: int | None = None
    admitting: str = "any"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("search needs at least one vertex")
        if self.admitting not in ("any", "empty", "odd", "even"):
            raise ValueError(f"unknown admitting constraint {self.admitting!r}")


def _satisfies(G: Graph, c: SearchConstraints) -> bool:
    if c.alpha_l_max is not None and local_independence_number(G) > c.alpha_l_max:
        return False
    if c.omega_max is not None and clique_number(G) > c.omega_max:
        return False
    if c.admitting != "any":
        a = admitting_set(G)
        if c.admitting == "empty" and a:
            return False
        if c.admitting == "odd" and (not a or any(x % 2 == 0 for x in a)):
            return False
        if c.admitting == "even" and (not a or any(x % 2 == 1 for x in a)):
            return False
    return True


@dataclass(frozen=True)
class SearchReport:
    """Best graph found under the constraints; never a claim of optimality."""

    constraints: SearchConstraints
    iterations: int
    seed: int
    best_graph: Graph | None
    best_deficiency: int | None
    feasible_seen: int
    mod_base: int | None
    mod_hit: bool | None

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "n": self.constraints.n,
            "alpha_l_max": self.constraints.alpha_l_max,
            "omega_max": self.constraints.omega_max,
            "admitting": self.constraints.admitting,
            "iterations": self.iterations,
            "seed": self.seed,
            "best_graph": None if self.best_graph is None else graph_to_json_dict(self.best_graph),
            "best_deficiency": self.best_deficiency,
            "feasible_seen": self.feasible_seen,
            "mod_base": self.mod_base,
            "mod_hit": self.mod_hit,
        }


_RESTART_AFTER = 200


def extremal_search(constraints: SearchConstraints, iters: int, seed: int) -> SearchReport:
    """Hill-climb over single-edge edits, maximizing deficiency within the constraints.

    Starts from sparse random connected graphs, accepts edits that keep the
    graph connected and feasible without lowering the deficiency, and
    restarts after a stretch of non-improving steps.  Exploratory tooling:
    the result is a lower bound witness, nothing more.
    """
    rng = random.Random(seed)
    n = constraints.n
    seed_prob = min(1.0, 2.5 / n) if n > 1 else 1.0
    current: Graph | None = None
    current_kd = -1
    best: Graph | None = None
    best_kd = -1
    feasible = 0
    stale = 0

    def consider(G: Graph, kd: int) -> None:
        nonlocal best, best_kd
        if kd > best_kd:
            best, best_kd = G, kd

    for _ in range(iters):
        if current is None:
            cand = random_connected(n, seed_prob, rng.randrange(2**32))
            if _satisfies(cand, constraints):
                current = cand
                current_kd = deficiency(cand)
                feasible += 1
                consider(cand, current_kd)
            continue
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        edges = set(current.edges())
        e = (u, v) if u < v else (v, u)
        if e in edges:
            edges.discard(e)
        else:
            edges.add(e)
        cand = build_graph(n, sorted(edges))
        if not is_connected(cand) or not _satisfies(cand, constraints):
            stale += 1
        else:
            feasible += 1
            kd = deficiency(cand)
            if kd >= current_kd:
                if kd > current_kd:
                    stale = 0
                else:
                    stale += 1
                current, current_kd = cand, kd
                consider(cand, kd)
            else:
                stale += 1
        if stale >= _RESTART_AFTER:
            current = None
            stale = 0

    mod_base: int | None = None
    mod_hit: bool | None = None
    if constraints.alpha_l_max is not None and constraints.alpha_l_max + 1 > 3:
        mod_base = constraints.alpha_l_max + 1 - 3
        if best_kd >= 0:
            mod_hit = best_kd % mod_base == 1 % mod_base
    return SearchReport(
        constraints=constraints, iterations=iters, seed=seed,
        best_graph=best, best_deficiency=None if best_kd < 0 else best_kd,
        feasible_seen=feasible, mod_base=mod_base, mod_hit=mod_hit)
