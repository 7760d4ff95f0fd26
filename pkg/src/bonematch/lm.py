"""Level-by-level matching: the two-level lemma and the full bound computation.

The driver levels a graph from a snail-horn head and walks the levels top
down.  At each step a two-level subproblem is solved by local search over two
kinds of improving moves; the terminal matching is guaranteed (and verified
at runtime) to leave every unsaturated upper vertex with two private
witnesses, which feeds the next level.  The sum of the leftover sets bounds
the deficiency from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable, NamedTuple

from .errors import PostconditionError
from .graphs import Graph, Levelling, induced_subgraph, is_clean_level, levelling, snail_horns
from .matching import deficiency
from .structure import StructureProfile

__all__ = [
    "TwoLevelResult",
    "two_level_matching",
    "LMLevel",
    "LMTrace",
    "lm_run",
    "lm_root_sweep",
    "TraceViolation",
    "validate_trace",
]

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TwoLevelResult:
    """Terminal state of the two-level local search.

    ``x_residual`` is the set of unmatched lower-side vertices that still see
    an unmatched upper vertex; each maps to its two smallest private
    witnesses in ``private``: upper vertices whose only unmatched neighbour
    is that vertex.
    """

    matching: frozenset[Edge]
    x_residual: frozenset[int]
    y_residual: frozenset[int]
    private: tuple[tuple[int, tuple[int, int]], ...]

    def private_map(self) -> dict[int, tuple[int, int]]:
        return dict(self.private)


def _coverage_ok(adj: tuple[frozenset[int], ...], X: frozenset[int], Y: frozenset[int],
                 matched: dict[int, int]) -> bool:
    # Every unmatched upper vertex must keep an unmatched lower neighbour.
    for y in Y:
        if y in matched:
            continue
        if not any(w in X and w not in matched for w in adj[y]):
            return False
    return True


def two_level_matching(H: Graph, X: Iterable[int], Y: Iterable[int]) -> TwoLevelResult:
    """Run the two-level local search on ``H`` partitioned into ``X`` and ``Y``.

    Requirements: ``X`` non-empty, ``X`` and ``Y`` partition the vertices, and
    every ``Y`` vertex has a neighbour in ``X``.  Starting from the empty
    matching, two moves are applied in lexicographic order until neither
    fits: (a) add an edge between unmatched endpoints, (b) trade one matched
    edge touching ``X`` for two new edges.  Both moves must keep every
    unmatched ``Y`` vertex adjacent to an unmatched ``X`` vertex.

    The guarantees of the terminal state are re-verified before returning;
    a failure raises ``PostconditionError`` and indicates a bug.
    """
    Xs = frozenset(X)
    Ys = frozenset(Y)
    if not Xs:
        raise ValueError("two-level matching requires a non-empty lower side")
    if Xs & Ys:
        raise ValueError("sides overlap")
    if Xs | Ys != frozenset(range(H.n)):
        raise ValueError("sides must partition the vertex set")
    for y in Ys:
        if not (H.adj[y] & Xs):
            raise ValueError(f"upper vertex {y} has no lower neighbour")

    adj = H.adj
    edges = H.edges()
    matched: dict[int, int] = {}
    matching: set[Edge] = set()

    def try_add() -> bool:
        for u, v in edges:
            if u in matched or v in matched:
                continue
            matched[u] = v
            matched[v] = u
            if _coverage_ok(adj, Xs, Ys, matched):
                matching.add((u, v))
                return True
            del matched[u]
            del matched[v]
        return False

    def try_trade() -> bool:
        for old in sorted(matching):
            if not (old[0] in Xs or old[1] in Xs):
                continue
            del matched[old[0]]
            del matched[old[1]]
            free_edges = [e for e in edges if e[0] not in matched and e[1] not in matched]
            for e1, e2 in combinations(free_edges, 2):
                if len({e1[0], e1[1], e2[0], e2[1]}) != 4:
                    continue
                for a, b in (e1, e2):
                    matched[a] = b
                    matched[b] = a
                if _coverage_ok(adj, Xs, Ys, matched):
                    matching.discard(old)
                    matching.add(e1)
                    matching.add(e2)
                    return True
                for a, b in (e1, e2):
                    del matched[a]
                    del matched[b]
            matched[old[0]] = old[1]
            matched[old[1]] = old[0]
        return False

    while try_add() or try_trade():
        pass

    y_res = frozenset(y for y in Ys if y not in matched)
    x_res = frozenset(x for x in Xs if x not in matched and adj[x] & y_res)
    private = []
    for x in sorted(x_res):
        witnesses = sorted(
            y for y in y_res
            if x in adj[y] and all(w in matched for w in adj[y] if w != x)
        )
        if len(witnesses) < 2:
            raise PostconditionError(f"residual vertex {x} has {len(witnesses)} private witnesses")
        private.append((x, (witnesses[0], witnesses[1])))

    result = TwoLevelResult(frozenset(matching), x_res, y_res, tuple(private))
    _verify_two_level(H, Xs, Ys, result)
    return result


def _verify_two_level(H: Graph, X: frozenset[int], Y: frozenset[int],
                      res: TwoLevelResult) -> None:
    adj = H.adj
    saturated = {v for e in res.matching for v in e}
    for u, v in res.matching:
        if v not in adj[u]:
            raise PostconditionError(f"matching edge ({u}, {v}) not in graph")
    if len(saturated) != 2 * len(res.matching):
        raise PostconditionError("matching edges share vertices")
    # (1) every residual upper vertex sees a residual lower vertex
    for y in res.y_residual:
        if not (adj[y] & res.x_residual):
            raise PostconditionError(f"uncovered residual upper vertex {y}")
    # (2) residual upper set is independent
    for y in res.y_residual:
        if adj[y] & res.y_residual:
            raise PostconditionError("residual upper set is not independent")
    # (3) two private witnesses each, checked against the full residual graph
    live = (X | Y) - saturated
    pmap = res.private_map()
    if set(pmap) != set(res.x_residual):
        raise PostconditionError("private witness map keys do not match the residual set")
    for x, (y1, y2) in pmap.items():
        for y in (y1, y2):
            if y not in res.y_residual or (adj[y] & live) != {x}:
                raise PostconditionError(f"witness {y} of {x} is not private")
    # (4) each matched lower vertex can spoil at most one residual vertex
    for v in sorted(v for v in saturated if v in X):
        spoiled = 0
        for x in res.x_residual:
            surviving = [
                y for y in res.y_residual
                if (adj[y] & live) == {x} and v not in adj[y]
            ]
            if len(surviving) < 2:
                spoiled += 1
        if spoiled > 1:
            raise PostconditionError(f"matched vertex {v} spoils {spoiled} residual vertices")


@dataclass(frozen=True)
class LMLevel:
    """One step of the level walk, everything in original vertex ids.

    ``matching`` is the local-search matching, ``witness_matching`` the extra
    edges pairing each residual vertex of the level above with its smallest
    private witness, and ``leftover`` the vertices of this level saturated by
    neither.
    """

    level: int
    matching: tuple[Edge, ...]
    witness_matching: tuple[Edge, ...]
    x_residual: tuple[int, ...]
    y_residual: tuple[int, ...]
    leftover: tuple[int, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "level": self.level,
            "M": [list(e) for e in self.matching],
            "M_prime": [list(e) for e in self.witness_matching],
            "X_residual": list(self.x_residual),
            "Y_residual": list(self.y_residual),
            "Z": list(self.leftover),
        }


@dataclass(frozen=True)
class LMTrace:
    """Full record of a level walk; ``bound`` is the sum of leftover sizes."""

    root: int
    depth: int
    levels: tuple[LMLevel, ...]
    bound: int

    def all_matching_edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for lv in self.levels:
            out.update(lv.matching)
            out.update(lv.witness_matching)
        return frozenset(out)

    def leftover_union(self) -> frozenset[int]:
        return frozenset(v for lv in self.levels for v in lv.leftover)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "root": self.root,
            "depth": self.depth,
            "bound": self.bound,
            "levels": [lv.to_json_dict() for lv in self.levels],
        }


def _auto_root(G: Graph) -> int:
    horns = snail_horns(G)
    if not horns:
        raise ValueError("graph has no snail horn; no valid root exists")
    return horns[0].head


def lm_run(G: Graph, root: int | None = None) -> LMTrace:
    """Compute the level-by-level deficiency bound from a snail-horn head.

    With ``root=None`` the smallest snail-horn head is used.  Processes the
    levelling from the deepest level up; at each level the two-level search
    runs on the previous level plus the still-unsaturated part of the current
    one.  Returns the full per-level trace.
    """
    if root is None:
        root = _auto_root(G)
    else:
        if not any(h.head == root for h in snail_horns(G)):
            raise ValueError(f"root {root} is not a snail-horn head")
    L = levelling(G, root)
    records: list[LMLevel] = []
    upper_saturated: frozenset[int] = frozenset()
    for i in range(L.N, 0, -1):
        lower = L.levels[i - 1]
        upper = L.levels[i] - upper_saturated
        sub_vertices = sorted(lower | upper)
        H, vmap = induced_subgraph(G, sub_vertices)
        back = {orig: new for new, orig in enumerate(vmap)}
        res = two_level_matching(
            H,
            (back[v] for v in lower),
            (back[v] for v in upper),
        )
        m_edges = tuple(sorted(_norm_edge(vmap[a], vmap[b]) for a, b in res.matching))
        x_res = tuple(sorted(vmap[x] for x in res.x_residual))
        y_res = tuple(sorted(vmap[y] for y in res.y_residual))
        pmap = res.private_map()
        w_edges = tuple(sorted(
            _norm_edge(vmap[x], vmap[pmap[x][0]]) for x in sorted(pmap)
        ))
        w_saturated = {v for e in w_edges for v in e}
        leftover = tuple(sorted(set(y_res) - w_saturated))
        records.append(LMLevel(i, m_edges, w_edges, x_res, y_res, leftover))
        upper_saturated = frozenset(v for e in m_edges for v in e) | frozenset(w_saturated)
    bound = sum(len(r.leftover) for r in records)
    return LMTrace(root=root, depth=L.N, levels=tuple(records), bound=bound)


def lm_root_sweep(G: Graph) -> list[tuple[int, int]]:
    """Bound from every snail-horn head, as ``(root, bound)`` pairs, roots ascending."""
    horns = snail_horns(G)
    if not horns:
        raise ValueError("graph has no snail horn; no valid root exists")
    return [(h.head, lm_run(G, h.head).bound) for h in horns]


class TraceViolation(NamedTuple):
    """A failed guarantee of a level walk, tagged with the rule and level."""

    rule: str
    level: int | None
    message: str

    def __str__(self) -> str:
        where = f" at level {self.level}" if self.level is not None else ""
        return f"[{self.rule}]{where}: {self.message}"


def validate_trace(G: Graph, trace: LMTrace, profile: StructureProfile) -> list[TraceViolation]:
    """Check a level walk against every guarantee the theory promises.

    ``profile`` must carry the complete admitting set (cap at least
    ``n - 4``), otherwise the membership rule cannot be decided and a
    ``ValueError`` is raised.  An empty return value means the trace is
    fully consistent.
    """
    if profile.admitting_cap < G.n - 4:
        raise ValueError("trace validation needs a profile with the full admitting-set cap")
    L = levelling(G, trace.root)
    if trace.depth != L.N or [r.level for r in trace.levels] != list(range(L.N, 0, -1)):
        raise ValueError("trace does not match the levelling of this graph from its root")

    out: list[TraceViolation] = []
    alpha = profile.alpha_l
    admitting = profile.admitting

    seen: set[int] = set()
    all_edges: list[Edge] = []
    for rec in trace.levels:
        all_edges.extend(rec.matching)
        all_edges.extend(rec.witness_matching)
    for u, v in all_edges:
        if v not in G.adj[u]:
            out.append(TraceViolation("matching-edges", None, f"({u}, {v}) is not an edge"))
        if u in seen or v in seen:
            out.append(TraceViolation("matching-disjoint", None, f"({u}, {v}) reuses a vertex"))
        seen.update((u, v))

    covered = seen | trace.leftover_union()
    if covered != set(range(G.n)):
        missing = sorted(set(range(G.n)) - covered)
        out.append(TraceViolation("coverage", None, f"vertices {missing} unaccounted for"))

    for rec in trace.levels:
        z = len(rec.leftover)
        if rec.level == 1:
            if z > alpha - 1:
                out.append(TraceViolation(
                    "first-level-leftover", 1,
                    f"|Z| = {z} exceeds alpha_l - 1 = {alpha - 1}"))
        else:
            cap = (alpha - 2) * len(rec.x_residual)
            if z > cap:
                out.append(TraceViolation(
                    "leftover-vs-residual", rec.level,
                    f"|Z| = {z} exceeds (alpha_l - 2)|X| = {cap}"))
        if z > 0 and is_clean_level(L, rec.level):
            out.append(TraceViolation(
                "clean-level", rec.level, f"clean level has |Z| = {z}"))
        if z > 0 and rec.level != 1 and rec.level not in admitting:
            out.append(TraceViolation(
                "admitting-membership", rec.level,
                f"leftover at level {rec.level} outside the admitting set"))

    exact = deficiency(G)
    if trace.bound < exact:
        out.append(TraceViolation(
            "soundness", None,
            f"bound {trace.bound} is below the exact deficiency {exact}"))
    if trace.bound != sum(len(r.leftover) for r in trace.levels):
        out.append(TraceViolation("bound-sum", None, "bound does not equal the leftover total"))
    return out
