"""Maximum matchings, deficiency, pendant reduction, and deficiency-criticality.

The production maximum-matching path is a hand-written blossom algorithm
(augmenting paths with cycle contraction).  Two independent exponential
oracles, ``brute_force_matching_size`` and ``berge_tutte_deficiency``, exist
purely so tests can cross-check the blossom on small graphs; they are never
called by other production code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, NamedTuple

from .errors import GuardExceededError
from .graphs import Graph, build_graph, induced_subgraph

__all__ = [
    "MatchingResult",
    "maximum_matching",
    "deficiency",
    "brute_force_matching_size",
    "berge_tutte_deficiency",
    "PendantReduction",
    "reduce_pendants",
    "CriticalityResult",
    "is_deficiency_critical",
    "critical_core",
]

_BRUTE_FORCE_MAX = 16
_BERGE_TUTTE_MAX = 14
_CRITICALITY_MAX = 18


@dataclass(frozen=True)
class MatchingResult:
    """A maximum matching: its edges, the unsaturated vertices, and their count."""

    edges: frozenset[tuple[int, int]]
    unsaturated: frozenset[int]
    deficiency: int

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "matching": [list(e) for e in sorted(self.edges)],
            "unsaturated": sorted(self.unsaturated),
            "deficiency": self.deficiency,
        }


def _blossom(n: int, adj: list[list[int]]) -> list[int]:
    # Classic O(V^3) blossom search: repeatedly grow an alternating BFS tree
    # from each exposed vertex, contracting odd cycles onto their base.
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_blossom = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle: contract everything onto the common base.
                    cur = lca(v, to)
                    for i in range(n):
                        in_blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        queue.append(match[to])
        return -1

    for root in range(n):
        if match[root] != -1:
            continue
        finish = find_augmenting(root)
        v = finish
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
    return match


def maximum_matching(G: Graph) -> MatchingResult:
    """A maximum matching of ``G`` (deterministic for a fixed labelled graph)."""
    adj = [sorted(s) for s in G.adj]
    match = _blossom(G.n, adj)
    edges = frozenset((v, match[v]) for v in range(G.n) if v < match[v])
    unsat = frozenset(v for v in range(G.n) if match[v] == -1)
    return MatchingResult(edges, unsat, len(unsat))


def deficiency(G: Graph) -> int:
    """Number of vertices missed by a maximum matching."""
    return maximum_matching(G).deficiency


def brute_force_matching_size(G: Graph) -> int:
    """Test oracle: exhaustive branch over the edges at the lowest live vertex.

    Limited to 16 vertices.  Shares no code with the blossom path.
    """
    if G.n > _BRUTE_FORCE_MAX:
        raise GuardExceededError(f"brute force matching limited to {_BRUTE_FORCE_MAX} vertices")
    masks = G.adjacency_masks()

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            nb = masks[v] & avail
            if nb:
                break
            rest &= rest - 1
        else:
            return 0
        out = best(avail & ~(1 << v))
        while nb:
            u = (nb & -nb).bit_length() - 1
            cand = 1 + best(avail & ~(1 << v) & ~(1 << u))
            if cand > out:
                out = cand
            nb &= nb - 1
        return out

    result = best((1 << G.n) - 1)
    best.cache_clear()
    return result


def _odd_components(masks: list[int], avail: int) -> int:
    count = 0
    rem = avail
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= masks[b.bit_length() - 1]
                f &= f - 1
            frontier = grow & avail & ~comp
            comp |= frontier
        if comp.bit_count() & 1:
            count += 1
        rem &= ~comp
    return count


def berge_tutte_deficiency(G: Graph) -> int:
    """Test oracle: maximise (odd components of G - S) - |S| over all S.

    Limited to 14 vertices.
    """
    if G.n > _BERGE_TUTTE_MAX:
        raise GuardExceededError(f"Berge-Tutte oracle limited to {_BERGE_TUTTE_MAX} vertices")
    masks = G.adjacency_masks()
    full = (1 << G.n) - 1
    best = 0
    for s in range(full + 1):
        value = _odd_components(masks, full & ~s) - s.bit_count()
        if value > best:
            best = value
    return best


class PendantReduction(NamedTuple):
    """Result of peeling pendant edges; the reduction preserves deficiency.

    ``vertex_map[i]`` is the original id of vertex ``i`` of the reduced graph;
    ``removed_pairs`` lists ``(support, pendant)`` pairs in removal order using
    original ids; ``isolated_count`` counts degree-zero vertices left behind.
    """

    graph: Graph
    vertex_map: tuple[int, ...]
    removed_pairs: tuple[tuple[int, int], ...]
    isolated_count: int


def reduce_pendants(G: Graph) -> PendantReduction:
    """Repeatedly delete a pendant vertex together with its support vertex.

    Always removes the pendant with the smallest id first, so the result is
    deterministic.  Stops when no vertex of degree one remains.
    """
    adj = {v: set(G.adj[v]) for v in range(G.n)}
    removed: list[tuple[int, int]] = []
    while True:
        pend = next((y for y in sorted(adj) if len(adj[y]) == 1), None)
        if pend is None:
            break
        (sup,) = adj[pend]
        for w in adj[sup]:
            if w != pend:
                adj[w].discard(sup)
        del adj[pend]
        del adj[sup]
        removed.append((sup, pend))
    keep = sorted(adj)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in adj[u] if u < v]
    reduced = build_graph(len(keep), edges, name=G.name)
    isolated = sum(1 for v in keep if not adj[v])
    return PendantReduction(reduced, tuple(keep), tuple(removed), isolated)


def _matching_size_table(masks: list[int], n: int) -> list[int]:
    # f[mask] = maximum matching size of the induced subgraph on `mask`,
    # filled bottom-up by branching at the lowest vertex of the mask.
    f = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = f[rest]
        nb = masks[v] & rest
        while nb:
            u = nb & -nb
            cand = 1 + f[rest ^ u]
            if cand > best:
                best = cand
            nb ^= u
        f[mask] = best
    return f


def _mask_connected(masks: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    comp = mask & -mask
    frontier = comp
    while frontier:
        grow = 0
        f = frontier
        while f:
            b = f & -f
            grow |= masks[b.bit_length() - 1]
            f &= f - 1
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp == mask


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


@dataclass(frozen=True)
class CriticalityResult:
    """Verdict on whether every proper connected induced subgraph has smaller deficiency.

    ``verdict`` is ``"critical"``, ``"not-critical"`` (with a witness subgraph
    whose deficiency is at least that of the whole graph), or
    ``"partial-pass"`` for the delete-one mode when no single deletion
    produced a witness.
    """

    verdict: str
    mode: str
    deficiency: int
    witness: Graph | None = None
    witness_vertices: tuple[int, ...] | None = None


def is_deficiency_critical(G: Graph, mode: str = "exhaustive") -> CriticalityResult:
    """Check deficiency-criticality.

    ``exhaustive`` scans every proper connected induced subgraph (guard: 18
    vertices) and reports the lexicographically smallest witness on failure.
    ``delete-one`` only tries removing single vertices and can return
    ``partial-pass``, never ``critical``.
    """
    if mode not in ("exhaustive", "delete-one"):
        raise ValueError(f"unknown mode {mode!r}")
    kd = deficiency(G)
    if mode == "delete-one":
        for v in range(G.n):
            rest = [u for u in range(G.n) if u != v]
            if not rest:
                continue
            H, vmap = induced_subgraph(G, rest)
            if _connected_graph(H) and deficiency(H) >= kd:
                return CriticalityResult("not-critical", mode, kd, H, vmap)
        return CriticalityResult("partial-pass", mode, kd)

    if G.n > _CRITICALITY_MAX:
        raise GuardExceededError(f"exhaustive criticality limited to {_CRITICALITY_MAX} vertices")
    masks = G.adjacency_masks()
    f = _matching_size_table(masks, G.n)
    full = (1 << G.n) - 1
    witnesses = []
    for mask in range(1, full):
        size = mask.bit_count()
        if size - 2 * f[mask] >= kd and _mask_connected(masks, mask):
            witnesses.append(_mask_vertices(mask))
    if not witnesses:
        return CriticalityResult("critical", mode, kd)
    best = min(witnesses)
    H, vmap = induced_subgraph(G, best)
    return CriticalityResult("not-critical", mode, kd, H, vmap)


def _connected_graph(G: Graph) -> bool:
    from .graphs import is_connected

    return is_connected(G)


def critical_core(G: Graph) -> tuple[Graph, tuple[int, ...]]:
    """A connected induced subgraph of maximum deficiency (the graph itself allowed).

    Ties break towards fewer vertices, then the lexicographically smallest
    vertex set.  The result is itself deficiency-critical.  Guard: 18
    vertices.
    """
    if G.n > _CRITICALITY_MAX:
        raise GuardExceededError(f"critical core limited to {_CRITICALITY_MAX} vertices")
    if G.n == 0:
        raise ValueError("critical core of the empty graph is undefined")
    masks = G.adjacency_masks()
    f = _matching_size_table(masks, G.n)
    best_kd = -1
    best_size = 0
    best_vs: tuple[int, ...] = ()
    for mask in range(1, 1 << G.n):
        kd = mask.bit_count() - 2 * f[mask]
        if kd < best_kd:
            continue
        size = mask.bit_count()
        if kd == best_kd and size > best_size:
            continue
        if not _mask_connected(masks, mask):
            continue
        vs = _mask_vertices(mask)
        if kd > best_kd or size < best_size or vs < best_vs:
            best_kd, best_size, best_vs = kd, size, vs
    H, vmap = induced_subgraph(G, best_vs)
    return H, vmap
