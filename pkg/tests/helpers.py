"""Independent test oracles.

Everything here is deliberately written from scratch with a different
algorithmic approach than the package (plain BFS, subset scans, permutation
backtracking) so that agreement between the two is meaningful evidence of
correctness rather than a tautology.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations, permutations

from bonematch import Graph, build_graph


# ---------------------------------------------------------------------------
# deterministic random instance builders (independent of bonematch.harness)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Random labelled tree: attach each new vertex to a uniform earlier one."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return build_graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.15) -> Graph:
    """Random tree plus each remaining pair independently with prob ``extra``."""
    tree = random_tree(rng, n)
    edges = set(tree.edges())
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


# ---------------------------------------------------------------------------
# plain-BFS levelling oracle


def bfs_levels(G: Graph, root: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(G.adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# matching oracles


def is_valid_matching(G: Graph, edges) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u == v or not G.has_edge(u, v):
            return False
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def matching_number_subsets(G: Graph) -> int:
    """Maximum matching size by scanning edge subsets (tiny graphs only)."""
    edge_list = G.edges()
    best = 0
    for size in range(len(edge_list), 0, -1):
        if size <= best:
            break
        for subset in combinations(edge_list, size):
            used: set[int] = set()
            ok = True
            for u, v in subset:
                if u in used or v in used:
                    ok = False
                    break
                used.update((u, v))
            if ok:
                best = size
                break
    return best


# ---------------------------------------------------------------------------
# independence / clique oracles


def independence_number_subsets(G: Graph) -> int:
    best = 0
    for size in range(G.n, 0, -1):
        if size <= best:
            break
        for subset in combinations(range(G.n), size):
            chosen = set(subset)
            if all(not (G.adj[v] & chosen) for v in subset):
                best = size
                break
    return best


def has_independent_neighbors(G: Graph, v: int, t: int) -> bool:
    """True when some ``t`` neighbors of ``v`` are pairwise nonadjacent."""
    nbrs = sorted(G.adj[v])
    for subset in combinations(nbrs, t):
        chosen = set(subset)
        if all(not (G.adj[u] & chosen) for u in subset):
            return True
    return False


# ---------------------------------------------------------------------------
# generic isomorphism + bone detection by subset scan


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    if sorted(len(a) for a in G.adj) != sorted(len(a) for a in H.adj):
        return False
    hv_by_deg: dict[int, list[int]] = {}
    for v in range(H.n):
        hv_by_deg.setdefault(len(H.adj[v]), []).append(v)

    order = sorted(range(G.n), key=lambda v: -len(G.adj[v]))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        g = order[k]
        for h in hv_by_deg.get(len(G.adj[g]), []):
            if h in used:
                continue
            ok = True
            for g2, h2 in assign.items():
                if (g2 in G.adj[g]) != (h2 in H.adj[h]):
                    ok = False
                    break
            if ok:
                assign[g] = h
                used.add(h)
                if extend(k + 1):
                    return True
                del assign[g]
                used.discard(h)
        return False

    return extend(0)


def reference_bone(i: int) -> Graph:
    """Path on ``i`` vertices with two pendant vertices on each end."""
    edges = [(k, k + 1) for k in range(i - 1)]
    edges += [(0, i), (0, i + 1), (i - 1, i + 2), (i - 1, i + 3)]
    return build_graph(i + 4, edges)


def induced_on(G: Graph, subset) -> Graph:
    verts = sorted(subset)
    pos = {v: k for k, v in enumerate(verts)}
    edges = [
        (pos[u], pos[v]) for u, v in combinations(verts, 2) if G.has_edge(u, v)
    ]
    return build_graph(len(verts), edges)


def has_induced_bone_subsets(G: Graph, i: int) -> bool:
    bone = reference_bone(i)
    if i + 4 > G.n:
        return False
    for subset in combinations(range(G.n), i + 4):
        if are_isomorphic(induced_on(G, subset), bone):
            return True
    return False


def admitting_set_by_path_enum(G: Graph, cap: int | None = None) -> set[int]:
    """Bone indices by enumerating induced paths between candidate ends.

    A bone end always has three pairwise-nonadjacent neighbours (two pendants
    plus the path), so only such vertices can terminate the spine.  For each
    induced path between two candidates we look for a pendant quadruple that
    is disjoint from and nonadjacent to the rest of the figure.
    """
    cap = G.n - 4 if cap is None else min(cap, G.n - 4)
    ends = [v for v in range(G.n) if has_independent_neighbors(G, v, 3)]
    endset = set(ends)
    found: set[int] = set()

    def pendant_pair_exists(u: int, w: int, pathset: set[int]) -> bool:
        au = [
            x
            for x in sorted(G.adj[u])
            if x not in pathset and not (G.adj[x] & (pathset - {u}))
        ]
        aw = [
            x
            for x in sorted(G.adj[w])
            if x not in pathset and not (G.adj[x] & (pathset - {w}))
        ]
        for p1, p2 in combinations(au, 2):
            if G.has_edge(p1, p2):
                continue
            for q1, q2 in combinations(aw, 2):
                if {q1, q2} & {p1, p2} or G.has_edge(q1, q2):
                    continue
                if any(G.has_edge(a, b) for a in (p1, p2) for b in (q1, q2)):
                    continue
                return True
        return False

    def dfs(path: list[int], pathset: set[int]) -> None:
        head = path[-1]
        if len(path) >= 2 and head in endset and len(path) not in found:
            if pendant_pair_exists(path[0], head, pathset):
                found.add(len(path))
        if len(path) >= cap:
            return
        interior = pathset - {head}
        for nxt in sorted(G.adj[head]):
            if nxt in pathset or (G.adj[nxt] & interior):
                continue
            path.append(nxt)
            pathset.add(nxt)
            dfs(path, pathset)
            pathset.discard(nxt)
            path.pop()

    for u in ends:
        dfs([u], {u})
    return {i for i in found if 2 <= i <= cap}


def tree_admitting_oracle(T: Graph) -> set[int]:
    """For a tree: bone indices are path distances between branch vertices."""
    out: set[int] = set()
    branch = [v for v in range(T.n) if len(T.adj[v]) >= 3]
    for u in branch:
        dist = bfs_levels(T, u)
        for w in branch:
            if w != u and dist[w] + 1 >= 2:
                out.add(dist[w] + 1)
    return out


# ---------------------------------------------------------------------------
# independent postcondition inspection for two-level matchings


def check_two_level_postconditions(H: Graph, X, Y, result) -> list[str]:
    """Re-derive every guaranteed property of a two-level matching from the
    graph alone and report human-readable discrepancies (empty == all good).
    """
    errs: list[str] = []
    X, Y = set(X), set(Y)
    mate: dict[int, int] = {}
    for u, v in result.matching:
        if not H.has_edge(u, v):
            errs.append(f"matching uses non-edge {(u, v)}")
        if u in mate or v in mate:
            errs.append(f"matching overlaps at {(u, v)}")
        mate[u] = v
        mate[v] = u

    y_m = {y for y in Y if y not in mate}
    x_m = {x for x in X if x not in mate and H.adj[x] & y_m}
    if set(result.y_residual) != y_m:
        errs.append("reported Y residual differs from recomputation")
    if set(result.x_residual) != x_m:
        errs.append("reported X residual differs from recomputation")

    for y in sorted(y_m):
        if not (H.adj[y] & x_m):
            errs.append(f"(1) residual {y} has no residual X neighbor")
    for a in sorted(y_m):
        for b in sorted(y_m):
            if a < b and H.has_edge(a, b):
                errs.append(f"(2) residual Y vertices {a},{b} adjacent")

    def private_to(x: int, avoiding: int | None = None) -> set[int]:
        out = set()
        for y in y_m:
            if x not in H.adj[y]:
                continue
            if avoiding is not None and avoiding in H.adj[y]:
                continue
            if H.adj[y] & x_m == {x}:
                out.add(y)
        return out

    pmap = result.private_map()
    for x in sorted(x_m):
        priv = private_to(x)
        if len(priv) < 2:
            errs.append(f"(3) {x} has only {len(priv)} private witnesses")
        reported = pmap.get(x)
        if reported is None:
            errs.append(f"(3) no witness pair reported for {x}")
        elif not set(reported) <= priv:
            errs.append(f"(3) reported witnesses for {x} are not private")

    for v in sorted(set(mate) & X):
        spoiled = [x for x in sorted(x_m) if len(private_to(x, avoiding=v)) < 2]
        if len(spoiled) > 1:
            errs.append(f"(4) matched {v} spoils {len(spoiled)} residuals")
    return errs
