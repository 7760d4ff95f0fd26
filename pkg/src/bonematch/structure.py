"""Structural parameters: independence numbers, cliques, and induced bones.

A bone of index ``i`` is a path on ``i`` vertices with two extra pendant
vertices hanging off each end, so it has ``i + 4`` vertices and ``i + 3``
edges.  The admitting set of a graph collects the indices of all bones it
contains as induced subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .errors import GuardExceededError
from .graphs import Graph, snail_horns

__all__ = [
    "max_independent_set",
    "independence_number",
    "local_independence_number",
    "clique_number",
    "BoneEmbedding",
    "find_induced_bone",
    "admitting_set",
    "StructureProfile",
    "structure_profile",
]

_MIS_MAX = 40


def _alpha_of_mask(masks: list[int], avail: int) -> int:
    # Exact branch and bound on bitmasks.  Vertices of degree <= 1 inside the
    # candidate set are taken greedily (always safe for size); otherwise
    # branch on a maximum-degree vertex.
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        while True:
            if avail == 0:
                if size > best:
                    best = size
                return
            if size + avail.bit_count() <= best:
                return
            max_deg = -1
            max_v = -1
            reduced = False
            scan = avail
            while scan:
                bit = scan & -scan
                v = bit.bit_length() - 1
                scan ^= bit
                deg = (masks[v] & avail).bit_count()
                if deg <= 1:
                    avail &= ~(masks[v] | bit)
                    size += 1
                    reduced = True
                    break
                if deg > max_deg:
                    max_deg = deg
                    max_v = v
            if reduced:
                continue
            bit = 1 << max_v
            rec(avail & ~(masks[max_v] | bit), size + 1)
            rec(avail & ~bit, size)
            return

    rec(avail, 0)
    return best


def independence_number(G: Graph) -> int:
    """Exact independence number (guard: 40 vertices)."""
    if G.n > _MIS_MAX:
        raise GuardExceededError(f"exact independence number limited to {_MIS_MAX} vertices")
    return _alpha_of_mask(G.adjacency_masks(), (1 << G.n) - 1)


def max_independent_set(G: Graph) -> tuple[int, ...]:
    """The lexicographically smallest maximum independent set (guard: 40 vertices)."""
    if G.n > _MIS_MAX:
        raise GuardExceededError(f"exact independent set limited to {_MIS_MAX} vertices")
    masks = G.adjacency_masks()
    alpha = _alpha_of_mask(masks, (1 << G.n) - 1)
    chosen: list[int] = []
    avail = (1 << G.n) - 1
    for v in range(G.n):
        bit = 1 << v
        if not avail & bit:
            continue
        rest = avail & ~(masks[v] | bit)
        if len(chosen) + 1 + _alpha_of_mask(masks, rest) == alpha:
            chosen.append(v)
            avail = rest
        else:
            avail &= ~bit
    return tuple(chosen)


def local_independence_number(G: Graph) -> int:
    """Largest ``t`` such that some vertex has an independent set of size ``t``
    in its neighbourhood; equivalently the largest induced star centre size.

    Zero on graphs without edges.  A graph is claw-free iff this is below 3.
    """
    masks = G.adjacency_masks()
    best = 0
    for v in range(G.n):
        if G.degree(v) > _MIS_MAX:
            raise GuardExceededError(f"neighbourhood of {v} exceeds {_MIS_MAX} vertices")
        if G.degree(v) <= best:
            continue
        a = _alpha_of_mask(masks, masks[v])
        if a > best:
            best = a
    return best


def clique_number(G: Graph) -> int:
    """Clique number, computed as the independence number of the complement
    (guard: 40 vertices)."""
    if G.n > _MIS_MAX:
        raise GuardExceededError(f"clique number limited to {_MIS_MAX} vertices")
    full = (1 << G.n) - 1
    masks = G.adjacency_masks()
    comp = [full & ~(masks[v] | (1 << v)) for v in range(G.n)]
    return _alpha_of_mask(comp, full)


@dataclass(frozen=True)
class BoneEmbedding:
    """An induced bone: the spine path plus the two pendant pairs at each end."""

    path: tuple[int, ...]
    pendants_left: tuple[int, int]
    pendants_right: tuple[int, int]

    @property
    def index(self) -> int:
        return len(self.path)

    def vertices(self) -> frozenset[int]:
        return frozenset(self.path) | set(self.pendants_left) | set(self.pendants_right)


def _bone_from_subset(G: Graph, subset: tuple[int, ...], i: int) -> BoneEmbedding | None:
    sset = set(subset)
    deg = {}
    edge_total = 0
    for u in subset:
        d = len(G.adj[u] & sset)
        deg[u] = d
        edge_total += d
    if edge_total != 2 * (i + 3):
        return None
    ones = [u for u in subset if deg[u] == 1]
    threes = [u for u in subset if deg[u] == 3]
    twos = [u for u in subset if deg[u] == 2]
    if len(ones) != 4 or len(threes) != 2 or len(twos) != i - 2:
        return None
    # i+4 vertices with i+3 edges: connectivity now forces a tree, and the
    # degree profile plus the end distance pins the tree down to a bone.
    start, other = sorted(threes)
    prev = {start: None}
    order = [start]
    qi = 0
    while qi < len(order):
        u = order[qi]
        qi += 1
        for w in sorted(G.adj[u] & sset):
            if w not in prev:
                prev[w] = u
                order.append(w)
    if len(order) != len(subset):
        return None
    spine = [other]
    while prev[spine[-1]] is not None:
        spine.append(prev[spine[-1]])
    spine.reverse()
    if len(spine) != i:
        return None
    left = tuple(sorted((G.adj[start] & sset) - {spine[1]}))
    right = tuple(sorted((G.adj[other] & sset) - {spine[-2]}))
    return BoneEmbedding(tuple(spine), left, right)


def _complete_spine(G: Graph, spine: list[int]) -> BoneEmbedding | None:
    head, tail = spine[0], spine[-1]
    body = set(spine)
    left = sorted(w for w in G.adj[head] if w not in body and not (G.adj[w] & (body - {head})))
    right = sorted(w for w in G.adj[tail] if w not in body and not (G.adj[w] & (body - {tail})))
    if len(left) < 2 or len(right) < 2:
        return None
    for a1, a2 in combinations(left, 2):
        if a2 in G.adj[a1]:
            continue
        blocked = G.adj[a1] | G.adj[a2]
        for b1, b2 in combinations(right, 2):
            if b2 in G.adj[b1] or b1 in blocked or b2 in blocked:
                continue
            return BoneEmbedding(tuple(spine), (a1, a2), (b1, b2))
    return None


def _bone_via_spines(G: Graph, i: int) -> BoneEmbedding | None:
    # Depth-first enumeration of induced paths on i vertices; each complete
    # spine is then tested for two non-adjacent private pendants per end.
    adj = G.adj
    found: BoneEmbedding | None = None

    def walk(spine: list[int], body: set[int]) -> BoneEmbedding | None:
        if len(spine) == i:
            if spine[0] > spine[-1]:
                return None
            return _complete_spine(G, spine)
        last = spine[-1]
        inner = body - {last}
        for w in sorted(adj[last]):
            if w in body or adj[w] & inner:
                continue
            spine.append(w)
            body.add(w)
            got = walk(spine, body)
            spine.pop()
            body.discard(w)
            if got is not None:
                return got
        return None

    for v0 in range(G.n):
        found = walk([v0], {v0})
        if found is not None:
            return found
    return None


def find_induced_bone(G: Graph, i: int, strategy: str = "auto") -> BoneEmbedding | None:
    """First induced bone of index ``i`` in deterministic scan order, or ``None``.

    ``strategy`` selects between the subset scan (used automatically for at
    most 12 vertices) and the induced-path search (larger graphs).
    """
    if i < 2:
        raise ValueError(f"bone index must be at least 2, got {i}")
    if strategy not in ("auto", "subsets", "spines"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if i + 4 > G.n:
        return None
    if strategy == "auto":
        strategy = "subsets" if G.n <= 12 else "spines"
    if strategy == "subsets":
        for subset in combinations(range(G.n), i + 4):
            emb = _bone_from_subset(G, subset, i)
            if emb is not None:
                return emb
        return None
    return _bone_via_spines(G, i)


def admitting_set(G: Graph, i_max: int | None = None) -> frozenset[int]:
    """Indices ``i`` in ``2..i_max`` for which an induced bone exists.

    The cap defaults to (and is clamped at) ``n - 4``, beyond which no bone
    fits, so the default is the complete admitting set.
    """
    cap = G.n - 4 if i_max is None else min(i_max, G.n - 4)
    return frozenset(i for i in range(2, cap + 1) if find_induced_bone(G, i) is not None)


@dataclass(frozen=True)
class StructureProfile:
    """Summary of the structural parameters used by the deficiency bounds."""

    alpha_l: int
    omega: int
    admitting: frozenset[int]
    admitting_cap: int
    snail_horn_count: int
    claw_free: bool
    triangle_free: bool

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "alpha_l": self.alpha_l,
            "omega": self.omega,
            "admitting": sorted(self.admitting),
            "admitting_cap": self.admitting_cap,
            "snail_horns": self.snail_horn_count,
            "claw_free": self.claw_free,
            "triangle_free": self.triangle_free,
        }


def structure_profile(G: Graph, i_max: int | None = None) -> StructureProfile:
    """Compute all structural parameters at once.

    ``i_max`` caps the bone search; the recorded cap lets consumers tell a
    truncated admitting set from a complete one.
    """
    cap = G.n - 4 if i_max is None else min(i_max, G.n - 4)
    alpha_l = local_independence_number(G)
    omega = clique_number(G)
    admitting = admitting_set(G, cap)
    return StructureProfile(
        alpha_l=alpha_l,
        omega=omega,
        admitting=admitting,
        admitting_cap=cap,
        snail_horn_count=len(snail_horns(G)),
        claw_free=alpha_l < 3,
        triangle_free=omega < 3,
    )
