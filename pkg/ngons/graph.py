"""
Compatibility graph over apex candidates and maximal clique extraction.

Edges join apexes at a natural distance that form no collinear triple
with either baseline endpoint. Cliques are enumerated with
Bron-Kerbosch (pivoting, degeneracy ordering) and then repaired into
their maximal subsets in general position.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from core.parallel import parallel_map
from kernel.geometry import QuadPoint, collinear, find_collinear_triple

from .candidates import ApexCandidate, baseline, compatible, enumerate_apexes

logger = logging.getLogger(__name__)

Clique = Tuple[int, ...]


@dataclass
class CompatibilityGraph:
    k: int
    vertices: List[ApexCandidate]
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    adjacency: Dict[int, Set[int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.adjacency:
            self.adjacency = {index: set() for index in range(len(self.vertices))}
            for i, j in self.edges:
                self.adjacency[i].add(j)
                self.adjacency[j].add(i)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def distance(self, i: int, j: int) -> Optional[int]:
        return self.edges.get((min(i, j), max(i, j)))

    def neighbors(self, i: int) -> Set[int]:
        return self.adjacency[i]


def edge_allowed(u: ApexCandidate, v: ApexCandidate, k: int) -> Optional[int]:
    """compatible(u, v) plus the baseline collinearity exclusions."""
    distance = compatible(u, v, k)
    if distance is None:
        return None
    P, Q = baseline(k)
    if collinear(P, u.point, v.point) or collinear(Q, u.point, v.point):
        return None
    return distance


def _bucket_edges(job: Tuple[int, List[Tuple[int, ApexCandidate]]]):
    k, members = job
    found = []
    for (i, u), (j, v) in combinations(members, 2):
        distance = edge_allowed(u, v, k)
        if distance is not None:
            found.append(((i, j), distance))
    return found


def build_graph(cfg, workers: int = 1) -> CompatibilityGraph:
    """
    All-pairs compatibility over enumerate_apexes(cfg).

    Only candidates of one radicand class can be adjacent, so pairs are
    formed inside each class; classes are processed in parallel.
    """
    vertices = enumerate_apexes(cfg)
    buckets = defaultdict(list)
    for index, apex in enumerate(vertices):
        buckets[apex.D].append((index, apex))
    jobs = [(cfg.k, buckets[D]) for D in sorted(buckets) if len(buckets[D]) > 1]

    edges = {}
    for found in parallel_map(_bucket_edges, jobs, workers):
        edges.update(found)
    edges = dict(sorted(edges.items()))
    logger.info(
        f"k={cfg.k} M={cfg.max_dist}: {len(vertices)} apexes, {len(buckets)} radicand classes, "
        f"{len(edges)} edges"
    )
    return CompatibilityGraph(cfg.k, vertices, edges)


def degeneracy_order(adjacency: Dict[int, Set[int]]) -> List[int]:
    """Repeatedly remove a vertex of minimum remaining degree (smallest index on ties)."""
    degree = {v: len(neigh) for v, neigh in adjacency.items()}
    remaining = set(adjacency)
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        order.append(v)
        remaining.remove(v)
        for u in adjacency[v]:
            if u in remaining:
                degree[u] -= 1
    return order


def bron_kerbosch(adjacency: Dict[int, Set[int]]) -> List[FrozenSet[int]]:
    """Every maximal clique of the graph."""
    cliques = []

    def expand(R: Set[int], P: Set[int], X: Set[int]):
        if not P and not X:
            cliques.append(frozenset(R))
            return
        pivot = max(P | X, key=lambda u: (len(P & adjacency[u]), -u))
        for v in sorted(P - adjacency[pivot]):
            expand(R | {v}, P & adjacency[v], X & adjacency[v])
            P = P - {v}
            X = X | {v}

    order = degeneracy_order(adjacency)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {u for u in adjacency[v] if position[u] > position[v]}
        earlier = {u for u in adjacency[v] if position[u] < position[v]}
        expand({v}, later, earlier)
    return cliques


def repair(
    members: FrozenSet[int],
    find_violation: Callable[[Sequence[int]], Optional[Iterable[int]]],
) -> Set[FrozenSet[int]]:
    """
    Subsets of members with no violation, maximal among those reached by
    removing one vertex of a violation at a time.

    find_violation returns the removable vertices of one violation, or
    None when the subset is admissible. Every maximal admissible subset
    is among the results whenever admissibility is hereditary.
    """
    results = set()
    seen = set()
    stack = [members]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        violation = find_violation(sorted(current))
        if violation is None:
            results.add(current)
            continue
        for vertex in violation:
            stack.append(current - {vertex})
    return {s for s in results if not any(s < other for other in results)}


def drop_dominated(sets: Iterable[FrozenSet[int]]) -> List[FrozenSet[int]]:
    """Remove every set that is a proper subset of another."""
    unique = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    kept: List[FrozenSet[int]] = []
    for candidate in unique:
        if not any(candidate < other for other in kept):
            kept.append(candidate)
    return kept


def collinear_violation(g: CompatibilityGraph) -> Callable[[Sequence[int]], Optional[Tuple[int, ...]]]:
    def find(indices: Sequence[int]):
        points = [g.vertices[i].point for i in indices]
        triple = find_collinear_triple(points)
        if triple is None:
            return None
        return tuple(indices[t] for t in triple)
    return find


def canonical_cliques(cliques: Iterable[FrozenSet[int]]) -> List[Clique]:
    return sorted((tuple(sorted(c)) for c in cliques), key=lambda c: (-len(c), c))


def find_max_cliques(g: CompatibilityGraph, min_size: int = 1) -> List[Clique]:
    """
    All maximal cliques of size >= min_size whose apexes, together with
    the baseline endpoints, contain no collinear triple.

    A maximal clique holding a collinear apex triple is replaced by its
    maximal general-position subsets, and subsets dominated by another
    result are dropped, which keeps the enumeration exact.
    """
    raw = bron_kerbosch(g.adjacency)
    find = collinear_violation(g)
    repaired = []
    for clique in raw:
        parts = repair(clique, find)
        if parts != {clique}:
            logger.warning(
                f"Clique {sorted(clique)} had a collinear apex triple; "
                f"repaired into {len(parts)} general-position subsets"
            )
        repaired.extend(parts)
    result = [c for c in canonical_cliques(drop_dominated(repaired)) if len(c) >= min_size]
    logger.info(f"{len(raw)} maximal cliques, {len(result)} after repair (min size {min_size})")
    return result


def clique_points(g: CompatibilityGraph, clique: Sequence[int]) -> List[QuadPoint]:
    return [g.vertices[i].point for i in clique]
