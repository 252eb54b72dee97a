"""Reference implementations for cross-checking, sharing no code with the package.

Graphs are taken apart into plain edge lists and handed to brute force or to
networkx, never to the package's own search routines.
"""

from __future__ import annotations

import itertools
from collections import deque

import networkx as nx


def to_nx(g) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.sorted_edges())
    return out


def adjacency(g) -> dict[int, set[int]]:
    adj = {v: set() for v in range(g.n)}
    for a, b in g.sorted_edges():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def connected_within(adj, vertices) -> bool:
    vertices = set(vertices)
    if not vertices:
        return False
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == vertices


def is_k_colorable(g, k: int) -> bool:
    adj = adjacency(g)
    order = sorted(range(g.n), key=lambda v: -len(adj[v]))
    color: dict[int, int] = {}

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[w] for w in adj[v] if w in color}
        # symmetry: never open more than one new colour at a time
        top = max(color.values(), default=-1) + 1
        for c in range(min(k, top + 1)):
            if c not in taken:
                color[v] = c
                if go(i + 1):
                    return True
                del color[v]
        return False

    return go(0)


def chromatic_reference(g) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not is_k_colorable(g, k):
        k += 1
    return k


def connectivity_reference(g) -> int:
    """Smallest vertex cut by brute force; complete graphs give n - 1."""
    adj = adjacency(g)
    n = g.n
    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            rest = set(range(n)) - set(cut)
            if len(rest) >= 2 and not connected_within(adj, rest):
                return size
    return n - 1


def contains_subgraph(g, h) -> bool:
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
    return matcher.subgraph_is_monomorphic()


def isomorphic(g, h) -> bool:
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def planar_reference(g) -> bool:
    return nx.check_planarity(to_nx(g))[0]


def bfs_layer_sets(g, root: int) -> list[set[int]]:
    dist = dict(nx.single_source_shortest_path_length(to_nx(g), root))
    depth = max(dist.values())
    return [{v for v, d in dist.items() if d == k} for k in range(depth + 1)]


def induced(g, vertices):
    """Relabelled induced subgraph as a (n, edges) pair for the colouring reference."""
    vs = sorted(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[a], pos[b]) for a, b in g.sorted_edges() if a in pos and b in pos]
    return _Plain(len(vs), edges)


class _Plain:
    def __init__(self, n, edges):
        self.n = n
        self._edges = sorted((min(a, b), max(a, b)) for a, b in edges)

    def sorted_edges(self):
        return list(self._edges)


def model_ok(host, pattern, sets) -> bool:
    """Branch-set conditions checked from scratch."""
    adj = adjacency(host)
    if len(sets) != pattern.n:
        return False
    used: set[int] = set()
    for s in sets:
        if not s or used & set(s) or not connected_within(adj, s):
            return False
        used |= set(s)
    for i, j in pattern.sorted_edges():
        if not any(b in sets[j] for a in sets[i] for b in adj[a]):
            return False
    return True


def witness_clauses(witness) -> dict[str, bool]:
    """The six structural properties of a minimal minor witness, each separately."""
    h = witness.pattern
    adj = {v: set() for v in witness.vertices}
    for a, b in witness.edges:
        adj[a].add(b)
        adj[b].add(a)
    sets = [set(s) for s in witness.sets]
    owner = {v: i for i, s in enumerate(sets) for v in s}

    def inner_edges(s):
        return sum(1 for a, b in witness.edges if a in s and b in s)

    def cross(i, j):
        return sum(1 for a, b in witness.edges if {owner.get(a), owner.get(b)} == {i, j} and i != j)

    def tree_leaves(s):
        return [v for v in s if len(s) > 1 and sum(w in s for w in adj[v]) == 1]

    pattern_edges = {tuple(e) for e in h.sorted_edges()}
    pairs = list(itertools.combinations(range(h.n), 2))
    return {
        "trees": all(connected_within(adj, s) and inner_edges(s) == len(s) - 1 for s in sets),
        "one_cross_edge_per_pattern_edge": all(cross(i, j) == 1 for i, j in pairs if (i, j) in pattern_edges),
        "no_cross_edge_elsewhere": all(cross(i, j) == 0 for i, j in pairs if (i, j) not in pattern_edges),
        "leaves_attach_outside": all(
            any(owner.get(w) != owner[v] for w in adj[v]) for s in sets for v in tree_leaves(s)
        ),
        "leaf_count_at_most_degree": all(
            len(tree_leaves(s)) <= len(h.neighbors(i)) for i, s in enumerate(sets)
        ),
        "sets_cover_witness": set().union(*sets) == set(witness.vertices),
    }
