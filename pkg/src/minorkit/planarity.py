"""Planarity via forbidden minors, Kuratowski subdivisions, and an embedding oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, GuardError, complete, complete_bipartite, components
from .minors import BranchSets, MinimalWitness, find_minor_model, minimize_minor_witness, verify_model
from .topological import SubdivisionEmbedding, minor_to_subdivision, tree_path, verify_subdivision

K5 = complete(5)
K33 = complete_bipartite(3, 3)


def is_planar(g: Graph) -> bool:
    """Planar iff neither K5 nor K3,3 is a minor."""
    return find_minor_model(g, K5) is None and find_minor_model(g, K33) is None


@dataclass(frozen=True)
class KuratowskiWitness:
    kind: str  # "K5" or "K33"
    embedding: SubdivisionEmbedding

    def __post_init__(self):
        expected = {"K5": K5, "K33": K33}.get(self.kind)
        if expected is None or self.embedding.pattern != expected:
            raise GraphError(f"bad witness kind {self.kind!r} for its pattern")


@dataclass(frozen=True)
class TreeClassification:
    """Shape of branch tree ``V_i`` together with its four cross edges.

    ``kind`` is ``"star"`` (one vertex of degree 4, ``centers = (x_i,)``) or
    ``"double"`` (two vertices of degree 3, ``centers = (y1, y2)``).
    """

    index: int
    leaves: int
    r2: int
    r3: int
    r4: int
    kind: str
    centers: tuple[int, ...]


def classify_branch_trees(witness: MinimalWitness) -> list[TreeClassification]:
    """Classify every extended tree of a minimal K5 witness.

    Each tree is the branch set plus its four outgoing cross edges, so the
    handshake count forces either one degree-4 vertex or two degree-3 ones.
    """
    if witness.pattern != K5:
        raise GraphError("tree classification applies to K5 witnesses")
    out = []
    for i, inside in enumerate(witness.sets):
        deg: dict[int, int] = {}
        for a, b in witness.edges:
            if a in inside or b in inside:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
        tally = {d: sorted(v for v, dv in deg.items() if dv == d) for d in range(1, 5)}
        if max(deg.values()) > 4 or len(deg) - 1 != sum(
            1 for a, b in witness.edges if a in inside or b in inside
        ):
            raise GraphError(f"branch set {i} does not extend to a tree with max degree 4")
        r3, r4 = len(tally[3]), len(tally[4])
        if r4 == 1 and r3 == 0:
            kind, centers = "star", tuple(tally[4])
        elif r4 == 0 and r3 == 2:
            kind, centers = "double", tuple(tally[3])
        else:
            raise GraphError(f"branch tree {i} has r3={r3}, r4={r4}")
        out.append(TreeClassification(i, len(tally[1]), len(tally[2]), r3, r4, kind, centers))
    return out


def _tree_path(witness: MinimalWitness, i: int, a: int, b: int) -> list[int]:
    return tree_path(witness.adjacency, witness.sets[i], a, b)


def _k5_subdivision(witness: MinimalWitness, trees: list[TreeClassification]) -> SubdivisionEmbedding:
    branch = tuple(t.centers[0] for t in trees)
    paths = {}
    for i, j in K5.sorted_edges():
        (wi, wj), = witness.cross_edges(i, j)
        paths[(i, j)] = tuple(
            _tree_path(witness, i, branch[i], wi) + _tree_path(witness, j, wj, branch[j])
        )
    return SubdivisionEmbedding(witness.host, K5, branch, paths)


def _k33_model_from_double(witness: MinimalWitness, t: TreeClassification) -> BranchSets:
    """Split ``V_i`` between its two degree-3 vertices and find the K3,3 in the six parts."""
    i = t.index
    y1, y2 = t.centers
    route = _tree_path(witness, i, y1, y2)
    # cut the tree edge leaving y1 along the route
    inside = witness.sets[i]
    adj = witness.adjacency
    first = {y1}
    stack = [y1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in inside and w not in first and not (v == y1 and w == route[1]):
                first.add(w)
                stack.append(w)
    parts = [frozenset(first), frozenset(inside - first)]
    parts += [s for j, s in enumerate(witness.sets) if j != i]
    g = witness.host

    def touching(a: frozenset[int], b: frozenset[int]) -> bool:
        return any(w in b for v in a for w in g.neighbors(v))

    for side in combinations(range(6), 3):
        if 0 not in side:
            continue
        other = [k for k in range(6) if k not in side]
        if all(touching(parts[a], parts[b]) for a in side for b in other):
            sets = tuple(parts[k] for k in list(side) + other)
            model = BranchSets(g, K33, sets)
            if verify_model(model):
                return model
    raise GraphError("no K3,3 bipartition among the contracted parts")


def kuratowski_from_k5_minor(g: Graph) -> KuratowskiWitness | None:
    """Subdivision of K5 or K3,3 built from a minimal K5 witness.

    If every extended branch tree is a subdivided star the centres span a K5
    subdivision. Otherwise a double-branch tree splits into a K3,3 minor,
    which becomes a subdivision through the degree-3 construction.
    """
    witness = minimize_minor_witness(g, K5)
    if witness is None:
        return None
    trees = classify_branch_trees(witness)
    double = [t for t in trees if t.kind == "double"]
    if not double:
        return KuratowskiWitness("K5", _k5_subdivision(witness, trees))
    model = _k33_model_from_double(witness, double[0])
    return KuratowskiWitness("K33", minor_to_subdivision(g, K33, model))


def kuratowski_witness(g: Graph) -> KuratowskiWitness | None:
    """``None`` for planar graphs, otherwise a verified Kuratowski subdivision.

    K3,3 is tried first through its minor; a K5 minor is only consulted when
    no K3,3 minor exists.
    """
    model = find_minor_model(g, K33)
    if model is not None:
        out = KuratowskiWitness("K33", minor_to_subdivision(g, K33, model))
    else:
        out = kuratowski_from_k5_minor(g)
        if out is None:
            return None
    if not verify_subdivision(out.embedding):
        raise GraphError("constructed Kuratowski subdivision does not verify")
    return out


# ---------------------------------------------------------------- embedding oracle

ORACLE_MAX_N = 8
ORACLE_MAX_M = 16

Rotation = dict[int, list[int]]


def trace_faces(rotation: Rotation) -> list[list[tuple[int, int]]]:
    """Face boundaries as dart cycles.

    After dart ``(u, v)`` comes ``(v, w)`` where ``w`` follows ``u`` in the
    cyclic order at ``v``.
    """
    where = {(v, u): k for v, order in rotation.items() for k, u in enumerate(order)}
    unused = sorted((u, v) for u, order in rotation.items() for v in order)
    seen = set()
    faces = []
    for dart in unused:
        if dart in seen:
            continue
        face = []
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            u, v = dart
            order = rotation[v]
            dart = (v, order[(where[(v, u)] + 1) % len(order)])
        faces.append(face)
    return faces


def _blocks(g: Graph, vertices: frozenset[int]) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks of ``g[vertices]``."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out: list[list[tuple[int, int]]] = []
    counter = [0]

    def visit(v: int, parent: int | None) -> None:
        index[v] = low[v] = counter[0]
        counter[0] += 1
        for w in sorted(g.neighbors(v)):
            if w == parent:
                continue
            if w not in index:
                stack.append((v, w))
                visit(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (v, w):
                            break
                    out.append(block)
            elif index[w] < index[v]:
                stack.append((v, w))
                low[v] = min(low[v], index[w])

    visit(min(vertices), None)
    return out


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    stack = [start]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in sorted(adj[v], reverse=True):
            if w not in parent:
                parent[w] = v
                stack.append(w)
    # any non-tree edge closes a cycle
    for v in order:
        for w in sorted(adj[v]):
            if parent[v] != w and parent.get(w) != v:
                a, b = v, w
                up_a, up_b = [a], [b]
                while up_a[-1] is not None:
                    up_a.append(parent[up_a[-1]])
                while up_b[-1] is not None:
                    up_b.append(parent[up_b[-1]])
                anc = set(up_a)
                meet = next(x for x in up_b if x in anc)
                # a .. meet, then back down to b; the edge ba closes it
                left = up_a[: up_a.index(meet) + 1]
                right = up_b[: up_b.index(meet)]
                return left + right[::-1]
    raise GraphError("block has no cycle")


def _next_ear(adj, embedded: set[int], todo: set[tuple[int, int]]) -> list[int]:
    for a, b in sorted(todo):
        if a in embedded and b in embedded:
            return [a, b]
    for a, b in sorted(todo):
        for u, w in ((a, b), (b, a)):
            if u not in embedded:
                continue
            # path from u through w over fresh vertices back to another embedded vertex
            parent = {w: u}
            queue = [w]
            while queue:
                v = queue.pop(0)
                for x in sorted(adj[v]):
                    if x in embedded and x != u:
                        walk = [x, v]
                        while walk[-1] != u:
                            walk.append(parent[walk[-1]])
                        return walk[::-1]
                    if x not in embedded and x not in parent:
                        parent[x] = v
                        queue.append(x)
    raise GraphError("no ear found; block is not 2-connected")


def _embed_block(edges: list[tuple[int, int]]) -> Rotation | None:
    """Search rotation systems of a 2-connected block ear by ear, keeping only spherical ones."""
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if len(edges) == 1:
        (a, b), = edges
        return {a: [b], b: [a]}
    ring = _find_cycle(adj)
    rotation = {v: [ring[k - 1], ring[(k + 1) % len(ring)]] for k, v in enumerate(ring)}
    todo = {(min(a, b), max(a, b)) for a, b in edges}
    for k, v in enumerate(ring):
        w = ring[(k + 1) % len(ring)]
        todo.discard((min(v, w), max(v, w)))

    def extend(rotation: Rotation, embedded: set[int], todo: set, faces: int) -> Rotation | None:
        if not todo:
            return rotation
        ear = _next_ear(adj, embedded, todo)
        u, v = ear[0], ear[-1]
        inner = ear[1:-1]
        rest = set(todo)
        for a, b in zip(ear, ear[1:]):
            rest.discard((min(a, b), max(a, b)))
        for i in range(len(rotation[u])):
            for j in range(len(rotation[v])):
                trial = {x: list(order) for x, order in rotation.items()}
                trial[u].insert(i + 1, ear[1])
                trial[v].insert(j + 1, ear[-2])
                for k, x in enumerate(inner):
                    trial[x] = [ear[k], ear[k + 2]]
                count = len(trace_faces(trial))
                # an ear adds one more edge than vertices; only a face split keeps the sphere
                if count != faces + 1:
                    continue
                found = extend(trial, embedded | set(inner), rest, count)
                if found is not None:
                    return found
        return None

    return extend(rotation, set(ring), todo, 2)


def planar_rotation_system(g: Graph) -> Rotation | None:
    """A rotation system of Euler genus zero, or ``None`` if none exists."""
    if g.n > ORACLE_MAX_N or g.m > ORACLE_MAX_M:
        raise GuardError(
            f"planarity_oracle is limited to n <= {ORACLE_MAX_N}, m <= {ORACLE_MAX_M}"
        )
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return None
    rotation: Rotation = {v: [] for v in g.vertices()}
    for comp in components(g):
        if len(comp) == 1:
            continue
        for block in _blocks(g, comp):
            found = _embed_block(block)
            if found is None:
                return None
            # blocks meeting at a cut vertex are placed one after another around it
            for v, order in found.items():
                rotation[v].extend(order)
    return rotation


def euler_check(g: Graph, rotation: Rotation) -> bool:
    """``v - e + f == 1 + c`` with faces traced per component."""
    comps = components(g)
    faces = 0
    for comp in comps:
        sub = {v: rotation[v] for v in comp}
        faces += 1 if len(comp) == 1 else len(trace_faces(sub))
    faces -= len(comps) - 1
    return g.n - g.m + faces == 1 + len(comps)


def planarity_oracle(g: Graph) -> bool:
    """Decide planarity by searching for a genus-zero rotation system."""
    rotation = planar_rotation_system(g)
    if rotation is None:
        return False
    if not euler_check(g, rotation):
        raise AssertionError("rotation search returned a non-spherical system")
    return True
