"""Undirected graphs with indexed edges, rotation-system embeddings, and cut machinery.

Everything here is immutable after construction and safe to share between
threads.  Edge indices are stable: edge ``i`` is ``graph.edges[i]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

EdgeSet = frozenset  # of edge indices

#: Sentinel used in gadget-local rotations for a connector edge that does not
#: exist yet.  Never appears in a finished PlaneEmbedding.
STUB = -1

# Guards keeping accidental huge inputs out of the exact algorithms.  The
# 3-connectivity ceiling covers the largest instances the acceptance set can
# produce (a random 9-variable reduction can pass 11k vertices).
MAX_3CONN_VERTICES = 20000
_PAIR_REMOVAL_LIMIT = 64


class Graph:
    """Simple undirected graph; vertices 0..n-1, edges indexed in list order."""

    __slots__ = ("n", "edges", "adj", "inc", "_eid")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        norm: list[tuple[int, int]] = []
        eid: dict[tuple[int, int], int] = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u > v:
                u, v = v, u
            if (u, v) in eid:
                raise ValueError(f"parallel edge ({u},{v})")
            eid[(u, v)] = len(norm)
            norm.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._eid = eid
        for i, (u, v) in enumerate(self.edges):
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        for v in range(n):
            order = sorted(range(len(adj[v])), key=lambda k: adj[v][k])
            adj[v] = [adj[v][k] for k in order]
            inc[v] = [inc[v][k] for k in order]
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self.inc: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._eid[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._eid

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cut:
    """Vertex bipartition; sides[v] is 0 (side A) or 1 (side B)."""

    sides: tuple[int, ...]

    def same_side(self, u: int, v: int) -> bool:
        return self.sides[u] == self.sides[v]

    def side_a(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.sides) if s == 0)

    def side_b(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.sides) if s == 1)

    def cutset(self, g: Graph) -> EdgeSet:
        return frozenset(
            i for i, (u, v) in enumerate(g.edges) if self.sides[u] != self.sides[v]
        )


@dataclass(frozen=True)
class PlaneEmbedding:
    """Rotation system: rotations[v] is the clockwise cyclic order of incident edges."""

    rotations: tuple[tuple[int, ...], ...]

    def check(self, g: Graph) -> None:
        """Raise ValueError unless each rotation permutes that vertex's edges."""
        if len(self.rotations) != g.n:
            raise ValueError("rotation count differs from vertex count")
        for v in range(g.n):
            if sorted(self.rotations[v]) != sorted(g.inc[v]):
                raise ValueError(f"rotation at vertex {v} is not a permutation "
                                 f"of its incident edges")


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adj)


def is_bipartite(g: Graph) -> Optional[Cut]:
    """2-coloring of g as a Cut, or None if an odd cycle exists."""
    sides = [-1] * g.n
    for s in range(g.n):
        if sides[s] != -1:
            continue
        sides[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if sides[w] == -1:
                    sides[w] = sides[v] ^ 1
                    stack.append(w)
                elif sides[w] == sides[v]:
                    return None
    return Cut(tuple(sides))


def faces_from_embedding(g: Graph, emb: PlaneEmbedding) -> list[list[int]]:
    """Face walks of the rotation system, each as a list of edge indices.

    Every directed edge is used by exactly one walk, so the walk lengths sum
    to 2*E.
    """
    emb.check(g)
    pos: list[dict[int, int]] = [
        {e: k for k, e in enumerate(rot)} for rot in emb.rotations
    ]
    seen: set[tuple[int, int]] = set()  # darts as (vertex, outgoing edge)
    faces: list[list[int]] = []
    for v0 in range(g.n):
        for e0 in emb.rotations[v0]:
            if (v0, e0) in seen:
                continue
            walk: list[int] = []
            v, e = v0, e0
            while (v, e) not in seen:
                seen.add((v, e))
                walk.append(e)
                w = g.other_end(e, v)
                rot = emb.rotations[w]
                k = pos[w][e]
                v, e = w, rot[(k + 1) % len(rot)]
            faces.append(walk)
    return faces


def is_planar_embedding(g: Graph, emb: PlaneEmbedding) -> bool:
    """Euler check V - E + F = 2. Requires a connected graph."""
    if not g.is_connected():
        raise ValueError("is_planar_embedding requires a connected graph")
    f = len(faces_from_embedding(g, emb))
    return g.n - g.m + f == 2


def is_perfect_matching(g: Graph, m: Iterable[int]) -> bool:
    hits = [0] * g.n
    for e in m:
        u, v = g.edges[e]
        hits[u] += 1
        hits[v] += 1
    return all(h == 1 for h in hits)


def cut_from_edge_set(g: Graph, m: Iterable[int]) -> Optional[Cut]:
    """The cut whose cutset is m, or None if m is not a cutset.

    Parity BFS: crossing an edge of m flips side, any other edge keeps it.
    The empty set is rejected (a cut must be proper).
    """
    if not g.is_connected():
        raise ValueError("cut_from_edge_set requires a connected graph")
    mset = set(m)
    if not mset:
        return None
    sides = [-1] * g.n
    sides[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for e in g.inc[v]:
            w = g.other_end(e, v)
            s = sides[v] ^ (1 if e in mset else 0)
            if sides[w] == -1:
                sides[w] = s
                queue.append(w)
            elif sides[w] != s:
                return None
    return Cut(tuple(sides))


def is_cutset_via_cycle_basis(g: Graph, emb: PlaneEmbedding, m: Iterable[int]) -> bool:
    """Cutset test by facial parity: every face meets m in an even number of edges.

    The bounded faces of a plane graph form a cycle basis, and the unbounded
    face is the sum of the bounded ones, so checking every face walk is
    equivalent.  Edges are counted with multiplicity along the walk.
    """
    mset = set(m)
    if not mset:
        return False
    for walk in faces_from_embedding(g, emb):
        if sum(1 for e in walk if e in mset) % 2:
            return False
    return True


def same_side(g: Graph, cut: Cut, u: int, v: int) -> bool:
    return cut.same_side(u, v)


# --- 3-connectivity -----------------------------------------------------------

def is_3_connected(g: Graph) -> bool:
    """True iff V >= 4 and no pair of vertices disconnects g.

    Small graphs are checked by exhaustive pair removal.  Larger cubic graphs
    use the fact that vertex and edge connectivity coincide in cubic graphs,
    with 3-edge-connectivity decided by the bridge/2-cut label trick.  Larger
    non-cubic graphs fall back to three rounds of unit-capacity max-flow.
    """
    if g.n > MAX_3CONN_VERTICES:
        raise ValueError(f"is_3_connected guard: {g.n} > {MAX_3CONN_VERTICES} vertices")
    if g.n < 4:
        return False
    if not g.is_connected():
        return False
    if min(len(a) for a in g.adj) < 3:
        return False
    if g.n <= _PAIR_REMOVAL_LIMIT:
        return _three_connected_by_pair_removal(g)
    if is_cubic(g):
        return _is_3_edge_connected(g)
    return _three_connected_by_flow(g)


def _connected_without(g: Graph, banned: tuple[int, ...]) -> bool:
    skip = set(banned)
    start = next((v for v in range(g.n) if v not in skip), None)
    if start is None:
        return True
    seen = [False] * g.n
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if not seen[w] and w not in skip:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n - len(skip)


def _three_connected_by_pair_removal(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not _connected_without(g, (u, v)):
                return False
    return True


def _is_3_edge_connected(g: Graph) -> bool:
    """No bridge and no 2-edge-cut, via random back-edge labels.

    Each back edge of a DFS forest gets a random 64-bit label; a tree edge is
    labelled with the XOR of the back edges covering it.  An edge is a bridge
    iff its label is 0, and two edges form a 2-edge-cut iff their labels are
    equal.  The RNG is seeded deterministically.
    """
    rng = random.Random(0x3EC0 ^ (g.n << 16) ^ g.m)
    parent_edge = [-1] * g.n
    order = [-1] * g.n
    acc = [0] * g.n
    label = [0] * g.m
    t = 0
    stack: list[tuple[int, int]] = [(0, -1)]
    visited_order: list[int] = []
    while stack:
        v, pe = stack.pop()
        if order[v] != -1:
            continue
        order[v] = t
        t += 1
        parent_edge[v] = pe
        visited_order.append(v)
        for e in g.inc[v]:
            w = g.other_end(e, v)
            if order[w] == -1:
                stack.append((w, e))
    for e, (u, v) in enumerate(g.edges):
        if parent_edge[u] == e or parent_edge[v] == e:
            continue  # tree edge
        r = rng.getrandbits(64) | 1
        label[e] = r
        acc[u] ^= r
        acc[v] ^= r
    for v in reversed(visited_order):
        pe = parent_edge[v]
        if pe == -1:
            continue
        label[pe] = acc[v]
        p = g.other_end(pe, v)
        acc[p] ^= acc[v]
    if 0 in label:
        return False
    return len(set(label)) == g.m


def _three_connected_by_flow(g: Graph) -> bool:
    """Any 2-cut misses one of three fixed sources; check their flows."""
    for s in (0, 1, 2):
        for t in range(g.n):
            if t == s or g.has_edge(s, t):
                continue
            if _vertex_disjoint_paths(g, s, t, 3) < 3:
                return False
    return True


def _vertex_disjoint_paths(g: Graph, s: int, t: int, need: int) -> int:
    # Unit vertex capacities via node splitting; BFS augmentation.
    n = g.n
    cap: dict[tuple[int, int], int] = {}
    adjf: list[set[int]] = [set() for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adjf[a].add(b)
        adjf[b].add(a)

    for v in range(n):
        add(2 * v, 2 * v + 1, 1 if v not in (s, t) else need)
    for u, v in g.edges:
        add(2 * u + 1, 2 * v, 1)
        add(2 * v + 1, 2 * u, 1)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < need:
        prev = {src: src}
        queue = [src]
        while queue and sink not in prev:
            a = queue.pop(0)
            for b in adjf[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


# --- file formats -------------------------------------------------------------

def serialize_graph(g: Graph, emb: Optional[PlaneEmbedding] = None) -> str:
    """Graph file: header, lex-sorted edge lines, optional embedding block.

    Edge indices in the embedding block refer to the (sorted) file order.
    """
    order = sorted(range(g.m), key=lambda e: g.edges[e])
    remap = {old: new for new, old in enumerate(order)}
    lines = [f"graph {g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    if emb is not None:
        emb.check(g)
        lines.append("embedding")
        for v in range(g.n):
            rot = [remap[e] for e in emb.rotations[v]]
            lines.append(f"rot {v} {len(rot)} " + " ".join(map(str, rot)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[Graph, Optional[PlaneEmbedding]]:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("graph "):
        raise ValueError("graph file must start with 'graph <V> <E>'")
    _, ns, ms = lines[0].split()
    n, m = int(ns), int(ms)
    edges = []
    for ln in lines[1:1 + m]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    if len(edges) != m:
        raise ValueError("graph file truncated")
    g = Graph(n, edges)
    rest = lines[1 + m:]
    if not rest:
        return g, None
    if rest[0] != "embedding":
        raise ValueError(f"unexpected line {rest[0]!r}")
    rotations: list[tuple[int, ...]] = [()] * n
    for ln in rest[1:]:
        parts = ln.split()
        if parts[0] != "rot":
            raise ValueError(f"unexpected line {ln!r}")
        v, d = int(parts[1]), int(parts[2])
        rot = tuple(int(x) for x in parts[3:])
        if len(rot) != d:
            raise ValueError(f"rotation degree mismatch at vertex {v}")
        rotations[v] = rot
    emb = PlaneEmbedding(tuple(rotations))
    emb.check(g)
    return g, emb


def serialize_matching(g: Graph, m: Iterable[int]) -> str:
    pairs = sorted(g.edges[e] for e in m)
    lines = [f"matching {len(pairs)}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def parse_matching(text: str, g: Graph) -> EdgeSet:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("matching "):
        raise ValueError("matching file must start with 'matching <k>'")
    k = int(lines[0].split()[1])
    out = set()
    for ln in lines[1:1 + k]:
        u, v = map(int, ln.split())
        out.add(g.edge_id(u, v))
    if len(out) != k:
        raise ValueError("matching file truncated or duplicated")
    return frozenset(out)


def serialize_cut(cut: Cut) -> str:
    a = cut.side_a()
    lines = [f"cut {len(a)}"] + [str(v) for v in a]
    return "\n".join(lines) + "\n"


def parse_cut(text: str, n: int) -> Cut:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("cut "):
        raise ValueError("cut file must start with 'cut <|A|>'")
    k = int(lines[0].split()[1])
    a = {int(x) for x in lines[1:1 + k]}
    sides = tuple(0 if v in a else 1 for v in range(n))
    return Cut(sides)


# --- helpers used across the package ------------------------------------------

def cube_graph() -> Graph:
    """Q3 with vertices 0..3 on the bottom face and 4..7 above them."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3),
             (4, 5), (5, 6), (6, 7), (4, 7),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return Graph(8, edges)


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_cubic_graph(n: int, rng: random.Random) -> Graph:
    """Random connected simple cubic graph on n vertices (n even) by pairing."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even vertex count >= 4")
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        pairs = [(points[i], points[i + 1]) for i in range(0, len(points), 2)]
        seen = set()
        ok = True
        for u, v in pairs:
            if u == v or (min(u, v), max(u, v)) in seen:
                ok = False
                break
            seen.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, pairs)
        if g.is_connected():
            return g
