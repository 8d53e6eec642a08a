"""Independent oracles used by the tests.

These deliberately avoid the implementation paths they check: cutset
detection is replayed against explicit cycle enumeration, planar embedded
graphs come from Delaunay triangulations with angle-sorted rotations, and
vertex connectivity is answered by networkx's flow-based routine.
"""

from __future__ import annotations

import math
import random

import networkx as nx

from pmcut.graphs import Graph, PlaneEmbedding


def all_simple_cycles(g: Graph) -> list[list[int]]:
    """Every simple cycle as an edge-id list (each cycle once)."""
    cycles: list[list[int]] = []
    for s in range(g.n):
        stack = [(s, [s], [])]
        while stack:
            v, path_v, path_e = stack.pop()
            for e in g.inc[v]:
                w = g.other_end(e, v)
                if w == s and len(path_v) >= 3 and path_v[1] < v:
                    cycles.append(path_e + [e])
                elif w > s and w not in path_v:
                    stack.append((w, path_v + [w], path_e + [e]))
    return cycles


def cutset_by_cycle_enumeration(g: Graph, m) -> bool:
    mset = set(m)
    if not mset:
        return False
    return all(sum(1 for e in cyc if e in mset) % 2 == 0 for cyc in all_simple_cycles(g))


def random_connected_graph(n: int, extra: int, rng: random.Random) -> Graph:
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    attempts = 0
    while len(edges) < n - 1 + extra and attempts < 10 * extra + 20:
        attempts += 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def random_planar_embedded(n_points: int, rng: random.Random,
                           keep: float = 0.75) -> tuple[Graph, PlaneEmbedding]:
    """Random connected plane graph: thinned Delaunay triangulation with
    rotations read off the point coordinates."""
    import numpy as np
    from scipy.spatial import Delaunay

    while True:
        pts = [(rng.random(), rng.random()) for _ in range(n_points)]
        try:
            tri = Delaunay(np.array(pts))
        except Exception:
            continue
        edges = set()
        for simplex in tri.simplices:
            for a in range(3):
                u, v = int(simplex[a]), int(simplex[(a + 1) % 3])
                edges.add((min(u, v), max(u, v)))
        edges = sorted(edges)
        order = list(range(len(edges)))
        rng.shuffle(order)
        kept = set(edges)
        for k in order:
            if rng.random() > keep and len(kept) > n_points - 1:
                cand = kept - {edges[k]}
                if Graph(n_points, sorted(cand)).is_connected():
                    kept = cand
        g = Graph(n_points, sorted(kept))
        rotations = []
        for v in range(g.n):
            incident = list(g.inc[v])
            incident.sort(key=lambda e: -math.atan2(
                pts[g.other_end(e, v)][1] - pts[v][1],
                pts[g.other_end(e, v)][0] - pts[v][0]))
            rotations.append(tuple(incident))
        return g, PlaneEmbedding(tuple(rotations))


def nx_three_connected(g: Graph) -> bool:
    if g.n < 4:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    if not nx.is_connected(h):
        return False
    return nx.node_connectivity(h) >= 3


def planar_rotation_from_coords(g: Graph, coords) -> PlaneEmbedding:
    rotations = []
    for v in range(g.n):
        incident = list(g.inc[v])
        incident.sort(key=lambda e: -math.atan2(
            coords[g.other_end(e, v)][1] - coords[v][1],
            coords[g.other_end(e, v)][0] - coords[v][0]))
        rotations.append(tuple(incident))
    return PlaneEmbedding(tuple(rotations))
