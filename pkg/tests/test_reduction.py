import random

import pytest

from pmcut.formula import canonical_n3_formula, random_e4_formula
from pmcut.gadgets import build_crossing_gadget
from pmcut.graphs import (
    is_3_connected,
    is_bipartite,
    is_cubic,
    is_planar_embedding,
    parse_graph,
    serialize_graph,
)
from pmcut.reduction import (
    ReductionError,
    build_h,
    layout,
    planarize,
    reduce_formula,
    serialize_provenance,
    wiring_events,
)


def test_h_size_and_degree(canonical_artifact):
    f = canonical_n3_formula()
    hb = build_h(f)
    assert hb.graph.n == 36 * 3 + 112 * 4 == 556
    assert is_cubic(hb.graph)


def test_h_bundles_have_two_edges():
    hb = build_h(canonical_n3_formula())
    by_pair = {}
    for u, v, var in hb.connectors:
        ku = hb.vertex_info[u][1]
        kv = hb.vertex_info[v][1]
        by_pair.setdefault((ku, kv, var), []).append((u, v))
    assert all(len(es) == 2 for es in by_pair.values())
    assert len(hb.connectors) == 2 * 12


def test_h_rejects_bad_formulas():
    from pmcut.formula import NaeFormula

    with pytest.raises(Exception):
        build_h(NaeFormula(3, ((1, 2, 3),) * 3))  # not E4
    block1 = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (3, 4, 5)]
    block2 = [(6, 7, 8), (6, 7, 9), (6, 8, 9), (7, 8, 9), (6, 7, 5), (8, 9, 5)]
    with pytest.raises(ReductionError, match="cutvertices"):
        build_h(NaeFormula(9, tuple(block1 + block2)))
    with pytest.raises(ReductionError, match="connected"):
        build_h(NaeFormula(6, ((1, 2, 3),) * 4 + ((4, 5, 6),) * 4))


def test_wiring_events_trivial_cases():
    assert wiring_events([0], [0]) == []                # single bundle: 0 quadruples
    assert wiring_events([0, 1], [0, 1]) == []          # aligned pair
    assert wiring_events([1, 0], [0, 1]) == [(1, 0)]    # one inversion, one quadruple
    ev = wiring_events([2, 1, 0], [0, 1, 2])
    assert len(ev) == 3                                 # full reversal: all pairs cross


def test_wiring_events_count_inversions():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randrange(2, 12)
        target = list(range(n))
        rng.shuffle(target)
        ev = wiring_events(list(range(n)), target)
        inv = sum(1 for i in range(n) for k in range(i + 1, n)
                  if target[i] > target[k])
        assert len(ev) == inv
        assert len({frozenset(e) for e in ev}) == len(ev)


def test_layout_invariants(canonical_artifact):
    d = canonical_artifact.drawing
    assert len(d.bundles) == 12
    assert len(d.events) == 18  # router inversion count for the canonical instance
    pairs = set()
    for lo, hi in d.events:
        a, b = d.bundles[lo], d.bundles[hi]
        assert a.var != b.var and a.clause != b.clause
        pairs.add(frozenset((lo, hi)))
    assert len(pairs) == len(d.events)
    assert len(d.crossing_quadruples) == len(d.events)


def test_same_gadget_bundles_never_invert():
    rng = random.Random(77)
    for n in (6, 9):
        f = random_e4_formula(n, rng)
        d = layout(build_h(f))
        bundles = d.bundles
        for x in range(len(bundles)):
            for y in range(x + 1, len(bundles)):
                a, b = bundles[x], bundles[y]
                if a.var == b.var or a.clause == b.clause:
                    assert (a.exit_slot < b.exit_slot) == (a.entry_slot < b.entry_slot)


def test_size_law_and_edge_delta(canonical_artifact):
    art = canonical_artifact
    f = art.formula
    hb = build_h(f)
    assert art.graph.n == 36 * f.n + 112 * f.m + 16 * art.q
    # each splice adds 16 vertices and 24 edges (8 half-wires + 20 internal - 4 wires)
    assert art.graph.m == hb.graph.m + 24 * art.q
    assert 2 * art.graph.m == 3 * art.graph.n


def test_barnette_certification(canonical_artifact):
    g = canonical_artifact.graph
    assert is_cubic(g)
    assert is_bipartite(g) is not None
    assert is_planar_embedding(g, canonical_artifact.embedding)
    assert is_3_connected(g)


def test_reduce_is_deterministic():
    f = canonical_n3_formula()
    a1 = reduce_formula(f)
    a2 = reduce_formula(f)
    assert serialize_graph(a1.graph, a1.embedding) == serialize_graph(a2.graph, a2.embedding)
    assert serialize_provenance(a1) == serialize_provenance(a2)


def test_every_vertex_in_exactly_one_gadget(canonical_artifact):
    art = canonical_artifact
    assert len(art.vertex_info) == art.graph.n
    counts = {}
    for kind, idx, _ in art.vertex_info:
        counts[(kind, idx)] = counts.get((kind, idx), 0) + 1
    for (kind, _), c in counts.items():
        assert c == {"variable": 36, "clause": 112, "crossing": 16}[kind]


def test_connector_edges_have_labels(canonical_artifact):
    art = canonical_artifact
    gadget_of = [info[:2] for info in art.vertex_info]
    intra = sum(1 for u, v in art.graph.edges if gadget_of[u] == gadget_of[v])
    assert intra + len(art.connectors) == art.graph.m
    for u, v, var in art.connectors:
        assert gadget_of[u] != gadget_of[v]
        assert 1 <= var <= art.formula.n


def test_wire_routes_traverse_even_crossover_squares(canonical_artifact):
    """Each wire passes an even number of crossover squares, two per spliced
    gadget, along a two-edge subpath of each."""
    art = canonical_artifact
    g = art.graph
    square_of = {}
    for rec in art.crossings:
        for sq, verts in rec.squares.items():
            for v in verts:
                square_of[v] = (rec.index, sq)
    for (i, j, sub), route in art.wire_routes.items():
        assert route[0] == art.anchors[(sub, i, j)]
        assert route[-1] == art.anchors[(sub + "'", i, j)]
        squares_on_wire = 0
        for k in range(1, len(route) - 1, 2):
            pin, pout = route[k], route[k + 1]
            path = _shortest_path(g, pin, pout)
            touched = {square_of[v] for v in path if v in square_of}
            assert len(touched) == 2
            squares_on_wire += 2
            for _, sq in touched:
                members = [v for v in path if v in square_of and square_of[v][1] == sq]
                assert len(members) == 3  # a two-edge subpath of the square
        assert squares_on_wire % 2 == 0


def _shortest_path(g, a, b):
    prev = {a: a}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def test_gadget_adjacency_multigraph_bridgeless(canonical_artifact):
    art = canonical_artifact
    gadget_ids = sorted({info[:2] for info in art.vertex_info})
    gid = {k: i for i, k in enumerate(gadget_ids)}
    multi = {}
    for u, v, _ in art.connectors:
        a = gid[art.vertex_info[u][:2]]
        b = gid[art.vertex_info[v][:2]]
        key = (min(a, b), max(a, b))
        multi[key] = multi.get(key, 0) + 1
    # a bridge would be an adjacency carried by a single connector edge that
    # disconnects; all adjacencies carry the two parallel wires of a bundle
    assert all(c >= 2 for c in multi.values())


def test_crossing_records_match_splice_orientation(canonical_artifact):
    art = canonical_artifact
    xg = build_crossing_gadget()
    for rec in art.crossings:
        base = rec.base
        for wire, route_key in (("u1", "b"), ("u2", "t")):
            port = base + xg.names[wire]
            i, j = rec.lower
            assert port in art.wire_routes[(i, j, route_key)]
        for wire, route_key in (("u1'", "b"), ("u2'", "t")):
            port = base + xg.names[wire]
            i, j = rec.upper
            assert port in art.wire_routes[(i, j, route_key)]


def test_random_instances_certify(random_instances):
    for f in random_instances[:4]:
        art = reduce_formula(f)
        assert art.graph.n == 36 * f.n + 112 * f.m + 16 * art.q
        assert is_cubic(art.graph)
        assert is_planar_embedding(art.graph, art.embedding)


def test_provenance_serialization(canonical_artifact):
    text = serialize_provenance(canonical_artifact)
    lines = text.splitlines()
    assert lines[0].startswith("vertex 0 variable 1 ")
    assert any(ln.startswith("connector ") and " var " in ln for ln in lines)
    assert any(ln.startswith("crossing 1 bundles ") for ln in lines)
    s2_lines = [ln for ln in lines if ln.startswith("s2 ")]
    assert len(s2_lines) == canonical_artifact.formula.n
    assert all(len(ln.split()) == 8 for ln in s2_lines)


def test_graph_file_roundtrip_preserves_embedding(canonical_artifact, tmp_path):
    art = canonical_artifact
    text = serialize_graph(art.graph, art.embedding)
    g2, emb2 = parse_graph(text)
    assert g2.n == art.graph.n
    assert is_planar_embedding(g2, emb2)
