"""Compile a formula into a perfect-matching-cut instance on a Barnette graph.

Pipeline: ``build_h`` wires variable gadgets to clause gadgets (one bundle of
two parallel connector edges per occurrence), ``layout`` routes the bundles
through the channel between the two gadget columns as a wiring diagram whose
adjacent swaps are exactly the bundle crossings, and ``planarize`` splices a
crossing gadget into each swap and assembles the final graph together with a
rotation system stitched from the gadget-local embeddings.  The rotation
system is certified by the Euler formula before an artifact is returned.

Slot orders make same-variable and same-clause bundle pairs crossing-free:
exits run bottom-to-top through variables in descending index (clause index
ascending inside a gadget), entries bottom-to-top through clauses in
ascending index (variable index descending inside a gadget, which is the
clause figure's own anchor stacking).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .formula import NaeFormula, incidence_graph, variable_cutvertices
from .gadgets import (
    Gadget,
    build_clause_gadget,
    build_crossing_gadget,
    build_variable_gadget,
    clause_type_sets,
    crossing_type_sets,
    enumerate_local_pmcs,
)
from .graphs import (
    STUB,
    EdgeSet,
    Graph,
    PlaneEmbedding,
    is_cubic,
    is_planar_embedding,
)

VARIABLE_SIZE = 36
CLAUSE_SIZE = 112
CROSSING_SIZE = 16


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class Bundle:
    """One occurrence (variable in clause): two parallel wires, t above b."""

    var: int
    clause: int
    exit_slot: int
    entry_slot: int


@dataclass(frozen=True)
class Drawing:
    """Gadget placements plus the ordered list of bundle crossings."""

    bundles: tuple[Bundle, ...]
    events: tuple[tuple[int, int], ...]  # (lower bundle idx, upper bundle idx)
    var_order: tuple[int, ...]           # bottom to top
    clause_order: tuple[int, ...]        # bottom to top

    @property
    def crossing_quadruples(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        bs = self.bundles
        return tuple(((bs[a].var, bs[a].clause), (bs[b].var, bs[b].clause))
                     for a, b in self.events)


@dataclass(frozen=True)
class CrossingRecord:
    index: int
    lower: tuple[int, int]  # bundle passing left-to-right through u1,u2 -> v1,v2
    upper: tuple[int, int]  # bundle descending through u1',u2' -> v1',v2'
    base: int
    p1_edges: EdgeSet
    p2_edges: EdgeSet
    squares: dict


@dataclass(frozen=True)
class HBuild:
    formula: NaeFormula
    graph: Graph
    vertex_info: tuple[tuple[str, int, str], ...]
    connectors: tuple[tuple[int, int, int], ...]
    anchors: dict


@dataclass(frozen=True)
class ReductionArtifact:
    formula: NaeFormula
    graph: Graph
    embedding: PlaneEmbedding
    q: int
    vertex_info: tuple[tuple[str, int, str], ...]
    connectors: tuple[tuple[int, int, int], ...]
    anchors: dict
    s2: dict
    variable_red: dict
    clause_restrictions: dict
    clause_names: dict
    crossings: tuple[CrossingRecord, ...]
    wire_routes: dict
    drawing: Drawing


@lru_cache(maxsize=1)
def _templates() -> tuple[Gadget, Gadget, Gadget]:
    return build_variable_gadget(), build_clause_gadget(), build_crossing_gadget()


@lru_cache(maxsize=1)
def _clause_local_types() -> tuple[frozenset, frozenset, frozenset]:
    """The clause census in type order (local edge ids of the template)."""
    cg = _templates()[1]
    ts = clause_type_sets(cg)
    uv = set(cg.marks["U"]) | set(cg.marks["V"])
    uv_edges = {e for e, (a, b) in enumerate(cg.graph.edges) if a in uv and b in uv}
    by_type: dict[int, frozenset] = {}
    for c in enumerate_local_pmcs(cg):
        trace = frozenset(c) & frozenset(uv_edges)
        for i in range(3):
            if trace == ts.l_sets[i] | ts.r_sets[i]:
                by_type[i] = c
    if sorted(by_type) != [0, 1, 2]:
        raise ReductionError("clause census does not split into the three types")
    return by_type[0], by_type[1], by_type[2]


def _validate(f: NaeFormula) -> None:
    f.validate_e4()
    if not incidence_graph(f).is_connected():
        raise ReductionError("incidence graph must be connected")
    cuts = variable_cutvertices(f)
    if cuts:
        raise ReductionError(f"variable cutvertices present: {cuts}; split first")


def _occurrence_slots(f: NaeFormula) -> dict[tuple[int, int], tuple[int, int]]:
    """(var, clause) -> (variable-gadget slot 1..4, clause-gadget slot 0..2)."""
    out = {}
    for i in range(1, f.n + 1):
        occ = f.occurrences(i)
        if len(occ) != 4:
            raise ReductionError(f"variable {i} occurs in {len(occ)} clauses")
        for r, j in enumerate(occ):
            out[(i, j)] = (r + 1, -1)
    for j, clause in enumerate(f.clauses, 1):
        for s, i in enumerate(sorted(clause)):
            r, _ = out[(i, j)]
            out[(i, j)] = (r, s)
    return out


_CLAUSE_PORT_BY_SLOT = [("t'a", "b'a"), ("t'b", "b'b"), ("t'c", "b'c")]


def build_h(f: NaeFormula) -> HBuild:
    """The cubic intermediate graph: gadgets plus direct connector bundles."""
    _validate(f)
    vg, cg, _ = _templates()
    n, m = f.n, f.m
    slots = _occurrence_slots(f)
    vertex_info: list[tuple[str, int, str]] = []
    for i in range(1, n + 1):
        vertex_info += [("variable", i, vg.vertex_name(lv)) for lv in range(VARIABLE_SIZE)]
    for j in range(1, m + 1):
        vertex_info += [("clause", j, cg.vertex_name(lv)) for lv in range(CLAUSE_SIZE)]

    anchors = {}
    for i in range(1, n + 1):
        base = (i - 1) * VARIABLE_SIZE
        for (vv, jj), (r, _) in slots.items():
            if vv != i:
                continue
            anchors[("t", i, jj)] = base + vg.names[f"t{r}"]
            anchors[("b", i, jj)] = base + vg.names[f"b{r}"]
    for j in range(1, m + 1):
        base = n * VARIABLE_SIZE + (j - 1) * CLAUSE_SIZE
        for i in sorted(f.clauses[j - 1]):
            _, s = slots[(i, j)]
            tname, bname = _CLAUSE_PORT_BY_SLOT[s]
            anchors[("t'", i, j)] = base + cg.names[tname]
            anchors[("b'", i, j)] = base + cg.names[bname]

    pairs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        base = (i - 1) * VARIABLE_SIZE
        pairs += [(base + u, base + v) for u, v in vg.graph.edges]
    for j in range(1, m + 1):
        base = n * VARIABLE_SIZE + (j - 1) * CLAUSE_SIZE
        pairs += [(base + u, base + v) for u, v in cg.graph.edges]
    connectors = []
    for (i, j) in sorted(slots):
        for role in ("t", "b"):
            u = anchors[(role, i, j)]
            v = anchors[(role + "'", i, j)]
            pairs.append((u, v))
            connectors.append((min(u, v), max(u, v), i))
    g = Graph(len(vertex_info), sorted((min(a, b), max(a, b)) for a, b in pairs))
    if g.n != VARIABLE_SIZE * n + CLAUSE_SIZE * m or not is_cubic(g):
        raise ReductionError("intermediate graph failed its size or degree audit")
    return HBuild(f, g, tuple(vertex_info), tuple(connectors), anchors)


def wiring_events(tracks: list[int], target: dict | list) -> list[tuple[int, int]]:
    """Bubble the bottom-to-top track order into target order.

    Each swap is one crossing of the two bundles involved, recorded as
    (lower, upper) with the lower bundle moving up; a pair swaps at most once
    and the number of events equals the inversion count.
    """
    tracks = list(tracks)
    events: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for pos in range(len(tracks) - 1):
            lo, hi = tracks[pos], tracks[pos + 1]
            if target[lo] > target[hi]:
                events.append((lo, hi))
                tracks[pos], tracks[pos + 1] = hi, lo
                changed = True
    return events


def layout(hb: HBuild) -> Drawing:
    """Route bundles as a wiring diagram; swaps are the crossing quadruples."""
    f = hb.formula
    occ = sorted((i, j) for i in range(1, f.n + 1) for j in f.occurrences(i))
    exit_order = sorted(occ, key=lambda ij: (-ij[0], ij[1]))
    entry_order = sorted(occ, key=lambda ij: (ij[1], -ij[0]))
    exit_slot = {ij: k for k, ij in enumerate(exit_order)}
    entry_slot = {ij: k for k, ij in enumerate(entry_order)}
    bundles = tuple(Bundle(i, j, exit_slot[(i, j)], entry_slot[(i, j)]) for i, j in occ)
    index = {(b.var, b.clause): k for k, b in enumerate(bundles)}

    events = wiring_events([index[ij] for ij in exit_order],
                           [b.entry_slot for b in bundles])
    seen_pairs = set()
    for a, b in events:
        ba, bb = bundles[a], bundles[b]
        if ba.var == bb.var or ba.clause == bb.clause:
            raise ReductionError("bundles of a shared gadget may not cross")
        key = frozenset((a, b))
        if key in seen_pairs:
            raise ReductionError("a bundle pair crossed twice")
        seen_pairs.add(key)
    return Drawing(
        bundles=bundles,
        events=tuple(events),
        var_order=tuple(dict.fromkeys(i for i, _ in exit_order)),
        clause_order=tuple(dict.fromkeys(j for _, j in entry_order)),
    )


def planarize(hb: HBuild, drawing: Drawing) -> ReductionArtifact:
    """Splice a crossing gadget into each swap and certify the embedding."""
    f = hb.formula
    vg, cg, xg = _templates()
    n, m = f.n, f.m
    q = len(drawing.events)
    cross_base0 = VARIABLE_SIZE * n + CLAUSE_SIZE * m

    vertex_info = list(hb.vertex_info)
    for k in range(q):
        vertex_info += [("crossing", k + 1, xg.vertex_name(lv)) for lv in range(CROSSING_SIZE)]

    # wire routes through the spliced gadgets
    events_of: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(drawing.bundles))}
    for e_idx, (lo, hi) in enumerate(drawing.events):
        events_of[lo].append((e_idx, 0))
        events_of[hi].append((e_idx, 1))
    port_of = {
        (0, "b"): ("u1", "v1"), (0, "t"): ("u2", "v2"),
        (1, "b"): ("u1'", "v1'"), (1, "t"): ("u2'", "v2'"),
    }
    wire_routes: dict[tuple[int, int, str], tuple[int, ...]] = {}
    pairs: list[tuple[int, int]] = []
    connectors: list[tuple[int, int, int]] = []
    for b_idx, bundle in enumerate(drawing.bundles):
        i, j = bundle.var, bundle.clause
        for sub in ("b", "t"):
            route = [hb.anchors[(sub, i, j)]]
            for e_idx, role in events_of[b_idx]:
                base = cross_base0 + e_idx * CROSSING_SIZE
                pin, pout = port_of[(role, sub)]
                route += [base + xg.names[pin], base + xg.names[pout]]
            route.append(hb.anchors[(sub + "'", i, j)])
            wire_routes[(i, j, sub)] = tuple(route)
            for k in range(0, len(route), 2):
                u, v = route[k], route[k + 1]
                pairs.append((min(u, v), max(u, v)))
                connectors.append((min(u, v), max(u, v), i))

    for i in range(1, n + 1):
        base = (i - 1) * VARIABLE_SIZE
        pairs += [(base + u, base + v) for u, v in vg.graph.edges]
    for j in range(1, m + 1):
        base = n * VARIABLE_SIZE + (j - 1) * CLAUSE_SIZE
        pairs += [(base + u, base + v) for u, v in cg.graph.edges]
    for k in range(q):
        base = cross_base0 + k * CROSSING_SIZE
        pairs += [(base + u, base + v) for u, v in xg.graph.edges]

    g = Graph(len(vertex_info), sorted(pairs))
    if not is_cubic(g):
        raise ReductionError("assembled graph is not cubic")
    if g.n != VARIABLE_SIZE * n + CLAUSE_SIZE * m + CROSSING_SIZE * q:
        raise ReductionError("assembled graph failed the size law")

    connector_at: dict[int, int] = {}
    for u, v, _ in connectors:
        e = g.edge_id(u, v)
        connector_at[u] = e
        connector_at[v] = e

    rotations: list[tuple[int, ...]] = [()] * g.n

    def place(template: Gadget, base: int) -> None:
        tg = template.graph
        for lv in range(tg.n):
            gv = base + lv
            rot = []
            for le in template.rotations[lv]:
                if le == STUB:
                    rot.append(connector_at[gv])
                else:
                    lu, lw = tg.edges[le]
                    rot.append(g.edge_id(base + lu, base + lw))
            rotations[gv] = tuple(rot)

    for i in range(1, n + 1):
        place(vg, (i - 1) * VARIABLE_SIZE)
    for j in range(1, m + 1):
        place(cg, n * VARIABLE_SIZE + (j - 1) * CLAUSE_SIZE)
    for k in range(q):
        place(xg, cross_base0 + k * CROSSING_SIZE)
    embedding = PlaneEmbedding(tuple(rotations))
    if not is_planar_embedding(g, embedding):
        raise ReductionError("rotation system failed the Euler certification")

    def edges_to_global(template: Gadget, local: frozenset, base: int) -> frozenset:
        tg = template.graph
        return frozenset(g.edge_id(base + tg.edges[e][0], base + tg.edges[e][1])
                         for e in local)

    s2 = {}
    variable_red = {}
    for i in range(1, n + 1):
        base = (i - 1) * VARIABLE_SIZE
        s2[i] = tuple(base + lv for lv in vg.marks["S2"])
        variable_red[i] = edges_to_global(vg, vg.red_edges, base)
    t1, t2, t3 = _clause_local_types()
    clause_restrictions = {}
    clause_names = {}
    for j in range(1, m + 1):
        base = n * VARIABLE_SIZE + (j - 1) * CLAUSE_SIZE
        clause_restrictions[j] = tuple(edges_to_global(cg, t, base) for t in (t1, t2, t3))
        clause_names[j] = {name: base + lv for name, lv in cg.names.items()}
    p1_local, p2_local = crossing_type_sets(xg)
    crossings = []
    for k, (lo, hi) in enumerate(drawing.events):
        base = cross_base0 + k * CROSSING_SIZE
        bl, bh = drawing.bundles[lo], drawing.bundles[hi]
        crossings.append(CrossingRecord(
            index=k + 1,
            lower=(bl.var, bl.clause),
            upper=(bh.var, bh.clause),
            base=base,
            p1_edges=edges_to_global(xg, p1_local, base),
            p2_edges=edges_to_global(xg, p2_local, base),
            squares={sq: tuple(base + lv for lv in xg.marks[sq])
                     for sq in ("BL", "BR", "TL", "TR")},
        ))

    anchors = dict(hb.anchors)
    return ReductionArtifact(
        formula=f,
        graph=g,
        embedding=embedding,
        q=q,
        vertex_info=tuple(vertex_info),
        connectors=tuple(sorted(connectors)),
        anchors=anchors,
        s2=s2,
        variable_red=variable_red,
        clause_restrictions=clause_restrictions,
        clause_names=clause_names,
        crossings=tuple(crossings),
        wire_routes=wire_routes,
        drawing=drawing,
    )


def reduce_formula(f: NaeFormula) -> ReductionArtifact:
    """Full pipeline; deterministic for a fixed formula."""
    hb = build_h(f)
    return planarize(hb, layout(hb))


# --- provenance file ------------------------------------------------------------

def serialize_provenance(art: ReductionArtifact) -> str:
    lines = []
    for vid, (kind, idx, name) in enumerate(art.vertex_info):
        lines.append(f"vertex {vid} {kind} {idx} {name}")
    for u, v, i in art.connectors:
        lines.append(f"connector {u} {v} var {i}")
    for rec in art.crossings:
        lines.append(
            f"crossing {rec.index} bundles {rec.lower[0]},{rec.lower[1]} "
            f"{rec.upper[0]},{rec.upper[1]}"
        )
    for i in sorted(art.s2):
        lines.append(f"s2 {i} " + " ".join(map(str, art.s2[i])))
    return "\n".join(lines) + "\n"
