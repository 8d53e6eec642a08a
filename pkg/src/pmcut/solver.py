"""Exact perfect-matching-cut search, witness mappings, and lemma oracles.

The complete solver interleaves two closures over a tri-state edge labelling
(undecided / in / out):

* matching closure: a matched vertex excludes its other edges, and a vertex
  with a single non-excluded edge left must use it;
* parity closure: an in-edge makes its endpoints opposite-side, an out-edge
  makes them same-side, tracked by union-find with parity; once two adjacent
  vertices are related, the edge between them is decided.

These two rules subsume the published 4-cycle and 6-cycle propagation facts,
which are kept separately as oracles (`lemma_oracles`) and never hand-coded
into the search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, TYPE_CHECKING

from .graphs import Cut, EdgeSet, Graph, cut_from_edge_set, is_cubic, is_perfect_matching

if TYPE_CHECKING:  # pragma: no cover
    from .reduction import ReductionArtifact

DEFAULT_BUDGET = 2_000_000
MAX_BRUTEFORCE_VERTICES = 24

_UNDEC, _IN, _OUT = 0, 1, 2


class BudgetExhausted(RuntimeError):
    """Search stopped because the node budget ran out: not a 'no' answer."""


class _PmcSearch:
    """Backtracking with unit propagation; branches lowest edge first, In before Out.

    Parity is a union-find with one bit per element.  Each component root
    keeps the list of undecided edges touching it; a union scans the smaller
    component's list so that an edge is decided the moment its endpoints land
    in one component.  Everything is undone through a trail.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.state = bytearray(g.m)
        self.matched = [-1] * g.n
        self.rem = [g.degree(v) for v in range(g.n)]
        self.parent = list(range(g.n))
        self.size = [1] * g.n
        self.par = [0] * g.n
        self.comp_edges: list[list[int]] = [list(g.inc[v]) for v in range(g.n)]
        self.comp_verts: list[list[int]] = [[v] for v in range(g.n)]
        self.trail: list[tuple] = []
        self.nodes = 0

    def _find(self, v: int) -> tuple[int, int]:
        p = 0
        parent, par = self.parent, self.par
        while parent[v] != v:
            p ^= par[v]
            v = parent[v]
        return v, p

    def _union(self, u: int, v: int, parity: int, queue: list) -> bool:
        ru, pu = self._find(u)
        rv, pv = self._find(v)
        if ru == rv:
            return (pu ^ pv) == parity
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
            pu, pv = pv, pu
        big, small = self.comp_edges[ru], self.comp_edges[rv]
        self.trail.append(("u", rv, ru, len(big), len(self.comp_verts[ru])))
        self.parent[rv] = ru
        self.par[rv] = pu ^ pv ^ parity
        self.size[ru] += self.size[rv]
        state, edges, find = self.state, self.g.edges, self._find
        for e in small:
            if not state[e]:
                a, b = edges[e]
                ra, pa = find(a)
                rb, pb = find(b)
                if ra == rb:
                    queue.append((e, _IN if pa ^ pb else _OUT))
                else:
                    big.append(e)
        small_verts = self.comp_verts[rv]
        self.comp_verts[ru].extend(small_verts)
        matched, adj = self.matched, self.g.adj
        for w in small_verts:
            for x in adj[w]:
                if matched[x] == -1:
                    self._related_partners(x, queue)
        return True

    def _related_partners(self, x: int, queue: list) -> None:
        """Exclude edges of x ruled out by known relations between its partners.

        If two available partners are opposite-side, x must match one of them,
        so its remaining edges go out.  If two are same-side, matching either
        would make them opposite, so both those edges go out.
        """
        avail = [e for e in self.g.inc[x] if not self.state[e]]
        if len(avail) < 2:
            return
        other = self.g.other_end
        ends = [(e, *self._find(other(e, x))) for e in avail]
        for i in range(len(ends)):
            ei, ri, pi = ends[i]
            for k in range(i + 1, len(ends)):
                ek, rk, pk = ends[k]
                if ri != rk:
                    continue
                if pi ^ pk:
                    for ej, _, _ in ends:
                        if ej != ei and ej != ek:
                            queue.append((ej, _OUT))
                else:
                    queue.append((ei, _OUT))
                    queue.append((ek, _OUT))

    def _assign(self, e: int, val: int, queue: list) -> bool:
        st = self.state[e]
        if st:
            return st == val
        self.state[e] = val
        self.trail.append(("e", e))
        u, v = self.g.edges[e]
        if val == _IN:
            if self.matched[u] != -1 or self.matched[v] != -1:
                return False
            if not self._union(u, v, 1, queue):
                return False
            for w in (u, v):
                self.matched[w] = e
                self.trail.append(("m", w))
                for e2 in self.g.inc[w]:
                    if e2 != e and not self.state[e2]:
                        queue.append((e2, _OUT))
        else:
            if not self._union(u, v, 0, queue):
                return False
            for w in (u, v):
                self.rem[w] -= 1
                self.trail.append(("r", w))
                if self.matched[w] == -1:
                    if self.rem[w] == 0:
                        return False
                    if self.rem[w] == 1:
                        for e2 in self.g.inc[w]:
                            if self.state[e2] != _OUT:
                                queue.append((e2, _IN))
                                break
                    elif self.rem[w] == 2 and not self._pair_parity(w, queue):
                        return False
        return True

    def _pair_parity(self, w: int, queue: list) -> bool:
        """An unmatched vertex with two available edges puts its two potential
        partners on opposite sides: whichever edge is chosen, the other stays
        out and keeps its far end on w's side."""
        ends = [self.g.other_end(e2, w) for e2 in self.g.inc[w] if not self.state[e2]]
        if len(ends) != 2:
            return True
        return self._union(ends[0], ends[1], 1, queue)

    def _propagate(self, queue: list) -> bool:
        while queue:
            e, val = queue.pop()
            if not self._assign(e, val, queue):
                return False
        return True

    def _undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            tag = self.trail.pop()
            kind = tag[0]
            if kind == "e":
                self.state[tag[1]] = _UNDEC
            elif kind == "m":
                self.matched[tag[1]] = -1
            elif kind == "r":
                self.rem[tag[1]] += 1
            else:
                _, rv, ru, old_len, old_vlen = tag
                self.parent[rv] = rv
                self.size[ru] -= self.size[rv]
                del self.comp_edges[ru][old_len:]
                del self.comp_verts[ru][old_vlen:]

    def run(self, on_solution: Callable[[EdgeSet], bool], budget: Optional[int]) -> None:
        """DFS over the decision tree; on_solution returns True to stop early."""
        g = self.g
        if g.n == 0 or any(d == 0 for d in self.rem):
            return
        queue: list = []
        for v in range(g.n):
            if self.rem[v] == 1:
                queue.append((g.inc[v][0], _IN))
            elif self.rem[v] == 2 and not self._pair_parity(v, queue):
                return
        if not self._propagate(queue):
            return
        stack: list[list[int]] = []  # frames [edge, next value, trail mark]
        scan_from = 0
        advance = True
        while True:
            if advance:
                e = next((i for i in range(scan_from, g.m) if not self.state[i]), None)
                if e is None:
                    if on_solution(frozenset(i for i in range(g.m) if self.state[i] == _IN)):
                        return
                    advance = False
                    continue
                stack.append([e, _IN, len(self.trail)])
            advance = False
            while stack:
                frame = stack[-1]
                if frame[1] > _OUT:
                    self._undo_to(frame[2])
                    stack.pop()
                    continue
                val = frame[1]
                frame[1] += 1
                self._undo_to(frame[2])
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    raise BudgetExhausted(f"node budget {budget} exhausted")
                if self._propagate([(frame[0], val)]):
                    scan_from = frame[0] + 1
                    advance = True
                    break
            if not advance:
                return


def find_pmc(g: Graph, budget: Optional[int] = DEFAULT_BUDGET) -> Optional[EdgeSet]:
    """First perfect matching cut in the canonical search order, or None.

    Raises BudgetExhausted when the node budget runs out, which is a distinct
    outcome from a completed 'no'.
    """
    if not g.is_connected():
        raise ValueError("find_pmc requires a connected graph")
    found: list[EdgeSet] = []

    def take(sol: EdgeSet) -> bool:
        found.append(sol)
        return True

    _PmcSearch(g).run(take, budget)
    if not found:
        return None
    m = found[0]
    assert is_perfect_matching(g, m) and cut_from_edge_set(g, m) is not None
    return m


def enumerate_pmcs(g: Graph, max_nodes: Optional[int] = None) -> list[EdgeSet]:
    """Every perfect matching cut of g (cutset understood per component)."""
    out: list[EdgeSet] = []

    def take(sol: EdgeSet) -> bool:
        out.append(sol)
        return False

    _PmcSearch(g).run(take, max_nodes)
    return out


def find_pmc_bruteforce(g: Graph, max_vertices: int = MAX_BRUTEFORCE_VERTICES) -> Optional[EdgeSet]:
    """Oracle: enumerate perfect matchings by vertex order, test each as a cutset."""
    if g.n > max_vertices:
        raise ValueError(f"brute force guard: {g.n} > {max_vertices} vertices")
    if not g.is_connected():
        raise ValueError("find_pmc_bruteforce requires a connected graph")
    matched = [False] * g.n
    chosen: list[int] = []

    def extend() -> Optional[EdgeSet]:
        v = next((w for w in range(g.n) if not matched[w]), None)
        if v is None:
            m = frozenset(chosen)
            if cut_from_edge_set(g, m) is not None:
                return m
            return None
        matched[v] = True
        for e in g.inc[v]:
            w = g.other_end(e, v)
            if matched[w]:
                continue
            matched[w] = True
            chosen.append(e)
            hit = extend()
            chosen.pop()
            matched[w] = False
            if hit is not None:
                return hit
        matched[v] = False
        return None

    return extend()


# --- witness mappings --------------------------------------------------------------

def assignment_from_pmc(artifact: "ReductionArtifact", m: EdgeSet) -> tuple:
    """Read off each variable's side from its S2 ring under the cut of m."""
    g = artifact.graph
    if not is_perfect_matching(g, m):
        raise ValueError("witness is not a perfect matching")
    cut = cut_from_edge_set(g, m)
    if cut is None:
        raise ValueError("witness is not a cutset")
    bits = []
    for i in range(1, artifact.formula.n + 1):
        ring = artifact.s2[i]
        sides = {cut.sides[v] for v in ring}
        if len(sides) != 1:
            raise ValueError(f"S2 ring of variable {i} is not monochromatic")
        bits.append(sides.pop())
    return tuple(bits)


def pmc_from_assignment(artifact: "ReductionArtifact", a: tuple) -> EdgeSet:
    """Assemble the witness matching from per-gadget restrictions.

    Variable gadgets contribute their forced red sets; a crossing gadget takes
    its side-preserving restriction iff its two variables agree under a; a
    clause gadget takes the type separating its minority variable.
    """
    f = artifact.formula
    if len(a) != f.n:
        raise ValueError("assignment length mismatch")
    chosen: set[int] = set()
    for i in range(1, f.n + 1):
        chosen |= artifact.variable_red[i]
    for rec in artifact.crossings:
        (i1, _), (i2, _) = rec.lower, rec.upper
        chosen |= rec.p1_edges if a[i1 - 1] == a[i2 - 1] else rec.p2_edges
    for j, clause in enumerate(f.clauses, 1):
        va, vb, vc = sorted(clause)
        sides = (a[va - 1], a[vb - 1], a[vc - 1])
        if sides[0] == sides[1] == sides[2]:
            raise ValueError(f"clause {j} is not NAE-satisfied")
        if sides[1] != sides[0] and sides[1] != sides[2]:
            t = 0  # b alone
        elif sides[0] == sides[1]:
            t = 1  # c alone
        else:
            t = 2  # a alone
        chosen |= artifact.clause_restrictions[j][t]
    return frozenset(chosen)


# --- lemma oracles -----------------------------------------------------------------

@dataclass
class LemmaReport:
    """Violations of the structural facts a verified witness must satisfy."""

    four_cycle: list = field(default_factory=list)
    square_propagation: list = field(default_factory=list)
    hex_three_out: list = field(default_factory=list)
    hex_square_pattern: list = field(default_factory=list)
    path_parity: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.four_cycle or self.square_propagation or self.hex_three_out
                    or self.hex_square_pattern or self.path_parity)


def induced_four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """Induced 4-cycles as vertex tuples (a, u, b, w); linear-time on cubic graphs."""
    out = []
    seen = set()
    for a in range(g.n):
        nbrs = g.adj[a]
        for i in range(len(nbrs)):
            for k in range(i + 1, len(nbrs)):
                u, w = nbrs[i], nbrs[k]
                if g.has_edge(u, w):
                    continue
                for b in g.adj[u]:
                    if b != a and b in g.adj[w] and not g.has_edge(a, b):
                        key = frozenset((a, u, b, w))
                        if key not in seen:
                            seen.add(key)
                            out.append((a, u, b, w))
    return out


def six_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All 6-vertex cycles, one orientation each (min vertex first)."""
    out = []
    for s in range(g.n):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            if len(path) == 6:
                if s in g.adj[v] and path[1] < path[-1]:
                    out.append(path)
                continue
            for w in g.adj[v]:
                if w > s and w not in path:
                    stack.append((w, path + (w,)))
    return out


def _cycle_edges(g: Graph, cyc: tuple[int, ...]) -> list[int]:
    return [g.edge_id(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def _outgoing(g: Graph, verts: Iterable[int]) -> list[int]:
    vs = set(verts)
    out = []
    for v in vs:
        for e in g.inc[v]:
            if g.other_end(e, v) not in vs:
                out.append(e)
    return out


def lemma_oracles(g: Graph, m: EdgeSet, parity_samples: int = 64) -> LemmaReport:
    """Check the 4-cycle dichotomy, square propagation, both hexagon facts,
    and path-parity side consistency for a verified perfect matching cut.

    Accepts gadget fragments too (ports of degree 2 with their connector
    edges absent); the checks degrade to the forms the proofs actually use.
    """
    if any(g.degree(v) > 3 for v in range(g.n)):
        raise ValueError("lemma oracles expect maximum degree 3")
    if not is_perfect_matching(g, m):
        raise ValueError("m is not a perfect matching")
    cut = cut_from_edge_set(g, m)
    if cut is None:
        raise ValueError("m is not a cutset")
    report = LemmaReport()
    squares = induced_four_cycles(g)

    square_hit = {}
    for cyc in squares:
        es = _cycle_edges(g, cyc)
        inside = [e for e in es if e in m]
        outgoing = _outgoing(g, cyc)
        out_in = [e for e in outgoing if e in m]
        if len(inside) == 0:
            covered = {w for e in out_in for w in g.edges[e]}
            if len(out_in) != len(outgoing) or not set(cyc) <= covered:
                report.four_cycle.append(cyc)
        elif len(inside) == 2:
            u1, v1 = g.edges[inside[0]]
            u2, v2 = g.edges[inside[1]]
            if {u1, v1} & {u2, v2} or out_in:
                report.four_cycle.append(cyc)
        else:
            report.four_cycle.append(cyc)
        square_hit[frozenset(cyc)] = bool(inside)

    by_vertex: dict[int, list[tuple[int, ...]]] = {}
    for cyc in squares:
        for v in cyc:
            by_vertex.setdefault(v, []).append(cyc)
    checked = set()
    for c1 in squares:
        vs1 = set(c1)
        neighbours = {w for v in vs1 for w in g.adj[v]} - vs1
        for w in neighbours:
            for c2 in by_vertex.get(w, ()):
                if set(c2) & vs1:
                    continue
                key = (frozenset(c1), frozenset(c2))
                if key in checked:
                    continue
                checked.add(key)
                if square_hit[frozenset(c1)] != square_hit[frozenset(c2)]:
                    report.square_propagation.append((c1, c2))

    squares_by_edge: dict[int, list[frozenset]] = {}
    for cyc in squares:
        key = frozenset(cyc)
        for e in _cycle_edges(g, cyc):
            squares_by_edge.setdefault(e, []).append(key)

    def edge_in_square_avoiding(e: int, banned: set[int]) -> bool:
        return any(not (sq & banned) for sq in squares_by_edge.get(e, ()))

    for cyc in six_cycles(g):
        es = _cycle_edges(g, cyc)
        outgoing = _outgoing(g, cyc)
        out_in = [e for e in outgoing if e in m]
        if len(out_in) >= 3:
            inside = [e for e in es if e in m]
            if inside or len(out_in) != len(outgoing):
                report.hex_three_out.append(cyc)
        # hexagon-with-squares: edges at positions 1,2,4,5 each sit in an
        # induced 4-cycle avoiding their neighbours on the hexagon, which is
        # what the outgoing-edge argument needs
        matches = False
        for r in range(6):
            if matches:
                break
            for direction in (1, -1):
                rot = tuple(cyc[(r + direction * k) % 6] for k in range(6))
                checks = (
                    (g.edge_id(rot[1], rot[2]), {rot[0], rot[3]}),
                    (g.edge_id(rot[2], rot[3]), {rot[1], rot[4]}),
                    (g.edge_id(rot[4], rot[5]), {rot[3], rot[0]}),
                    (g.edge_id(rot[5], rot[0]), {rot[4], rot[1]}),
                )
                if all(edge_in_square_avoiding(e, b) for e, b in checks):
                    matches = True
                    break
        if matches and any(e in m for e in es):
            report.hex_square_pattern.append(cyc)

    # path parity: BFS tree paths vs the computed cut
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    order = [0]
    parent[0] = 0
    for v in order:
        for e in g.inc[v]:
            w = g.other_end(e, v)
            if parent[w] == -1:
                parent[w] = v
                parent_edge[w] = e
                order.append(w)
    depth_parity = [0] * g.n
    for v in order[1:]:
        depth_parity[v] = depth_parity[parent[v]] ^ (1 if parent_edge[v] in m else 0)
    step = max(1, g.n // parity_samples)
    for v in range(0, g.n, step):
        same = depth_parity[v] == depth_parity[0]
        if same != cut.same_side(0, v):
            report.path_parity.append(v)
    return report
