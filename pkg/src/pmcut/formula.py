"""Monotone NAE-3SAT instances: parsing, brute-force solving, cutvertex splitting.

A clause is a triple of distinct 1-based variable indices and is satisfied by
an assignment when its variables are not all on the same side.  Parsed files
must be E4 (every variable in exactly four clauses, so m = 4n/3); values
produced by the cutvertex splitter may have lower occurrence counts and are
validated only for clause shape.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph

Assignment = tuple  # of 0/1 per variable, index i-1 for variable i

MAX_BRUTEFORCE_VARS = 24


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class NaeFormula:
    """n variables (1-based) and an ordered list of 3-clauses."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for c in self.clauses:
            if len(set(c)) != 3:
                raise FormulaError(f"clause {c} has repeated literals")
            if not all(1 <= x <= self.n for x in c):
                raise FormulaError(f"clause {c} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrence_counts(self) -> Counter:
        counts: Counter = Counter()
        for c in self.clauses:
            counts.update(c)
        return counts

    def is_e4(self) -> bool:
        if self.n % 3 or self.m * 3 != self.n * 4:
            return False
        counts = self.occurrence_counts()
        return all(counts[i] == 4 for i in range(1, self.n + 1))

    def validate_e4(self) -> None:
        if self.n % 3:
            raise FormulaError(f"n={self.n} is not a multiple of 3")
        if self.m * 3 != self.n * 4:
            raise FormulaError(f"m={self.m} but 4n/3={4 * self.n // 3}")
        counts = self.occurrence_counts()
        for i in range(1, self.n + 1):
            if counts[i] != 4:
                raise FormulaError(f"variable {i} occurs {counts[i]} times, not 4")

    def occurrences(self, i: int) -> tuple[int, ...]:
        """Ascending 1-based indices of the clauses containing variable i."""
        return tuple(j + 1 for j, c in enumerate(self.clauses) if i in c)


def parse_formula(text: str) -> NaeFormula:
    """Parse the formula file format and validate the E4 invariants."""
    clauses = []
    header: Optional[tuple[int, int]] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 3 or parts[0] != "nae3sat-e4":
                raise FormulaError(f"line {lineno}: expected 'nae3sat-e4 <n> <m>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise FormulaError(f"line {lineno}: bad header numbers") from None
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormulaError(f"line {lineno}: expected three variable indices")
        try:
            c = tuple(int(x) for x in parts)
        except ValueError:
            raise FormulaError(f"line {lineno}: bad variable index") from None
        if len(set(c)) != 3:
            raise FormulaError(f"line {lineno}: clause literals must be distinct")
        clauses.append(c)
    if header is None:
        raise FormulaError("empty formula file")
    n, m = header
    if len(clauses) != m:
        raise FormulaError(f"header promises {m} clauses, found {len(clauses)}")
    try:
        f = NaeFormula(n, tuple(clauses))
    except FormulaError as exc:
        raise FormulaError(str(exc)) from None
    f.validate_e4()
    return f


def serialize_formula(f: NaeFormula) -> str:
    lines = [f"nae3sat-e4 {f.n} {f.m}"]
    lines += [" ".join(map(str, c)) for c in f.clauses]
    return "\n".join(lines) + "\n"


def nae_satisfies(f: NaeFormula, a: Assignment) -> bool:
    """True iff every clause sees both sides of the assignment."""
    if len(a) != f.n:
        raise FormulaError(f"assignment length {len(a)} != n={f.n}")
    for x, y, z in f.clauses:
        if a[x - 1] == a[y - 1] == a[z - 1]:
            return False
    return True


def complement(a: Assignment) -> Assignment:
    return tuple(1 - b for b in a)


def solve_nae_bruteforce(f: NaeFormula, max_vars: int = MAX_BRUTEFORCE_VARS) -> Optional[Assignment]:
    """First satisfying assignment with variable 1 pinned to side A, else None.

    Flipping every variable of a satisfying assignment yields another one, so
    pinning variable 1 halves the search without losing completeness.
    """
    if f.n > max_vars:
        raise FormulaError(f"brute force guard: n={f.n} > {max_vars}")
    if f.n == 0:
        return ()
    masks = [(1 << (x - 1)) | (1 << (y - 1)) | (1 << (z - 1)) for x, y, z in f.clauses]
    for bits in range(0, 1 << f.n, 2):  # even => bit 0 clear => variable 1 on side A
        ok = True
        for mk in masks:
            hit = bits & mk
            if hit == 0 or hit == mk:
                ok = False
                break
        if ok:
            return tuple((bits >> i) & 1 for i in range(f.n))
    return None


def incidence_graph(f: NaeFormula) -> Graph:
    """Bipartite incidence graph: variable nodes 0..n-1, clause nodes n..n+m-1."""
    edges = []
    for j, c in enumerate(f.clauses):
        for x in c:
            edges.append((x - 1, f.n + j))
    return Graph(f.n + f.m, edges)


def _articulation_points(g: Graph) -> set[int]:
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    points: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        root_children = 0
        while stack:
            v, idx = stack[-1]
            if idx == 0:
                disc[v] = low[v] = timer
                timer += 1
            if idx < len(g.adj[v]):
                stack[-1] = (v, idx + 1)
                w = g.adj[v][idx]
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    stack.append((w, 0))
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        points.add(p)
        if root_children > 1:
            points.add(root)
    return points


def variable_cutvertices(f: NaeFormula) -> tuple[int, ...]:
    """Ascending variable indices whose incidence node is an articulation point."""
    g = incidence_graph(f)
    return tuple(sorted(v + 1 for v in _articulation_points(g) if v < f.n))


def _renumber(n: int, clauses: list[tuple[int, int, int]]) -> NaeFormula:
    used = sorted({x for c in clauses for x in c})
    remap = {x: k + 1 for k, x in enumerate(used)}
    return NaeFormula(len(used), tuple(tuple(remap[x] for x in c) for c in clauses))


def _connected_components(g: Graph) -> list[list[int]]:
    comp_of = [-1] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if comp_of[s] != -1:
            continue
        comp = []
        stack = [s]
        comp_of[s] = len(comps)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in g.adj[a]:
                if comp_of[b] == -1:
                    comp_of[b] = len(comps)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def split_variable_cutvertices(f: NaeFormula) -> list[NaeFormula]:
    """Split at variable cutvertices of the incidence graph until none remain.

    A disconnected incidence graph is first split into its components, each
    treated independently.  Each cutvertex split duplicates one variable: one
    part is the lexicographically smallest component of inc(f) minus the
    cutvertex, plus the cutvertex; the other part is the rest.  The
    conjunction of the parts' satisfiability equals f's.  Parts are
    renumbered 1..n' and need not stay E4.
    """
    if f.m == 0:
        return [f]
    g0 = incidence_graph(f)
    comps = _connected_components(g0)
    if len(comps) > 1:
        out: list[NaeFormula] = []
        for comp in sorted(comps):
            nodes = set(comp)
            part = [c for j, c in enumerate(f.clauses) if f.n + j in nodes]
            if part:
                out.extend(split_variable_cutvertices(_renumber(f.n, part)))
        return out or [NaeFormula(0, ())]
    cuts = variable_cutvertices(f)
    if not cuts:
        return [f]
    v = cuts[0]
    g = incidence_graph(f)
    banned = v - 1
    comp_of = [-1] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if s == banned or comp_of[s] != -1:
            continue
        comp = []
        stack = [s]
        comp_of[s] = len(comps)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in g.adj[a]:
                if b != banned and comp_of[b] == -1:
                    comp_of[b] = len(comps)
                    stack.append(b)
        comps.append(sorted(comp))
    comps.sort()
    x_nodes = set(comps[0])
    part1 = [c for j, c in enumerate(f.clauses) if f.n + j in x_nodes]
    part2 = [c for j, c in enumerate(f.clauses) if f.n + j not in x_nodes]
    out: list[NaeFormula] = []
    for part in (part1, part2):
        if part:
            out.extend(split_variable_cutvertices(_renumber(f.n, part)))
        else:
            out.append(NaeFormula(0, ()))
    return out


def random_e4_formula(n: int, rng: random.Random, require_reducible: bool = True) -> NaeFormula:
    """Random E4 instance on n variables (n a multiple of 3).

    With require_reducible, retries until the incidence graph is connected and
    has no variable cutvertices, which is what the reduction pipeline expects.
    """
    if n % 3 or n <= 0:
        raise FormulaError("n must be a positive multiple of 3")
    while True:
        slots = [i for i in range(1, n + 1) for _ in range(4)]
        rng.shuffle(slots)
        clauses = []
        ok = True
        for k in range(0, len(slots), 3):
            c = tuple(slots[k:k + 3])
            if len(set(c)) != 3:
                ok = False
                break
            clauses.append(c)
        if not ok:
            continue
        f = NaeFormula(n, tuple(clauses))
        if not require_reducible:
            return f
        g = incidence_graph(f)
        if g.is_connected() and not variable_cutvertices(f):
            return f


def canonical_n3_formula() -> NaeFormula:
    """The unique E4 instance on three variables: four copies of (1,2,3)."""
    return NaeFormula(3, ((1, 2, 3),) * 4)


def ag23_formula() -> NaeFormula:
    """The affine plane of order 3 as an E4 instance: 9 points, 12 lines.

    Any 5 points of AG(2,3) contain a line, and one side of any bipartition of
    9 points has at least 5, so some clause is monochromatic: unsatisfiable.
    This is the smallest unsatisfiable E4 instance over n in {3, 6, 9}.
    """
    def var(r: int, c: int) -> int:
        return 3 * r + c + 1

    clauses = []
    for b in range(3):
        clauses.append(tuple(sorted(var(b, c) for c in range(3))))  # rows
        clauses.append(tuple(sorted(var(r, b) for r in range(3))))  # columns
    for s in (1, 2):
        for b in range(3):
            clauses.append(tuple(sorted(var(r, (s * r + b) % 3) for r in range(3))))
    return NaeFormula(9, tuple(clauses))
