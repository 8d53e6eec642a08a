"""Formulas: parsing, brute-force solving, and the cutvertex splitter."""

import random

from pmcut import (
    NaeFormula,
    ag23_formula,
    canonical_n3_formula,
    nae_satisfies,
    parse_formula,
    random_e4_formula,
    serialize_formula,
    solve_nae_bruteforce,
    split_variable_cutvertices,
)

# The smallest legal instance: three variables force four copies of (1,2,3).
f = canonical_n3_formula()
print(serialize_formula(f))
a = solve_nae_bruteforce(f)
print("satisfying assignment:", "".join("AB"[b] for b in a))
print("check:", nae_satisfies(f, a))

# Round-trip through the file format.
assert parse_formula(serialize_formula(f)) == f

# A random instance: every variable in exactly four clauses, m = 4n/3.
g = random_e4_formula(9, random.Random(7))
print("\nrandom n=9 instance:", g.m, "clauses, satisfiable:",
      solve_nae_bruteforce(g) is not None)

# The affine plane of order 3 is the smallest unsatisfiable shape here:
# one side of any bipartition of its 9 points holds 5 of them, and any
# 5 points contain a line.
ag = ag23_formula()
print("\nAG(2,3) satisfiable:", solve_nae_bruteforce(ag) is not None)

# Two blocks sharing variable 5 make its incidence node a cutvertex; the
# splitter peels them apart and the conjunction of parts is equivalent.
block1 = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (3, 4, 5)]
block2 = [(6, 7, 8), (6, 7, 9), (6, 8, 9), (7, 8, 9), (6, 7, 5), (8, 9, 5)]
joined = NaeFormula(9, tuple(block1 + block2))
parts = split_variable_cutvertices(joined)
print("\nsplit into", len(parts), "subinstances with",
      [p.n for p in parts], "variables")
