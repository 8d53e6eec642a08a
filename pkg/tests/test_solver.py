import random

import pytest

from pmcut.formula import (
    ag23_formula,
    canonical_n3_formula,
    complement,
    nae_satisfies,
    solve_nae_bruteforce,
)
from pmcut.gadgets import enumerate_local_pmcs
from pmcut.graphs import (
    complete_bipartite_graph,
    complete_graph,
    cube_graph,
    cut_from_edge_set,
    cycle_graph,
    is_perfect_matching,
    random_cubic_graph,
    same_side,
)
from pmcut.reduction import reduce_formula
from pmcut.solver import (
    BudgetExhausted,
    assignment_from_pmc,
    enumerate_pmcs,
    find_pmc,
    find_pmc_bruteforce,
    induced_four_cycles,
    lemma_oracles,
    pmc_from_assignment,
    six_cycles,
)


def verified(g, m):
    return m is not None and is_perfect_matching(g, m) and cut_from_edge_set(g, m) is not None


def test_fixed_fixtures():
    q3 = cube_graph()
    m = find_pmc(q3)
    assert verified(q3, m)
    assert find_pmc_bruteforce(q3) == m == frozenset({0, 2, 4, 6})  # canonical witness
    assert find_pmc(complete_graph(4)) is None
    assert find_pmc_bruteforce(complete_graph(4)) is None
    assert find_pmc(complete_bipartite_graph(3, 3)) is None
    assert find_pmc_bruteforce(complete_bipartite_graph(3, 3)) is None
    assert find_pmc(cycle_graph(6)) is None
    assert find_pmc_bruteforce(cycle_graph(6)) is None
    assert verified(cycle_graph(4), find_pmc(cycle_graph(4)))


def test_enumerate_pmcs_c4():
    assert enumerate_pmcs(cycle_graph(4)) == [frozenset({0, 2}), frozenset({1, 3})]


def test_single_edge_graph():
    from pmcut.graphs import Graph

    k2 = Graph(2, [(0, 1)])
    assert find_pmc(k2) == frozenset({0}) == find_pmc_bruteforce(k2)


def test_bruteforce_guard():
    rng = random.Random(0)
    with pytest.raises(ValueError, match="guard"):
        find_pmc_bruteforce(random_cubic_graph(26, rng))


def test_find_pmc_requires_connected():
    from pmcut.graphs import Graph

    with pytest.raises(ValueError, match="connected"):
        find_pmc(Graph(2, []))


def test_budget_exhaustion_is_distinct():
    art = reduce_formula(canonical_n3_formula())
    with pytest.raises(BudgetExhausted):
        find_pmc(art.graph, budget=3)
    assert find_pmc(art.graph, budget=None) is not None


def test_random_agreement_small():
    rng = random.Random(97)
    for _ in range(80):
        g = random_cubic_graph(rng.choice([8, 10, 12, 14, 16]), rng)
        m1 = find_pmc(g)
        m2 = find_pmc_bruteforce(g)
        assert (m1 is None) == (m2 is None)
        if m1 is not None:
            assert verified(g, m1) and verified(g, m2)


def test_solver_witness_deterministic():
    g = cube_graph()
    assert find_pmc(g) == find_pmc(g) == frozenset({0, 2, 4, 6})


def test_witness_independent_of_budget():
    art = reduce_formula(canonical_n3_formula())
    m1 = find_pmc(art.graph, budget=None)
    m2 = find_pmc(art.graph, budget=10_000)
    assert m1 == m2
    rng = random.Random(3)
    for _ in range(20):
        g = random_cubic_graph(rng.choice([10, 12, 14]), rng)
        assert find_pmc(g, budget=None) == find_pmc(g, budget=500_000)


# --- witness mappings ---------------------------------------------------------

def test_roundtrip_canonical():
    f = canonical_n3_formula()
    art = reduce_formula(f)
    a = solve_nae_bruteforce(f)
    m = pmc_from_assignment(art, a)
    assert verified(art.graph, m)
    back = assignment_from_pmc(art, m)
    assert back in (a, complement(a))
    m2 = find_pmc(art.graph)
    assert verified(art.graph, m2)
    assert nae_satisfies(f, assignment_from_pmc(art, m2))
    for i in range(1, 4):
        assert art.variable_red[i] <= m2  # solver witness restricts to the red sets


def test_pmc_from_complement_assignment():
    f = canonical_n3_formula()
    art = reduce_formula(f)
    a = solve_nae_bruteforce(f)
    m1 = pmc_from_assignment(art, a)
    m2 = pmc_from_assignment(art, complement(a))
    assert verified(art.graph, m1) and verified(art.graph, m2)
    for i in range(1, 4):
        assert art.variable_red[i] <= m1 and art.variable_red[i] <= m2


def test_pmc_from_all_equal_assignment_fails():
    art = reduce_formula(canonical_n3_formula())
    with pytest.raises(ValueError, match="NAE"):
        pmc_from_assignment(art, (0, 0, 0))


def test_assignment_from_non_pmc_rejected():
    art = reduce_formula(canonical_n3_formula())
    with pytest.raises(ValueError):
        assignment_from_pmc(art, frozenset({0}))
    m = find_pmc(art.graph)
    corrupted = frozenset(set(m) ^ {next(iter(m))})
    with pytest.raises(ValueError):
        assignment_from_pmc(art, corrupted)


def test_anchor_sides_under_witness():
    f = canonical_n3_formula()
    art = reduce_formula(f)
    m = find_pmc(art.graph)
    cut = cut_from_edge_set(art.graph, m)
    for i in range(1, 4):
        anchors = [art.anchors[(role, i, j)]
                   for role in ("t", "b", "t'", "b'") for j in f.occurrences(i)]
        assert all(same_side(art.graph, cut, anchors[0], v) for v in anchors)


def test_unsat_instance_refuted():
    ag = ag23_formula()
    assert solve_nae_bruteforce(ag) is None
    art = reduce_formula(ag)
    assert find_pmc(art.graph) is None  # complete refutation, no budget excuse


# --- lemma oracles -------------------------------------------------------------

def test_cycle_enumerators():
    q3 = cube_graph()
    assert len(induced_four_cycles(q3)) == 6
    assert len(six_cycles(q3)) == 16


def test_oracles_on_q3():
    q3 = cube_graph()
    assert lemma_oracles(q3, find_pmc(q3)).ok


def test_oracles_on_census_elements(variable_gadget, clause_gadget, crossing_gadget):
    for gadget in (variable_gadget, clause_gadget, crossing_gadget):
        for c in enumerate_local_pmcs(gadget):
            assert lemma_oracles(gadget.graph, c).ok


def test_oracles_reject_corrupted_witness():
    q3 = cube_graph()
    m = set(find_pmc(q3))
    m.discard(0)
    m.add(1)
    with pytest.raises(ValueError):
        lemma_oracles(q3, frozenset(m))


def test_oracles_on_reduction_witness():
    art = reduce_formula(canonical_n3_formula())
    m = find_pmc(art.graph)
    assert lemma_oracles(art.graph, m).ok
    assert lemma_oracles(art.graph, pmc_from_assignment(art, (0, 1, 1))).ok
