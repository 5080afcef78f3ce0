"""Search, degree cleanup, closeness audit, and walk construction."""

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import o_max_hom_free
from tighthom.extremal import (
    BudgetExceededError,
    _canonical_form,
    _reverse_walk_distances,
    brute_force_ex_hom,
    build_walk_through_T,
    check_eps_close,
    delete_to_residue_free,
    min_degree_refine,
    prune_low_codegree,
    refine_triple_set,
    verify_short_connection_bound,
)
from tighthom.hypergraph import (
    Hypergraph,
    all_triples,
    complete_oddly_bipartite,
    tight_cycle,
    triple_set,
    twisted_tight_cycle,
)
from tighthom.tightconn import (
    is_hom_free,
    is_valid_closed_walk,
    is_valid_walk,
    min_closed_stretch,
    oriented_edges,
    plain_component,
    walk_distances,
)


def complete4(n):
    return Hypergraph(4, n, itertools.combinations(range(n), 4))


def union_fixture():
    return Hypergraph(4, 8, tight_cycle(4, 6).edges + twisted_tight_cycle(4, 8, (1, 0, 3, 2)).edges)


# ---------------------------------------------------------------------------
# exhaustive search


def test_search_single_edge_domain():
    res = brute_force_ex_hom(4, 4, {1})
    assert res.max_edges == 1
    assert res.witnesses == (Hypergraph(4, 4, [(0, 1, 2, 3)]),)
    assert res.residues == frozenset({1})
    assert res.complete and not res.canonical
    assert res.explored >= 1


@pytest.mark.parametrize(
    "n,r,ks",
    [(4, 4, (1,)), (5, 4, (1,)), (5, 4, (1, 3)), (5, 4, (2,)), (4, 3, (1, 2)), (5, 2, (1,))],
)
def test_search_matches_naive_enumeration(n, r, ks):
    best, extremal_sets = o_max_hom_free(n, r, ks)
    res = brute_force_ex_hom(n, r, set(ks))
    assert res.max_edges == best
    assert tuple(w.edges for w in res.witnesses) == extremal_sets


def test_search_bipartite_turan_on_five():
    res = brute_force_ex_hom(5, 2, {1})
    assert res.max_edges == 6 == 5 * 5 // 4
    assert len(res.witnesses) == 10
    assert all(len(w.edges) == 6 and is_hom_free(w, 1) for w in res.witnesses)


def test_search_parallel_split_matches_sequential():
    seq = brute_force_ex_hom(5, 2, {1}, jobs=1)
    par = brute_force_ex_hom(5, 2, {1}, jobs=2)
    assert (seq.max_edges, seq.witnesses, seq.explored) == (par.max_edges, par.witnesses, par.explored)


def test_search_budget_error_carries_greedy_bound():
    with pytest.raises(BudgetExceededError) as info:
        brute_force_ex_hom(7, 4, {1})
    err = info.value
    assert err.lower_bound == 20
    assert len(err.witness.edges) == 20
    assert is_hom_free(err.witness, 1)
    assert err.explored == 35


def test_search_canonical_five_vertices():
    plain = brute_force_ex_hom(5, 4, {1})
    canon = brute_force_ex_hom(5, 4, {1}, canonical=True)
    assert canon.max_edges == plain.max_edges == 4
    assert canon.canonical and canon.complete
    assert len(canon.witnesses) == 1
    assert all(is_hom_free(w, 1) for w in canon.witnesses)


def test_search_canonical_six_agrees_with_plain():
    canon = brute_force_ex_hom(6, 4, {1}, canonical=True)
    plain = brute_force_ex_hom(6, 4, {1}, budget=1 << 15)
    assert canon.max_edges == plain.max_edges == 10
    # one isomorphism class; its labeled copies place the singleton side 6 ways
    assert len(canon.witnesses) == 1
    assert len(plain.witnesses) == 6
    plain_sets = {w.edges for w in plain.witnesses}
    assert all(w.edges in plain_sets for w in canon.witnesses)


def test_search_canonical_cap():
    with pytest.raises(BudgetExceededError):
        brute_force_ex_hom(9, 4, {1}, canonical=True)


def test_search_residue_zero_forces_empty():
    res = brute_force_ex_hom(5, 4, {0})
    assert res.max_edges == 0
    assert res.witnesses == (Hypergraph(4, 5, []),)


def test_search_rejects_bad_arguments():
    with pytest.raises(ValueError):
        brute_force_ex_hom(5, 2, {1}, jobs=0)
    with pytest.raises(ValueError):
        brute_force_ex_hom(5, 2, set())
    with pytest.raises(ValueError):
        brute_force_ex_hom(-1, 2, {1})


def test_canonical_form_is_relabeling_invariant():
    g = complete_oddly_bipartite(4, 2)
    base = _canonical_form(g.n, g.edges)
    rng = random.Random(3)
    for _ in range(10):
        relab = list(range(g.n))
        rng.shuffle(relab)
        edges = [tuple(sorted(relab[v] for v in e)) for e in g.edges]
        assert _canonical_form(g.n, edges) == base


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_search_witnesses_are_sound(data):
    n = data.draw(st.integers(min_value=2, max_value=5))
    r = data.draw(st.integers(min_value=2, max_value=min(4, n)))
    ks = data.draw(st.sets(st.integers(min_value=0, max_value=r - 1), min_size=1))
    res = brute_force_ex_hom(n, r, ks, budget=2**10)
    assert res.witnesses
    assert res.max_edges <= math.comb(n, r)
    for w in res.witnesses:
        assert len(w.edges) == res.max_edges
        assert all(is_hom_free(w, k) for k in ks)
    assert list(res.witnesses) == sorted(res.witnesses, key=lambda w: w.edges)


# ---------------------------------------------------------------------------
# degree refinement


def test_min_degree_refine_cascades_on_odd_bipartite():
    live, removed = min_degree_refine(complete_oddly_bipartite(5, 5), Fraction(1, 2), 0.1)
    assert live == frozenset()
    assert removed == (0, 1, 2, 3, 5, 4, 6, 7, 8, 9)


def test_min_degree_refine_keeps_dense_graphs():
    k6 = Hypergraph(2, 6, itertools.combinations(range(6), 2))
    assert min_degree_refine(k6, Fraction(1, 2), 0.1) == (frozenset(range(6)), ())
    assert min_degree_refine(complete4(12), 0.7, 0.1) == (frozenset(range(12)), ())


def test_min_degree_refine_drops_a_path_end():
    p3 = Hypergraph(2, 3, [(0, 1), (1, 2)])
    assert min_degree_refine(p3, 1, 0.5) == (frozenset({1, 2}), (0,))


def test_min_degree_refine_rejects_bad_constants():
    g = complete4(6)
    with pytest.raises(ValueError):
        min_degree_refine(g, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        min_degree_refine(g, 2, 0.1)
    with pytest.raises(ValueError):
        min_degree_refine(g, Fraction(1, 2), 0)


# ---------------------------------------------------------------------------
# codegree pruning


def test_prune_keeps_complete_graph():
    assert prune_low_codegree(complete4(8), 0.3) == (complete4(8), 0)


def test_prune_erases_thin_graphs():
    assert prune_low_codegree(tight_cycle(4, 9), Fraction(2, 9)) == (Hypergraph(4, 9, []), 9)
    single = Hypergraph(4, 5, [(0, 1, 2, 3)])
    assert prune_low_codegree(single, 0.3) == (Hypergraph(4, 5, []), 1)
    assert prune_low_codegree(single, 0) == (single, 0)


def test_prune_is_idempotent():
    pruned, _ = prune_low_codegree(union_fixture(), Fraction(1, 8))
    assert prune_low_codegree(pruned, Fraction(1, 8)) == (pruned, 0)


def test_prune_rejects_negative_eps():
    with pytest.raises(ValueError):
        prune_low_codegree(complete4(5), -1)


@pytest.mark.parametrize("seed", range(6))
def test_prune_bound_and_codegree_guarantee(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 9)
    eps = rng.choice([Fraction(1, 5), Fraction(3, 10), Fraction(1, 2)])
    edges = [e for e in itertools.combinations(range(n), 4) if rng.random() < 0.4]
    g = Hypergraph(4, n, edges)
    pruned, deleted = prune_low_codegree(g, eps)
    assert deleted == len(g.edges) - len(pruned.edges)
    assert deleted <= eps * n * math.comb(n, 3)
    codeg = {}
    for e in pruned.edges:
        for sub in itertools.combinations(e, 3):
            codeg[sub] = codeg.get(sub, 0) + 1
    assert all(d > eps * n for d in codeg.values())


# ---------------------------------------------------------------------------
# short connections


def test_short_connection_bound_on_pruned_complete_graph():
    pruned, _ = prune_low_codegree(complete4(8), 0.3)
    assert verify_short_connection_bound(pruned, 0.3)


def test_short_connection_bound_on_dense_pair_graph():
    k12 = Hypergraph(2, 12, itertools.combinations(range(12), 2))
    # bound 5 / 0.8^2 is below 8, well above the two or three hops needed
    assert verify_short_connection_bound(k12, 0.8)


def test_short_connection_vacuous_on_empty():
    assert verify_short_connection_bound(Hypergraph(4, 6, []), 0.5)


def test_short_connection_rejects_unpruned_input():
    with pytest.raises(ValueError):
        verify_short_connection_bound(Hypergraph(4, 5, [(0, 1, 2, 3)]), 0.3)
    with pytest.raises(ValueError):
        verify_short_connection_bound(Hypergraph(4, 6, []), 0)


def test_reverse_walk_distances_mirror_forward():
    g = union_fixture()
    targets = sorted({min(plain_component(g, x)) for x in oriented_edges(g)})
    for rep in targets:
        rev = _reverse_walk_distances(g, rep)
        comp = plain_component(g, rep)
        for y in sorted(comp):
            assert rev[(y, 0)] == walk_distances(g, y)[(rep, 0)]


# ---------------------------------------------------------------------------
# residue-freeing deletion


def test_delete_to_residue_free_degenerate_scale():
    # far below the meaningful length scale the pruning simply clears the graph
    pruned, deleted = delete_to_residue_free(complete_oddly_bipartite(3, 3), 9)
    assert pruned == Hypergraph(4, 6, [])
    assert deleted == 6


def test_delete_to_residue_free_keeps_robust_graphs():
    k55 = Hypergraph(2, 10, [(a, b) for a in range(5) for b in range(5, 10)])
    pruned, deleted = delete_to_residue_free(k55, 101)
    assert (pruned, deleted) == (k55, 0)
    assert is_hom_free(pruned, 1)

    godd = complete_oddly_bipartite(5, 5)
    pruned, deleted = delete_to_residue_free(godd, 10**6 + 1)
    assert (pruned, deleted) == (godd, 0)


def test_delete_to_residue_free_preconditions():
    with pytest.raises(ValueError):
        delete_to_residue_free(complete4(6), 4)
    with pytest.raises(ValueError):
        delete_to_residue_free(complete4(8), 9)
    k55 = Hypergraph(2, 10, [(a, b) for a in range(5) for b in range(5, 10)])
    with pytest.raises(ValueError):
        delete_to_residue_free(k55, 100)


@pytest.mark.parametrize("seed", range(4))
def test_delete_to_residue_free_random_subgraphs(seed):
    rng = random.Random(seed)
    base = complete_oddly_bipartite(4, 4)
    edges = [e for e in base.edges if rng.random() < 0.5]
    g = Hypergraph(4, 8, edges)
    length = 10**5 + 1
    pruned, deleted = delete_to_residue_free(g, length)
    assert is_hom_free(pruned, 1)
    assert deleted <= 2 * 4 * 8**4 / length ** (1 / 4)
    eps = Fraction(float((4 * 9 / (length - 1)) ** (1 / 4)))
    assert deleted <= eps * 8 * math.comb(8, 3)


# ---------------------------------------------------------------------------
# closeness audit


def test_eps_close_exact_odd_bipartite():
    report = check_eps_close(complete_oddly_bipartite(5, 5), range(5), range(5, 10), all_triples(10), 0)
    assert report.is_close
    assert report.epsilon == 0
    assert report.violations_1 == () and report.violations_2 == () and report.violations_3 == ()
    assert report.remark_applies
    assert report.remark_violations_2 == () and report.remark_violations_3 == ()


def test_eps_close_flags_one_missing_edge():
    g = complete_oddly_bipartite(5, 5)
    missing = Hypergraph(4, 10, [e for e in g.edges if e != (0, 1, 2, 5)])
    report = check_eps_close(missing, range(5), range(5, 10), all_triples(10), 0)
    assert not report.is_close
    assert report.violations_1 == ((0, 1, 2), (0, 1, 5), (0, 2, 5), (1, 2, 5))
    assert report.violations_2 == () and report.violations_3 == ()


def test_eps_close_empty_triples_fail_vertex_condition():
    report = check_eps_close(complete_oddly_bipartite(5, 5), range(5), range(5, 10), triple_set(10, []), 0.5)
    assert report.violations_1 == () and report.violations_2 == ()
    assert report.violations_3 == tuple((v, tag) for v in range(10) for tag in ("A", "B"))
    assert not report.is_close


def test_eps_close_remark_gate_and_thresholds():
    g28 = complete_oddly_bipartite(2, 8)
    report = check_eps_close(g28, range(2), range(2, 10), all_triples(10), 0.5)
    assert not report.remark_applies

    clique = triple_set(10, itertools.combinations(range(6), 3))
    report = check_eps_close(complete_oddly_bipartite(5, 5), range(5), range(5, 10), clique, 0.3)
    assert report.remark_applies
    assert (0, 1) in report.remark_violations_2
    assert 9 in report.remark_violations_3


def test_eps_close_validates_input():
    g = complete_oddly_bipartite(5, 5)
    t = all_triples(10)
    with pytest.raises(ValueError):
        check_eps_close(g, range(6), range(5, 10), t, 0)
    with pytest.raises(ValueError):
        check_eps_close(g, range(4), range(5, 10), t, 0)
    with pytest.raises(ValueError):
        check_eps_close(g, range(5), range(5, 10), all_triples(9), 0)
    with pytest.raises(ValueError):
        check_eps_close(g, range(5), range(5, 10), t, 2)
    with pytest.raises(ValueError):
        check_eps_close(tight_cycle(3, 7), range(3), range(3, 7), all_triples(7), 0)


def perturbed_host():
    g = complete_oddly_bipartite(12, 12)
    rng = random.Random(7)
    dropped = rng.sample(sorted(g.edges), 5)
    return Hypergraph(4, 24, set(g.edges) - set(dropped))


def test_eps_close_tolerates_five_deletions_at_one_tenth():
    sub = perturbed_host()
    t = all_triples(24)
    assert check_eps_close(sub, range(12), range(12, 24), t, 0.1).is_close
    tighter = check_eps_close(sub, range(12), range(12, 24), t, 0.09)
    assert not tighter.is_close
    # each deleted edge leaves three waypoint triples one extension short
    assert len(tighter.violations_1) == 15


# ---------------------------------------------------------------------------
# triple family refinement


def test_refine_triple_set_identity_on_uniform_family():
    keep, refined = refine_triple_set(all_triples(50), 1, 0.06, 0.25)
    assert keep == frozenset(range(50))
    assert refined == all_triples(50)


def test_refine_triple_set_trims_thin_vertex_and_poor_pair():
    deleted = {(0, 1, z) for z in range(7, 19)}
    t = triple_set(20, (tri for tri in itertools.combinations(range(19), 3) if tri not in deleted))
    keep, refined = refine_triple_set(t, 0.9, 0.4, 0.5)
    assert keep == frozenset(range(19))
    assert len(refined) == 952
    assert (0, 1, 2) not in refined and (0, 1, 6) not in refined
    assert (0, 2, 3) in refined
    from tighthom.hypergraph import shadow

    assert (0, 1) not in shadow(refined.triples)


def test_refine_triple_set_preconditions():
    t = all_triples(50)
    with pytest.raises(ValueError):
        refine_triple_set(t, 1, 0.06, 0.6)  # delta^4 > eps
    with pytest.raises(ValueError):
        refine_triple_set(t, Fraction(1, 100), 0.06, 0.25)  # delta > 8 alpha
    with pytest.raises(ValueError):
        refine_triple_set(all_triples(3), 1, 0.06, 0.25)  # n too small
    with pytest.raises(ValueError):
        refine_triple_set(triple_set(50, [(0, 1, 2)]), 1, 0.06, 0.25)  # too sparse
    heavy = triple_set(12, itertools.combinations(range(12), 3))
    with pytest.raises(ValueError):
        refine_triple_set(heavy, 0.5, 0.06, 0.25)  # a pair degree above alpha n


# ---------------------------------------------------------------------------
# walks through the family


def test_walk_through_exact_odd_bipartite():
    g = complete_oddly_bipartite(6, 6)
    w = build_walk_through_T(
        g, range(6), range(6, 12), all_triples(12), 0,
        ((0, 1, 2), (3, 4, 6)), ("B", "A", "A", "A", "B", "A"),
    )
    assert w.vertices == (0, 1, 2, 6, 0, 1, 2, 6, 0, 3, 4, 6)
    assert w.stretch == 8
    assert is_valid_walk(g, w.vertices)
    t = all_triples(12)
    assert all(tuple(w.vertices[i - 2 : i + 1]) in t for i in range(2, len(w.vertices) - 6))


def test_walk_routes_through_an_extra_edge():
    host = Hypergraph(4, 12, complete_oddly_bipartite(6, 6).edges + ((0, 1, 2, 3),))
    w = build_walk_through_T(
        host, range(6), range(6, 12), all_triples(12), 0,
        ((1, 0, 3), (0, 3, 2)), (2, "B", "A", "A", "A", "B", 1),
    )
    assert w.vertices == (1, 0, 3, 2, 6, 0, 3, 2, 6, 1, 0, 3, 2)
    assert w.stretch == 9
    assert is_valid_closed_walk(host, w.vertices, 1)
    # the single even edge flips residue-1 freeness of the host
    assert not is_hom_free(host, 1)
    assert is_hom_free(complete_oddly_bipartite(6, 6), 1)
    assert min_closed_stretch(host, 1) == 5


def test_walk_through_perturbed_host():
    sub = perturbed_host()
    w = build_walk_through_T(
        sub, range(12), range(12, 24), all_triples(24), 0.1,
        ((0, 12, 1), (2, 3, 4)), ("A", "A", "B", 5, "A", "A", "B"),
    )
    assert w.vertices == (0, 12, 1, 2, 0, 12, 5, 1, 0, 12, 2, 3, 4)
    assert w.stretch == 9
    assert is_valid_walk(sub, w.vertices)


def test_walk_returns_none_when_no_routing_exists():
    g = complete_oddly_bipartite(6, 6)
    w = build_walk_through_T(
        g, range(6), range(6, 12), all_triples(12), 0,
        ((0, 1, 2), (3, 4, 6)), (0, "B", "A", "A", "A", "B"),
    )
    assert w is None


def test_walk_preconditions():
    g = complete_oddly_bipartite(6, 6)
    t = all_triples(12)
    a, b = range(6), range(6, 12)
    ends = ((0, 1, 2), (3, 4, 6))
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, t, 0.2, ends, ("B", "A", "A", "A", "B", "A"))
    missing = Hypergraph(4, 12, [e for e in g.edges if e != (0, 1, 2, 6)])
    with pytest.raises(ValueError):
        build_walk_through_T(missing, a, b, t, 0, ends, ("B", "A", "A", "A", "B", "A"))
    small = triple_set(12, [tri for tri in itertools.combinations(range(12), 3) if tri != (0, 1, 2)])
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, small, 0, ends, ("B", "A", "A", "A", "B", "A"))
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, t, 0, ends, ("B", "A", "A", "A", "B"))
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, t, 0, ends, ("B", "A", "C", "A", "B", "A"))
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, t, 0, ends, ("B", "A", 99, "A", "B", "A"))
    with pytest.raises(ValueError):
        build_walk_through_T(g, a, b, t, 0, ends, ("A", "A", "A", "A", "B", "B"))
