import networkx as nx
import pytest

from zdgdim import (BlowupSpec, Disconnected, HypothesisUnmet, NotApplicable,
                    NotAZeroDivisor, SimpleGraph, TooLarge,
                    all_pairs_distances, beta_gsr_formula, boolean_lattice,
                    boundary, build_blowup, complete_graph_on, diameter,
                    distance_by_pseudocomplement, disjoint_union, full_report,
                    gstar, gstar_star, independence_number, is_resolving,
                    is_strong_resolving, labeled_equal, m_lattice,
                    max_independent_set, metric_dimension_bruteforce,
                    minimum_strong_resolving_set, minimum_vertex_cover,
                    mutually_maximally_distant, sdim_bruteforce, sdim_formula,
                    sdim_via_gsr, strong_resolving_graph, vertex_cover_number,
                    zero_divisor_graph)


def to_nx(g: SimpleGraph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(g.labels)
    out.add_edges_from(g.edge_list())
    return out


def nx_alpha_beta(g: SimpleGraph) -> tuple[int, int]:
    """Independent oracle: beta via exact max clique of the complement."""
    comp = nx.complement(to_nx(g))
    _, beta = nx.max_weight_clique(comp, weight=None)
    return g.n - beta, beta


@pytest.fixture(scope="module")
def cube_graph():
    return zero_divisor_graph(boolean_lattice(3))


def test_distances_match_networkx(cube_graph, fig3_lattice):
    for g in (cube_graph, zero_divisor_graph(fig3_lattice)):
        dist = all_pairs_distances(g)
        oracle = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for i, a in enumerate(g.labels):
            for j, b in enumerate(g.labels):
                assert dist[i][j] == oracle[a][b]


def test_cube_distances_frozen(cube_graph):
    g = cube_graph
    dist = all_pairs_distances(g)
    d = lambda a, b: dist[g.index(a)][g.index(b)]
    assert d("(1,1,0)", "(1,0,1)") == 3
    assert d("(1,0,0)", "(1,1,0)") == 2
    assert d("(1,0,0)", "(0,1,1)") == 1
    assert diameter(g) == 3


def test_complete_graph_distances():
    k = complete_graph_on(["a", "b", "c", "d"])
    dist = all_pairs_distances(k)
    assert all(dist[i][j] == 1 for i in range(4) for j in range(4) if i != j)
    assert diameter(k) == 1


def test_disconnected_raises():
    g = disjoint_union([complete_graph_on(["a", "b"]),
                        complete_graph_on(["c", "d"])])
    with pytest.raises(Disconnected):
        all_pairs_distances(g)


def test_distance_trichotomy_examples(fig3_lattice):
    LB = fig3_lattice
    assert distance_by_pseudocomplement(LB, "(1,0,0)", "(0,1,1)") == 1
    L = boolean_lattice(3)
    assert distance_by_pseudocomplement(L, "(1,0,0)", "(1,1,0)") == 2
    assert distance_by_pseudocomplement(L, "(1,1,0)", "(1,0,1)") == 3
    with pytest.raises(NotAZeroDivisor):
        distance_by_pseudocomplement(L, "(1,1,1)", "(1,0,0)")


def test_resolving_and_metric_dimension(cube_graph):
    g = cube_graph
    assert is_resolving(g, ["(1,0,0)", "(0,1,0)"])
    assert is_resolving(g, list(g.labels)[:-1])
    assert not is_resolving(g, ["(1,0,0)"])
    # frozen by exhaustive check: two vertices suffice, one cannot
    assert metric_dimension_bruteforce(g) == 2
    for n in (2, 3, 4, 5):
        k = complete_graph_on([f"v{i}" for i in range(n)])
        assert metric_dimension_bruteforce(k) == n - 1


def test_strong_resolving_examples(cube_graph):
    g = cube_graph
    assert is_strong_resolving(g, ["(1,1,0)", "(0,1,1)"])
    assert is_strong_resolving(g, list(g.labels))
    assert not is_strong_resolving(g, ["(1,1,0)"])
    assert sdim_bruteforce(g) == 2
    assert minimum_strong_resolving_set(g) == ("(0,1,1)", "(1,0,1)")
    assert is_strong_resolving(g, ["(0,1,1)", "(1,0,1)"])


def test_brute_force_cap():
    g = zero_divisor_graph(boolean_lattice(5))
    with pytest.raises(TooLarge):
        sdim_bruteforce(g, cap=16)
    with pytest.raises(TooLarge):
        metric_dimension_bruteforce(g, cap=16)


def test_mutually_maximally_distant_cube(cube_graph):
    g = cube_graph
    # (1,0,1) is maximally distant from (0,1,0) but not conversely
    dist = all_pairs_distances(g)
    i, j = g.index("(1,0,1)"), g.index("(0,1,0)")
    from zdgdim.poset import _bits
    assert all(dist[j][w] <= dist[i][j] for w in _bits(g.adj[i]))
    assert not all(dist[i][w] <= dist[i][j] for w in _bits(g.adj[j]))
    assert not mutually_maximally_distant(g, "(1,0,1)", "(0,1,0)")
    assert mutually_maximally_distant(g, "(1,1,0)", "(0,1,1)")
    assert not mutually_maximally_distant(g, "(1,1,0)", "(1,1,0)")


def test_boundary_and_gsr_cube(cube_graph):
    assert boundary(cube_graph) == ["(0,1,1)", "(1,0,1)", "(1,1,0)"]
    gsr = strong_resolving_graph(cube_graph)
    assert labeled_equal(gsr, complete_graph_on(
        ["(0,1,1)", "(1,0,1)", "(1,1,0)"]))


def test_gsr_of_complete_graph():
    for n in (2, 4, 6):
        k = complete_graph_on([f"v{i}" for i in range(n)])
        assert labeled_equal(strong_resolving_graph(k), k)
        assert sdim_via_gsr(k) == n - 1


def test_gstar_star_figure3(fig3_lattice):
    from zdgdim import connected_components
    gss = gstar_star(fig3_lattice)
    comps = connected_components(gss)
    sizes = sorted(len(c) for c in comps)
    assert sizes == [1, 2, 3, 6]
    # the complete components are exactly the three atom classes
    assert frozenset(["(1,0,0)", "(2,0,0)", "(3,0,0)"]) in comps
    assert frozenset(["(0,0,1)", "(0,0,2)"]) in comps
    assert frozenset(["(0,1,0)"]) in comps
    for c in comps:
        if len(c) < 6:
            assert gss.subgraph(c).is_complete()


def test_gstar_star_boolean_isolated_vertices():
    L = boolean_lattice(3)
    gss = gstar_star(L)
    isolated = {lab for i, lab in enumerate(gss.labels) if not gss.adj[i]}
    assert isolated == set(L.atoms())


def test_gstar_star_isolated_vertices_with_unblown_atoms():
    # chains everywhere except on the atoms: the isolated vertices of G**
    # are exactly the atoms
    spec = BlowupSpec(3, {0b011: 2, 0b101: 3, 0b110: 2})
    LB = build_blowup(spec)
    gss = gstar_star(LB)
    isolated = {lab for i, lab in enumerate(gss.labels) if not gss.adj[i]}
    assert isolated == set(LB.atoms())


def test_gstar_equals_gsr(fig3_lattice):
    for LB in (fig3_lattice, boolean_lattice(3), boolean_lattice(4)):
        want = strong_resolving_graph(zero_divisor_graph(LB))
        assert labeled_equal(gstar(LB), want)


def test_gstar_of_complete_zdg():
    # the 2-atom blow-up with singleton chains has a complete (K_2) graph
    LB = build_blowup(BlowupSpec(2, {}))
    g = gstar(LB)
    assert g.n == 2 and g.edge_count() == 1


def test_gstar_star_not_applicable():
    with pytest.raises(NotApplicable):
        gstar_star(m_lattice(3))


def test_independent_set_solver_against_networkx(corpus_graphs):
    for name, spec, LB, G in corpus_graphs[:12]:
        for g in (G, strong_resolving_graph(G)):
            alpha, beta = nx_alpha_beta(g)
            assert independence_number(g) == beta, name
            assert vertex_cover_number(g) == alpha, name
            mis = max_independent_set(g)
            assert len(mis) == beta
            assert all(not g.has_edge(a, b) for i, a in enumerate(mis)
                       for b in mis[i + 1:])
            cover = minimum_vertex_cover(g)
            assert len(cover) == alpha
            inside = set(cover)
            assert all(a in inside or b in inside for a, b in g.edge_list())


def test_max_independent_set_is_lexicographically_least():
    # a 4-cycle has two maximum independent sets; a < b wins
    c4 = SimpleGraph.from_edges(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert max_independent_set(c4) == ["a", "c"]
    u = disjoint_union([complete_graph_on(["x", "y"]),
                        complete_graph_on(["p", "q", "r"])])
    assert vertex_cover_number(u) == 3
    assert independence_number(u) == 2


def test_sdim_formula_and_beta_formula(fig3_spec):
    assert sdim_formula(BlowupSpec(3, {})) == 2
    assert sdim_formula(fig3_spec) == 8
    for n in (3, 4, 5):
        assert sdim_formula(BlowupSpec(n, {})) == 2 ** n - 2 * n
    assert beta_gsr_formula(fig3_spec) == 2 * 3 - 1 - 2
    with pytest.raises(HypothesisUnmet):
        sdim_formula(BlowupSpec(2, {}))
    with pytest.raises(HypothesisUnmet):
        beta_gsr_formula(BlowupSpec(2, {}))


def test_full_report_figure3(fig3_lattice, fig3_spec):
    rep = full_report(fig3_lattice, fig3_spec)
    assert rep.formula_value == rep.gsr_value == rep.bruteforce_value == 8
    assert rep.agree()
    assert rep.zstar_size == 12
    assert rep.n_atoms == 3 and rep.m_singleton_atoms == 1
    assert len(rep.vertex_cover) == 8
    assert len(rep.strong_resolving_set) == 8
    assert is_strong_resolving(zero_divisor_graph(fig3_lattice),
                               rep.strong_resolving_set)
    data = rep.to_json_dict()
    assert data["formula"] == data["gsr"] == data["bruteforce"] == 8


def test_full_report_small_n():
    spec = BlowupSpec(2, {})
    rep = full_report(build_blowup(spec), spec)
    assert rep.formula_value is None
    assert rep.gsr_value == 1 and rep.bruteforce_value == 1


def test_full_report_brute_capped(fig3_lattice, fig3_spec):
    rep = full_report(fig3_lattice, fig3_spec, brute_cap=5)
    assert rep.bruteforce_value is None
    assert rep.strong_resolving_set is None
    assert rep.agree()
