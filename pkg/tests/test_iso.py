import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_isomorphic, random_graph, seeded, shuffled_copy
from groupgraphs.graphs import LabeledGraph, StructureError, commuting_graph, complete_graph, enhanced_power_graph, power_graph
from groupgraphs.groups import dicyclic, dihedral, generalized_quaternion
from groupgraphs.iso import (
    CertificateKind,
    SearchBudgetExceeded,
    check_witness,
    compare_fingerprints,
    explicit_paper_map,
    find_isomorphism,
    fingerprint,
    validate_certificate,
)


def cycle(n, prefix="c"):
    labels = [f"{prefix}{k}" for k in range(n)]
    return LabeledGraph(labels, [(labels[k], labels[(k + 1) % n]) for k in range(n)])


def union(*graphs):
    verts = [f"{k}:{v}" for k, g in enumerate(graphs) for v in g.vertices]
    edges = [(f"{k}:{u}", f"{k}:{v}") for k, g in enumerate(graphs) for u, v in g.edges()]
    return LabeledGraph(verts, edges)


def path(n):
    labels = [f"p{k}" for k in range(n)]
    return LabeledGraph(labels, list(zip(labels, labels[1:])))


# -- explicit map ----------------------------------------------------------------------


def test_explicit_map_q8_to_d8():
    f = explicit_paper_map(dicyclic(2), dihedral(2))
    assert f["h^1"] == "a^1"
    assert f["h^0"] == "a^0"
    assert f["h^3*x"] == "a^3*b"


def test_explicit_map_q12_is_bijective():
    f = explicit_paper_map(dicyclic(3), dihedral(3))
    assert len(f) == 12 and len(set(f.values())) == 12


def test_explicit_map_rejects_mismatch():
    with pytest.raises(ValueError):
        explicit_paper_map(dicyclic(3), dihedral(4))
    with pytest.raises(ValueError):
        explicit_paper_map(dihedral(3), dicyclic(3))


# -- witness checking --------------------------------------------------------------------


def test_paper_map_on_q32():
    q, d = generalized_quaternion(4), dihedral(8)
    assert check_witness(power_graph(q), commuting_graph(d), explicit_paper_map(q, d))


def test_identity_map():
    g = commuting_graph(dihedral(3))
    assert check_witness(g, g, {v: v for v in g.vertices})


def test_paper_map_fails_on_power_graph_of_q12():
    q, d = dicyclic(3), dihedral(3)
    pow_q, com_d = power_graph(q), commuting_graph(d)
    f = explicit_paper_map(q, d)
    assert not check_witness(pow_q, com_d, f)
    # the failing pairs are exactly the two missing rotation edges
    back = {v: k for k, v in f.items()}
    missing = [(u, v) for u, v in com_d.edges() if not pow_q.has_edge(back[u], back[v])]
    assert missing == [("a^2", "a^3"), ("a^3", "a^4")]


def test_non_bijection_raises():
    g = complete_graph("ab")
    with pytest.raises(StructureError):
        check_witness(g, g, {"a": "a", "b": "a"})
    with pytest.raises(StructureError):
        check_witness(g, g, {"a": "a"})


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_check_witness_symmetric_under_inverse(m):
    q, d = dicyclic(m), dihedral(m)
    f = explicit_paper_map(q, d)
    inv = {v: k for k, v in f.items()}
    for g1 in (power_graph(q), enhanced_power_graph(q)):
        g2 = commuting_graph(d)
        assert check_witness(g1, g2, f) == check_witness(g2, g1, inv)


# -- fingerprints --------------------------------------------------------------------------


def test_fingerprints_of_theorem_one_pair_agree():
    q, d = generalized_quaternion(4), dihedral(8)
    assert fingerprint(power_graph(q)) == fingerprint(commuting_graph(d))


def test_fingerprint_two_k2_vs_path():
    fp1, fp2 = fingerprint(union(complete_graph("ab"), complete_graph("ab"))), fingerprint(path(4))
    assert fp1.degree_sequence == (1, 1, 1, 1) and fp2.degree_sequence == (2, 2, 1, 1)
    # 2 vs 3 edges, and edge count is compared first
    assert compare_fingerprints(fp1, fp2) == (CertificateKind.EDGE_COUNT, [2, 3])
    # a star and a path on 4 vertices share the edge count but not the degrees
    star = LabeledGraph("abcd", [("a", "b"), ("a", "c"), ("a", "d")])
    assert compare_fingerprints(fingerprint(star), fp2)[0] is CertificateKind.DEGREE_SEQUENCE


def test_fingerprint_q12_edge_count():
    diff = compare_fingerprints(fingerprint(power_graph(dicyclic(3))), fingerprint(commuting_graph(dihedral(3))))
    assert diff == (CertificateKind.EDGE_COUNT, [28, 30])


def test_fingerprint_triangle_count_separates_hexagon():
    outcome = find_isomorphism(cycle(6), union(cycle(3), cycle(3)))
    assert outcome.certificate is CertificateKind.TRIANGLE_COUNT
    assert outcome.detail == [0, 2]
    assert validate_certificate(cycle(6), union(cycle(3), cycle(3)), outcome)


def test_refinement_certificate():
    # same degree sequence, different neighbour-degree profile
    # path on 5 vertices vs triangle plus an edge
    a = path(5)
    b = LabeledGraph("abcde", [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e")])
    assert a.degree_sequence() == b.degree_sequence()
    outcome = find_isomorphism(a, b)
    assert outcome.certificate is CertificateKind.REFINEMENT_PARTITION
    assert validate_certificate(a, b, outcome)
    assert not brute_force_isomorphic(a, b)


# -- search ---------------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(2, 7))
def test_theorem_one_pairs_isomorphic(n):
    q = generalized_quaternion(n)
    g1, g2 = power_graph(q), commuting_graph(dihedral(q.parameter))
    outcome = find_isomorphism(g1, g2)
    assert outcome.is_isomorphic
    assert check_witness(g1, g2, outcome.witness)


@pytest.mark.parametrize("m", [3, 5, 6])
def test_theorem_two_pairs(m):
    q, d = dicyclic(m), dihedral(m)
    com = commuting_graph(d)
    yes = find_isomorphism(enhanced_power_graph(q), com)
    assert yes.is_isomorphic and check_witness(enhanced_power_graph(q), com, yes.witness)
    no = find_isomorphism(power_graph(q), com)
    assert no.certificate is CertificateKind.EDGE_COUNT
    assert no.detail[0] < no.detail[1] == m * (2 * m - 1) + 5 * m
    assert validate_certificate(power_graph(q), com, no)


def test_shuffled_self_isomorphic():
    rng = seeded(3)
    g = commuting_graph(dihedral(6))
    h, _ = shuffled_copy(rng, g)
    outcome = find_isomorphism(g, h)
    assert outcome.is_isomorphic and check_witness(g, h, outcome.witness)


def test_exhausted_search_and_budget():
    g1, g2 = cycle(8), union(cycle(4), cycle(4))
    outcome = find_isomorphism(g1, g2)
    assert outcome.certificate is CertificateKind.EXHAUSTED_SEARCH
    assert validate_certificate(g1, g2, outcome)
    with pytest.raises(SearchBudgetExceeded):
        find_isomorphism(g1, g2, node_budget=2)


def test_empty_graphs():
    e = LabeledGraph([])
    assert find_isomorphism(e, e).witness == {}


def test_witness_is_deterministic():
    q = generalized_quaternion(5)
    g1, g2 = power_graph(q), commuting_graph(dihedral(q.parameter))
    assert find_isomorphism(g1, g2).witness == find_isomorphism(g1, g2).witness


def test_witness_json_sorted():
    q = generalized_quaternion(2)
    obj = find_isomorphism(power_graph(q), commuting_graph(dihedral(2))).to_json_obj()
    assert list(obj) == sorted(obj)


def _pairs(seed, count):
    rng = seeded(seed)
    for k in range(count):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5, 0.65]))
        mode = k % 3
        if mode == 0:
            h, _ = shuffled_copy(rng, g)
        elif mode == 1:
            # same vertex and edge counts, otherwise random
            h = random_graph(rng, n, 0.5, prefix="w")
            while h.edge_count != g.edge_count and n > 1:
                h = random_graph(rng, n, g.edge_count / max(1, n * (n - 1) / 2), prefix="w")
        else:
            # one edge switch on a shuffled copy keeps the degree sequence often
            h, _ = shuffled_copy(rng, g)
            edges = h.edges()
            if len(edges) >= 2:
                (a, b), (c, d) = rng.sample(edges, 2)
                if len({a, b, c, d}) == 4 and not h.has_edge(a, d) and not h.has_edge(c, b):
                    keep = [e for e in edges if e not in {(a, b), (c, d)}]
                    h = LabeledGraph(h.vertices, keep + [(a, d), (c, b)])
        yield g, h


def test_agrees_with_brute_force_small_graphs():
    counts = {True: 0, False: 0}
    for g, h in _pairs(11, 600):
        expected = brute_force_isomorphic(g, h)
        outcome = find_isomorphism(g, h)
        assert outcome.is_isomorphic == expected
        assert validate_certificate(g, h, outcome)
        counts[expected] += 1
    assert counts[True] > 100 and counts[False] > 100


def test_agrees_with_networkx():
    for g, h in _pairs(5, 300):
        nx1, nx2 = nx.Graph(), nx.Graph()
        nx1.add_nodes_from(g.vertices), nx1.add_edges_from(g.edges())
        nx2.add_nodes_from(h.vertices), nx2.add_edges_from(h.edges())
        assert find_isomorphism(g, h).is_isomorphic == nx.is_isomorphic(nx1, nx2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.floats(0.0, 1.0), st.integers(0, 2**32))
def test_fingerprint_invariant_under_relabelling(n, p, seed):
    rng = seeded(seed)
    g = random_graph(rng, n, p)
    h, _ = shuffled_copy(rng, g)
    assert fingerprint(g) == fingerprint(h)
    outcome = find_isomorphism(g, h)
    assert outcome.is_isomorphic and check_witness(g, h, outcome.witness)


def test_regular_graphs_relabelled():
    # vertex-transitive graphs give refinement nothing to split on
    rng = seeded(9)
    for g in (cycle(40), union(cycle(5), cycle(5), cycle(7)), commuting_graph(dihedral(16))):
        h, _ = shuffled_copy(rng, g)
        outcome = find_isomorphism(g, h)
        assert outcome.is_isomorphic and check_witness(g, h, outcome.witness)
