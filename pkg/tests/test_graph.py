import pytest

from strongcoal.graph import (
    FamilyGParams,
    Graph,
    GraphParseError,
    VertexSet,
    complete,
    cycle,
    degree_stats,
    family_g,
    from_spec,
    generate,
    parse_edge_list,
    path,
    random_graph,
    sample_graphs,
    star,
    write_edge_list,
)


def test_parse_path():
    g = parse_edge_list("4 3\n1 2\n2 3\n3 4")
    assert g.n == 4
    assert g.degrees == (1, 2, 2, 1)
    assert g == path(4)


def test_parse_k1_and_k3():
    assert parse_edge_list("1 0").n == 1
    k3 = parse_edge_list("3 3\n1 2\n2 3\n1 3")
    assert k3.degrees == (2, 2, 2)
    assert k3 == complete(3)


def test_parse_comments_and_duplicates():
    g = parse_edge_list("# a comment\n3 3\n1 2\n# mid\n2 1\n2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("4\n1 2", 1),
        ("3 1\n1 4", 2),
        ("3 1\n2 2", 2),
        ("3 2\n1 2\nx y", 3),
        ("3 1\n1 2\n2 3", 3),
    ],
)
def test_parse_errors_name_the_line(text, lineno):
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_parse_too_few_edges():
    with pytest.raises(GraphParseError):
        parse_edge_list("3 2\n1 2")


@pytest.mark.parametrize(
    "spec", ["path:7", "cycle:9", "complete:5", "complete_bipartite:4,3", "star:5", "friendship:3", "family_g:2,1,2"]
)
def test_round_trip(spec):
    g = from_spec(spec)
    text = write_edge_list(g)
    assert parse_edge_list(text) == g
    assert write_edge_list(parse_edge_list(text)) == text


def test_degree_stats():
    assert degree_stats(star(4)) == (1, 4, VertexSet.of(5, [0]))
    assert degree_stats(cycle(5)) == (2, 2, VertexSet.empty(5))
    assert degree_stats(complete(3)).universal_vertices == VertexSet.full(3)


def test_path_and_cycle_shapes():
    for n in range(2, 12):
        assert path(n).degrees.count(1) == 2
    for n in range(3, 12):
        assert set(cycle(n).degrees) == {2}


def test_family_g_small_cases():
    assert family_g(2, 1, 0) == complete(3)
    two_k3 = family_g(0, 0, 3)
    assert two_k3.n == 6 and set(two_k3.degrees) == {2} and not two_k3.is_connected()
    # r = s = p = 1 expands to x1 - u1 - v1 - w1
    g = family_g(1, 1, 1)
    assert sorted(g.edges()) == sorted([(0, 1), (0, 2), (1, 3)])
    assert sorted(g.degrees) == [1, 1, 2, 2]
    relabel = [2, 0, 1, 3]  # x1, u1, v1, w1 in path order
    assert all(relabel[i + 1] in g.adjacency[relabel[i]] for i in range(3))


@pytest.mark.parametrize("r,s,p", [(r, s, p) for r in range(4) for s in range(4) for p in range(4) if r + s + 2 * p >= 1])
def test_family_g_degrees(r, s, p):
    g = family_g(r, s, p)
    assert g.n == r + s + 2 * p
    for j in range(r):
        assert g.degrees[j] == r + s - 1 + p
    for j in range(s):
        assert g.degrees[r + j] == r + s - 1 + p
    for i in range(p):
        assert g.degrees[r + s + i] == p - 1 + r
        assert g.degrees[r + s + p + i] == p - 1 + s


def test_family_g_params_validation():
    assert FamilyGParams(1, 2, 3).order == 9
    with pytest.raises(ValueError):
        FamilyGParams(0, 0, 0)
    with pytest.raises(ValueError):
        FamilyGParams(-1, 2, 0)


@pytest.mark.parametrize("bad", [("cycle", 2), ("path", 0), ("friendship", 0), ("nope", 1), ("path", 1, 2)])
def test_generate_rejects(bad):
    with pytest.raises(ValueError):
        generate(*bad)


def test_friendship_and_star_orders():
    f3 = from_spec("friendship:3")
    assert f3.n == 7 and f3.degrees[0] == 6 and set(f3.degrees[1:]) == {2}
    assert star(4).n == 5


def test_graph_invariants_enforced():
    row = VertexSet.of(2, [1])
    with pytest.raises(ValueError):
        Graph(2, (row, VertexSet.empty(2)))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])


def test_vertexset_algebra():
    a = VertexSet.of(6, [0, 2, 4])
    b = VertexSet.of(6, [2, 3])
    assert len(a | b) + len(a & b) == len(a) + len(b)
    assert list(a - b) == [0, 4]
    assert a.complement() == VertexSet.of(6, [1, 3, 5])
    assert 2 in a and 3 not in a and 9 not in a
    assert a.one_based() == [1, 3, 5]
    with pytest.raises(ValueError):
        VertexSet(3, 0b1000)
    with pytest.raises(ValueError):
        a | VertexSet.empty(5)


def test_vertexset_large_universe():
    big = VertexSet.of(100, [0, 70, 99])
    assert list(big) == [0, 70, 99]
    assert len(big.complement()) == 97


def test_random_sampling_is_seeded():
    assert random_graph(8, 0.5, 3) == random_graph(8, 0.5, 3)
    a = sample_graphs(5, 7, seed=11, connected=True, no_universal=True)
    b = sample_graphs(5, 7, seed=11, connected=True, no_universal=True)
    assert a == b
    for g in a:
        assert g.is_connected()
        assert not degree_stats(g).universal_vertices
