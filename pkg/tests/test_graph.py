import pytest
import networkx as nx

from chromagap.config.exceptions import ConfigValidationError, GraphFormatError, InputFormatError, InvalidEdgeError
from chromagap.graph import (
    c4,
    catalog,
    contract,
    format_edge_list,
    four_cycles_through,
    from_edge_list,
    from_graph6,
    from_networkx,
    generate,
    is_chordal,
    parse_edge_list,
    read_edge_list,
    to_graph6,
    to_networkx,
    triangle_count,
    triangles_through,
)
from chromagap.graph.formats import read_graph6_file
from chromagap.nbc import iter_cycles


class TestGraphConstruction:

    def test_edges_are_canonical(self):
        """Pairs are oriented u < v, sorted and deduplicated"""
        g = from_edge_list(4, [(2, 1), (0, 3), (1, 2), (0, 1)])
        assert g.edges == ((0, 1), (0, 3), (1, 2))
        assert g.m == 3
        assert g.edge_ref(2, 1) == 2

    def test_loop_rejected(self):
        with pytest.raises(GraphFormatError):
            from_edge_list(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphFormatError):
            from_edge_list(3, [(0, 3)])

    def test_check_edge_range(self, k3):
        assert k3.check_edge(2) == (1, 2)
        with pytest.raises(InvalidEdgeError):
            k3.check_edge(3)
        with pytest.raises(InvalidEdgeError):
            k3.edge_ref(0, 0)

    def test_components_and_forest(self):
        g = from_edge_list(5, [(0, 1), (1, 2), (3, 4)])
        assert g.components() == [[0, 1, 2], [3, 4]]
        assert g.is_forest()
        assert not g.is_connected()

    def test_networkx_labels_are_kept(self):
        g = from_networkx(nx.Graph([("b", "a"), ("a", "c")]))
        assert g.labels == ("a", "b", "c")
        assert g.edges == ((0, 1), (0, 2))
        assert g.vertex_label(1) == "b"


class TestEdgeListFormat:

    def test_parse_with_comments(self):
        g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2  # closing\n0 2\n")
        assert g.edges == ((0, 1), (0, 2), (1, 2))

    def test_edge_count_mismatch_reports_line(self):
        with pytest.raises(GraphFormatError) as info:
            parse_edge_list("3 2\n0 1\n")
        assert info.value.line == 2

    def test_bad_edge_line(self):
        with pytest.raises(GraphFormatError) as info:
            parse_edge_list("3 2\n0 1\n1 x\n")
        assert info.value.line == 3

    def test_self_loop_line(self):
        with pytest.raises(GraphFormatError):
            parse_edge_list("2 1\n1 1\n")

    def test_format_parses_back(self, k4):
        assert parse_edge_list(format_edge_list(k4)) == k4

    def test_file_not_utf8(self, tmp_path):
        path = tmp_path / "bad.edges"
        path.write_bytes(b"3 1\n0 1\n\xff\n")
        with pytest.raises(InputFormatError) as info:
            read_edge_list(path)
        assert (info.value.line, info.value.offset) == (3, 8)


class TestGraph6:

    @pytest.mark.parametrize("text,n,edges", [
        ("A_", 2, ((0, 1),)),
        ("A?", 2, ()),
        ("B_", 3, ((0, 1),)),
        ("Bw", 3, ((0, 1), (0, 2), (1, 2))),
    ])
    def test_known_strings(self, text, n, edges):
        g = from_graph6(text)
        assert (g.n, g.edges) == (n, edges)

    def test_header_is_accepted(self):
        assert from_graph6(">>graph6<<Bw").m == 3

    def test_decodes_networkx_encoding(self, small_connected):
        for g in small_connected:
            data = nx.to_graph6_bytes(to_networkx(g), header=False).strip()
            assert from_graph6(data) == g
            assert to_graph6(g) == data.decode()

    def test_long_size_field(self):
        g = generate("path:70")
        text = to_graph6(g)
        assert text.startswith("~")
        assert from_graph6(text) == g

    def test_truncated(self):
        with pytest.raises(GraphFormatError):
            from_graph6("D")

    def test_invalid_character_offset(self):
        with pytest.raises(GraphFormatError) as info:
            from_graph6("B!")
        assert info.value.offset == 1

    def test_offset_counts_header(self):
        with pytest.raises(GraphFormatError) as info:
            from_graph6(">>graph6<<B!")
        assert info.value.offset == 11

    def test_non_ascii_text_rejected(self):
        """'é' must not be replaced by '?', which is itself a valid graph6 byte"""
        with pytest.raises(GraphFormatError) as info:
            from_graph6("Aé")
        assert info.value.offset == 1

    def test_high_byte_rejected(self):
        with pytest.raises(GraphFormatError) as info:
            from_graph6(b"A\xff")
        assert info.value.offset == 1

    def test_trailing_bytes(self):
        with pytest.raises(GraphFormatError):
            from_graph6("Bww")

    def test_file_reports_bad_line(self, write_file):
        path = write_file("graphs.g6", "Bw\n\nA_\nB!\n")
        with pytest.raises(GraphFormatError) as info:
            read_graph6_file(path)
        assert info.value.line == 4

    def test_file_with_undecodable_line(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_bytes(b"Bw\nA\xff\n")
        with pytest.raises(GraphFormatError) as info:
            read_graph6_file(path)
        assert (info.value.line, info.value.offset) == (2, 1)


class TestContraction:

    def test_contract_k4(self, k4):
        contracted, label_map = contract(k4, 0)
        assert contracted.n == 3
        assert contracted.edges == ((0, 1), (0, 2), (1, 2))
        assert label_map.preimages == ((1, 3), (2, 4), (5,))
        assert label_map.vertex_map == (0, 0, 1, 2)

    def test_edge_count_drops_by_triangles(self, small_connected):
        for g in small_connected:
            for e in range(g.m):
                contracted, _ = contract(g, e)
                assert contracted.m == g.m - 1 - triangles_through(g, e)


class TestStats:

    def test_triangles(self, k4, c4):
        assert triangles_through(k4, 0) == 2
        assert triangle_count(k4) == 4
        assert triangle_count(c4) == 0

    def test_four_cycles(self, k4, c4):
        assert four_cycles_through(c4, 0) == 1
        assert four_cycles_through(k4, 0) == 2

    def test_c4_values(self, k4, k24):
        assert c4(k4) == 2
        assert c4(k24) == 3
        assert c4(generate("path:4")) == 0

    def test_cycles_match_networkx(self, small_connected):
        for g in small_connected:
            ours = list(iter_cycles(g))
            assert len(ours) == len(set(ours))
            assert len(ours) == sum(1 for _ in nx.simple_cycles(to_networkx(g)))


class TestCatalog:

    def test_generators(self):
        assert generate("complete:4").m == 6
        assert generate("cycle:5").m == 5
        assert generate("complete_bipartite:2,4").m == 8
        assert generate("petersen").m == 15
        assert generate("paw").edges == ((0, 1), (0, 2), (1, 2), (2, 3))

    def test_unknown_generator(self):
        with pytest.raises(ConfigValidationError):
            generate("wheel:5")

    def test_generator_arity(self):
        with pytest.raises(ConfigValidationError):
            generate("cycle")

    def test_connected_catalog(self):
        # connected graphs on 1, 2, 3, 4 vertices: 1 + 1 + 2 + 6
        assert len(catalog("connected:4")) == 10
        assert all(g.is_connected() for g in catalog("connected:4"))

    def test_bad_catalog(self):
        with pytest.raises(ConfigValidationError):
            catalog("trees:5")

    def test_chordality(self, k4, c4):
        assert is_chordal(k4)
        assert not is_chordal(c4)
