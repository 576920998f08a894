"""Tests for the graph6 codec and sidecar files."""

import json

import networkx as nx
import pytest

from src.exceptions import ParseError
from src.extremal.constructions import build_F
from src.graphs.core import BipartiteGraph, Graph
from src.graphs.generators import complete, complete_bipartite, cycle, philox, random_graph
from src.graphs.graph6 import (
    decode_graph6,
    encode_graph6,
    read_graph,
    sidecar_path,
    to_graph6_str,
    write_graph,
)


def nx_bytes(g: Graph) -> bytes:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, nodes=list(range(g.order)), header=False).strip()


class TestEncode:
    """Bit-exact encoding."""

    def test_known_records(self):
        assert to_graph6_str(Graph.empty(0)) == "?"
        assert to_graph6_str(complete(3)) == "Bw"
        assert to_graph6_str(Graph.empty(2)) == "A?"
        assert to_graph6_str(complete(2)) == "A_"

    def test_matches_networkx(self):
        """Encoding agrees with networkx byte for byte."""
        for index in range(100):
            rng = philox(5, index)
            g = random_graph(int(rng.integers(1, 14)), 0.4, rng)

            assert encode_graph6(g) == nx_bytes(g)

    def test_four_byte_order_field(self):
        g = cycle(70)
        data = encode_graph6(g)

        assert data[0] == 126
        assert data == nx_bytes(g)
        assert decode_graph6(data) == g


class TestDecode:
    """Decoding and its error reporting."""

    def test_roundtrip_with_header(self):
        assert decode_graph6(">>graph6<<Bw\n") == complete(3)

    def test_byte_out_of_range(self):
        with pytest.raises(ParseError) as info:
            decode_graph6(b"B!")

        assert info.value.offset == 1

    def test_wrong_length(self):
        with pytest.raises(ParseError):
            decode_graph6("B")
        with pytest.raises(ParseError):
            decode_graph6("Bww")

    def test_nonzero_padding(self):
        # order 2 uses one bit; the other five must be zero
        with pytest.raises(ParseError):
            decode_graph6("A`")

    def test_truncated_order_field(self):
        with pytest.raises(ParseError):
            decode_graph6("~??")

    def test_offsets_count_the_header(self):
        with pytest.raises(ParseError) as empty:
            decode_graph6(b">>graph6<<")
        with pytest.raises(ParseError) as truncated:
            decode_graph6(b">>graph6<<~??")

        assert empty.value.offset == 10
        assert truncated.value.offset == 13

    def test_empty_record(self):
        with pytest.raises(ParseError):
            decode_graph6("")


class TestFiles:
    """graph6 files with JSON sidecars."""

    def test_bipartite_sidecar(self, tmp_path):
        construction = build_F(6, 6, 1, 2)
        target = tmp_path / "f.g6"
        meta = write_graph(target, construction.host, construction.params, list(construction.region_of))
        loaded = read_graph(target)

        assert meta == sidecar_path(target)
        assert isinstance(loaded, BipartiteGraph)
        assert loaded.graph == construction.graph
        assert loaded.x_mask == (1 << 6) - 1

    def test_plain_file_without_sidecar(self, tmp_path):
        target = tmp_path / "c.g6"
        target.write_text(to_graph6_str(cycle(5)) + "\n")

        assert read_graph(target) == cycle(5)

    def test_sidecar_order_mismatch(self, tmp_path):
        target = tmp_path / "c.g6"
        write_graph(target, cycle(5))
        target.write_text(to_graph6_str(cycle(6)) + "\n")

        with pytest.raises(ParseError):
            read_graph(target)

    def test_empty_file(self, tmp_path):
        target = tmp_path / "e.g6"
        target.write_text("\n")

        with pytest.raises(ParseError):
            read_graph(target)

    def test_first_record_of_multi_line_file(self, tmp_path):
        target = tmp_path / "many.g6"
        target.write_text("".join(to_graph6_str(cycle(n)) + "\n" for n in range(3, 7)))

        assert read_graph(target) == cycle(3)

    def test_sidecar_x_vertex_out_of_range(self, tmp_path):
        target = tmp_path / "k.g6"
        write_graph(target, complete_bipartite(2, 2))
        meta = sidecar_path(target)
        data = json.loads(meta.read_text())
        data["bipartite"]["x"] = [0, 4]
        meta.write_text(json.dumps(data))

        with pytest.raises(ParseError, match="outside 0..3"):
            read_graph(target)
