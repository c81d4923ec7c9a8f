"""Round-trips and parse errors for every text format."""

import random

import numpy as np
import pytest

from bicliquelab.clis import canonical_instance, full_instance
from bicliquelab.corpus import random_graph
from bicliquelab.errors import FormatError
from bicliquelab.formats import (
    read_certificate,
    read_charvectors,
    read_graph,
    read_instance,
    read_matrix,
    read_system,
    write_certificate,
    write_charvectors,
    write_graph,
    write_instance,
    write_matrix,
    write_system,
)
from bicliquelab.graphs import Biclique, BicliqueSystem, Certificate, Graph, star_partition
from bicliquelab.gridgraph import grid_graph, grid_graph_partition
from bicliquelab.oracles import BoolMatrix
from bicliquelab.clis import characteristic_vectors


class TestGraphFormat:
    def test_k3_round_trip(self):
        g = Graph.complete(3)
        assert read_graph(write_graph(g)) == g

    def test_random_round_trips(self):
        rng = random.Random(8)
        for _ in range(10):
            g = random_graph(rng.randrange(1, 12), rng.random(), rng)
            assert read_graph(write_graph(g)) == g

    def test_comments_tolerated(self):
        text = "c a comment\np edge 2 1\nc another\ne 1 2\n"
        assert read_graph(text) == Graph.complete(2)

    def test_truncated_file_names_line(self):
        g = Graph.complete(3)
        text = "".join(write_graph(g).splitlines(keepends=True)[:-1])
        with pytest.raises(FormatError) as err:
            read_graph(text)
        assert err.value.line == 4
        assert "promised" in str(err.value)

    def test_bad_edge_line(self):
        with pytest.raises(FormatError) as err:
            read_graph("p edge 2 1\ne 1 5\n")
        assert err.value.line == 2

    def test_missing_header(self):
        with pytest.raises(FormatError):
            read_graph("e 1 2\n")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(FormatError) as err:
            read_graph("p edge 3 2\ne 1 2\ne 2 1\n")
        assert err.value.line == 3

    def test_writes_deterministic(self):
        g = Graph.cycle(6)
        assert write_graph(g) == write_graph(g)


class TestSystemFormat:
    def test_round_trip_simple(self):
        sys_ = BicliqueSystem(4, (Biclique((0, 1), (2, 3)), Biclique((0, 2), (1, 3))), 2)
        assert read_system(write_system(sys_)) == sys_

    def test_round_trip_grid_partition(self):
        sys_ = grid_graph_partition(2)
        again = read_system(write_system(sys_))
        assert again == sys_
        from bicliquelab.graphs import verify_biclique_system

        assert verify_biclique_system(grid_graph(2), again).verdict

    def test_bad_part_line(self):
        with pytest.raises(FormatError) as err:
            read_system("bicliquesystem 3 1 1\npart 0 1 2\n")
        assert err.value.line == 2

    def test_count_mismatch(self):
        with pytest.raises(FormatError):
            read_system("bicliquesystem 3 2 1\npart 0 : 1\n")


class TestMatrixFormat:
    def test_round_trip(self):
        m = BoolMatrix(np.array([[0, 1, 1], [1, 0, 0]], dtype=np.uint8))
        assert read_matrix(write_matrix(m)) == m

    def test_ragged_rejected(self):
        with pytest.raises(FormatError) as err:
            read_matrix("010\n01\n")
        assert err.value.line == 2

    def test_bad_character(self):
        with pytest.raises(FormatError):
            read_matrix("012\n")


class TestCharVectorFormat:
    def test_round_trip(self):
        vectors = characteristic_vectors(star_partition(Graph.complete(4)))
        assert read_charvectors(write_charvectors(vectors)) == vectors

    def test_bad_vector(self):
        with pytest.raises(FormatError):
            read_charvectors("charvectors 1 3\n0x1\n")


class TestCertificateFormat:
    def test_round_trip(self):
        cert = Certificate(
            claim="demo",
            parameters={"k": 3, "rule": "odd-positive"},
            verdict=False,
            witness={"pair": [1, 2]},
        )
        assert read_certificate(write_certificate(cert)) == cert

    def test_sorted_keys_stable(self):
        cert = Certificate(claim="x", parameters={"b": 1, "a": 2}, verdict=True)
        assert write_certificate(cert) == write_certificate(cert)
        assert write_certificate(cert).index('"a"') < write_certificate(cert).index('"b"')

    def test_bad_json(self):
        with pytest.raises(FormatError):
            read_certificate("{nope")


class TestInstanceFormat:
    def test_round_trip_full(self):
        inst = full_instance(Graph.cycle(4))
        assert read_instance(write_instance(inst)) == inst

    def test_round_trip_canonical(self):
        inst = canonical_instance(star_partition(Graph.complete(4)))
        assert read_instance(write_instance(inst)) == inst

    def test_bad_payload(self):
        with pytest.raises(FormatError):
            read_instance('{"graph": {"order": 1, "edges": []}}')
