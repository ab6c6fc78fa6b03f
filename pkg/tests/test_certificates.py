import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsgraphs.certificates import (
    DisconnectCertificate,
    check_certificate,
    claim_necessary_certificate,
    cut_paths,
    find_disconnect_certificate,
)
from fsgraphs.engine import FsInstance, fs_is_connected
from fsgraphs.errors import ParameterError
from fsgraphs.families import cycle, path, spider, star, tadpole
from fsgraphs.graph import Graph, complement, disjoint_union, min_degree


@st.composite
def graph_pairs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]

    def one():
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])

    return one(), one()


class TestFind:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_cycle_has_none(self, n):
        assert find_disconnect_certificate(FsInstance(cycle(n), star(n))) is None

    def test_claim_example(self):
        x, y = spider((2, 1, 1, 1)), complement(spider((3, 1, 1)))
        cert = find_disconnect_certificate(FsInstance(x, y))
        assert cert is not None and cert.kind == "cut-path"
        assert cert.min_deg_y == 2 and cert.d <= 2
        assert check_certificate(cert, x, y)
        assert not fs_is_connected(FsInstance(x, y))

    @pytest.mark.parametrize("n", [5, 6])
    def test_path_against_star(self, n):
        cert = find_disconnect_certificate(FsInstance(path(n), star(n)))
        assert cert is not None
        assert cert.min_deg_y == 1 and cert.path == (2,)

    def test_disconnected_x(self):
        x = disjoint_union(path(2), path(2))
        cert = find_disconnect_certificate(FsInstance(x, Graph.complete(4)))
        assert cert.kind == "disconnected-X" and cert.path == ()
        assert check_certificate(cert, x, Graph.complete(4))

    def test_disconnected_without_certificate(self):
        # min degree of comp(C6) is 3; the longest bridge path in the spider has 2 vertices
        inst = FsInstance(spider((2, 2, 1)), complement(cycle(6)))
        assert min_degree(inst.y) == 3
        assert max(len(p) for p in cut_paths(inst.x)) == 2
        assert find_disconnect_certificate(inst) is None
        assert not fs_is_connected(inst)

    def test_cycle_edges_are_not_bridges(self):
        # only the tail qualifies; the way around the cycle is not a chain of bridges
        assert cut_paths(tadpole(3, 2)) == [(3,), (3, 4), (4, 3), (4,)]
        assert set(cut_paths(tadpole(4, 3))) == {
            (4,), (5,), (6,), (4, 5), (5, 4), (5, 6), (6, 5), (4, 5, 6), (6, 5, 4)
        }

    def test_json(self):
        cert = find_disconnect_certificate(FsInstance(path(5), star(5)))
        assert cert.to_dict() == {"kind": "cut-path", "path": [2], "d": 1, "min_deg_y": 1}

    @settings(max_examples=300, deadline=None)
    @given(graph_pairs())
    def test_soundness(self, pair):
        x, y = pair
        cert = find_disconnect_certificate(FsInstance(x, y))
        if cert is not None:
            assert check_certificate(cert, x, y)
            assert not fs_is_connected(FsInstance(x, y))


class TestCheck:
    def test_rejects_bad_paths(self):
        x, y = path(5), star(5)
        assert not check_certificate(DisconnectCertificate((1, 2), 1), x, y)  # 1 is a leaf
        assert not check_certificate(DisconnectCertificate((2, 4), 1), x, y)  # not an edge
        assert not check_certificate(DisconnectCertificate((2, 3), 2), x, y)  # wrong min degree
        assert check_certificate(DisconnectCertificate((2, 3, 4), 1), x, y)

    def test_rejects_cycle_chain(self):
        # 3 and 1 are not both cut vertices here, and edges on the cycle are not bridges
        x = tadpole(4, 2)
        assert not check_certificate(DisconnectCertificate((4, 1), 1), x, star(6))


class TestClaim:
    def test_fires(self):
        sig = (2, 1, 1, 1)
        y = complement(spider((3, 1, 1)))
        cert = claim_necessary_certificate(sig, y)
        assert cert is not None
        assert cert.path == (6, 1) and cert.d == 2
        assert check_certificate(cert, spider(sig), y)

    def test_degree_mismatch(self):
        assert claim_necessary_certificate((2, 2, 1, 1), complement(tadpole(3, 4))) is None

    def test_star_complement(self):
        assert claim_necessary_certificate((1, 1, 1, 1), complement(star(5))) is None

    def test_size_mismatch(self):
        with pytest.raises(ParameterError):
            claim_necessary_certificate((2, 1, 1), complement(star(6)))
