import numpy as np
import pytest

from multichains.poset import (
    CycleError,
    Poset,
    PosetError,
    all_chains,
    format_poset,
    longest_chain_length,
    maximal_chains,
    order_complex,
    parse_poset,
    poset_from_cover_relations,
    read_poset,
)


def test_chain_transitive_closure():
    P = poset_from_cover_relations([1, 2, 3], [(1, 2), (2, 3)])
    assert P.le(P.index(1), P.index(3))
    assert P.is_chain(range(3))
    assert longest_chain_length(P) == 2


def test_antichain_has_only_singleton_chains():
    P = Poset.antichain(3)
    assert P.is_antichain()
    assert maximal_chains(P) == [(0,), (1,), (2,)]
    assert longest_chain_length(P) == 0


def test_cycle_rejected_with_witness():
    with pytest.raises(CycleError) as e:
        poset_from_cover_relations("abc", [("a", "b"), ("b", "c"), ("c", "a")])
    cyc = e.value.cycle
    assert cyc[0] == cyc[-1] and set(cyc) == {"a", "b", "c"}


def test_non_antisymmetric_matrix_rejected():
    with pytest.raises(PosetError):
        Poset(["x", "y"], np.ones((2, 2), dtype=bool))


def test_non_transitive_matrix_rejected():
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[1, 2] = True
    with pytest.raises(PosetError):
        Poset("abc", leq)


def test_index_order_is_linear_extension():
    P = parse_poset("c < b\nb < a\n")
    assert [str(x) for x in P.labels] == ["c", "b", "a"]
    n = len(P)
    assert all(not P.le(j, i) for i in range(n) for j in range(i + 1, n))


def test_parse_comments_isolated_and_runs():
    text = "# a comment\nx < y < z\nw\n\n  # indented comment\n"
    P = parse_poset(text)
    assert sorted(map(str, P.labels)) == ["w", "x", "y", "z"]
    assert P.le(P.index("x"), P.index("z"))
    assert not P.comparable(P.index("w"), P.index("x"))


def test_parse_rejects_garbage():
    with pytest.raises(PosetError):
        parse_poset("a <")


def test_format_roundtrip(tmp_path, posets_extra):
    for P in posets_extra.values():
        f = tmp_path / "p.txt"
        f.write_text(format_poset(P))
        Q = read_poset(f)
        assert [str(x) for x in Q.labels] == [str(x) for x in P.labels]
        assert np.array_equal(Q.leq, P.leq)


def test_diamond_chains(posets):
    D = posets["diamond"]
    assert len(maximal_chains(D)) == 2
    assert len(all_chains(D)) == 4 + 5 + 2


def test_order_complex_of_crown_is_circle(posets_extra):
    K = order_complex(posets_extra["crown"])
    assert K.f_vector() == (4, 4)
    assert K.euler_characteristic() == 0


def test_as_chain_rejects_incomparable():
    P = Poset.antichain(2)
    with pytest.raises(PosetError):
        P.as_chain([0, 1])


def test_leq_is_read_only(c3):
    with pytest.raises(ValueError):
        c3.leq[0, 2] = False
