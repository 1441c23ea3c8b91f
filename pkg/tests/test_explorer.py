import itertools
import json
import re

import networkx as nx
import numpy as np
import pytest

from conftest import universe
from oracles import fraction_profile, greatest, leaf_split_universe, least, majorizes
from imbalance.balancing import meet
from imbalance.explorer import (
    SizeCapError,
    build_poset,
    check_lattice,
    check_modularity,
    count_sequences,
    enumerate_sequences,
    export_dot,
)
from imbalance.order import OrderRelation, compare
from imbalance.words import CodeError, PathLengthSequence

S = PathLengthSequence


def test_enumerate_examples():
    assert enumerate_sequences(3) == [S((1, 2, 2))]
    assert enumerate_sequences(1) == [S((0,))]
    assert enumerate_sequences(5) == [S((1, 2, 3, 4, 4)), S((1, 3, 3, 3, 3)), S((2, 2, 2, 3, 3))]
    with pytest.raises(CodeError):
        enumerate_sequences(0)


def test_counts():
    assert count_sequences(3) == 1
    assert count_sequences(4) == 2
    assert count_sequences(7) == len(leaf_split_universe(7))


@pytest.mark.parametrize("t", range(1, 13))
def test_dual_enumerators_agree(t):
    seqs = enumerate_sequences(t)
    assert seqs == sorted(seqs)
    assert len(set(seqs)) == len(seqs)
    assert {s.lengths for s in seqs} == leaf_split_universe(t)


def test_counts_monotone():
    counts = [count_sequences(t) for t in range(1, 14)]
    assert all(c >= 1 for c in counts)
    assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_small_posets():
    p3 = build_poset(3)
    assert p3.elements == (S((1, 2, 2)),) and p3.covers == () and p3.bottom == p3.top == 0

    p4 = build_poset(4)
    assert [p4.elements[i] for i in p4.covers[0]] == [S((2, 2, 2, 2)), S((1, 2, 3, 3))]
    assert len(p4.covers) == 1

    p5 = build_poset(5)
    chain = [S((2, 2, 2, 3, 3)), S((1, 3, 3, 3, 3)), S((1, 2, 3, 4, 4))]
    assert sorted((p5.elements[i], p5.elements[j]) for i, j in p5.covers) == sorted(zip(chain, chain[1:]))
    assert p5.elements[p5.bottom] == chain[0] and p5.elements[p5.top] == chain[-1]


@pytest.mark.parametrize("t", range(1, 11))
def test_poset_sanity(t):
    p = build_poset(t)
    n = p.count
    for i, j in itertools.product(range(n), repeat=2):
        rel = compare(p.elements[i], p.elements[j])
        assert p.le(i, j) == (rel in (OrderRelation.EQUAL, OrderRelation.FIRST_MORE_BALANCED))
    # covers close back up to the relation
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(p.covers)
    closure = nx.transitive_closure_dag(g)
    for i, j in itertools.product(range(n), repeat=2):
        assert p.le(i, j) == (i == j or closure.has_edge(i, j))
    # and the covers are exactly the reduction
    full = nx.DiGraph([(i, j) for i, j in itertools.product(range(n), repeat=2) if i != j and p.le(i, j)])
    full.add_nodes_from(range(n))
    assert set(nx.transitive_reduction(full).edges()) == set(p.covers)
    assert all(p.le(p.bottom, j) and p.le(j, p.top) for j in range(n))


def test_extremes_are_most_and_least_balanced():
    for t in range(2, 12):
        p = build_poset(t)
        bottom, top = p.elements[p.bottom], p.elements[p.top]
        assert top.lengths == tuple(range(1, t)) + (t - 1,)
        assert max(bottom) - min(bottom) <= 1


@pytest.mark.parametrize("t", [1, 7, 9])
def test_check_lattice(t):
    report = check_lattice(build_poset(t))
    assert report.is_lattice
    assert not report.criterion_failures


def test_lattice_tables_match_meet_and_oracle():
    for t in range(1, 10):
        p = build_poset(t)
        report = check_lattice(p, witnesses=False)
        u = [s.lengths for s in p.elements]
        for i, j in itertools.product(range(p.count), repeat=2):
            x, y = p.elements[i], p.elements[j]
            assert p.elements[report.meet_table[i, j]] == meet(x, y).meet
            if t <= 8:
                ups = [s for s in u if majorizes(x.lengths, s) and majorizes(y.lengths, s)]
                assert p.elements[report.join_table[i, j]].lengths == least(ups)


def test_criterion_witness_detects_a_broken_poset():
    p = build_poset(7)
    # erase every relation except reflexivity: no pair has a lower bound any more
    broken = type(p)(p.size, p.elements, np.eye(p.count, dtype=np.uint8), (), p.bottom, p.top)
    report = check_lattice(broken)
    assert not report.is_lattice
    assert report.missing_meets and report.missing_joins


def test_modularity_survey():
    for t in range(1, 6):
        assert check_modularity(build_poset(t)).modular
    first_bad = None
    for t in range(1, 10):
        rep = check_modularity(build_poset(t))
        if not rep.modular:
            first_bad = rep
            break
    assert first_bad is not None and first_bad.size == 8
    x, y, z = (s.lengths for s in first_bad.witness)
    u = [s.lengths for s in universe(8)]

    def glb(a, b):
        return greatest([s for s in u if majorizes(s, a) and majorizes(s, b)])

    def lub(a, b):
        return least([s for s in u if majorizes(a, s) and majorizes(b, s)])

    assert majorizes(x, z)
    assert lub(x, glb(y, z)) != glb(lub(x, y), z)


def test_modularity_requires_complete_tables():
    p = build_poset(7)
    broken = type(p)(p.size, p.elements, np.eye(p.count, dtype=np.uint8), (), p.bottom, p.top)
    with pytest.raises(ValueError):
        check_modularity(broken)


def parse_dot(text):
    assert text.startswith("digraph ") and text.rstrip().endswith("}")
    assert text.count("{") == text.count("}")
    nodes = re.findall(r'^\s*"([^"]+)";$', text, flags=re.M)
    edges = re.findall(r'^\s*"([^"]+)" -> "([^"]+)";$', text, flags=re.M)
    return nodes, edges


def test_export_dot():
    nodes, edges = parse_dot(export_dot(build_poset(4)))
    assert sorted(nodes) == ["1,2,3,3", "2,2,2,2"]
    assert edges == [("2,2,2,2", "1,2,3,3")]
    assert parse_dot(export_dot(build_poset(3))) == (["1,2,2"], [])
    assert parse_dot(export_dot(build_poset(1))) == (["0"], [])
    dot = export_dot(build_poset(9))
    nodes, edges = parse_dot(dot)
    assert len(nodes) == 28 and len(edges) == len(build_poset(9).covers)
    assert '{ rank=min; "3,3,3,3,3,3,3,4,4"; }' in dot


def test_structured_export():
    p = build_poset(5)
    doc = json.loads(p.to_json())
    assert doc == {
        "size": 5,
        "count": 3,
        "elements": [[1, 2, 3, 4, 4], [1, 3, 3, 3, 3], [2, 2, 2, 3, 3]],
        "covers": [[1, 0], [2, 1]],
        "bottom": 2,
        "top": 0,
    }


def test_size_cap():
    with pytest.raises(SizeCapError):
        build_poset(17)
    with pytest.raises(SizeCapError):
        build_poset(6, max_size=5)
    assert build_poset(6, max_size=6).count == 5


def test_profiles_fit_dyadic_scale():
    # profiles of each element use denominators up to 2**(t-1) only
    for s in universe(9):
        assert all(f.denominator <= 2**8 for f in fraction_profile(s.lengths))
