import itertools

import pytest

from rightsvocab import (
    BlankNode,
    Graph,
    Iri,
    Literal,
    Triple,
    graphs_isomorphic,
    parse_turtle,
    serialize_turtle,
)
from rightsvocab.isomorphism import MAX_BLANK_NODES, IsomorphismLimitError

EX = "http://example.org/"


def _relabel(g: Graph, suffix="_renamed") -> Graph:
    def ren(t):
        return BlankNode(t.label + suffix) if isinstance(t, BlankNode) else t

    return Graph(Triple(ren(t.subject), t.predicate, ren(t.object)) for t in g)


def test_identity(ic_edu_graph):
    assert graphs_isomorphic(ic_edu_graph, ic_edu_graph)


def test_relabeled_blank_nodes(ic_edu_graph):
    assert graphs_isomorphic(ic_edu_graph, _relabel(ic_edu_graph))


def test_one_triple_mutation_detected(ic_edu_graph):
    victim = next(
        t for t in ic_edu_graph
        if t.predicate.value.endswith("/operator")
    )
    mutated = Graph(t for t in ic_edu_graph if t != victim)
    assert not graphs_isomorphic(ic_edu_graph, mutated)


def test_differing_ground_triples():
    a = Graph([Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("x"))])
    b = Graph([Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("y"))])
    assert not graphs_isomorphic(a, b)


def test_symmetric_and_reflexive_over_fixtures(ic_edu_graph, vocabulary_graph):
    for g in (ic_edu_graph, vocabulary_graph):
        assert graphs_isomorphic(g, g)
        relabeled = _relabel(g)
        assert graphs_isomorphic(g, relabeled)
        assert graphs_isomorphic(relabeled, g)


def test_structure_difference_with_equal_signature_counts():
    # two chains vs one chain and one fork need real backtracking
    def chain(n1, n2, n3):
        return [
            Triple(n1, Iri(EX + "p"), n2),
            Triple(n2, Iri(EX + "p"), n3),
        ]

    a1, a2, a3, a4 = (BlankNode(f"a{i}") for i in range(4))
    b1, b2, b3, b4 = (BlankNode(f"b{i}") for i in range(4))
    a = Graph(chain(a1, a2, a3) + [Triple(a3, Iri(EX + "p"), a4)])
    b = Graph(chain(b1, b2, b3) + [Triple(b2, Iri(EX + "p"), b4)])
    assert not graphs_isomorphic(a, b)


def test_blank_node_limit():
    ids = itertools.count()
    triples = [
        Triple(BlankNode(f"x{next(ids)}"), Iri(EX + "p"), BlankNode(f"x{next(ids)}"))
        for _ in range(MAX_BLANK_NODES)
    ]
    g = Graph(triples)
    with pytest.raises(IsomorphismLimitError):
        graphs_isomorphic(g, g)


def test_round_trip_uses_isomorphism(vocabulary_graph):
    assert graphs_isomorphic(
        vocabulary_graph, parse_turtle(serialize_turtle(vocabulary_graph))
    )
