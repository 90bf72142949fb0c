import json
from pathlib import Path

import pytest

from rightsvocab import Graph, Iri, Literal, Triple, load_vocabulary, parse_turtle
from rightsvocab.model import BlankNode
from rightsvocab.namespaces import RDF_TYPE
from rightsvocab.site import generate_site

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def ic_edu_text():
    return fixture_text("ic_edu_statement.ttl")


@pytest.fixture(scope="session")
def ic_edu_graph(ic_edu_text):
    return parse_turtle(ic_edu_text)


@pytest.fixture(scope="session")
def vocabulary_graph():
    return parse_turtle(fixture_text("vocabulary.ttl"))


@pytest.fixture(scope="session")
def vocabulary(vocabulary_graph):
    vocab, report = load_vocabulary(vocabulary_graph)
    assert report.accepted, report.errors
    return vocab


@pytest.fixture(scope="session")
def manifest(vocabulary):
    return generate_site(vocabulary)


def jsonld_walk(text: str) -> Graph:
    """Independent JSON-LD reconstruction using only a generic JSON reader."""
    doc = json.loads(text)
    ctx = doc["@context"]

    def expand(term: str) -> str:
        if ":" in term:
            prefix, local = term.split(":", 1)
            if prefix in ctx:
                return ctx[prefix] + local
        return term

    def node_term(node_id: str):
        if node_id.startswith("_:"):
            return BlankNode(node_id[2:])
        return Iri(node_id)

    triples = set()
    for node in doc.get("@graph", []):
        subject = node_term(node["@id"])
        for key, values in node.items():
            if key == "@id":
                continue
            if key == "@type":
                for v in values:
                    triples.add(Triple(subject, Iri(RDF_TYPE), Iri(expand(v))))
                continue
            pred = Iri(expand(key))
            for v in values:
                if "@id" in v:
                    obj = node_term(v["@id"])
                else:
                    dt = v.get("@type")
                    obj = Literal(
                        v["@value"],
                        lang=v.get("@language"),
                        datatype=Iri(expand(dt)) if dt else None,
                    )
                triples.add(Triple(subject, pred, obj))
    return Graph(triples)
