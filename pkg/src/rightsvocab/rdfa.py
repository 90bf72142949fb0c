"""RDFa extraction scoped to the markup this toolkit generates.

Recognized attributes: ``prefix``, ``about``, ``typeof``, ``property``,
``resource``, ``content``, ``datatype`` and ``lang``.  An element carrying
``property`` together with ``typeof`` introduces a fresh blank node that
becomes the subject for its descendants; ``lang=""`` suppresses an
inherited language tag.
"""

from __future__ import annotations

import itertools
from html.parser import HTMLParser
from typing import Optional

from .model import BlankNode, Graph, Iri, Literal, Triple
from .namespaces import RDF_TYPE

_VOID = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
}


class RdfaError(ValueError):
    pass


class _Element:
    __slots__ = ("tag", "attrs", "children")

    def __init__(self, tag: str, attrs: dict):
        self.tag = tag
        self.attrs = attrs
        self.children: list = []  # _Element or str


class _TreeBuilder(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.root = _Element("#document", {})
        self.stack = [self.root]

    def handle_starttag(self, tag, attrs):
        el = _Element(tag, dict(attrs))
        self.stack[-1].children.append(el)
        if tag not in _VOID:
            self.stack.append(el)

    def handle_startendtag(self, tag, attrs):
        self.stack[-1].children.append(_Element(tag, dict(attrs)))

    def handle_endtag(self, tag):
        if tag in _VOID:
            return
        if len(self.stack) < 2 or self.stack[-1].tag != tag:
            raise RdfaError(f"mismatched closing tag </{tag}>")
        self.stack.pop()

    def handle_data(self, data):
        self.stack[-1].children.append(data)


def _text_of(el: _Element) -> str:
    out = []
    for child in el.children:
        if isinstance(child, str):
            out.append(child)
        else:
            out.append(_text_of(child))
    return "".join(out)


class _Extractor:
    def __init__(self):
        self.triples: set[Triple] = set()
        self.prefixes: dict[str, str] = {}
        self._fresh = itertools.count()

    def _expand(self, curie: str) -> Iri:
        if ":" in curie:
            prefix, local = curie.split(":", 1)
            if prefix in self.prefixes:
                return Iri(self.prefixes[prefix] + local)
            if "//" in curie:
                return Iri(curie)
            raise RdfaError(f"unknown prefix in {curie!r}")
        raise RdfaError(f"not an absolute IRI or CURIE: {curie!r}")

    def walk(self, el: _Element, subject, lang: Optional[str]) -> None:
        attrs = el.attrs
        if "prefix" in attrs:
            parts = attrs["prefix"].split()
            if len(parts) % 2:
                raise RdfaError("odd prefix attribute")
            for name, ns in zip(parts[0::2], parts[1::2]):
                if not name.endswith(":"):
                    raise RdfaError(f"bad prefix mapping {name!r}")
                self.prefixes[name[:-1]] = ns
        if "lang" in attrs:
            lang = attrs["lang"] or None

        if "about" in attrs:
            subject = Iri(attrs["about"])
            for ty in attrs.get("typeof", "").split():
                self.triples.add(Triple(subject, Iri(RDF_TYPE), self._expand(ty)))

        if "property" in attrs:
            if subject is None:
                raise RdfaError("property attribute with no subject in scope")
            pred = self._expand(attrs["property"])
            if "resource" in attrs:
                self.triples.add(Triple(subject, pred, Iri(attrs["resource"])))
            elif "typeof" in attrs and "about" not in attrs:
                node = BlankNode(f"r{next(self._fresh)}")
                self.triples.add(Triple(subject, pred, node))
                for ty in attrs["typeof"].split():
                    self.triples.add(Triple(node, Iri(RDF_TYPE), self._expand(ty)))
                for child in el.children:
                    if isinstance(child, _Element):
                        self.walk(child, node, lang)
                return
            elif "content" in attrs:
                self.triples.add(
                    Triple(subject, pred, self._literal(attrs["content"], attrs, lang))
                )
            else:
                self.triples.add(
                    Triple(subject, pred, self._literal(_text_of(el), attrs, lang))
                )
                return

        for child in el.children:
            if isinstance(child, _Element):
                self.walk(child, subject, lang)

    def _literal(self, value: str, attrs: dict, lang: Optional[str]) -> Literal:
        if "datatype" in attrs and attrs["datatype"]:
            return Literal(value, datatype=self._expand(attrs["datatype"]))
        return Literal(value, lang=lang)


def extract_rdfa(html: str) -> Graph:
    builder = _TreeBuilder()
    builder.feed(html)
    builder.close()
    if len(builder.stack) != 1:
        raise RdfaError("unclosed elements at end of document")
    extractor = _Extractor()
    extractor.walk(builder.root, None, None)
    return Graph(extractor.triples)
