"""Render a validated vocabulary into the static document tree.

Layout: ``rs/{name}/{version}/[{JUR}/]`` holds ``data.ttl``,
``data.jsonld`` and one ``index.{lang}.html`` per translation; ``rs/``
holds the concept-scheme overview in the same three families.
"""

from __future__ import annotations

import datetime
import html as html_mod
import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .jsonld import serialize_jsonld
from .model import BlankNode, Graph, Iri, Literal, Triple
from .namespaces import DC11, DCTERMS, NAMESPACE_TABLE, ODRL, PREMISCOPY, RDF_TYPE, SKOS
from .turtle import parse_turtle, serialize_turtle
from .uris import DEFAULT_CONFIG, NamespaceConfig, build_statement_uri
from .vocab import (
    CONCEPT_SCHEME_CLASS,
    COVERAGE,
    CREATOR,
    DEFINITION,
    HAS_VERSION,
    IDENTIFIER,
    MODIFIED,
    PREF_LABEL,
    RIGHTS_STATEMENT_CLASS,
    SCOPE_NOTE,
    TITLE,
    StatementRecord,
    Vocabulary,
)

MEDIA_TYPES = {
    ".ttl": "text/turtle",
    ".jsonld": "application/ld+json",
    ".html": "text/html",
}


@dataclass(frozen=True)
class SiteEntry:
    content: bytes
    media_type: str
    language: Optional[str] = None


@dataclass
class SiteManifest:
    entries: dict[str, SiteEntry] = field(default_factory=dict)
    generated_at: str = ""

    def add(self, path: str, content: str, media_type: str,
            language: Optional[str] = None) -> None:
        if path.startswith("/") or ".." in path.split("/"):
            raise ValueError(f"bad manifest path {path!r}")
        self.entries[path] = SiteEntry(content.encode("utf-8"), media_type, language)


def record_to_graph(
    r: StatementRecord,
    cfg: NamespaceConfig = DEFAULT_CONFIG,
    counter=None,
) -> Graph:
    """Re-express a record's fields as triples."""
    if counter is None:
        counter = itertools.count()
    subject = Iri(build_statement_uri(r.uri, cfg))
    triples = [Triple(subject, Iri(RDF_TYPE), RIGHTS_STATEMENT_CLASS)]
    for lang, text in r.pref_labels.items():
        triples.append(Triple(subject, PREF_LABEL, Literal(text, lang=lang)))
    for lang, text in r.definitions.items():
        triples.append(Triple(subject, DEFINITION, Literal(text, lang=lang)))
    for lang, text in r.notes.items():
        triples.append(Triple(subject, SCOPE_NOTE, Literal(text, lang=lang)))
    if r.creator:
        triples.append(Triple(subject, CREATOR, Literal(r.creator)))
    triples.append(Triple(subject, HAS_VERSION, Literal(r.version)))
    triples.append(Triple(subject, MODIFIED, Literal(r.modified)))
    triples.append(Triple(subject, IDENTIFIER, Literal(r.identifier)))
    if r.jurisdiction:
        triples.append(Triple(subject, COVERAGE, Literal(r.jurisdiction)))
    for m in r.matches:
        triples.append(Triple(subject, Iri(SKOS + m.relation), m.target))
    for perm in r.permissions:
        pnode = BlankNode(f"p{next(counter)}")
        triples.append(Triple(subject, Iri(ODRL + "permission"), pnode))
        triples.append(Triple(pnode, Iri(ODRL + "action"), perm.action))
        for c in perm.constraints:
            cnode = BlankNode(f"p{next(counter)}")
            triples.append(Triple(pnode, Iri(ODRL + "constraint"), cnode))
            triples.append(Triple(cnode, Iri(ODRL + "operator"), c.operator))
            triples.append(Triple(cnode, Iri(ODRL + "purpose"), c.purpose))
    return Graph(triples)


def restrict_to_language(g: Graph, lang: str) -> Graph:
    """Language-neutral triples plus literals tagged with ``lang``."""
    return Graph(
        t for t in g
        if not (isinstance(t.object, Literal) and t.object.lang)
        or t.object.lang == lang
    )


def vocabulary_to_graph(v: Vocabulary, cfg: NamespaceConfig = DEFAULT_CONFIG) -> Graph:
    counter = itertools.count()
    triples = [Triple(v.scheme_uri, Iri(RDF_TYPE), CONCEPT_SCHEME_CLASS)]
    for lang, text in v.title.items():
        triples.append(Triple(v.scheme_uri, TITLE, Literal(text, lang=lang)))
    g = Graph(triples)
    for key in sorted(v.statements):
        g = g.union(record_to_graph(v.statements[key], cfg, counter))
    return g


def statement_dir(r: StatementRecord) -> str:
    path = f"rs/{r.uri.name}/{r.uri.version}/"
    if r.uri.jurisdiction:
        path += f"{r.uri.jurisdiction}/"
    return path


_PREFIX_ATTR = " ".join(f"{p}: {ns}" for p, ns in NAMESPACE_TABLE.items())


def _esc(s: str) -> str:
    return html_mod.escape(s, quote=True)


def _iri_link(prop: str, iri: Iri) -> str:
    v = _esc(iri.value)
    return f'<a property="{prop}" resource="{v}" href="{v}">{v}</a>'


def render_statement_html(
    r: StatementRecord,
    lang: str,
    v: Vocabulary,
    cfg: NamespaceConfig = DEFAULT_CONFIG,
) -> str:
    if lang not in r.pref_labels:
        raise KeyError(f"no {lang!r} translation for {r.uri.name}")
    uri = build_statement_uri(r.uri, cfg)
    label = r.pref_labels[lang]
    lines = [
        "<!DOCTYPE html>",
        f'<html lang="{_esc(lang)}" prefix="{_esc(_PREFIX_ATTR)}">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{_esc(label)}</title>",
        "</head>",
        "<body>",
        f'<article about="{_esc(uri)}" typeof="dcterms:RightsStatement">',
        f'<h1 property="skos:prefLabel" lang="{_esc(lang)}">{_esc(label)}</h1>',
        f'<p property="skos:definition" lang="{_esc(lang)}">{_esc(r.definitions[lang])}</p>'
        if lang in r.definitions else "",
    ]
    if lang in r.notes:
        lines.append(
            f'<p property="skos:scopeNote" lang="{_esc(lang)}">{_esc(r.notes[lang])}</p>'
        )
    lines.append("<dl>")
    lines.append(
        f'<dt>Identifier</dt><dd property="dc:identifier" lang="">{_esc(r.identifier)}</dd>'
    )
    lines.append(
        f'<dt>Version</dt><dd property="dcterms:hasVersion" lang="">{_esc(r.version)}</dd>'
    )
    if r.creator:
        lines.append(
            f'<dt>Creator</dt><dd property="dc:creator" lang="">{_esc(r.creator)}</dd>'
        )
    lines.append(
        f'<dt>Modified</dt><dd property="dcterms:modified" lang="">{_esc(r.modified)}</dd>'
    )
    if r.jurisdiction:
        lines.append(
            f'<dt>Jurisdiction</dt><dd property="dcterms:coverage" lang="">{_esc(r.jurisdiction)}</dd>'
        )
    else:
        lines.append("<dt>Jurisdiction</dt><dd>worldwide</dd>")
    lines.append("</dl>")
    if r.matches:
        lines.append("<section><h2>Related rights expressions</h2><ul>")
        for m in r.matches:
            lines.append(f'<li>{_iri_link("skos:" + m.relation, m.target)}</li>')
        lines.append("</ul></section>")
    for perm in r.permissions:
        lines.append('<div property="odrl:permission" typeof="">')
        lines.append(f'<span>Permitted action: {_iri_link("odrl:action", perm.action)}</span>')
        for c in perm.constraints:
            lines.append('<div property="odrl:constraint" typeof="">')
            lines.append(f'<span>{_iri_link("odrl:operator", c.operator)}</span>')
            lines.append(f'<span>{_iri_link("odrl:purpose", c.purpose)}</span>')
            lines.append("</div>")
        lines.append("</div>")
    others = [l for l in r.languages() if l != lang]
    lines.append("<section><h2>Other translations</h2><ul>")
    for other in others:
        lines.append(f'<li><a href="index.{_esc(other)}.html">{_esc(other)}</a></li>')
    lines.append("</ul></section>")
    lines.extend(["</article>", "</body>", "</html>"])
    return "\n".join(line for line in lines if line) + "\n"


def render_overview_html(
    v: Vocabulary, lang: str, cfg: NamespaceConfig = DEFAULT_CONFIG
) -> str:
    title_lang = lang if lang in v.title else "en"
    title = v.title.get(title_lang, "Rights statements")
    lines = [
        "<!DOCTYPE html>",
        f'<html lang="{_esc(lang)}" prefix="{_esc(_PREFIX_ATTR)}">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{_esc(title)}</title>",
        "</head>",
        "<body>",
        f'<main about="{_esc(cfg.scheme_uri())}" typeof="skos:ConceptScheme">',
    ]
    if title_lang in v.title:
        lines.append(
            f'<h1 property="dcterms:title" lang="{_esc(title_lang)}">{_esc(title)}</h1>'
        )
    else:
        lines.append(f"<h1>{_esc(title)}</h1>")
    lines.append("<ul>")
    for key in sorted(v.statements, key=lambda k: (v.statements[k].uri.name, k)):
        r = v.statements[key]
        label = r.pref_labels.get(lang, r.pref_labels.get("en", r.uri.name))
        href = "/" + statement_dir(r)
        lines.append(f'<li><a href="{_esc(href)}">{_esc(label)}</a> ({_esc(key)})</li>')
    lines.extend(["</ul>", "</main>", "</body>", "</html>"])
    return "\n".join(lines) + "\n"


def generate_site(v: Vocabulary, cfg: NamespaceConfig = DEFAULT_CONFIG) -> SiteManifest:
    manifest = SiteManifest(
        generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat()
    )
    counter = itertools.count()
    all_langs: set[str] = set(v.title) | {"en"}
    for key in sorted(v.statements):
        r = v.statements[key]
        base = statement_dir(r)
        g = record_to_graph(r, cfg, counter)
        manifest.add(base + "data.ttl", serialize_turtle(g), "text/turtle")
        manifest.add(base + "data.jsonld", serialize_jsonld(g), "application/ld+json")
        for lang in r.languages():
            manifest.add(
                base + f"index.{lang}.html",
                render_statement_html(r, lang, v, cfg),
                "text/html",
                language=lang,
            )
        all_langs.update(r.languages())
    full = vocabulary_to_graph(v, cfg)
    manifest.add("rs/data.ttl", serialize_turtle(full), "text/turtle")
    manifest.add("rs/data.jsonld", serialize_jsonld(full), "application/ld+json")
    for lang in sorted(all_langs):
        manifest.add(
            f"rs/index.{lang}.html",
            render_overview_html(v, lang, cfg),
            "text/html",
            language=lang,
        )
    return manifest


def write_manifest(manifest: SiteManifest, out_dir: Path) -> int:
    out_dir = Path(out_dir)
    for rel, entry in sorted(manifest.entries.items()):
        target = out_dir / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(entry.content)
    return len(manifest.entries)


def load_manifest_from_dir(site_dir: Path) -> SiteManifest:
    site_dir = Path(site_dir)
    manifest = SiteManifest()
    for path in sorted(site_dir.rglob("*")):
        if not path.is_file():
            continue
        suffix = path.suffix
        if suffix not in MEDIA_TYPES:
            continue
        rel = path.relative_to(site_dir).as_posix()
        language = None
        if suffix == ".html":
            parts = path.name.split(".")
            if len(parts) == 3 and parts[0] == "index":
                language = parts[1]
        manifest.entries[rel] = SiteEntry(
            path.read_bytes(), MEDIA_TYPES[suffix], language
        )
    return manifest
