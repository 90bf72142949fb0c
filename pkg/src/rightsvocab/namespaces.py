"""Shared namespace table used by all serializers.

The prefix order here is the emission order for Turtle output; keep it
alphabetical so generated documents stay stable.
"""

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDF_TYPE = RDF + "type"

CC = "http://creativecommons.org/ns#"
DC11 = "http://purl.org/dc/elements/1.1/"
DCMITYPE = "http://purl.org/dc/dcmitype/"
DCTERMS = "http://purl.org/dc/terms/"
EDM = "http://www.europeana.eu/schemas/edm/"
ODRL = "http://www.w3.org/ns/odrl/2/"
PREMISCOPY = "http://id.loc.gov/vocabulary/preservation/copyrightStatus/"
SKOS = "http://www.w3.org/2004/02/skos/core#"

# Alternate spellings of the ODRL namespace seen in the wild; the loader
# accepts any of them, the serializers only ever emit ODRL above.
ODRL_ALIASES = (
    ODRL,
    "http://www.w3c.org/ns/odrl/2/",
    "http://www.w3.org/community/odrl/two/vocab/2.1/",
)

# prefix -> namespace IRI, in emission order
NAMESPACE_TABLE = {
    "cc": CC,
    "dc": DC11,
    "dcmitype": DCMITYPE,
    "dcterms": DCTERMS,
    "edm": EDM,
    "odrl": ODRL,
    "premiscopy": PREMISCOPY,
    "rdf": RDF,
    "skos": SKOS,
}
