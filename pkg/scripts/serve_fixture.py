#!/usr/bin/env python3
"""Build the fixture vocabulary in memory and serve it locally.

Usage: python3 scripts/serve_fixture.py [port]
Then try, e.g.:

    curl -i -H 'Accept: text/turtle' http://127.0.0.1:8080/rs/ic-edu/1.0/
    curl -i -H 'Accept-Language: nl' http://127.0.0.1:8080/rs/pd/1.0/
"""

import sys
from pathlib import Path

from rightsvocab.cli import CliConfig, build_snapshot
from rightsvocab.server import NegotiationServer

VOCAB = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "vocabulary.ttl"


def main() -> int:
    port = int(sys.argv[1]) if len(sys.argv) > 1 else 8080
    snapshot = build_snapshot(str(VOCAB), CliConfig())
    server = NegotiationServer(snapshot, host="127.0.0.1", port=port)
    host, bound_port = server.address
    print(f"serving {len(snapshot.manifest.entries)} documents "
          f"on http://{host}:{bound_port}/ (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


if __name__ == "__main__":
    sys.exit(main())
