"""graph6 and JSON edge-list readers/writers."""

from __future__ import annotations

import json

import numpy as np

from .errors import ParameterError, ParseError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def serialize_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    n = g.n
    iu, ju = np.triu_indices(n, 1)
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    order = np.lexsort((iu, ju))
    bits = g.adjacency[iu[order], ju[order]].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ (1 << np.arange(5, -1, -1)) if len(bits) else np.array([], dtype=int)
    return (_encode_n(n) + bytes((groups + 63).tolist())).decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise ParseError("empty graph6 input", base)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ParseError("non-ASCII character in graph6 input", base + exc.start) from None
    for k, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} outside the printable range 63..126", base + k)

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte length prefix", base + len(data))
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte length prefix", base + len(data))
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    if n < 1:
        raise ParseError("graph6 encodes a graph with no vertices", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) != need:
        raise ParseError(f"expected {need} payload bytes for n={n}, found {len(payload)}", base + pos + min(len(payload), need))
    values = np.frombuffer(payload, dtype=np.uint8).astype(np.int64) - 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[nbits:].any():
        raise ParseError("nonzero padding bits", base + len(data) - 1)

    iu, ju = np.triu_indices(n, 1)
    order = np.lexsort((iu, ju))
    adj = np.zeros((n, n), dtype=np.uint8)
    on = bits[:nbits].astype(bool)
    adj[iu[order][on], ju[order][on]] = 1
    adj |= adj.T
    return Graph(adj)


def parse_edge_list(text: str) -> Graph:
    """Parse ``{"n": int, "edges": [[i, j], ...]}``; duplicate edges collapse."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
    return edge_list_from_obj(obj)


def edge_list_from_obj(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('expected an object with keys "n" and "edges"')
    n, edges = obj["n"], obj["edges"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list')
    pairs = []
    for k, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge #{k} is not a pair of integers: {e!r}")
        pairs.append(e)
    try:
        return Graph.from_edges(n, pairs, obj.get("label"))
    except ParameterError as exc:
        raise ParseError(str(exc)) from None


def serialize_edge_list(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]})


def read_graphs(text: str) -> list[Graph]:
    """Read every graph in ``text``.

    Input starting with ``{`` or ``[`` is JSON: one edge-list object, an array of
    them, or one object per line.  Anything else is graph6, one graph per
    non-blank line.
    """
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("no graphs in input", 0)
    if stripped[0] in "{[":
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError:
            return [parse_edge_list(line) for line in stripped.splitlines() if line.strip()]
        if isinstance(obj, list):
            return [edge_list_from_obj(o) for o in obj]
        return [edge_list_from_obj(obj)]
    return [parse_graph6(line) for line in stripped.splitlines() if line.strip()]
