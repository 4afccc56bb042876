"""Readers and writers for graph6, DIMACS edge format and plain edge lists.

graph6 follows the format description shipped with nauty: a size field of
1, 4 or 8 bytes, then the upper triangle in column order
``(0,1), (0,2), (1,2), (0,3), ...`` packed six bits per byte, each byte
offset by 63.  Writers always end the line with a single ``\\n``.

Edge lists are 0-indexed ``u v`` lines with ``#`` comments.  The writer adds
a ``# order N`` comment, which the reader honours, so isolated trailing
vertices survive a round trip.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ExcessBits,
    FormatError,
    InvalidChar,
    MalformedHeader,
    MalformedLine,
    OversizeOrder,
    SelfLoop,
    TruncatedBits,
    VertexOutOfRange,
)
from .graph import Graph, validate

log = logging.getLogger(__name__)

FORMATS = ("graph6", "dimacs", "edgelist")
GRAPH6_HEADER = b">>graph6<<"
DEFAULT_MAX_ORDER = 100_000
_ORDER_RE = re.compile(r"#\s*order\s+(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    source_format: str
    source_name: str = ""
    duplicate_edges: int = 0


def _graph6_bits_needed(n: int) -> int:
    return n * (n - 1) // 2


def _graph6_chars_needed(n: int) -> int:
    return -(-_graph6_bits_needed(n) // 6)


def parse_graph6(data: bytes | str, max_order: int = DEFAULT_MAX_ORDER) -> Graph:
    """Decode a single graph6 line (optional ``>>graph6<<`` header allowed)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise TruncatedBits("empty graph6 string")
    codes = np.frombuffer(data, dtype=np.uint8)
    bad = np.flatnonzero((codes < 63) | (codes > 126))
    if bad.size:
        raise InvalidChar(f"byte {data[bad[0]]!r} at offset {int(bad[0])} outside [63, 126]")
    vals = codes.astype(np.int64) - 63

    if vals[0] != 63:
        n, pos = int(vals[0]), 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise TruncatedBits("4-byte size field cut short")
        n, pos = (int(vals[1]) << 12) | (int(vals[2]) << 6) | int(vals[3]), 4
    else:
        if len(vals) < 8:
            raise TruncatedBits("8-byte size field cut short")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | int(v)
        pos = 8
    if n > max_order:
        raise OversizeOrder(f"order {n} exceeds limit {max_order}")
    if n == 0:
        raise FormatError("graph6 order 0 has no vertices")

    need = _graph6_chars_needed(n)
    payload = vals[pos:]
    if len(payload) < need:
        raise TruncatedBits(f"order {n} needs {need} payload bytes, got {len(payload)}")
    if len(payload) > need:
        raise ExcessBits(f"order {n} needs {need} payload bytes, got {len(payload)}")

    bits = np.unpackbits((payload.astype(np.uint8) << 2).reshape(-1, 1), axis=1)[:, :6].ravel()
    nbits = _graph6_bits_needed(n)
    if bits[nbits:].any():
        raise FormatError("nonzero padding bits in graph6 payload")
    # column-major upper triangle: for j in 1..n-1, for i in 0..j-1
    cols = np.repeat(np.arange(n), np.arange(n))
    rows = np.concatenate([np.arange(j) for j in range(n)]) if n > 1 else np.empty(0, int)
    a = np.zeros((n, n), dtype=bool)
    on = bits[:nbits].astype(bool)
    a[rows[on], cols[on]] = True
    return validate(a | a.T)


def write_graph6(g: Graph) -> bytes:
    n = g.order
    if n <= 62:
        size = [n]
    elif n <= 258047:
        size = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        size = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    iu = np.concatenate([np.arange(j) for j in range(n)]) if n > 1 else np.empty(0, int)
    ju = np.repeat(np.arange(n), np.arange(n))
    bits = g.adjacency[iu, ju].astype(np.uint8)
    bits = np.concatenate([bits, np.zeros(-len(bits) % 6, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) if bits.size else np.zeros((0, 6), np.uint8)
    payload = groups @ (1 << np.arange(5, -1, -1))
    return bytes(np.concatenate([size, payload]).astype(np.uint8) + 63) + b"\n"


def _as_text(data: bytes | str) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _assemble(n: int, edges: list[tuple[int, int]], one_based: bool, where: str) -> tuple[Graph, int]:
    a = np.zeros((n, n), dtype=bool)
    dupes = 0
    lo = 1 if one_based else 0
    for u, v in edges:
        for x in (u, v):
            if not lo <= x < n + lo:
                raise VertexOutOfRange(f"{where}: vertex {x} outside [{lo}, {n + lo - 1}]")
        if u == v:
            raise SelfLoop(f"{where}: self-loop at vertex {u}")
        u, v = u - lo, v - lo
        if a[u, v]:
            dupes += 1
        a[u, v] = a[v, u] = True
    if dupes:
        log.warning("%s: collapsed %d duplicate edge(s)", where, dupes)
    return validate(a), dupes


def _ints(parts: list[str], lineno: int, line: str) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise MalformedLine(f"line {lineno}: expected integers: {line!r}") from None


def _read_dimacs(text: str) -> tuple[Graph, int]:
    n = None
    edges = []
    for lineno, raw in enumerate(_as_text(text).splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise MalformedHeader(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedHeader(f"line {lineno}: expected 'p edge N M', got {line!r}")
            try:
                n, _m = (int(x) for x in parts[2:])
            except ValueError:
                raise MalformedHeader(f"line {lineno}: non-integer counts in {line!r}") from None
            if n < 1:
                raise MalformedHeader(f"line {lineno}: order must be positive")
        elif parts[0] == "e":
            if n is None:
                raise MalformedHeader(f"line {lineno}: edge before 'p edge' header")
            if len(parts) != 3:
                raise MalformedLine(f"line {lineno}: expected 'e U V', got {line!r}")
            u, v = _ints(parts[1:], lineno, line)
            edges.append((u, v))
        else:
            raise MalformedLine(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise MalformedHeader("missing 'p edge N M' header")
    return _assemble(n, edges, one_based=True, where="dimacs")


def parse_dimacs(text: bytes | str) -> Graph:
    return _read_dimacs(text)[0]


def write_dimacs(g: Graph) -> bytes:
    edges = g.edges()
    lines = []
    if g.label:
        lines.append("c " + " ".join(g.label.split()))
    lines.append(f"p edge {g.order} {len(edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return ("\n".join(lines) + "\n").encode()


def _read_edge_list(text: str) -> tuple[Graph, int]:
    order = None
    edges = []
    top = -1
    for lineno, raw in enumerate(_as_text(text).splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _ORDER_RE.match(line)
            if m:
                order = int(m.group(1))
            continue
        line = line.split("#", 1)[0]
        parts = line.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected 'U V', got {raw!r}")
        u, v = _ints(parts, lineno, raw)
        if u < 0 or v < 0:
            raise VertexOutOfRange(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        top = max(top, u, v)
    n = order if order is not None else top + 1
    if n < 1:
        raise MalformedHeader("edge list defines no vertices")
    return _assemble(n, edges, one_based=False, where="edgelist")


def parse_edge_list(text: bytes | str) -> Graph:
    return _read_edge_list(text)[0]


def write_edge_list(g: Graph) -> bytes:
    lines = [f"# order {g.order}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode()


_WRITERS = {"graph6": write_graph6, "dimacs": write_dimacs, "edgelist": write_edge_list}


def write(g: Graph, fmt: str) -> bytes:
    try:
        return _WRITERS[normalize_format(fmt)](g)
    except KeyError:
        raise FormatError(f"unknown format {fmt!r}") from None


def normalize_format(fmt: str) -> str:
    f = fmt.lower().replace("-", "").replace("_", "")
    aliases = {"g6": "graph6", "graph6": "graph6", "dimacs": "dimacs", "dimacsedge": "dimacs",
               "col": "dimacs", "edgelist": "edgelist", "edges": "edgelist", "el": "edgelist"}
    if f not in aliases:
        raise FormatError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    return aliases[f]


def parse(data: bytes | str, fmt: str, source_name: str = "") -> GraphDocument:
    fmt = normalize_format(fmt)
    if fmt == "graph6":
        lines = [ln for ln in _as_text(data).splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected exactly one graph6 line, got {len(lines)}")
        g, dupes = parse_graph6(lines[0]), 0
    elif fmt == "dimacs":
        g, dupes = _read_dimacs(data)
    else:
        g, dupes = _read_edge_list(data)
    if source_name:
        g = g.with_label(source_name)
    return GraphDocument(g, fmt, source_name, dupes)


def sniff_format(data: bytes | str, name: str = "") -> str:
    """Guess a format from the file suffix, falling back to the content."""
    suffix = Path(name).suffix.lower().lstrip(".")
    by_suffix = {"g6": "graph6", "graph6": "graph6", "dimacs": "dimacs", "col": "dimacs",
                 "clq": "dimacs", "edges": "edgelist", "el": "edgelist", "edgelist": "edgelist"}
    if suffix in by_suffix:
        return by_suffix[suffix]
    text = _as_text(data)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if any(ln.startswith("p ") for ln in lines):
        return "dimacs"
    if len(lines) == 1 and " " not in lines[0] and all(63 <= ord(c) <= 126 for c in lines[0]):
        return "graph6"
    if lines and lines[0].startswith(GRAPH6_HEADER.decode()):
        return "graph6"
    return "edgelist"


def read_file(path: str | Path, fmt: str | None = None) -> GraphDocument:
    path = Path(path)
    data = path.read_bytes()
    fmt = fmt or sniff_format(data, path.name)
    return parse(data, fmt, source_name=path.name)
