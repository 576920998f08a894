"""graph6 codec and the JSON sidecar carrying bipartitions and metadata.

Layout (bit-exact with nauty's graph6):
    N(n) R(x)
where N(n) is one byte n+63 for n <= 62, byte 126 + three 6-bit groups for
n <= 258047, and two bytes 126 + six 6-bit groups above that. R(x) packs the
upper triangle in column order (0,1),(0,2),(1,2),(0,3),... into 6-bit groups,
zero-padded, each offset by 63.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

import structlog
from pydantic import BaseModel, Field, ValidationError

from ..exceptions import ParseError
from .core import BipartiteGraph, Graph

logger = structlog.get_logger()

HEADER = b">>graph6<<"
_MAX_ORDER = 68719476735


def _encode_order(n: int) -> bytes:
    if n < 0 or n > _MAX_ORDER:
        raise ParseError(f"order {n} cannot be represented in graph6")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: Graph) -> bytes:
    """Encode without header or trailing newline."""
    out = bytearray(_encode_order(g.order))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.order):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_order(data: bytes, start: int = 0) -> tuple[int, int]:
    """Return (order, bytes consumed); offsets in errors are shifted by `start`."""
    if not data:
        raise ParseError("empty graph6 record", start)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte order field", start + len(data))
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise ParseError("truncated 4-byte order field", start + len(data))
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def decode_graph6(record: Union[bytes, str]) -> Graph:
    """Decode one graph6 record; an optional header and newline are tolerated."""
    data = record.encode("ascii") if isinstance(record, str) else bytes(record)
    data = data.strip()
    start = 0
    if data.startswith(HEADER):
        start = len(HEADER)
    for offset in range(start, len(data)):
        if not 63 <= data[offset] <= 126:
            raise ParseError(f"byte {data[offset]!r} outside the graph6 range 63..126", offset)
    body = data[start:]
    n, used = _decode_order(body, start)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    payload = body[used:]
    if len(payload) != expected:
        raise ParseError(
            f"expected {expected} adjacency bytes for order {n}, found {len(payload)}",
            start + used + min(len(payload), expected),
        )
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for index, byte in enumerate(payload):
        value = byte - 63
        for shift in range(5, -1, -1):
            if bit == nbits:
                if value & ((1 << (shift + 1)) - 1):
                    raise ParseError("non-zero padding bits", start + used + index)
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph(n, tuple(rows))


def to_graph6_str(g: Graph) -> str:
    return encode_graph6(g).decode("ascii")


class BipartiteHeader(BaseModel):
    n: int = Field(ge=0)
    b: int = Field(ge=0)
    x: list[int]


class Graph6Sidecar(BaseModel):
    """JSON written next to a .g6 file by this tool."""

    format: str = "graph6"
    order: int
    size: int
    bipartite: Optional[BipartiteHeader] = None
    params: dict[str, Any] = Field(default_factory=dict)
    region_of: Optional[list[str]] = None


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + ".json")


def write_graph(
    path: Union[str, Path],
    g: Union[Graph, BipartiteGraph],
    params: Optional[dict[str, Any]] = None,
    region_of: Optional[list[str]] = None,
) -> Path:
    """Write `path` (graph6 + newline) and its sidecar; returns the sidecar path."""
    path = Path(path)
    graph = g.graph if isinstance(g, BipartiteGraph) else g
    header = None
    if isinstance(g, BipartiteGraph):
        header = BipartiteHeader(n=g.n, b=g.b, x=g.x_vertices)
    sidecar = Graph6Sidecar(
        order=graph.order,
        size=graph.size,
        bipartite=header,
        params=params or {},
        region_of=region_of,
    )
    path.write_bytes(encode_graph6(graph) + b"\n")
    meta = sidecar_path(path)
    meta.write_text(sidecar.model_dump_json(indent=2) + "\n")
    logger.debug("Graph written", path=str(path), order=graph.order, size=graph.size)
    return meta


def read_graph(path: Union[str, Path]) -> Union[Graph, BipartiteGraph]:
    """Read the first graph6 record of `path`, applying a sidecar bipartition if present."""
    path = Path(path)
    lines = [line for line in path.read_bytes().splitlines() if line.strip()]
    if not lines:
        raise ParseError(f"{path} holds no graph6 record", 0)
    graph = decode_graph6(lines[0])
    meta = sidecar_path(path)
    if not meta.exists():
        return graph
    try:
        sidecar = Graph6Sidecar.model_validate(json.loads(meta.read_text()))
    except (ValueError, ValidationError) as exc:
        raise ParseError(f"invalid sidecar {meta}: {exc}") from exc
    if sidecar.order != graph.order:
        raise ParseError(f"sidecar order {sidecar.order} does not match graph order {graph.order}")
    if sidecar.bipartite is None:
        return graph
    stray = [v for v in sidecar.bipartite.x if not 0 <= v < graph.order]
    if stray:
        raise ParseError(f"sidecar lists X vertices {stray} outside 0..{graph.order - 1}")
    x_mask = 0
    for v in sidecar.bipartite.x:
        x_mask |= 1 << v
    return BipartiteGraph(graph, x_mask)
