"""Text formats for graphs: graph6 (McKay) and the plain edge-list format.

graph6 packing is done by networkx; lines are validated first so malformed
input is reported with the byte offset of the first bad character.

Edge-list format::

    # comment
    n m
    u v        (m lines, 0-based)
"""
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

import networkx as nx

from ..config.exceptions import GraphFormatError
from ..utils.file_utils import read_byte_lines, read_text
from ..utils.logging import get_logger
from .catalog import from_networkx, to_networkx
from .core import Graph, from_edge_list

logger = get_logger("chromagap.graph.formats")

GRAPH6_HEADER = b">>graph6<<"
_MIN_CHAR = 63
_MAX_CHAR = 126


def _decode_size(data: bytes) -> Tuple[int, int]:
    """Return (n, offset of the first adjacency byte)"""
    if not data:
        raise GraphFormatError("empty graph6 string", offset=0)
    head = data[:4] if data[0] == _MAX_CHAR else data[:1]
    for i, byte in enumerate(head):
        if not _MIN_CHAR <= byte <= _MAX_CHAR:
            raise GraphFormatError(f"invalid graph6 byte 0x{byte:02x}", offset=i)
    if data[0] != _MAX_CHAR:
        return data[0] - _MIN_CHAR, 1
    # 18-bit form: '~' followed by three 6-bit groups; '~~' (36-bit) is not supported
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field", offset=len(data))
    if data[1] == _MAX_CHAR:
        raise GraphFormatError("graph6 36-bit size form is not supported", offset=1)
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - _MIN_CHAR)
    return n, 4


def _validate_graph6(data: bytes) -> None:
    n, start = _decode_size(data)
    body = data[start:]
    for i, byte in enumerate(body):
        if not _MIN_CHAR <= byte <= _MAX_CHAR:
            raise GraphFormatError(f"invalid graph6 byte 0x{byte:02x}", offset=start + i)
    needed = (n * (n - 1) // 2 + 5) // 6
    if len(body) < needed:
        raise GraphFormatError(
            f"truncated graph6 string: {n} vertices need {needed} adjacency bytes, got {len(body)}",
            offset=len(data),
        )
    if len(body) > needed:
        raise GraphFormatError("trailing bytes after graph6 adjacency data", offset=start + needed)


def from_graph6(line: Union[str, bytes], name: str = "") -> Graph:
    """Decode one graph6 line into a Graph"""
    if isinstance(line, str):
        text = line.strip()
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphFormatError(f"non-ASCII character {text[e.start]!r} in graph6 string", offset=e.start)
    else:
        data = bytes(line).strip()

    offset_base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset_base = len(GRAPH6_HEADER)
    try:
        _validate_graph6(data)
    except GraphFormatError as e:
        raise GraphFormatError(e.message, offset=(e.offset or 0) + offset_base)

    try:
        nx_graph = nx.from_graph6_bytes(data)
    except (ValueError, nx.NetworkXError) as e:
        raise GraphFormatError(f"graph6 decoding failed: {e}", offset=offset_base)
    return from_networkx(nx_graph, name=name)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line (no header, no newline)"""
    if g.n >= 258048:
        raise GraphFormatError(f"graph6 encoding of n={g.n} is not supported")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip("\n")


def iter_graph6_lines(lines: Iterable[bytes]) -> Iterator[Tuple[int, bytes]]:
    """Yield (line number, content) for non-blank graph6 lines"""
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text:
            yield number, text


def read_graph6_file(path: Path) -> List[Graph]:
    """Read every graph of a graph6 file; the first malformed line aborts"""
    graphs = []
    for number, text in iter_graph6_lines(read_byte_lines(Path(path))):
        try:
            graphs.append(from_graph6(text, name=f"{Path(path).stem}#{number}"))
        except GraphFormatError as e:
            raise GraphFormatError(e.message, offset=e.offset, line=number)
    logger.debug(f"Read {len(graphs)} graphs from {path}")
    return graphs

def _strip_comment(line: str) -> str:
    return line.split('#', 1)[0].strip()


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the edge-list format ("n m" header, then m lines "u v")"""
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = _strip_comment(raw)
        if content:
            rows.append((number, content.split()))
    if not rows:
        raise GraphFormatError("edge list is empty (missing 'n m' header)", line=1)

    header_line, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", line=header_line)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header values must be integers", line=header_line)
    if m < 0:
        raise GraphFormatError("edge count must be non-negative", line=header_line)

    edge_rows = rows[1:]
    if len(edge_rows) != m:
        line = edge_rows[-1][0] if edge_rows else header_line
        raise GraphFormatError(f"header declares {m} edges, found {len(edge_rows)}", line=line)

    pairs = []
    for number, tokens in edge_rows:
        if len(tokens) != 2:
            raise GraphFormatError("edge line must be 'u v'", line=number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", line=number)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u}, {v}) for n={n}", line=number)
        pairs.append((u, v))
    return from_edge_list(n, pairs, name=name)


def read_edge_list(path: Path) -> Graph:
    return parse_edge_list(read_text(path), name=Path(path).stem)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
