"""Text formats: edge lists, graph6 and matching files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Union

from .graph import Graph, GraphError

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Malformed input; ``lineno`` is 1-based when known."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"expected two integers, got {line!r}", lineno) from None


# --- edge list -------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty edge list")
    lineno, header = lines[0]
    n, m = _int_pair(header, lineno)
    if n < 1 or m < 0:
        raise FormatError(f"bad header {header!r}", lineno)
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for lineno, line in body:
        u, v = _int_pair(line, lineno)
        if not (0 <= u < v < n):
            raise FormatError(f"edge {u} {v} violates 0 <= u < v < {n}", lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


# --- graph6 ------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        raise FormatError(f"graph6 order {n} not supported")
    bits = [g.has_edge(i, j) for j in range(1, n) for i in range(j)]
    bits.extend([False] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(value + 63)
    return bytes(head + body).decode("ascii")


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise FormatError(f"unsupported graph6 size prefix in {s!r}")
        n = data[1] << 12 | data[2] << 6 | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    if n < 1:
        raise FormatError("graph6 order must be at least 1")
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(data)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def iter_graph6_file(path: PathLike, errors: list | None = None) -> Iterator[Graph]:
    """Yield graphs from a graph6 file, one per line.

    Malformed lines are skipped; each is recorded in ``errors`` as a
    ``FormatError`` carrying its line number.
    """
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield decode_graph6(line)
            except (FormatError, GraphError) as exc:
                if errors is not None:
                    errors.append(FormatError(str(exc), lineno))


def write_graph6_file(graphs, path: PathLike) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count


# --- matching files ------------------------------------------------------------

def parse_matching_pairs(text: str, g: Graph | None = None) -> list[tuple[int, int]]:
    """Parse ``u v`` lines; with ``g`` given, validate against it."""
    pairs = []
    covered: dict[int, int] = {}
    for lineno, line in _content_lines(text):
        u, v = _int_pair(line, lineno)
        if g is not None:
            if not g.has_edge(u, v):
                raise FormatError(f"{u} {v} is not an edge of the graph", lineno)
            for x in (u, v):
                if x in covered:
                    raise FormatError(f"vertex {x} already matched on line {covered[x]}", lineno)
                covered[x] = lineno
        pairs.append((min(u, v), max(u, v)))
    return pairs


def format_matching(pairs) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(pairs))
