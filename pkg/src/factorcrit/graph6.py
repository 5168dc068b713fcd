"""graph6 encoding for graphs with at most 62 vertices.

Layout: one size byte ``n + 63``, then the upper triangle of the adjacency
matrix taken column by column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``),
packed big-endian into 6-bit groups, each group offset by 63.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import CapabilityError, Graph6Error
from .graph import Graph

__all__ = ["encode", "decode", "decode_bits", "read_graph6", "iter_graph6_file", "MAX_N"]

MAX_N = 62
_HEADER = b">>graph6<<"


def _pair_count(n: int) -> int:
    return n * (n - 1) // 2


def encode(g: Graph) -> bytes:
    if g.n > MAX_N:
        raise CapabilityError(f"graph6 codec supports n <= {MAX_N}, got {g.n}")
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out)


def decode_bits(n: int, code: int) -> Graph:
    """Graph whose graph6 bit string, read as a big-endian integer, is ``code``."""
    total = _pair_count(n)
    edges = []
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


def decode(text: bytes | str) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    if text.startswith(_HEADER):
        text = text[len(_HEADER) :]
    text = text.rstrip(b"\r\n")
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for pos, byte in enumerate(text):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside the printable range 63..126", pos)
    n = text[0] - 63
    if n > MAX_N:
        raise Graph6Error(f"vertex counts above {MAX_N} are not supported", 0)
    total = _pair_count(n)
    need = (total + 5) // 6
    if len(text) - 1 != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(text) - 1}",
            min(len(text), need + 1),
        )
    code = 0
    for byte in text[1:]:
        code = (code << 6) | (byte - 63)
    pad = need * 6 - total
    if code & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits", len(text) - 1)
    return decode_bits(n, code >> pad)


def read_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode a stream, one graph per line; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            yield decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.reason}", exc.offset) from None


def iter_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        yield from read_graph6(fh)
