"""graph6 ASCII encoding plus a human-readable edge-list text format.

graph6 packs the upper triangle of the adjacency matrix, column by column,
into printable characters (offset 63).  The optional ``>>graph6<<`` header is
accepted on decode and never emitted.  Decoding is strict: bad characters,
truncated or overlong payloads and nonzero padding bits are all rejected so
that encode/decode round-trips are byte exact.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"vertex count {n} too large for this encoder")


def encode(g: Graph) -> str:
    """Encode a graph in graph6 format (no header)."""
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def decode(text: str) -> Graph:
    """Decode a graph6 string (optional header allowed)."""
    s = text.strip()
    if s.startswith(">>"):
        if not s.startswith(HEADER):
            raise Graph6Error(f"unrecognized header in {text!r}")
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} out of graph6 range")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("graphs beyond 258047 vertices are unsupported")
        if len(s) < 4:
            raise Graph6Error("truncated vertex count")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"payload length {len(body)} does not match {expected} groups for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_list_text(g: Graph) -> str:
    """First line ``n``, then one ``u v`` line per edge."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' pair, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
