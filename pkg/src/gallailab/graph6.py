"""graph6 encoding (bit-packed upper triangle, printable ASCII offset 63)."""
from __future__ import annotations

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError(f"graph6 cannot encode n={n}")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string, without header or newline."""
    n = g.n
    out = _encode_n(n)
    acc = nbits = 0
    for j in range(1, n):
        row = g.masks[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(c + 63) for c in out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record. Surrounding whitespace and the optional
    ``>>graph6<<`` header are accepted."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphError("empty graph6 record")
    if s[0] == ":" or s[0] == "&":
        raise GraphError("sparse6/digraph6 records are not graph6")
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphError(f"non-printable or out-of-range byte {c} at offset {pos}")
        data.append(c - 63)

    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise GraphError("malformed header: truncated 4-byte size")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        if len(data) < 8:
            raise GraphError("malformed header: truncated 8-byte size")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise GraphError(f"truncated payload: need {need} bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise GraphError(f"trailing data: expected {need} payload bytes for n={n}, got {len(body)}")

    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph.from_masks(masks)
