"""graph6 text codec and ``.g6`` listing files.

Bits of the upper triangle are taken column by column
(``(0,1), (0,2), (1,2), (0,3), ...``), packed six to a character and offset by
63.  Sizes up to 62 use a single byte; 63 and 64 use the ``~`` + 3-byte form.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Union

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def upper_triangle_bits(g: Graph) -> list[int]:
    rows = g.rows
    return [rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def pack_bits(bits: list[int]) -> str:
    """Pack a bit list six at a time into printable characters, zero padded."""
    out = []
    for k in range(0, len(bits), 6):
        chunk = bits[k : k + 6]
        val = 0
        for b in chunk:
            val = val << 1 | b
        val <<= 6 - len(chunk)
        out.append(chr(63 + val))
    return "".join(out)


def g6_encode(g: Graph) -> str:
    return _encode_size(g.n) + pack_bits(upper_triangle_bits(g))


def g6_decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside [63,126]", pos)

    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated extended size field", len(s))
        if s[1] == "~":
            raise Graph6Error("8-byte size form not supported", 1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body_start = 4
        if n > MAX_VERTICES:
            raise Graph6Error(f"n={n} exceeds {MAX_VERTICES}", 1)
        if n < 63:
            raise Graph6Error(f"extended size form used for n={n} < 63", 1)
    else:
        n = ord(s[0]) - 63
        body_start = 1
    if n < 1:
        raise Graph6Error("graphs need at least one vertex", 0)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[body_start:]
    if len(body) != nchars:
        off = body_start + min(len(body), nchars)
        raise Graph6Error(f"expected {nchars} data bytes for n={n}, got {len(body)}", off)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            pos, shift = divmod(k, 6)
            if (ord(body[pos]) - 63) >> (5 - shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nchars and nbits % 6:
        pad = 6 - nbits % 6
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", body_start + nchars - 1)
    return Graph._trusted(n, tuple(rows))


def read_g6(path: Union[str, Path]) -> list[Graph]:
    return list(iter_g6(Path(path).read_text(encoding="ascii").splitlines()))


def iter_g6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode lines, skipping blanks and a leading ``>>graph6<<`` header line.

    Errors are re-raised with the 1-based line number attached as ``lineno``.
    """
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or (lineno == 1 and text == HEADER):
            continue
        try:
            yield g6_decode(text)
        except Graph6Error as exc:
            exc.lineno = lineno  # type: ignore[attr-defined]
            raise


def write_g6(path: Union[str, Path], graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(g6_encode(g) + "\n")
            count += 1
    return count
