"""Plain-text formats for choice functions (``cff``) and voter profiles (``pff``).

Both are line oriented; ``#`` starts a comment and blank lines are ignored.

cff::

    cff 1
    candidates 3
    beats 0 1
    beats 1 2
    beats 2 0

pff::

    pff 1
    candidates 3

    voter 2
    beats 0 1

    voter 1
    beats 1 0

Emission is canonical: pairs in ascending ``(min, max)`` order, profile blocks
sorted by canonical key, multiplicities in decimal.
"""

from __future__ import annotations

from majlab.core import ChoiceFunction, VoterProfile


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int, what: str) -> int:
    if not tok.isdigit():
        raise FormatError(f"{what} must be a non-negative decimal integer, got {tok!r}", no)
    return int(tok)


def _header(lines, kind: str) -> int:
    try:
        no, toks = next(lines)
    except StopIteration:
        raise FormatError(f"missing '{kind} 1' header") from None
    if toks != [kind, "1"]:
        raise FormatError(f"expected '{kind} 1', got {' '.join(toks)!r}", no)
    try:
        no, toks = next(lines)
    except StopIteration:
        raise FormatError("missing 'candidates' line") from None
    if len(toks) != 2 or toks[0] != "candidates":
        raise FormatError(f"expected 'candidates <n>', got {' '.join(toks)!r}", no)
    n = _int(toks[1], no, "candidate count")
    if n < 3:
        raise FormatError(f"need at least 3 candidates, got {n}", no)
    return n


class _EdgeCollector:
    def __init__(self, n: int):
        self.n = n
        self.edges: list[tuple[int, int]] = []
        self.seen: set[frozenset[int]] = set()

    def add(self, toks: list[str], no: int) -> None:
        if len(toks) != 3:
            raise FormatError(f"expected 'beats <winner> <loser>', got {' '.join(toks)!r}", no)
        w = _int(toks[1], no, "winner")
        l = _int(toks[2], no, "loser")
        for x in (w, l):
            if x >= self.n:
                raise FormatError(f"candidate {x} out of range for {self.n} candidates", no)
        if w == l:
            raise FormatError(f"candidate {w} cannot beat itself", no)
        key = frozenset((w, l))
        if key in self.seen:
            raise FormatError(f"pair {{{min(w, l)}, {max(w, l)}}} listed twice", no)
        self.seen.add(key)
        self.edges.append((w, l))

    def build(self) -> ChoiceFunction:
        return ChoiceFunction.from_edges(self.n, self.edges)


def parse_cff(text: str) -> ChoiceFunction:
    lines = _lines(text)
    n = _header(lines, "cff")
    edges = _EdgeCollector(n)
    for no, toks in lines:
        if toks[0] != "beats":
            raise FormatError(f"unexpected {toks[0]!r}", no)
        edges.add(toks, no)
    return edges.build()


def _beats_lines(c: ChoiceFunction) -> list[str]:
    return [f"beats {w} {l}" for w, l in c.edges()]


def emit_cff(c: ChoiceFunction) -> str:
    return "\n".join(["cff 1", f"candidates {c.n}", *_beats_lines(c)]) + "\n"


def parse_cff_stream(text: str) -> list[ChoiceFunction]:
    """Split concatenated cff documents at their header lines."""
    docs: list[list[str]] = []
    for raw in text.splitlines():
        if raw.split("#", 1)[0].split() == ["cff", "1"]:
            docs.append([])
        if docs:
            docs[-1].append(raw)
        elif raw.split("#", 1)[0].strip():
            raise FormatError("content before first 'cff 1' header")
    return [parse_cff("\n".join(d)) for d in docs]


def emit_cff_stream(functions) -> str:
    return "\n".join(emit_cff(c) for c in functions)


def parse_pff(text: str) -> VoterProfile:
    lines = _lines(text)
    n = _header(lines, "pff")
    blocks: list[tuple[int, _EdgeCollector]] = []
    for no, toks in lines:
        if toks[0] == "voter":
            if len(toks) != 2:
                raise FormatError(f"expected 'voter <multiplicity>', got {' '.join(toks)!r}", no)
            mult = _int(toks[1], no, "multiplicity")
            if mult < 1:
                raise FormatError(f"multiplicity must be at least 1, got {mult}", no)
            blocks.append((mult, _EdgeCollector(n)))
        elif toks[0] == "beats":
            if not blocks:
                raise FormatError("'beats' before any 'voter' block", no)
            blocks[-1][1].add(toks, no)
        else:
            raise FormatError(f"unexpected {toks[0]!r}", no)
    return VoterProfile(n, ((e.build(), m) for m, e in blocks))


def emit_pff(p: VoterProfile) -> str:
    out = ["pff 1", f"candidates {p.n}"]
    for c, mult in p.entries:
        out.append("")
        out.append(f"voter {mult}")
        out.extend(_beats_lines(c))
    return "\n".join(out) + "\n"
