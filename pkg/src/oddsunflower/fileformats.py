"""Plain-text family and 3DM files.

Family file::

    # comment
    universe 5
    1 2
    2 3 5

3DM file::

    n 3
    1 1 1
    2 3 1
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import ParseError
from .family import SetFamily, elements_of, mask_of
from .reduction import ReducedInstance, ThreeDMInstance


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {line!r}") from None


def parse_family_lines(text: str) -> tuple[SetFamily, list[int]]:
    """Parse a family file; also return the source line of each member in canonical order."""
    universe = None
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in _content_lines(text):
        if line.startswith("universe"):
            if universe is not None or rows:
                raise ParseError(lineno, "universe header must come first and only once")
            vals = _ints(lineno, line[len("universe"):])
            if len(vals) != 1 or vals[0] < 0:
                raise ParseError(lineno, "malformed universe header")
            universe = vals[0]
            continue
        elems = _ints(lineno, line)
        if len(set(elems)) != len(elems):
            raise ParseError(lineno, "repeated element within a set")
        if any(e < 1 for e in elems):
            raise ParseError(lineno, "elements are labeled from 1")
        rows.append((lineno, elems))
    if universe is None:
        universe = max((max(e) for _, e in rows), default=0)
    seen: dict[int, int] = {}
    for lineno, elems in rows:
        if max(elems) > universe:
            raise ParseError(lineno, f"element {max(elems)} exceeds universe {universe}")
        m = mask_of(elems)
        if m in seen:
            raise ParseError(lineno, f"duplicate of the set on line {seen[m]}")
        seen[m] = lineno
    fam = SetFamily(universe, tuple(seen))
    return fam, [seen[m] for m in fam.members]


def parse_family(text: str) -> SetFamily:
    return parse_family_lines(text)[0]


def render_family(f: SetFamily, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"universe {f.universe}")
    out.extend(" ".join(map(str, elements_of(m))) for m in f.members)
    return "\n".join(out) + "\n"


def render_sections(sections: Iterable[tuple[str, SetFamily]]) -> str:
    return "\n".join(render_family(f, [title]) for title, f in sections)


def parse_sections(text: str) -> list[SetFamily]:
    """Split a multi-family file at each ``universe`` header."""
    chunks: list[list[str]] = []
    for raw in text.splitlines():
        if raw.strip().startswith("universe"):
            chunks.append([])
        if chunks:
            chunks[-1].append(raw)
    return [parse_family("\n".join(c)) for c in chunks]


def parse_3dm(text: str) -> ThreeDMInstance:
    n = None
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple, int] = {}
    for lineno, line in _content_lines(text):
        if n is None:
            if not line.startswith("n"):
                raise ParseError(lineno, "first line must be 'n <n>'")
            vals = _ints(lineno, line[1:])
            if len(vals) != 1 or vals[0] < 1:
                raise ParseError(lineno, "malformed 'n' header")
            n = vals[0]
            continue
        vals = _ints(lineno, line)
        if len(vals) != 3:
            raise ParseError(lineno, "an edge has exactly three vertices")
        if not all(1 <= v <= n for v in vals):
            raise ParseError(lineno, f"vertex outside 1..{n}")
        e = tuple(vals)
        if e in seen:
            raise ParseError(lineno, f"duplicate of the edge on line {seen[e]}")
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise ParseError(1, "missing 'n <n>' header")
    return ThreeDMInstance(n, tuple(edges))


def render_3dm(inst: ThreeDMInstance) -> str:
    lines = [f"n {inst.n}"] + [" ".join(map(str, e)) for e in inst.edges]
    return "\n".join(lines) + "\n"


def legend_json(red: ReducedInstance) -> str:
    """Sidecar describing each element's role and each member's (edge, copy)."""
    elements = {}
    for label, role in sorted(red.element_legend.items()):
        if role[0] == "pair":
            _, x, y, reason = role
            elements[str(label)] = {"role": "pair", "copies": [list(x), list(y)], "reason": reason}
        elif role[0] == "vertex":
            elements[str(label)] = {"role": "vertex", "part": role[1], "index": role[2]}
        else:
            elements[str(label)] = {"role": "tag", "index": role[1]}
    doc = {
        "n": red.instance.n,
        "padded_n": red.padded.n,
        "edges": [list(e) for e in red.padded.edges],
        "dummy_edge": red.dummy_edge,
        # members sit on line i + 2 of a family file rendered without comments
        "members": [
            {"line": i + 2, "edge": e, "copy": c} for i, (e, c) in enumerate(red.copy_index)
        ],
        "elements": elements,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
