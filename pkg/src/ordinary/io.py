"""JSON formats for arrangements.

Every number is written as a string ``"p"`` or ``"p/q"`` so files stay
exact; plain JSON integers are accepted on input too, floats never are.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .errors import DimensionMismatch, NotAnArrangement
from .flats import HyperplaneD, canonical_hyperplane
from .geometry import Line2, Point2, canonical_line, format_scalar, to_scalar
from .pseudolines import Pseudoline

LINES = "lines"
HYPERPLANES = "hyperplanes"
PSEUDOLINES = "pseudolines"


def _scalar(value: Any, where: str):
    if isinstance(value, float):
        raise ValueError(f"{where}: floats are not exact, write {value!r} as a string like \"3/2\"")
    try:
        return to_scalar(value)
    except (TypeError, ValueError) as e:
        raise ValueError(f"{where}: {e}") from None


def _items(doc: dict, key: str) -> list:
    items = doc.get(key)
    if not isinstance(items, list):
        raise ValueError(f"expected a list under {key!r}")
    return items


def parse_arrangement(doc: Any) -> tuple[str, list]:
    """Decode a parsed JSON document into ``(kind, elements)``.

    ``kind`` is one of ``"lines"``, ``"hyperplanes"`` or ``"pseudolines"``
    and each element's ``id`` is its index in the file.
    """
    if not isinstance(doc, dict):
        raise ValueError("an arrangement must be a JSON object")
    if LINES in doc:
        out = []
        for i, e in enumerate(_items(doc, LINES)):
            w = f"line {i}"
            out.append(canonical_line(_scalar(e["a"], w), _scalar(e["b"], w), _scalar(e["c"], w),
                                      e.get("color"), i))
        return LINES, out
    if HYPERPLANES in doc:
        d = doc.get("d")
        if not isinstance(d, int) or isinstance(d, bool):
            raise ValueError("hyperplane files need an integer 'd'")
        out = []
        for i, e in enumerate(_items(doc, HYPERPLANES)):
            w = f"hyperplane {i}"
            normal = [_scalar(v, w) for v in e["normal"]]
            if len(normal) != d:
                raise DimensionMismatch(f"{w} has {len(normal)} coordinates, expected {d}")
            out.append(canonical_hyperplane(normal, _scalar(e["offset"], w), id=i))
        return HYPERPLANES, out
    if PSEUDOLINES in doc:
        out = []
        for i, e in enumerate(_items(doc, PSEUDOLINES)):
            w = f"pseudoline {i}"
            verts = tuple(Point2(_scalar(x, w), _scalar(y, w)) for x, y in e["vertices"])
            out.append(Pseudoline(verts, _scalar(e["left_slope"], w), _scalar(e["right_slope"], w),
                                  e.get("color"), i))
        return PSEUDOLINES, out
    raise NotAnArrangement("expected one of 'lines', 'hyperplanes' or 'pseudolines'")


def load_arrangement(path: str) -> tuple[str, list]:
    with open(path, encoding="utf-8") as f:
        return parse_arrangement(json.load(f))


def _line_doc(l: Line2) -> dict:
    out = {"a": format_scalar(l.a), "b": format_scalar(l.b), "c": format_scalar(l.c)}
    if l.color is not None:
        out["color"] = l.color
    return out


def _pseudoline_doc(p: Pseudoline) -> dict:
    out = {
        "vertices": [[format_scalar(v.x), format_scalar(v.y)] for v in p.vertices],
        "left_slope": format_scalar(p.left_slope),
        "right_slope": format_scalar(p.right_slope),
    }
    if p.color is not None:
        out["color"] = p.color
    return out


def arrangement_kind(elements: Sequence) -> str:
    if not elements:
        raise NotAnArrangement("empty arrangement")
    first = elements[0]
    if isinstance(first, Line2):
        return LINES
    if isinstance(first, HyperplaneD):
        return HYPERPLANES
    if isinstance(first, Pseudoline):
        return PSEUDOLINES
    raise TypeError(f"not an arrangement element: {type(first).__name__}")


def arrangement_doc(elements: Sequence) -> dict:
    kind = arrangement_kind(elements)
    if kind == LINES:
        return {LINES: [_line_doc(l) for l in elements]}
    if kind == PSEUDOLINES:
        return {PSEUDOLINES: [_pseudoline_doc(p) for p in elements]}
    return {
        "d": elements[0].dim,
        HYPERPLANES: [
            {"normal": [format_scalar(v) for v in h.normal], "offset": format_scalar(h.offset)}
            for h in elements
        ],
    }


def dumps_arrangement(elements: Sequence) -> str:
    return json.dumps(arrangement_doc(elements), indent=1)


def point_doc(point: Sequence) -> list[str]:
    return [format_scalar(x) for x in point]


def parse_point(values: Sequence, where: str = "point") -> tuple:
    return tuple(_scalar(v, where) for v in values)
