"""JSON row encodings for elements and +/- diagrams."""

from __future__ import annotations

import json
from typing import Any

from krcrystal.errors import InvalidDocument
from krcrystal.services.cartan import AffineWeight, CartanType
from krcrystal.services.classical import Element
from krcrystal.services.diagrams import PMDiagram


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _load(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"invalid JSON for {what}: {exc.msg}", detail=text) from exc


def parse_rows(text: str) -> list[list[int]]:
    rows = _load(text, "element")
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidDocument("an element is a list of rows", detail=text)
    for row in rows:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InvalidDocument("element rows hold signed integers", detail=text)
    return rows


def parse_diagram_rows(text: str) -> list[list[str]]:
    rows = _load(text, "diagram")
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidDocument("a diagram is a list of rows", detail=text)
    for row in rows:
        if not all(isinstance(x, str) for x in row):
            raise InvalidDocument('diagram rows hold "", "+" or "-"', detail=text)
    return rows


def encode_element(b: Element | None) -> list[list[int]] | None:
    return None if b is None else b.rows()


def decode_diagram(text: str, width: int | None = None) -> PMDiagram:
    return PMDiagram.from_rows(parse_diagram_rows(text), width=width)


def encode_diagram(P: PMDiagram) -> list[list[str]]:
    return P.rows()


def parse_weight(text: str, cartan: CartanType) -> AffineWeight:
    weight = AffineWeight.parse(text)
    if len(weight.coords) != cartan.n + 1:
        raise InvalidDocument(
            f"weight needs {cartan.n + 1} coordinates for {cartan}, got {len(weight.coords)}",
            detail=text,
        )
    return weight


def vertex_name(b: Element) -> str:
    return dumps(b.rows())
