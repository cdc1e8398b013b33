"""Exact JSON reading and writing.

Numbers are read from their token text (``0.1`` is ``1/10``). Rationals are
written as ``{"num": n, "den": d, "decimal": "..."}`` so that documents
re-parse to identical values.
"""

from __future__ import annotations

import json
import os
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ParseError, RangeError
from .grades import THFE, IntervalUnionHFE, normalize

DEFAULT_PRECISION = 4


def default_precision() -> int:
    raw = os.environ.get("HL_PRECISION")
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParseError(f"HL_PRECISION must be an integer, got {raw!r}") from exc
    if value < 0:
        raise ParseError("HL_PRECISION must be nonnegative")
    return value


def loads(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def load_document(arg: str) -> Any:
    """Read ``arg`` as a file path if one exists, otherwise as inline JSON."""
    path = Path(arg)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    if is_file:
        return loads(path.read_text(encoding="utf-8"))
    return loads(arg)


def to_hfe(doc: Any) -> THFE | IntervalUnionHFE:
    """A list of numbers becomes a THFE, a list of piece objects an interval union."""
    if isinstance(doc, dict) and "pieces" in doc:
        doc = doc["pieces"]
    if not isinstance(doc, list):
        raise ParseError(f"expected a JSON array of grades or pieces, got {type(doc).__name__}")
    if doc and all(isinstance(item, dict) for item in doc):
        return IntervalUnionHFE.parse(doc)
    if any(isinstance(item, (dict, list, str, bool)) or item is None for item in doc):
        raise ParseError("an HFE literal must be an array of numbers or an array of piece objects")
    return normalize(doc)


def to_thfe(doc: Any) -> THFE:
    value = to_hfe(doc)
    if isinstance(value, IntervalUnionHFE):
        if not value.is_finite:
            raise RangeError("this operation needs a finite set of grades")
        return value.to_thfe()
    return value


def render(value: Fraction, precision: int) -> str:
    """Decimal rendering with round-half-even at ``precision`` places."""
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return str(d.quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN))


def encode(obj: Any, precision: int) -> Any:
    """Convert nested values to JSON-ready data, tagging rationals with their exact form."""
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator, "decimal": render(obj, precision)}
    if isinstance(obj, float):
        return obj
    if isinstance(obj, THFE):
        return [encode(g, precision) for g in obj.grades]
    if isinstance(obj, IntervalUnionHFE):
        return encode(obj.to_doc(), precision)
    if isinstance(obj, dict):
        return {str(k): encode(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v, precision) for v in obj]
    return obj


def dumps(obj: Any, precision: int) -> str:
    return json.dumps(encode(obj, precision), indent=2, ensure_ascii=False)


def decode(obj: Any) -> Any:
    """Inverse of :func:`encode` for rationals: ``{"num", "den", ...}`` back to Fraction."""
    if isinstance(obj, dict):
        if set(obj) >= {"num", "den"}:
            return Fraction(int(obj["num"]), int(obj["den"]))
        return {k: decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    return obj
