"""JSON encodings shared by the library and the command line."""

from __future__ import annotations

import json
from fractions import Fraction

SCHEMA_VERSION = "v1"


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def parse_rational(obj) -> Fraction:
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return Fraction(obj)


def to_plain(obj):
    """Recursively turn library values into JSON-compatible data."""
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [to_plain(v) for v in sorted(obj)]
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def dumps(obj, *, indent: int | None = None, stable: bool = False) -> str:
    if stable:
        return json.dumps(to_plain(obj), indent=indent, sort_keys=True, separators=(",", ":") if indent is None else (",", ": "))
    return json.dumps(to_plain(obj), indent=indent)
