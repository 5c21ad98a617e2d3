"""Exact JSON encoding of rationals, data files and certificates."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Mapping

from .certify import MiscData
from .identities import AmbientKind
from .prodproj import ProdData
from .schubert import GrassData

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class DataFileError(ValueError):
    pass


def parse_rational(x: Any, where: str = "value") -> Fraction:
    if isinstance(x, bool):
        raise DataFileError(f"{where}: expected an integer or 'p/q' string, got a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL.match(x)
        if m:
            num, den = m.groups()
            if den is not None and int(den) == 0:
                raise DataFileError(f"{where}: zero denominator in {x!r}")
            return Fraction(int(num), int(den or 1))
    raise DataFileError(f"{where}: expected an integer or 'p/q' string, got {x!r}")


def render_rational(x: Fraction | int):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(obj: Any) -> Any:
    """Replace every Fraction by its exact rendering, recursively."""
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, Mapping):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True)


def _array(doc: Mapping, name: str, length: int, ambient: str) -> tuple:
    if name not in doc:
        raise DataFileError(f"{ambient}: missing field {name!r}")
    arr = doc[name]
    if not isinstance(arr, list):
        raise DataFileError(f"{ambient}: field {name!r} must be an array")
    if len(arr) != length:
        raise DataFileError(f"{ambient}: field {name!r} needs {length} entries, got {len(arr)}")
    return tuple(parse_rational(x, f"{name}[{i}]") for i, x in enumerate(arr, 1))


def _n(doc: Mapping, ambient: str, least: int) -> int:
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < least:
        raise DataFileError(f"{ambient}: field 'n' must be an integer >= {least}")
    return n


def data_from_dict(doc: Mapping):
    if not isinstance(doc, Mapping):
        raise DataFileError("data file must hold a JSON object")
    tag = doc.get("ambient")
    try:
        kind = AmbientKind(tag)
    except ValueError:
        known = ", ".join(k.value for k in AmbientKind)
        raise DataFileError(f"unknown ambient {tag!r}; expected one of {known}") from None
    if kind == AmbientKind.GRASS:
        n = _n(doc, tag, 4)
        return GrassData(
            n,
            _array(doc, "a", n // 2, tag),
            _array(doc, "alpha", (n + 1) // 2, tag),
            _array(doc, "lambda", n // 2, tag),
        )
    if kind == AmbientKind.PROD:
        n = _n(doc, tag, 3)
        return ProdData(
            n,
            _array(doc, "a", n - 1, tag),
            _array(doc, "alpha", n, tag),
            _array(doc, "lambda", n - 1, tag),
        )
    fields = MiscData.FIELDS[kind]
    extra = sorted(set(doc) - set(fields) - {"ambient", "n"})
    if extra:
        raise DataFileError(f"{tag}: unexpected fields {extra}")
    missing = [f for f in fields if f not in doc]
    if missing:
        raise DataFileError(f"{tag}: missing fields {missing}")
    return MiscData(kind, {f: parse_rational(doc[f], f) for f in fields})


def data_to_dict(data) -> dict:
    if isinstance(data, GrassData):
        tag = AmbientKind.GRASS.value
    elif isinstance(data, ProdData):
        tag = AmbientKind.PROD.value
    elif isinstance(data, MiscData):
        out = {"ambient": data.kind.value}
        out.update({k: render_rational(v) for k, v in data.values.items()})
        return out
    else:
        raise TypeError(f"unsupported data type {type(data).__name__}")
    return {
        "ambient": tag,
        "n": data.n,
        "a": [render_rational(x) for x in data.a],
        "alpha": [render_rational(x) for x in data.alpha],
        "lambda": [render_rational(x) for x in data.lambda_],
    }


def loads_data(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return data_from_dict(doc)
    except DataFileError:
        raise
    except ValueError as exc:
        raise DataFileError(str(exc)) from None


def load_data(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads_data(fh.read())
