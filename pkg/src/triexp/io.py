"""CSV series files and the JSON model document."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

import numpy as np

from .errors import InvalidModel, ParseError
from .prony import ExponentialModel, ExpTerm
from .series import DataPoint, TimeSeries, validate_series

SCHEMA_VERSION = 1


def _num(x: float) -> str:
    # repr is the shortest string that parses back to the same double
    return repr(float(x))


def parse_series_csv(text: str, *, year_origin: float | None = None, name: str = "") -> TimeSeries:
    """Parse ``t,value`` or ``year,value`` CSV text.

    The delimiter is a comma or a semicolon, decided by the header line. With
    semicolons a decimal comma is accepted. A ``year`` column needs
    ``year_origin``; the abscissa is then ``year - year_origin``.
    """
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError("empty CSV input")
    hrow, header = lines[0]
    delim = ";" if ";" in header else ","
    cols = [c.strip().lower() for c in header.split(delim)]
    if cols not in (["t", "value"], ["year", "value"]):
        raise ParseError(f"row {hrow}: header must be 't,value' or 'year,value', got {header!r}")
    by_year = cols[0] == "year"
    if by_year and year_origin is None:
        raise ParseError("a 'year' column needs --year-origin")

    points = []
    for row, line in lines[1:]:
        fields = [f.strip() for f in line.split(delim)]
        if len(fields) != 2:
            raise ParseError(f"row {row}: expected 2 fields separated by {delim!r}, got {len(fields)}")
        vals = []
        for col, raw in enumerate(fields, start=1):
            token = raw.replace(",", ".") if delim == ";" else raw
            try:
                vals.append(float(token))
            except ValueError:
                raise ParseError(f"row {row}, column {col}: cannot parse number {raw!r}") from None
        t, y = vals
        if by_year:
            t -= year_origin
        points.append(DataPoint(t, y))
    return validate_series(points, name=name)


def ingest_csv(path: str | Path, *, year_origin: float | None = None) -> TimeSeries:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc})") from None
    return parse_series_csv(text, year_origin=year_origin, name=path.stem)


def write_series_csv(series: TimeSeries, out: TextIO) -> None:
    out.write("t,value\n")
    for p in series:
        out.write(f"{_num(p.t)},{_num(p.y)}\n")


def write_eval_csv(t: np.ndarray, values: np.ndarray, out: TextIO) -> None:
    out.write("t,re,im\n")
    for a, v in zip(t, values):
        out.write(f"{_num(a)},{_num(v.real)},{_num(v.imag)}\n")


@dataclass(frozen=True)
class ModelDocument:
    model: ExponentialModel
    meta: dict[str, str] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION


def serialize_model(doc: ModelDocument | ExponentialModel) -> str:
    if isinstance(doc, ExponentialModel):
        doc = ModelDocument(doc)
    payload = {
        "schema_version": doc.schema_version,
        "dt": doc.model.dt,
        "terms": [
            {"amp": [t.amplitude.real, t.amplitude.imag], "exp": [t.exponent.real, t.exponent.imag]}
            for t in doc.model.terms
        ],
        "meta": {str(k): str(v) for k, v in doc.meta.items()},
    }
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _pair(value, where: str) -> complex:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise ParseError(f"{where}: expected [re, im]")
    re, im = (float(v) for v in value)
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ParseError(f"{where}: non-finite number")
    return complex(re, im)


def _reject_constant(token: str):
    raise ParseError(f"non-finite number {token} in model document")


def parse_model(text: str) -> ModelDocument:
    """Parse a schema-1 model document; unknown or missing fields are errors."""
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"model document is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("model document must be a JSON object")
    expected = {"schema_version", "dt", "terms", "meta"}
    unknown = set(data) - expected
    if unknown:
        raise ParseError(f"unknown fields in model document: {sorted(unknown)}")
    missing = {"schema_version", "dt", "terms"} - set(data)
    if missing:
        raise ParseError(f"missing fields in model document: {sorted(missing)}")
    if data["schema_version"] != SCHEMA_VERSION or isinstance(data["schema_version"], bool):
        raise ParseError(f"unsupported schema_version {data['schema_version']!r}")
    dt = data["dt"]
    if isinstance(dt, bool) or not isinstance(dt, (int, float)):
        raise ParseError("dt must be a number")
    terms = data["terms"]
    if not isinstance(terms, list) or not terms:
        raise ParseError("terms must be a nonempty list")
    parsed = []
    for i, term in enumerate(terms):
        if not isinstance(term, dict) or set(term) != {"amp", "exp"}:
            raise ParseError(f"terms[{i}] must have exactly the fields 'amp' and 'exp'")
        parsed.append(ExpTerm(_pair(term["amp"], f"terms[{i}].amp"), _pair(term["exp"], f"terms[{i}].exp")))
    meta = data.get("meta", {})
    if not isinstance(meta, dict) or not all(isinstance(v, str) for v in meta.values()):
        raise ParseError("meta must map names to strings")
    try:
        model = ExponentialModel(tuple(parsed), dt=float(dt))
    except InvalidModel as exc:
        raise ParseError(f"invalid model: {exc}") from None
    return ModelDocument(model, dict(meta))


def read_model(path: str | Path) -> ModelDocument:
    try:
        return parse_model(Path(path).read_text(encoding="utf-8"))
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8 ({exc})") from None


def write_model(doc: ModelDocument, path: str | Path) -> None:
    Path(path).write_text(serialize_model(doc), encoding="utf-8", newline="\n")

