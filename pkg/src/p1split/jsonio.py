"""JSON encoding of field elements, matrices, instance files and result files."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .laurent import Laurent
from .polyring import Poly, RatFun
from .scalar import Field, field_from_json


class InstanceError(ValueError):
    """Malformed instance or result file; the message names the offending field."""


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def element_to_json(x):
    return x.to_json()


def element_from_json(field: Field, obj, where: str = "entry"):
    try:
        if isinstance(obj, dict) and "num" in obj:
            return RatFun.from_json(field, obj)
        return Laurent.from_json(field, obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InstanceError(f"{where}: {exc}") from None


def matrix_to_json(M):
    return [[element_to_json(x) for x in row] for row in M]


def matrix_from_json(field: Field, obj, d: int | None = None, where: str = "matrix", poly=False):
    if not isinstance(obj, list) or not obj:
        raise InstanceError(f"{where}: expected a non-empty array of rows")
    n = len(obj) if d is None else d
    if len(obj) != n:
        raise InstanceError(f"{where}: expected {n} rows, got {len(obj)}")
    out = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise InstanceError(f"{where}[{i}]: expected an array of {n} entries")
        parsed = []
        for j, x in enumerate(row):
            loc = f"{where}[{i}][{j}]"
            if poly:
                try:
                    parsed.append(Poly.from_json(field, x))
                except (ValueError, TypeError) as exc:
                    raise InstanceError(f"{loc}: {exc}") from None
            else:
                parsed.append(element_from_json(field, x, loc))
        out.append(parsed)
    return out


@dataclass
class Instance:
    field: Field
    dim: int
    matrix: list
    weights: tuple | None = None
    expected: list | None = None
    seed: int | None = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def is_rational(self) -> bool:
        return any(isinstance(x, RatFun) for row in self.matrix for x in row)

    def to_json(self) -> dict:
        out = {"field": self.field.to_json(), "dim": self.dim, "matrix": matrix_to_json(self.matrix)}
        if self.weights is not None:
            out["weights"] = list(self.weights)
        if self.expected is not None:
            out["expected"] = list(self.expected)
        if self.seed is not None:
            out["seed"] = self.seed
        out.update(self.extra)
        return out


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_instance(obj, source: str = "instance") -> Instance:
    if not isinstance(obj, dict):
        raise InstanceError(f"{source}: top level must be an object")
    for key in ("field", "dim", "matrix"):
        if key not in obj:
            raise InstanceError(f"{source}: missing field '{key}'")
    try:
        field = field_from_json(obj["field"])
    except ValueError as exc:
        raise InstanceError(f"{source}: field: {exc}") from None
    d = obj["dim"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InstanceError(f"{source}: dim must be a positive integer, got {d!r}")
    M = matrix_from_json(field, obj["matrix"], d)
    weights = obj.get("weights")
    if weights is not None:
        if (not isinstance(weights, list) or len(weights) != d
                or any(isinstance(w, bool) or not isinstance(w, int) for w in weights)):
            raise InstanceError(f"{source}: weights must be an array of {d} integers")
        weights = tuple(weights)
    extra = {k: v for k, v in obj.items()
             if k not in ("field", "dim", "matrix", "weights", "expected", "seed")}
    return Instance(field, d, M, weights, obj.get("expected"), obj.get("seed"), extra)


def load_instance(path) -> Instance:
    text = Path(path).read_text(encoding="utf-8")
    return parse_instance(_load_json(text, str(path)), str(path))


def load_json_file(path):
    return _load_json(Path(path).read_text(encoding="utf-8"), str(path))
