"""JSON file formats: solutions, optimality certificates and the 2D value cache."""

from __future__ import annotations

import json
from typing import Any

from .board import BoardSpec, Cell
from .errors import InvalidArgument, ParseError
from .solver import OptimalityCertificate, SubproblemRecord

SOLUTION_FORMAT = "q3d-solution-v1"
CERTIFICATE_FORMAT = "q3d-certificate-v1"
CACHE_FORMAT = "q2d-cache-v1"


def _dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _parse_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def _field(obj: dict, key: str, kind, where: str):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where or "<root>")
    if key not in obj:
        raise ParseError("missing field", f"{where}.{key}" if where else key)
    value = obj[key]
    # bool is an int subclass; keep them apart
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise ParseError("expected an integer", f"{where}.{key}" if where else key)
    if kind is not int and not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}", f"{where}.{key}" if where else key)
    return value


def _cell(value: Any, where: str) -> Cell:
    if (not isinstance(value, list) or not value
            or not all(isinstance(t, int) and not isinstance(t, bool) for t in value)):
        raise ParseError("expected a list of integer coordinates", where)
    return tuple(value)


def _check_format(obj: Any, expected: str) -> None:
    fmt = _field(obj, "format", str, "")
    if fmt != expected:
        raise ParseError(f"unsupported format {fmt!r}, expected {expected!r}", "format")


def dump_solution(spec: BoardSpec, cells, claims: dict | None = None) -> str:
    doc = {
        "format": SOLUTION_FORMAT,
        "dim": spec.dim,
        "n": spec.n,
        "queens": [list(c) for c in sorted(tuple(c) for c in cells)],
    }
    if claims:
        doc["claims"] = claims
    return _dumps(doc)


def load_solution(text: str) -> tuple[BoardSpec, list[Cell], dict]:
    obj = _parse_json(text)
    _check_format(obj, SOLUTION_FORMAT)
    dim = _field(obj, "dim", int, "")
    n = _field(obj, "n", int, "")
    try:
        spec = BoardSpec(dim, n)
    except InvalidArgument as exc:
        raise ParseError(str(exc), "dim/n") from None
    queens = _field(obj, "queens", list, "")
    cells = []
    for i, q in enumerate(queens):
        c = _cell(q, f"queens[{i}]")
        if not spec.contains(c):
            raise ParseError(f"cell {list(c)} is off the board", f"queens[{i}]")
        cells.append(c)
    claims = obj.get("claims") or {}
    if not isinstance(claims, dict):
        raise ParseError("expected an object", "claims")
    return spec, cells, claims


def certificate_to_dict(cert: OptimalityCertificate) -> dict:
    subs = sorted(cert.subproblems, key=lambda s: tuple(s.first_queen))
    return {
        "format": CERTIFICATE_FORMAT,
        "n": cert.n,
        "k": cert.k,
        "witness": [list(c) for c in sorted(tuple(c) for c in cert.witness)],
        "budget": cert.budget,
        "symmetry_used": cert.symmetry_used,
        "subproblems": [
            {"first_queen": list(s.first_queen), "status": s.status, "nodes": s.nodes}
            for s in subs
        ],
    }


def dump_certificate(cert: OptimalityCertificate) -> str:
    return _dumps(certificate_to_dict(cert))


def load_certificate(text: str) -> OptimalityCertificate:
    obj = _parse_json(text)
    _check_format(obj, CERTIFICATE_FORMAT)
    n = _field(obj, "n", int, "")
    k = _field(obj, "k", int, "")
    budget = _field(obj, "budget", int, "")
    symmetry_used = _field(obj, "symmetry_used", bool, "")
    witness = [_cell(c, f"witness[{i}]") for i, c in enumerate(_field(obj, "witness", list, ""))]
    subs = []
    for i, s in enumerate(_field(obj, "subproblems", list, "")):
        where = f"subproblems[{i}]"
        subs.append(SubproblemRecord(
            first_queen=_cell(_field(s, "first_queen", list, where), f"{where}.first_queen"),
            status=_field(s, "status", str, where),
            nodes=_field(s, "nodes", int, where),
        ))
    return OptimalityCertificate(n, k, witness, budget, subs, symmetry_used)


def load_cache(text: str) -> dict[int, int]:
    obj = _parse_json(text)
    _check_format(obj, CACHE_FORMAT)
    values = _field(obj, "values", dict, "")
    out = {}
    for key, v in values.items():
        if not key.isdigit() or isinstance(v, bool) or not isinstance(v, int):
            raise ParseError("expected \"n\": integer entries", f"values.{key}")
        out[int(key)] = v
    return out


def dump_cache(values: dict[int, int]) -> str:
    return _dumps({"format": CACHE_FORMAT,
                   "values": {str(n): values[n] for n in sorted(values)}})
