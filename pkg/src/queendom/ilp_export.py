"""Export the domination ILP as an LP-format text model, and read it back.

The model is ``min 1'x  s.t. (A + I) x >= 1, x binary`` with one cover row
per cell, optionally extended by

* symmetry rows ``x_c - sum(x_c' for c' before c) <= 0`` for c outside the
  fundamental domain, and
* a budget row ``sum(x) <= k``.

``parse_lp`` and ``solve_lp`` replay a model from its text alone, so an
exported file can be checked without going through the board tables.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field

from .board import BoardSpec, Cell, build_adjacency, iter_bits
from .errors import InvalidArgument, ParseError, ResourceLimit
from .symmetry import in_fundamental_domain

_NAME = re.compile(r"^x(?:_(\d+))+$")


def var_name(cell: Cell) -> str:
    return "x_" + "_".join(str(t) for t in cell)


def _row_name(prefix: str, cell: Cell) -> str:
    return prefix + "_" + "_".join(str(t) for t in cell)


def _sum(names) -> str:
    return " + ".join(names)


def export_lp(spec: BoardSpec, symmetry: bool = False, budget: int | None = None) -> str:
    if budget is not None and budget < 0:
        raise InvalidArgument("budget must be >= 0")
    if symmetry and spec.dim != 3:
        raise InvalidArgument("symmetry rows are only defined for 3D boards")
    cells = list(spec.cells())
    names = [var_name(c) for c in cells]
    masks = build_adjacency(spec).masks

    lines = [
        f"\\ queen domination ILP, dim={spec.dim} n={spec.n}",
        "Minimize",
        f" obj: {_sum(names)}",
        "Subject To",
    ]
    for i, c in enumerate(cells):
        lines.append(f" {_row_name('cover', c)}: {_sum(names[j] for j in iter_bits(masks[i]))} >= 1")
    if symmetry:
        for i, c in enumerate(cells):
            if not in_fundamental_domain(spec, c):
                earlier = " ".join(f"- {names[j]}" for j in range(i))
                lines.append(f" {_row_name('sym', c)}: {earlier} + {names[i]} <= 0")
    if budget is not None:
        lines.append(f" budget: {_sum(names)} <= {budget}")
    lines.append("Binary")
    lines.extend(f" {name}" for name in names)
    lines.append("End")
    return "\n".join(lines) + "\n"


@dataclass
class LpRow:
    name: str
    coeffs: dict[str, int]
    sense: str
    rhs: int


@dataclass
class LpModel:
    objective: dict[str, int]
    rows: list[LpRow] = field(default_factory=list)
    binaries: list[str] = field(default_factory=list)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([A-Za-z_][\w.]*)")


def _parse_expr(text: str, where: str) -> dict[str, int]:
    coeffs: dict[str, int] = {}
    text = text.strip()
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise ParseError(f"cannot read term near {text[pos:pos + 20]!r}", where)
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coef = -coef
        coeffs[m.group(3)] = coeffs.get(m.group(3), 0) + coef
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return coeffs


def parse_lp(text: str) -> LpModel:
    """Read the LP dialect written by ``export_lp`` (CPLEX-style, unit-free rows)."""
    sections = {"minimize": "obj", "subject to": "rows", "binary": "bin",
                "binaries": "bin", "end": "end"}
    section = None
    # (section, statement text, first line number); a statement may span lines
    statements: list[list] = []
    binaries: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("\\", 1)[0].strip()
        if not line:
            continue
        key = line.lower()
        if key in sections:
            section = sections[key]
            if section == "end":
                break
            continue
        if section is None:
            raise ParseError("content before the Minimize section", f"line {lineno}")
        if section == "bin":
            binaries.extend(line.split())
        elif (re.match(r"^[A-Za-z_][\w.]*\s*:", line) or not statements
              or statements[-1][0] != section):
            statements.append([section, line, lineno])
        else:
            statements[-1][1] += " " + line
    if section != "end":
        raise ParseError("missing End section", "end of file")

    objective = None
    rows = []
    for sec, stmt, lineno in statements:
        where = f"line {lineno}"
        name, sep, body = stmt.partition(":")
        if not sep:
            raise ParseError("statement without a name", where)
        name = name.strip()
        if sec == "obj":
            if objective is not None:
                raise ParseError("more than one objective", where)
            objective = _parse_expr(body, where)
            continue
        m = re.match(r"^(.*?)(<=|>=|=<|=>|=)\s*(-?\d+)\s*$", body)
        if not m:
            raise ParseError("row needs a sense and an integer right-hand side", where)
        sense = {"=<": "<=", "=>": ">="}.get(m.group(2), m.group(2))
        rows.append(LpRow(name, _parse_expr(m.group(1), where), sense, int(m.group(3))))
    if objective is None:
        raise ParseError("missing objective", "Minimize")
    return LpModel(objective, rows, binaries)


@dataclass
class LpSolution:
    value: int
    assignment: dict[str, int]


def solve_lp(model: LpModel, time_limit: float | None = None) -> LpSolution | None:
    """Optimise a parsed 0/1 covering model; ``None`` if it is infeasible.

    Supported rows: covering rows (unit coefficients, ``>= 1``) and ``<=``
    rows with coefficients in {-1, +1}.  Budgets are tried upward from 0;
    each is searched by branching on the least-covered cover row, then by
    repairing any violated ``<=`` row with one of its negative variables.
    """
    names = sorted(set(model.objective) | {v for r in model.rows for v in r.coeffs})
    if any(model.objective.get(v, 0) != 1 for v in names):
        raise InvalidArgument("replay supports the unit objective over all variables only")
    idx = {v: i for i, v in enumerate(names)}
    covers: list[int] = []
    leq: list[tuple[int, int, int]] = []
    for r in model.rows:
        pos = neg = 0
        for v, a in r.coeffs.items():
            if a == 1:
                pos |= 1 << idx[v]
            elif a == -1:
                neg |= 1 << idx[v]
            elif a != 0:
                raise InvalidArgument(f"row {r.name}: replay supports coefficients +-1 only")
        if r.sense == ">=" and not neg and r.rhs == 1:
            covers.append(pos)
        elif r.sense == "<=":
            leq.append((pos, neg, r.rhs))
        else:
            raise InvalidArgument(f"row {r.name}: unsupported row form for replay")

    nvars = len(names)
    var_rows = [0] * nvars
    for j, row in enumerate(covers):
        for v in iter_bits(row):
            var_rows[v] |= 1 << j
    deadline = None if time_limit is None else time.monotonic() + time_limit
    all_rows = (1 << len(covers)) - 1

    def leq_ok(ones: int, free: int) -> bool:
        return all((pos & ones).bit_count() - (neg & (ones | free)).bit_count() <= rhs
                   for pos, neg, rhs in leq)

    def repair(ones: int, free: int, r: int) -> int | None:
        for pos, neg, rhs in leq:
            if (pos & ones).bit_count() - (neg & ones).bit_count() > rhs:
                if r == 0:
                    return None
                for v in iter_bits(neg & free):
                    free &= ~(1 << v)
                    got = ones | (1 << v)
                    if leq_ok(got, free):
                        found = repair(got, free, r - 1)
                        if found is not None:
                            return found
                return None
        return ones

    def cover(ones: int, free: int, unc: int, r: int) -> int | None:
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimit("LP replay hit its time limit")
        if not unc:
            return repair(ones, free, r)
        if r == 0:
            return None
        gains = sorted(((var_rows[v] & unc).bit_count() for v in iter_bits(free)), reverse=True)
        if sum(gains[:r]) < unc.bit_count():
            return None
        target, fewest = -1, None
        for j in iter_bits(unc):
            k = (covers[j] & free).bit_count()
            if fewest is None or k < fewest:
                target, fewest = j, k
        for v in iter_bits(covers[target] & free):
            free &= ~(1 << v)
            got = ones | (1 << v)
            if leq_ok(got, free):
                found = cover(got, free, unc & ~var_rows[v], r - 1)
                if found is not None:
                    return found
        return None

    everything = (1 << nvars) - 1
    if not leq_ok(0, everything):
        return None
    for budget in range(nvars + 1):
        ones = cover(0, everything, all_rows, budget)
        if ones is not None:
            return LpSolution(ones.bit_count(),
                              {v: (ones >> i) & 1 for i, v in enumerate(names)})
    return None


def import_solution(spec: BoardSpec, assignment: dict[str, object]) -> list[Cell]:
    """Cells whose variable is 1 in an external solver's assignment."""
    cells = []
    for name, raw in assignment.items():
        m = _NAME.match(name)
        coords = name.split("_")[1:] if m else []
        if not m or len(coords) != spec.dim:
            raise ParseError(f"unknown variable {name!r}", name)
        cell = tuple(int(t) for t in coords)
        if not spec.contains(cell):
            raise ParseError(f"coordinates out of range for n={spec.n}", name)
        try:
            value = float(raw)
        except (TypeError, ValueError):
            raise ParseError(f"non-numeric value {raw!r}", name) from None
        if abs(value - round(value)) > 1e-6 or round(value) not in (0, 1):
            raise ParseError(f"non-binary value {raw!r}", name)
        if round(value) == 1:
            cells.append(cell)
    return sorted(set(cells))


def parse_assignment(text: str) -> dict[str, str]:
    """Read ``name value`` pairs, one per line; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'name value'", f"line {lineno}")
        out[parts[0]] = parts[1]
    return out
