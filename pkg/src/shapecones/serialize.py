"""JSON / CSV / text rendering of matrices and generator sets.

Entries are exact ``p/q`` strings (bare integers when q = 1), so every
format except the scaled text view round-trips bit for bit.
"""
from __future__ import annotations

import csv
import io
import json

from .exactnum import RMatrix, common_denominator, format_rational, parse_rational
from .generators import GeneratorSet


def _cells(rows):
    return [[format_rational(x) for x in r] for r in rows]


def matrix_to_json(a: RMatrix) -> str:
    return json.dumps({"n": a.n_rows, "rows": _cells(a.rows)})


def matrix_from_json(text: str) -> RMatrix:
    obj = json.loads(text)
    a = RMatrix([[parse_rational(c) for c in r] for r in obj["rows"]])
    if a.n_rows != obj["n"]:
        raise ValueError(f"declared n={obj['n']} but found {a.n_rows} rows")
    return a


def generators_to_json(gens: GeneratorSet) -> str:
    return json.dumps({"n": gens.n, "labels": list(gens.labels), "rows": _cells(gens.rows)})


def generators_from_json(text: str) -> tuple[list[str], RMatrix]:
    obj = json.loads(text)
    return list(obj["labels"]), RMatrix([[parse_rational(c) for c in r] for r in obj["rows"]])


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def matrix_to_csv(a: RMatrix) -> str:
    return _csv(_cells(a.rows))


def matrix_from_csv(text: str) -> RMatrix:
    return RMatrix([[parse_rational(c) for c in r] for r in csv.reader(io.StringIO(text)) if r])


def generators_to_csv(gens: GeneratorSet) -> str:
    """One generator per line, label first."""
    return _csv([label, *cells] for label, cells in zip(gens.labels, _cells(gens.rows)))


def generators_from_csv(text: str) -> tuple[list[str], RMatrix]:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return [r[0] for r in rows], RMatrix([[parse_rational(c) for c in r[1:]] for r in rows])


def _grid(cells, labels=None) -> str:
    w = max((len(c) for r in cells for c in r), default=1)
    lw = max((len(x) for x in labels), default=0) if labels else 0
    lines = []
    for k, r in enumerate(cells):
        head = labels[k].ljust(lw) + "  " if labels else ""
        lines.append(head + "[" + " ".join(c.rjust(w) for c in r) + "]")
    return "\n".join(lines) + "\n"


def matrix_to_text(a: RMatrix, common: bool = False, labels=None) -> str:
    """Plain grid; with ``common`` the LCD is factored out as ``1/D *``."""
    if not common:
        return _grid(_cells(a.rows), labels)
    d = common_denominator(a.entries())
    ints = [[str(x.numerator * (d // x.denominator)) for x in r] for r in a.rows]
    prefix = "" if d == 1 else f"1/{d} *\n"
    return prefix + _grid(ints, labels)
