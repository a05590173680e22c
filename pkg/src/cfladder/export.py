"""Deterministic CSV, JSON and SVG writers for expansions, ladders and
quotient statistics."""
from __future__ import annotations

import csv
import io
import json

from .cf import Expansion, convergent
from .ladder import Ladder, offset_series
from .stats import KuzminReport

EXPAND_COLUMNS = ("n", "b_n", "p_n", "q_n")
LADDER_COLUMNS = ("i", "n", "k", "r", "s", "t", "value", "lower", "upper")
OFFSET_COLUMNS = ("i", "n_minus_k")
STATS_COLUMNS = ("k", "count", "empirical", "expected", "deviation")


def expansion_rows(exp: Expansion) -> list[tuple]:
    return [(n, b, *convergent(exp, n)) for n, b in enumerate(exp.quotients)]


def ladder_rows(ladder: Ladder) -> list[tuple]:
    return [(i, c.n, c.k, c.r, c.s, c.t, c.value, c.lower, c.upper)
            for i, c in enumerate(ladder.connections, start=1)]


def offset_rows(ladder: Ladder) -> list[tuple]:
    return [tuple(row) for row in offset_series(ladder)]


def stats_rows(report: KuzminReport) -> list[tuple]:
    return [(k, c, f"{e:.10f}", f"{x:.10f}", f"{d:+.10f}") for k, c, e, x, d in report.rows()]


def to_csv(meta: dict, columns, rows) -> str:
    """CSV body preceded by ``# key: value`` metadata lines."""
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {value}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def _jsonable(v):
    if isinstance(v, (int, float, str)) or v is None:
        return v
    return str(v)


def to_json(meta: dict, columns, rows) -> str:
    records = [{c: _jsonable(v) for c, v in zip(columns, row)} for row in rows]
    return json.dumps({"meta": meta, "rows": records}, indent=1) + "\n"


def render(fmt: str, meta: dict, columns, rows) -> str:
    if fmt == "json":
        return to_json(meta, columns, rows)
    return to_csv(meta, columns, rows)


def parse_csv(text: str) -> tuple[dict, list[dict]]:
    """Inverse of :func:`to_csv`: metadata dict and row dicts (string values)."""
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = value
        else:
            body.append(line)
    return meta, list(csv.DictReader(body))


ROW_HEIGHT = 16
LEFT_X, RIGHT_X = 140, 360


def ladder_svg(ladder: Ladder, xi_label: str = "xi", eta_label: str = "eta") -> str:
    """Two columns of partial quotients joined by straight connection segments.

    Quotients of at least 2m+1 are drawn bold in red.
    """
    ex, ee, m = ladder.exp_xi, ladder.exp_eta, ladder.m
    N, K = ex.last_index, ee.last_index
    rows = max(N, K)
    top = 60
    height = top + rows * ROW_HEIGHT + 20
    big = 2 * m + 1

    def y(i):
        return top + (i - 1) * ROW_HEIGHT

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="500" height="{height}" '
        f'viewBox="0 0 500 {height}" font-family="monospace" font-size="11">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{LEFT_X}" y="20" text-anchor="middle">{_esc(xi_label)}</text>',
        f'<text x="{RIGHT_X}" y="20" text-anchor="middle">{_esc(eta_label)}</text>',
        f'<text x="250" y="38" text-anchor="middle">m = {m}, '
        f'{len(ladder.connections)} connections</text>',
    ]
    for c in ladder.connections:
        out.append(f'<line x1="{LEFT_X + 6}" y1="{y(c.n) - 4}" x2="{RIGHT_X - 6}" '
                   f'y2="{y(c.k) - 4}" stroke="#3366aa" stroke-width="1"/>')
    for col_x, exp, anchor, sym in ((LEFT_X, ex, "end", "n"), (RIGHT_X, ee, "start", "k")):
        idx_x = col_x - 60 if anchor == "end" else col_x + 60
        for i in range(1, exp.last_index + 1):
            b = exp.quotients[i]
            style = ' font-weight="bold" fill="#cc0000"' if b >= big else ""
            out.append(f'<text x="{col_x}" y="{y(i)}" text-anchor="{anchor}"{style}>{b}</text>')
            out.append(f'<text x="{idx_x}" y="{y(i)}" text-anchor="middle" '
                       f'fill="#888888">{sym}={i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
