"""Table export: JSON, CSV, LaTeX tabular and plain text."""

from __future__ import annotations

import csv
import io
import json

from .errors import PoleError
from .exactfield import qrat_eval
from .qeuler import carlitz_beta, carlitz_q_euler, euler_q_recurrence

KINDS = {
    "euler-q": ("euler_q", "E"),
    "beta-q": ("beta_q", "beta"),
    "carlitz-h": ("carlitz_h", "H"),
}
FORMATS = ("json", "csv", "latex", "text")


def build_table(kind, n_max, u=None):
    """Values ``0..n_max`` of the requested sequence as a list of QRat."""
    if kind == "euler-q":
        return list(euler_q_recurrence(n_max))
    if kind == "beta-q":
        return list(carlitz_beta(n_max))
    if kind == "carlitz-h":
        return list(carlitz_q_euler(u, n_max))
    raise ValueError(f"unknown table kind {kind!r}")


def limit_at_one(value):
    """Exact value at ``q = 1`` as text, or ``"pole"``."""
    try:
        return str(qrat_eval(value, 1))
    except PoleError:
        return "pole"


def render_json(kind, values, u=None):
    payload = {"kind": KINDS[kind][0], "n_max": len(values) - 1}
    if u is not None:
        payload["u"] = str(u)
    payload["values"] = [v.to_json() for v in values]
    return json.dumps(payload, indent=2) + "\n"


def render_csv(kind, values, u=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "num", "den", "limit_q1"])
    for n, v in enumerate(values):
        writer.writerow([n, v.num.human(), v.den.human(), limit_at_one(v)])
    return buf.getvalue()


def _symbol(kind, n, u=None):
    letter = KINDS[kind][1]
    if kind == "carlitz-h":
        return f"H_{{{n}}}({u}; q)"
    return f"{letter}_{{{n},q}}"


def render_latex(kind, values, u=None):
    head = {"euler-q": r"E_{n,q}", "beta-q": r"\beta_{n,q}", "carlitz-h": rf"H_n({u};q)"}[kind]
    lines = [
        r"\begin{tabular}{rll}",
        r"\hline",
        rf"$n$ & ${head}$ & $q \to 1$ \\",
        r"\hline",
    ]
    for n, v in enumerate(values):
        lim = limit_at_one(v)
        lim_tex = lim if "/" not in lim else r"\frac{%s}{%s}" % tuple(lim.lstrip("-").split("/"))
        if lim.startswith("-") and "/" in lim:
            lim_tex = "-" + lim_tex
        if lim == "pole":
            lim_tex = r"\text{pole}"
        lines.append(rf"{n} & ${v.latex()}$ & ${lim_tex}$ \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def render_text(kind, values, u=None):
    lines = []
    for n, v in enumerate(values):
        lines.append(f"{_symbol(kind, n, u)} = {v.human()}    [q -> 1: {limit_at_one(v)}]")
    return "\n".join(lines) + "\n"


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "latex": render_latex,
    "text": render_text,
}


def render(kind, values, fmt, u=None):
    return RENDERERS[fmt](kind, values, u)
