"""Text, LaTeX and JSON renderings of sequences, equations and reports."""

from __future__ import annotations

import json
from fractions import Fraction

from . import sequences as seq
from .polys import Poly, lcm_all

# -- plain text ---------------------------------------------------------------


def _poly_text(p: Poly) -> str:
    return p.to_str("n")


def _poly_latex(p: Poly) -> str:
    out = ""
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        power = "" if k == 0 else "n" if k == 1 else f"n^{{{k}}}"
        body = power if (mag == 1 and k) else f"{_frac_latex(mag)}{power}"
        out += ("-" if c < 0 else "+" if out else "") + body
    return out or "0"


def _frac_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def _split(f: seq.SeqExpr):
    const = Fraction(0)
    poly = Poly()
    atoms = []
    for c, atom in seq.terms_of(f):
        if atom == seq.ONE:
            const = c
        elif isinstance(atom, seq.Mono):
            poly = poly + Poly.monomial(atom.k, c)
        else:
            atoms.append((c, atom))
    return const, poly, atoms


def _grouped_poly(poly: Poly):
    """(sign, numerator poly with integer coefficients, denominator)."""
    d = lcm_all(c.denominator for c in poly.coeffs)
    num = poly * d
    nonzero = [c for c in num.coeffs if c != 0]
    if all(c < 0 for c in nonzero):
        return -1, -num, d
    return 1, num, d


def _atom_text(atom: seq.SeqExpr) -> str:
    if isinstance(atom, seq.Recip):
        return "1/n" if atom.m == 1 else "1/n^2"
    if isinstance(atom, seq.Harmonic):
        return "sum_{k=1}^{n-1} 1/k" if atom.m == 1 else "sum_{k=1}^{n-1} 1/k^2"
    if isinstance(atom, seq.Conv):
        return f"conv({seq_to_text(atom.left)}, {seq_to_text(atom.right)})"
    return seq_to_text(atom)


def seq_to_text(f: seq.SeqExpr) -> str:
    """Human-readable closed form, e.g. ``1 + (n^2 - n)/2``."""
    const, poly, atoms = _split(f)
    pieces = []  # (sign, body)
    if const:
        pieces.append((1 if const > 0 else -1, str(abs(const))))
    if poly:
        sign, num, d = _grouped_poly(poly)
        body = _poly_text(num)
        if d != 1:
            multi = len([c for c in num.coeffs if c]) > 1
            body = f"({body})/{d}" if multi else f"{body}/{d}"
        elif len([c for c in num.coeffs if c]) > 1 and pieces:
            body = f"({body})"
        pieces.append((sign, body))
    for c, atom in atoms:
        body = _atom_text(atom)
        mag = abs(c)
        if mag != 1 and isinstance(atom, seq.Recip):
            numer = str(mag) if mag.denominator == 1 else f"({mag})"
            body = numer + body[1:]
        elif mag != 1:
            body = f"{mag}*{body}" if mag.denominator == 1 else f"({mag})*{body}"
        pieces.append((1 if c > 0 else -1, body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in pieces[1:]:
        out += f" {'-' if sign < 0 else '+'} {body}"
    return out


# -- LaTeX --------------------------------------------------------------------


def _atom_latex(atom: seq.SeqExpr) -> str:
    if isinstance(atom, seq.Recip):
        return "\\frac{1}{n}" if atom.m == 1 else "\\frac{1}{n^{2}}"
    if isinstance(atom, seq.Harmonic):
        return "\\sum_{k=1}^{n-1}\\frac{1}{k}" if atom.m == 1 else "\\sum_{k=1}^{n-1}\\frac{1}{k^{2}}"
    if isinstance(atom, seq.Conv):
        return f"\\left({seq_to_latex(atom.left)}\\right)\\ast\\left({seq_to_latex(atom.right)}\\right)"
    return seq_to_latex(atom)


def seq_to_latex(f: seq.SeqExpr) -> str:
    """LaTeX closed form, e.g. ``1+\\frac{n^{2}-n}{2}``."""
    const, poly, atoms = _split(f)
    pieces = []
    if const:
        pieces.append((1 if const > 0 else -1, _frac_latex(abs(const))))
    if poly:
        sign, num, d = _grouped_poly(poly)
        body = _poly_latex(num)
        if d != 1:
            body = f"\\frac{{{body}}}{{{d}}}"
        pieces.append((sign, body))
    for c, atom in atoms:
        mag = abs(c)
        body = _atom_latex(atom)
        if mag != 1:
            body = _frac_latex(mag) + body
        pieces.append((1 if c > 0 else -1, body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in pieces[1:]:
        out += ("-" if sign < 0 else "+") + body
    return out


# -- equation DSL ---------------------------------------------------------------


def rhs_to_dsl(f: seq.SeqExpr) -> str:
    pieces = []
    for c, atom in seq.terms_of(f):
        mag = abs(c)
        if atom == seq.ONE:
            body = str(mag)
        else:
            if isinstance(atom, seq.Mono):
                body = "n" if atom.k == 1 else f"n^{atom.k}"
            elif isinstance(atom, seq.Recip):
                body = "1/n" if atom.m == 1 else "1/n^2"
            else:
                raise ValueError(f"{atom!r} has no equation-DSL spelling")
            if mag != 1:
                body = f"{mag} * {body}"
        pieces.append((c < 0, body))
    if not pieces:
        return "0"
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += f" {'-' if neg else '+'} {body}"
    return out


def equation_to_dsl(eq) -> str:
    from .equation import Coefficient

    head = "n " if eq.coefficient is Coefficient.N else ""
    diff = "D" if eq.order == 1 else "D2"
    parts = [f"{head}{diff} f = {rhs_to_dsl(eq.rhs)}"]
    parts.extend(str(ic) for ic in eq.ics)
    return " ; ".join(parts)


# -- reports --------------------------------------------------------------------


def rat_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def solution_terms(f: seq.SeqExpr) -> list[dict]:
    out = []
    for c, atom in seq.terms_of(f):
        if atom == seq.ONE:
            kind, param = "const", None
        elif isinstance(atom, seq.Mono):
            kind, param = "mono", atom.k
        elif isinstance(atom, seq.Recip):
            kind, param = "recip", atom.m
        elif isinstance(atom, seq.Harmonic):
            kind, param = "harmonic", atom.m
        else:
            kind, param = "conv", _atom_text(atom)
        out.append({"kind": kind, "coeff": rat_str(c), "param": param})
    return out


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["equation", "order", "coefficient", "solution_terms", "image", "verification"],
    "properties": {
        "equation": {"type": "string"},
        "order": {"enum": [1, 2]},
        "coefficient": {"enum": ["1", "n"]},
        "solution_terms": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["kind", "coeff", "param"],
                "properties": {
                    "kind": {"enum": ["const", "mono", "recip", "harmonic", "conv"]},
                    "coeff": {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"},
                    "param": {"type": ["integer", "string", "null"]},
                },
            },
        },
        "image": {"type": "string"},
        "verification": {
            "type": "object",
            "additionalProperties": False,
            "required": ["checked_to", "max_numeric_error", "passed"],
            "properties": {
                "checked_to": {"type": "integer", "minimum": 1},
                "max_numeric_error": {"type": "number", "minimum": 0},
                "passed": {"type": "boolean"},
            },
        },
    },
}


def report_to_dict(report) -> dict:
    v = report.verification
    return {
        "equation": equation_to_dsl(report.equation),
        "order": report.equation.order,
        "coefficient": report.equation.coefficient.value,
        "solution_terms": solution_terms(report.solution),
        "image": report.image.to_str(),
        "verification": {
            "checked_to": v.recurrence_checked_to,
            "max_numeric_error": v.numeric_transform_max_error,
            "passed": v.passed,
        },
    }


def format_report(report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False)
    if fmt == "latex":
        return seq_to_latex(report.solution)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(
        [
            f"equation: {equation_to_dsl(report.equation)}",
            f"f(n) = {seq_to_text(report.solution)}",
            f"image: F = {report.image}   (x = e^s, L = s - ln(e^s - 1), D = Li2(e^-s))",
            f"route: {report.route}",
            f"verification: {report.verification.summary()}",
        ]
    )
