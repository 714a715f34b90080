"""Lossless JSON interchange and human-readable printing for elements.

JSON format: ``{"cap": N|null, "terms": [{"m": [a,b,c,d], "num": "...",
"den": "..."}]}`` with coefficients as decimal strings, terms sorted by
monomial.  Identical elements serialize to byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Element


def element_to_dict(element: Element) -> dict:
    terms = []
    for mono in sorted(element.terms):
        coeff = Fraction(element.terms[mono])
        terms.append(
            {"m": list(mono), "num": str(coeff.numerator), "den": str(coeff.denominator)}
        )
    return {"cap": element.cap, "terms": terms}


def element_to_json(element: Element, indent: int | None = None) -> str:
    return json.dumps(element_to_dict(element), indent=indent)


def element_from_dict(data: dict) -> Element:
    terms = {}
    for entry in data["terms"]:
        mono = tuple(entry["m"])
        terms[mono] = Fraction(int(entry["num"]), int(entry["den"]))
    return Element(terms, data.get("cap"))


def element_from_json(text: str) -> Element:
    return element_from_dict(json.loads(text))


def pretty(element: Element) -> str:
    """Human-readable rendering with divided monomials, unit factors omitted."""
    if not element.terms:
        return "0"
    parts = []
    for mono in sorted(element.terms):
        coeff = Fraction(element.terms[mono])
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = str(mono)
        if mag != 1 or body == "1":
            body = str(mag) if body == "1" else f"{mag} {body}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
