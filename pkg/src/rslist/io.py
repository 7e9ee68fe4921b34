"""Spec files (JSON) and word files (plain integers)."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .errors import InvalidSpec
from .field import GF
from .frs import FRSSpec
from .rs import RSSpec

_SEP = re.compile(r"[\s,]+")


def field_from_dict(d: dict) -> GF:
    try:
        return GF(int(d["p"]), int(d.get("m", 1)), d.get("modulus"))
    except KeyError as exc:
        raise InvalidSpec(f"field description missing {exc}") from None


def spec_from_dict(d: dict):
    """RSSpec, or FRSSpec when the description carries "s" and "omega"."""
    try:
        F = field_from_dict(d["field"])
        k = int(d["k"])
        S = tuple(int(a) for a in d["S"])
    except KeyError as exc:
        raise InvalidSpec(f"spec missing {exc}") from None
    if "s" in d or "omega" in d:
        omega = d.get("omega")
        omega = F.primitive_element if omega is None else int(omega)
        return FRSSpec(F, int(d.get("s", 1)), k, omega, S)
    return RSSpec(F, k, S)


def spec_to_dict(spec) -> dict:
    d = {"field": spec.field.to_dict(), "k": spec.k, "S": list(spec.S)}
    if isinstance(spec, FRSSpec):
        d["s"] = spec.s
        d["omega"] = spec.omega
    return d


def load_spec(path):
    try:
        d = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"{path}: not valid JSON ({exc})") from None
    return spec_from_dict(d)


def _ints(line: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in _SEP.split(line.strip()) if tok)


def parse_blocks(text: str) -> list[tuple[int, ...]]:
    """One block of integers per nonempty line."""
    return [_ints(line) for line in text.splitlines() if line.strip()]


def parse_bundled(text: str) -> list[tuple[tuple[int, ...], ...]]:
    """Bundled words: one bundle per line, words separated by blank lines."""
    words, cur = [], []
    for line in text.splitlines():
        if line.strip():
            cur.append(_ints(line))
        elif cur:
            words.append(tuple(cur))
            cur = []
    if cur:
        words.append(tuple(cur))
    return words


def format_word(word) -> str:
    return " ".join(str(c) for c in word)


def format_bundled(word) -> str:
    return "\n".join(",".join(str(c) for c in b) for b in word)


def parse_fraction(text: str) -> Fraction:
    try:
        f = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidSpec(f"not a fraction: {text!r}") from None
    return f
