"""Text forms for groups, elements, and sets.

Group specs look like "12" or "2x4x8"; "1" is the trivial group.  Elements
are either a bare index or a coordinate tuple "(1,3)".  Sets are either a
braced element list "{0, 3, (1,2)}" or a hex mask "0x1b" read little-endian
(bit i set means element i is in the set).
"""

from __future__ import annotations

from .groups import Group
from .sumset import GroupSet

__all__ = [
    "parse_group",
    "parse_element",
    "parse_set",
    "format_element",
    "format_set",
    "LiteralError",
]


class LiteralError(ValueError):
    """Raised when a group, element, or set literal cannot be read."""


def parse_group(text: str) -> Group:
    t = text.strip()
    if not t:
        raise LiteralError("empty group spec")
    if t == "1":
        return Group([])
    parts = t.split("x")
    factors = []
    for p in parts:
        p = p.strip()
        if not p.isdigit():
            raise LiteralError(f"bad factor {p!r} in group spec {text!r}")
        d = int(p)
        if d < 2:
            raise LiteralError(f"factor {d} in group spec {text!r} must be >= 2")
        factors.append(d)
    return Group(factors)


def parse_element(group: Group, text: str) -> int:
    t = text.strip()
    if not t:
        raise LiteralError("empty element literal")
    if t.startswith("("):
        if not t.endswith(")"):
            raise LiteralError(f"unclosed tuple in element literal {text!r}")
        inner = t[1:-1].strip()
        parts = [p.strip() for p in inner.split(",")] if inner else []
        parts = [p for p in parts if p]
        coords = []
        for p in parts:
            neg = p.startswith("-")
            digits = p[1:] if neg else p
            if not digits.isdigit():
                raise LiteralError(f"bad coordinate {p!r} in {text!r}")
            coords.append(-int(digits) if neg else int(digits))
        if len(coords) != len(group.factors):
            raise LiteralError(
                f"{text!r} has {len(coords)} coordinates, "
                f"group {group.spec_string()} needs {len(group.factors)}"
            )
        return group.index_of(coords)
    neg = t.startswith("-")
    digits = t[1:] if neg else t
    if not digits.isdigit():
        raise LiteralError(f"bad element literal {text!r}")
    v = int(digits)
    if neg:
        v = -v
    return v % group.order


def parse_set(group: Group, text: str) -> GroupSet:
    t = text.strip()
    if not t:
        raise LiteralError("empty set literal")
    if t.lower().startswith("0x"):
        body = t[2:]
        try:
            mask = int(body, 16)
        except ValueError:
            raise LiteralError(f"bad hex mask {text!r}") from None
        if mask >> group.order:
            raise LiteralError(
                f"mask {text!r} has bits beyond group order {group.order}"
            )
        return GroupSet(group, mask)
    if not (t.startswith("{") and t.endswith("}")):
        raise LiteralError(
            f"set literal {text!r} must be '{{...}}' or a 0x hex mask"
        )
    inner = t[1:-1]
    mask = 0
    for piece in _split_top_level(inner):
        mask |= 1 << parse_element(group, piece)
    return GroupSet(group, mask)


def _split_top_level(text: str) -> list[str]:
    out = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise LiteralError(f"unbalanced parens in {text!r}")
        if ch == "," and depth == 0:
            piece = "".join(cur).strip()
            if piece:
                out.append(piece)
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise LiteralError(f"unbalanced parens in {text!r}")
    piece = "".join(cur).strip()
    if piece:
        out.append(piece)
    return out


def format_element(group: Group, e: int) -> str:
    if len(group.factors) <= 1:
        return str(e)
    return "(" + ",".join(str(a) for a in group.coords_of(e)) + ")"


def format_set(s: GroupSet, max_elements: int = 64) -> str:
    group = s.group
    if len(s) > max_elements:
        return s.hex_mask()
    return "{" + ", ".join(format_element(group, e) for e in s) + "}"
