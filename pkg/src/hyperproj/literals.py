"""Text syntax for numbers, points and cycles.

Numbers: ``rat``, ``[rat]U`` or ``rat(+|-)[rat]U`` where ``rat`` is
``int`` or ``int/int`` and ``U`` is ``i``, ``e`` or ``j`` for the
complex, dual and double numbers.  Points: ``[x:y]``, ``inf`` or a bare
number ``z`` meaning ``[z:1]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .hypercomplex import HyperNumber, Kind
from .projective import ProjPoint, infinity


class LiteralError(ValueError):
    pass


_RAT = r"\d+(?:/\d+)?"
_NUMBER = re.compile(
    rf"^(?P<sign>[+-])?(?:(?P<re>{_RAT})(?:(?P<isign>[+-])(?P<im>{_RAT})?(?P<unit>[iej]))?"
    rf"|(?P<pim>{_RAT})?(?P<punit>[iej]))$"
)


def _clean(text: str) -> str:
    return text.replace("−", "-").replace(" ", "")


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise LiteralError(f"zero denominator in {text!r}") from None


def parse_number(text: str, kind: Kind) -> HyperNumber:
    s = _clean(text)
    m = _NUMBER.match(s)
    if not m:
        raise LiteralError(f"cannot parse number {text!r}")
    sign = -1 if m["sign"] == "-" else 1
    if m["punit"]:
        unit = m["punit"]
        re_part, im_part = Fraction(0), sign * (_rat(m["pim"]) if m["pim"] else Fraction(1))
    else:
        unit = m["unit"]
        re_part = sign * _rat(m["re"])
        im_part = Fraction(0)
        if unit:
            im_part = _rat(m["im"]) if m["im"] else Fraction(1)
            if m["isign"] == "-":
                im_part = -im_part
    if unit and unit != kind.symbol:
        raise LiteralError(
            f"unit {unit!r} does not belong to the {kind.algebra} numbers (use {kind.symbol!r})"
        )
    return HyperNumber(kind, re_part, im_part)


def _fmt_rat(q: Fraction) -> str:
    return str(q)


def format_number(z: HyperNumber) -> str:
    u = z.kind.symbol
    if z.im == 0:
        return _fmt_rat(z.re)
    if z.re == 0:
        if z.im == 1:
            return u
        if z.im == -1:
            return "-" + u
        return f"{_fmt_rat(z.im)}{u}"
    sign = "+" if z.im > 0 else "-"
    return f"{_fmt_rat(z.re)}{sign}{_fmt_rat(abs(z.im))}{u}"


def parse_point(text: str, kind: Kind) -> ProjPoint:
    s = _clean(text)
    if s.lower() in ("inf", "infinity", "∞"):
        return infinity(kind)
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1]
        parts = body.split(":") if ":" in body else body.split(",")
        if len(parts) != 2:
            raise LiteralError(f"cannot parse point {text!r}")
        x, y = (parse_number(p, kind) for p in parts)
        if not x and not y:
            raise LiteralError("[0:0] is not a projective point")
        return ProjPoint(x, y)
    z = parse_number(s, kind)
    return ProjPoint(z, kind.one)


def format_pair(p: ProjPoint) -> list[str]:
    return [format_number(p.x), format_number(p.y)]


def format_point(p: ProjPoint) -> str:
    return f"[{format_number(p.x)}:{format_number(p.y)}]"


def parse_rational(text: str) -> Fraction:
    s = _clean(str(text))
    if not re.fullmatch(rf"[+-]?{_RAT}", s):
        raise LiteralError(f"cannot parse rational {text!r}")
    return _rat(s)
