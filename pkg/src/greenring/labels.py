"""Symbolic names for indecomposable modules and their text grammar.

Grammar (case sensitive)::

    1 | S | S(s1,s2) | P | P(s1,s2) | P+ | P- | M<r> | W<r> | N<r> | N'<r> | C(<r>,<eta>)

optionally followed by ``_s1s2`` (a right twist by the one-dimensional module
S(s1,s2)), e.g. ``M2_--`` or ``C(1,1/2)_+-``.  ``S`` alone is S(-,-), and
``P+``/``P-`` are P(+,-)/P(-,+) (the simple projectives of DH4).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from fractions import Fraction

FAMILIES = ("S", "P", "M", "W", "N", "Nprime", "C")
_ORDER = {f: i for i, f in enumerate(FAMILIES)}
SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def mul_signs(a: tuple, b: tuple) -> tuple:
    return (a[0] * b[0], a[1] * b[1])


def parity(n: int) -> int:
    """+1 for even n, -1 for odd n."""
    return 1 if n % 2 == 0 else -1


@dataclass(frozen=True)
class Label:
    family: str
    rank: int = 0
    signs: tuple = (1, 1)
    eta: Fraction | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if (self.family == "C") != (self.eta is not None):
            raise ValueError("eta is present exactly for family C")
        if self.family == "C" and self.eta == 0:
            raise ValueError("eta must be nonzero")
        if (self.family in ("S", "P")) != (self.rank == 0):
            raise ValueError("rank is absent exactly for S and P")
        if self.rank < 0:
            raise ValueError("rank must be positive")

    def sort_key(self):
        eta = self.eta if self.eta is not None else Fraction(0)
        return (_ORDER[self.family], self.rank, tuple(0 if s > 0 else 1 for s in self.signs),
                eta.denominator, eta.numerator)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def twist(self, signs: tuple) -> "Label":
        return replace(self, signs=mul_signs(self.signs, signs))

    def with_eta(self, eta) -> "Label":
        return replace(self, eta=Fraction(eta))

    @property
    def base(self) -> "Label":
        return replace(self, signs=(1, 1))

    def is_projective(self) -> bool:
        return self.family == "P"

    def __str__(self):
        return format_label(self)

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank or None,
                "signs": "".join(sign_char(s) for s in self.signs),
                "eta": None if self.eta is None else _frac(self.eta)}

    @staticmethod
    def from_json(d: dict) -> "Label":
        signs = tuple(1 if c == "+" else -1 for c in d["signs"])
        eta = None if d.get("eta") is None else Fraction(d["eta"])
        return Label(d["family"], d.get("rank") or 0, signs, eta)


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def S(s1: int = -1, s2: int = -1) -> Label:
    return Label("S", 0, (s1, s2))


def P(s1: int = 1, s2: int = 1) -> Label:
    return Label("P", 0, (s1, s2))


ONE = Label("S", 0, (1, 1))


def M(r, signs=(1, 1)):
    return Label("M", r, signs)


def W(r, signs=(1, 1)):
    return Label("W", r, signs)


def N(r, signs=(1, 1)):
    return Label("N", r, signs)


def Np(r, signs=(1, 1)):
    return Label("Nprime", r, signs)


def C(r, eta, signs=(1, 1)):
    return Label("C", r, signs, Fraction(eta))


def format_label(lab: Label) -> str:
    sig = "".join(sign_char(s) for s in lab.signs)
    if lab.family == "S":
        return "1" if lab.signs == (1, 1) else f"S({sign_char(lab.signs[0])},{sign_char(lab.signs[1])})"
    if lab.family == "P":
        return f"P({sign_char(lab.signs[0])},{sign_char(lab.signs[1])})"
    if lab.family == "C":
        core = f"C({lab.rank},{_frac(lab.eta)})"
    else:
        core = {"M": "M", "W": "W", "N": "N", "Nprime": "N'"}[lab.family] + str(lab.rank)
    return core if lab.signs == (1, 1) else f"{core}_{sig}"


_LABEL_RE = re.compile(
    r"""^(?:
        (?P<one>1)
      | (?P<sp>[SP])(?:\((?P<s1>[+-]),(?P<s2>[+-])\)|(?P<pm>[+-]))?
      | (?P<fam>M|W|N'|N)(?P<r>\d+)
      | C\((?P<cr>\d+),(?P<eta>-?\d+(?:/\d+)?)\)
    )(?:_(?P<t1>[+-])(?P<t2>[+-]))?$""",
    re.VERBOSE,
)


def parse_label(text: str) -> Label:
    t = text.strip().replace("−", "-").replace("′", "'").replace(" ", "")
    m = _LABEL_RE.match(t)
    if not m:
        raise ValueError(f"cannot parse label {text!r}")
    sg = lambda c: 1 if c == "+" else -1  # noqa: E731
    if m.group("one"):
        lab = ONE
    elif m.group("sp"):
        fam = m.group("sp")
        if m.group("s1"):
            signs = (sg(m.group("s1")), sg(m.group("s2")))
        elif m.group("pm"):
            if fam != "P":
                raise ValueError(f"cannot parse label {text!r}")
            signs = (1, -1) if m.group("pm") == "+" else (-1, 1)
        else:
            signs = (-1, -1) if fam == "S" else (1, 1)
        lab = Label(fam, 0, signs)
    elif m.group("fam"):
        fam = {"M": "M", "W": "W", "N": "N", "N'": "Nprime"}[m.group("fam")]
        r = int(m.group("r"))
        if r < 1:
            raise ValueError("rank must be positive")
        lab = Label(fam, r)
    else:
        lab = Label("C", int(m.group("cr")), (1, 1), Fraction(m.group("eta")))
    if m.group("t1"):
        lab = lab.twist((sg(m.group("t1")), sg(m.group("t2"))))
    return lab


def label_dim(lab: Label, algebra: str) -> int:
    f, r = lab.family, lab.rank
    if f == "S":
        return 1
    if f == "P":
        if algebra == "DH4" and lab.signs[0] != lab.signs[1]:
            return 2
        return 4
    if f in ("M", "W"):
        return 2 * r + 1
    if f in ("N", "Nprime"):
        return 2 * r
    return 4 * r if algebra == "HH" else 2 * r


def allowed_signs(algebra: str, family: str) -> tuple:
    if algebra == "DH4" and family != "P":
        return ((1, 1), (-1, -1))
    return SIGNS
