"""Discrete types of indecomposable bundles on an elliptic curve.

Only invariants are modelled: degree, rank and a torsion point of (Q/Z)^2
standing in for the continuous parameter.  Hom/Ext dimensions follow the
Atiyah-style calculus for the covered cases and refuse the rest.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Tuple


class UncoveredCase(ValueError):
    """Raised for pairs whose Hom dimension is not determined by the calculus."""


def _mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class CurvePoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _mod1(self.x))
        object.__setattr__(self, "y", _mod1(self.y))

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return CurvePoint(self.x + other.x, self.y + other.y)

    def __neg__(self) -> "CurvePoint":
        return CurvePoint(-self.x, -self.y)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, m: int) -> "CurvePoint":
        return CurvePoint(m * self.x, m * self.y)

    def to_json(self):
        return [_qstr(self.x), _qstr(self.y)]


ORIGIN = CurvePoint(Fraction(0), Fraction(0))


def _qstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class IndecType:
    degree: int
    rank: int
    param: CurvePoint = ORIGIN

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    @property
    def gcd_class(self) -> int:
        return gcd(abs(self.degree), self.rank)

    @property
    def core(self) -> Tuple[int, int]:
        c = self.gcd_class
        return self.degree // c, self.rank // c

    def sort_key(self):
        return (self.slope, self.degree, self.rank, self.param.x, self.param.y)

    def to_json(self):
        return {"degree": self.degree, "rank": self.rank, "param": self.param.to_json()}


def xi(n: int, k: int, alpha: CurvePoint = ORIGIN) -> IndecType:
    return IndecType(n, k, alpha)


class BundleSum:
    """A nonempty multiset of indecomposable types."""

    def __init__(self, components: Iterable[IndecType]):
        comps = sorted(components, key=IndecType.sort_key)
        if not comps:
            raise ValueError("empty bundle sum")
        self.components: Tuple[IndecType, ...] = tuple(comps)

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self.components)

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def __eq__(self, other):
        return isinstance(other, BundleSum) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "BundleSum(%r)" % (list(self.components),)

    def to_json(self):
        return [c.to_json() for c in self.components]


def dual(e: IndecType) -> IndecType:
    return IndecType(-e.degree, e.rank, -e.param)


def hom_dim(e1: IndecType, e2: IndecType) -> int:
    s1, s2 = e1.slope, e2.slope
    if s1 < s2:
        return e2.degree * e1.rank - e1.degree * e2.rank
    if s1 > s2:
        return 0
    if (e1.degree, e1.rank) == (e2.degree, e2.rank):
        return e1.gcd_class if e1.param == e2.param else 0
    raise UncoveredCase(
        f"Hom between equal slopes with different types ({e1.degree},{e1.rank}) "
        f"and ({e2.degree},{e2.rank}) is not covered")


def ext_dim(i: int, e1: IndecType, e2: IndecType) -> int:
    if i == 0:
        return hom_dim(e1, e2)
    if i == 1:
        return hom_dim(e2, e1)
    raise ValueError("ext index must be 0 or 1")


def w_space_dim(t1, t2) -> int:
    t1, t2 = Fraction(t1), Fraction(t2)
    if t1 >= t2:
        raise ValueError("w_space_dim needs t1 < t2")
    return t2.numerator * t1.denominator - t2.denominator * t1.numerator


def fourier_mukai(e: IndecType) -> IndecType:
    if e.degree <= 0:
        raise ValueError("Fourier-Mukai is only defined here for positive degree")
    return IndecType(-e.rank, e.degree, -e.param)


def is_semistable(b: BundleSum) -> bool:
    return len({c.slope for c in b.components}) == 1


def is_stable(b: BundleSum) -> bool:
    return is_semistable(b) and all(c.gcd_class == 1 for c in b.components)


def t_action(beta: CurvePoint, b: BundleSum) -> BundleSum:
    """Shift each parameter by beta * (n_i (k+1) - k_i n), n = degree, k+1 = rank."""
    n, k1 = b.degree, b.rank
    return BundleSum(
        IndecType(c.degree, c.rank, c.param + beta.scale(c.degree * k1 - c.rank * n))
        for c in b.components)


def point_from_json(v) -> CurvePoint:
    return CurvePoint(Fraction(v[0]), Fraction(v[1]))


def indec_from_json(d) -> IndecType:
    return IndecType(int(d["degree"]), int(d["rank"]), point_from_json(d.get("param", [0, 0])))


def covered_types(max_deg: int, max_rank: int, params: List[CurvePoint] = (ORIGIN,)):
    for k in range(1, max_rank + 1):
        for n in range(-max_deg, max_deg + 1):
            for a in params:
                yield IndecType(n, k, a)
