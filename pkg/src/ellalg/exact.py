"""Exact slope arithmetic, negative continued fractions and SL2(Z) actions.

Slopes are plain ``fractions.Fraction`` values; nothing in here touches floats.
"""
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Tuple

Slope = Fraction


class _Infinity:
    """The point at infinity of the projective line (a value, not an error)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INF"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def slope_normalize(p: int, q: int) -> Fraction:
    if q == 0:
        raise ZeroDivisionError("zero rank")
    return Fraction(p, q)


def parse_slope(text: str) -> Fraction:
    """Parse ``p/q`` or an integer into an exact slope."""
    text = text.strip()
    if "/" in text:
        a, b = text.split("/", 1)
        return slope_normalize(int(a), int(b))
    return Fraction(int(text))


def fmt_slope(s) -> str:
    if s is INF:
        return "inf"
    s = Fraction(s)
    return str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"


def to_cfrac(s) -> List[int]:
    """Negative continued fraction n1 - 1/(n2 - 1/(...)) with all terms >= 2.

    Defined for s > 1 (and s = 1 is not representable).  Uses ceilings:
    n1 = ceil(s), then recurse on 1/(n1 - s).
    """
    s = Fraction(s)
    if s <= 1:
        raise ValueError(f"to_cfrac needs a slope > 1, got {s}")
    terms = []
    while True:
        n = -((-s.numerator) // s.denominator)  # ceil
        terms.append(n)
        rest = n - s
        if rest == 0:
            return terms
        s = 1 / rest


def eval_cfrac(terms: Iterable[int]) -> Fraction:
    terms = list(terms)
    if not terms:
        raise ValueError("empty continued fraction")
    val = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        if val == 0:
            raise ZeroDivisionError("degenerate truncation")
        val = t - 1 / val
    return val


class UniMat(tuple):
    """Integer 2x2 matrix (a, b, c, d) with ad - bc = 1."""

    def __new__(cls, a, b, c, d):
        a, b, c, d = int(a), int(b), int(c), int(d)
        if a * d - b * c != 1:
            raise ValueError(f"determinant of {(a, b, c, d)} is not 1")
        return super().__new__(cls, (a, b, c, d))

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __matmul__(self, other):
        a, b, c, d = self
        e, f, g, h = other
        return UniMat(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        a, b, c, d = self
        return UniMat(d, -b, -c, a)

    def rows(self) -> List[List[int]]:
        a, b, c, d = self
        return [[a, b], [c, d]]

    def __repr__(self):
        return f"UniMat{self.rows()}"


def mobius(g: UniMat, s):
    a, b, c, d = g
    if s is INF:
        return INF if c == 0 else Fraction(a, c)
    s = Fraction(s)
    num = a * s.numerator + b * s.denominator
    den = c * s.numerator + d * s.denominator
    if den == 0:
        return INF
    return Fraction(num, den)


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def normalizing_matrix(t1, t2) -> UniMat:
    """g in SL2(Z) with g(t1) = 0 and g(t2) finite and > 1.

    Raises ValueError when t1 >= t2, or when the pair is unimodular
    (p2 q1 - p1 q2 = 1): then g(t2) = 1/b for every admissible g.
    """
    t1, t2 = Fraction(t1), Fraction(t2)
    if t1 >= t2:
        raise ValueError("normalizing_matrix needs t1 < t2")
    p, q = t1.numerator, t1.denominator
    g_, r, s = egcd(q, abs(p))  # q*r + |p|*s = 1
    assert g_ == 1
    if p < 0:
        s = -s
    # g0(t2) = A/B with A = q p2 - p q2 > 0
    A = q * t2.numerator - p * t2.denominator
    B = s * t2.numerator + r * t2.denominator
    if A == 1:
        raise ValueError("unimodular pair: image of t2 is at most 1")
    m = -(B // A)  # B + m A in (0, A), never 0 since gcd(A, B) = 1
    g = UniMat(1, 0, m, 1) @ UniMat(q, -p, s, r)
    return g


def is_unimodular_pair(t1, t2) -> bool:
    t1, t2 = Fraction(t1), Fraction(t2)
    return t2.numerator * t1.denominator - t1.numerator * t2.denominator == 1


def gcd_class(n: int, k: int) -> int:
    return gcd(abs(n), abs(k))

