"""Degeneration combinatorics of slope sequences.

A slope sequence labels a rough stratum.  The successor rule glues one
adjacent pair of distinct slopes; closing under it gives the degeneration
poset, which is cross-checked against an inequality system.
"""
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from .exact import (INF, eval_cfrac, fmt_slope, is_unimodular_pair, mobius,
                    normalizing_matrix, parse_slope, to_cfrac)


class SlopeSeq(tuple):
    """Nondecreasing tuple of exact slopes."""

    def __new__(cls, entries: Iterable):
        vals = sorted(Fraction(e) for e in entries)
        if not vals:
            raise ValueError("empty slope sequence")
        return super().__new__(cls, vals)

    @property
    def total_degree(self) -> int:
        return sum(s.numerator for s in self)

    @property
    def total_rank(self) -> int:
        return sum(s.denominator for s in self)

    def label(self) -> str:
        return "{" + ", ".join(fmt_slope(s) for s in self) + "}"

    def to_json(self) -> List[str]:
        return [fmt_slope(s) for s in self]

    def __repr__(self):
        return self.label()


def parse_seq(text: str) -> SlopeSeq:
    text = text.strip().strip("{}")
    return SlopeSeq(parse_slope(t) for t in text.split(",") if t.strip())


def seq_key(s: SlopeSeq):
    return (len(s), tuple(s))


def char_seq_base(tau) -> SlopeSeq:
    """Successor of the pair {0, tau} for tau > 1."""
    tau = Fraction(tau)
    if tau <= 1:
        raise ValueError("char_seq_base needs tau > 1")
    terms = to_cfrac(tau)
    out = [Fraction(1)]
    for j in range(1, len(terms) + 1):
        head = terms[:j]
        head[-1] -= 1
        out.append(eval_cfrac(head))
    return SlopeSeq(out)


def char_seq_pair(t1, t2) -> SlopeSeq:
    t1, t2 = Fraction(t1), Fraction(t2)
    if t1 >= t2:
        raise ValueError("char_seq_pair needs t1 < t2")
    if is_unimodular_pair(t1, t2):
        return SlopeSeq([Fraction(t1.numerator + t2.numerator,
                                  t1.denominator + t2.denominator)])
    g = normalizing_matrix(t1, t2)
    ginv = g.inverse()
    out = []
    for s in char_seq_base(mobius(g, t2)):
        v = mobius(ginv, s)
        if v is INF:
            raise ArithmeticError("successor slope mapped to infinity")
        out.append(v)
    return SlopeSeq(out)


def explicit_pair_applies(t1, t2) -> bool:
    """Integral parts differ, t2 > 1 (it is expanded as a cfrac) and t2 != floor(t1) + 1.

    At t2 = floor(t1) + 1 the closed formula emits floor(t1) < t1 and, for
    integral t1, returns the pair itself, so those pairs are left to the
    SL2(Z) path.
    """
    t1, t2 = Fraction(t1), Fraction(t2)
    m1 = t1.numerator // t1.denominator
    return t1 < t2 and t2 > 1 and m1 < (t2.numerator // t2.denominator) and t2 != m1 + 1


def char_seq_pair_explicit(t1, t2) -> SlopeSeq:
    """Closed formula for pairs whose integral parts differ (second path)."""
    t1, t2 = Fraction(t1), Fraction(t2)
    if not explicit_pair_applies(t1, t2):
        raise ValueError("explicit formula needs floor(t1) < floor(t2), t2 > 1 and t2 != floor(t1) + 1")
    m1 = t1.numerator // t1.denominator
    frac = t1 - m1
    out = []
    if frac:
        ms = to_cfrac(1 / frac)
        for j in range(len(ms), 0, -1):
            head = list(ms[:j])
            head[-1] -= 1
            out.append(m1 + 1 / eval_cfrac(head))
    out.append(Fraction(m1 + 1))
    ns = to_cfrac(t2)
    for j in range(1, len(ns) + 1):
        head = list(ns[:j])
        head[-1] -= 1
        out.append(eval_cfrac(head))
    return SlopeSeq(out)


def successors(r: SlopeSeq) -> Set[SlopeSeq]:
    out = set()
    for i in range(len(r) - 1):
        if r[i] < r[i + 1]:
            glued = char_seq_pair(r[i], r[i + 1])
            out.add(SlopeSeq(list(r[:i]) + list(glued) + list(r[i + 2:])))
    return out


@dataclass
class DegenerationPoset:
    root: SlopeSeq
    nodes: List[SlopeSeq] = field(default_factory=list)
    edges: Set[Tuple[SlopeSeq, SlopeSeq]] = field(default_factory=set)

    def index(self) -> Dict[SlopeSeq, int]:
        return {s: i for i, s in enumerate(self.nodes)}

    def edge_list(self) -> List[Tuple[int, int]]:
        idx = self.index()
        return sorted((idx[a], idx[b]) for a, b in self.edges)

    def to_json(self) -> str:
        doc = {"root": self.root.to_json(),
               "nodes": [s.to_json() for s in self.nodes],
               "edges": [list(e) for e in self.edge_list()]}
        return json.dumps(doc)


def reachable_poset(root) -> DegenerationPoset:
    root = SlopeSeq(root)
    seen = {root}
    edges = set()
    queue = deque([root])
    while queue:
        cur = queue.popleft()
        for nxt in successors(cur):
            edges.add((cur, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return DegenerationPoset(root, sorted(seen, key=seq_key), edges)


def precedes(r, s) -> bool:
    r, s = SlopeSeq(r), SlopeSeq(s)
    if (r.total_degree, r.total_rank) != (s.total_degree, s.total_rank):
        raise ValueError("sequences have different total degree or rank")
    return s in set(reachable_poset(r).nodes)


def _compositions(total: int, parts: int):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def admissible_sequences(n: int, k: int) -> Set[SlopeSeq]:
    """All slope sequences below {0, n/k}, via the inequality system."""
    if n <= 0 or k <= 0 or gcd(n, k) != 1:
        raise ValueError("need n > 0, k > 0 coprime")
    top = Fraction(n, k)
    found = set()

    def extend(qs, j, ps, psum, qsum):
        if j == len(qs):
            if psum == n:
                found.add(SlopeSeq(Fraction(p, q) for p, q in zip(ps, qs)))
            return
        q = qs[j]
        left = len(qs) - j - 1
        for p in range(1, n - psum - left + 1):
            if gcd(p, q) != 1:
                continue
            s = Fraction(p, q)
            if ps and s < Fraction(ps[-1], qs[j - 1]):
                continue
            if s >= top:
                break
            if j > 0 and p + psum * q - p * qsum <= 0:
                continue
            extend(qs, j + 1, ps + [p], psum + p, qsum + q)

    for parts in range(1, k + 2):
        for qs in _compositions(k + 1, parts):
            extend(qs, 0, [], 0, 0)
    return found


def to_dot(poset: DegenerationPoset) -> str:
    lines = ["digraph poset {"]
    for i, s in enumerate(poset.nodes):
        lines.append(f'  n{i} [label="{s.label()}"];')
    for a, b in poset.edge_list():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
