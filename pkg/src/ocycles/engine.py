"""
Transition digraphs, Euler tours and s-overlap cycles.

An s-overlap cycle on a set of length-n words lists every word once so
that the last s symbols of each word equal the first s symbols of the
next (cyclically). Such cycles are exactly the Euler tours of the
transition digraph, whose vertices are length-s words and whose edges
are the objects, running from prefix to suffix.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .core import ParameterError, Word, as_word


class InfeasibleError(Exception):
    """No Euler tour exists; ``reason`` is 'unbalanced' or 'disconnected'."""

    def __init__(self, reason: str, witness: dict, message: str):
        super().__init__(message)
        self.reason = reason
        self.witness = witness


@dataclass(frozen=True)
class Edge:
    tail: Word
    head: Word
    label: Word


@dataclass(frozen=True)
class TransitionDigraph:
    s: int
    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def out_edges(self) -> dict[Word, list[Edge]]:
        out = defaultdict(list)
        for e in self.edges:
            out[e.tail].append(e)
        for v in out:
            out[v].sort(key=lambda e: e.label)
        return dict(out)

    @cached_property
    def in_degree(self) -> Counter:
        return Counter(e.head for e in self.edges)

    @cached_property
    def out_degree(self) -> Counter:
        return Counter(e.tail for e in self.edges)

    @cached_property
    def vertices(self) -> tuple[Word, ...]:
        return tuple(sorted({e.tail for e in self.edges} | {e.head for e in self.edges}))


@dataclass(frozen=True)
class OverlapCycle:
    """
    Objects in cycle order. ``compressed`` concatenates the first n - s
    symbols of every object; reading n symbols cyclically from offset
    j*(n-s) gives object j back.
    """

    s: int
    n: int
    objects: tuple[Word, ...]

    @cached_property
    def compressed(self) -> Word:
        step = self.n - self.s
        return tuple(x for obj in self.objects for x in obj[:step])

    @classmethod
    def from_compressed(cls, symbols: Sequence[int], n: int, s: int) -> "OverlapCycle":
        return cls(s, n, decode_compressed(symbols, n, s))


@dataclass(frozen=True)
class Finding:
    kind: str
    positions: tuple[int, ...]
    detail: str


@dataclass
class VerificationReport:
    findings: list[Finding] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.findings

    def add(self, kind: str, positions: Iterable[int], detail: str) -> None:
        self.findings.append(Finding(kind, tuple(positions), detail))


def decode_compressed(symbols: Sequence[int], n: int, s: int) -> tuple[Word, ...]:
    step = n - s
    if step < 1:
        raise ParameterError(f"need s < n, got n={n}, s={s}")
    c = tuple(symbols)
    if not c or len(c) % step:
        raise ParameterError(f"compressed length {len(c)} is not a positive multiple of {step}")
    size = len(c)
    return tuple(
        tuple(c[(start + r) % size] for r in range(n)) for start in range(0, size, step)
    )


def build_digraph(objects: Iterable[Sequence[int]], s: int) -> TransitionDigraph:
    words = [as_word(o) for o in objects]
    if not words:
        raise ParameterError("object set is empty")
    n = len(words[0])
    if any(len(w) != n for w in words):
        raise ParameterError("objects have mixed lengths")
    if not 1 <= s <= n - 1:
        raise ParameterError(f"overlap s={s} outside [1, {n - 1}]")
    dupes = [w for w, c in Counter(words).items() if c > 1]
    if dupes:
        raise ParameterError(f"duplicate object {min(dupes)}")
    edges = tuple(Edge(w[:s], w[n - s:], w) for w in sorted(words))
    return TransitionDigraph(s, n, edges)


def is_balanced(g: TransitionDigraph) -> bool:
    return all(g.in_degree[v] == g.out_degree[v] for v in g.vertices)


def weak_components(g: TransitionDigraph) -> list[tuple[Word, ...]]:
    """Components of the underlying undirected graph, each sorted, ordered by least vertex."""
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in g.edges:
        a, b = find(e.tail), find(e.head)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups = defaultdict(list)
    for v in g.vertices:
        groups[find(v)].append(v)
    return sorted((tuple(sorted(vs)) for vs in groups.values()), key=lambda c: c[0])


def component_index(g: TransitionDigraph) -> dict[Word, int]:
    return {v: i for i, comp in enumerate(weak_components(g)) for v in comp}


def check_eulerian(g: TransitionDigraph) -> None:
    """Raise :class:`InfeasibleError` unless g is balanced and weakly connected."""
    for v in g.vertices:
        if g.in_degree[v] != g.out_degree[v]:
            raise InfeasibleError(
                "unbalanced",
                {"vertex": list(v), "in": g.in_degree[v], "out": g.out_degree[v]},
                f"vertex {v} has in-degree {g.in_degree[v]} but out-degree {g.out_degree[v]}",
            )
    comps = weak_components(g)
    if len(comps) > 1:
        a, b = comps[0][0], comps[1][0]
        raise InfeasibleError(
            "disconnected",
            {"components": len(comps), "representatives": [list(a), list(b)]},
            f"digraph has {len(comps)} weak components; {a} and {b} are not connected",
        )


def euler_tour(g: TransitionDigraph) -> list[Edge]:
    """
    Hierholzer's algorithm from the least vertex, always taking the unused
    out-edge with the least label. The result is deterministic.
    """
    check_eulerian(g)
    adj = g.out_edges
    used = dict.fromkeys(adj, 0)
    stack: list[tuple[Word, Edge | None]] = [(g.vertices[0], None)]
    circuit = []
    while stack:
        v, via = stack[-1]
        if used.get(v, 0) < len(adj.get(v, ())):
            e = adj[v][used[v]]
            used[v] += 1
            stack.append((e.head, e))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return circuit


def assemble_ocycle(tour: Sequence[Edge], s: int) -> OverlapCycle:
    if not tour:
        raise ParameterError("empty tour")
    if tour[-1].head != tour[0].tail:
        raise ParameterError("tour is not closed")
    return OverlapCycle(s, len(tour[0].label), tuple(e.label for e in tour))


def verify_ocycle(cycle: OverlapCycle, expected: Iterable[Sequence[int]], s: int) -> VerificationReport:
    report = VerificationReport()
    objects = list(cycle.objects)
    n = cycle.n
    report.checked = len(objects)
    expected = {tuple(e) for e in expected}

    if s != cycle.s:
        report.add("overlap-mismatch", (), f"cycle built with s={cycle.s}, checked against s={s}")
    if any(len(o) != n for o in objects):
        report.add("length", [j for j, o in enumerate(objects) if len(o) != n], "object of wrong length")
        return report
    if n - s >= 1 and objects:
        decoded = decode_compressed(cycle.compressed, n, s)
        for j, (a, b) in enumerate(zip(objects, decoded)):
            if a != b:
                report.add("decode-mismatch", (j,), f"object {a} but compressed string gives {b}")

    seen = defaultdict(list)
    for j, o in enumerate(objects):
        seen[o].append(j)
    for o, where in sorted(seen.items()):
        if len(where) > 1:
            report.add("duplicate", where, f"object {o} appears {len(where)} times")
        if o not in expected:
            report.add("unexpected", where, f"object {o} is not in the expected set")
    for o in sorted(expected - seen.keys()):
        report.add("missing", (), f"object {o} is missing")

    m = len(objects)
    for j in range(m):
        a, b = objects[j], objects[(j + 1) % m]
        if a[n - s:] != b[:s]:
            kind = "closure" if j == m - 1 else "overlap"
            report.add(kind, (j, (j + 1) % m), f"suffix {a[n - s:]} of {a} != prefix {b[:s]} of {b}")
    return report


def existence_predicate(n: int, s: int) -> bool:
    """An s-ocycle on permutations (or capped juggling sequences) of length n exists iff n-s > gcd(n, s)."""
    if not 1 <= s <= n - 1:
        raise ParameterError(f"need 1 <= s <= n-1, got n={n}, s={s}")
    return n - s > math.gcd(n, s)


def construct_ocycle(objects: Iterable[Sequence[int]], s: int) -> OverlapCycle:
    """Build, tour, assemble and self-check. Raises InfeasibleError."""
    objects = list(objects)
    g = build_digraph(objects, s)
    cycle = assemble_ocycle(euler_tour(g), s)
    report = verify_ocycle(cycle, objects, s)
    if not report.passed:
        raise AssertionError(f"constructed cycle failed verification: {report.findings[:3]}")
    return cycle
