"""Noncommutative Gröbner bases for two-sided ideals of the free algebra.

The completion loop is the textbook one: form every composition (overlap
of two leading monomials), reduce each modulo the current set, adjoin the
nonzero remainders and self-reduce, until a round produces nothing new.
Containment of one leading monomial inside another is not a composition;
it is resolved by :func:`self_reduce`.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .freealg import EMPTY, FreePoly, GeneratorSet, UsageError, Word, deglex_key

log = logging.getLogger(__name__)

DEFAULT_DEGREE_CAP = 12


def _heap_key(w: Word) -> tuple:
    # min-heap ordered so the deglex-greatest word pops first
    return (-len(w), tuple(-x for x in w))


class Reducer:
    """Reusable rewriting system built from a list of monic polynomials."""

    def __init__(self, polys: Sequence[FreePoly]):
        self.by_lm: dict[Word, FreePoly] = {}
        for g in polys:
            if not g:
                continue
            lm, c = g.leading()
            if c != 1:
                raise UsageError(f"reducer {g} is not monic")
            self.by_lm.setdefault(lm, g)
        self.lengths = sorted({len(w) for w in self.by_lm})

    def find(self, w: Word) -> Optional[tuple[FreePoly, Word, Word]]:
        n = len(w)
        for length in self.lengths:
            if length > n:
                break
            for i in range(n - length + 1):
                g = self.by_lm.get(w[i:i + length])
                if g is not None:
                    return g, w[:i], w[i + length:]
        return None

    def is_normal(self, w: Word) -> bool:
        return self.find(w) is None

    def reduce(self, f: FreePoly) -> FreePoly:
        if not self.by_lm:
            return f
        work: dict[Word, Fraction] = dict(f.items())
        heap = [(_heap_key(w), w) for w in work]
        heapq.heapify(heap)
        out: dict[Word, Fraction] = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if c is None:
                continue
            hit = self.find(w)
            if hit is None:
                out[w] = c
                continue
            g, left, right = hit
            lm = g.leading_word()
            for v, d in g.items():
                if v == lm:
                    continue
                x = left + v + right
                if x in work:
                    s = work[x] - c * d
                    if s:
                        work[x] = s
                    else:
                        del work[x]
                else:
                    work[x] = -c * d
                    heapq.heappush(heap, (_heap_key(x), x))
        return FreePoly(f.gens, out)


def normal_form(f: FreePoly, G: Sequence[FreePoly]) -> FreePoly:
    """Remainder of ``f`` after exhaustive rewriting by the monic set ``G``."""
    for g in G:
        if g.gens != f.gens:
            raise UsageError("reducer uses a different generator set")
    return Reducer(G).reduce(f)


@dataclass(frozen=True)
class CompositionRecord:
    """``value = g*u - v*h`` with ``overlap = LM(g)*u = v*LM(h)``."""

    g_index: int
    h_index: int
    u: Word
    v: Word
    value: FreePoly
    overlap: Word


def compositions(g: FreePoly, h: FreePoly, g_index: int = 0, h_index: int = 0) -> list[CompositionRecord]:
    """All compositions ``g*u - v*h`` where a proper suffix of LM(g) is a proper prefix of LM(h)."""
    p, s = g.leading_word(), h.leading_word()
    out = []
    for k in range(1, min(len(p), len(s))):
        if p[len(p) - k:] == s[:k]:
            u, v = s[k:], p[:len(p) - k]
            value = g.sandwich(EMPTY, u) - h.sandwich(v, EMPTY)
            out.append(CompositionRecord(g_index, h_index, u, v, value, p + u))
    return out


def all_compositions(G: Sequence[FreePoly], self_overlaps: Optional[bool] = None) -> list[CompositionRecord]:
    """Compositions of every ordered pair, sorted by overlap word.

    ``self_overlaps`` selects only self-compositions (True), only pairs of
    distinct elements (False) or both (None).
    """
    recs = []
    for i, g in enumerate(G):
        for j, h in enumerate(G):
            if self_overlaps is not None and (i == j) != self_overlaps:
                continue
            recs.extend(compositions(g, h, i, j))
    recs.sort(key=lambda r: (deglex_key(r.overlap), r.g_index, r.h_index))
    return recs


def _sorted_unique(polys: Iterable[FreePoly]) -> list[FreePoly]:
    seen: dict[FreePoly, None] = {}
    for p in polys:
        seen.setdefault(p, None)
    return sorted(seen, key=lambda p: (deglex_key(p.leading_word()), str(p)))


def self_reduce(G: Sequence[FreePoly]) -> list[FreePoly]:
    """Monic, mutually reduced generating set of the same ideal, sorted by leading monomial."""
    polys = _sorted_unique(p.monic() for p in G if p)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(polys):
            others = polys[:i] + polys[i + 1:]
            r = Reducer(others).reduce(g)
            if r != g:
                rest = others + ([r.monic()] if r else [])
                polys = _sorted_unique(rest)
                changed = True
                break
    return polys


@dataclass
class GBasis:
    gens: GeneratorSet
    elements: list[FreePoly]
    status: str  # "complete" or "truncated"
    degree_cap: int
    history: list[list[FreePoly]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def iterations(self) -> int:
        """Number of rounds that adjoined new elements."""
        return len(self.history) - 1

    def leading_words(self) -> list[Word]:
        return [g.leading_word() for g in self.elements]

    def max_lm_degree(self) -> int:
        return max((len(w) for w in self.leading_words()), default=0)

    def reducer(self) -> Reducer:
        return Reducer(self.elements)

    def reduce(self, f: FreePoly) -> FreePoly:
        return self.reducer().reduce(f)

    def contains(self, f: FreePoly) -> bool:
        if not self.complete:
            raise UsageError("ideal membership needs a complete basis")
        return not self.reduce(f)

    def element_strings(self) -> list[str]:
        return [str(g) for g in self.elements]

    def to_dict(self, count_degree: int = DEFAULT_DEGREE_CAP) -> dict:
        doc = {
            "generators": list(self.gens.symbols),
            "elements": self.element_strings(),
            "status": self.status,
            "degree_cap": self.degree_cap,
            "iterations": self.iterations,
        }
        if self.complete:
            doc["normal_word_counts"] = [len(level) for level in normal_words(self, count_degree)]
        return doc


def _new_remainders(current: list[FreePoly], self_overlaps: Optional[bool]) -> list[FreePoly]:
    reducer = Reducer(current)
    found = []
    for rec in all_compositions(current, self_overlaps):
        r = reducer.reduce(rec.value)
        if r:
            found.append(r.monic())
    return _sorted_unique(found)


def complete(G: Sequence[FreePoly], degree_cap: int = DEFAULT_DEGREE_CAP,
             gens: Optional[GeneratorSet] = None, defer_self_overlaps: bool = True) -> GBasis:
    """Run completion; stops early with status ``truncated`` past ``degree_cap``.

    With ``defer_self_overlaps`` each round uses compositions of distinct
    elements only, and self-compositions are examined once such a round
    comes back empty. The basis is declared complete only when both kinds
    reduce to zero, so the result is the same reduced basis either way;
    only the intermediate rounds recorded in ``history`` differ.
    """
    polys = [p for p in G if p]
    if gens is None:
        if not G:
            raise UsageError("need a generator set for an empty input")
        gens = G[0].gens
    if polys and max(p.degree() for p in polys) > degree_cap:
        raise UsageError("degree_cap is below the generator degree")
    current = self_reduce(polys)
    history = [current]
    while True:
        if defer_self_overlaps:
            found = _new_remainders(current, False) or _new_remainders(current, True)
        else:
            found = _new_remainders(current, None)
        if not found:
            return GBasis(gens, current, "complete", degree_cap, history)
        if max(f.degree() for f in found) > degree_cap:
            log.info("completion truncated at degree cap %d", degree_cap)
            return GBasis(gens, self_reduce(current + found), "truncated", degree_cap, history)
        current = self_reduce(current + found)
        history.append(current)
        log.debug("round %d: %d elements", len(history) - 1, len(current))


def is_groebner(G: Sequence[FreePoly]) -> bool:
    """Direct check of the composition criterion for a self-reduced set."""
    reducer = Reducer(G)
    return all(not reducer.reduce(rec.value) for rec in all_compositions(G))


def normal_words(B: GBasis, max_degree: int) -> list[list[Word]]:
    """Normal words grouped by degree ``0..max_degree``, each level in deglex order."""
    lms = set(B.leading_words())
    lengths = sorted({len(w) for w in lms})
    m = len(B.gens)
    levels: list[list[Word]] = [[EMPTY] if EMPTY not in lms else []]
    for _ in range(max_degree):
        nxt = []
        for w in levels[-1]:
            for x in range(m):
                v = w + (x,)
                # factors not ending at the new letter already lie inside w
                if not any(L <= len(v) and v[len(v) - L:] in lms for L in lengths):
                    nxt.append(v)
        levels.append(nxt)
    return levels


@dataclass(frozen=True)
class Finiteness:
    kind: str  # "finite", "infinite" or "unknown"
    dimension: Optional[int] = None
    stem: Optional[Word] = None
    loop: Optional[Word] = None

    def __str__(self) -> str:
        if self.kind == "finite":
            return f"finite({self.dimension})"
        return self.kind


def _find_pump(B: GBasis) -> Optional[tuple[Word, Word]]:
    """A stem ``s`` and loop ``l`` with every ``s l^n`` normal, via a cycle in the window graph."""
    lms = set(B.leading_words())
    L = max(B.max_lm_degree(), 1)
    nodes = normal_words(B, L - 1)[L - 1]
    node_set = set(nodes)
    m = len(B.gens)

    def succ(x: Word):
        for a in range(m):
            v = x + (a,)
            if any(v[len(v) - k:] in lms for k in range(1, len(v) + 1)):
                continue
            y = v[1:] if L > 1 else EMPTY
            if y in node_set:
                yield a, y

    color: dict[Word, int] = {}
    for start in nodes:
        if start in color:
            continue
        # iterative DFS keeping the letter path for witness extraction
        stack = [(start, iter(succ(start)))]
        path_nodes = [start]
        path_letters: list[int] = []
        color[start] = 1
        while stack:
            node, it = stack[-1]
            step = next(it, None)
            if step is None:
                color[node] = 2
                stack.pop()
                path_nodes.pop()
                if path_letters:
                    path_letters.pop()
                continue
            a, y = step
            if color.get(y) == 1:
                pos = path_nodes.index(y)
                loop = tuple(path_letters[pos:]) + (a,)
                return y, loop
            if y not in color:
                color[y] = 1
                stack.append((y, iter(succ(y))))
                path_nodes.append(y)
                path_letters.append(a)
    return None


def is_finite_dimensional(B: GBasis, probe_cap: int = DEFAULT_DEGREE_CAP) -> Finiteness:
    """Decide whether the quotient by a complete basis is finite dimensional."""
    if not B.complete:
        return Finiteness("unknown")
    levels = normal_words(B, probe_cap)
    for d, level in enumerate(levels):
        if not level:
            return Finiteness("finite", sum(len(x) for x in levels[:d]))
    pump = _find_pump(B)
    if pump is not None:
        return Finiteness("infinite", stem=pump[0], loop=pump[1])
    return Finiteness("unknown")
