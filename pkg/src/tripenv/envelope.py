"""Universal associative envelopes of the 2-dimensional triple system.

The triple system is ``span{e1, e2}`` inside 2x2 matrices with
``e1 = E12`` and ``e2 = E21``; a trilinear operation restricted to it
gives structure constants, and the envelope is the free algebra on
``a, b`` modulo ``omega(x_i, x_j, x_k) - phi(omega(e_i, e_j, e_k))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import groebner
from .freealg import AB, FreePoly, GeneratorSet, UsageError, Word, format_fraction
from .groebner import DEFAULT_DEGREE_CAP, Finiteness, GBasis
from .structure import AlgebraTable
from .tripleops import TrilinearOp, apply

Matrix2 = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

_O, _I = Fraction(0), Fraction(1)
E1: Matrix2 = ((_O, _I), (_O, _O))
E2: Matrix2 = ((_O, _O), (_I, _O))
BASIS = (E1, E2)


def _mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    return tuple(tuple(sum((x[i][t] * y[t][j] for t in range(2)), _O) for j in range(2))
                 for i in range(2))  # type: ignore[return-value]


def _mat_add(x: Matrix2, y: Matrix2) -> Matrix2:
    return tuple(tuple(x[i][j] + y[i][j] for j in range(2)) for i in range(2))  # type: ignore[return-value]


def _mat_scale(c, x: Matrix2) -> Matrix2:
    return tuple(tuple(Fraction(c) * x[i][j] for j in range(2)) for i in range(2))  # type: ignore[return-value]


class TripleSystemError(ArithmeticError):
    pass


@dataclass(frozen=True)
class TripleSystem:
    """``constants[(i, j, k)]`` holds the coordinates of ``omega(e_i, e_j, e_k)`` (0-based indices)."""

    dimension: int
    constants: dict[tuple[int, ...], tuple[Fraction, ...]]

    def value(self, triple: tuple[int, ...]) -> tuple[Fraction, ...]:
        return self.constants[triple]

    def is_zero(self) -> bool:
        return not any(any(v) for v in self.constants.values())

    def nonzero(self) -> dict[tuple[int, ...], tuple[Fraction, ...]]:
        return {t: v for t, v in self.constants.items() if any(v)}

    def render(self) -> list[str]:
        lines = []
        for t, v in sorted(self.constants.items()):
            args = ", ".join(f"e{i + 1}" for i in t)
            terms = [f"{format_fraction(c)}e{i + 1}" for i, c in enumerate(v) if c]
            lines.append(f"[{args}] = {' + '.join(terms) if terms else '0'}")
        return lines


def _coordinates(m: Matrix2) -> tuple[Fraction, Fraction]:
    if m[0][0] or m[1][1]:
        raise TripleSystemError(f"value {m} leaves span{{e1, e2}}")
    return (m[0][1], m[1][0])


def triple_system_from_operation(op: TrilinearOp) -> TripleSystem:
    consts = {}
    for t in itertools.product(range(2), repeat=3):
        m = apply(op, *(BASIS[i] for i in t), mul=_mat_mul, add=_mat_add, scale=_mat_scale)
        consts[t] = _coordinates(m)
    return TripleSystem(2, consts)


def relations(op: TrilinearOp, T: TripleSystem, gens: GeneratorSet = AB) -> list[FreePoly]:
    """The 8 defining polynomials in index order ``(1,1,1), (1,1,2), ..., (2,2,2)``."""
    xs = gens.gens()
    out = []
    for t in sorted(T.constants):
        lhs = apply(op, *(xs[i] for i in t), mul=lambda u, v: u * v)
        rhs = gens.zero()
        for i, c in enumerate(T.value(t)):
            rhs = rhs + xs[i].scale(c)
        out.append(lhs - rhs)
    return out


@dataclass(frozen=True)
class RelationRecord:
    triple: tuple[int, ...]
    poly: FreePoly
    duplicate_of: Optional[tuple[int, ...]] = None  # first triple with the same monic relation

    @property
    def kept(self) -> bool:
        return bool(self.poly) and self.duplicate_of is None


def relation_log(op: TrilinearOp, T: TripleSystem, gens: GeneratorSet = AB) -> list[RelationRecord]:
    seen: dict[FreePoly, tuple[int, ...]] = {}
    log = []
    for t, p in zip(sorted(T.constants), relations(op, T, gens)):
        if not p:
            log.append(RelationRecord(t, p))
            continue
        key = p.monic()
        log.append(RelationRecord(t, p, seen.get(key)))
        seen.setdefault(key, t)
    return log


def _render_triple(t: tuple[int, ...]) -> str:
    return "".join(str(i + 1) for i in t)


@dataclass
class EnvelopePresentation:
    op: TrilinearOp
    system: TripleSystem
    relations: list[FreePoly]
    log: list[RelationRecord]
    basis: GBasis
    verdict: Finiteness
    table: Optional[AlgebraTable] = None
    normal_basis: list[Word] = field(default_factory=list)

    @property
    def gens(self) -> GeneratorSet:
        return self.basis.gens

    @property
    def distinct_relations(self) -> list[FreePoly]:
        return [r.poly for r in self.log if r.kept]

    @property
    def finite(self) -> bool:
        return self.verdict.kind == "finite"

    def reduce(self, f: FreePoly) -> FreePoly:
        return self.basis.reduce(f)

    def to_dict(self, growth_degree: int = DEFAULT_DEGREE_CAP) -> dict:
        doc = {
            "operation": str(self.op),
            "coefficients": [format_fraction(c) for c in self.op.coeffs],
            "triple_system": self.system.render(),
            "relations": [str(p) for p in self.relations],
            "relation_log": [
                {"triple": _render_triple(r.triple), "relation": str(r.poly),
                 "duplicate_of": _render_triple(r.duplicate_of) if r.duplicate_of else None}
                for r in self.log
            ],
            "groebner_basis": self.basis.to_dict(growth_degree),
            "verdict": str(self.verdict),
        }
        if self.verdict.kind == "infinite" and self.verdict.stem is not None:
            doc["infinite_witness"] = {
                "stem": self.gens.render_word(self.verdict.stem),
                "loop": self.gens.render_word(self.verdict.loop or ()),
            }
        if self.basis.complete:
            per, cum = graded_dims(self, growth_degree)
            doc["graded_dimensions"] = per
            doc["cumulative_dimensions"] = cum
            doc["growth"] = str(gk_estimate(cum))
        if self.table is not None:
            doc["table"] = self.table.to_dict()
        return doc


def multiplication_table(B: GBasis, words: Sequence[Word]) -> AlgebraTable:
    """Structure constants over the given normal words (which must span the quotient)."""
    gens = B.gens
    index = {w: i for i, w in enumerate(words)}
    red = B.reducer()
    n = len(words)

    def coords(f: FreePoly) -> list[Fraction]:
        v = [Fraction(0)] * n
        for w, c in f.items():
            v[index[w]] = c
        return v

    product = [[coords(red.reduce(gens.word_poly(u + v))) for v in words] for u in words]
    unit = coords(red.reduce(gens.one()))
    return AlgebraTable([gens.render_word(w) for w in words], product, unit)


def build_envelope(op: TrilinearOp, degree_cap: int = DEFAULT_DEGREE_CAP,
                   gens: GeneratorSet = AB) -> EnvelopePresentation:
    T = triple_system_from_operation(op)
    rels = relations(op, T, gens)
    log = relation_log(op, T, gens)
    kept = [r.poly for r in log if r.kept]
    B = groebner.complete(kept, degree_cap=degree_cap, gens=gens)
    verdict = groebner.is_finite_dimensional(B, degree_cap)
    P = EnvelopePresentation(op, T, rels, log, B, verdict)
    if verdict.kind == "finite":
        words = [w for level in groebner.normal_words(B, degree_cap) for w in level]
        P.normal_basis = words
        P.table = multiplication_table(B, words)
    return P


def graded_dims(P: EnvelopePresentation, max_n: int) -> tuple[list[int], list[int]]:
    """Counts of normal words of each length ``0..max_n`` and their running totals."""
    if not P.basis.complete:
        raise UsageError("growth data needs a complete basis")
    per = [len(level) for level in groebner.normal_words(P.basis, max_n)]
    return per, list(itertools.accumulate(per))


@dataclass(frozen=True)
class GrowthEstimate:
    kind: str  # "polynomial", "exponential" or "inconclusive"
    degree: Optional[int] = None
    period: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "polynomial":
            return f"polynomial({self.degree})"
        return self.kind


def _differences(seq: list[int], stride: int) -> list[int]:
    return [seq[i + stride] - seq[i] for i in range(len(seq) - stride)]


def gk_estimate(cumulative: Sequence[int], max_degree: int = 4) -> GrowthEstimate:
    """Polynomial degree of a growth sequence by finite differences.

    Differences are taken with stride 1 and 2, the latter to absorb
    parity-periodic behaviour; degree ``d`` is reported when the ``d``-th
    difference is constant over the last half (at least 3 values).
    Sustained ratios of at least 3/2 between successive values mean
    exponential growth.
    """
    seq = list(cumulative)
    if len(seq) < 8:
        raise UsageError("growth estimate needs at least 8 data points")
    if len(set(seq[len(seq) // 2:])) == 1:
        return GrowthEstimate("polynomial", 0, 1)
    for d in range(1, max_degree + 1):
        for stride in (1, 2):
            diff = seq
            for _ in range(d):
                diff = _differences(diff, stride)
            if len(diff) < 3:
                continue
            tail = diff[-max(3, len(diff) // 2):]
            if len(set(tail)) == 1 and tail[0] != 0:
                return GrowthEstimate("polynomial", d, stride)
    tail = seq[len(seq) // 2:]
    if all(x > 0 for x in tail) and all(Fraction(y, x) >= Fraction(3, 2) for x, y in zip(tail, tail[1:])):
        return GrowthEstimate("exponential")
    return GrowthEstimate("inconclusive")


def letter_weight(w: Word) -> int:
    """``(#a) - (#b)`` for words over two letters."""
    return sum(1 if x == 0 else -1 for x in w)


def is_weight_homogeneous(f: FreePoly) -> bool:
    return len({letter_weight(w) for w, _ in f.items()}) <= 1


def grading_check(P: EnvelopePresentation, sample_degree: int = 4) -> bool:
    """Basis elements homogeneous for ``#a - #b``, and normal-word products respect the weight."""
    if not all(is_weight_homogeneous(g) for g in P.basis.elements):
        return False
    if not P.basis.complete:
        return True
    words = [w for level in groebner.normal_words(P.basis, sample_degree) for w in level]
    red = P.basis.reducer()
    for u in words:
        for v in words:
            r = red.reduce(P.gens.word_poly(u + v))
            if any(letter_weight(w) != letter_weight(u) + letter_weight(v) for w, _ in r.items()):
                return False
    return True


def zeta(f: FreePoly) -> FreePoly:
    """Anti-automorphism reversing words and swapping the two letters."""
    return f.map_words(lambda w: tuple(1 - x for x in reversed(w)))


def zeta_invariant(P: EnvelopePresentation) -> bool:
    """Whether the ideal is stable under :func:`zeta`."""
    return all(not P.reduce(zeta(g)) for g in P.basis.elements)


def check_defining_identity(P: EnvelopePresentation) -> bool:
    """``omega(x_i, x_j, x_k)`` reduces to the image of ``omega(e_i, e_j, e_k)`` for all triples."""
    xs = P.gens.gens()
    red = P.basis.reducer()
    for t in sorted(P.system.constants):
        lhs = red.reduce(apply(P.op, *(xs[i] for i in t), mul=lambda u, v: u * v))
        rhs = P.gens.zero()
        for i, c in enumerate(P.system.value(t)):
            rhs = rhs + xs[i].scale(c)
        if lhs != red.reduce(rhs):
            return False
    return True


def downup_parameters(P: EnvelopePresentation) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    """``(alpha, beta, gamma)`` when the ideal is generated by the two down-up relations.

    The relations are ``bba - alpha*bab - beta*abb - gamma*b`` and
    ``baa - alpha*aba - beta*aab - gamma*a``.
    """
    if not P.basis.complete or len(P.basis.elements) != 2:
        return None
    g = P.gens
    by_lm = {g.render_word(e.leading_word()): e for e in P.basis.elements}
    if set(by_lm) != {"bba", "baa"}:
        return None
    f1, f2 = by_lm["bba"], by_lm["baa"]
    alpha = -f1.coeff(g.parse_word("bab"))
    beta = -f1.coeff(g.parse_word("abb"))
    gamma = -f1.coeff(g.parse_word("b"))
    expect1 = g.parse("bba") - g.parse("bab") * alpha - g.parse("abb") * beta - g.parse("b") * gamma
    expect2 = g.parse("baa") - g.parse("aba") * alpha - g.parse("aab") * beta - g.parse("a") * gamma
    if f1 != expect1 or f2 != expect2:
        return None
    return alpha, beta, gamma
