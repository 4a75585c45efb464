"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from tripenv import linalg
from tripenv.freealg import FreePoly, GeneratorSet

# -- expression expander for the catalog -------------------------------------

A, B, C = sympy.symbols("a b c", commutative=False)
_SYMS = {"a": A, "b": B, "c": C}
PERMUTATION_WORDS = ("abc", "acb", "bac", "bca", "cab", "cba")


class _Parser:
    """``expr := term (+|- term)*``; ``term := [INT] factor+``;
    ``factor := letter | ( circ ) | [ circ , circ ]``; ``circ := expr [∘ expr]``.
    ``x∘y`` is ``xy + yx`` and ``[x, y]`` is ``xy - yx``."""

    def __init__(self, text: str):
        self.s = text.replace(" ", "")
        self.i = 0

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, ch: str) -> None:
        assert self.peek() == ch, (self.s, self.i, ch)
        self.i += 1

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        total = sign * self.term()
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            total += sign * self.term()
        return total

    def term(self):
        digits = ""
        while self.peek().isdigit():
            digits += self.peek()
            self.i += 1
        out = sympy.Integer(int(digits)) if digits else sympy.Integer(1)
        while self.peek() and self.peek() in "abc([":
            out = out * self.factor()
        return out

    def factor(self):
        ch = self.peek()
        if ch in _SYMS:
            self.i += 1
            return _SYMS[ch]
        if ch == "(":
            self.eat("(")
            v = self.circ()
            self.eat(")")
            return v
        self.eat("[")
        x = self.circ()
        self.eat(",")
        y = self.circ()
        self.eat("]")
        return x * y - y * x

    def circ(self):
        x = self.expr()
        if self.peek() == "∘":
            self.eat("∘")
            y = self.expr()
            return x * y + y * x
        return x


def expand_expression(text: str) -> tuple[Fraction, ...]:
    """Coefficient vector of a bracket expression over ``abc, acb, ..., cba``."""
    p = _Parser(text)
    e = sympy.expand(p.expr())
    assert p.i == len(p.s), f"trailing input in {text!r}"
    coeffs = []
    terms = sympy.Add.make_args(e)
    for word in PERMUTATION_WORDS:
        mono = _SYMS[word[0]] * _SYMS[word[1]] * _SYMS[word[2]]
        total = sympy.Integer(0)
        for t in terms:
            c, rest = t.as_coeff_Mul()
            if rest == mono:
                total += c
        coeffs.append(Fraction(int(total.p), int(total.q)))
    return tuple(coeffs)


def matrix_triple_value(coeffs, x, y, z) -> sympy.Matrix:
    args = (x, y, z)
    perms = [tuple("abc".index(ch) for ch in w) for w in PERMUTATION_WORDS]
    out = sympy.zeros(2, 2)
    for c, (i, j, k) in zip(coeffs, perms):
        out += sympy.Rational(c.numerator, c.denominator) * args[i] * args[j] * args[k]
    return out


# -- truncated ideal by linear algebra -----------------------------------------


def words_up_to(gens: GeneratorSet, d: int):
    for n in range(d + 1):
        yield from itertools.product(range(len(gens)), repeat=n)


def truncated_ideal_rank(relations: list[FreePoly], gens: GeneratorSet, d: int) -> tuple[int, list]:
    """Rank of ``span{u g v : deg <= d}`` and the row basis, coordinates over words of length <= d."""
    words = list(words_up_to(gens, d))
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for g in relations:
        dg = g.degree()
        for du in range(d - dg + 1):
            for u in itertools.product(range(len(gens)), repeat=du):
                for dv in range(d - dg - du + 1):
                    for v in itertools.product(range(len(gens)), repeat=dv):
                        row = [Fraction(0)] * len(words)
                        for w, c in g.sandwich(u, v).items():
                            row[index[w]] = c
                        rows.append(row)
    basis = linalg.span_basis(rows, len(words)) if rows else []
    return len(basis), basis


def as_vector(f: FreePoly, d: int) -> list[Fraction]:
    words = list(words_up_to(f.gens, d))
    index = {w: i for i, w in enumerate(words)}
    v = [Fraction(0)] * len(words)
    for w, c in f.items():
        v[index[w]] = c
    return v


# -- naive straightening in U(sl2) ---------------------------------------------

_SWAPS = {
    ("e", "f"): [("fe", 1), ("h", 1)],
    ("e", "h"): [("he", 1), ("e", -2)],
    ("h", "f"): [("fh", 1), ("f", -2)],
}


def naive_pbw(word: str) -> dict[tuple[int, int, int], Fraction]:
    """Swap adjacent out-of-order letters until every word reads ``f* h* e*``."""
    work: dict[str, Fraction] = {word: Fraction(1)}
    done: dict[tuple[int, int, int], Fraction] = {}
    while work:
        w, c = work.popitem()
        for pos in range(len(w) - 1):
            pair = (w[pos], w[pos + 1])
            if pair in _SWAPS:
                for rep, d in _SWAPS[pair]:
                    x = w[:pos] + rep + w[pos + 2:]
                    work[x] = work.get(x, 0) + c * d
                    if not work[x]:
                        del work[x]
                break
        else:
            mono = (w.count("f"), w.count("h"), w.count("e"))
            done[mono] = done.get(mono, 0) + c
            if not done[mono]:
                del done[mono]
    return done
