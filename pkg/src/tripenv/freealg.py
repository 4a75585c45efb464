"""Free unital associative algebra over the rationals.

Words are tuples of generator indices; generator ``i`` precedes generator
``j`` iff ``i < j``. Polynomials are sparse maps from words to nonzero
:class:`fractions.Fraction` coefficients and are compared with the deglex
order (degree first, then the leftmost differing letter).

The text grammar used everywhere in the package::

    poly  := term (('+'|'-') term)*  |  '0'
    term  := [coeff ['*']] word  |  coeff
    coeff := INT | INT '/' INT
    word  := (SYMBOL ['^' INT])+

Rendering writes words as concatenated symbol names (``bba``), the empty
word as ``1`` and non-unit coefficients as ``p/q*word``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

Word = tuple[int, ...]
Scalar = Union[int, Fraction]

EMPTY: Word = ()


class UsageError(ValueError):
    """Raised when operands do not share a generator set or violate a precondition."""


def deglex_key(w: Word) -> tuple[int, Word]:
    # tuples compare lexicographically, so (degree, letters) is exactly deglex
    return (len(w), w)


def deglex_cmp(u: Word, v: Word) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    ku, kv = deglex_key(u), deglex_key(v)
    return (ku > kv) - (ku < kv)


def find_factor(u: Word, v: Word) -> Optional[tuple[Word, Word]]:
    """Leftmost ``(w1, w2)`` with ``w1 + u + w2 == v``, or None."""
    n, m = len(u), len(v)
    if n > m:
        return None
    for i in range(m - n + 1):
        if v[i:i + n] == u:
            return v[:i], v[i + n:]
    return None


def is_factor(u: Word, v: Word) -> bool:
    return find_factor(u, v) is not None


_COEFF = r"\d+(?:/\d+)?"


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered alphabet; position in ``symbols`` defines the letter order."""

    symbols: tuple[str, ...]

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not syms:
            raise UsageError("generator set must be nonempty")
        if any(not s for s in syms):
            raise UsageError("generator names must be nonempty")
        if len(set(syms)) != len(syms):
            raise UsageError(f"duplicate generator names in {syms}")
        for s in syms:
            if re.search(r"[\s+\-*/^0-9]", s):
                raise UsageError(f"generator name {s!r} clashes with the grammar")
        object.__setattr__(self, "symbols", syms)

    def __len__(self) -> int:
        return len(self.symbols)

    def index(self, name: str) -> int:
        return self.symbols.index(name)

    # -- words ---------------------------------------------------------------

    def check_word(self, w: Word) -> Word:
        for x in w:
            if not 0 <= x < len(self.symbols):
                raise UsageError(f"letter index {x} out of range for {self.symbols}")
        return w

    def render_word(self, w: Word) -> str:
        if not w:
            return "1"
        return "".join(self.symbols[x] for x in w)

    def parse_word(self, text: str) -> Word:
        text = text.replace(" ", "")
        if text in ("", "1"):
            return EMPTY
        # longest symbol first so multi-character names tokenize greedily
        names = sorted(self.symbols, key=len, reverse=True)
        pattern = re.compile("(" + "|".join(re.escape(s) for s in names) + r")(?:\^(\d+))?")
        out: list[int] = []
        pos = 0
        while pos < len(text):
            m = pattern.match(text, pos)
            if m is None:
                raise UsageError(f"cannot parse word {text!r} at position {pos}")
            out.extend([self.index(m.group(1))] * int(m.group(2) or 1))
            pos = m.end()
        return tuple(out)

    # -- polynomials ---------------------------------------------------------

    def word_poly(self, w: Word, coeff: Scalar = 1) -> "FreePoly":
        return FreePoly(self, {self.check_word(tuple(w)): Fraction(coeff)})

    def one(self) -> "FreePoly":
        return FreePoly(self, {EMPTY: Fraction(1)})

    def zero(self) -> "FreePoly":
        return FreePoly(self, {})

    def gen(self, name: str) -> "FreePoly":
        return self.word_poly((self.index(name),))

    def gens(self) -> list["FreePoly"]:
        return [self.word_poly((i,)) for i in range(len(self.symbols))]

    def parse(self, text: str) -> "FreePoly":
        s = text.replace(" ", "")
        if not s:
            raise UsageError("empty polynomial text")
        if s in ("0", "+0", "-0"):
            return self.zero()
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[Word, Fraction] = {}
        for m in re.finditer(r"([+-])([^+-]+)", s):
            sign = -1 if m.group(1) == "-" else 1
            body = m.group(2)
            cm = re.match(rf"({_COEFF})\*?", body)
            if cm:
                coeff = Fraction(cm.group(1))
                rest = body[cm.end():]
                if cm.group(0).endswith("*") and not rest:
                    raise UsageError(f"dangling '*' in term {body!r}")
            else:
                coeff, rest = Fraction(1), body
            w = self.parse_word(rest) if rest else EMPTY
            terms[w] = terms.get(w, Fraction(0)) + sign * coeff
        if "".join(m.group(0) for m in re.finditer(r"([+-])([^+-]+)", s)) != s:
            raise UsageError(f"cannot parse polynomial {text!r}")
        return FreePoly(self, terms)

    def random_word(self, rng, max_len: int) -> Word:
        n = rng.randint(0, max_len)
        return tuple(rng.randrange(len(self.symbols)) for _ in range(n))


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class FreePoly:
    """Immutable exact-rational element of the free algebra on ``gens``."""

    __slots__ = ("gens", "_terms", "_hash")

    def __init__(self, gens: GeneratorSet, terms: Mapping[Word, Scalar] = ()):
        self.gens = gens
        clean: dict[Word, Fraction] = {}
        for w, c in dict(terms).items():
            if c:
                clean[tuple(w)] = Fraction(c)
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, gens: GeneratorSet, terms: dict[Word, Fraction]) -> "FreePoly":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.gens = gens
        obj._terms = terms
        obj._hash = None
        return obj

    # -- access --------------------------------------------------------------

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def support(self) -> list[Word]:
        return sorted(self._terms, key=deglex_key, reverse=True)

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def leading(self) -> tuple[Word, Fraction]:
        """Deglex-greatest word of the support together with its coefficient."""
        if not self._terms:
            raise ZeroDivisionError("zero polynomial has no leading monomial")
        w = max(self._terms, key=deglex_key)
        return w, self._terms[w]

    def leading_word(self) -> Word:
        return self.leading()[0]

    def monic(self) -> "FreePoly":
        _, c = self.leading()
        if c == 1:
            return self
        return self.scale(1 / c)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "FreePoly") -> None:
        if self.gens != other.gens:
            raise UsageError(f"generator sets differ: {self.gens.symbols} vs {other.gens.symbols}")

    def _coerce(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return FreePoly(self.gens, {EMPTY: other})
        return NotImplemented

    def __add__(self, other) -> "FreePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return FreePoly._raw(self.gens, out)

    __radd__ = __add__

    def __neg__(self) -> "FreePoly":
        return FreePoly._raw(self.gens, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "FreePoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "FreePoly":
        return (-self) + other

    def scale(self, c: Scalar) -> "FreePoly":
        c = Fraction(c)
        if not c:
            return FreePoly._raw(self.gens, {})
        return FreePoly._raw(self.gens, {w: c * x for w, x in self._terms.items()})

    def __mul__(self, other) -> "FreePoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FreePoly):
            return NotImplemented
        self._check(other)
        out: dict[Word, Fraction] = {}
        for u, c in self._terms.items():
            for v, d in other._terms.items():
                w = u + v
                s = out.get(w, 0) + c * d
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return FreePoly._raw(self.gens, out)

    def __rmul__(self, other) -> "FreePoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "FreePoly":
        out = self.gens.one()
        for _ in range(n):
            out = out * self
        return out

    def sandwich(self, left: Word, right: Word, coeff: Scalar = 1) -> "FreePoly":
        """``coeff * left * self * right`` without building intermediate products."""
        c = Fraction(coeff)
        return FreePoly._raw(self.gens, {left + w + right: c * x for w, x in self._terms.items()} if c else {})

    def map_words(self, fn) -> "FreePoly":
        """Apply a word map linearly (used for reversal-type anti-automorphisms)."""
        out: dict[Word, Fraction] = {}
        for w, c in self._terms.items():
            v = tuple(fn(w))
            out[v] = out.get(v, 0) + c
        return FreePoly(self.gens, out)

    # -- comparison / rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FreePoly(self.gens, {EMPTY: other})
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.gens == other.gens and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.gens, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for w in self.support():
            c = self._terms[w]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            word = self.gens.render_word(w)
            if not w:
                body = format_fraction(a)
            elif a == 1:
                body = word
            else:
                body = f"{format_fraction(a)}*{word}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"FreePoly({str(self)!r})"


def leading_monomial(f: FreePoly) -> tuple[Word, Fraction]:
    return f.leading()


def multiply(f: FreePoly, g: FreePoly) -> FreePoly:
    return f * g


AB = GeneratorSet("ab")
