"""PBW arithmetic in the universal enveloping algebra of sl2.

Elements are sparse maps ``(i, j, k) -> coefficient`` over the ordered
monomials ``f^i h^j e^k``. Straightening uses ``ef = fe + h``,
``eh = he - 2e`` and ``hf = fh - 2f``; closed forms for ``e^l h^k``,
``h^k f^m``, ``e^l f^j`` and the general product are checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Mapping, Union

from .freealg import UsageError, format_fraction

Monomial = tuple[int, int, int]
Terms = dict[Monomial, Fraction]

_ORDER = {"f": 0, "h": 1, "e": 2}


def _clean(terms: Mapping[Monomial, Union[int, Fraction]]) -> Terms:
    return {m: Fraction(c) for m, c in terms.items() if c}


def _add_into(out: Terms, terms: Mapping[Monomial, Fraction], c: Fraction = Fraction(1)) -> None:
    for m, x in terms.items():
        s = out.get(m, 0) + c * x
        if s:
            out[m] = s
        else:
            out.pop(m, None)


class PBWElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Union[int, Fraction]] = ()):
        t = _clean(dict(terms))
        for m in t:
            if min(m) < 0:
                raise UsageError(f"negative exponent in {m}")
        self._terms = t

    @classmethod
    def monomial(cls, i: int, j: int, k: int, coeff=1) -> "PBWElement":
        return cls({(i, j, k): coeff})

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "PBWElement") -> "PBWElement":
        out = dict(self._terms)
        _add_into(out, other._terms)
        return PBWElement(out)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        out = dict(self._terms)
        _add_into(out, other._terms, Fraction(-1))
        return PBWElement(out)

    def scale(self, c) -> "PBWElement":
        return PBWElement({m: Fraction(c) * x for m, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PBWElement):
            return multiply(self, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, PBWElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_json(self) -> list[list]:
        return [[i, j, k, format_fraction(c)] for (i, j, k), c in sorted(self._terms.items())]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=lambda m: (sum(m), m), reverse=True):
            c = self._terms[mono]
            pieces = [(s if e == 1 else f"{s}^{e}") for s, e in zip("fhe", mono) if e]
            body = " ".join(pieces)
            mag = abs(c)
            text = format_fraction(mag) if not body else body if mag == 1 else f"{format_fraction(mag)} {body}"
            parts.append(("- " if c < 0 else "+ ") + text)
        s = " ".join(parts)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"PBWElement({str(self)!r})"


# -- straightening -------------------------------------------------------------


@lru_cache(maxsize=None)
def _letter_times(letter: str, mono: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """``letter * f^i h^j e^k`` in PBW form."""
    i, j, k = mono
    if letter == "f":
        return (((i + 1, j, k), Fraction(1)),)
    if letter == "h":
        # h f^i = f^i (h - 2i)
        out: Terms = {}
        _add_into(out, {(i, j + 1, k): Fraction(1)})
        _add_into(out, {(i, j, k): Fraction(-2 * i)})
        return tuple(out.items())
    # e f^i = f^i e + i f^(i-1) (h - (i - 1)), then e h^j = (h - 2)^j e
    out = {}
    for q in range(j + 1):
        _add_into(out, {(i, j - q, k + 1): Fraction(comb(j, q) * (-2) ** q)})
    if i:
        rest: Terms = {}
        _add_into(rest, {(i - 1, j + 1, k): Fraction(i)})
        _add_into(rest, {(i - 1, j, k): Fraction(-i * (i - 1))})
        _add_into(out, rest)
    return tuple(out.items())


def _letter_times_element(letter: str, terms: Terms) -> Terms:
    out: Terms = {}
    for mono, c in terms.items():
        _add_into(out, dict(_letter_times(letter, mono)), c)
    return out


def pbw_normalize(word: str) -> PBWElement:
    """Straighten a word over ``e, f, h`` into the ``f^i h^j e^k`` basis."""
    for ch in word:
        if ch not in _ORDER:
            raise UsageError(f"letter {ch!r} is not one of e, f, h")
    terms: Terms = {(0, 0, 0): Fraction(1)}
    for ch in reversed(word):
        terms = _letter_times_element(ch, terms)
    return PBWElement(terms)


def monomial_word(i: int, j: int, k: int) -> str:
    return "f" * i + "h" * j + "e" * k


@lru_cache(maxsize=None)
def _monomial_product(m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    terms: Terms = {m2: Fraction(1)}
    for ch in reversed(monomial_word(*m1)):
        terms = _letter_times_element(ch, terms)
    return tuple(terms.items())


def multiply(x: PBWElement, y: PBWElement) -> PBWElement:
    out: Terms = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            _add_into(out, dict(_monomial_product(m1, m2)), c1 * c2)
    return PBWElement(out)


# -- h-polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class HBinomial:
    """``C(h + shift, order)`` as a polynomial in ``h``."""

    shift: Fraction
    order: int

    def __init__(self, shift, order: int):
        if order < 0:
            raise UsageError("binomial order must be nonnegative")
        object.__setattr__(self, "shift", Fraction(shift))
        object.__setattr__(self, "order", order)

    def coefficients(self) -> list[Fraction]:
        """Coefficients of ``h^0, h^1, ...``."""
        poly = [Fraction(1)]
        for s in range(self.order):
            c = self.shift - s
            # multiply by (h + c)
            nxt = [Fraction(0)] * (len(poly) + 1)
            for d, x in enumerate(poly):
                nxt[d] += c * x
                nxt[d + 1] += x
            poly = nxt
        r = factorial(self.order)
        return [x / r for x in poly]

    def __call__(self, h) -> Fraction:
        return sum((c * Fraction(h) ** d for d, c in enumerate(self.coefficients())), Fraction(0))


def _power(base: int, exp: int) -> int:
    # 0^0 = 1
    return 1 if exp == 0 else base ** exp


def e_pow_h_pow(l: int, k: int) -> PBWElement:
    """``e^l h^k = sum_q (-2)^q C(k,q) l^q h^(k-q) e^l``."""
    return PBWElement({(0, k - q, l): (-2) ** q * comb(k, q) * _power(l, q) for q in range(k + 1)})


def h_pow_f_pow(k: int, m: int) -> PBWElement:
    """``h^k f^m = sum_q (-2)^q C(k,q) m^q f^m h^(k-q)``."""
    return PBWElement({(m, k - q, 0): (-2) ** q * comb(k, q) * _power(m, q) for q in range(k + 1)})


def e_pow_f_pow(l: int, j: int) -> PBWElement:
    """``e^l f^j = l! j! sum_r f^(j-r)/(j-r)! C(h - j - l + 2r, r) e^(l-r)/(l-r)!``."""
    out: Terms = {}
    for r in range(min(j, l) + 1):
        scale = Fraction(factorial(l) * factorial(j), factorial(j - r) * factorial(l - r))
        for d, c in enumerate(HBinomial(-j - l + 2 * r, r).coefficients()):
            _add_into(out, {(j - r, d, l - r): scale * c})
    return PBWElement(out)


def sl2_product_closed(i: int, j: int, k: int, l: int, m: int, n: int) -> PBWElement:
    """``(f^i h^j e^k)(f^l h^m e^n)`` by the triple-sum closed form.

    The innermost index runs over ``0..m`` and is independent of the outer
    exponent ``i``, which only shifts the final ``f`` power.
    """
    if min(i, j, k, l, m, n) < 0:
        raise UsageError("exponents must be nonnegative")
    out: Terms = {}
    for r in range(min(l, k) + 1):
        binom = HBinomial(-k - l + 2 * r, r).coefficients()
        base = Fraction(factorial(k) * factorial(l), factorial(l - r) * factorial(k - r))
        for q in range(j + 1):
            for s in range(m + 1):
                c = base * (-2) ** (q + s) * comb(j, q) * comb(m, s) * _power(l - r, q) * _power(k - r, s)
                if not c:
                    continue
                for d, b in enumerate(binom):
                    if b:
                        _add_into(out, {(l - r + i, j - q + d + m - s, k - r + n): c * b})
    return PBWElement(out)


def sl2_product_bruteforce(i: int, j: int, k: int, l: int, m: int, n: int) -> PBWElement:
    return pbw_normalize(monomial_word(i, j, k) + monomial_word(l, m, n))
