"""Down-up algebras ``A(alpha, beta, gamma)`` in the monomial basis ``a^i (ba)^j b^k``.

The defining relations

    bba = alpha*bab + beta*abb + gamma*b
    baa = alpha*aba + beta*aab + gamma*a

form a complete rewriting system. The quotient of ``A(-1, -1, 1)`` by
``a^3`` and ``b^3`` is handled by a ``quotient`` flag that also kills those
cubes (and caps ``i, k`` at 2). Besides rewriting-based multiplication,
which serves as the reference, the module evaluates closed-form product
formulas and central elements for the algebras that arise as envelopes.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Optional, Union

from . import linalg
from .freealg import UsageError, format_fraction

Monomial = tuple[int, int, int]
Strategy = Union[None, str, random.Random]

_A, _B = 0, 1
_NORMAL = re.compile(r"^(a*)((?:ba)*)(b*)$")


def _word(i: int, j: int, k: int) -> tuple[int, ...]:
    return (_A,) * i + (_B, _A) * j + (_B,) * k


def _heap_key(w: tuple[int, ...]) -> tuple:
    return (-len(w), tuple(-x for x in w))


def delta(x: int, y: int) -> int:
    return int(x == y)


def delta_hat(x: int, y: int) -> int:
    return int(x != y)


class DownUpElement:
    """Immutable sparse combination of basis monomials ``a^i (ba)^j b^k``."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "DownUpAlgebra", terms: Mapping[Monomial, Union[int, Fraction]] = ()):
        self.algebra = algebra
        clean = {}
        for mono, c in dict(terms).items():
            if c:
                algebra.check_monomial(mono)
                clean[tuple(mono)] = Fraction(c)
        self._terms = clean

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "DownUpElement") -> None:
        if self.algebra != other.algebra:
            raise UsageError("elements belong to different algebras")

    def __add__(self, other: "DownUpElement") -> "DownUpElement":
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return DownUpElement(self.algebra, out)

    def __neg__(self) -> "DownUpElement":
        return DownUpElement(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "DownUpElement") -> "DownUpElement":
        return self + (-other)

    def scale(self, c) -> "DownUpElement":
        c = Fraction(c)
        return DownUpElement(self.algebra, {m: c * x for m, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, DownUpElement):
            return self.algebra.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, DownUpElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, frozenset(self._terms.items())))

    def weights(self) -> set[int]:
        return {i - k for (i, _, k) in self._terms}

    def to_json(self) -> list[list]:
        return [[i, j, k, format_fraction(c)] for (i, j, k), c in sorted(self._terms.items())]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=lambda m: (m[0] + 2 * m[1] + m[2], m), reverse=True):
            c = self._terms[mono]
            body = render_monomial(mono)
            mag = abs(c)
            if body == "1":
                text = format_fraction(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_fraction(mag)} {body}"
            parts.append(("- " if c < 0 else "+ ") + text)
        s = " ".join(parts)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"DownUpElement({str(self)!r})"


def render_monomial(mono: Monomial) -> str:
    i, j, k = mono
    parts = []
    for base, e in (("a", i), ("(ba)", j), ("b", k)):
        if e == 1:
            parts.append(base)
        elif e > 1:
            parts.append(f"{base}^{e}")
    return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class DownUpAlgebra:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    quotient: bool = False

    def __init__(self, alpha, beta, gamma, quotient: bool = False):
        object.__setattr__(self, "alpha", Fraction(alpha))
        object.__setattr__(self, "beta", Fraction(beta))
        object.__setattr__(self, "gamma", Fraction(gamma))
        object.__setattr__(self, "quotient", bool(quotient))
        if quotient and (self.alpha, self.beta, self.gamma) != (-1, -1, 1):
            raise UsageError("the cube quotient is defined for A(-1, -1, 1) only")

    @property
    def mode(self) -> str:
        return "quotient" if self.quotient else "full"

    def __str__(self) -> str:
        base = f"A({format_fraction(self.alpha)}, {format_fraction(self.beta)}, {format_fraction(self.gamma)})"
        return base + "/<a^3, b^3>" if self.quotient else base

    # -- elements ------------------------------------------------------------

    def check_monomial(self, mono: Monomial) -> None:
        i, j, k = mono
        if min(i, j, k) < 0:
            raise UsageError(f"negative exponent in {mono}")
        if self.quotient and (i > 2 or k > 2):
            raise UsageError(f"{mono} is not a basis monomial of the cube quotient")

    def zero(self) -> DownUpElement:
        return DownUpElement(self, {})

    def one(self) -> DownUpElement:
        return DownUpElement(self, {(0, 0, 0): 1})

    def monomial(self, i: int, j: int, k: int, coeff=1) -> DownUpElement:
        """``a^i (ba)^j b^k``; in the quotient, exponents above 2 give 0."""
        if self.quotient and (i > 2 or k > 2):
            return self.zero()
        return DownUpElement(self, {(i, j, k): coeff})

    def element(self, terms: Mapping[Monomial, Union[int, Fraction]]) -> DownUpElement:
        return DownUpElement(self, terms)

    def a(self) -> DownUpElement:
        return self.monomial(1, 0, 0)

    def b(self) -> DownUpElement:
        return self.monomial(0, 0, 1)

    # -- rewriting -----------------------------------------------------------

    def _redexes(self, w: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
        out = []
        for pos in range(len(w) - 2):
            f = w[pos:pos + 3]
            if f in ((_B, _B, _A), (_B, _A, _A)):
                out.append((pos, f))
        return out

    def _rules(self, f: tuple[int, ...]) -> list[tuple[tuple[int, ...], Fraction]]:
        al, be, ga = self.alpha, self.beta, self.gamma
        if f == (_B, _B, _A):
            return [((_B, _A, _B), al), ((_A, _B, _B), be), ((_B,), ga)]
        return [((_A, _B, _A), al), ((_A, _A, _B), be), ((_A,), ga)]

    def _choose(self, w: tuple[int, ...], strategy: Strategy) -> Optional[tuple[int, tuple[int, ...]]]:
        found = self._redexes(w)
        if not found:
            return None
        if isinstance(strategy, random.Random):
            return strategy.choice(found)
        if strategy == "leftmost":
            return found[0]
        # default: the deglex-greatest pattern (bba before baa), leftmost occurrence
        return max(found, key=lambda r: (r[1], -r[0]))

    def _has_cube(self, w: tuple[int, ...]) -> bool:
        for pos in range(len(w) - 2):
            if w[pos] == w[pos + 1] == w[pos + 2]:
                return True
        return False

    def _rewrite(self, w: tuple[int, ...], strategy: Strategy) -> dict[tuple[int, ...], Fraction]:
        work: dict[tuple[int, ...], Fraction] = {w: Fraction(1)}
        heap = [(_heap_key(w), w)]
        out: dict[tuple[int, ...], Fraction] = {}
        while heap:
            _, v = heapq.heappop(heap)
            c = work.pop(v, None)
            if c is None:
                continue
            if self.quotient and self._has_cube(v):
                continue
            hit = self._choose(v, strategy)
            if hit is None:
                out[v] = out.get(v, 0) + c
                continue
            pos, f = hit
            for rhs, d in self._rules(f):
                if not d:
                    continue
                x = v[:pos] + rhs + v[pos + 3:]
                if x in work:
                    s = work[x] + c * d
                    if s:
                        work[x] = s
                    else:
                        del work[x]
                else:
                    work[x] = c * d
                    heapq.heappush(heap, (_heap_key(x), x))
        return out

    def _to_element(self, words: Mapping[tuple[int, ...], Fraction]) -> DownUpElement:
        terms: dict[Monomial, Fraction] = {}
        for v, c in words.items():
            mono = parse_normal_word(v)
            terms[mono] = terms.get(mono, 0) + c
        return DownUpElement(self, terms)

    def rewrite_word(self, w: Union[str, Iterable[int]], strategy: Strategy = None) -> DownUpElement:
        """Normal form of a word over ``a, b``.

        ``strategy`` picks the redex: None rewrites the greatest pattern at
        its leftmost occurrence, ``"leftmost"`` the leftmost redex of either
        kind, and a :class:`random.Random` picks uniformly.
        """
        if isinstance(w, str):
            w = tuple(_A if ch == "a" else _B if ch == "b" else _bad_letter(ch) for ch in w)
        w = tuple(w)
        if strategy is None:
            return self._to_element(self._cached_rewrite(w))
        return self._to_element(self._rewrite(w, strategy))

    @lru_cache(maxsize=1 << 16)
    def _cached_rewrite(self, w: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        return self._rewrite(w, None)

    def multiply(self, x: DownUpElement, y: DownUpElement) -> DownUpElement:
        x._check(y)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                for m, c in self._monomial_product(m1, m2).items():
                    out[m] = out.get(m, 0) + c1 * c2 * c
        return DownUpElement(self, out)

    @lru_cache(maxsize=1 << 16)
    def _monomial_product(self, m1: Monomial, m2: Monomial) -> dict[Monomial, Fraction]:
        return self.rewrite_word(_word(*m1) + _word(*m2)).terms

    def product(self, *factors: DownUpElement) -> DownUpElement:
        out = self.one()
        for f in factors:
            out = self.multiply(out, f)
        return out

    def zeta(self, x: DownUpElement) -> DownUpElement:
        """Reversal with the letters swapped: ``a^i (ba)^j b^k -> a^k (ba)^j b^i``."""
        return DownUpElement(self, {(k, j, i): c for (i, j, k), c in x.items()})


def _bad_letter(ch: str) -> int:
    raise UsageError(f"letter {ch!r} is not a or b")


def parse_normal_word(w: tuple[int, ...]) -> Monomial:
    text = "".join("a" if x == _A else "b" for x in w)
    m = _NORMAL.match(text)
    if m is None:
        raise ArithmeticError(f"rewriting stopped at a non-basis word {text!r}")
    return len(m.group(1)), len(m.group(2)) // 2, len(m.group(3))


SYMSUM = DownUpAlgebra(-1, -1, 1, quotient=True)
A010 = DownUpAlgebra(0, 1, 0)
SL2_DOWNUP = DownUpAlgebra(2, -1, -2)


# -- closed forms for the cube quotient ---------------------------------------


def L_poly(m: int, j: int, l: int, r: int, algebra: DownUpAlgebra = SYMSUM) -> DownUpElement:
    """``sum_{t=0}^{j} (-1)^(j+t) C(j,t) a^l (ba)^(j+m-t) b^r``."""
    if min(m, j, l, r) < 0:
        raise UsageError("L-polynomial indices must be nonnegative")
    terms: dict[Monomial, Fraction] = {}
    if algebra.quotient and (l > 2 or r > 2):
        return algebra.zero()
    for t in range(j + 1):
        terms[(l, j + m - t, r)] = Fraction((-1) ** (j + t) * comb(j, t))
    return DownUpElement(algebra, terms)


class _Acc:
    """Accumulates ``coeff * L(...)`` lazily so guarded-out terms never evaluate."""

    def __init__(self, algebra: DownUpAlgebra):
        self.algebra = algebra
        self.value = algebra.zero()

    def L(self, coeff: int, m: int, j: int, l: int, r: int) -> None:
        if coeff:
            self.value = self.value + L_poly(m, j, l, r, self.algebra).scale(coeff)

    def mono(self, coeff: int, i: int, j: int, k: int) -> None:
        if coeff:
            self.value = self.value + self.algebra.monomial(i, j, k, coeff)


def symsum_product_closed(i: int, j: int, k: int, l: int, m: int, n: int) -> DownUpElement:
    """Product ``a^i (ba)^j b^k * a^l (ba)^m b^n`` in the cube quotient, by closed form."""
    if not all(0 <= x <= 2 for x in (i, k, l, n)) or j < 0 or m < 0:
        raise UsageError("need 0 <= i, k, l, n <= 2 and j, m >= 0")
    acc = _Acc(SYMSUM)
    d, dh = delta, delta_hat
    if (k, l) in ((0, 0), (1, 1)):
        acc.mono(1, i, j + k * l + m, n)
    elif (k, l) == (0, 1):
        acc.L(-d(i, 0) * dh(n, 2) * dh(j, 0), j - 1, m, 2, n + 1)
        acc.L(dh(i, 2), m, j, i + 1, n)
    elif (k, l) == (1, 0):
        acc.L(-d(n, 0) * dh(i, 2) * dh(m, 0), m - 1, j, i + 1, 2)
        acc.L(dh(n, 2), j, m, i, n + 1)
    elif (k, l) == (2, 1):
        acc.L(-d(n, 0) * dh(i, 2), m, j, i + 1, 2)
        acc.L(dh(n, 2), j, m + 1, i, n + 1)
    elif (k, l) == (1, 2):
        acc.L(-d(i, 0) * dh(n, 2), j, m, 2, n + 1)
        acc.L(dh(i, 2), m, j + 1, i + 1, n)
    elif (k, l) == (2, 0):
        acc.mono(d(m, 0) * d(n, 0), i, j, 2)
    elif (k, l) == (0, 2):
        acc.mono(d(i, 0) * d(j, 0), 2, m, n)
    else:  # (2, 2)
        for s in range(j + 2):
            sign = (-1) ** (s + j) * comb(j + 1, s)
            acc.L(-sign * d(n, 0) * d(i, 0) * dh(m, 0), m - 1, j - s + 1, 2, 2)
            acc.L(sign * dh(n, 2) * dh(i, 2), j - s + 1, m, i + 1, n + 1)
        acc.mono(1, i, j + m + 1, n)
        acc.mono(-1, i, j + m + 2, n)
        acc.mono(d(i, 0) * d(m, 0) * d(n, 0), 2, j, 2)
    return acc.value


def symsum_product_bruteforce(i: int, j: int, k: int, l: int, m: int, n: int) -> DownUpElement:
    return SYMSUM.multiply(SYMSUM.monomial(i, j, k), SYMSUM.monomial(l, m, n))


# -- center of the cube quotient ------------------------------------------------


def gamma_coefficients(m: int) -> tuple[int, int, int, int]:
    if m % 2 == 0:
        return m + 1, -3, 0, -m + 2
    return -(m - 3), -1, -2, m


def center_element(m: int) -> DownUpElement:
    """The weight-0 central element ``Z(m)`` of the cube quotient, ``m >= 2``."""
    if m < 2:
        raise UsageError("central elements are indexed by m >= 2")
    g1, g2, g3, g4 = gamma_coefficients(m)
    terms: dict[Monomial, Fraction] = {}

    def add(mono: Monomial, c) -> None:
        terms[mono] = terms.get(mono, 0) + Fraction(c)

    if m != 2:
        for j in range(1, m - 1):
            c = (-1) ** (j + 1) * comb(m - 1, j - 1)
            add((0, j, 0), c)
            add((1, j - 1, 1), -c)
    add((0, m - 1, 0), g1)
    add((0, m, 0), g2)
    add((1, m - 1, 1), g3)
    add((1, m - 2, 1), g4)
    add((2, m - 2, 2), 3)
    return SYMSUM.element(terms)


def commutator(x: DownUpElement, y: DownUpElement) -> DownUpElement:
    return x * y - y * x


def center_ansatz_solution(m: int) -> dict[Monomial, Fraction]:
    """The explicit solution ``s_{i,j}`` of the commutation system, keyed by ``(i, j, i)``."""
    if m < 2:
        raise UsageError("m >= 2")
    s: dict[Monomial, Fraction] = {}
    third = Fraction(1, 3)
    for j in range(1, m - 1):
        s[(0, j, 0)] = third * (-1) ** (j + 1) * comb(m - 1, j - 1)
    even = m % 2 == 0
    s[(0, m - 1, 0)] = Fraction(m + 1, 3) if even else Fraction(3 - m, 3)
    s[(0, m, 0)] = Fraction(-1) if even else Fraction(-1, 3)
    for i in range(1, m - 1):
        s[(1, i - 1, 1)] = -s[(0, i, 0)]
    s[(1, m - 2, 1)] = -s[(0, m - 1, 0)] + 1
    s[(1, m - 1, 1)] = Fraction(0) if even else Fraction(-2, 3)
    s[(1, m, 1)] = Fraction(0)
    s[(2, m - 2, 2)] = Fraction(1)
    return {k: v for k, v in s.items() if v}


def weight_zero_monomials(max_j: int) -> list[Monomial]:
    return [(i, j, i) for i in range(3) for j in range(max_j + 1)]


def center_slice_bruteforce(max_j: int) -> list[DownUpElement]:
    """Basis of ``{z in span a^i (ba)^j b^i, j <= max_j : z a = a z}``."""
    monos = weight_zero_monomials(max_j)
    a = SYMSUM.a()
    images = [commutator(SYMSUM.monomial(*mono), a) for mono in monos]
    support = sorted({t for img in images for t in img.terms})
    index = {t: r for r, t in enumerate(support)}
    rows = [[Fraction(0)] * len(monos) for _ in support]
    for col, img in enumerate(images):
        for t, c in img.items():
            rows[index[t]][col] = c
    sols = linalg.nullspace(rows, len(monos)) if rows else linalg.identity(len(monos))
    basis = linalg.span_basis(sols, len(monos))
    return [SYMSUM.element(dict(zip(monos, v))) for v in basis]


def in_span(x: DownUpElement, vectors: list[DownUpElement]) -> bool:
    support = sorted({t for v in vectors + [x] for t in v.terms})
    rows = [[v.coeff(t) for t in support] for v in vectors]
    return linalg.in_span([x.coeff(t) for t in support], rows, len(support))


# -- A(0, 1, 0) ----------------------------------------------------------------


def chi(l: int, t: int) -> int:
    return int(l > t)


def a010_product_closed(i: int, j: int, k: int, l: int, m: int, n: int) -> DownUpElement:
    """Product ``a^i (ba)^j b^k * a^l (ba)^m b^n`` in ``A(0, 1, 0)`` by parity of ``k`` and ``l``."""
    if min(i, j, k, l, m, n) < 0:
        raise UsageError("exponents must be nonnegative")
    acc = _Acc(A010)
    if k % 2 == 1 and l % 2 == 1:
        acc.mono(1, i + l - 1, j + m + 1, k - 1 + n)
    elif k % 2 == 0 and l % 2 == 0:
        acc.mono(1, i + l, j + m, k + n)
    elif k % 2 == 0:
        c = chi(j, m)
        acc.mono(c, 2 * m + i + l + 1, j - m - 1, 2 * m + k + n + 1)
        acc.mono(1 - c, 2 * j + i + l, m - j, 2 * j + k + n)
    else:
        c = chi(j, m - 1)
        acc.mono(c, 2 * m + i + l, j - m, 2 * m + k + n)
        acc.mono(1 - c, 2 * j + i + l + 1, m - j - 1, 2 * j + k + n + 1)
    return acc.value


def a010_product_bruteforce(i: int, j: int, k: int, l: int, m: int, n: int) -> DownUpElement:
    return A010.multiply(A010.monomial(i, j, k), A010.monomial(l, m, n))


def b_power_times_a_power(i: int, j: int) -> tuple[DownUpElement, DownUpElement]:
    """``b^i * a^j`` computed by rewriting, and by its closed form."""
    lhs = A010.multiply(A010.monomial(0, 0, i), A010.monomial(j, 0, 0))
    if i % 2 == 1 and j % 2 == 1:
        rhs = A010.monomial(j - 1, 1, i - 1)
    else:
        rhs = A010.monomial(j, 0, i)
    return lhs, rhs


def ba_power_times_a_power(j: int, i: int) -> tuple[DownUpElement, DownUpElement]:
    """``(ba)^j * a^i``."""
    lhs = A010.multiply(A010.monomial(0, j, 0), A010.monomial(i, 0, 0))
    if i % 2 == 1 and j != 0:
        rhs = A010.monomial(i + 1, j - 1, 1)
    else:
        rhs = A010.monomial(i, j, 0)
    return lhs, rhs


def b_power_times_ba_power(i: int, j: int) -> tuple[DownUpElement, DownUpElement]:
    """``b^i * (ba)^j``."""
    lhs = A010.multiply(A010.monomial(0, 0, i), A010.monomial(0, j, 0))
    if i % 2 == 1 and j != 0:
        rhs = A010.monomial(1, j - 1, i + 1)
    else:
        rhs = A010.monomial(0, j, i)
    return lhs, rhs


def ba_power_times_a_ba_power(i: int, j: int) -> tuple[DownUpElement, DownUpElement]:
    """``(ba)^i * a (ba)^j``."""
    lhs = A010.multiply(A010.monomial(0, i, 0), A010.monomial(1, j, 0))
    if i > j:
        rhs = A010.monomial(2 * j + 2, i - j - 1, 2 * j + 1)
    else:
        rhs = A010.monomial(2 * i + 1, j - i, 2 * i)
    return lhs, rhs


HELPER_IDENTITIES = {
    "b^i a^j": b_power_times_a_power,
    "(ba)^j a^i": ba_power_times_a_power,
    "b^i (ba)^j": b_power_times_ba_power,
    "(ba)^i a(ba)^j": ba_power_times_a_ba_power,
}


def helper_identities_a010(i: int, j: int) -> dict[str, bool]:
    """Check the four power-commutation identities of ``A(0, 1, 0)`` at ``(i, j)``."""
    return {name: (lambda pair: pair[0] == pair[1])(fn(i, j)) for name, fn in HELPER_IDENTITIES.items()}


# -- alternative basis ---------------------------------------------------------


def b2_expand(i: int, j: int, k: int, c1, c2, algebra: DownUpAlgebra = A010) -> DownUpElement:
    """``a^i (ba + c1*ab + c2)^j b^k`` in the monomial basis."""
    c1, c2 = Fraction(c1), Fraction(c2)
    middle = algebra.element({(0, 1, 0): 1, (1, 0, 1): c1, (0, 0, 0): c2})
    out = algebra.monomial(i, 0, 0)
    for _ in range(j):
        out = algebra.multiply(out, middle)
    return algebra.multiply(out, algebra.monomial(0, 0, k))
