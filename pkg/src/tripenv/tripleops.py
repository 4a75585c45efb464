"""Trilinear operations as elements of the group algebra of S3.

An operation is a coefficient vector over the permutation basis
``abc, acb, bac, bca, cab, cba``. Its matrix form comes from the Wedderburn
decomposition Q + M2(Q) + Q of the group algebra; two operations generate the
same left ideal exactly when the three components of their matrix forms are
row equivalent.
"""

from __future__ import annotations

import itertools
import json
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Optional, Sequence

from . import linalg
from .freealg import UsageError

PERMUTATIONS: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
)
PERMUTATION_NAMES = ("abc", "acb", "bac", "bca", "cab", "cba")

# columns express the matrix units S, E11, E12, E21, E22, A in the permutation basis
M = [[Fraction(x, 6) for x in row] for row in (
    (1, 2, 0, 0, 2, 1),
    (1, 0, 2, 2, 0, -1),
    (1, 2, -2, 0, -2, -1),
    (1, -2, 2, -2, 0, 1),
    (1, 0, -2, 2, -2, 1),
    (1, -2, 0, -2, 2, -1),
)]

M_INV = [[Fraction(x) for x in row] for row in (
    (1, 1, 1, 1, 1, 1),
    (1, 0, 1, 0, -1, -1),
    (0, 1, 0, 1, -1, -1),
    (0, 1, -1, -1, 1, 0),
    (1, 0, -1, -1, 0, 1),
    (1, -1, -1, 1, 1, -1),
)]


def _vec(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = tuple(Fraction(c) for c in coeffs)
    if len(out) != 6:
        raise UsageError(f"a trilinear operation needs 6 coefficients, got {len(out)}")
    return out


def parse_coeffs(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1,-1,0,0,1/2,0"``."""
    return _vec(t.strip() for t in text.split(","))


@dataclass(frozen=True)
class MatrixForm:
    y1: Fraction
    block: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    y6: Fraction

    def as_vector(self) -> tuple[Fraction, ...]:
        (y2, y3), (y4, y5) = self.block
        return (self.y1, y2, y3, y4, y5, self.y6)

    @classmethod
    def from_vector(cls, y: Sequence) -> "MatrixForm":
        y = _vec(y)
        return cls(y[0], ((y[1], y[2]), (y[3], y[4])), y[5])

    def canonical(self) -> tuple:
        """Row canonical form of each component; equal keys mean equivalent operations."""
        block_rref, _ = linalg.rref([list(r) for r in self.block], 2)
        return (int(self.y1 != 0), tuple(tuple(r) for r in block_rref), int(self.y6 != 0))

    def __str__(self) -> str:
        (y2, y3), (y4, y5) = self.block
        f = lambda x: str(x)
        return f"[{f(self.y1)}, [[{f(y2)}, {f(y3)}], [{f(y4)}, {f(y5)}]], {f(self.y6)}]"


@dataclass(frozen=True)
class TrilinearOp:
    coeffs: tuple[Fraction, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __init__(self, coeffs: Iterable, label: Optional[str] = None):
        object.__setattr__(self, "coeffs", _vec(coeffs))
        object.__setattr__(self, "label", label)

    def matrix_form(self) -> MatrixForm:
        return to_matrix_form(self)

    def canonical(self) -> tuple:
        return self.matrix_form().canonical()

    def scaled(self, c) -> "TrilinearOp":
        return TrilinearOp([Fraction(c) * x for x in self.coeffs], self.label)

    def expression(self) -> str:
        """Signed sum over the permutation basis, e.g. ``abc - cba``."""
        parts = []
        for c, name in zip(self.coeffs, PERMUTATION_NAMES):
            if not c:
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(("- " if c < 0 else "+ ") + mag + name)
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def __str__(self) -> str:
        return self.label or self.expression()


def to_matrix_form(op: TrilinearOp) -> MatrixForm:
    y = [sum((M_INV[i][j] * op.coeffs[j] for j in range(6)), Fraction(0)) for i in range(6)]
    return MatrixForm.from_vector(y)


def from_matrix_form(y: MatrixForm, label: Optional[str] = None) -> TrilinearOp:
    v = y.as_vector()
    return TrilinearOp([sum((M[i][j] * v[j] for j in range(6)), Fraction(0)) for i in range(6)], label)


def equivalent(op1: TrilinearOp, op2: TrilinearOp) -> bool:
    return op1.canonical() == op2.canonical()


def apply(op: TrilinearOp, a, b, c, mul: Callable, add: Callable = operator.add,
          scale: Callable = operator.mul):
    """Evaluate ``sum x_sigma * (arg_sigma(1) arg_sigma(2) arg_sigma(3))`` with the given product."""
    args = (a, b, c)
    total = None
    for x, (i, j, k) in zip(op.coeffs, PERMUTATIONS):
        if not x:
            continue
        term = scale(x, mul(mul(args[i], args[j]), args[k]))
        total = term if total is None else add(total, term)
    if total is None:
        # all-zero operation: still route through the product to get a zero of the right type
        return scale(Fraction(0), mul(mul(a, b), c))
    return total


# -- catalog -----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    q: Optional[str]
    expression: str
    op: TrilinearOp
    alternatives: tuple[tuple[str, TrilinearOp], ...] = ()

    def all_forms(self) -> list[TrilinearOp]:
        return [self.op] + [alt for _, alt in self.alternatives]


@lru_cache(maxsize=1)
def _load_catalog() -> tuple[CatalogEntry, ...]:
    raw = json.loads(resources.files("tripenv").joinpath("data/catalog.json").read_text(encoding="utf-8"))
    entries = []
    for item in raw["operations"]:
        alts = tuple((a["expression"], TrilinearOp(a["coeffs"], item["name"]))
                     for a in item.get("alternatives", ()))
        entries.append(CatalogEntry(item["name"], item["family"], item["q"], item["expression"],
                                    TrilinearOp(item["coeffs"], item["name"]), alts))
    return tuple(entries)


def catalog() -> list[CatalogEntry]:
    return list(_load_catalog())


def catalog_names() -> list[str]:
    return [e.name for e in _load_catalog()]


def lookup(name: str) -> CatalogEntry:
    for e in _load_catalog():
        if e.name == name:
            return e
    # short forms such as "alternating" for "alternating-sum"
    for e in _load_catalog():
        if e.name == f"{name}-sum":
            return e
    raise KeyError(f"unknown operation {name!r}; known: {', '.join(catalog_names())}")


def resolve(selector: str) -> TrilinearOp:
    """Catalog name or six comma-separated rationals."""
    if "," in selector:
        return TrilinearOp(parse_coeffs(selector))
    return lookup(selector).op


# -- coefficient searches ----------------------------------------------------


@dataclass
class SearchResult:
    values: tuple[int, ...]
    total: int
    classes: dict[tuple, list[tuple[Fraction, ...]]]
    hits: dict[str, tuple[Fraction, ...]]  # catalog name -> first representative found
    class_sizes: dict[str, int]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def missing(self) -> list[str]:
        return [n for n in catalog_names() if n not in self.hits]


def search(bound: int) -> SearchResult:
    """Enumerate ``[1, x2..x6]`` with entries in ``-bound..bound`` and group by matrix-form class."""
    if bound < 1:
        raise UsageError("search bound must be at least 1")
    values = tuple(sorted(range(-bound, bound + 1), key=lambda v: (abs(v), -v)))
    classes: dict[tuple, list[tuple[Fraction, ...]]] = {}
    for tail in itertools.product(values, repeat=5):
        x = _vec((1,) + tail)
        key = TrilinearOp(x).canonical()
        classes.setdefault(key, []).append(x)
    hits: dict[str, tuple[Fraction, ...]] = {}
    sizes: dict[str, int] = {}
    for entry in _load_catalog():
        key = entry.op.canonical()
        if key in classes:
            hits[entry.name] = classes[key][0]
            sizes[entry.name] = len(classes[key])
    return SearchResult(values, len(values) ** 5, classes, hits, sizes)
