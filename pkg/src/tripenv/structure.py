"""Structure theory of finite-dimensional associative algebras over Q.

An algebra is given by structure constants on a basis. The decomposition
pipeline: radical (kernel of the trace form), semisimple quotient, center,
primitive central idempotents by splitting minimal polynomials, and simple
components identified by dimension and by the presence of a non-central
idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from . import linalg
from .freealg import format_fraction

Vector = list[Fraction]


class NotAnIdealError(ValueError):
    pass


class UnsupportedFieldError(ValueError):
    """A minimal polynomial does not split into distinct rational linear factors."""


def _zero(n: int) -> Vector:
    return [Fraction(0)] * n


def _basis_vector(n: int, i: int) -> Vector:
    v = _zero(n)
    v[i] = Fraction(1)
    return v


def _add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return [a + b for a, b in zip(x, y)]


def _sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    return [a - b for a, b in zip(x, y)]


def _scale(c, x: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return [c * a for a in x]


@dataclass
class AlgebraTable:
    """Structure constants: ``product[i][j]`` is the coordinate vector of ``b_i * b_j``."""

    labels: list[str]
    product: list[list[Vector]]
    unit: Vector

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis(self, i: int) -> Vector:
        return _basis_vector(self.dim, i)

    def mul(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = _zero(n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.product[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in enumerate(row[j]):
                    if v:
                        out[k] += c * v
        return out

    def left_matrix(self, x: Sequence[Fraction]) -> list[Vector]:
        """Matrix of ``y -> x*y``; column ``j`` is ``x * b_j``."""
        cols = [self.mul(x, self.basis(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def is_associative(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.product[i][j]
                for k in range(n):
                    if self.mul(ij, self.basis(k)) != self.mul(self.basis(i), self.product[j][k]):
                        return False
        return True

    def has_unit(self) -> bool:
        return all(self.mul(self.unit, self.basis(i)) == self.basis(i) ==
                   self.mul(self.basis(i), self.unit) for i in range(self.dim))

    def render(self, x: Sequence[Fraction]) -> str:
        parts = []
        for label, c in zip(self.labels, x):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = label if mag == 1 else f"{format_fraction(mag)}*{label}"
            parts.append(f"{sign} {body}")
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+") else "-" + s[2:]

    def to_dict(self) -> dict:
        return {
            "labels": self.labels,
            "unit": [format_fraction(c) for c in self.unit],
            "product": [[[format_fraction(c) for c in v] for v in row] for row in self.product],
        }


def table_from_function(labels: list[str], mul_basis, unit: Vector) -> AlgebraTable:
    n = len(labels)
    return AlgebraTable(labels, [[list(mul_basis(i, j)) for j in range(n)] for i in range(n)], list(unit))


# -- radical / quotient ------------------------------------------------------


def trace_form(T: AlgebraTable) -> list[Vector]:
    mats = [T.left_matrix(T.basis(i)) for i in range(T.dim)]
    return [[linalg.trace(linalg.matmul(mats[i], mats[j])) for j in range(T.dim)] for i in range(T.dim)]


def radical(T: AlgebraTable) -> list[Vector]:
    """Radical as the kernel of ``(x, y) -> trace(L_x L_y)``, returned in RREF."""
    return linalg.span_basis(linalg.nullspace(trace_form(T), T.dim), T.dim)


def is_two_sided_ideal(T: AlgebraTable, vectors: Sequence[Vector]) -> bool:
    basis = list(vectors)
    for v in basis:
        for i in range(T.dim):
            b = T.basis(i)
            if not linalg.in_span(T.mul(b, v), basis, T.dim) or not linalg.in_span(T.mul(v, b), basis, T.dim):
                return False
    return True


def nilpotency_index(T: AlgebraTable, ideal: Sequence[Vector]) -> Optional[int]:
    """Smallest ``k`` with ``ideal^k == 0`` (at most ``dim + 1``), or None."""
    if not ideal:
        return 1
    power = list(ideal)
    for k in range(1, T.dim + 2):
        if not power:
            return k
        prods = [T.mul(x, y) for x in power for y in ideal]
        power = linalg.span_basis(prods, T.dim)
    return None


@dataclass
class QuotientMap:
    table: AlgebraTable
    complement: tuple[int, ...]
    ideal_rref: list[Vector]
    pivots: tuple[int, ...]

    def project(self, x: Sequence[Fraction]) -> Vector:
        v = list(x)
        for row, p in zip(self.ideal_rref, self.pivots):
            if v[p]:
                v = _sub(v, _scale(v[p], row))
        return [v[i] for i in self.complement]

    def lift(self, y: Sequence[Fraction], dim: int) -> Vector:
        out = _zero(dim)
        for c, i in zip(y, self.complement):
            out[i] = c
        return out


def quotient_map(T: AlgebraTable, ideal: Sequence[Vector]) -> QuotientMap:
    if not is_two_sided_ideal(T, ideal):
        raise NotAnIdealError("vectors do not span a two-sided ideal")
    rows, pivots = linalg.rref(ideal, T.dim) if ideal else ([], ())
    complement = tuple(i for i in range(T.dim) if i not in pivots)
    qm = QuotientMap(None, complement, rows, pivots)  # type: ignore[arg-type]
    labels = [T.labels[i] for i in complement]
    product = [[qm.project(T.product[i][j]) for j in complement] for i in complement]
    qm.table = AlgebraTable(labels, product, qm.project(T.unit))
    return qm


def quotient(T: AlgebraTable, ideal: Sequence[Vector]) -> AlgebraTable:
    """Structure constants on the cosets of the basis elements outside the ideal's pivots."""
    return quotient_map(T, ideal).table


# -- center / idempotents ----------------------------------------------------


def center(T: AlgebraTable) -> list[Vector]:
    n = T.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([T.product[i][j][k] - T.product[j][i][k] for i in range(n)])
    return linalg.span_basis(linalg.nullspace(rows, n), n)


def minimal_polynomial(T: AlgebraTable, x: Sequence[Fraction], unit: Optional[Vector] = None) -> list[Fraction]:
    """Monic minimal polynomial of ``x`` (coefficients low degree first) relative to ``unit``."""
    e = list(unit) if unit is not None else T.unit
    powers = [e]
    while True:
        nxt = T.mul(powers[-1], x)
        coeffs = linalg.solve_combination(nxt, powers)
        if coeffs is not None:
            return [-c for c in coeffs] + [Fraction(1)]
        powers.append(nxt)


def rational_roots(poly: Sequence[Fraction]) -> list[Fraction]:
    """Roots of a polynomial that splits into distinct rational linear factors, ascending."""
    t = sympy.Symbol("t")
    p = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in poly])), t, domain="QQ")
    _, factors = p.factor_list()
    roots = []
    for fac, mult in factors:
        if fac.degree() != 1 or mult != 1:
            raise UnsupportedFieldError(f"minimal polynomial {p.as_expr()} does not split into distinct rational roots")
        a, b = fac.all_coeffs()
        r = -b / a
        roots.append(Fraction(int(r.p), int(r.q)))
    return sorted(roots)


def _eigen_idempotents(T: AlgebraTable, x: Vector, e: Vector) -> list[Vector]:
    roots = rational_roots(minimal_polynomial(T, x, e))
    if len(roots) == 1:
        return [e]
    out = []
    for r in roots:
        acc = e
        for s in roots:
            if s != r:
                acc = _scale(1 / (r - s), T.mul(acc, _sub(x, _scale(s, e))))
        out.append(acc)
    return out


def split_idempotents(T: AlgebraTable, center_basis: Sequence[Vector]) -> list[Vector]:
    """Primitive central idempotents of a semisimple table with split center."""
    idems = [T.unit]
    for z in center_basis:
        if len(idems) == len(center_basis):
            break
        nxt = []
        for e in idems:
            nxt.extend(_eigen_idempotents(T, T.mul(z, e), e))
        idems = nxt
    return idems


# -- components --------------------------------------------------------------


@dataclass
class Component:
    idempotent: Vector
    basis: list[Vector]
    identification: str
    irrep_dim: Optional[int] = None
    matrix_units: Optional[dict[str, Vector]] = None

    @property
    def dim(self) -> int:
        return len(self.basis)


def _sub_table(T: AlgebraTable, basis: list[Vector]) -> AlgebraTable:
    """Structure constants of a subalgebra with the given basis (coordinates in that basis)."""
    labels = [f"c{i}" for i in range(len(basis))]

    def coords(v):
        c = linalg.solve_combination(v, basis)
        assert c is not None, "subspace is not closed under multiplication"
        return c

    product = [[coords(T.mul(x, y)) for y in basis] for x in basis]
    return AlgebraTable(labels, product, _zero(len(basis)))


def _find_nontrivial_idempotent(T: AlgebraTable, e: Vector, basis: list[Vector]) -> Optional[Vector]:
    # deterministic seeds: basis elements, then pairwise sums
    seeds = list(basis) + [_add(x, y) for i, x in enumerate(basis) for y in basis[i + 1:]]
    for x in seeds:
        try:
            parts = _eigen_idempotents(T, x, e)
        except UnsupportedFieldError:
            continue
        for f in parts:
            if f != e and any(f):
                return f
    return None


def matrix_units(T: AlgebraTable, e: Vector, f: Vector, basis: list[Vector]) -> Optional[dict[str, Vector]]:
    """Matrix-unit system for a 4-dimensional component from a non-central idempotent ``f``."""
    g = _sub(e, f)
    e12 = next((v for v in (T.mul(T.mul(f, b), g) for b in basis) if any(v)), None)
    y0 = next((v for v in (T.mul(T.mul(g, b), f) for b in basis) if any(v)), None)
    if e12 is None or y0 is None:
        return None
    lam = linalg.solve_combination(T.mul(e12, y0), [f])
    if lam is None or not lam[0]:
        return None
    e21 = _scale(1 / lam[0], y0)
    units = {"E11": f, "E12": e12, "E21": e21, "E22": g}
    return units if verify_matrix_units(T, units, e) else None


def verify_matrix_units(T: AlgebraTable, units: dict[str, Vector], e: Vector) -> bool:
    n = T.dim
    for a in "12":
        for b in "12":
            for c in "12":
                for d in "12":
                    lhs = T.mul(units[f"E{a}{b}"], units[f"E{c}{d}"])
                    rhs = units[f"E{a}{d}"] if b == c else _zero(n)
                    if lhs != rhs:
                        return False
    return _add(units["E11"], units["E22"]) == list(e)


def identify_component(T: AlgebraTable, e: Vector) -> Component:
    basis = linalg.span_basis([T.mul(e, T.basis(j)) for j in range(T.dim)], T.dim)
    d = len(basis)
    if d == 1:
        return Component(e, basis, "ground-field", 1)
    if d == 4:
        f = _find_nontrivial_idempotent(T, e, basis)
        if f is not None:
            units = matrix_units(T, e, f, basis)
            if units is not None:
                return Component(e, basis, "2x2-matrix-algebra", 2, units)
    return Component(e, basis, f"unidentified-simple({d})")


@dataclass
class WedderburnReport:
    dim: int
    radical: list[Vector]
    radical_nilpotency: Optional[int]
    radical_table: list[list[Vector]]
    quotient: AlgebraTable
    quotient_complement: tuple[int, ...]
    center: list[Vector]
    idempotents: list[Vector]
    components: list[Component] = field(default_factory=list)

    @property
    def component_dims(self) -> list[int]:
        return [c.dim for c in self.components]

    @property
    def irrep_dims(self) -> list[Optional[int]]:
        return [c.irrep_dim for c in self.components]

    def summary(self) -> str:
        names = {"ground-field": "Q", "2x2-matrix-algebra": "M2(Q)"}
        parts = [names.get(c.identification, c.identification) for c in self.components]
        s = " + ".join(parts)
        if self.radical:
            s = f"R({len(self.radical)}) + " + s
        return s

    def to_dict(self, labels: Optional[list[str]] = None) -> dict:
        fv = lambda v: [format_fraction(c) for c in v]
        return {
            "dimension": self.dim,
            "basis_labels": labels,
            "radical": [fv(v) for v in self.radical],
            "radical_nilpotency": self.radical_nilpotency,
            "radical_table": [[fv(v) for v in row] for row in self.radical_table],
            "quotient": self.quotient.to_dict(),
            "center": [fv(v) for v in self.center],
            "idempotents": [fv(v) for v in self.idempotents],
            "components": [
                {
                    "dimension": c.dim,
                    "identification": c.identification,
                    "irreducible_dimension": c.irrep_dim,
                    "idempotent": fv(c.idempotent),
                    "matrix_units": {k: fv(v) for k, v in sorted(c.matrix_units.items())} if c.matrix_units else None,
                }
                for c in self.components
            ],
            "summary": self.summary(),
        }


def decompose(T: AlgebraTable) -> WedderburnReport:
    rad = radical(T)
    qm = quotient_map(T, rad)
    Q = qm.table
    if radical(Q):
        raise ArithmeticError("quotient by the trace-form radical is not semisimple")
    rad_table = []
    for x in rad:
        rad_table.append([linalg.solve_combination(T.mul(x, y), rad) for y in rad])
    Z = center(Q)
    idems = split_idempotents(Q, Z)
    comps = [identify_component(Q, e) for e in idems]
    return WedderburnReport(T.dim, rad, nilpotency_index(T, rad), rad_table, Q, qm.complement, Z, idems, comps)
