"""Closed-form versus brute-force sweeps, each returning a :class:`SuiteResult`."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import downup, envelope, sl2pbw, tripleops
from .freealg import UsageError

WORKERS_ENV = "TRIPENV_WORKERS"
DEFAULT_BOUND = 4


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


@dataclass
class SuiteResult:
    suite: str
    cases: int = 0
    mismatches: int = 0
    first_counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.mismatches == 0

    def merge(self, other: "SuiteResult") -> None:
        self.cases += other.cases
        self.mismatches += other.mismatches
        if self.first_counterexample is None:
            self.first_counterexample = other.first_counterexample

    def record(self, ok: bool, case: dict) -> None:
        self.cases += 1
        if not ok:
            self.mismatches += 1
            if self.first_counterexample is None:
                self.first_counterexample = case

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "first_counterexample": self.first_counterexample,
            "details": self.details,
        }


# each grid sweep is split by its first coordinate so chunks can run in worker processes


def _symsum_chunk(i: int, bound: int) -> SuiteResult:
    res = SuiteResult("symsum-products")
    for k, l, n in itertools.product(range(3), repeat=3):
        for j, m in itertools.product(range(bound + 1), repeat=2):
            closed = downup.symsum_product_closed(i, j, k, l, m, n)
            brute = downup.symsum_product_bruteforce(i, j, k, l, m, n)
            res.record(closed == brute, {"exponents": [i, j, k, l, m, n],
                                         "closed": closed.to_json(), "oracle": brute.to_json()})
    return res


def _a010_chunk(i: int, bound: int) -> SuiteResult:
    res = SuiteResult("a010-products")
    for rest in itertools.product(range(bound + 1), repeat=5):
        e = (i,) + rest
        closed = downup.a010_product_closed(*e)
        brute = downup.a010_product_bruteforce(*e)
        res.record(closed == brute, {"exponents": list(e), "closed": closed.to_json(), "oracle": brute.to_json()})
    return res


def _sl2_chunk(i: int, bound: int) -> SuiteResult:
    res = SuiteResult("sl2-products")
    for rest in itertools.product(range(bound + 1), repeat=5):
        e = (i,) + rest
        closed = sl2pbw.sl2_product_closed(*e)
        brute = sl2pbw.sl2_product_bruteforce(*e)
        res.record(closed == brute, {"exponents": list(e), "closed": closed.to_json(), "oracle": brute.to_json()})
    return res


def _run_chunks(name: str, fn: Callable[[int, int], SuiteResult], firsts: range, bound: int) -> SuiteResult:
    total = SuiteResult(name)
    workers = worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, firsts, [bound] * len(firsts)))
    else:
        parts = [fn(i, bound) for i in firsts]
    for part in parts:  # map preserves order, so the first counterexample is deterministic
        total.merge(part)
    return total


def symsum_products(bound: int = DEFAULT_BOUND) -> SuiteResult:
    """All ``0 <= i, k, l, n <= 2`` and ``0 <= j, m <= bound`` in the cube quotient."""
    return _run_chunks("symsum-products", _symsum_chunk, range(3), bound)


def a010_products(bound: int = DEFAULT_BOUND) -> SuiteResult:
    return _run_chunks("a010-products", _a010_chunk, range(bound + 1), bound)


def sl2_products(bound: int = 3) -> SuiteResult:
    return _run_chunks("sl2-products", _sl2_chunk, range(bound + 1), bound)


def sl2_power_forms(bound: int = DEFAULT_BOUND) -> SuiteResult:
    res = SuiteResult("sl2-powers")
    for x, y in itertools.product(range(bound + 1), repeat=2):
        checks = {
            "e^l h^k": (sl2pbw.e_pow_h_pow(x, y), "e" * x + "h" * y),
            "h^k f^m": (sl2pbw.h_pow_f_pow(x, y), "h" * x + "f" * y),
            "e^l f^j": (sl2pbw.e_pow_f_pow(x, y), "e" * x + "f" * y),
        }
        for form, (closed, word) in checks.items():
            brute = sl2pbw.pbw_normalize(word)
            res.record(closed == brute, {"form": form, "exponents": [x, y],
                                         "closed": closed.to_json(), "oracle": brute.to_json()})
    return res


def a010_identities(bound: int = 6) -> SuiteResult:
    res = SuiteResult("a010-identities")
    for i, j in itertools.product(range(bound + 1), repeat=2):
        for name, fn in downup.HELPER_IDENTITIES.items():
            lhs, rhs = fn(i, j)
            res.record(lhs == rhs, {"identity": name, "i": i, "j": j,
                                    "product": lhs.to_json(), "closed": rhs.to_json()})
    return res


def center(max_m: int = 6) -> SuiteResult:
    res = SuiteResult("center")
    alg = downup.SYMSUM
    a, b = alg.a(), alg.b()
    zs = {m: downup.center_element(m) for m in range(2, max_m + 1)}
    for m, z in zs.items():
        res.record(not downup.commutator(z, a), {"check": "commutes with a", "m": m})
        res.record(not downup.commutator(z, b), {"check": "commutes with b", "m": m})
        res.record(alg.zeta(z) == z, {"check": "zeta-fixed", "m": m})
    for m1, m2 in itertools.combinations(zs, 2):
        res.record(not downup.commutator(zs[m1], zs[m2]), {"check": "pairwise commute", "m": [m1, m2]})
    dims = {}
    for m in range(1, max_m + 1):
        sl = downup.center_slice_bruteforce(m)
        dims[m] = len(sl) - 1
        res.record(len(sl) - 1 == max(m - 1, 0), {"check": "slice dimension beyond scalars", "m": m,
                                                  "dimension": len(sl) - 1})
        if m >= 2:
            sol = alg.element(downup.center_ansatz_solution(m))
            res.record(downup.in_span(sol, sl), {"check": "explicit solution in slice", "m": m})
            res.record(zs.get(m, downup.center_element(m)) == sol.scale(3),
                       {"check": "Z(m) is 3x the explicit solution", "m": m})
    res.details["slice_dimensions_beyond_scalars"] = dims
    return res


SYMSUM_GRADED = [1, 2, 4, 4, 5, 4, 5, 4, 5]


def symsum_growth(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("symsum-growth")
    P = envelope.build_envelope(tripleops.lookup("symmetric-sum").op)
    per, cum = envelope.graded_dims(P, max_n)
    for n, d in enumerate(per):
        expected = 1 if n == 0 else 2 if n == 1 else 4 if n == 2 or n % 2 == 1 else 5
        res.record(d == expected, {"degree": n, "dimension": d, "expected": expected})
    est = envelope.gk_estimate(cum)
    res.record(est.kind == "polynomial" and est.degree == 1, {"check": "growth degree", "estimate": str(est)})
    res.details["graded_dimensions"] = per
    res.details["growth"] = str(est)
    return res


# descriptive names plus the numbered aliases used by the command line
SUITES: dict[str, Callable[..., SuiteResult]] = {
    "symsum-products": symsum_products,
    "center": center,
    "sl2-products": sl2_products,
    "a010-products": a010_products,
    "sl2-powers": sl2_power_forms,
    "a010-identities": a010_identities,
    "symsum-growth": symsum_growth,
}

ALIASES = {
    "thm4.13": "symsum-products",
    "thm4.16": "center",
    "thm4.20": "sl2-products",
    "thm4.25": "a010-products",
    "lemma4.19": "sl2-powers",
    "lemma4.24": "a010-identities",
    "cor4.7": "symsum-growth",
}


def resolve_suite(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES) + sorted(ALIASES))}")
    return name


def run(name: str, bound: Optional[int] = None) -> SuiteResult:
    fn = SUITES[resolve_suite(name)]
    return fn() if bound is None else fn(bound)
