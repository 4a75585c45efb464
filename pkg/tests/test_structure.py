import random
from fractions import Fraction

import pytest

from tripenv import linalg
from tripenv import structure as S
from tripenv.envelope import build_envelope
from tripenv.tripleops import lookup


def table(name):
    return build_envelope(lookup(name).op).table


def vec(T, text):
    """Coordinates of a combination like ``a - aba`` over the table labels."""
    from tripenv.freealg import AB
    f = AB.parse(text)
    idx = {l: i for i, l in enumerate(T.labels)}
    v = [Fraction(0)] * T.dim
    for w, c in f.items():
        v[idx[AB.render_word(w)]] = c
    return v


def q_plus_m2(scramble_seed=None):
    # basis: s, E11, E12, E21, E22
    n = 5
    def mul(i, j):
        v = [Fraction(0)] * n
        if i == 0 and j == 0:
            v[0] = Fraction(1)
        elif i and j:
            a, b = divmod(i - 1, 2)
            c, d = divmod(j - 1, 2)
            if b == c:
                v[1 + 2 * a + d] = Fraction(1)
        return v
    T = S.table_from_function(["s", "E11", "E12", "E21", "E22"], mul, [1, 1, 0, 0, 1])
    if scramble_seed is None:
        return T
    rng = random.Random(scramble_seed)
    while True:
        P = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(P, n) == n:
            break
    # new basis vectors are the rows of P, expressed in the old basis
    def coords(x):
        return linalg.solve_combination(x, P)
    prod = [[coords(T.mul(P[i], P[j])) for j in range(n)] for i in range(n)]
    return S.AlgebraTable([f"c{i}" for i in range(n)], prod, coords(T.unit))


def test_radical_examples():
    assert S.radical(table("jordan-inf")) == []
    T = table("jordan-0")
    assert S.radical(T) == linalg.span_basis([vec(T, t) for t in ("a - aba", "aa", "bb", "abb")], T.dim)
    T = table("jordan-1")
    assert linalg.same_span(S.radical(T), [vec(T, t) for t in ("b - bab", "aa", "bb", "aab")], T.dim)


def test_radical_properties():
    for name in ("jordan-0", "jordan-1"):
        T = table(name)
        R = S.radical(T)
        assert S.is_two_sided_ideal(T, R)
        assert S.nilpotency_index(T, R) is not None
        assert S.radical(S.quotient(T, R)) == []


def test_quotient_examples():
    T = table("jordan-0")
    Q = S.quotient(T, S.radical(T))
    assert Q.labels == ["1", "b", "ab", "ba", "aba"]
    assert Q.is_associative() and Q.has_unit()
    T1 = table("jordan-1")
    qm = S.quotient_map(T1, S.radical(T1))
    assert qm.table.labels == ["1", "a", "ab", "ba", "bab"]
    assert qm.project(vec(T1, "b")) == qm.project(vec(T1, "bab"))
    J = table("jordan-inf")
    assert S.quotient(J, []).product == J.product
    with pytest.raises(S.NotAnIdealError):
        S.quotient(J, [vec(J, "a")])


def test_center_examples():
    J = table("jordan-inf")
    assert [J.render(v) for v in S.center(J)] == ["1", "ab + ba"]
    M2 = S.table_from_function(["E11", "E12", "E21", "E22"],
                               lambda i, j: q_plus_m2().product[i + 1][j + 1][1:], [1, 0, 0, 1])
    assert S.center(M2) == [[1, 0, 0, 1]]
    comm = S.table_from_function(["1", "x"], lambda i, j: [1, 0] if i == j == 0 else [0, 1] if i + j == 1 else [0, 0], [1, 0])
    assert len(S.center(comm)) == 2


def test_idempotents_jordan_inf():
    J = table("jordan-inf")
    es = S.split_idempotents(J, S.center(J))
    assert [J.render(e) for e in es] == ["1 - ab - ba", "ab + ba"]
    check_idempotent_system(J, es)


def check_idempotent_system(T, es):
    n = T.dim
    total = [Fraction(0)] * n
    for i, e in enumerate(es):
        assert T.mul(e, e) == e
        for j, f in enumerate(es):
            if i != j:
                assert not any(T.mul(e, f))
        for k in range(n):
            assert T.mul(e, T.basis(k)) == T.mul(T.basis(k), e)
        total = [x + y for x, y in zip(total, e)]
    assert total == T.unit


def test_unsupported_field():
    # Q[t]/(t^2 - 2)
    T = S.table_from_function(["1", "t"], lambda i, j: [[1, 0], [0, 1], [0, 1], [2, 0]][2 * i + j], [1, 0])
    with pytest.raises(S.UnsupportedFieldError):
        S.split_idempotents(T, S.center(T))
    with pytest.raises(S.UnsupportedFieldError):
        S.decompose(T)


def test_decompose_catalog_tables():
    for name, rad in (("jordan-inf", 0), ("jordan-0", 4), ("jordan-1", 4)):
        rep = S.decompose(table(name))
        assert len(rep.radical) == rad
        assert rep.component_dims == [1, 4]
        assert rep.irrep_dims == [1, 2]
        assert sum(rep.component_dims) == rep.quotient.dim
        check_idempotent_system(rep.quotient, rep.idempotents)
        units = rep.components[1].matrix_units
        assert S.verify_matrix_units(rep.quotient, units, rep.components[1].idempotent)


@pytest.mark.parametrize("seed", [None, 1, 2, 3])
def test_decompose_scrambled_q_plus_m2(seed):
    T = q_plus_m2(seed)
    assert T.is_associative() and T.has_unit()
    rep = S.decompose(T)
    assert sorted(rep.component_dims) == [1, 4]
    assert sorted(c.identification for c in rep.components) == ["2x2-matrix-algebra", "ground-field"]


def test_one_dimensional_algebra():
    T = S.table_from_function(["1"], lambda i, j: [1], [1])
    rep = S.decompose(T)
    assert rep.component_dims == [1] and rep.summary() == "Q"
