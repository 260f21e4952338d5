import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from braidkit.abelian import InvariantFactors, abelianization, invariant_factors, relation_matrix, smith_normal_form
from braidkit.catalog import catalog_build
from braidkit.presentation import MonoidPresentation, parse_dsl
from braidkit.representations import IntegerMatrix


def test_relation_matrix_examples():
    assert relation_matrix(parse_dsl("presentation c\nkind group\ngen a\nrel a^3 =")).rows == ((3,),)
    m = relation_matrix(catalog_build("artin_two_gen", n=4))
    assert m.rows[-1] == (-3, 1)
    assert relation_matrix(parse_dsl("presentation c\nkind group\ngen a\nrel a = a")).rows == ((0,),)
    with pytest.raises(MonoidPresentation):
        relation_matrix(catalog_build("singular_two_gen", n=3))


def test_smith_examples():
    assert smith_normal_form(IntegerMatrix.of([[3]])) == [3]
    assert smith_normal_form(IntegerMatrix.of([[2, 4], [6, 8]])) == [2, 4]
    assert smith_normal_form(IntegerMatrix.of([[0, 0, 0], [0, 0, 0]])) == [0, 0]


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def _minor_gcd(m, k):
    g = 0
    for rows in itertools.combinations(range(len(m)), k):
        for cols in itertools.combinations(range(len(m[0])), k):
            g = math.gcd(g, _det([[m[i][j] for j in cols] for i in rows]))
    return g


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_smith_against_minor_gcds(rows):
    diag = smith_normal_form(IntegerMatrix.of(rows))
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert diag == nonzero + [0] * (len(diag) - len(nonzero))
    prev = 1
    for k, d in enumerate(diag, 1):
        dk = _minor_gcd(rows, k)
        assert d == (dk // prev if dk else 0)
        if not dk:
            break
        prev = dk


def test_smith_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    rng = random.Random(3)
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-30, 30) for _ in range(c)] for _ in range(r)]
        ref = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        want = sorted(abs(ref[i, i]) for i in range(min(r, c)))
        assert sorted(smith_normal_form(IntegerMatrix.of(rows))) == want


def test_big_entries_are_exact():
    m = IntegerMatrix.of([[10**30, 3], [7, 10**25 + 1]])
    d = smith_normal_form(m)
    assert d[0] * d[1] == abs(10**30 * (10**25 + 1) - 21)


def test_invariant_factors_type():
    assert str(InvariantFactors((2, 4), 1)) == "Z^1 x Z/2 x Z/4"
    assert str(InvariantFactors((), 0)) == "1"
    for bad in (((2, 3), 0), ((1,), 0), ((), -1)):
        with pytest.raises(ValueError):
            InvariantFactors(*bad)
    assert invariant_factors(IntegerMatrix.of([[2, 0], [0, 3]])) == InvariantFactors((6,), 0)


@pytest.mark.parametrize("n", range(3, 9))
def test_braid_and_sphere(n):
    # exponent sums: s = (n-1) s1 leaves one free generator
    assert abelianization(catalog_build("artin_two_gen", n=n)) == InvariantFactors((), 1)
    assert abelianization(catalog_build("artin_canonical", n=n)) == InvariantFactors((), 1)
    # d = (n-1) d1 and d + (n-1) d1 = 0
    assert abelianization(catalog_build("sphere_two_gen", n=n)) == InvariantFactors((2 * n - 2,), 0)
    assert abelianization(catalog_build("sphere_canonical", n=n)) == InvariantFactors((2 * n - 2,), 0)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_canonical_and_reduced_agree(n):
    for canonical, reduced in (("typeB_canonical", "typeB_reduced"), ("typeD_canonical", "typeD_reduced")):
        for torsion in (False, True):
            assert abelianization(catalog_build(canonical, n=n, torsion=torsion)) == abelianization(
                catalog_build(reduced, n=n, torsion=torsion))
    assert abelianization(catalog_build("typeB_reduced", n=n)) == InvariantFactors((), 2)
    assert abelianization(catalog_build("typeB_reduced", n=n, torsion=True)) == InvariantFactors((2, 2), 0)
    assert abelianization(catalog_build("typeD_reduced", n=n, torsion=True)) == InvariantFactors((2,), 0)


def test_e8_and_g34():
    assert abelianization(catalog_build("typeE8_reduced")) == InvariantFactors((), 1)
    assert abelianization(catalog_build("typeE8_reduced", torsion=True)) == InvariantFactors((2,), 0)
    assert abelianization(catalog_build("br_g34", torsion=True)) == InvariantFactors((2,), 0)
    assert abelianization(catalog_build("bkl", n=5)) == InvariantFactors((), 1)
