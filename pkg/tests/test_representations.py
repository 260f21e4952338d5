import itertools

import pytest
from hypothesis import given, strategies as st

from braidkit.catalog import catalog_build
from braidkit.representations import (
    FreeGroupEndo, IntegerMatrix, MonomialMatrix, Permutation, RankMismatch, UnsupportedParams, artin_action,
    closure, coxeter_reflection_image, endo_equal, monomial_generators, monomial_image, perm_image,
    reflection_generators,
)
from braidkit.words import Alphabet, UnknownGenerator, Word

from strategies import braid_words


def canon(n, extra=()):
    return catalog_build("artin_canonical", n=n).alphabet if not extra else Alphabet(
        [f"s{i}" for i in range(1, n)] + list(extra))


def test_artin_action_examples():
    a = canon(3)
    assert str(artin_action(a.word("s1"), 3)) == "x1 -> x2, x2 -> x2^-1 x1 x2, x3 -> x3"
    bp = catalog_build("bp_canonical", n=3).alphabet
    assert str(artin_action(bp.word("xi1"), 3)) == "x1 -> x2, x2 -> x1, x3 -> x3"
    assert artin_action(a.word("s1 s1^-1"), 3) == FreeGroupEndo.identity(3)


def test_endo_equal_examples():
    a = canon(3)
    act = lambda t: artin_action(a.word(t), 3)
    assert endo_equal(act("s1 s2 s1"), act("s2 s1 s2"))
    assert not endo_equal(act("s1 s2"), act("s2 s1"))
    assert endo_equal(FreeGroupEndo.identity(3), FreeGroupEndo.identity(3))
    with pytest.raises(RankMismatch):
        endo_equal(FreeGroupEndo.identity(3), FreeGroupEndo.identity(4))


def test_left_to_right_convention():
    # s1 then s2: x1 -> x2 -> x3
    a = canon(3)
    e = artin_action(a.word("s1 s2"), 3)
    assert e.format_image(0) == "x3"
    assert artin_action(a.word("s1"), 3).then(artin_action(a.word("s2"), 3)) == e


@given(braid_words(5, 8), braid_words(5, 8))
def test_artin_action_is_homomorphism(u, v):
    assert artin_action(u * v, 5) == artin_action(u, 5).then(artin_action(v, 5))


@pytest.mark.parametrize("n", range(3, 9))
def test_canonical_relations_hold_in_aut_fn(n):
    for family in ("artin_canonical", "bp_canonical"):
        p = catalog_build(family, n=n)
        for lhs, rhs in p.relations:
            assert endo_equal(artin_action(lhs, n), artin_action(rhs, n)), (family, str(lhs), str(rhs))


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        artin_action(Alphabet(["q"]).word("q"), 3)


def test_perm_image_examples():
    a = canon(3)
    assert perm_image(a.word("s1"), 3) == Permutation.transposition(3, 1, 2)
    sigma = perm_image(Alphabet(["s1", "s"]).word("s"), 3)
    assert str(sigma) == "[2 3 1]"
    assert sigma(1) == 2 and sigma(2) == 3 and sigma(3) == 1
    d = catalog_build("sphere_canonical", n=3).alphabet
    assert perm_image(d.word("d1 d2 d2 d1"), 3).is_identity()


def test_monomial_examples():
    tau = monomial_image(Alphabet(["s1", "s", "t"]).word("t"), "complex_d_1_n", d=2, n=2)
    assert tau.perm.is_identity() and tau.exps == (1, 0) and tau.modulus == 2
    gens = monomial_generators("complex_2e_e_r", d=2, e=2, r=3)
    assert gens["t2"].exps == (0, 0, 0) and not gens["t2"].perm.is_identity()
    alpha = Alphabet(["t2", "t", "s", "t2p"])
    m = monomial_image(alpha.word("t2p t2"), "complex_2e_e_r", d=2, e=2, r=2)
    assert m.perm.is_identity() and m.exps == (1, 3) and m.modulus == 4


def _complex_params():
    for d, e, r in itertools.product(range(2, 5), range(2, 5), range(2, 5)):
        yield "complex_2e_e_r", dict(d=d, e=e, r=r)
    for e, r in itertools.product(range(2, 5), range(3, 5)):
        yield "complex_e_e_r", dict(e=e, r=r)
    for d, n in itertools.product(range(2, 5), range(2, 5)):
        yield "complex_d_1_n", dict(d=d, n=n)


@pytest.mark.parametrize("family,params", list(_complex_params()), ids=str)
def test_monomial_model_satisfies_relations(family, params):
    p = catalog_build(family, params, torsion=True)
    for lhs, rhs in p.relations:
        assert monomial_image(lhs, family, **params) == monomial_image(rhs, family, **params), (str(lhs), str(rhs))


@pytest.mark.parametrize("family,params,order", [
    ("complex_d_1_n", dict(d=2, n=3), 48),
    ("complex_d_1_n", dict(d=3, n=2), 18),
    ("complex_2e_e_r", dict(d=2, e=2, r=2), 16),
    ("complex_e_e_r", dict(e=3, r=3), 54),
    ("complex_2e_e_r", dict(d=3, e=2, r=2), 36),
])
def test_monomial_generators_generate_the_reflection_group(family, params, order):
    # |G(de, e, r)| = (de)^r r! / e
    gens = monomial_generators(family, **params)
    some = next(iter(gens.values()))
    group = closure(gens.values(), MonomialMatrix.identity(some.size, some.modulus))
    assert len(group) == order


def test_perm_image_is_permutation_part_of_monomial():
    alpha = Alphabet(["s1", "s", "t"])
    for text in ("s1 s", "s^2 t s1^-1", "t s s1 s^-1"):
        w = alpha.word(text)
        assert perm_image(w, 3, {"t": Permutation.identity(3)}) == monomial_image(w, "complex_d_1_n", d=3, n=3).perm


@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)),
       st.lists(st.integers(0, 5), min_size=4, max_size=4), st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_monomial_product_matches_dense(p, q, a, b):
    A, B = MonomialMatrix(6, Permutation(tuple(p)), tuple(a)), MonomialMatrix(6, Permutation(tuple(q)), tuple(b))

    def mul(x, y):
        # dense product over exponents: entries None (zero) or exponent mod 6
        n = len(x)
        out = [[None] * n for _ in range(n)]
        for i, j, k in itertools.product(range(n), repeat=3):
            if x[i][k] is not None and y[k][j] is not None:
                out[i][j] = (x[i][k] + y[k][j]) % 6
        return out
    assert (A @ B).dense() == mul(A.dense(), B.dense())
    assert (A @ A.inverse()).is_identity()


def test_monomial_errors():
    with pytest.raises(UnsupportedParams):
        monomial_generators("typeB_reduced", n=3)
    with pytest.raises(UnsupportedParams):
        monomial_generators("complex_e_e_r", e=2, r=2)


def test_reflections_are_involutions():
    for kind, n in (("B", 3), ("B", 5), ("D", 4), ("E8", 8)):
        for name, g in reflection_generators(kind, n).items():
            if name != "s":
                assert (g @ g).is_identity()


def test_coxeter_examples():
    b3 = Alphabet(["s1", "s2", "t"])
    assert coxeter_reflection_image(b3.word("s1 t s1 t s1 t s1 t"), "B", 3).is_identity()
    assert not coxeter_reflection_image(b3.word("s1 t s1 t"), "B", 3).is_identity()
    e8 = catalog_build("typeE8_reduced").alphabet
    e8c = Alphabet([f"s{i}" for i in range(1, 8)] + ["w"])
    for i in range(1, 7):
        w = e8c.word(f"s{i} s{i + 1} s{i} s{i + 1}^-1 s{i}^-1 s{i + 1}^-1")
        assert coxeter_reflection_image(w, "E8").is_identity()
    assert coxeter_reflection_image(e8.word("s s^-1"), "E8").is_identity()


@pytest.mark.parametrize("family,kind,n", [("typeB_canonical", "B", 3), ("typeB_canonical", "B", 5),
                                           ("typeD_canonical", "D", 4), ("typeD_canonical", "D", 6)])
def test_coxeter_relations_hold(family, kind, n):
    for lhs, rhs in catalog_build(family, n=n, torsion=True).relations:
        assert coxeter_reflection_image(lhs, kind, n) == coxeter_reflection_image(rhs, kind, n)


@pytest.mark.parametrize("kind,n,order", [("B", 3, 48), ("B", 4, 384), ("D", 4, 192)])
def test_reflection_group_orders(kind, n, order):
    gens = [g for name, g in reflection_generators(kind, n).items() if name != "s"]
    assert len(closure(gens, IntegerMatrix.identity(n))) == order


def test_integer_matrix():
    m = IntegerMatrix.of([[1, 2], [3, 4]])
    assert (m @ IntegerMatrix.identity(2)) == m
    assert m.shape == (2, 2)
    with pytest.raises(ValueError):
        IntegerMatrix.of([])
