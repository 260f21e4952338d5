"""
Parametric builders for every presentation family.

Generator names (ASCII, usable in the word syntax):

========================  ==========================================
artin / typeB / typeD     ``s1 .. s{n-1}`` canonical, ``s1 s`` reduced
extra B / D / E8 node     ``t`` (tau), ``r`` (rho), ``w`` (omega)
sphere                    ``d1 .. d{n-1}`` canonical, ``d1 d`` reduced
singular monoid           ``s1 ..``, ``x1 ..`` (x noninvertible), ``s``
braid-permutation         ``s1 ..``, ``xi1 ..``, ``s``
band generators           ``a{t}_{s}`` for 1 <= s < t <= n
complex braid groups      ``t2 t s t2p`` (tau_2, tau, sigma, tau_2')
G_30                      ``s1 s t``
G_34                      ``s z w``
========================  ==========================================

Conjugates ``s^i s1 s^-i`` (the i+1-st canonical generator) are written
out literally; relation sides are freely reduced, so ``i = 0`` gives ``s1``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable

from .presentation import Presentation
from .words import Alphabet, BraidkitError, Generator, Word, free_reduce


class UnknownFamily(BraidkitError, KeyError):
    def __str__(self):
        return f"unknown family {self.args[0]!r}"


class UnsupportedParams(BraidkitError, ValueError):
    pass


L = tuple[tuple[str, int], ...]


def _g(name: str, k: int = 1) -> L:
    return ((name, k),)


def _cat(*parts: L) -> L:
    return tuple(itertools.chain.from_iterable(parts))


def _pow(part: L, k: int) -> L:
    if k >= 0:
        return part * k
    return tuple((n, -e) for n, e in reversed(part)) * (-k)


def _conj(base: str, i: int, inner: L) -> L:
    """``base^i inner base^-i``"""
    return _cat(_g(base, i) if i else (), inner, _g(base, -i) if i else ())


def _alternating(first: L, second: L, count: int) -> L:
    return _cat(*((first if j % 2 == 0 else second) for j in range(count)))


class _Builder:
    def __init__(self, name: str, kind: str, gens: Iterable[Generator | str], params: dict):
        self.name = name
        self.kind = kind
        self.alphabet = Alphabet(gens)
        self.params = dict(params)
        self.relations: list[tuple[Word, Word]] = []

    def rel(self, lhs: L, rhs: L = ()):
        a = free_reduce(Word(self.alphabet, tuple(lhs)))
        b = free_reduce(Word(self.alphabet, tuple(rhs)))
        self.relations.append((a, b))

    def commute(self, a: L, b: L):
        self.rel(_cat(a, b), _cat(b, a))

    def braid(self, a: L, b: L, m: int = 3):
        self.rel(_alternating(a, b, m), _alternating(b, a, m))

    def build(self) -> Presentation:
        return Presentation(self.name, self.kind, self.alphabet, tuple(self.relations), self.params)


def _chain(b: _Builder, names: list[str]):
    """Far commutations and braid relations along a linear chain of generators."""
    for i, j in itertools.combinations(range(len(names)), 2):
        if j - i > 1:
            b.commute(_g(names[i]), _g(names[j]))
    for i in range(len(names) - 1):
        b.braid(_g(names[i]), _g(names[i + 1]))


def _artin_two_gen(b: _Builder, n: int, s1: str = "s1", s: str = "s"):
    """Artin's two-generator relations on ``s1`` and ``s = s1 s2 ... s{n-1}``."""
    for i in range(2, n // 2 + 1):
        c = _conj(s, i, _g(s1))
        b.rel(_cat(_g(s1), c), _cat(c, _g(s1)))
    b.rel(_g(s, n), _pow(_cat(_g(s), _g(s1)), n - 1))


def _torsion(b: _Builder, orders: dict[str, int]):
    for name, k in orders.items():
        b.rel(_g(name, k))


def _canon(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n)]


# -- family builders -------------------------------------------------------

def _build_artin_canonical(n, torsion):
    names = _canon("s", n)
    b = _Builder(f"artin_canonical_{n}", "group", names, {"n": n})
    _chain(b, names)
    if torsion:
        _torsion(b, {g: 2 for g in names})
    return b.build()


def _build_artin_two_gen(n, torsion):
    b = _Builder(f"artin_two_gen_{n}", "group", ["s1", "s"], {"n": n})
    _artin_two_gen(b, n)
    if torsion:
        _torsion(b, {"s1": 2})
    return b.build()


def band_name(t: int, s: int) -> str:
    return f"a{t}_{s}"


def _build_bkl(n, torsion):
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    b = _Builder(f"bkl_{n}", "group", [band_name(t, s) for t, s in pairs], {"n": n})
    for (t, s), (r, q) in itertools.combinations(pairs, 2):
        if (t - r) * (t - q) * (s - r) * (s - q) > 0:
            b.commute(_g(band_name(t, s)), _g(band_name(r, q)))
    for r, s, t in itertools.combinations(range(1, n + 1), 3):
        ts, sr, tr = _g(band_name(t, s)), _g(band_name(s, r)), _g(band_name(t, r))
        b.rel(_cat(ts, sr), _cat(tr, ts))
        b.rel(_cat(tr, ts), _cat(sr, tr))
    return b.build()


def _build_sphere_canonical(n, torsion):
    names = _canon("d", n)
    b = _Builder(f"sphere_canonical_{n}", "group", names, {"n": n})
    _chain(b, names)
    up = [_g(d) for d in names[:-1]]
    b.rel(_cat(*up, _g(names[-1], 2), *reversed(up)))
    return b.build()


def _build_sphere_two_gen(n, torsion):
    b = _Builder(f"sphere_two_gen_{n}", "group", ["d1", "d"], {"n": n})
    _artin_two_gen(b, n, "d1", "d")
    b.rel(_cat(_g("d", n), _pow(_cat(_g("d1"), _g("d", -1)), n - 1)))
    return b.build()


def _build_singular_canonical(n, torsion):
    s = _canon("s", n)
    x = _canon("x", n)
    gens = [Generator(g) for g in s] + [Generator(g, False) for g in x]
    b = _Builder(f"singular_canonical_{n}", "monoid", gens, {"n": n})
    m = n - 1
    for i, j in itertools.combinations(range(m), 2):
        if j - i > 1:
            b.commute(_g(s[i]), _g(s[j]))
    for i, j in itertools.combinations(range(m), 2):
        if j - i > 1:
            b.commute(_g(x[i]), _g(x[j]))
    for i in range(m):
        for j in range(m):
            if abs(i - j) != 1:
                b.commute(_g(x[i]), _g(s[j]))
    for i in range(m - 1):
        b.braid(_g(s[i]), _g(s[i + 1]))
    for i in range(m - 1):
        b.rel(_cat(_g(s[i]), _g(s[i + 1]), _g(x[i])), _cat(_g(x[i + 1]), _g(s[i]), _g(s[i + 1])))
    for i in range(m - 1):
        b.rel(_cat(_g(s[i + 1]), _g(s[i]), _g(x[i + 1])), _cat(_g(x[i]), _g(s[i + 1]), _g(s[i])))
    return b.build()


def _build_singular_two_gen(n, torsion):
    gens = [Generator("s1"), Generator("s"), Generator("x1", False)]
    b = _Builder(f"singular_two_gen_{n}", "monoid", gens, {"n": n})
    _artin_two_gen(b, n)
    s1, s, x1 = _g("s1"), _g("s"), _g("x1")
    for i in [0, *range(2, n - 1)]:
        c = _conj("s", i, s1)
        b.commute(x1, c)
    for i in range(2, n // 2 + 1):
        c = _conj("s", i, x1)
        b.rel(_cat(x1, c), _cat(c, x1))
    b.commute(_g("s", n), x1)
    s2 = _conj("s", 1, s1)
    b.rel(_cat(x1, s2, s1), _cat(s2, s1, _conj("s", 1, x1)))
    return b.build()


def _build_bp_canonical(n, torsion):
    s = _canon("s", n)
    xi = _canon("xi", n)
    b = _Builder(f"bp_canonical_{n}", "group", s + xi, {"n": n})
    m = n - 1
    for i in range(m):
        b.rel(_g(xi[i], 2))
    _chain(b, xi)
    _chain(b, s)
    for i in range(m):
        for j in range(m):
            if abs(i - j) > 1:
                b.commute(_g(s[i]), _g(xi[j]))
    for i in range(m - 1):
        b.rel(_cat(_g(xi[i]), _g(xi[i + 1]), _g(s[i])), _cat(_g(s[i + 1]), _g(xi[i]), _g(xi[i + 1])))
    for i in range(m - 1):
        b.rel(_cat(_g(s[i]), _g(s[i + 1]), _g(xi[i])), _cat(_g(xi[i + 1]), _g(s[i]), _g(s[i + 1])))
    return b.build()


def _build_bp_reduced(n, torsion):
    b = _Builder(f"bp_reduced_{n}", "group", ["s1", "s", "xi1"], {"n": n})
    _artin_two_gen(b, n)
    s1, xi1 = _g("s1"), _g("xi1")
    for i in range(2, n - 1):
        b.commute(xi1, _conj("s", i, s1))
    for i in range(2, n - 1):
        c = _conj("s", i, xi1)
        b.rel(_cat(xi1, c), _cat(c, xi1))
    xi2 = _conj("s", 1, xi1)
    s2 = _conj("s", 1, s1)
    b.rel(_cat(xi1, xi2, s1), _cat(s2, xi1, xi2))
    b.rel(_cat(xi1, xi2, xi1), _cat(xi2, xi1, xi2))
    b.rel(_g("xi1", 2))
    return b.build()


def _build_typeB_canonical(n, torsion):
    names = _canon("s", n)
    b = _Builder(f"typeB_canonical_{n}", "group", names + ["t"], {"n": n})
    _chain(b, names)
    for g in names[1:]:
        b.commute(_g("t"), _g(g))
    b.braid(_g("t"), _g("s1"), 4)
    if torsion:
        _torsion(b, {**{g: 2 for g in names}, "t": 2})
    return b.build()


# Conjugates s^i s1 s^-i that tau commutes with in the reduced type-B
# presentation; s^i s1 s^-i is the generator s_{i+1}.
def typeB_commuting_range(n: int) -> range:
    return range(1, n - 1)


def _typeB_reduced_relations(b: _Builder, n: int, extra: str = "t", bond: int = 4):
    _artin_two_gen(b, n)
    for i in typeB_commuting_range(n):
        b.commute(_g(extra), _conj("s", i, _g("s1")))
    b.braid(_g(extra), _g("s1"), bond)


def _build_typeB_reduced(n, torsion):
    b = _Builder(f"typeB_reduced_{n}", "group", ["s1", "s", "t"], {"n": n})
    _typeB_reduced_relations(b, n)
    if torsion:
        _torsion(b, {"s1": 2, "t": 2})
    return b.build()


def _build_typeD_canonical(n, torsion):
    names = _canon("s", n)
    b = _Builder(f"typeD_canonical_{n}", "group", names + ["r"], {"n": n})
    _chain(b, names)
    for i, g in enumerate(names, 1):
        if i != 2:
            b.commute(_g("r"), _g(g))
    b.braid(_g("r"), _g("s2"))
    if torsion:
        _torsion(b, {**{g: 2 for g in names}, "r": 2})
    return b.build()


def _build_typeD_reduced(n, torsion):
    b = _Builder(f"typeD_reduced_{n}", "group", ["s1", "s", "r"], {"n": n})
    _artin_two_gen(b, n)
    r, s1 = _g("r"), _g("s1")
    for i in [0, *range(2, n - 1)]:
        b.commute(r, _conj("s", i, s1))
    b.braid(r, _conj("s", 1, s1))
    if torsion:
        _torsion(b, {"s1": 2, "r": 2})
    return b.build()


def _build_typeE8_reduced(torsion):
    b = _Builder("typeE8_reduced", "group", ["s1", "s", "w"], {"n": 8})
    s1, w = _g("s1"), _g("w")
    for i in (2, 3, 4):
        c = _conj("s", i, s1)
        b.rel(_cat(s1, c), _cat(c, s1))
    b.rel(_g("s", 8), _pow(_cat(_g("s"), s1), 7))
    for i in (0, 1, 3, 4, 5, 6):
        b.commute(w, _conj("s", i, s1))
    b.braid(w, _conj("s", 2, s1))
    if torsion:
        _torsion(b, {"s1": 2, "w": 2})
    return b.build()


def _complex_tau3() -> L:
    return _conj("t", 1, _g("t2"))


def _build_complex_2e_e_r(d, e, r, torsion):
    b = _Builder(f"complex_2e_e_r_{d}_{e}_{r}", "group", ["t2", "t", "s", "t2p"], {"d": d, "e": e, "r": r})
    _artin_two_gen(b, r, "t2", "t")
    t2, s, t2p = _g("t2"), _g("s"), _g("t2p")
    for i in range(1, r - 1):
        b.commute(s, _conj("t", i, t2))
    b.rel(_cat(s, t2p, t2), _cat(t2p, t2, s))
    if r >= 3:
        t3 = _complex_tau3()
        b.braid(t2p, t3)
        b.rel(_pow(_cat(t3, t2p, t2), 2), _pow(_cat(t2p, t2, t3), 2))
    b.rel(_cat(t2, s, _alternating(t2p, t2, e - 1)), _cat(s, _alternating(t2p, t2, e)))
    if torsion:
        _torsion(b, {"s": d, "t2": 2, "t2p": 2})
    return b.build()


def _build_complex_e_e_r(e, r, torsion):
    b = _Builder(f"complex_e_e_r_{e}_{r}", "group", ["t2", "t", "t2p"], {"e": e, "r": r})
    _artin_two_gen(b, r, "t2", "t")
    t2, t2p = _g("t2"), _g("t2p")
    t3 = _complex_tau3()
    b.braid(t2p, t3)
    b.rel(_pow(_cat(t3, t2p, t2), 2), _pow(_cat(t2p, t2, t3), 2))
    b.braid(t2, t2p, e)
    if torsion:
        _torsion(b, {"t2": 2, "t2p": 2})
    return b.build()


def _build_complex_d_1_n(d, n, torsion):
    b = _Builder(f"complex_d_1_n_{d}_{n}", "group", ["s1", "s", "t"], {"d": d, "n": n})
    _typeB_reduced_relations(b, n)
    if torsion:
        _torsion(b, {"s1": 2, "t": d})
    return b.build()


def g30_commuting_range() -> tuple[int, ...]:
    return (2, 3)


def _build_br_g30(torsion):
    b = _Builder("br_g30", "group", ["s1", "s", "t"], {"n": 4})
    _artin_two_gen(b, 4)
    for i in g30_commuting_range():
        b.commute(_g("t"), _conj("s", i, _g("s1")))
    b.braid(_g("t"), _g("s1"), 5)
    if torsion:
        _torsion(b, {"s1": 2, "t": 2})
    return b.build()


def _build_br_g34(torsion):
    b = _Builder("br_g34", "group", ["s", "z", "w"], {"n": 6})
    s, w = _g("s"), _g("w")
    for i in (2, 3):
        c = _conj("z", i, s)
        b.rel(_cat(s, c), _cat(c, s))
    b.rel(_g("z", 6), _pow(_cat(_g("z"), s), 5))
    for i in (0, 3, 4):
        b.commute(w, _conj("z", i, s))
    for i in (1, 2):
        b.braid(w, _conj("z", i, s))
    u, t = _conj("z", 2, s), _conj("z", 1, s)
    b.rel(_cat(w, u, w, t, w, u), _cat(t, w, u, w, t, w))
    if torsion:
        _torsion(b, {"s": 2, "w": 2})
    return b.build()


def _build_cubic_quotient(n):
    b = _Builder(f"g{25 if n == 4 else 32}_quotient", "group", ["s1", "s"], {"n": n})
    _artin_two_gen(b, n)
    _torsion(b, {"s1": 3})
    return b.build()


# -- public API ------------------------------------------------------------

def _need(params: dict, key: str, lo: int) -> int:
    if key not in params:
        raise UnsupportedParams(f"missing parameter {key}")
    v = params[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < lo:
        raise UnsupportedParams(f"parameter {key}={v!r} must be an integer >= {lo}")
    return v


_NO_TORSION = {"bkl", "sphere_canonical", "sphere_two_gen", "singular_canonical",
               "singular_two_gen", "bp_canonical", "bp_reduced"}

# family -> (parameter names with lower bounds, builder)
_FAMILIES: dict[str, tuple[dict[str, int], Callable]] = {
    "artin_canonical": ({"n": 3}, _build_artin_canonical),
    "artin_two_gen": ({"n": 3}, _build_artin_two_gen),
    "bkl": ({"n": 3}, _build_bkl),
    "sphere_canonical": ({"n": 3}, _build_sphere_canonical),
    "sphere_two_gen": ({"n": 3}, _build_sphere_two_gen),
    "singular_canonical": ({"n": 2}, _build_singular_canonical),
    "singular_two_gen": ({"n": 3}, _build_singular_two_gen),
    "bp_canonical": ({"n": 3}, _build_bp_canonical),
    "bp_reduced": ({"n": 3}, _build_bp_reduced),
    "typeB_canonical": ({"n": 3}, _build_typeB_canonical),
    "typeB_reduced": ({"n": 3}, _build_typeB_reduced),
    "typeD_canonical": ({"n": 3}, _build_typeD_canonical),
    "typeD_reduced": ({"n": 3}, _build_typeD_reduced),
    "typeE8_reduced": ({}, _build_typeE8_reduced),
    "complex_2e_e_r": ({"d": 2, "e": 2, "r": 2}, _build_complex_2e_e_r),
    "complex_e_e_r": ({"e": 2, "r": 3}, _build_complex_e_e_r),
    "complex_d_1_n": ({"d": 2, "n": 2}, _build_complex_d_1_n),
    "br_g30": ({}, _build_br_g30),
    "br_g34": ({}, _build_br_g34),
    "g25_quotient": ({}, lambda torsion: _build_cubic_quotient(4)),
    "g32_quotient": ({}, lambda torsion: _build_cubic_quotient(5)),
}

FAMILIES: tuple[str, ...] = tuple(_FAMILIES)

# rank implied by the families without free parameters
_FIXED_N = {"typeE8_reduced": 8, "br_g30": 4, "br_g34": 6, "g25_quotient": 4, "g32_quotient": 5}


def family_params(family: str) -> dict[str, int]:
    """Parameter names of ``family`` mapped to their minimum values."""
    try:
        return dict(_FAMILIES[family][0])
    except KeyError:
        raise UnknownFamily(family) from None


def catalog_build(family: str, params: dict | None = None, torsion: bool = False, **kw) -> Presentation:
    """Build the presentation of ``family``.

    ``torsion=True`` appends the finite-quotient relations (squares of the
    generators, ``t^d`` and so on). Extra parameters are rejected, except
    ``n`` for the fixed-rank families when it matches.

    >>> str(catalog_build("artin_two_gen", n=3).relations[0][0])
    's^3'
    """
    params = {**(params or {}), **kw}
    try:
        bounds, builder = _FAMILIES[family]
    except KeyError:
        raise UnknownFamily(family) from None
    if torsion and family in _NO_TORSION:
        raise UnsupportedParams(f"{family} has no torsion quotient")
    fixed = _FIXED_N.get(family)
    if fixed is not None and params.get("n", fixed) != fixed:
        raise UnsupportedParams(f"{family} is defined for n={fixed} only")
    unknown = set(params) - set(bounds) - ({"n"} if fixed else set())
    if unknown:
        raise UnsupportedParams(f"unexpected parameters for {family}: {', '.join(sorted(unknown))}")
    args = [_need(params, k, lo) for k, lo in bounds.items()]
    p = builder(*args, torsion)
    if torsion:
        p = Presentation(p.name + "_torsion", p.kind, p.alphabet, p.relations, p.params)
    return p


def diagram_presentation(name: str, gens: list[str], bonds: dict[tuple[str, str], int],
                         orders: dict[str, int] | None = None) -> Presentation:
    """Presentation read off a Coxeter-like diagram.

    Unlisted pairs commute; a bond ``m`` gives the length-``m`` braid
    relation. ``orders`` adds ``g^k = 1``. With all orders 2 this is the
    Coxeter group of the diagram.
    """
    b = _Builder(name, "group", gens, {})
    for a, c in itertools.combinations(gens, 2):
        m = bonds.get((a, c), bonds.get((c, a), 2))
        if m == 2:
            b.commute(_g(a), _g(c))
        else:
            b.braid(_g(a), _g(c), m)
    _torsion(b, orders or {})
    return b.build()
