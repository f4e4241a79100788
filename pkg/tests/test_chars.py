import random
from fractions import Fraction

import pytest

from brw.algebra import radical_power
from brw.chars import (char_from_linear, char_table, clifford_correspondent,
                       constituents, induce, inner_product, regular_character,
                       restrict, trivial_character)
from brw.errors import (GroupMismatch, NotOverTheta, NotSubgroup, TooLarge)
from brw.groups import (center, ideal_subgroup, linear_characters,
                        radical_subgroup, set_product, torus_subgroup,
                        unit_group)


def test_char_table_degrees(b2_f3, b3_f2, diag2_f3):
    assert char_table(unit_group(b3_f2)).degrees == [1, 1, 1, 1, 2]
    assert char_table(unit_group(b2_f3)).degrees == [1, 1, 1, 1, 2, 2]
    tabD = char_table(unit_group(diag2_f3))
    assert tabD.degrees == [1, 1, 1, 1]
    # abelian: the table rows are exactly the linear characters
    GD = unit_group(diag2_f3)
    lins = {tuple(char_from_linear(ch).values[k].key(tabD.conductor)
                  for k in range(tabD.conj.k)) for ch in linear_characters(GD)}
    rows = {tuple(v.key(tabD.conductor) for v in chi.values) for chi in tabD.irreducibles}
    assert lins == rows


def test_char_table_axioms(b2_f3, b2_f5, b3_f2, b3_f3, b4_f2, pattern3_f3):
    for A in (b2_f3, b2_f5, b3_f2, b3_f3, b4_f2, pattern3_f3):
        G = unit_group(A)
        tab = char_table(G)
        assert len(tab.irreducibles) == tab.conj.k
        assert sum(d * d for d in tab.degrees) == G.order
        assert tab.verify()


def test_char_table_cap(b2_f3):
    with pytest.raises(TooLarge):
        char_table(unit_group(b2_f3), cap=5)


def test_inner_product_examples(b2_f3):
    G = unit_group(b2_f3)
    tab = char_table(G)
    for i, chi in enumerate(tab.irreducibles):
        for j, psi in enumerate(tab.irreducibles):
            assert inner_product(chi, psi) == Fraction(1 if i == j else 0)
    reg = regular_character(G)
    for chi in tab.irreducibles:
        assert inner_product(reg, chi) == chi.degree
    one = trivial_character(G)
    nontriv = next(c for c in linear_characters(G) if not c.is_trivial())
    assert inner_product(one, char_from_linear(nontriv)) == 0


def test_inner_product_group_mismatch(b2_f3, b3_f2):
    with pytest.raises(GroupMismatch):
        inner_product(trivial_character(unit_group(b2_f3)),
                      trivial_character(unit_group(b3_f2)))


def test_induce_regular(b2_f3):
    G = unit_group(b2_f3)
    triv = units_of_trivial(b2_f3)
    ind = induce(G, triv, trivial_character(triv))
    reg = regular_character(G)
    assert ind == reg and ind.degree == G.order


def units_of_trivial(A):
    from brw.groups import intern_group
    return intern_group(A, [A.one], kind="trivial")


def test_induce_example2(b2_f3):
    # tau on ZP with tau|P nontrivial induces an irreducible of degree 2
    A = b2_f3
    G = unit_group(A)
    P = radical_subgroup(A)
    ZP = set_product(G, center(G), P)
    taus = [t for t in linear_characters(ZP) if not t.restrict(P).is_trivial()]
    assert len(taus) == 4
    tab = char_table(G)
    deg2 = [c for c in tab.irreducibles if c.degree == 2]
    for tau in taus:
        ind = induce(G, ZP, char_from_linear(tau))
        assert inner_product(ind, ind) == 1
        assert any(ind == chi for chi in deg2)
    # for a fixed theta = tau|P, tau -> Ind tau is one-to-one onto the
    # degree >= 2 irreducibles
    theta = taus[0].restrict(P)
    over_theta = [t for t in taus if t.restrict(P).same_values(theta)]
    induced = [induce(G, ZP, char_from_linear(t)) for t in over_theta]
    assert len(induced) == len(deg2)
    for i, a in enumerate(induced):
        for j, b in enumerate(induced):
            assert (a == b) == (i == j)


def test_induce_contains_trivial(b2_f3, b3_f2, pattern3_f3):
    for A in (b2_f3, b3_f2, pattern3_f3):
        G = unit_group(A)
        for H in (radical_subgroup(A), torus_subgroup(A)):
            ind = induce(G, H, trivial_character(H))
            assert inner_product(ind, trivial_character(G)) == 1


def test_induce_requires_subgroup(b2_f3, b3_f2):
    with pytest.raises(NotSubgroup):
        induce(unit_group(b2_f3), unit_group(b3_f2), trivial_character(unit_group(b3_f2)))


def test_restrict_examples(b2_f3):
    A = b2_f3
    G = unit_group(A)
    P = radical_subgroup(A)
    tab = char_table(G)
    deg2 = next(c for c in tab.irreducibles if c.degree == 2)
    res = restrict(G, P, deg2)
    chars_P = linear_characters(P)
    mults = {ch.exps: inner_product(res, char_from_linear(ch)) for ch in chars_P}
    trivial_exps = next(c.exps for c in chars_P if c.is_trivial())
    assert mults[trivial_exps] == 0
    assert sorted(v for k, v in mults.items() if k != trivial_exps) == [1, 1]
    assert restrict(G, G, deg2) == deg2
    one = trivial_character(G)
    assert restrict(G, P, one) == trivial_character(P)
    assert res.degree == deg2.degree


def test_frobenius_reciprocity_randomized(b2_f3, b3_f2, b3_f3, pattern3_f3):
    rng = random.Random(17)
    checked = 0
    for A in (b2_f3, b3_f2, b3_f3, pattern3_f3):
        G = unit_group(A)
        tab = char_table(G)
        subgroups = [radical_subgroup(A), torus_subgroup(A),
                     set_product(G, center(G), radical_subgroup(A))]
        for H in subgroups:
            tabH = char_table(H)
            for _ in range(5):
                chi = rng.choice(tabH.irreducibles)
                psi = rng.choice(tab.irreducibles)
                lhs = inner_product(induce(G, H, chi), psi)
                rhs = inner_product(chi, restrict(G, H, psi))
                assert lhs == rhs
                checked += 1
    assert checked >= 50


def test_induction_transitivity(b3_f3, b4_f2):
    for A in (b3_f3, b4_f2):
        G = unit_group(A)
        K = set_product(G, center(G), radical_subgroup(A))  # Z P
        H = ideal_subgroup(A, radical_power(A, 2))  # 1 + J^2 <= ZP
        for lam in linear_characters(H)[:4]:
            chi = char_from_linear(lam)
            via = induce(G, K, induce(K, H, chi))
            direct = induce(G, H, chi)
            assert via == direct


def test_clifford_examples(b2_f3, b3_f2):
    A = b2_f3
    G = unit_group(A)
    P = radical_subgroup(A)
    theta = next(c for c in linear_characters(P) if not c.is_trivial())
    chi = next(c for c in char_table(G).irreducibles
               if c.degree == 2 and inner_product(restrict(G, P, c), char_from_linear(theta)) != 0)
    eta, S = clifford_correspondent(G, P, theta, chi)
    assert eta.degree == 1 and S.order == 6
    assert induce(G, S, eta) == chi
    # stabilizer = G: the correspondent is chi itself
    G3 = unit_group(b3_f2)
    N = ideal_subgroup(b3_f2, radical_power(b3_f2, 2))
    sig = next(c for c in linear_characters(N) if not c.is_trivial())
    chi3 = next(c for c in char_table(G3).irreducibles if c.degree == 2)
    eta3, S3 = clifford_correspondent(G3, N, sig, chi3)
    assert S3.order == G3.order and eta3 == chi3.transfer(S3)


def test_clifford_requires_over_theta(b2_f3):
    G = unit_group(b2_f3)
    P = radical_subgroup(b2_f3)
    theta = next(c for c in linear_characters(P) if not c.is_trivial())
    lin = next(c for c in char_table(G).irreducibles if c.degree == 1)
    with pytest.raises(NotOverTheta):
        clifford_correspondent(G, P, theta, lin)


def test_clifford_identity_across_orbit(b3_f3):
    # Ind(correspondent) = chi for every irreducible over a nontrivial theta
    A = b3_f3
    G = unit_group(A)
    Q = ideal_subgroup(A, radical_power(A, 2))
    tab = char_table(G)
    theta = next(c for c in linear_characters(Q) if not c.is_trivial())
    tc = char_from_linear(theta)
    hit = 0
    for chi in tab.irreducibles:
        if inner_product(restrict(G, Q, chi), tc) != 0:
            eta, S = clifford_correspondent(G, Q, theta, chi)
            assert induce(G, S, eta) == chi
            hit += 1
    assert hit > 0


def test_constituent_decomposition(b2_f3):
    G = unit_group(b2_f3)
    tab = char_table(G)
    reg = regular_character(G)
    cons = constituents(reg, tab)
    assert {(m, int(c.degree)) for m, c in cons} == {(1, 1), (2, 2)}
