"""Groups, characters, lambda-operations, Euler classes, tables, norms."""

from fractions import Fraction

import pytest

from sseqpow.errors import OrderBoundExceeded
from sseqpow.repring import (
    ClassFunction,
    PermRep,
    ReducedPermRep,
    adams_operation,
    bott_power_euler,
    character_table,
    corpus,
    euler_character_identity,
    euler_class,
    euler_gset,
    exterior_powers,
    group_from_generators,
    is_ku_allowable,
    norm_epsilon,
    perm_character,
)
from sseqpow.repring.corpus import (
    alternating,
    cyclic,
    dihedral,
    direct,
    heisenberg3,
    quaternion,
    symmetric,
)
from sseqpow.repring.reps import has_transitive_cyclic


class TestGroups:
    def test_c4_classes(self):
        G = group_from_generators(["(1 2 3 4)"])
        assert G.order == 4 and G.n_classes() == 4

    def test_s3_classes(self):
        G = group_from_generators(["(1 2 3)", "(1 2)"])
        sizes = sorted(len(c) for _, c in G.conjugacy_classes())
        assert sizes == [1, 2, 3]

    def test_q8_classes(self):
        Q8 = quaternion()
        assert Q8.order == 8 and Q8.n_classes() == 5

    def test_quotient(self):
        G = cyclic(6)
        K = G.subgroup_closure([G.elements[0]])  # trivial; use an order-2 elt
        two = next(g for g in G.elements if G.element_order(g) == 2)
        K = G.subgroup_closure([two])
        Q = G.quotient_by(K)
        assert Q.order == 3

    def test_nilpotent(self):
        assert cyclic(12).is_nilpotent()
        assert quaternion().is_nilpotent()
        assert heisenberg3().is_nilpotent()
        assert not symmetric(3).is_nilpotent()
        assert not alternating(4).is_nilpotent()

    def test_order_bound(self):
        with pytest.raises(OrderBoundExceeded):
            cyclic(100).all_subgroups()


class TestPermCharacter:
    def test_trivial_coset(self):
        G = symmetric(3)
        chi = perm_character(G, frozenset(G.elements))
        assert all(v == 1 for v in chi.values)

    def test_regular(self):
        G = symmetric(3)
        chi = perm_character(G, [G.identity])
        for i, (rep, _) in enumerate(G.conjugacy_classes()):
            assert chi.values[i] == (6 if rep == G.identity else 0)

    def test_natural_s3(self):
        G = symmetric(3)
        chi = PermRep.natural(G).character()
        vals = sorted(chi.values)
        assert vals == [0, 1, 3]


class TestExteriorPowers:
    def test_lambda0_is_one(self):
        G = symmetric(3)
        lam = exterior_powers(PermRep.natural(G))
        assert all(v == 1 for v in lam[0].values)

    def test_regular_c2(self):
        G = cyclic(2)
        lam = exterior_powers(PermRep.regular(G))
        g_cls = G.class_of(G.elements[1] if G.elements[1] != G.identity else G.elements[0])
        nontriv = next(i for i, (rep, _) in enumerate(G.conjugacy_classes())
                       if rep != G.identity)
        # det(I + tM) = 1 - t^2 at the generator
        assert lam[1].values[nontriv] == 0
        assert lam[2].values[nontriv] == -1

    def test_top_lambda_is_sign(self):
        G = symmetric(4)
        rep = PermRep.natural(G)
        lam = exterior_powers(rep)
        for i, (g, _) in enumerate(G.conjugacy_classes()):
            ct = rep.cycle_type(g)
            sign = 1
            for l in ct:
                sign *= (-1) ** (l - 1)
            assert lam[4].values[i] == sign


class TestEulerClass:
    def test_trivial_rep_gives_zero(self):
        G = cyclic(3)
        e = euler_class(PermRep.trivial(G))
        assert e.is_zero()

    def test_reduced_regular_cp(self):
        for p in (3, 5):
            G = cyclic(p)
            e = euler_gset(G, [G.identity])
            for i, (rep, _) in enumerate(G.conjugacy_classes()):
                want = p if G.element_order(rep) == p else 0
                assert e.classfn.values[i] == want

    def test_reduced_regular_s3_vanishes(self):
        G = symmetric(3)
        e = euler_gset(G, [G.identity])
        assert e.is_zero()
        assert not has_transitive_cyclic(G, [G.identity])

    def test_certificate_verifies(self):
        G = cyclic(9)
        e = euler_gset(G, [G.identity])
        assert e.verify()

    def test_identity_lemma(self):
        # chi(e(V), g) = f(V, g)(1) across realized reps
        for G in (cyclic(4), symmetric(3), quaternion()):
            for K in G.cyclic_subgroups():
                rep = ReducedPermRep.from_perm(PermRep.coset(G, K))
                for g, _ in G.conjugacy_classes():
                    lhs, rhs = euler_character_identity(rep, g)
                    assert lhs == rhs

    def test_c4_generator_value(self):
        G = cyclic(4)
        rep = ReducedPermRep.from_perm(PermRep.regular(G))
        gen = next(g for g in G.elements if G.element_order(g) == 4)
        lhs, rhs = euler_character_identity(rep, gen)
        assert lhs == rhs == 4

    def test_transposition_repeated_eigenvalue(self):
        G = symmetric(3)
        rep = ReducedPermRep.from_perm(PermRep.regular(G))
        transp = next(g for g in G.elements if G.element_order(g) == 2)
        lhs, rhs = euler_character_identity(rep, transp)
        assert lhs == rhs == 0

    def test_euler_gset_full_subgroup(self):
        G = symmetric(3)
        e = euler_gset(G, frozenset(G.elements))
        assert all(v == 1 for v in e.classfn.values)

    def test_c9_formula(self):
        # e(C9) = 3(3 - C[C9/C3]): 9 on generators, 0 elsewhere
        G = cyclic(9)
        e = euler_gset(G, [G.identity])
        for i, (rep, _) in enumerate(G.conjugacy_classes()):
            want = 9 if G.element_order(rep) == 9 else 0
            assert e.classfn.values[i] == want
        C3 = next(H for H in G.cyclic_subgroups() if len(H) == 3)
        formula = 3 * (ClassFunction.constant(G, 3) - perm_character(G, C3))
        assert e.classfn == formula


class TestBottPowerEuler:
    def test_m2(self):
        e = bott_power_euler(2)
        G = e.classfn.group
        for i, (rep, _) in enumerate(G.conjugacy_classes()):
            want = 2 if rep != G.identity else 0
            assert e.classfn.values[i] == want

    def test_m3_vanishes_off_3_cycles(self):
        e = bott_power_euler(3)
        G = e.classfn.group
        for i, (rep, _) in enumerate(G.conjugacy_classes()):
            order = G.element_order(rep)
            want = 3 if order == 3 else 0
            assert e.classfn.values[i] == want

    def test_m1(self):
        e = bott_power_euler(1)
        assert all(v == 1 for v in e.classfn.values)

    def test_bound(self):
        with pytest.raises(OrderBoundExceeded):
            bott_power_euler(9)


class TestAdams:
    def test_psi1_identity(self):
        G = symmetric(3)
        chi = PermRep.natural(G).character()
        assert adams_operation(1, chi) == chi

    def test_psi_order_constant(self):
        G = symmetric(3)
        chi = PermRep.natural(G).character()
        psi = adams_operation(G.order, chi)
        assert all(v == chi.values[G.class_of(G.identity)] for v in psi.values)

    def test_psi2_fixes_c3_regular(self):
        G = cyclic(3)
        chi = perm_character(G, [G.identity])
        assert adams_operation(2, chi) == chi

    def test_composition(self):
        G = quaternion()
        chi = PermRep.regular(G).character() - ClassFunction.constant(G, 2)
        for k in (2, 3):
            for l in (3, 5):
                a = adams_operation(k, adams_operation(l, chi))
                b = adams_operation(k * l, chi)
                assert a == b


class TestCharacterTable:
    def test_c2(self):
        t = character_table(cyclic(2))
        assert sorted(t.degrees) == [1, 1]
        vals = sorted(t.rational_value(i, 1 - t.group.class_of(t.group.identity))
                      for i in range(2))
        assert vals == [-1, 1]

    def test_s3(self):
        t = character_table(symmetric(3))
        assert sorted(t.degrees) == [1, 1, 2]
        assert t.verify_orthogonality()

    def test_q8(self):
        t = character_table(quaternion())
        assert sorted(t.degrees) == [1, 1, 1, 1, 2]
        assert t.verify_orthogonality()

    def test_c5_cyclotomic(self):
        t = character_table(cyclic(5))
        assert t.degrees == [1] * 5
        assert t.verify_orthogonality()

    def test_heisenberg(self):
        t = character_table(heisenberg3())
        assert sorted(t.degrees) == [1] * 9 + [3, 3]
        assert t.verify_orthogonality()

    def test_adams_permutes_irreducibles(self):
        G = symmetric(3)
        t = character_table(G)
        rats = [ClassFunction(G, [t.rational_value(i, c) for c in range(G.n_classes())])
                for i in range(3)]
        for k in (5, 7):
            for chi in rats:
                psi = adams_operation(k, chi)
                assert any(psi == other for other in rats)


class TestNormEpsilon:
    def test_c3(self):
        G = cyclic(3)
        out = norm_epsilon(G, [G.identity])
        # class of C[C3] - 1 mod 2: both nontrivial characters appear once
        assert not out["is_zero"]
        assert sum(out["multiplicities_mod2"]) == 2
        assert out["quotient_cyclic"]
        assert out["equals_reduced_perm_GmodN"]

    def test_c9(self):
        G = cyclic(9)
        out = norm_epsilon(G, [G.identity])
        assert not out["is_zero"]
        assert out["equals_reduced_perm_GmodN"]

    def test_non_cyclic_quotient_vanishes(self):
        G = direct(cyclic(3), cyclic(3), name="C3xC3")
        out = norm_epsilon(G, [G.identity])
        assert out["is_zero"]
        assert out["quotient_cyclic"] is False


class TestAllowable:
    def test_trivial(self):
        ok, _ = is_ku_allowable(cyclic(1))
        assert ok

    def test_nilpotent_examples(self):
        for G in (direct(cyclic(2), cyclic(4)), quaternion(), heisenberg3()):
            ok, _ = is_ku_allowable(G)
            assert ok

    def test_s3_witness(self):
        ok, wit = is_ku_allowable(symmetric(3))
        assert not ok
        assert wit["cyclic_order"] == 3 and wit["prime"] == 2

    def test_d5_witness(self):
        ok, wit = is_ku_allowable(dihedral(5))
        assert not ok
        assert wit["cyclic_order"] == 5 and wit["prime"] == 2


class TestCorpus:
    @pytest.mark.parametrize("n", sorted(corpus.EXPECTED_COUNTS))
    def test_counts_and_distinctness(self, n):
        gs = corpus.groups_of_order(n)
        assert len(gs) == corpus.EXPECTED_COUNTS[n]
        fps = [corpus.fingerprint(G) for G in gs]
        for G, fp in zip(gs, fps):
            assert fp[0] == n, f"{G.name} has order {fp[0]}"
        assert len(set(fps)) == len(fps), f"fingerprint collision at order {n}"

    def test_named_extras(self):
        extras = corpus.named_extras()
        names = [G.name for G in extras]
        assert "Heis27" in names and "C27" in names
