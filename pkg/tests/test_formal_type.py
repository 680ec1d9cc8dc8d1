from fractions import Fraction

import pytest

from katz_forge.scalars import Sym, Eigenvalue, ONE
from katz_forge.jordan import JordanData, parse_jordan
from katz_forge.elementary import El, ElementaryModule
from katz_forge.formal_type import (FormalType, parse_formal_type,
                                    render_formal_type, formal_type_to_json,
                                    formal_type_from_json, ft_invariants,
                                    ft_end, ft_soln_dim, ft_checks,
                                    ft_formal_monodromy,
                                    ft_exponential_torus_dim,
                                    ft_exterior_cube, ft_local_data,
                                    local_to_ft)

J = parse_jordan
FT = parse_formal_type
A1, A2 = Sym("a1"), Sym("a2")

E1 = FT("El(2, a1, (l, l^-1)) + El(2, 2*a1, (1)) + (-1)")
E2 = FT("El(2, a1, (1)) + El(2, a2, (1)) + El(2, a1+a2, (1)) + (-1)")
E3 = FT("El(3, a1, (1)) + El(3, -a1, (1)) + (1)")
E4 = FT("El(6, a1, (1)) + (-1)")


class TestInvariants:
    @pytest.mark.parametrize("ft,rank,irr,halfdim", [
        (E4, 7, 1, (Fraction(1, 6), 6)),
        (E1, 7, 3, (Fraction(1, 2), 6)),
        (E2, 7, 3, (Fraction(1, 2), 6)),
        (E3, 7, 2, (Fraction(1, 3), 6)),
    ])
    def test_classification_types(self, ft, rank, irr, halfdim):
        inv = ft_invariants(ft)
        assert inv["rank"] == rank
        assert inv["irregularity"] == irr
        slope, dim = halfdim
        assert inv["slopes"][slope] == dim

    def test_purely_regular(self):
        f = FormalType.regular_only(J("(J(3), J(3), 1)"))
        assert ft_invariants(f)["irregularity"] == 0


class TestEnd:
    # the (irr(End), dim Soln(End)) pairs are the infinity entries of the
    # tuples (0,19,17,4), (0,21,19,4), (0,14,13,3), (0,7,7,2)
    @pytest.mark.parametrize("ft,end_irr,soln", [
        (E1, 19, 4), (E2, 21, 4), (E3, 14, 3), (E4, 7, 2),
    ])
    def test_classification_values(self, ft, end_irr, soln):
        end = ft_end(ft)
        assert end.rank() == 49
        assert end.irregularity() == end_irr
        assert ft_soln_dim(end) == soln

    def test_regular_centralizer(self):
        f = FormalType.regular_only(J("(J(3), J(3), 1)"))
        assert ft_soln_dim(ft_end(f)) == 17

    def test_rank_one(self):
        f = FormalType.regular_only(J("(m)"))
        end = ft_end(f)
        assert end.rank() == 1 and end.irregularity() == 0
        assert ft_soln_dim(end) == 1

    def test_end_irr_dual_invariance(self):
        for ft in (E1, E3):
            assert ft_end(ft).irregularity() == ft_end(ft.dual()).irregularity()

    def test_soln_lower_bound(self):
        # at least one invariant per irreducible summand
        for ft, nsummands in [(E1, 3), (E2, 4), (E3, 3), (E4, 2)]:
            assert ft_soln_dim(ft_end(ft)) >= nsummands - 2  # regular part may merge
            assert ft_soln_dim(ft_end(ft)) >= 2


class TestChecks:
    def test_classification_rows(self):
        for ft in (E1, E2, E3, E4):
            ck = ft_checks(ft)
            assert ck["self_dual"] and ck["det_trivial"]

    def test_non_self_dual(self):
        f = FT("El(1, a1, (m))")
        ck = ft_checks(f)
        assert not ck["self_dual"] and not ck["det_trivial"]

    def test_regular_self_dual(self):
        f = FormalType.regular_only(J("(xE2, x^-1E2, E3)"))
        ck = ft_checks(f)
        assert ck["self_dual"] and ck["det_trivial"]


class TestFormalMonodromy:
    def test_el2_pattern(self):
        # El(2, a, (E2)) + (J(2), 1) has formal monodromy (E2, -E2, J(2), 1)
        f = FormalType.make(J("(J(2), 1)"), [El(2, A1, "(E2)")])
        fm = ft_formal_monodromy(f)
        assert fm == J("(E2, -E2, J(2), 1)")

    def test_el2_minus_pattern(self):
        f = FormalType.make(J("(J(2), 1)"), [El(2, A1, "(-E2)")])
        fm = ft_formal_monodromy(f)
        assert fm == J("(iE2, -1*iE2, J(2), 1)")

    def test_regular_identity(self):
        f = FormalType.regular_only(J("(J(3), x)"))
        assert ft_formal_monodromy(f) == J("(J(3), x)")


class TestTorus:
    def test_classification_rows(self):
        assert ft_exponential_torus_dim(E1) == 1
        assert ft_exponential_torus_dim(E2) == 2
        assert ft_exponential_torus_dim(E3) == 2
        assert ft_exponential_torus_dim(E4) == 2

    def test_p6_q3(self):
        f = FormalType.make(JordanData.zero(), [
            ElementaryModule.make(6, ONE, {3: Sym("b3"), 1: Sym("b1")}, J("(1)"))])
        assert ft_exponential_torus_dim(f) == 3

    def test_p3_q3(self):
        full = FormalType.make(JordanData.zero(), [
            ElementaryModule.make(3, ONE, {3: Sym("b3"), 2: Sym("b2"), 1: Sym("b1")}, J("(1)"))])
        assert ft_exponential_torus_dim(full) == 3
        no_mid = FormalType.make(JordanData.zero(), [
            ElementaryModule.make(3, ONE, {3: Sym("b3"), 1: Sym("b1")}, J("(1)"))])
        assert ft_exponential_torus_dim(no_mid) == 3

    def test_single_exponential(self):
        f = FT("El(1, a1, (m))")
        assert ft_exponential_torus_dim(f) == 1


class TestExteriorCube:
    def test_e2(self):
        l3 = ft_exterior_cube(E2)
        assert l3.rank() == 35
        assert l3.irregularity() == 15
        assert l3.regular.invariants_dim() == 4

    def test_e1(self):
        l3 = ft_exterior_cube(E1)
        assert l3.rank() == 35
        # independent check: of the 35 triples of exponential letters
        # {a, a, -a, -a, 2a, -2a, 0} exactly 7 have zero phase, so the
        # slope-1/2 mass is 28 and the irregularity is 14 (the source
        # prose says 13 but its own displayed decomposition sums to 14)
        assert l3.regular.rank() == 7
        assert l3.irregularity() == 14
        assert l3.regular.invariants_dim() >= 1

    def test_e3(self):
        l3 = ft_exterior_cube(E3)
        assert l3.rank() == 35
        assert l3.irregularity() == 10
        assert l3.regular.invariants_dim() >= 2

    def test_rank3_regular_det(self):
        f = FormalType.regular_only(J("(x, x^-1, 1)"))
        l3 = ft_exterior_cube(f)
        assert l3.rank() == 1
        assert l3.regular == J("(1)")

    def test_unsupported_block(self):
        f = FormalType.make(JordanData.zero(), [El(2, A1, "(J(2))")])
        with pytest.raises(ValueError):
            ft_exterior_cube(f)

    def test_finite_point_invariants(self):
        assert J("(J(3), J(3), 1)").exterior(3).invariants_dim() == 13
        assert J("(J(3), J(2), J(2))").exterior(3).invariants_dim() == 13
        assert J("(iE2, -1*iE2, -E2, 1)").exterior(3).invariants_dim() == 9


class TestLocalData:
    def test_round_trips(self):
        for ft in (E1, E4, FormalType.regular_only(J("(J(2), J(2), E3)"))):
            for kind in ("finite", "infinite"):
                ld = ft_local_data(ft, kind)
                assert local_to_ft(ld) == ft

    def test_minus_e4_e3_masses(self):
        # the two mu-masses entering h(F) = 4 + 2 in the r=3 exclusion:
        # eigenvalue -1 at the (-E4, E3) point, eigenvalue 1 at the
        # (J(2), J(2), E3) point
        ft0 = FormalType.regular_only(J("(-E4, E3)"))
        ld0 = ft_local_data(ft0, "finite")
        minus = Eigenvalue.minus_one()
        one = Eigenvalue.one()
        assert sum(c for (phi, e, l), c in ld0.vanishing if e == minus and l == 0) == 4
        assert sum(c for (phi, e, l), c in ld0.vanishing if e == one) == 0
        ft1 = FormalType.regular_only(J("(J(2), J(2), E3)"))
        ld1 = ft_local_data(ft1, "finite")
        assert sum(c for (phi, e, l), c in ld1.vanishing if e == one and l == 0) == 2

    def test_finite_shift(self):
        # nu(1, level 1) = 2 from the J(2) blocks shifts to mu(1, level 0)
        ft = FormalType.regular_only(J("(J(2), J(2), E3)"))
        ld = ft_local_data(ft, "finite")
        one = Eigenvalue.one()
        assert sum(c for (phi, e, l), c in ld.vanishing if e == one and l == 0) == 2
        assert sum(c for (phi, e, l), c in ld.vanishing) == 2
        assert sum(c for (phi, e, l), c in ld.nearby if e == one and l == 1) == 2

    def test_negative_count_error(self):
        ld = ft_local_data(E4, "finite")
        bad = type(ld)(ld.kind, ld.rank, ld.nearby,
                       tuple((k, -v) for k, v in ld.vanishing))
        with pytest.raises(ValueError):
            local_to_ft(bad)


class TestTensorAndJson:
    def test_end_via_tensor_dual(self):
        t = E4.tensor(E4.dual())
        assert t.rank() == 49
        assert t.irregularity() == ft_end(E4).irregularity()

    def test_json_round_trip(self):
        for ft in (E1, E2, E3, E4):
            assert formal_type_from_json(formal_type_to_json(ft)) == ft

    def test_pretty_round_trip(self):
        for ft in (E1, E2, E3, E4):
            assert parse_formal_type(render_formal_type(ft)) == ft

    def test_minimality_merging(self):
        # two copies of the same class merge into one member
        f = FormalType.make(JordanData.zero(),
                            [El(2, A1, "(l)"), El(2, -A1, "(l^-1)")])
        assert len(f.irregular) == 1
        assert f.irregular[0].r.rank() == 2
