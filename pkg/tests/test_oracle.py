"""Agreement between the standard-basis engine and the truncation oracle.

The oracle recomputes every length by sparse linear algebra in P/m^K;
it shares no code with the Mora engine.  Agreement is required at two
consecutive truncation levels.
"""

from theta_lab.localstd import VecPoly, length_of_quotient
from theta_lab.mf import ModulePresentation, mf_from_module, mf_validate
from theta_lab.poly import jacobian_ideal, parse_poly
from theta_lab.theta import periodic_tor_lengths
from theta_lab.truncation import (monomials_below, oracle_homology_length,
                                  oracle_length, oracle_membership)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]
XYZW = ["x", "y", "z", "w"]


def P(text, names=XY):
    return parse_poly(text, names)


def both_levels(gens, rank, bound):
    return (oracle_length(gens, rank, bound),
            oracle_length(gens, rank, bound + 1))


class TestOracleBasics:
    def test_monomials_below(self):
        assert len(monomials_below(2, 3)) == 6
        assert monomials_below(2, 0) == []

    def test_membership(self):
        gens = [[P("x - x^2")]]
        assert oracle_membership([P("x")], gens, 8)
        assert not oracle_membership([P("y")], gens, 8)


class TestLengthAgreement:
    def test_ideal_lengths(self):
        cases = [
            ([P(t, XYZ) for t in ("x", "y", "z^2")], 1, XYZ),
            (jacobian_ideal(P("x^2 + y^3")), 1, XY),
            (jacobian_ideal(P("x^3 + y^3")), 1, XY),
            (jacobian_ideal(P("x*y - z^2", XYZ)), 1, XYZ),
            (jacobian_ideal(P("x^3 + y^3 + z^3", XYZ)), 1, XYZ),
            (jacobian_ideal(P("x*y + z*w", XYZW)), 1, XYZW),
        ]
        for gens, rank, names in cases:
            exact = length_of_quotient(gens, rank=rank)
            assert exact.finite
            bound = 2 * max(g.degree() for g in gens) + 4
            vec_gens = [[g] for g in gens]
            a, b = both_levels(vec_gens, rank, bound)
            assert a == b == exact.value

    def test_module_length(self):
        gens = [VecPoly([P("x"), P("0")]), VecPoly([P("0"), P("x")]),
                VecPoly([P("y"), P("0")]), VecPoly([P("0"), P("y^2")])]
        exact = length_of_quotient(gens, rank=2)
        rows = [[g.components[0], g.components[1]] for g in gens]
        a, b = both_levels(rows, 2, 8)
        assert a == b == exact.value


def oracle_tor(mfM, pres, bound):
    s = pres.rank
    sub = [[v.components[i] for i in range(s)]
           for v in pres.relation_vectors()]
    return (oracle_homology_length(mfM.b, mfM.a, sub, s, bound),
            oracle_homology_length(mfM.a, mfM.b, sub, s, bound))


class TestTorAgreement:
    def test_node_pairs(self):
        f = P("x*y")
        mfx = mf_validate([[P("x")]], [[P("y")]], f)
        for gens, want in (([P("y")], (1, 0)), ([P("x")], (0, 1))):
            pres = ModulePresentation.from_ideal(gens, f)
            assert periodic_tor_lengths(mfx, pres) == want
            for bound in (6, 7):
                assert oracle_tor(mfx, pres, bound) == want

    def test_cone_self(self):
        f = P("x*y - z^2", XYZ)
        pres = ModulePresentation.from_ideal(
            [P("x", XYZ), P("z", XYZ)], f)
        m = mf_from_module(pres)
        want = periodic_tor_lengths(m, pres)
        assert want == (1, 1)
        for bound in (6, 7):
            assert oracle_tor(m, pres, bound) == want

    def test_quadric_cross_pair(self):
        f = P("x*y + z*w", XYZW)
        pres_m = ModulePresentation.from_ideal(
            [P("x", XYZW), P("z", XYZW)], f)
        pres_n = ModulePresentation.from_ideal(
            [P("x", XYZW), P("w", XYZW)], f)
        m = mf_from_module(pres_m)
        want = periodic_tor_lengths(m, pres_n)
        assert want == (0, 1)
        for bound in (5, 6):
            assert oracle_tor(m, pres_n, bound) == want
