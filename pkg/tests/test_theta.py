from fractions import Fraction

import pytest

from theta_lab.errors import InfiniteLengthError, NotProperError
from theta_lab.mf import ModulePresentation, mf_from_module, mf_validate
from theta_lab.poly import parse_poly
from theta_lab.psd import psd_rank
from theta_lab.theta import (gram, homogeneous_theta_formula,
                             intersection_multiplicity,
                             periodic_tor_lengths, theta)

XY = ["x", "y"]
XYZ = ["x", "y", "z"]
XYZW = ["x", "y", "z", "w"]


def P(text, names=XY):
    return parse_poly(text, names)


def ideal(names, *texts):
    return [parse_poly(t, names) for t in texts]


class TestPeriodicTorLengths:
    def test_node_same_branch(self):
        f = P("x*y")
        mfx = mf_validate([[P("x")]], [[P("y")]], f)
        N = ModulePresentation.from_ideal([P("x")], f)
        assert periodic_tor_lengths(mfx, N) == (0, 1)

    def test_node_opposite_branches(self):
        f = P("x*y")
        mfx = mf_validate([[P("x")]], [[P("y")]], f)
        N = ModulePresentation.from_ideal([P("y")], f)
        assert periodic_tor_lengths(mfx, N) == (1, 0)

    def test_cone_ruling_self(self):
        f = P("x*y - z^2", XYZ)
        pres = ModulePresentation.from_ideal(ideal(XYZ, "x", "z"), f)
        m = mf_from_module(pres)
        assert periodic_tor_lengths(m, pres) == (1, 1)

    def test_infinite_length_detected(self):
        # f = xyz, M = N = R/(x): homology is k[[y,z]]/(yz), not finite
        f = P("x*y*z", XYZ)
        mfx = mf_validate([[P("x", XYZ)]], [[P("y*z", XYZ)]], f)
        pres = ModulePresentation.from_ideal([P("x", XYZ)], f)
        with pytest.raises(InfiniteLengthError):
            periodic_tor_lengths(mfx, pres)

    def test_quadric_same_plane_self_pairing(self):
        # same ruling: Theorem 2.4 data [Y].[Z] = 0, degrees 1 -> 1
        f = P("x*y + z*w", XYZW)
        pres = ModulePresentation.from_ideal(ideal(XYZW, "x", "z"), f)
        m = mf_from_module(pres)
        le, lo = periodic_tor_lengths(m, pres)
        assert le - lo == 1


class TestTheta:
    def test_cone_self_pairing_vanishes(self):
        f = P("x*y - z^2", XYZ)
        M = ideal(XYZ, "x", "z")
        rep = theta(M, M, f)
        assert (rep.l_even, rep.l_odd, rep.theta) == (1, 1, 0)
        assert rep.n == 2 and rep.sign_factor is None

    def test_node_cross(self):
        f = P("x*y")
        rep = theta([P("x")], [P("y")], f)
        assert rep.theta == 1 and rep.sign_factor == -1

    def test_node_self(self):
        f = P("x*y")
        assert theta([P("x")], [P("x")], f).theta == -1

    def test_quadric_intersecting_planes(self):
        f = P("x*y + z*w", XYZW)
        rep = theta(ideal(XYZW, "x", "z"), ideal(XYZW, "x", "w"), f)
        assert rep.theta == -1
        assert rep.n == 3 and rep.sign_factor == 1

    def test_quadric_disjoint_rulings(self):
        f = P("x*y + z*w", XYZW)
        rep = theta(ideal(XYZW, "x", "z"), ideal(XYZW, "y", "w"), f)
        assert rep.theta == 1

    def test_symmetry(self):
        f = P("x*y + z*w", XYZW)
        a = theta(ideal(XYZW, "x", "z"), ideal(XYZW, "x", "w"), f).theta
        b = theta(ideal(XYZW, "x", "w"), ideal(XYZW, "x", "z"), f).theta
        assert a == b

    def test_free_module_gives_zero(self):
        f = P("x*y")
        rep = theta([P("1 + x")], [P("x")], f)
        assert rep.theta == 0 and rep.l_even == 0 and rep.l_odd == 0

    def test_mf_input(self):
        f = P("x*y")
        mfx = mf_validate([[P("x")]], [[P("y")]], f)
        assert theta(mfx, [P("y")], f).theta == 1


class TestGram:
    def test_node_pair(self):
        f = P("x*y")
        g = gram([[P("x")], [P("y")]], f)
        assert g.matrix == [[-1, 1], [1, -1]]
        assert g.signed == [[1, -1], [-1, 1]]
        assert g.psd and psd_rank(g.certificate) == 1

    def test_quadric_pair(self):
        f = P("x*y + z*w", XYZW)
        g = gram([ideal(XYZW, "x", "z"), ideal(XYZW, "x", "w")], f)
        assert g.matrix == [[1, -1], [-1, 1]]
        assert g.psd

    def test_artinian_even_n(self):
        f = P("x*y - z^2", XYZ)
        g = gram([ideal(XYZ, "x", "y", "z")], f)
        assert g.matrix == [[0]]
        assert g.psd is None
        assert any("NOT_APPLICABLE" in n for n in g.notes)


class TestIntersectionMultiplicity:
    def test_transverse_planes(self):
        assert intersection_multiplicity(
            ideal(XYZW, "x", "z"), ideal(XYZW, "y", "w")) == 1

    def test_tangent_parabola(self):
        assert intersection_multiplicity([P("y - x^2")], [P("y")]) == 2

    def test_not_proper(self):
        with pytest.raises(NotProperError):
            intersection_multiplicity(
                ideal(XYZW, "x", "z"), ideal(XYZW, "x", "w"))

    def test_matches_theta_on_node(self):
        f = P("x*y")
        assert theta([P("x")], [P("y")], f).theta == \
            intersection_multiplicity([P("x")], [P("y")])

    def test_matches_theta_on_quadric(self):
        f = P("x*y + z*w", XYZW)
        I, J = ideal(XYZW, "x", "z"), ideal(XYZW, "y", "w")
        assert theta(I, J, f).theta == intersection_multiplicity(I, J)


class TestHomogeneousFormula:
    def test_crossing_rulings(self):
        assert homogeneous_theta_formula(2, 1, 1, 1) == -1

    def test_same_ruling(self):
        assert homogeneous_theta_formula(2, 1, 1, 0) == 1

    def test_empty_cycle(self):
        assert homogeneous_theta_formula(7, 0, 0, 0) == 0

    def test_rational_inputs(self):
        assert homogeneous_theta_formula(
            3, Fraction(1, 2), 2, Fraction(1, 3)) == 0
