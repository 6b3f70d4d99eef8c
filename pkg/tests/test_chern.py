import pytest

from theta_lab.chern import (DiffForm, chern_forms, chern_top_class,
                             free_factorization, theta_vs_residue)
from theta_lab.errors import ParityError
from theta_lab.mf import (ModulePresentation, mf_direct_sum, mf_from_module,
                          mf_shift, mf_validate)
from theta_lab.poly import Poly, parse_poly

XY = ["x", "y"]
XYZ = ["x", "y", "z"]
XYZW = ["x", "y", "z", "w"]


def P(text, names=XY):
    return parse_poly(text, names)


def node_mfs():
    f = P("x*y")
    return (mf_validate([[P("x")]], [[P("y")]], f),
            mf_validate([[P("y")]], [[P("x")]], f), f)


def example_cone_pair():
    f = P("x*y - z^2", XYZ)
    A = [[P("y", XYZ), P("-z", XYZ)], [P("-z", XYZ), P("x", XYZ)]]
    B = [[P("x", XYZ), P("z", XYZ)], [P("z", XYZ), P("y", XYZ)]]
    return mf_validate(A, B, f)


class TestDiffForm:
    def test_wedge_antisymmetry(self):
        dx = DiffForm({(0,): Poly.const(1, 2)}, 2)
        dy = DiffForm({(1,): Poly.const(1, 2)}, 2)
        assert dx.wedge(dy) == dy.wedge(dx).scale(-1)
        assert not dx.wedge(dx)

    def test_d_squared_zero(self):
        form = DiffForm({(): P("x^2*y + y^3"), (0,): P("x*y")}, 2)
        assert not form.d().d()

    def test_d_leibniz_on_functions(self):
        g, h = P("x^2 + y"), P("x*y - 1")
        lhs = DiffForm.from_poly(g * h).d()
        rhs = (DiffForm.from_poly(h).d().scale(g) +
               DiffForm.from_poly(g).d().scale(h))
        assert lhs == rhs


class TestChernForms:
    def test_node_omega_and_eta(self):
        mx, _, _ = node_mfs()
        cf = chern_forms(mx)
        assert cf.omega[0] == DiffForm({(0, 1): Poly.const(1, 2)}, 2)
        assert cf.eta[0] == DiffForm({(1,): P("x")}, 2)

    def test_d_eta_equals_omega_node(self):
        mx, my, _ = node_mfs()
        for m in (mx, my):
            cf = chern_forms(m)
            assert cf.eta[0].d() == cf.omega[0]

    def test_cone_pair_omega_vanishes(self):
        cf = chern_forms(example_cone_pair())
        assert not cf.omega[0]
        assert cf.eta[0].d() == cf.omega[0]

    def test_free_factorization_vanishes(self):
        cf = chern_forms(free_factorization(P("x*y")))
        assert all(not w for w in cf.omega)

    def test_direct_sum_additive(self):
        mx, my, _ = node_mfs()
        both = chern_forms(mf_direct_sum(mx, my))
        sep = chern_forms(mx).omega[0] + chern_forms(my).omega[0]
        assert both.omega[0] == sep


class TestTopClass:
    def test_node_classes(self):
        mx, my, _ = node_mfs()
        assert chern_top_class(mx) == Poly.const(1, 2)
        assert chern_top_class(my) == Poly.const(-1, 2)

    def test_free_is_zero(self):
        assert not chern_top_class(free_factorization(P("x*y")))

    def test_shift_negates(self):
        mx, _, _ = node_mfs()
        assert chern_top_class(mf_shift(mx)) == -chern_top_class(mx)

    def test_direct_sum_additive(self):
        mx, my, _ = node_mfs()
        total = chern_top_class(mf_direct_sum(mx, my))
        assert total == chern_top_class(mx) + chern_top_class(my)

    def test_parity_error_on_odd_vars(self):
        with pytest.raises(ParityError):
            chern_top_class(example_cone_pair())

    def test_quadric_plane_class(self):
        f = P("x*y + z*w", XYZW)
        pres = ModulePresentation.from_ideal(
            [P("x", XYZW), P("z", XYZW)], f)
        m = mf_from_module(pres)
        top = chern_top_class(m)
        # mu = 1, so the class is a rational multiple of 1
        assert top.degree() <= 0


class TestThetaVsResidue:
    def test_node_pair_scalar_one(self):
        mx, my, f = node_mfs()
        rep = theta_vs_residue([mx, my], f)
        assert rep.t_matrix == [[-1, 1], [1, -1]]
        assert rep.r_matrix == [[-1, 1], [1, -1]]
        assert rep.scalar == 1 and rep.consistent

    def test_free_degenerate(self):
        f = P("x*y")
        rep = theta_vs_residue([free_factorization(f)], f)
        assert rep.degenerate and rep.consistent

    def test_quadric_consistent(self):
        f = P("x*y + z*w", XYZW)
        mods = [[P("x", XYZW), P("z", XYZW)],
                [P("x", XYZW), P("w", XYZW)]]
        rep = theta_vs_residue(mods, f)
        assert rep.consistent
        assert rep.t_matrix == [[1, -1], [-1, 1]]
        assert rep.scalar is not None

    def test_odd_vars_rejected(self):
        with pytest.raises(ParityError):
            theta_vs_residue([example_cone_pair()], P("x*y - z^2", XYZ))
