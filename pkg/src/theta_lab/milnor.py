"""Milnor algebra and the Grothendieck residue pairing.

The Milnor algebra A_f = P/(partials of f) is finite dimensional exactly
when the singularity is isolated.  The residue functional is built by
the transformation law: pick pure powers x_i^{a_i} in the Jacobian
ideal, certify x_i^{a_i} = sum_j c_ij * d_j f by lifting, and read the
residue of g off the coefficient of x^{a-1} in g*det(c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonIsolatedError, ThetaLabError
from .localstd import length_of_quotient, std_basis
from .poly import (LocalOrder, Poly, jacobian_ideal, mono_deg, mono_div,
                   mono_divides, mono_mul, unit_inverse_series)


@dataclass
class MilnorAlgebra:
    f: Poly
    basis: list          # standard monomials (exponent tuples), low degree first
    mu: int
    order: LocalOrder
    jacobian: list       # the partials of f
    _std: object = field(repr=False, default=None)
    _bound: int = 0      # degree at which every monomial lies in the ideal

    def class_of(self, g: Poly) -> Poly:
        """The unique representative of g supported on the basis monomials.

        Tail reduction by the standard basis of the Jacobian ideal,
        dropping every term of degree >= _bound (such terms lie in the
        ideal of the local ring).  This map is linear, unlike the Mora
        normal form which multiplies by a unit.
        """
        order = self.order
        basis_set = set(self.basis)
        work = dict(g.truncate(self._bound).terms)
        done = {}
        leads = [(gen.leading(order), gen) for gen in self._std.generators]
        while work:
            m = max(work, key=order.key)
            c = work.pop(m)
            if m in basis_set:
                done[m] = done.get(m, Fraction(0)) + c
                continue
            hit = None
            for ((_, lm, lc), gen) in leads:
                if mono_divides(lm, m):
                    hit = (lm, lc, gen)
                    break
            if hit is None:
                raise ThetaLabError("non-basis monomial with no reducer; "
                                    "standard basis is incomplete")
            lm, lc, gen = hit
            q = Poly.monomial(mono_div(m, lm), c / lc)
            work_p = Poly(work, g.nvars) + Poly({m: c}, g.nvars) - q * gen.components[0]
            work = dict(work_p.truncate(self._bound).terms)
        return Poly(done, g.nvars)

    def coordinates(self, g: Poly):
        """Coefficients of class_of(g) on the basis monomials."""
        cls = self.class_of(g)
        return [cls.coefficient(m) for m in self.basis]

    def contains(self, g: Poly) -> bool:
        """Membership in the Jacobian ideal of the local ring."""
        return not self.class_of(g)


def milnor_algebra(f: Poly, order: LocalOrder = None) -> MilnorAlgebra:
    """Basis of A_f, the Milnor number, and a linear normal-form map."""
    nvars = f.nvars
    if order is None:
        order = LocalOrder(nvars)
    jac = jacobian_ideal(f)
    if not any(jac):
        raise NonIsolatedError("all partials vanish identically")
    basis_obj = std_basis([g for g in jac if g], order)
    res = length_of_quotient(jac, rank=1, order=order, basis=basis_obj)
    if not res.finite:
        raise NonIsolatedError("Jacobian ideal has infinite colength; "
                               "the singularity is not isolated")
    monomials = [m for (_, m) in res.std_monomials]
    bound = max((mono_deg(m) for m in monomials), default=0) + 1
    return MilnorAlgebra(f, monomials, res.value, order, jac,
                         _std=basis_obj, _bound=bound)


@dataclass
class ResidueData:
    a: tuple             # x_i^{a_i} lies in the Jacobian ideal
    c: list              # c[i][j] = (num, den): x_i^{a_i} = sum_j c_ij d_j f
    detc_num: Poly
    detc_den: Poly       # local unit, product of the row denominators
    values: dict         # basis monomial -> residue (Fraction)


def _poly_det(mat):
    """Determinant of a small square Poly matrix by cofactor expansion."""
    k = len(mat)
    if k == 1:
        return mat[0][0]
    nvars = mat[0][0].nvars
    total = Poly.zero(nvars)
    sign = 1
    for j in range(k):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total = total + mat[0][j] * _poly_det(minor) * sign
        sign = -sign
    return total


def residue_functional(alg: MilnorAlgebra, extra: int = 0) -> ResidueData:
    """The residue functional of f via the transformation law.

    Finds minimal a_i with x_i^{a_i} in (df) (plus `extra`, so tests can
    verify certificate independence), certifies by lifting, and
    evaluates res on every basis monomial.
    """
    from .localstd import lift

    f = alg.f
    nvars = f.nvars
    order = alg.order
    gens = alg.jacobian

    a = []
    for i in range(nvars):
        k = 1
        while not alg.contains(Poly.variable(i, nvars, power=k)):
            k += 1
            if k > alg._bound + 1:
                raise ThetaLabError("no pure power found below the degree "
                                    "bound; inconsistent basis data")
        a.append(k + extra)
    a = tuple(a)

    jac_basis = std_basis([g for g in gens if g], order, track=True)
    nz = [j for j, g in enumerate(gens) if g]
    c = []
    for i in range(nvars):
        coeffs = lift(Poly.variable(i, nvars, power=a[i]),
                      [gens[j] for j in nz], order, basis=jac_basis)
        row = [(Poly.zero(nvars), Poly.const(1, nvars))] * len(gens)
        for pos, j in enumerate(nz):
            row[j] = coeffs[pos]
        c.append(row)

    # each row shares one denominator; det(c) = det(nums) / prod(dens)
    dens = [row[nz[0]][1] if nz else Poly.const(1, nvars) for row in c]
    det_num = _poly_det([[entry[0] for entry in row] for row in c])
    det_den = Poly.const(1, nvars)
    for d in dens:
        det_den = det_den * d

    data = ResidueData(a, c, det_num, det_den, {})
    for m in alg.basis:
        data.values[m] = _evaluate(data, Poly.monomial(m), nvars)
    return data


def _evaluate(data: ResidueData, g: Poly, nvars: int) -> Fraction:
    """Coefficient of x^{a-1} in g * det(c), expanded just far enough."""
    target = tuple(ai - 1 for ai in data.a)
    bound = mono_deg(target) + 1
    inv = unit_inverse_series(data.detc_den, bound)
    prod = (g.truncate(bound) * data.detc_num.truncate(bound)).truncate(bound)
    prod = (prod * inv).truncate(bound)
    return prod.coefficient(target)


def residue(alg: MilnorAlgebra, data: ResidueData, g: Poly) -> Fraction:
    """res_{f,0}(g) for an arbitrary polynomial g."""
    return _evaluate(data, g, alg.f.nvars)


def residue_pairing_matrix(alg: MilnorAlgebra, data: ResidueData = None):
    """Gram matrix res(b_i * b_j) over the monomial basis of A_f."""
    if data is None:
        data = residue_functional(alg)
    nvars = alg.f.nvars
    out = []
    for bi in alg.basis:
        row = []
        for bj in alg.basis:
            row.append(residue(alg, data, Poly.monomial(mono_mul(bi, bj))))
        out.append(row)
    return out


def rational_det(mat) -> Fraction:
    """Exact determinant of a square Fraction matrix by Gaussian elimination."""
    k = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    det = Fraction(1)
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, k):
            factor = m[r][col] * inv
            if factor:
                for cc in range(col, k):
                    m[r][cc] -= factor * m[col][cc]
    return det
