"""Polynomial differential forms and Chern classes of matrix factorizations.

A form is a sparse combination of basis covectors dx_{i1}^...^dx_{ip}
(strictly increasing indices) with polynomial coefficients.  For a
factorization (A, B) the forms omega^i = tr((dA ^ dB)^i) and
eta^i = tr(A dB (dA ^ dB)^i) satisfy d(eta^{i-1}) = omega^i; when the
number of variables is even, the top omega reduces to a class in the
Milnor algebra, which the residue pairing compares against Theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ParityError
from .mf import MatrixFactorization, mf_validate
from .milnor import MilnorAlgebra, milnor_algebra, residue, residue_functional
from .poly import Poly


def _merge_indices(a, b):
    """Concatenate two increasing index tuples; (sign, sorted tuple) or
    None when an index repeats."""
    if set(a) & set(b):
        return None
    merged = a + b
    # count inversions of the concatenation
    inv = sum(1 for i in range(len(merged)) for j in range(i + 1, len(merged))
              if merged[i] > merged[j])
    return (-1) ** inv, tuple(sorted(merged))


class DiffForm:
    """Sparse polynomial differential form (mixed degree allowed)."""

    __slots__ = ("parts", "nvars")

    def __init__(self, parts, nvars):
        self.parts = {idx: p for idx, p in parts.items() if p}
        self.nvars = nvars

    @staticmethod
    def zero(nvars):
        return DiffForm({}, nvars)

    @staticmethod
    def from_poly(p: Poly):
        return DiffForm({(): p}, p.nvars)

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        return isinstance(other, DiffForm) and self.parts == other.parts

    def __add__(self, other):
        out = dict(self.parts)
        for idx, p in other.parts.items():
            s = out.get(idx, Poly.zero(self.nvars)) + p
            if s:
                out[idx] = s
            else:
                out.pop(idx, None)
        return DiffForm(out, self.nvars)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        """Multiply by a Poly or a scalar (a 0-form factor)."""
        return DiffForm({idx: p * c for idx, p in self.parts.items()}, self.nvars)

    def wedge(self, other: "DiffForm") -> "DiffForm":
        out = {}
        for ia, pa in self.parts.items():
            for ib, pb in other.parts.items():
                m = _merge_indices(ia, ib)
                if m is None:
                    continue
                sign, idx = m
                s = out.get(idx, Poly.zero(self.nvars)) + pa * pb * sign
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
        return DiffForm(out, self.nvars)

    def d(self) -> "DiffForm":
        """Exterior derivative."""
        out = DiffForm.zero(self.nvars)
        for idx, p in self.parts.items():
            for i in range(self.nvars):
                dp = p.partial(i)
                if not dp:
                    continue
                m = _merge_indices((i,), idx)
                if m is None:
                    continue
                sign, nidx = m
                out = out + DiffForm({nidx: dp * sign}, self.nvars)
        return out

    def component(self, degree: int) -> "DiffForm":
        return DiffForm({i: p for i, p in self.parts.items() if len(i) == degree},
                        self.nvars)

    def coefficient(self, idx) -> Poly:
        return self.parts.get(tuple(idx), Poly.zero(self.nvars))

    def __repr__(self):
        return f"DiffForm({self.parts!r})"


def d_matrix(mat, nvars):
    """Entrywise exterior derivative of a Poly matrix: matrix of 1-forms."""
    return [[DiffForm.from_poly(e).d() for e in row] for row in mat]


def poly_matrix_form(mat):
    """Wrap a Poly matrix as a matrix of 0-forms."""
    return [[DiffForm.from_poly(e) for e in row] for row in mat]


def mat_wedge(X, Y):
    p = len(X)
    q = len(Y[0])
    out = []
    for i in range(p):
        row = []
        for j in range(q):
            acc = DiffForm.zero(X[0][0].nvars)
            for k in range(len(Y)):
                acc = acc + X[i][k].wedge(Y[k][j])
            row.append(acc)
        out.append(row)
    return out


def mat_trace(X):
    acc = DiffForm.zero(X[0][0].nvars)
    for i in range(len(X)):
        acc = acc + X[i][i]
    return acc


@dataclass
class ChernClasses:
    omega: list   # omega[i-1] = tr((dA^dB)^i), a 2i-form, i = 1..imax
    eta: list     # eta[i] = tr(A dB (dA^dB)^i), a (2i+1)-form, i = 0..imax-1
    top: Poly = None  # class in A_f when the variable count is even


def chern_forms(m: MatrixFactorization, alg: MilnorAlgebra = None) -> ChernClasses:
    """omega and eta classes of a matrix factorization.

    Computes i = 1 .. floor((n+1)/2) with n+1 the variable count; the
    top class (with its 1/i! factor) is reduced into the Milnor algebra
    when n+1 is even.
    """
    nvars = m.f.nvars
    imax = nvars // 2 if nvars % 2 == 0 else (nvars - 1) // 2
    imax = max(imax, 1)
    dA = d_matrix(m.a, nvars)
    dB = d_matrix(m.b, nvars)
    base = mat_wedge(dA, dB)
    a0 = poly_matrix_form(m.a)
    adb = mat_wedge(a0, dB)

    omega = []
    eta = [mat_trace(adb)]
    power = base
    for i in range(1, imax + 1):
        omega.append(mat_trace(power))
        if i < imax:
            eta.append(mat_trace(mat_wedge(adb, power)))
            power = mat_wedge(power, base)

    top = None
    if nvars % 2 == 0:
        top = _top_class(m, omega[-1], nvars, alg)
    return ChernClasses(omega, eta, top)


def _top_class(m, omega_top, nvars, alg):
    i = nvars // 2
    coeff = omega_top.coefficient(tuple(range(nvars)))
    coeff = coeff * Fraction(1, factorial(i))
    if alg is None:
        alg = milnor_algebra(m.f)
    return alg.class_of(coeff)


def chern_top_class(m: MatrixFactorization, alg: MilnorAlgebra = None) -> Poly:
    """Class of the top component of tr(exp(dA^dB)) in the Milnor algebra."""
    nvars = m.f.nvars
    if nvars % 2 != 0:
        raise ParityError("top Chern class needs an even number of variables")
    return chern_forms(m, alg).top


@dataclass
class ThetaResidueReport:
    t_matrix: list        # Theta values
    r_matrix: list        # signed residue pairings of top Chern classes
    scalar: Fraction = None
    consistent: bool = False
    degenerate: bool = False
    notes: tuple = ()


def theta_vs_residue(modules, f: Poly, order=None) -> ThetaResidueReport:
    """Compare the Theta Gram matrix against the residue pairing of top
    Chern classes: T = c * R for one rational scalar c.

    R_ij = (-1)^{n(n-1)/2} res(g_i * g_j) where g_i is the top Chern
    class; DEGENERATE (trivially consistent) when both matrices vanish.
    """
    from .theta import _to_mf, periodic_tor_lengths, _to_presentation
    from .errors import FreeModuleError

    nvars = f.nvars
    n = nvars - 1
    if nvars % 2 != 0:
        raise ParityError("the comparison needs an even number of variables")
    alg = milnor_algebra(f)
    data = residue_functional(alg)
    sign = (-1) ** ((n * (n - 1)) // 2)

    mfs = []
    for mod in modules:
        try:
            mfs.append(_to_mf(mod, f, order))
        except FreeModuleError:
            mfs.append(None)
    press = [_to_presentation(mod, f) for mod in modules]
    k = len(modules)
    zero = Poly.zero(nvars)
    tops = [chern_top_class(mf, alg) if mf is not None else zero for mf in mfs]

    T = [[Fraction(0)] * k for _ in range(k)]
    R = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if mfs[i] is not None:
                le, lo = periodic_tor_lengths(mfs[i], press[j], order)
                T[i][j] = Fraction(le - lo)
            R[i][j] = sign * residue(alg, data, tops[i] * tops[j])

    first = next(((i, j) for i in range(k) for j in range(k) if R[i][j]), None)
    if first is None:
        if any(T[i][j] for i in range(k) for j in range(k)):
            return ThetaResidueReport(T, R, consistent=False,
                                      notes=("residue matrix vanishes but "
                                             "Theta does not",))
        return ThetaResidueReport(T, R, degenerate=True, consistent=True,
                                  notes=("both matrices vanish; scalar "
                                         "undetermined",))
    i0, j0 = first
    c = T[i0][j0] / R[i0][j0]
    ok = all(T[i][j] == c * R[i][j] for i in range(k) for j in range(k))
    return ThetaResidueReport(T, R, scalar=c, consistent=ok)


def free_factorization(f: Poly) -> MatrixFactorization:
    """The trivial factorization ((1),(f)) presenting the zero module."""
    one = Poly.const(1, f.nvars)
    return mf_validate([[one]], [[f]], f)
