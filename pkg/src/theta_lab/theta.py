"""Stable Tor lengths and the Theta pairing of a hypersurface singularity.

A matrix factorization (A, B) of f gives the eventually 2-periodic free
resolution of coker(A) over R = P/(f).  Tensoring it with a second
module N and taking homology lengths yields the two stable Tor lengths;
their difference is the Theta pairing.  Gram matrices of pairwise Theta
values get exact PSD verdicts via the psd module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FreeModuleError, InfiniteLengthError, NotProperError
from .localstd import VecPoly, length_of_quotient, preimage
from .mf import MatrixFactorization, ModulePresentation, mf_from_module
from .poly import LocalOrder, Poly
from .psd import PSDCertificate, ldlt_psd


@dataclass
class ThetaReport:
    l_even: int
    l_odd: int
    theta: int
    n: int                    # ambient dimension: number of variables - 1
    sign_factor: int = None   # (-1)^((n+1)/2) when n is odd, else None


@dataclass
class GramVerdict:
    matrix: list              # pairwise Theta values, Fractions
    signed: list = None       # sign_factor * matrix (odd n only)
    psd: bool = None          # None when the PSD check is not applicable
    certificate: PSDCertificate = None
    n: int = 0
    sign_factor: int = None
    notes: tuple = ()


def _block_columns(mat, s, nvars):
    """Columns of the p x p matrix acting blockwise on (P^s)^p.

    The free module N^p is coordinatized as P^{s*p} with position
    block*s + component; entry mat[i][j] maps block j to block i.
    """
    p = len(mat)
    zero = Poly.zero(nvars)
    cols = []
    for j in range(p):
        for c in range(s):
            comps = [zero] * (s * p)
            for i in range(p):
                if mat[i][j]:
                    comps[i * s + c] = mat[i][j]
            cols.append(VecPoly(comps))
    return cols


def _relation_blocks(pres: ModulePresentation, p: int):
    """The relations of N placed in every block of N^p."""
    s = pres.rank
    nvars = pres.f.nvars
    rels = pres.relation_vectors()
    out = []
    for block in range(p):
        for r in rels:
            comps = [Poly.zero(nvars)] * (s * p)
            for c in range(s):
                comps[block * s + c] = r.components[c]
            out.append(VecPoly(comps))
    return out


def _homology_length(out_cols, in_cols, sub_gens, order) -> int:
    """Length of ker(out)/im(in) on (P^{sp}/sub)^1, all maps blockwise."""
    h_gens = preimage(out_cols, sub_gens, order)
    h_gens = [h for h in h_gens if h]
    if not h_gens:
        return 0
    k_gens = preimage(h_gens, in_cols + sub_gens, order)
    k_gens = [k for k in k_gens if k]
    res = length_of_quotient(k_gens, rank=len(h_gens), order=order)
    if not res.finite:
        raise InfiniteLengthError(
            "homology has infinite length; the supports do not meet only "
            "at the origin")
    return res.value


def periodic_tor_lengths(mfM: MatrixFactorization, N: ModulePresentation,
                         order: LocalOrder = None):
    """Stable even/odd Tor lengths of (coker A, coker of N).

    Returns (l_even, l_odd) with l_even = dim ker(B tensor N)/im(A tensor N)
    and l_odd the same with the roles swapped, both on N^p.
    """
    nvars = mfM.f.nvars
    if order is None:
        order = LocalOrder(nvars)
    s = N.rank
    a_cols = _block_columns(mfM.a, s, nvars)
    b_cols = _block_columns(mfM.b, s, nvars)
    sub = _relation_blocks(N, mfM.size)
    l_even = _homology_length(b_cols, a_cols, sub, order)
    l_odd = _homology_length(a_cols, b_cols, sub, order)
    return l_even, l_odd


def _to_presentation(module, f: Poly) -> ModulePresentation:
    if isinstance(module, ModulePresentation):
        return module
    if isinstance(module, MatrixFactorization):
        p = module.size
        return ModulePresentation(p, module.columns("a"), f)
    return ModulePresentation.from_ideal(list(module), f)


def _to_mf(module, f: Poly, order):
    if isinstance(module, MatrixFactorization):
        return module
    return mf_from_module(_to_presentation(module, f), order)


def theta(M, N, f: Poly, order: LocalOrder = None) -> ThetaReport:
    """The Theta pairing of two R-modules, R = P/(f).

    Module inputs are ideal generator lists, ModulePresentations or
    MatrixFactorizations.  The first argument is converted to a matrix
    factorization; a free first argument gives Theta = 0 directly.
    """
    nvars = f.nvars
    if order is None:
        order = LocalOrder(nvars)
    n = nvars - 1
    sign = (-1) ** ((n + 1) // 2) if n % 2 == 1 else None
    try:
        mfM = _to_mf(M, f, order)
    except FreeModuleError:
        return ThetaReport(0, 0, 0, n, sign)
    l_even, l_odd = periodic_tor_lengths(mfM, _to_presentation(N, f), order)
    return ThetaReport(l_even, l_odd, l_even - l_odd, n, sign)


def gram(modules, f: Poly, order: LocalOrder = None) -> GramVerdict:
    """Pairwise Theta matrix with a certified PSD verdict on the signed
    matrix when n is odd; for even n the PSD check is marked not
    applicable."""
    nvars = f.nvars
    if order is None:
        order = LocalOrder(nvars)
    n = nvars - 1
    k = len(modules)

    mfs = []
    press = []
    for m in modules:
        press.append(_to_presentation(m, f))
        try:
            mfs.append(_to_mf(m, f, order))
        except FreeModuleError:
            mfs.append(None)

    G = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if mfs[i] is None:
                continue
            le, lo = periodic_tor_lengths(mfs[i], press[j], order)
            G[i][j] = Fraction(le - lo)

    notes = []
    for i in range(k):
        for j in range(i + 1, k):
            if G[i][j] != G[j][i]:
                notes.append(f"symmetry violated at ({i},{j}): "
                             f"{G[i][j]} vs {G[j][i]}")

    if n % 2 == 0:
        notes.append("PSD check NOT_APPLICABLE: n is even")
        return GramVerdict(G, n=n, notes=tuple(notes))

    sign = (-1) ** ((n + 1) // 2)
    signed = [[sign * v for v in row] for row in G]
    cert = ldlt_psd(signed)
    return GramVerdict(G, signed=signed, psd=cert.psd, certificate=cert,
                       n=n, sign_factor=sign, notes=tuple(notes))


def intersection_multiplicity(I, J, order: LocalOrder = None) -> int:
    """l(P/(I+J)), the intersection multiplicity at the origin when the
    two ideals are Tor-independent.  NotProperError when V(I) and V(J)
    meet outside the origin (infinite length)."""
    gens = list(I) + list(J)
    res = length_of_quotient(gens, rank=1, order=order)
    if not res.finite:
        raise NotProperError("V(I) and V(J) meet outside the origin")
    return res.value


def homogeneous_theta_formula(d, degY, degZ, YZ) -> Fraction:
    """Theta of two cones over smooth projective subvarieties of a degree-d
    hypersurface, from their topological data: -d*[Y].[Z] + deg(Y)*deg(Z)."""
    return -Fraction(d) * Fraction(YZ) + Fraction(degY) * Fraction(degZ)
