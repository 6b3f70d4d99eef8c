"""Matrix factorizations of an isolated hypersurface polynomial.

A factorization is a pair of square matrices (A, B) over P with
A*B = B*A = f*I.  The extractor turns a module presentation over
R = P/(f) into such a pair by iterated syzygies, minimalizing the
presentation at each step and completing the second matrix by lifting
f*I through the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FreeModuleError, NotAFactorizationError, ThetaLabError
from .localstd import VecPoly, lift, normal_form, std_basis, syzygies
from .poly import LocalOrder, Poly


def _mat_mul(A, B, nvars):
    p = len(A)
    q = len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Poly.zero(nvars))
             for j in range(q)] for i in range(p)]


def _identity(p, nvars, scale=None):
    one = Poly.const(1, nvars) if scale is None else scale
    zero = Poly.zero(nvars)
    return [[one if i == j else zero for j in range(p)] for i in range(p)]


@dataclass
class MatrixFactorization:
    a: list  # p x p matrices of Poly
    b: list
    f: Poly
    size: int

    def columns(self, which="a"):
        mat = self.a if which == "a" else self.b
        return [VecPoly([mat[i][j] for i in range(self.size)]) for j in range(self.size)]


@dataclass
class ModulePresentation:
    """Cokernel presentation of an R-module: columns are relations in P^rank.

    Multiples of f on each basis vector are implicit relations (the
    cokernel is an R-module by construction)."""

    rank: int
    columns: list  # list of VecPoly
    f: Poly

    @staticmethod
    def from_ideal(gens, f: Poly) -> "ModulePresentation":
        cols = [VecPoly([g]) if isinstance(g, Poly) else g for g in gens]
        return ModulePresentation(1, cols, f)

    def relation_vectors(self):
        """Columns plus the implicit f*e_j relations."""
        nvars = self.f.nvars
        out = list(self.columns)
        for j in range(self.rank):
            out.append(VecPoly.unit_vector(j, self.rank, nvars, scale=self.f))
        return out

    def validate(self, order: LocalOrder = None):
        """Check f annihilates the cokernel (vacuous here: relations are
        extended by f*e_j), and ranks agree."""
        for c in self.columns:
            if c.rank != self.rank:
                raise ThetaLabError("presentation column rank mismatch")
        return self


def mf_validate(A, B, f: Poly) -> MatrixFactorization:
    """Check A*B = B*A = f*I and wrap the pair."""
    p = len(A)
    if any(len(row) != p for row in A) or len(B) != p or any(len(r) != p for r in B):
        raise NotAFactorizationError("matrices must be square and of equal size")
    nvars = f.nvars
    for name, prod in (("A*B", _mat_mul(A, B, nvars)), ("B*A", _mat_mul(B, A, nvars))):
        for i in range(p):
            for j in range(p):
                want = f if i == j else Poly.zero(nvars)
                if prod[i][j] != want:
                    delta = prod[i][j] - want
                    raise NotAFactorizationError(
                        f"{name} differs from f*I at entry ({i},{j}): "
                        f"offending difference {delta!r}")
    return MatrixFactorization(A, B, f, p)


def mf_direct_sum(m1: MatrixFactorization, m2: MatrixFactorization) -> MatrixFactorization:
    if m1.f != m2.f:
        raise ThetaLabError("direct sum requires the same hypersurface polynomial")
    nvars = m1.f.nvars
    zero = Poly.zero(nvars)
    p, q = m1.size, m2.size

    def block(x, y):
        out = [[zero] * (p + q) for _ in range(p + q)]
        for i in range(p):
            for j in range(p):
                out[i][j] = x[i][j]
        for i in range(q):
            for j in range(q):
                out[p + i][p + j] = y[i][j]
        return out

    return MatrixFactorization(block(m1.a, m2.a), block(m1.b, m2.b), m1.f, p + q)


def mf_shift(m: MatrixFactorization) -> MatrixFactorization:
    """The odd shift: swap the two matrices.  Involutive."""
    return MatrixFactorization(m.b, m.a, m.f, m.size)


def _prune_redundant_columns(cols, rank, f, order):
    """Drop columns lying in the module generated by the others plus f*e_j."""
    nvars = f.nvars
    f_rels = [VecPoly.unit_vector(j, rank, nvars, scale=f) for j in range(rank)]
    kept = list(cols)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:] + f_rels
            others = [o for o in others if o]
            if not others:
                continue
            basis = std_basis(others, order)
            if basis.contains(kept[i]):
                kept.pop(i)
                changed = True
                break
    return [c for c in kept if c]


def _minimalize(cols, rank, order):
    """Remove unit entries by unit row/column operations.

    Returns (columns, rank, dropped_free_rows) where dropped_free_rows
    counts rows that became zero (free summands of the cokernel, split
    off as the stable theory allows)."""
    if not cols:
        return [], rank, 0
    nvars = cols[0].nvars
    mat = [[c.components[i] for c in cols] for i in range(rank)]  # rank x ncols
    dropped = 0
    while True:
        pivot = None
        for i in range(len(mat)):
            for j in range(len(mat[0]) if mat else 0):
                if mat[i][j].is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        u = mat[i][j]
        # clear row i in the other columns (column ops, scaling by units)
        for k in range(len(mat[0])):
            if k != j and mat[i][k]:
                a = mat[i][k]
                for r in range(len(mat)):
                    mat[r][k] = u * mat[r][k] - a * mat[r][j]
        # clear column j in the other rows (row ops, scaling by units)
        for r in range(len(mat)):
            if r != i and mat[r][j]:
                a = mat[r][j]
                for k in range(len(mat[0])):
                    mat[r][k] = u * mat[r][k] - a * mat[i][k]
        mat = [row[:j] + row[j + 1:] for ri, row in enumerate(mat) if ri != i]
        if not mat or not mat[0]:
            break
    # drop zero columns; split off zero rows (free summands)
    if mat:
        ncols = len(mat[0])
        keep_rows = [r for r in range(len(mat)) if any(mat[r][k] for k in range(ncols))]
        dropped = len(mat) - len(keep_rows)
        mat = [mat[r] for r in keep_rows]
    if not mat:
        return [], 0, dropped
    ncols = len(mat[0])
    cols_out = [VecPoly([mat[r][k] for r in range(len(mat))]) for k in range(ncols)]
    cols_out = [c for c in cols_out if c]
    return cols_out, len(mat), dropped


def _syzygies_over_r(cols, rank, f, order):
    """Relations among cols over R = P/(f): syzygies over P of the columns
    together with f*e_j, projected to the column coordinates."""
    nvars = f.nvars
    f_rels = [VecPoly.unit_vector(j, rank, nvars, scale=f) for j in range(rank)]
    syz = syzygies(cols + f_rels, order)
    t = len(cols)
    out = []
    for s in syz:
        head = VecPoly(s.components[:t])
        if head:
            out.append(head)
    return out


def mf_from_module(pres: ModulePresentation, order: LocalOrder = None,
                   max_steps: int = None) -> MatrixFactorization:
    """Extract a matrix factorization presenting the stable syzygy of the
    cokernel of `pres`.

    Takes syzygies over R until the minimalized presentation is square
    and f*I lifts through it, then completes the pair.  An odd number of
    syzygy steps is compensated by a shift so that the returned cokernel
    agrees with the input module in every stable homological degree.
    """
    f = pres.f
    nvars = f.nvars
    if order is None:
        order = LocalOrder(nvars)
    if max_steps is None:
        max_steps = nvars + 3

    cols = list(pres.columns)
    rank = pres.rank
    steps = 0
    for _ in range(max_steps + 1):
        cols = _prune_redundant_columns(cols, rank, f, order)
        cols, rank, _ = _minimalize(cols, rank, order)
        if not cols or rank == 0:
            raise FreeModuleError(
                "cokernel is free: finite projective dimension, no factorization")
        if len(cols) == rank:
            square = [[cols[j].components[i] for j in range(rank)] for i in range(rank)]
            b = _complete_pair(square, f, order)
            if b is not None:
                mf = mf_validate(square, b, f)
                if steps % 2 == 1:
                    mf = mf_shift(mf)
                return mf
        new_rank = len(cols)
        cols = _syzygies_over_r(cols, rank, f, order)
        rank = new_rank
        steps += 1
    raise ThetaLabError("presentation did not stabilize to a matrix factorization")


def _complete_pair(A, f, order):
    """Solve A*B = f*I over the local ring with polynomial B.

    None when some f*e_j is not in the column span, or when its lift
    carries a non-constant unit denominator (the presentation is not a
    matrix factorization yet; another syzygy step will replace it)."""
    p = len(A)
    nvars = f.nvars
    cols = [VecPoly([A[i][j] for i in range(p)]) for j in range(p)]
    basis = std_basis(cols, order, track=True)
    bcols = []
    for j in range(p):
        target = VecPoly.unit_vector(j, p, nvars, scale=f)
        if normal_form(target, basis.generators, order):
            return None
        coeffs = lift(target, cols, order, basis=basis)
        den = coeffs[0][1]
        if den != Poly.const(1, nvars):
            return None
        bcols.append([num for num, _ in coeffs])
    return [[bcols[j][i] for j in range(p)] for i in range(p)]
