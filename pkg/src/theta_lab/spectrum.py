"""Quasi-homogeneous grading of the Milnor algebra.

For f quasi-homogeneous of weight 1 under positive rational weights w,
each basis monomial b of A_f carries the level l(b) = sum((b_i+1)*w_i).
The level grading splits the residue pairing into complementary blocks
(l + l' = n+1) and determines a Hodge index p(b) and the sign operator
acting by (-1)^{p(b)} on graded pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .errors import NotQuasiHomogeneousError
from .milnor import (MilnorAlgebra, milnor_algebra, rational_det, residue,
                     residue_functional, residue_pairing_matrix)
from .poly import Poly, mono_mul


def check_weights(f: Poly, w) -> tuple:
    """Validate that f is quasi-homogeneous of total weight 1 under w."""
    w = tuple(Fraction(x) for x in w)
    if len(w) != f.nvars:
        raise NotQuasiHomogeneousError("weight count does not match variables")
    if any(x <= 0 for x in w):
        raise NotQuasiHomogeneousError("weights must be positive")
    for m in f.terms:
        total = sum(a * wi for a, wi in zip(m, w))
        if total != 1:
            raise NotQuasiHomogeneousError(
                f"monomial {m} has weight {total}, expected 1")
    return w


@dataclass
class SpectrumEntry:
    monomial: tuple
    level: Fraction            # sum((b_i + 1) * w_i), lies in (0, n+1)
    unipotent: bool            # eigenvalue 1 part: level is an integer
    p: int                     # Hodge index
    ctilde_sign: int           # (-1)^p


def _hodge_index(level: Fraction, n: int) -> int:
    if level.denominator == 1:
        return n + 1 - int(level)
    return n + 1 - ceil(level)


def spectrum(f: Poly, w, alg: MilnorAlgebra = None):
    """One SpectrumEntry per basis monomial of A_f, sorted by level."""
    w = check_weights(f, w)
    if alg is None:
        alg = milnor_algebra(f)
    n = f.nvars - 1
    entries = []
    for b in alg.basis:
        level = sum((bi + 1) * wi for bi, wi in zip(b, w))
        p = _hodge_index(level, n)
        entries.append(SpectrumEntry(b, level, level.denominator == 1,
                                     p, (-1) ** p))
    entries.sort(key=lambda e: (e.level, e.monomial))
    return entries


@dataclass
class OrthogonalityReport:
    ok: bool
    violations: list           # (b, b', level sum, residue value)
    block_dets: dict           # level -> determinant of the block against n+1-level
    nondegenerate: bool


def graded_orthogonality_check(f: Poly, w, alg: MilnorAlgebra = None,
                               data=None) -> OrthogonalityReport:
    """res(b*b') = 0 off complementary levels; complementary blocks are
    nondegenerate."""
    if alg is None:
        alg = milnor_algebra(f)
    if data is None:
        data = residue_functional(alg)
    entries = spectrum(f, w, alg)
    n = f.nvars - 1
    target = Fraction(n + 1)

    violations = []
    for e1 in entries:
        for e2 in entries:
            val = residue(alg, data, Poly.monomial(mono_mul(e1.monomial,
                                                            e2.monomial)))
            if val and e1.level + e2.level != target:
                violations.append((e1.monomial, e2.monomial,
                                   e1.level + e2.level, val))

    block_dets = {}
    nondeg = True
    levels = sorted({e.level for e in entries})
    for lev in levels:
        rows = [e for e in entries if e.level == lev]
        cols = [e for e in entries if e.level == target - lev]
        if len(rows) != len(cols):
            nondeg = False
            block_dets[lev] = Fraction(0)
            continue
        block = [[residue(alg, data,
                          Poly.monomial(mono_mul(r.monomial, c.monomial)))
                  for c in cols] for r in rows]
        det = rational_det(block)
        block_dets[lev] = det
        if not det:
            nondeg = False
    return OrthogonalityReport(not violations and nondeg, violations,
                               block_dets, nondeg)


def ctilde_twisted_pairing(f: Poly, w, alg: MilnorAlgebra = None, data=None):
    """Matrix res(b_i * b_j) * (-1)^{p(b_j)}, the residue pairing twisted
    by the sign operator on the graded pieces."""
    if alg is None:
        alg = milnor_algebra(f)
    if data is None:
        data = residue_functional(alg)
    w = check_weights(f, w)
    n = f.nvars - 1
    signs = {}
    for b in alg.basis:
        level = sum((bi + 1) * wi for bi, wi in zip(b, w))
        signs[b] = (-1) ** _hodge_index(level, n)
    out = []
    for bi in alg.basis:
        row = []
        for bj in alg.basis:
            val = residue(alg, data, Poly.monomial(mono_mul(bi, bj)))
            row.append(val * signs[bj])
        out.append(row)
    return out
