"""Exact positive-semidefiniteness certificates for rational matrices.

Pivoted LDL^T over Fraction: either every pivot is nonnegative and the
pivot list certifies PSD, or back-substitution produces an explicit
vector v with v^T S v < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class PSDCertificate:
    psd: bool
    pivots: list = None   # (original index, pivot value) in elimination order
    witness: list = None  # vector v with v^T S v < 0


def _quadratic_form(S, v):
    n = len(S)
    return sum(v[i] * S[i][j] * v[j] for i in range(n) for j in range(n))


def ldlt_psd(S) -> PSDCertificate:
    """Decide PSD for a symmetric rational matrix, with certificate.

    Pivoting picks the largest remaining diagonal entry first.  The
    returned witness (if any) is verified against the input before
    returning.
    """
    n = len(S)
    S = [[Fraction(S[i][j]) for j in range(n)] for i in range(n)]
    orig = [row[:] for row in S]
    # E[j] = current basis vector j in original coordinates
    E = [[Fraction(1) if i == j else Fraction(0) for i in range(n)] for j in range(n)]
    active = list(range(n))
    pivots = []

    def certify_negative(v):
        val = _quadratic_form(orig, v)
        assert val < 0, "internal error: witness is not negative"
        return PSDCertificate(False, pivots=pivots, witness=v)

    while active:
        i = max(active, key=lambda k: (S[k][k], -k))
        if S[i][i] < 0:
            return certify_negative(E[i])
        if S[i][i] == 0:
            # max diagonal is zero, so every remaining diagonal is <= 0
            neg = [k for k in active if S[k][k] < 0]
            if neg:
                return certify_negative(E[neg[0]])
            off = [(k, l) for k in active for l in active if k < l and S[k][l]]
            if not off:
                pivots.extend((k, Fraction(0)) for k in active)
                return PSDCertificate(True, pivots=pivots)
            k, l = off[0]
            # diag entries are zero here, so value = 2*t*S[k][l] with t = -1/S[k][l]
            t = Fraction(-1) / S[k][l]
            v = [t * a + b for a, b in zip(E[k], E[l])]
            return certify_negative(v)
        piv = S[i][i]
        pivots.append((i, piv))
        active.remove(i)
        for j in active:
            factor = S[j][i] / piv
            if factor:
                E[j] = [a - factor * b for a, b in zip(E[j], E[i])]
                for k in active:
                    S[j][k] -= factor * S[i][k]
                S[j][i] = Fraction(0)
        for k in active:
            S[i][k] = Fraction(0)
    return PSDCertificate(True, pivots=pivots)


def psd_rank(cert: PSDCertificate) -> int:
    """Number of strictly positive pivots of a PSD certificate."""
    if not cert.psd:
        raise ValueError("rank via pivots is only meaningful for PSD matrices")
    return sum(1 for _, p in cert.pivots if p > 0)
