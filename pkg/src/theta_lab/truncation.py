"""Truncation oracle: independent length/homology computations.

Everything here works in the finite-dimensional algebra P/m^K by sparse
Gaussian elimination over exact rationals.  It shares no code with the
Mora engine and exists as a second, slower route used by tests and by
the CLI's --oracle-check flag.  Disagreement with the standard-basis
route is a hard failure, never auto-resolved.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .poly import Poly, mono_deg, mono_mul


def monomials_below(nvars: int, bound: int):
    """All exponent tuples of total degree < bound, in a fixed order."""
    if bound <= 0:
        return []
    out = [m for m in product(range(bound), repeat=nvars) if sum(m) < bound]
    out.sort(key=lambda m: (sum(m), m))
    return out


class SparseEchelon:
    """Incremental row echelon form over Fraction with sparse rows.

    Rows are dicts mapping hashable column labels to nonzero Fractions.
    Pivot rows are normalized to coefficient 1 at their pivot label.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = dict(row)
        while True:
            hit = None
            for c in row:
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                return row
            coef = row.pop(hit)
            for cc, vv in self.pivots[hit].items():
                if cc == hit:
                    continue
                s = row.get(cc, 0) - coef * vv
                if s:
                    row[cc] = s
                else:
                    row.pop(cc, None)

    def add(self, row) -> bool:
        """Insert a row; returns True if the rank grew."""
        r = self.reduce(row)
        if not r:
            return False
        piv = min(r, key=_label_key)
        inv = Fraction(1) / r[piv]
        self.pivots[piv] = {c: v * inv for c, v in r.items()}
        return True

    def contains(self, row) -> bool:
        return not self.reduce(row)


def _label_key(label):
    return (str(type(label)), label)


class TrackedEchelon(SparseEchelon):
    """Echelon that also tracks row combinations (for kernel vectors)."""

    def __init__(self):
        super().__init__()
        self.tags = {}

    def add_tracked(self, row, tag):
        """Insert row with tag; returns the tag-combination when the row
        reduces to zero (a kernel element), else None."""
        row = dict(row)
        tag = dict(tag)
        while True:
            hit = None
            for c in row:
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                break
            coef = row.pop(hit)
            for cc, vv in self.pivots[hit].items():
                if cc == hit:
                    continue
                s = row.get(cc, 0) - coef * vv
                if s:
                    row[cc] = s
                else:
                    row.pop(cc, None)
            for cc, vv in self.tags[hit].items():
                s = tag.get(cc, 0) - coef * vv
                if s:
                    tag[cc] = s
                else:
                    tag.pop(cc, None)
        if not row:
            return tag
        piv = min(row, key=_label_key)
        inv = Fraction(1) / row[piv]
        self.pivots[piv] = {c: v * inv for c, v in row.items()}
        self.tags[piv] = {c: v * inv for c, v in tag.items()}
        return None


def _vec_to_row(vec_components, bound):
    """Flatten a list of Poly (one per position) into a sparse row keyed
    by (position, monomial), truncated below total degree `bound`."""
    row = {}
    for pos, p in enumerate(vec_components):
        for m, c in p.terms.items():
            if mono_deg(m) < bound:
                row[(pos, m)] = c
    return row


def _submodule_rows(gens, bound, positions):
    """Rows spanning the image of the submodule in (P/m^bound)^positions.

    gens: list of lists of Poly (vectors); every monomial multiple whose
    shift keeps some term below the truncation is included.
    """
    nvars = gens[0][0].nvars
    rows = []
    for g in gens:
        ordg = min((p.order() for p in g if p), default=None)
        if ordg is None:
            continue
        for m in monomials_below(nvars, bound - ordg):
            shifted = [Poly({mono_mul(m, mm): c for mm, c in p.terms.items()}, nvars)
                       for p in g]
            row = _vec_to_row(shifted, bound)
            if row:
                rows.append(row)
    return rows


def oracle_length(gens, rank: int, bound: int) -> int:
    """dim of (P/m^bound)^rank modulo the truncated submodule image.

    Equals the true quotient length whenever that is finite and `bound`
    exceeds the largest standard-monomial degree; callers must compare
    two bounds for stability.
    """
    gens = [[p for p in g] for g in gens]
    nvars = gens[0][0].nvars
    ech = SparseEchelon()
    for row in _submodule_rows(gens, bound, rank):
        ech.add(row)
    total = rank * len(monomials_below(nvars, bound))
    return total - ech.rank


def oracle_membership(vec, gens, bound: int) -> bool:
    """Truncated membership: vec in submodule + m^bound."""
    ech = SparseEchelon()
    for row in _submodule_rows(gens, bound, len(vec)):
        ech.add(row)
    return ech.contains(_vec_to_row(vec, bound))


def _block_map_rows(matrix, vec_key, s, bound):
    """Apply the p x p matrix blockwise to a unit vector of (P^s)^p.

    vec_key = (position, monomial) with position = block*s + comp.
    Returns the (exact, untruncated-below-bound) image row.
    """
    pos, m = vec_key
    block, comp = divmod(pos, s)
    row = {}
    for i in range(len(matrix)):
        entry = matrix[i][block]
        for mm, c in entry.terms.items():
            key = (i * s + comp, mono_mul(mm, m))
            if mono_deg(key[1]) < bound:
                s2 = row.get(key, 0) + c
                if s2:
                    row[key] = s2
                else:
                    row.pop(key, None)
    return row


def oracle_homology_length(mat_out, mat_in, sub_gens, s: int, bound: int) -> int:
    """Length of ker(mat_out)/im(mat_in) on N^p, N = (P/sub)^s / relations.

    mat_out, mat_in: p x p Poly matrices (the two halves of a periodic
    complex).  sub_gens: list of rank-s vectors (lists of Poly) whose
    multiples, together with nothing else, present N.  `bound` is the
    middle truncation; the kernel condition is tested at a higher level
    so that no truncation happens while applying mat_out.
    """
    p = len(mat_out)
    nvars = sub_gens[0][0].nvars
    dmax = max((e.degree() for row in mat_out for e in row if e), default=0)
    hi = bound + dmax + 1

    sub_blocks = []
    for block in range(p):
        for g in sub_gens:
            vec = [Poly.zero(nvars) for _ in range(s * p)]
            for c in range(s):
                vec[block * s + c] = g[c]
            sub_blocks.append(vec)

    ech_hi = SparseEchelon()
    for row in _submodule_rows(sub_blocks, hi, s * p):
        ech_hi.add(row)

    # kernel of mat_out modulo relations, tested at the high level
    keys = [(pos, m) for pos in range(s * p) for m in monomials_below(nvars, bound)]
    tracker = TrackedEchelon()
    kernel = []
    for idx, key in enumerate(keys):
        image = _block_map_rows(mat_out, key, s, hi)
        residual = ech_hi.reduce(image)
        tag = tracker.add_tracked(residual, {idx: Fraction(1)})
        if tag is not None:
            kernel.append(tag)

    # span of im(mat_in) + relations at the middle level
    ech_w = SparseEchelon()
    for row in _submodule_rows(sub_blocks, bound, s * p):
        ech_w.add(row)
    for key in keys:
        row = _block_map_rows(mat_in, key, s, bound)
        if row:
            ech_w.add(row)

    # count kernel vectors independent modulo W
    count = 0
    for tag in kernel:
        vec = {}
        for idx, coef in tag.items():
            pos, m = keys[idx]
            s2 = vec.get((pos, m), 0) + coef
            if s2:
                vec[(pos, m)] = s2
            else:
                vec.pop((pos, m), None)
        if ech_w.add(vec):
            count += 1
    return count
