"""Standard bases over the local ring at the origin.

Implements Mora's tangent-cone algorithm (ecart-driven weak normal form)
for submodules of free modules P^r, together with the services built on
it: membership, lengths of finite quotients, syzygies and lifts.  The
module order is position-over-term on top of the local order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import NotInModuleError, RankMismatchError
from .poly import LocalOrder, Poly, mono_deg, mono_div, mono_divides


class VecPoly:
    """Element of a free module P^rank, stored as a list of Poly."""

    __slots__ = ("components", "rank", "nvars")

    def __init__(self, components, rank=None):
        self.components = list(components)
        self.rank = len(self.components) if rank is None else rank
        if len(self.components) != self.rank:
            raise RankMismatchError("component count does not match rank")
        self.nvars = self.components[0].nvars

    @staticmethod
    def from_poly(p: Poly) -> "VecPoly":
        return VecPoly([p])

    @staticmethod
    def unit_vector(c: int, rank: int, nvars: int, scale=None) -> "VecPoly":
        comps = [Poly.zero(nvars) for _ in range(rank)]
        comps[c] = Poly.const(1, nvars) if scale is None else scale
        return VecPoly(comps)

    def __bool__(self):
        return any(self.components)

    def __eq__(self, other):
        return isinstance(other, VecPoly) and self.components == other.components

    def __add__(self, other):
        return VecPoly([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return VecPoly([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return VecPoly([-a for a in self.components])

    def scale(self, p) -> "VecPoly":
        return VecPoly([a * p for a in self.components])

    def degree(self):
        return max((a.degree() for a in self.components if a), default=-1)

    def leading(self, order: LocalOrder):
        """(component, monomial, coefficient) of the largest term, with
        position-over-term: lower component index dominates."""
        best = None
        for c, p in enumerate(self.components):
            if not p:
                continue
            m, coef = p.leading(order)
            if best is None:
                best = (c, m, coef)
            break  # POT: first nonzero component wins
        return best

    def ecart(self, order: LocalOrder):
        c, m, _ = self.leading(order)
        return self.degree() - mono_deg(m)

    def truncate(self, bound):
        return VecPoly([p.truncate(bound) for p in self.components])

    def __repr__(self):
        return f"VecPoly({self.components!r})"


def _as_vec(g, rank=None):
    if isinstance(g, Poly):
        return VecPoly([g])
    return g


def _check_ranks(vecs):
    ranks = {v.rank for v in vecs}
    if len(ranks) > 1:
        raise RankMismatchError(f"mixed ranks {sorted(ranks)}")


class _Tracked:
    """A vector together with its representation u*v0 + sum(a_i * g_i)."""

    __slots__ = ("vec", "u", "a")

    def __init__(self, vec, u, a):
        self.vec = vec
        self.u = u
        self.a = a


def _mora_core(target: VecPoly, gens, order: LocalOrder, track: bool):
    """Mora weak normal form.

    When track is True the invariant r == u*target + sum(a_i * gens_i)
    holds for the returned (r, u, a), with u a unit of the local ring.
    Otherwise u and a are None.
    """
    nvars = target.nvars
    one = Poly.const(1, nvars)
    zero = Poly.zero(nvars)

    if track:
        T = [_Tracked(g, zero, [one if i == j else zero for j in range(len(gens))])
             for i, g in enumerate(gens)]
        h = _Tracked(target, one, [zero] * len(gens))
    else:
        T = [_Tracked(g, None, None) for g in gens]
        h = _Tracked(target, None, None)

    while h.vec:
        hc, hm, hcoef = h.vec.leading(order)
        # reducers: same component, lead monomial divides; minimal ecart,
        # earliest in T on ties
        best = None
        for t in T:
            tc, tm, _ = t.vec.leading(order)
            if tc != hc or not mono_divides(tm, hm):
                continue
            e = t.vec.degree() - mono_deg(tm)
            if best is None or e < best[0]:
                best = (e, t)
        if best is None:
            break
        e_t, t = best
        e_h = h.vec.degree() - mono_deg(hm)
        if e_t > e_h:
            # stash the intermediate result so later steps may reduce by it
            T.append(_Tracked(h.vec, h.u, list(h.a) if track else None))
        tc, tm, tcoef = t.vec.leading(order)
        q = Poly.monomial(mono_div(hm, tm), hcoef / tcoef)
        newvec = h.vec - t.vec.scale(q)
        if track:
            h = _Tracked(newvec, h.u - t.u * q,
                         [ha - ta * q for ha, ta in zip(h.a, t.a)])
        else:
            h = _Tracked(newvec, None, None)
    return h.vec, h.u, h.a


def normal_form(v, basis, order: LocalOrder = None):
    """Mora weak normal form of v against the given generators.

    The result r satisfies u*v = (element of the submodule) + r for some
    local unit u; in particular r == 0 iff v lies in the submodule
    generated by `basis` *when `basis` is a standard basis*.
    """
    v = _as_vec(v)
    basis = [_as_vec(g) for g in basis]
    _check_ranks([v] + basis)
    if order is None:
        order = LocalOrder(v.nvars)
    r, _, _ = _mora_core(v, [g for g in basis if g], order, track=False)
    return r


@dataclass
class StdBasis:
    """Standard basis of a submodule of P^rank for a local order."""

    generators: list
    order: LocalOrder
    rank: int
    leading_terms: list  # (component, monomial) per generator
    input_gens: list = None
    t_matrix: list = None  # columns: each generator as a combination of input_gens

    def contains(self, v) -> bool:
        return not normal_form(v, self.generators, self.order)


def _spoly(gi, gj, order):
    ci, mi, li = gi.leading(order)
    cj, mj, lj = gj.leading(order)
    lcm = tuple(max(a, b) for a, b in zip(mi, mj))
    qi = Poly.monomial(mono_div(lcm, mi), Fraction(1) / li)
    qj = Poly.monomial(mono_div(lcm, mj), Fraction(1) / lj)
    return gi.scale(qi) - gj.scale(qj), qi, qj


def std_basis(gens, order: LocalOrder = None, track: bool = False) -> StdBasis:
    """Mora's tangent-cone algorithm.

    With track=True the result carries t_matrix, expressing every basis
    element as a polynomial combination of the input generators.
    """
    gens = [_as_vec(g) for g in gens]
    nonzero = [g for g in gens if g]
    if not nonzero:
        raise ValueError("no nonzero generators")
    _check_ranks(gens)
    nvars = nonzero[0].nvars
    if order is None:
        order = LocalOrder(nvars)
    zero = Poly.zero(nvars)

    G = []
    reps = []  # rep of G[k] in terms of the input gens (polynomial column)
    for i, g in enumerate(gens):
        if not g:
            continue
        _, _, lc = g.leading(order)
        G.append(g.scale(Poly.const(1 / lc, nvars)))
        col = [zero] * len(gens)
        col[i] = Poly.const(1 / lc, nvars)
        reps.append(col)

    def lcm_deg(i, j):
        ci, mi, _ = G[i].leading(order)
        cj, mj, _ = G[j].leading(order)
        if ci != cj:
            return None
        return mono_deg(tuple(max(a, b) for a, b in zip(mi, mj)))

    pairs = []
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            d = lcm_deg(i, j)
            if d is not None:
                pairs.append((d, i, j))
    pairs.sort()

    while pairs:
        _, i, j = pairs.pop(0)
        s, qi, qj = _spoly(G[i], G[j], order)
        if not s:
            continue
        r, u, a = _mora_core(s, G, order, track=track)
        if not r:
            continue
        _, _, lc = r.leading(order)
        inv = Poly.const(1 / lc, nvars)
        if track:
            # r = u*s + sum(a_k G_k); s = qi*G_i - qj*G_j
            col = [zero] * len(gens)
            for k, ak in enumerate(a):
                if ak:
                    col = [c + ak * rk for c, rk in zip(col, reps[k])]
            col = [c + u * qi * ri - u * qj * rj
                   for c, ri, rj in zip(col, reps[i], reps[j])]
            reps.append([c * inv for c in col])
        G.append(r.scale(inv))
        k = len(G) - 1
        new_pairs = []
        for t in range(k):
            d = lcm_deg(t, k)
            if d is not None:
                new_pairs.append((d, t, k))
        pairs = sorted(pairs + new_pairs)

    leads = [(g.leading(order)[0], g.leading(order)[1]) for g in G]
    return StdBasis(G, order, G[0].rank, leads, input_gens=gens,
                    t_matrix=reps if track else None)


@dataclass
class LengthResult:
    """Vector-space dimension of P_local^rank / submodule."""

    finite: bool
    value: int = None
    std_monomials: list = None  # list of (component, monomial), sorted


def length_of_quotient(gens, rank: int = None, order: LocalOrder = None,
                       basis: StdBasis = None) -> LengthResult:
    """Length of P^rank modulo the submodule generated by gens.

    Finite iff the leading module contains a pure power of every variable
    in every component position; then the standard monomials are counted.
    """
    if basis is None:
        gens = [_as_vec(g) for g in gens]
        if rank is None:
            rank = gens[0].rank if gens else 1
        nonzero = [g for g in gens if g]
        if not nonzero:
            return LengthResult(False)
        basis = std_basis(nonzero, order)
    if rank is None:
        rank = basis.rank
    order = basis.order
    nvars = basis.generators[0].nvars

    monomials = []
    for c in range(rank):
        leads_c = [m for (comp, m) in basis.leading_terms if comp == c]
        bounds = []
        for i in range(nvars):
            pure = [m[i] for m in leads_c if all(e == 0 for k, e in enumerate(m) if k != i)]
            if not pure:
                return LengthResult(False)
            bounds.append(min(pure))
        for expo in product(*(range(b) for b in bounds)):
            if not any(mono_divides(m, expo) for m in leads_c):
                monomials.append((c, expo))
    # within a component, list larger monomials (lower degree) first
    monomials.sort(key=lambda cm: (cm[0], mono_deg(cm[1]), cm[1]))
    return LengthResult(True, len(monomials), monomials)


def lift(target, gens, order: LocalOrder = None, basis: StdBasis = None):
    """Express target as sum(c_i * gens_i) over the local ring.

    Returns a list of (numerator, denominator) pairs; all denominators are
    the same local unit, normalized to constant term 1.  Raises
    NotInModuleError when the target is not in the submodule.
    """
    target = _as_vec(target)
    gens = [_as_vec(g) for g in gens]
    _check_ranks([target] + gens)
    nvars = target.nvars
    if order is None:
        order = LocalOrder(nvars)
    if basis is None:
        basis = std_basis(gens, order, track=True)
    elif basis.t_matrix is None:
        raise ValueError("lift needs a standard basis computed with track=True")
    r, u, a = _mora_core(target, basis.generators, order, track=True)
    if r:
        raise NotInModuleError("target does not lie in the submodule")
    # u*target = sum(a_k * G_k), G_k = sum(T_ik * gens_i)
    zero = Poly.zero(nvars)
    coeffs = [zero] * len(gens)
    for k, ak in enumerate(a):
        if ak:
            coeffs = [c - ak * t for c, t in zip(coeffs, basis.t_matrix[k])]
    # sign: r = u*target + sum(a_k G_k) per _mora_core bookkeeping
    c0 = u.constant_term()
    if not c0:
        raise NotInModuleError("reduction did not terminate with a unit multiplier")
    den = u * (1 / c0)
    return [(c * (1 / c0), den) for c in coeffs]


def syzygies(gens, order: LocalOrder = None):
    """Generators of the relations sum(s_i * gens_i) = 0 over the local ring.

    Schreyer-style: pair syzygies of a tracked standard basis, pushed back
    to the input generators, plus the defect columns of the two base
    changes.  All returned syzygies have polynomial entries.
    """
    gens = [_as_vec(g) for g in gens]
    _check_ranks(gens)
    nvars = gens[0].nvars
    k = len(gens)
    if order is None:
        order = LocalOrder(nvars)
    zero = Poly.zero(nvars)
    one = Poly.const(1, nvars)

    nonzero_idx = [i for i, g in enumerate(gens) if g]
    result = []
    # zero generators relate trivially
    for i, g in enumerate(gens):
        if not g:
            result.append(VecPoly([one if j == i else zero for j in range(k)]))
    if not nonzero_idx:
        return result

    basis = std_basis([gens[i] for i in nonzero_idx], order, track=True)
    G = basis.generators
    T = basis.t_matrix  # G_j = sum_i T[j][i] * gens_nonzero[i]

    def push(col_g):
        """Turn a syzygy of G into a syzygy of gens (polynomial entries)."""
        out = [zero] * k
        for j, cj in enumerate(col_g):
            if cj:
                for i, gi in enumerate(nonzero_idx):
                    out[gi] = out[gi] + cj * T[j][i]
        return VecPoly(out)

    # pair syzygies of the standard basis
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            ci, mi, _ = G[i].leading(order)
            cj, mj, _ = G[j].leading(order)
            if ci != cj:
                continue
            s, qi, qj = _spoly(G[i], G[j], order)
            if not s:
                col = [zero] * len(G)
                col[i] = qi
                col[j] = -qj
                result.append(push(col))
                continue
            r, u, a = _mora_core(s, G, order, track=True)
            if r:
                raise AssertionError("s-vector of a standard basis must reduce to 0")
            # 0 = u*s + sum(a_t G_t), s = qi G_i - qj G_j
            col = list(a)
            col[i] = col[i] + u * qi
            col[j] = col[j] - u * qj
            syz = push(col)
            if syz:
                result.append(syz)

    # defect columns: u_i e_i - T*(rep of gens_i in G)
    for pos, i in enumerate(nonzero_idx):
        r, u, a = _mora_core(gens[i], G, order, track=True)
        if r:
            raise AssertionError("input generator must reduce to 0 against its basis")
        # 0 = u*gens_i + sum(a_t G_t)
        out = [zero] * k
        out[i] = u
        for t, at in enumerate(a):
            if at:
                for ii, gi in enumerate(nonzero_idx):
                    out[gi] = out[gi] + at * T[t][ii]
        syz = VecPoly(out)
        if syz:
            result.append(syz)

    # drop exact duplicates, keep deterministic order
    seen = []
    unique = []
    for s in result:
        key = tuple(frozenset(p.terms.items()) for p in s.components)
        if key not in seen:
            seen.append(key)
            unique.append(s)
    return unique


def preimage(big_cols, sub_gens, order: LocalOrder = None):
    """Generators of {v : sum(v_i * big_cols_i) in <sub_gens>}.

    Computed as the projection to the first block of the syzygies of
    big_cols followed by sub_gens.
    """
    combined = [_as_vec(g) for g in big_cols] + [_as_vec(g) for g in sub_gens]
    t = len(big_cols)
    syz = syzygies(combined, order)
    out = []
    for s in syz:
        head = VecPoly(s.components[:t])
        if head:
            out.append(head)
    return out
