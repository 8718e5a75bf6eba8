"""Buchberger's algorithm over discrete fields and strong bases over Z.

Every basis element carries a transition row expressing it as an explicit
combination of the original generators, so downstream equality witnesses can
always be phrased in terms of the input presentation.
"""

from __future__ import annotations

import heapq

from .coeffs import ext_gcd
from .poly import (
    MonomialOrder,
    Polynomial,
    divide,
    g_poly,
    mono_div,
    mono_lcm,
    mono_mul,
    s_poly,
)

FIELD = "field"
STRONG_INTEGER = "strong-integer"


class GroebnerBasis:
    """A Groebner basis together with its provenance.

    ``transition[i][j]`` is the cofactor of generator j in basis element i:
    basis[i] == sum_j transition[i][j] * generators[j], exactly.
    """

    __slots__ = ("order", "basis", "transition", "generators", "flavor", "reduced")

    def __init__(self, order, basis, transition, generators, flavor, reduced=False):
        self.order = order
        self.basis = tuple(basis)
        self.transition = tuple(tuple(row) for row in transition)
        self.generators = tuple(generators)
        self.flavor = flavor
        self.reduced = reduced

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and self.basis == other.basis
            and self.transition == other.transition
            and self.generators == other.generators
            and self.flavor == other.flavor
            and self.reduced == other.reduced
        )

    def __repr__(self) -> str:
        return (
            f"GroebnerBasis({self.flavor}, {len(self.basis)} elements, "
            f"reduced={self.reduced})"
        )


def _rep_combine(ring, nvars, rep_a, coeff_a, mono_a, rep_b, coeff_b, mono_b):
    """coeff_a * x^mono_a * rep_a + coeff_b * x^mono_b * rep_b, entrywise."""
    return tuple(
        a.mul_term(coeff_a, mono_a) + b.mul_term(coeff_b, mono_b)
        for a, b in zip(rep_a, rep_b)
    )


def _reduce_tracked(p, rep, elems, order):
    """Fully reduce p by the current basis, keeping its generator representation exact."""
    if not elems:
        return p, rep
    quots, rem = divide(p, [e for e, _ in elems], order)
    for q, (_, erep) in zip(quots, elems):
        if q.is_zero:
            continue
        rep = tuple(r - (er * q) for r, er in zip(rep, erep))
    return rem, rep


def buchberger(generators, order: MonomialOrder, ring=None) -> GroebnerBasis:
    """Compute a reduced Groebner basis (strong over Z) with its transition matrix.

    Pair selection follows the normal strategy: the pair whose lcm monomial is
    minimal in the ambient order is processed first, with a fixed index
    tiebreak, so results are byte-deterministic.  ``ring`` only matters for an
    empty generator list, where it fixes the basis flavor.
    """
    generators = tuple(generators)
    if generators:
        ring = generators[0].ring
    if not generators:
        flavor = FIELD if ring is None or ring.is_field else STRONG_INTEGER
        return GroebnerBasis(order, (), (), (), flavor, reduced=True)
    nvars = generators[0].nvars
    for g in generators:
        generators[0]._check_compatible(g)
    flavor = FIELD if ring.is_field else STRONG_INTEGER

    m = len(generators)

    def unit_rep(j):
        return tuple(
            Polynomial.const(ring, nvars, ring.one) if i == j else Polynomial.zero(ring, nvars)
            for i in range(m)
        )

    elems = []  # (polynomial, representation over the original generators)
    for j, g in enumerate(generators):
        if not g.is_zero:
            elems.append((g, unit_rep(j)))

    queue: list = []

    def push_pairs(new_index):
        pnew, _ = elems[new_index]
        lm_new, _ = pnew.leading_term(order)
        for i in range(new_index):
            pi, _ = elems[i]
            lm_i, _ = pi.leading_term(order)
            lcm = mono_lcm(lm_i, lm_new)
            heapq.heappush(queue, (order.key(lcm), i, new_index, "s"))
            if flavor == STRONG_INTEGER:
                heapq.heappush(queue, (order.key(lcm), i, new_index, "g"))

    for idx in range(len(elems)):
        push_pairs(idx)

    while queue:
        _, i, j, kind = heapq.heappop(queue)
        f, frep = elems[i]
        g, grep = elems[j]
        fm, fc = f.leading_term(order)
        gm, gc = g.leading_term(order)
        lcm = mono_lcm(fm, gm)
        if kind == "s":
            if flavor == FIELD and lcm == mono_mul(fm, gm):
                continue  # coprime leading monomials: S-polynomial reduces to zero
            if ring.is_field:
                ca, cb = ring.inv(fc), ring.neg(ring.inv(gc))
            else:
                c = abs(fc * gc) // ext_gcd(fc, gc)[0]
                ca, cb = c // fc, -(c // gc)
        else:
            _, ca, cb = ext_gcd(fc, gc)
        shift_f, shift_g = mono_div(lcm, fm), mono_div(lcm, gm)
        spair = f.mul_term(ca, shift_f) + g.mul_term(cb, shift_g)
        rep = _rep_combine(ring, nvars, frep, ca, shift_f, grep, cb, shift_g)
        rem, rep = _reduce_tracked(spair, rep, elems, order)
        if not rem.is_zero:
            elems.append((rem, rep))
            push_pairs(len(elems) - 1)

    gb = GroebnerBasis(
        order,
        [e for e, _ in elems],
        [rep for _, rep in elems],
        generators,
        flavor,
        reduced=False,
    )
    return autoreduce(gb)


def autoreduce(gb: GroebnerBasis) -> GroebnerBasis:
    """Interreduce and normalize: monic over fields, positive leading coefficients over Z.

    Over a field the result is the unique reduced basis for (ideal, order).
    """
    order = gb.order
    if not gb.basis:
        return GroebnerBasis(order, (), (), gb.generators, gb.flavor, reduced=True)
    ring = gb.basis[0].ring

    elems = [(p, rep) for p, rep in zip(gb.basis, gb.transition)]
    elems.sort(key=lambda e: order.key(e[0].leading_term(order)[0]))

    # interreduce to a fixpoint; elements whose remainder vanishes are dropped,
    # which is exactly the minimality pruning when the input is a basis
    changed = True
    while changed:
        changed = False
        for i in range(len(elems)):
            p, rep = elems[i]
            others = elems[:i] + elems[i + 1 :]
            rem, rem_rep = _reduce_tracked(p, rep, others, order)
            if rem.is_zero:
                del elems[i]
                changed = True
                break
            if rem != p:
                elems[i] = (rem, rem_rep)
                changed = True
                break

    normalized = []
    for p, rep in elems:
        _, lc = p.leading_term(order)
        if ring.is_field:
            inv = ring.inv(lc)
            p = p.scale(inv)
            rep = tuple(r.scale(inv) for r in rep)
        elif lc < 0:
            p = -p
            rep = tuple(-r for r in rep)
        normalized.append((p, rep))
    normalized.sort(key=lambda e: order.key(e[0].leading_term(order)[0]))

    return GroebnerBasis(
        order,
        [p for p, _ in normalized],
        [rep for _, rep in normalized],
        gb.generators,
        gb.flavor,
        reduced=True,
    )


def is_groebner(gb: GroebnerBasis) -> bool:
    """Certify the basis: transition rows re-expand exactly and every pair reduces to zero."""
    order = gb.order
    for p, row in zip(gb.basis, gb.transition):
        if len(row) != len(gb.generators):
            return False
        acc = None
        for cof, gen in zip(row, gb.generators):
            term = cof * gen
            acc = term if acc is None else acc + term
        if acc is None:
            if not p.is_zero:
                return False
        elif acc != p:
            return False
    basis = list(gb.basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not reduceable_to_zero(s_poly(basis[i], basis[j], order), basis, order):
                return False
            if gb.flavor == STRONG_INTEGER:
                if not reduceable_to_zero(g_poly(basis[i], basis[j], order), basis, order):
                    return False
    return True


def reduceable_to_zero(p: Polynomial, basis, order: MonomialOrder) -> bool:
    if p.is_zero:
        return True
    if not basis:
        return False
    _, rem = divide(p, basis, order)
    return rem.is_zero
