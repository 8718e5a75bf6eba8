"""Equality witnesses for quotient algebras and their independent checkers.

A cofactor certificate states that two ring terms are provably equal modulo
the presentation's relations: evaluating both sides into the free polynomial
ring, the difference equals an explicit combination sum_j h_j * q_j of the
original relation polynomials.  Verification re-expands that identity with
nothing but term evaluation and polynomial arithmetic; this module must stay
independent of the basis-completion machinery so the two sides of every
equality claim are checked by genuinely different code paths.

A certificate can also be unfolded into a step-by-step equational derivation
whose individual steps are checkable in isolation: free-ring steps (both
sides denote the same free polynomial) and relation steps (one occurrence of
a relation, spelled as a term, is exchanged with zero).
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, divide
from .terms import (
    Add,
    Mul,
    Neg,
    Term,
    Zero,
    poly_to_term,
    replace_at,
    subterm_at,
    term_to_poly,
)


@dataclass(frozen=True)
class CofactorCertificate:
    """Witness that lhs ~ rhs modulo the presentation's relations."""

    presentation: object  # Presentation; duck-typed to keep checkers free-standing
    lhs: Term
    rhs: Term
    cofactors: tuple  # one Polynomial per relation


@dataclass(frozen=True)
class FreeRingStep:
    """Both endpoints denote the same polynomial of the free ring."""

    source: Term
    target: Term


@dataclass(frozen=True)
class RelStep:
    """Exchange relation `index`, spelled canonically, with zero at `path`.

    forward=True rewrites the relation term to Zero; False goes the other way.
    """

    source: Term
    target: Term
    index: int
    path: tuple
    forward: bool = True


@dataclass(frozen=True)
class Derivation:
    presentation: object
    steps: tuple


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = ""
    step: int | None = None
    endpoints: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _ctx(presentation):
    return presentation.ring, presentation.nvars


def certificate_to_json(cert: CofactorCertificate) -> dict:
    """Interchange form: everything in the shared text syntax."""
    from .poly import poly_to_str

    pres = cert.presentation
    return {
        "presentation": pres.to_json(),
        "lhs": pres.format_term(cert.lhs),
        "rhs": pres.format_term(cert.rhs),
        "cofactors": [poly_to_str(h, pres.varnames, pres.order) for h in cert.cofactors],
    }


def make_certificate(t: Term, u: Term, presentation, gb) -> CofactorCertificate | None:
    """Certificate that t ~ u, or None when the two are provably distinct.

    ``gb`` must be a basis computed from the presentation's relations; its
    transition matrix pulls the division cofactors back to the original
    relations, so the witness never mentions internal basis elements.
    """
    ring, nvars = _ctx(presentation)
    if tuple(gb.generators) != tuple(presentation.relations):
        raise ValueError("basis was not computed from this presentation's relations")
    if gb.order != presentation.order:
        raise ValueError("basis order does not match the presentation order")
    diff = term_to_poly(t, ring, nvars) - term_to_poly(u, ring, nvars)
    m = len(presentation.relations)
    zero = Polynomial.zero(ring, nvars)
    if diff.is_zero:
        return CofactorCertificate(presentation, t, u, (zero,) * m)
    quots, rem = divide(diff, gb.basis, gb.order)
    if not rem.is_zero:
        return None
    cofactors = []
    for j in range(m):
        acc = zero
        for q, row in zip(quots, gb.transition):
            acc = acc + q * row[j]
        cofactors.append(acc)
    return CofactorCertificate(presentation, t, u, tuple(cofactors))


def verify_certificate(cert: CofactorCertificate) -> CheckResult:
    """Re-expand the witnessed identity; exact equality or rejection.

    Uses only term evaluation and polynomial arithmetic, never basis
    completion or division.
    """
    pres = cert.presentation
    ring, nvars = _ctx(pres)
    relations = tuple(pres.relations)
    if len(cert.cofactors) != len(relations):
        return CheckResult(False, "cofactor-count")
    try:
        lhs_poly = term_to_poly(cert.lhs, ring, nvars)
        rhs_poly = term_to_poly(cert.rhs, ring, nvars)
    except ValueError:
        return CheckResult(False, "ill-formed-term")
    combo = Polynomial.zero(ring, nvars)
    for h, q in zip(cert.cofactors, relations):
        if h.ring != ring or h.nvars != nvars:
            return CheckResult(False, "cofactor-ring")
        combo = combo + h * q
    if lhs_poly - rhs_poly != combo:
        return CheckResult(False, "identity-mismatch")
    return CheckResult(True, endpoints=(cert.lhs, cert.rhs))


def expand_derivation(cert: CofactorCertificate) -> Derivation:
    """Unfold a certificate into a checkable chain from lhs to rhs.

    The chain rewrites lhs to the canonical spelling of its polynomial, then
    to `rhs-spelling + sum h_j * q_j` with every nonzero summand spelled out,
    erases each relation occurrence with one relation step, and collapses
    back down to rhs.  Identity steps are dropped; a syntactic no-op becomes
    a single reflexive free-ring step.
    """
    result = verify_certificate(cert)
    if not result:
        raise ValueError(f"cannot expand an invalid certificate ({result.reason})")
    pres = cert.presentation
    ring, nvars = _ctx(pres)
    order = pres.order
    relations = tuple(pres.relations)

    lhs_canon = poly_to_term(term_to_poly(cert.lhs, ring, nvars), order)
    rhs_poly = term_to_poly(cert.rhs, ring, nvars)
    rhs_canon = poly_to_term(rhs_poly, order)

    used = [(j, h) for j, h in enumerate(cert.cofactors) if not h.is_zero]
    if not used:
        # lhs and rhs already denote the same free polynomial
        return Derivation(pres, (FreeRingStep(cert.lhs, cert.rhs),))

    # rhs + h_j1*q_j1 + ... , as one explicit term
    spelled = rhs_canon
    for j, h in used:
        product = Mul(poly_to_term(h, order), poly_to_term(relations[j], order))
        spelled = Add(spelled, product)

    steps: list = []

    def free_step(a: Term, b: Term):
        if a != b:
            steps.append(FreeRingStep(a, b))

    free_step(cert.lhs, lhs_canon)
    free_step(lhs_canon, spelled)

    # erase the relation occurrences right to left; each sits at the second
    # factor of the last product of the current Add spine
    current = spelled
    for pos in range(len(used) - 1, -1, -1):
        j, _ = used[pos]
        path = (0,) * (len(used) - 1 - pos) + (1, 1)
        target = replace_at(current, path, Zero())
        steps.append(RelStep(current, target, j, path, forward=True))
        current = target

    free_step(current, rhs_canon)
    free_step(rhs_canon, cert.rhs)
    return Derivation(pres, tuple(steps))


def check_derivation(derivation: Derivation) -> CheckResult:
    """Validate every step and the chaining; returns the endpoints on success.

    Free-ring steps are decided by comparing canonical polynomials of the two
    sides, which is sound and complete for ring equalities with fixed
    coefficients; relation steps are replayed structurally at their path.
    """
    pres = derivation.presentation
    ring, nvars = _ctx(pres)
    order = pres.order
    relations = tuple(pres.relations)
    steps = derivation.steps
    if not steps:
        return CheckResult(False, "empty-derivation")
    for n, step in enumerate(steps):
        if n > 0 and steps[n - 1].target != step.source:
            return CheckResult(False, "broken-chain", step=n)
        if isinstance(step, FreeRingStep):
            try:
                lp = term_to_poly(step.source, ring, nvars)
                rp = term_to_poly(step.target, ring, nvars)
            except ValueError:
                return CheckResult(False, "ill-formed-term", step=n)
            if lp != rp:
                return CheckResult(False, "free-ring-mismatch", step=n)
        elif isinstance(step, RelStep):
            if not 0 <= step.index < len(relations):
                return CheckResult(False, "relation-index", step=n)
            spelled = poly_to_term(relations[step.index], order)
            before = spelled if step.forward else Zero()
            after = Zero() if step.forward else spelled
            try:
                at = subterm_at(step.source, step.path)
            except ValueError:
                return CheckResult(False, "bad-path", step=n)
            if at != before:
                return CheckResult(False, "relation-mismatch", step=n)
            if replace_at(step.source, step.path, after) != step.target:
                return CheckResult(False, "rewrite-mismatch", step=n)
        else:
            return CheckResult(False, "unknown-step", step=n)
    return CheckResult(True, endpoints=(steps[0].source, steps[-1].target))
