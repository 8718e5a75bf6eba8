"""Canonical sparse multivariate polynomials and multivariate division.

Monomials are plain tuples of non-negative exponents, one slot per ambient
variable.  A polynomial stores its nonzero terms in a dict keyed by
monomial; the canonical form is the dict content itself, and any ordered
view is produced on demand from a :class:`MonomialOrder`.
"""

from __future__ import annotations

from .coeffs import CoeffRing, ext_gcd

Monomial = tuple  # exponent vectors; length = ambient variable count

LEX = "lex"
GRLEX = "grlex"
DEGREVLEX = "degrevlex"


# -- monomials ---------------------------------------------------------------

def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; requires b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


class MonomialOrder:
    """A classical monomial order: lex, grlex, or degrevlex.

    ``precedence`` lists variable indices from most to least significant;
    None means the natural order 0, 1, ..., n-1.
    """

    __slots__ = ("kind", "precedence")

    def __init__(self, kind: str, precedence: tuple[int, ...] | None = None):
        if kind not in (LEX, GRLEX, DEGREVLEX):
            raise ValueError(f"unknown monomial order: {kind!r}")
        if precedence is not None:
            precedence = tuple(precedence)
            if sorted(precedence) != list(range(len(precedence))):
                raise ValueError(f"precedence must be a permutation, got {precedence!r}")
        self.kind = kind
        self.precedence = precedence

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.precedence == other.precedence
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.precedence))

    def __repr__(self) -> str:
        if self.precedence is None:
            return f"MonomialOrder({self.kind})"
        return f"MonomialOrder({self.kind}, precedence={self.precedence})"

    def key(self, mono: Monomial):
        """Sort key; ascending in this order (the constant monomial is minimal)."""
        perm = self.precedence
        if perm is not None and len(perm) != len(mono):
            raise ValueError("monomial length does not match order precedence")
        view = mono if perm is None else tuple(mono[p] for p in perm)
        if self.kind == LEX:
            return view
        if self.kind == GRLEX:
            return (mono_degree(mono), view)
        return (mono_degree(mono), tuple(-e for e in reversed(view)))

    def cmp(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as a <, =, > b in this order."""
        if len(a) != len(b):
            raise ValueError("cannot compare monomials of different lengths")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0


# -- polynomials --------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial over a CoeffRing in a fixed number of variables."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: CoeffRing, nvars: int, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong arity (expected {nvars})")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                coeff = ring.normalize(coeff)
                if coeff != 0:
                    prev = clean.get(mono)
                    coeff = coeff if prev is None else ring.add(prev, coeff)
                    if coeff != 0:
                        clean[mono] = coeff
                    elif mono in clean:
                        del clean[mono]
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoeffRing, nvars: int) -> "Polynomial":
        return cls(ring, nvars)

    @classmethod
    def const(cls, ring: CoeffRing, nvars: int, value) -> "Polynomial":
        return cls(ring, nvars, {mono_one(nvars): value})

    @classmethod
    def variable(cls, ring: CoeffRing, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(ring, nvars, {mono: ring.one})

    # -- basic queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms as (monomial, coeff), strictly descending in the given order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=order.key, reverse=True)]

    def leading_term(self, order: MonomialOrder) -> tuple:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def coeff_of(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.zero)

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError(f"coefficient ring mismatch: {self.ring!r} vs {other.ring!r}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        ring = self.ring
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = ring.add(terms.get(m, ring.zero), c)
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return self._raw(ring, self.nvars, terms)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        ring = self.ring
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = ring.sub(terms.get(m, ring.zero), c)
            if s == 0:
                terms.pop(m, None)
            else:
                terms[m] = s
        return self._raw(ring, self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        ring = self.ring
        return self._raw(ring, self.nvars, {m: ring.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        ring = self.ring
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = ring.add(terms.get(m, ring.zero), ring.mul(c1, c2))
                if s == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = s
        return self._raw(ring, self.nvars, terms)

    def scale(self, coeff) -> "Polynomial":
        ring = self.ring
        coeff = ring.normalize(coeff)
        if coeff == 0:
            return self._raw(ring, self.nvars, {})
        terms = {}
        for m, c in self.terms.items():
            s = ring.mul(c, coeff)
            if s != 0:
                terms[m] = s
        return self._raw(ring, self.nvars, terms)

    def mul_term(self, coeff, mono: Monomial) -> "Polynomial":
        """Multiply by the single term coeff * x^mono."""
        ring = self.ring
        coeff = ring.normalize(coeff)
        mono = tuple(mono)
        if coeff == 0:
            return self._raw(ring, self.nvars, {})
        terms = {}
        for m, c in self.terms.items():
            s = ring.mul(c, coeff)
            if s != 0:
                terms[mono_mul(m, mono)] = s
        return self._raw(ring, self.nvars, terms)

    @classmethod
    def _raw(cls, ring, nvars, terms) -> "Polynomial":
        """Internal: build from already-canonical terms without re-validation."""
        p = cls.__new__(cls)
        p.ring = ring
        p.nvars = nvars
        p.terms = terms
        return p

    # -- identity -------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.nvars, tuple(sorted(self.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        names = tuple(f"x{i}" for i in range(self.nvars))
        return f"Polynomial({poly_to_str(self, names, MonomialOrder(DEGREVLEX))})"


# -- text form ---------------------------------------------------------------------

def _mono_to_str(mono: Monomial, varnames) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(varnames[i])
        elif e > 1:
            parts.append(f"{varnames[i]}^{e}")
    return "*".join(parts)


def poly_to_str(p: Polynomial, varnames, order: MonomialOrder) -> str:
    """Canonical text: monomials descending in the ambient order.

    The output re-parses to the same polynomial under the expression grammar;
    note a leading negative unit coefficient must keep its explicit `1` since
    unary minus binds tighter than `^`.
    """
    if p.is_zero:
        return "0"
    chunks = []
    for i, (mono, coeff) in enumerate(p.sorted_terms(order)):
        mono_s = _mono_to_str(mono, varnames)
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if not mono_s:
            body = p.ring.format(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{p.ring.format(mag)}*{mono_s}"
        if i == 0:
            if negative:
                # "-x^2" would parse as (-x)^2; force the explicit coefficient
                if mono_s and mag == 1 and max(mono) > 1:
                    body = f"1*{mono_s}"
                chunks.append(f"-{body}")
            else:
                chunks.append(body)
        else:
            chunks.append(f"{'-' if negative else '+'} {body}")
    return " ".join(chunks)


# -- division with cofactors ----------------------------------------------------------

def _coeff_reducible(ring: CoeffRing, c, lc) -> bool:
    """Can the term coefficient c be reduced against a divisor with leading coeff lc?"""
    if ring.is_field:
        return True
    return not (0 <= c < abs(lc))


def _coeff_quotient(ring: CoeffRing, c, lc):
    """Quotient used by one reduction step; over Z the Euclidean residue stays behind."""
    if ring.is_field:
        return ring.mul(c, ring.inv(lc))
    r = c % abs(lc)
    return (c - r) // lc


def divide(p: Polynomial, divisors, order: MonomialOrder):
    """Multivariate division: returns (quotients, remainder) with exact re-expansion.

    Always reduces the largest reducible monomial, using the first applicable
    divisor in list order, so remainders and cofactors are deterministic.
    Over a field no remainder monomial is divisible by any divisor's leading
    monomial; over Z remainder coefficients additionally sit in the Euclidean
    residue range [0, |leading coeff|) for every divisor that divides them.
    """
    divisors = list(divisors)
    ring, nvars = p.ring, p.nvars
    for d in divisors:
        p._check_compatible(d)
        if d.is_zero:
            raise ZeroDivisionError("zero divisor in division")
    leads = [d.leading_term(order) for d in divisors]
    work = dict(p.terms)
    quots = [dict() for _ in divisors]

    while True:
        hit = None
        for m in sorted(work, key=order.key, reverse=True):
            c = work[m]
            for i, (lm, lc) in enumerate(leads):
                if mono_divides(lm, m) and _coeff_reducible(ring, c, lc):
                    hit = (m, c, i)
                    break
            if hit:
                break
        if hit is None:
            break
        m, c, i = hit
        lm, lc = leads[i]
        shift = mono_div(m, lm)
        qc = _coeff_quotient(ring, c, lc)
        qi = quots[i]
        acc = ring.add(qi.get(shift, ring.zero), qc)
        if acc == 0:
            qi.pop(shift, None)
        else:
            qi[shift] = acc
        for dm, dc in divisors[i].terms.items():
            tm = mono_mul(dm, shift)
            s = ring.sub(work.get(tm, ring.zero), ring.mul(qc, dc))
            if s == 0:
                work.pop(tm, None)
            else:
                work[tm] = s

    remainder = Polynomial._raw(ring, nvars, work)
    quotients = [Polynomial._raw(ring, nvars, q) for q in quots]
    return quotients, remainder


def reduce_poly(p: Polynomial, divisors, order: MonomialOrder) -> Polynomial:
    """Remainder of division only."""
    _, r = divide(p, divisors, order)
    return r


# -- pair polynomials -------------------------------------------------------------------

def s_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial: cancels the leading terms of f and g on their lcm monomial.

    Over a field the leading coefficients are divided out; over Z the lcm of
    the leading coefficients is used instead.
    """
    f._check_compatible(g)
    if f.is_zero or g.is_zero:
        raise ValueError("s_poly of the zero polynomial")
    ring = f.ring
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = mono_lcm(fm, gm)
    if ring.is_field:
        left = f.mul_term(ring.inv(fc), mono_div(lcm, fm))
        right = g.mul_term(ring.inv(gc), mono_div(lcm, gm))
    else:
        c = abs(fc * gc) // ext_gcd(fc, gc)[0]
        left = f.mul_term(c // fc, mono_div(lcm, fm))
        right = g.mul_term(c // gc, mono_div(lcm, gm))
    return left - right


def g_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """G-polynomial over Z: leading coefficient gcd(lc f, lc g) on the lcm monomial."""
    f._check_compatible(g)
    if f.ring.is_field:
        raise ValueError("g_poly is only defined over the integers")
    if f.is_zero or g.is_zero:
        raise ValueError("g_poly of the zero polynomial")
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = mono_lcm(fm, gm)
    _, s, t = ext_gcd(fc, gc)
    return f.mul_term(s, mono_div(lcm, fm)) + g.mul_term(t, mono_div(lcm, gm))
