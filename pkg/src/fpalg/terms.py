"""The free algebra of ring expressions: AST, parser, printer, and the two
bridges to canonical polynomials.

The expression grammar (used both for terms and for polynomial literals):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' nat]
    atom   := literal | ident | '(' expr ')' | '-' atom

Subtraction and powers are conveniences: the AST only has Zero, One, Const,
Var, Neg, Add, Mul.  `a - b` becomes Add(a, Neg(b)) and `a^n` a left-nested
product at parse time.  Note the grammar gives unary minus a tighter grip
than `^`, so `-x^2` means `(-x)^2`; the canonical printer is careful to emit
only strings that re-parse to the exact same tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coeffs import CoeffError, CoeffRing
from .poly import MonomialOrder, Polynomial


class TermError(ValueError):
    """Ill-formed term (bad variable index, wrong-ring constant, bad position)."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- the AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Const(Term):
    value: object  # canonical coefficient of the ambient ring


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


# A NormalTerm is a Term that is the canonical readback of a canonical
# polynomial: poly_to_term(term_to_poly(t)) == t holds structurally.
NormalTerm = Term


def children(t: Term) -> tuple:
    if isinstance(t, Neg):
        return (t.arg,)
    if isinstance(t, (Add, Mul)):
        return (t.left, t.right)
    return ()


def subterm_at(t: Term, path) -> Term:
    for i in path:
        kids = children(t)
        if not 0 <= i < len(kids):
            raise TermError(f"no child {i} at {type(t).__name__}")
        t = kids[i]
    return t


def replace_at(t: Term, path, replacement: Term) -> Term:
    if not path:
        return replacement
    i, rest = path[0], path[1:]
    kids = children(t)
    if not 0 <= i < len(kids):
        raise TermError(f"no child {i} at {type(t).__name__}")
    new_child = replace_at(kids[i], rest, replacement)
    if isinstance(t, Neg):
        return Neg(new_child)
    if isinstance(t, Add):
        return Add(new_child, t.right) if i == 0 else Add(t.left, new_child)
    return Mul(new_child, t.right) if i == 0 else Mul(t.left, new_child)


def const_term(ring: CoeffRing, value) -> Term:
    """Canonical leaf for a ring constant: Zero/One for 0/1, Neg for negatives."""
    value = ring.normalize(value)
    if value == 0:
        return Zero()
    if value == 1:
        return One()
    if value < 0:
        return Neg(const_term(ring, -value))
    return Const(value)


def _power(base: Term, n: int) -> Term:
    """a^n as a left-nested product; n = 0 is One."""
    if n == 0:
        return One()
    acc = base
    for _ in range(n - 1):
        acc = Mul(acc, base)
    return acc


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: CoeffRing, varnames):
        self.text = text
        self.ring = ring
        self.varindex = {name: i for i, name in enumerate(varnames)}
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, text, at = self.next()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", at)

    def parse(self) -> Term:
        t = self.expr()
        kind, text, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", at)
        return t

    def expr(self) -> Term:
        t = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.next()
                rhs = self.term()
                t = Add(t, rhs if text == "+" else Neg(rhs))
            else:
                return t

    def term(self) -> Term:
        t = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.next()
                t = Mul(t, self.factor())
            else:
                return t

    def factor(self) -> Term:
        t = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.next()
            kind, text, at = self.next()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer literal", at)
            t = _power(t, int(text))
        return t

    def atom(self) -> Term:
        kind, text, at = self.next()
        if kind == "op" and text == "-":
            return Neg(self.atom())
        if kind == "op" and text == "(":
            t = self.expr()
            self.expect(")")
            return t
        if kind in ("int", "rat"):
            try:
                value = self.ring.parse(text)
            except (CoeffError, ValueError) as exc:
                raise ParseError(str(exc), at) from None
            return const_term(self.ring, value)
        if kind == "ident":
            idx = self.varindex.get(text)
            if idx is None:
                raise ParseError(f"unknown variable {text!r}", at)
            return Var(idx)
        raise ParseError(f"unexpected {text or 'end of input'!r}", at)


def parse_term(text: str, ctx) -> Term:
    """Parse an expression in the context of a presentation (ring + varnames)."""
    return _Parser(text, ctx.ring, ctx.varnames).parse()


def parse_poly(text: str, ctx) -> Polynomial:
    """Parse a polynomial literal: the expression grammar evaluated canonically."""
    return term_to_poly(parse_term(text, ctx), ctx.ring, len(ctx.varnames))


# -- printing -------------------------------------------------------------------

def _flatten_mul(t: Term) -> list:
    """Left spine of a product: Mul(Mul(a,b),c) -> [a, b, c]."""
    out = []
    while isinstance(t, Mul):
        out.insert(0, t.right)
        t = t.left
    out.insert(0, t)
    return out


def _is_atom(t: Term) -> bool:
    return isinstance(t, (Zero, One, Const, Var))


def _as_power(t: Term):
    """Recognize a left-nested self-product of one variable: returns (var, n) or None."""
    if isinstance(t, Var):
        return t, 1
    chain = _flatten_mul(t)
    if len(chain) >= 2 and isinstance(chain[0], Var) and all(c == chain[0] for c in chain):
        return chain[0], len(chain)
    return None


def term_to_str(t: Term, varnames, ring: CoeffRing) -> str:
    """Print a term so that parse(print(t)) == t, structurally."""

    def atom_str(t: Term) -> str:
        if isinstance(t, Zero):
            return "0"
        if isinstance(t, One):
            return "1"
        if isinstance(t, Const):
            return ring.format(t.value)
        if isinstance(t, Var):
            return varnames[t.index]
        if isinstance(t, Neg):
            return "-" + atom_str(t.arg)
        return "(" + expr_str(t) + ")"

    def factor_str(t: Term) -> str:
        pw = _as_power(t)
        if pw is not None and pw[1] >= 2:
            return f"{varnames[pw[0].index]}^{pw[1]}"
        return atom_str(t)

    def term_str(t: Term) -> str:
        if not isinstance(t, Mul):
            return factor_str(t)
        chain = _flatten_mul(t)
        # a leading run of one repeated variable prints as a power, because the
        # parser rebuilds exactly that left-nested prefix
        lead = 1
        if isinstance(chain[0], Var):
            while lead < len(chain) and chain[lead] == chain[0]:
                lead += 1
        parts = []
        if lead >= 2:
            parts.append(f"{varnames[chain[0].index]}^{lead}")
        else:
            lead = 1
            parts.append(factor_str(chain[0]))
        parts.extend(factor_str(c) for c in chain[lead:])
        return "*".join(parts)

    def expr_str(t: Term) -> str:
        if isinstance(t, Add):
            left = expr_str(t.left)
            if isinstance(t.right, Neg):
                return f"{left} - {term_in_expr(t.right.arg)}"
            return f"{left} + {term_in_expr(t.right)}"
        return term_in_expr(t)

    def term_in_expr(t: Term) -> str:
        if isinstance(t, Add):
            return "(" + expr_str(t) + ")"
        return term_str(t)

    return expr_str(t)


# -- evaluation and readback ------------------------------------------------------

def term_to_poly(t: Term, ring: CoeffRing, nvars: int) -> Polynomial:
    """Evaluate a term in the free polynomial algebra; a ring homomorphism."""
    if isinstance(t, Zero):
        return Polynomial.zero(ring, nvars)
    if isinstance(t, One):
        return Polynomial.const(ring, nvars, ring.one)
    if isinstance(t, Const):
        try:
            return Polynomial.const(ring, nvars, t.value)
        except CoeffError as exc:
            raise TermError(str(exc)) from None
    if isinstance(t, Var):
        if not 0 <= t.index < nvars:
            raise TermError(f"variable index {t.index} out of range")
        return Polynomial.variable(ring, nvars, t.index)
    if isinstance(t, Neg):
        return -term_to_poly(t.arg, ring, nvars)
    if isinstance(t, Add):
        return term_to_poly(t.left, ring, nvars) + term_to_poly(t.right, ring, nvars)
    if isinstance(t, Mul):
        return term_to_poly(t.left, ring, nvars) * term_to_poly(t.right, ring, nvars)
    raise TermError(f"not a term: {t!r}")


def _mono_term(coeff, mono, ring: CoeffRing) -> Term:
    """coeff * x^mono as a canonical product chain; coeff must be positive/nonzero."""
    factors = []
    if coeff != 1 or not any(mono):
        factors.append(const_term(ring, coeff))
    for i, e in enumerate(mono):
        if e > 0:
            factors.append(_power(Var(i), e))
    acc = factors[0]
    for f in factors[1:]:
        acc = Mul(acc, f)
    return acc


def poly_to_term(p: Polynomial, order: MonomialOrder) -> NormalTerm:
    """Canonical readback: monomials descending in the ambient order.

    This is the one fixed spelling of each polynomial as a term; together
    with term_to_poly it is a retraction onto normal terms.
    """
    if p.is_zero:
        return Zero()
    acc = None
    for mono, coeff in p.sorted_terms(order):
        negative = coeff < 0
        mag = -coeff if negative else coeff
        piece = _mono_term(mag, mono, p.ring)
        if acc is None:
            acc = Neg(piece) if negative else piece
        else:
            acc = Add(acc, Neg(piece) if negative else piece)
    return acc
