"""Finitely presented algebras: normal forms, decidable equality, morphisms.

A presentation fixes a coefficient ring, named variables, relation
polynomials, and a monomial order.  Equality of terms modulo the relations
is decided through the normal-form map: reduce the term's polynomial by the
presentation's reduced basis and read the remainder back as a canonical
term.  Every equality decision can be backed by a cofactor certificate.
"""

from __future__ import annotations

from .certificates import CofactorCertificate, make_certificate
from .coeffs import CoeffRing, ring_from_spec, ring_to_spec
from .groebner import GroebnerBasis, buchberger
from .poly import DEGREVLEX, MonomialOrder, Polynomial, divide, poly_to_str
from .terms import (
    Add,
    Mul,
    Neg,
    NormalTerm,
    Term,
    Var,
    Zero,
    parse_poly,
    parse_term,
    poly_to_term,
    term_to_poly,
    term_to_str,
)


class PresentationError(ValueError):
    """Malformed presentation or morphism declaration."""


# reduced bases are deterministic, so concurrent recomputation is harmless;
# the cache key is the canonical text serialization
_BASIS_CACHE: dict = {}


class Presentation:
    """ring, named variables, relation polynomials, and a monomial order."""

    __slots__ = ("ring", "varnames", "relations", "order")

    def __init__(self, ring: CoeffRing, varnames, relations=(), order=None):
        varnames = tuple(varnames)
        if len(set(varnames)) != len(varnames):
            raise PresentationError(f"duplicate variable names in {varnames!r}")
        for name in varnames:
            if not name.isidentifier():
                raise PresentationError(f"bad variable name {name!r}")
        order = order or MonomialOrder(DEGREVLEX)
        if order.precedence is not None:
            # the text formats can only name the three orders with natural
            # precedence; allowing more would break content-addressed caching
            raise PresentationError("presentations use natural variable precedence")
        rels = []
        for q in relations:
            if not isinstance(q, Polynomial):
                raise PresentationError("relations must be polynomials")
            if q.ring != ring or q.nvars != len(varnames):
                raise PresentationError("relation does not live in the declared algebra")
            rels.append(q)
        self.ring = ring
        self.varnames = varnames
        self.relations = tuple(rels)
        self.order = order

    @property
    def nvars(self) -> int:
        return len(self.varnames)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.ring == other.ring
            and self.varnames == other.varnames
            and self.relations == other.relations
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.varnames, self.relations, self.order))

    def __repr__(self) -> str:
        return f"Presentation({self.serialize()!r})"

    # -- serialization ------------------------------------------------------

    def serialize(self) -> str:
        lines = [
            f"ring {ring_to_spec(self.ring)}",
            f"order {self.order.kind}",
            f"vars {' '.join(self.varnames)}",
        ]
        if self.relations:
            rels = ", ".join(poly_to_str(q, self.varnames, self.order) for q in self.relations)
            lines.append(f"rels {rels}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        ring = None
        order = None
        varnames = None
        rel_texts: list[str] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "ring":
                ring = ring_from_spec(rest)
            elif head == "order":
                if rest not in ("lex", "grlex", "degrevlex"):
                    raise PresentationError(f"line {lineno}: unknown order {rest!r}")
                order = MonomialOrder(rest)
            elif head == "vars":
                varnames = tuple(rest.split())
            elif head == "rels":
                rel_texts.append(rest)
            else:
                raise PresentationError(f"line {lineno}: unknown declaration {head!r}")
        if ring is None:
            raise PresentationError("missing `ring` declaration")
        if varnames is None:
            raise PresentationError("missing `vars` declaration")
        shell = cls(ring, varnames, (), order)
        relations = []
        for chunk in rel_texts:
            for rel in chunk.split(","):
                rel = rel.strip()
                if rel:
                    relations.append(parse_poly(rel, shell))
        return cls(ring, varnames, relations, order)

    @classmethod
    def load(cls, path) -> "Presentation":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read())

    def to_json(self) -> dict:
        return {
            "ring": ring_to_spec(self.ring),
            "order": self.order.kind,
            "vars": list(self.varnames),
            "rels": [poly_to_str(q, self.varnames, self.order) for q in self.relations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        ring = ring_from_spec(data["ring"])
        order = MonomialOrder(data["order"])
        shell = cls(ring, data["vars"], (), order)
        rels = [parse_poly(s, shell) for s in data["rels"]]
        return cls(ring, data["vars"], rels, order)

    # -- the quotient algebra --------------------------------------------------

    def basis(self) -> GroebnerBasis:
        """The reduced basis of the relation ideal; memoized by content."""
        key = self.serialize()
        gb = _BASIS_CACHE.get(key)
        if gb is None:
            gb = buchberger(self.relations, self.order, ring=self.ring)
            _BASIS_CACHE[key] = gb
        return gb

    def parse_term(self, text: str) -> Term:
        return parse_term(text, self)

    def format_term(self, t: Term) -> str:
        return term_to_str(t, self.varnames, self.ring)

    def nf(self, t: Term) -> NormalTerm:
        """The normal form of a term: idempotent, equal terms share it."""
        p = term_to_poly(t, self.ring, self.nvars)
        _, rem = divide(p, self.basis().basis, self.order)
        return poly_to_term(rem, self.order)

    def eq(self, t: Term, u: Term) -> bool:
        """Decidable equality in the quotient."""
        diff = term_to_poly(t, self.ring, self.nvars) - term_to_poly(u, self.ring, self.nvars)
        if diff.is_zero:
            return True
        basis = self.basis().basis
        if not basis:
            return False
        _, rem = divide(diff, basis, self.order)
        return rem.is_zero

    def certify(self, t: Term, u: Term) -> CofactorCertificate | None:
        """Certificate for t ~ u, or None when they differ."""
        return make_certificate(t, u, self, self.basis())

    def nf_certificate(self, t: Term) -> CofactorCertificate:
        """The always-available witness that a term equals its normal form."""
        cert = make_certificate(t, self.nf(t), self, self.basis())
        assert cert is not None  # t ~ nf(t) holds by construction
        return cert

    # quotient-algebra operations on normal terms

    def add(self, a: NormalTerm, b: NormalTerm) -> NormalTerm:
        return self.nf(Add(a, b))

    def mul(self, a: NormalTerm, b: NormalTerm) -> NormalTerm:
        return self.nf(Mul(a, b))

    def neg(self, a: NormalTerm) -> NormalTerm:
        return self.nf(Neg(a))


class Morphism:
    """A map between presented algebras given by images of the source variables."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Presentation, target: Presentation, images):
        images = tuple(images)
        if source.ring != target.ring:
            raise PresentationError("source and target must share the coefficient ring")
        if len(images) != source.nvars:
            raise PresentationError(
                f"need {source.nvars} images, got {len(images)}"
            )
        self.source = source
        self.target = target
        self.images = images

    def apply(self, t: Term) -> Term:
        """Substitute the variable images; terms have no binders so this is plain."""
        if isinstance(t, Var):
            if not 0 <= t.index < len(self.images):
                raise PresentationError(f"variable index {t.index} out of range")
            return self.images[t.index]
        if isinstance(t, Neg):
            return Neg(self.apply(t.arg))
        if isinstance(t, Add):
            return Add(self.apply(t.left), self.apply(t.right))
        if isinstance(t, Mul):
            return Mul(self.apply(t.left), self.apply(t.right))
        return t

    def well_defined(self):
        """Check the relations are respected; certificates witness each one.

        Returns (ok, certificates) where certificates[j] witnesses that the
        j-th source relation maps to zero, or is None where it does not.
        """
        ok = True
        certs = []
        for q in self.source.relations:
            spelled = poly_to_term(q, self.source.order)
            image = self.apply(spelled)
            cert = self.target.certify(image, Zero())
            certs.append(cert)
            if cert is None:
                ok = False
        return ok, certs


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.target != g.source:
        raise PresentationError("morphisms do not compose: target/source mismatch")
    return Morphism(f.source, g.target, tuple(g.apply(im) for im in f.images))


def coherence_check(f: Morphism, t: Term) -> bool:
    """Normalizing commutes with mapping, up to provable equality in the target.

    The two routes usually produce different spellings; they are always equal
    in the target quotient.
    """
    via_source = f.apply(f.source.nf(t))
    via_target = f.target.nf(f.apply(t))
    return f.target.eq(via_source, via_target)


def certificate_from_json(data: dict) -> CofactorCertificate:
    pres = Presentation.from_json(data["presentation"])
    lhs = parse_term(data["lhs"], pres)
    rhs = parse_term(data["rhs"], pres)
    cofactors = tuple(parse_poly(s, pres) for s in data["cofactors"])
    if len(cofactors) != len(pres.relations):
        raise PresentationError("certificate cofactor count does not match the relations")
    return CofactorCertificate(pres, lhs, rhs, cofactors)


def parse_morphism(text: str, load_presentation) -> Morphism:
    """Parse `hom <source> -> <target>: x -> u^2, ...`.

    ``load_presentation`` maps the two file references to Presentations.
    """
    line = ""
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            line = stripped
            break
    if not line.startswith("hom"):
        raise PresentationError("morphism file must start with `hom`")
    rest = line[len("hom"):].strip()
    head, sep, assignments = rest.partition(":")
    if not sep:
        raise PresentationError("missing `:` before the variable images")
    src_ref, arrow, tgt_ref = head.partition("->")
    if not arrow:
        raise PresentationError("missing `->` between source and target")
    source = load_presentation(src_ref.strip())
    target = load_presentation(tgt_ref.strip())
    images: dict[str, Term] = {}
    for part in assignments.split(","):
        part = part.strip()
        if not part:
            continue
        name, arrow, image_text = part.partition("->")
        if not arrow:
            raise PresentationError(f"bad image assignment {part!r}")
        name = name.strip()
        if name not in source.varnames:
            raise PresentationError(f"{name!r} is not a source variable")
        if name in images:
            raise PresentationError(f"duplicate image for {name!r}")
        images[name] = parse_term(image_text.strip(), target)
    missing = [n for n in source.varnames if n not in images]
    if missing:
        raise PresentationError(f"missing images for {', '.join(missing)}")
    return Morphism(source, target, tuple(images[n] for n in source.varnames))
