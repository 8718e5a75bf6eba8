"""Exact coefficient arithmetic over the integers, the rationals, and prime fields.

Coefficient values are plain Python objects: ``int`` for the integers and
for prime-field residues (kept in ``[0, p)``), ``fractions.Fraction`` for
rationals (always reduced, positive denominator).  A ``CoeffRing`` bundles
the operations; it never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction


class CoeffError(ValueError):
    """Invalid coefficient or coefficient-ring operation."""


INTEGERS = "integers"
RATIONALS = "rationals"
PRIME_FIELD = "prime_field"


def is_prime(n: int) -> bool:
    """Deterministic trial division; moduli here are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Classical extended Euclid: returns (g, s, t) with g = gcd(a,b) >= 0 and a*s + b*t = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class CoeffRing:
    """One of Z, Q, or F_p, with exact arithmetic on canonical values."""

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise CoeffError(f"unknown coefficient ring kind: {kind!r}")
        if kind == PRIME_FIELD:
            if modulus is None or not is_prime(modulus):
                raise CoeffError(f"prime-field modulus must be prime, got {modulus!r}")
        elif modulus is not None:
            raise CoeffError(f"{kind} takes no modulus")
        self.kind = kind
        self.modulus = modulus

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoeffRing)
            and self.kind == other.kind
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def __repr__(self) -> str:
        if self.kind == PRIME_FIELD:
            return f"CoeffRing(F{self.modulus})"
        return f"CoeffRing({'Z' if self.kind == INTEGERS else 'Q'})"

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    # -- canonical values --------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def normalize(self, value):
        """Canonicalize a raw value: int, Fraction, or (numerator, denominator) pair.

        Idempotent on its own output.  Rejects values that do not belong to
        the ring (fractional values over Z or F_p, zero denominators).
        """
        if isinstance(value, tuple):
            num, den = value
            if den == 0:
                raise CoeffError("zero denominator")
            value = Fraction(num, den)
        if isinstance(value, bool):
            raise CoeffError("booleans are not coefficients")
        if self.kind == RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise CoeffError(f"not a rational value: {value!r}")
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise CoeffError(f"fraction {value} is not valid over {self!r}")
            value = value.numerator
        if not isinstance(value, int):
            raise CoeffError(f"not an integer value: {value!r}")
        if self.kind == PRIME_FIELD:
            return value % self.modulus
        return value

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        c = a + b
        return c % self.modulus if self.kind == PRIME_FIELD else c

    def sub(self, a, b):
        c = a - b
        return c % self.modulus if self.kind == PRIME_FIELD else c

    def mul(self, a, b):
        c = a * b
        return c % self.modulus if self.kind == PRIME_FIELD else c

    def neg(self, a):
        return (-a) % self.modulus if self.kind == PRIME_FIELD else -a

    def inv(self, a):
        """Multiplicative inverse; only defined over a field and for a != 0."""
        if not self.is_field:
            raise CoeffError("inversion requested over the integers")
        if a == 0:
            raise CoeffError("division by zero")
        if self.kind == RATIONALS:
            return Fraction(1) / a
        g, s, _ = ext_gcd(a % self.modulus, self.modulus)
        if g != 1:  # cannot happen for prime modulus and a != 0
            raise CoeffError("value is not a unit")
        return s % self.modulus

    def divide_exact(self, a, b):
        """a / b when it exists in the ring; over Z requires exact divisibility."""
        if self.is_field:
            return self.mul(a, self.inv(b))
        if b == 0:
            raise CoeffError("division by zero")
        q, r = divmod(a, b)
        if r != 0:
            raise CoeffError(f"{a} is not divisible by {b} over the integers")
        return q

    # -- text form -----------------------------------------------------------

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        """Parse a coefficient literal: `-12`, `3/4` (rationals only)."""
        text = text.strip()
        if "/" in text:
            if self.kind != RATIONALS:
                raise CoeffError(f"rational literal {text!r} is invalid over {self!r}")
            num_s, den_s = text.split("/", 1)
            return self.normalize((int(num_s), int(den_s)))
        return self.normalize(int(text))


ZZ = CoeffRing(INTEGERS)
QQ = CoeffRing(RATIONALS)


def GF(p: int) -> CoeffRing:
    return CoeffRing(PRIME_FIELD, p)


def ring_from_spec(spec: str) -> CoeffRing:
    """Ring declaration as written in presentation files: `z`, `q`, or `fp <p>`."""
    parts = spec.strip().lower().split()
    if parts == ["z"]:
        return ZZ
    if parts == ["q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "fp":
        return GF(int(parts[1]))
    raise CoeffError(f"unknown ring declaration: {spec!r}")


def ring_to_spec(ring: CoeffRing) -> str:
    if ring.kind == INTEGERS:
        return "z"
    if ring.kind == RATIONALS:
        return "q"
    return f"fp {ring.modulus}"
