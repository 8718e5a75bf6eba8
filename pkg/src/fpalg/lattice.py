"""Free and finitely presented bounded distributive lattices.

Elements of the free bounded distributive lattice on n generators are
represented two ways: as antichains of generator subsets (the minimal
monotone disjunctive normal form, the canonical surface form) and, for
computation, as monotone Boolean function tables packed into one integer
(bit k holds the value on the assignment with generator set k).  Meet and
join are then bitwise AND and OR.

Presented lattices are handled by closing the presentation's equations into
a congruence on the finite carrier; each merge remembers why it happened, so
equality of two terms comes with a replayable chain of merges.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

MAX_GENERATORS = 5  # free lattice sizes grow like Dedekind numbers; 5 gives 7581


class LatticeError(ValueError):
    pass


# -- terms ---------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeTerm:
    pass


@dataclass(frozen=True)
class Bot(LatticeTerm):
    pass


@dataclass(frozen=True)
class Top(LatticeTerm):
    pass


@dataclass(frozen=True)
class Gen(LatticeTerm):
    index: int


@dataclass(frozen=True)
class Meet(LatticeTerm):
    left: LatticeTerm
    right: LatticeTerm


@dataclass(frozen=True)
class Join(LatticeTerm):
    left: LatticeTerm
    right: LatticeTerm


# -- monotone tables --------------------------------------------------------------

@lru_cache(maxsize=None)
def _gen_table(n: int, i: int) -> int:
    table = 0
    for k in range(1 << n):
        if (k >> i) & 1:
            table |= 1 << k
    return table


def _top_table(n: int) -> int:
    return (1 << (1 << n)) - 1


def term_table(t: LatticeTerm, n: int) -> int:
    """Evaluate a term on all 2^n zero-one assignments at once."""
    if isinstance(t, Bot):
        return 0
    if isinstance(t, Top):
        return _top_table(n)
    if isinstance(t, Gen):
        if not 0 <= t.index < n:
            raise LatticeError(f"generator index {t.index} out of range")
        return _gen_table(n, t.index)
    if isinstance(t, Meet):
        return term_table(t.left, n) & term_table(t.right, n)
    if isinstance(t, Join):
        return term_table(t.left, n) | term_table(t.right, n)
    raise LatticeError(f"not a lattice term: {t!r}")


# -- antichains ----------------------------------------------------------------------

class Antichain:
    """A set of pairwise-incomparable generator subsets: a minimal monotone DNF."""

    __slots__ = ("subsets",)

    def __init__(self, subsets):
        canon = sorted(set(tuple(sorted(set(s))) for s in subsets))
        for a in canon:
            for b in canon:
                if a != b and set(a) <= set(b):
                    raise LatticeError(f"not an antichain: {a} is contained in {b}")
        self.subsets = tuple(canon)

    def __eq__(self, other) -> bool:
        return isinstance(other, Antichain) and self.subsets == other.subsets

    def __hash__(self) -> int:
        return hash(self.subsets)

    def __lt__(self, other: "Antichain") -> bool:
        # the pinned serialization order, used to pick class representatives
        return self.subsets < other.subsets

    def __repr__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, s)) + "}" for s in self.subsets)
        return "Antichain({" + inner + "})"

    @property
    def is_bot(self) -> bool:
        return not self.subsets

    @property
    def is_top(self) -> bool:
        return self.subsets == ((),)

    def table(self, n: int) -> int:
        acc = 0
        for s in self.subsets:
            row = _top_table(n)
            for i in s:
                if not 0 <= i < n:
                    raise LatticeError(f"generator index {i} out of range")
                row &= _gen_table(n, i)
            acc |= row
        return acc

    @classmethod
    def from_table(cls, table: int, n: int) -> "Antichain":
        minimal = []
        for k in range(1 << n):
            if not (table >> k) & 1:
                continue
            if any((table >> (k ^ (1 << i))) & 1 for i in range(n) if (k >> i) & 1):
                continue  # some single generator can be dropped: not minimal
            minimal.append(tuple(i for i in range(n) if (k >> i) & 1))
        return cls(minimal)

    def to_text(self, gennames) -> str:
        """The DNF spelled as a lattice term (meets joined by `\\/`)."""
        if self.is_bot:
            return "bot"
        if self.is_top:
            return "top"
        return " \\/ ".join(" /\\ ".join(gennames[i] for i in s) for s in self.subsets)


def _nf_sets(t: LatticeTerm) -> set:
    if isinstance(t, Bot):
        return set()
    if isinstance(t, Top):
        return {frozenset()}
    if isinstance(t, Gen):
        return {frozenset((t.index,))}
    if isinstance(t, (Meet, Join)):
        a, b = _nf_sets(t.left), _nf_sets(t.right)
        cand = a | b if isinstance(t, Join) else {x | y for x in a for y in b}
        return {s for s in cand if not any(u < s for u in cand)}
    raise LatticeError(f"not a lattice term: {t!r}")


def lat_nf_free(t: LatticeTerm) -> Antichain:
    """Normal form in the free bounded distributive lattice: minimal monotone DNF."""
    return Antichain(_nf_sets(t))


def lat_enumerate(n: int) -> tuple:
    """All elements of the free bounded distributive lattice, canonically ordered."""
    if n > MAX_GENERATORS:
        raise LatticeError(f"at most {MAX_GENERATORS} generators are supported, got {n}")
    tables = _monotone_tables(n)
    chains = [Antichain.from_table(t, n) for t in tables]
    chains.sort()
    return tuple(chains)


@lru_cache(maxsize=None)
def _monotone_tables(n: int) -> tuple:
    """Tables of all monotone Boolean functions of n variables."""
    if n < 0:
        raise LatticeError("negative generator count")
    if n > MAX_GENERATORS:
        raise LatticeError(f"at most {MAX_GENERATORS} generators are supported, got {n}")
    if n == 0:
        return (0, 1)
    prev = _monotone_tables(n - 1)
    half = 1 << (n - 1)
    out = []
    for low in prev:
        for high in prev:
            if low & ~high == 0:  # monotone in the last generator
                out.append(low | (high << (1 << (n - 1))))
    return tuple(sorted(out))


# -- presentations and congruences -------------------------------------------------------

class LatticePresentation:
    __slots__ = ("gennames", "relations")

    def __init__(self, gennames, relations=()):
        gennames = tuple(gennames)
        if len(gennames) > MAX_GENERATORS:
            raise LatticeError(
                f"at most {MAX_GENERATORS} generators are supported, got {len(gennames)}"
            )
        if len(set(gennames)) != len(gennames):
            raise LatticeError(f"duplicate generator names in {gennames!r}")
        for name in gennames:
            if not name.isidentifier() or name in ("bot", "top"):
                raise LatticeError(f"bad generator name {name!r}")
        self.gennames = gennames
        self.relations = tuple((l, r) for l, r in relations)

    @property
    def ngens(self) -> int:
        return len(self.gennames)

    @classmethod
    def parse(cls, text: str) -> "LatticePresentation":
        gennames = None
        law_chunks = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            if head == "gens":
                gennames = tuple(rest.split())
            elif head == "laws":
                law_chunks.append(rest)
            else:
                raise LatticeError(f"line {lineno}: unknown declaration {head!r}")
        if gennames is None:
            raise LatticeError("missing `gens` declaration")
        shell = cls(gennames, ())
        relations = []
        for chunk in law_chunks:
            for law in chunk.split(","):
                law = law.strip()
                if not law:
                    continue
                left, sep, right = law.partition("=")
                if not sep:
                    raise LatticeError(f"law {law!r} is missing `=`")
                relations.append(
                    (parse_lattice_term(left, shell), parse_lattice_term(right, shell))
                )
        return cls(gennames, relations)

    @classmethod
    def load(cls, path) -> "LatticePresentation":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read())


@dataclass(frozen=True)
class Merge:
    """One step of the congruence closure: why two elements were identified."""

    left: int  # tables
    right: int
    law: int  # index of the generating relation
    context: int | None = None  # table combined against both sides, if any
    op: str | None = None  # "meet" or "join" for derived merges


class CongruenceTable:
    """The smallest lattice congruence containing the presentation's laws.

    Built by a worklist fixpoint: every merged pair spawns, for every carrier
    element z, the meets and joins of its two sides against z.  Each merge
    keeps the law it descends from and the context element that triggered it,
    forming a forest that yields replayable equality traces.
    """

    def __init__(self, presentation: LatticePresentation):
        self.presentation = presentation
        n = presentation.ngens
        self.n = n
        carrier = _monotone_tables(n)
        self.carrier = carrier
        self._parent = {t: t for t in carrier}
        self._size = {t: 1 for t in carrier}
        self._forest: dict = {t: [] for t in carrier}

        pending = deque()
        for law_index, (lt, rt) in enumerate(presentation.relations):
            pending.append(Merge(term_table(lt, n), term_table(rt, n), law_index))
        while pending:
            merge = pending.popleft()
            if self._find(merge.left) == self._find(merge.right):
                continue
            self._union(merge)
            a, b = merge.left, merge.right
            for z in carrier:
                if self._find(a & z) != self._find(b & z):
                    pending.append(Merge(a & z, b & z, merge.law, z, "meet"))
                if self._find(a | z) != self._find(b | z):
                    pending.append(Merge(a | z, b | z, merge.law, z, "join"))

        self._representative: dict = {}
        by_root: dict = {}
        for t in carrier:
            by_root.setdefault(self._find(t), []).append(t)
        for root, members in by_root.items():
            rep = min(members, key=lambda t: Antichain.from_table(t, n).subsets)
            for t in members:
                self._representative[t] = rep
        self._members = by_root

    def _find(self, t: int) -> int:
        parent = self._parent
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def _union(self, merge: Merge) -> None:
        ra, rb = self._find(merge.left), self._find(merge.right)
        if self._size[ra] < self._size[rb] or (self._size[ra] == self._size[rb] and ra > rb):
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        self._forest[merge.left].append((merge.right, merge))
        self._forest[merge.right].append((merge.left, merge))

    # -- queries -------------------------------------------------------------

    def same(self, a: int, b: int) -> bool:
        return self._find(a) == self._find(b)

    def representative(self, t: int) -> int:
        return self._representative[self._find(t)]

    def classes(self) -> list:
        """Class member tables, each class sorted, classes sorted by representative."""
        out = []
        for members in self._members.values():
            out.append(sorted(members, key=lambda t: Antichain.from_table(t, self.n).subsets))
        out.sort(key=lambda ms: Antichain.from_table(ms[0], self.n).subsets)
        return out

    def trace(self, a: int, b: int) -> list | None:
        """The chain of merges connecting a and b in the proof forest."""
        if not self.same(a, b):
            return None
        if a == b:
            return []
        seen = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y, merge in self._forest[x]:
                if y not in seen:
                    seen[y] = (x, merge)
                    queue.append(y)
        path = []
        x = b
        while seen[x] is not None:
            prev, merge = seen[x]
            path.append(merge)
            x = prev
        path.reverse()
        return path


def lat_congruence(p: LatticePresentation) -> CongruenceTable:
    return CongruenceTable(p)


def lat_nf(t: LatticeTerm, p: LatticePresentation, table: CongruenceTable | None = None) -> Antichain:
    """Normal form under a presentation: the minimal element of the class."""
    table = table or lat_congruence(p)
    rep = table.representative(term_table(t, p.ngens))
    return Antichain.from_table(rep, p.ngens)


def lat_decide_eq(t: LatticeTerm, u: LatticeTerm, p: LatticePresentation,
                  table: CongruenceTable | None = None):
    """Equality modulo the presentation, with the connecting chain of merges."""
    table = table or lat_congruence(p)
    a = term_table(t, p.ngens)
    b = term_table(u, p.ngens)
    if not table.same(a, b):
        return False, None
    return True, table.trace(a, b)


# -- term syntax ------------------------------------------------------------------

_LAT_TOKEN = re.compile(
    r"\s*(?:(?P<meet>/\\)|(?P<join>\\/)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<paren>[()]))"
)


def parse_lattice_term(text: str, p: LatticePresentation) -> LatticeTerm:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _LAT_TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise LatticeError(f"unexpected character {stripped[0]!r} in lattice term")
        tokens.append((m.lastgroup, m.group(m.lastgroup)))
        pos = m.end()
    tokens.append(("end", ""))
    index = {name: i for i, name in enumerate(p.gennames)}
    state = {"pos": 0}

    def peek():
        return tokens[state["pos"]]

    def advance():
        tok = tokens[state["pos"]]
        state["pos"] += 1
        return tok

    def atom() -> LatticeTerm:
        kind, text = advance()
        if kind == "ident":
            if text == "bot":
                return Bot()
            if text == "top":
                return Top()
            if text not in index:
                raise LatticeError(f"unknown generator {text!r}")
            return Gen(index[text])
        if kind == "paren" and text == "(":
            t = expr()
            kind, text = advance()
            if text != ")":
                raise LatticeError("missing `)`")
            return t
        raise LatticeError(f"unexpected {text or 'end of input'!r} in lattice term")

    def meet() -> LatticeTerm:
        t = atom()
        while peek()[0] == "meet":
            advance()
            t = Meet(t, atom())
        return t

    def expr() -> LatticeTerm:
        t = meet()
        while peek()[0] == "join":
            advance()
            t = Join(t, meet())
        return t

    t = expr()
    if peek()[0] != "end":
        raise LatticeError(f"unexpected {peek()[1]!r} after lattice term")
    return t
