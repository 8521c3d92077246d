"""Group presentations: the text format, abelianization, and builders.

A presentation is an ordered list of generator names plus relations
``lhs = rhs`` (a relator r is stored as ``(r, identity)``).  Relations
rather than relators are the native form here because the downstream
Alexander-matrix computation differentiates both sides and subtracts,
which is also how the worked examples this package reproduces are laid
out.

The file grammar (UTF-8, line oriented, ``#`` comments):

    gens <name> <name> ...          # exactly once, distinct names
    rel <word>                      # a relator
    rel <word> = <word>             # a relation
    <word> ::= tokens  name | name^-1 | name^k   (k nonzero, expanded)

Anything else is rejected with a positioned error.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    BadGeneratorIndex,
    ClosureNotKnot,
    DuplicateGenerator,
    NotAbelianizedAutomorphism,
    NotInfiniteCyclic,
    ParseError,
    UnknownGenerator,
)
from .snf import smith_decomposition
from .words import Word

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_EXP_RE = re.compile(r"-?[0-9]+\Z")


@dataclass(frozen=True)
class Presentation:
    """Generators, relations, and a tag recording where they came from."""

    generators: tuple
    relations: tuple
    source: str = "generic"

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        u = len(self.generators)
        for lhs, rhs in self.relations:
            for w in (lhs, rhs):
                if w.max_index() >= u:
                    raise BadGeneratorIndex(
                        f"relation uses generator index {w.max_index()} "
                        f"but only {u} generators are declared")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def is_deficiency_one(self) -> bool:
        return len(self.relations) == self.rank - 1

    def generator_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"no generator named {name!r}") from None

    def exponent_matrix(self):
        """Rows: per-relation exponent-sum differences, one column per generator."""
        return [
            [lhs.exponent_sum(j) - rhs.exponent_sum(j) for j in range(self.rank)]
            for lhs, rhs in self.relations
        ]

    def render(self) -> str:
        lines = ["gens " + " ".join(self.generators)]
        for lhs, rhs in self.relations:
            if rhs.is_identity():
                lines.append(f"rel {lhs.render(self.generators)}")
            else:
                lines.append(f"rel {lhs.render(self.generators)} = {rhs.render(self.generators)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AbelianizationMap:
    """The homomorphism onto Z = <t>, as exponents a with x_i -> t^(a_i)."""

    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    def alpha(self, w: Word) -> int:
        """Total t-exponent of a word."""
        return sum(e * self.exponents[g] for g, e in w)

    def of_generator(self, i: int) -> int:
        return self.exponents[i]


# --------------------------------------------------------------- parsing

def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _tokens(line: str):
    return [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", line)]


def _word_from_tokens(tokens, index_of, line_no) -> Word:
    letters = []
    for col, tok in tokens:
        name, caret, exp = tok.partition("^")
        if caret:
            if not _EXP_RE.match(exp) or int(exp) == 0:
                raise ParseError(f"bad exponent {exp!r}", line_no, col)
            k = int(exp)
        else:
            k = 1
        if not _NAME_RE.match(name):
            raise ParseError(f"bad generator token {tok!r}", line_no, col)
        if name not in index_of:
            raise UnknownGenerator(f"unknown generator {name!r}", line_no, col)
        g = index_of[name]
        e = 1 if k > 0 else -1
        letters.extend([(g, e)] * abs(k))
    return Word(letters)


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file grammar; errors carry line/column."""
    generators = None
    index_of = {}
    relations = []
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(_strip_comment(raw))
        if not tokens:
            continue
        col0, head = tokens[0]
        if head == "gens":
            if generators is not None:
                raise ParseError("duplicate gens line", line_no, col0)
            if len(tokens) == 1:
                raise ParseError("gens line declares no generators", line_no, col0)
            generators = []
            for col, name in tokens[1:]:
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad generator name {name!r}", line_no, col)
                if name in index_of:
                    raise DuplicateGenerator(f"duplicate generator {name!r}", line_no, col)
                index_of[name] = len(generators)
                generators.append(name)
        elif head == "rel":
            body = tokens[1:]
            if not body:
                raise ParseError("empty relation", line_no, col0)
            eq_positions = [i for i, (_, tok) in enumerate(body) if tok == "="]
            if len(eq_positions) > 1:
                bad = body[eq_positions[1]]
                raise ParseError("more than one '=' in relation", line_no, bad[0])
            if eq_positions:
                cut = eq_positions[0]
                lhs_toks, rhs_toks = body[:cut], body[cut + 1:]
                if not lhs_toks or not rhs_toks:
                    raise ParseError("relation side is empty", line_no, body[cut][0])
                lhs = _word_from_tokens(lhs_toks, index_of, line_no)
                rhs = _word_from_tokens(rhs_toks, index_of, line_no)
            else:
                lhs = _word_from_tokens(body, index_of, line_no)
                rhs = Word.identity()
            relations.append((lhs, rhs))
        else:
            raise ParseError(f"expected 'gens' or 'rel', got {head!r}", line_no, col0)
    if generators is None:
        raise ParseError("missing gens line", line_no + 1, 1)
    return Presentation(tuple(generators), tuple(relations))


def parse_word(text: str, generators) -> Word:
    """Parse a single word in the file grammar against the given names."""
    index_of = {name: i for i, name in enumerate(generators)}
    tokens = _tokens(_strip_comment(text))
    return _word_from_tokens(tokens, index_of, 1)


# -------------------------------------------------------- abelianization

def abelianization(p: Presentation) -> AbelianizationMap:
    """The map onto Z, computed from the Smith form of the exponent matrix.

    Succeeds exactly when the abelianized group is infinite cyclic;
    the returned exponent vector is primitive with its first nonzero
    entry positive.  Presentations built from a monodromy carry their
    canonical circle-direction map (surface generators to 1, the
    meridional generator to t); that map is used directly, since the
    mapping torus of an arbitrary automorphism can have larger first
    homology even though the torsion quotient still makes sense.
    """
    u = p.rank
    if p.source == "fibered":
        a = AbelianizationMap((0,) * (u - 1) + (1,))
        for lhs, rhs in p.relations:
            if a.alpha(lhs) != a.alpha(rhs):
                raise NotInfiniteCyclic(
                    "presentation tagged fibered is not compatible with the "
                    "circle-direction abelianization")
        return a
    rows = p.exponent_matrix()
    if not rows:
        if u != 1:
            raise NotInfiniteCyclic(
                f"no relations on {u} generators: free abelian rank {u}")
        return AbelianizationMap((1,))
    diag, rank, _, v = smith_decomposition(rows)
    if any(d not in (0, 1) for d in diag):
        raise NotInfiniteCyclic("abelianized group has torsion")
    free_rank = u - rank
    if free_rank != 1:
        raise NotInfiniteCyclic(f"abelianized group has rank {free_rank}")
    free_cols = [j for j in range(u) if j >= len(diag) or diag[j] == 0]
    j0 = free_cols[0]
    a = [v[i][j0] for i in range(u)]
    first = next(x for x in a if x)
    if first < 0:
        a = [-x for x in a]
    for row in rows:
        if sum(r * x for r, x in zip(row, a)) != 0:
            raise AssertionError("kernel vector check failed")
    return AbelianizationMap(tuple(a))


# ------------------------------------------------------------- builders

def _int_det(m) -> int:
    # fraction-free elimination over Z; m is small and consumed
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def presentation_from_monodromy(genus: int, images) -> Presentation:
    """The mapping-torus presentation <x_1..x_2g, h | h x_i h^-1 = phi(x_i)>.

    ``images`` lists phi(x_i) as words over the 2g surface generators.
    The exponent-sum matrix of the images must be invertible over the
    integers (the abelianized-automorphism sanity check).
    """
    n = 2 * genus
    images = tuple(images)
    if len(images) != n:
        raise ValueError(f"expected {n} images, got {len(images)}")
    for w in images:
        if w.max_index() >= n:
            raise BadGeneratorIndex(
                f"monodromy image uses generator index {w.max_index()}")
    exp = [[w.exponent_sum(j) for j in range(n)] for w in images]
    if abs(_int_det(exp)) != 1:
        raise NotAbelianizedAutomorphism(
            "exponent-sum matrix of the images is singular over Z")
    if genus == 1:
        names = ("x", "y", "h")
    else:
        names = tuple(f"x{i + 1}" for i in range(n)) + ("h",)
    h = Word.gen(n)
    relations = tuple(
        (h * Word.gen(i) * h.inverse(), images[i]) for i in range(n))
    return Presentation(names, relations, source="fibered")


def _artin_images(letter: int, strands: int):
    """Images of all generators under one Artin generator or its inverse."""
    j = abs(letter) - 1
    images = [Word.gen(k) for k in range(strands)]
    xj, xj1 = Word.gen(j), Word.gen(j + 1)
    if letter > 0:
        images[j] = xj * xj1 * xj.inverse()
        images[j + 1] = xj
    else:
        images[j] = xj1
        images[j + 1] = xj1.inverse() * xj * xj1
    return images


def braid_automorphism(braid, strands: int):
    """Images of x_1..x_s under the composite action of a braid word."""
    images = [Word.gen(k) for k in range(strands)]
    for letter in braid:
        if letter == 0 or abs(letter) > strands - 1:
            raise BadGeneratorIndex(
                f"braid letter {letter} out of range for {strands} strands")
        step = _artin_images(letter, strands)
        images = [w.substitute(images) for w in step]
    return images


def presentation_from_braid(braid, strands: int) -> Presentation:
    """Presentation of the braid closure's group, relations x_k = beta(x_k).

    The redundant last relation is dropped.  The closure must be a knot,
    i.e. the underlying permutation of the braid must be a single cycle.
    """
    braid = tuple(braid)
    images = braid_automorphism(braid, strands)
    perm = list(range(strands))
    for letter in braid:
        j = abs(letter) - 1
        perm[j], perm[j + 1] = perm[j + 1], perm[j]
    seen = [False] * strands
    cycles = 0
    for start in range(strands):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
    if cycles != 1:
        raise ClosureNotKnot(f"braid closure has {cycles} components")
    names = tuple(f"x{i + 1}" for i in range(strands))
    relations = tuple((Word.gen(k), images[k]) for k in range(strands - 1))
    return Presentation(names, relations, source="braid")
