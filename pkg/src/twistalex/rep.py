"""Unimodular representations and the evaluation homomorphism.

A representation assigns an SL(n, F) matrix to every generator; the
evaluator combines it with the abelianization so a word w maps to
t^alpha(w) * rho(w), extended linearly to the whole group ring.  The
module also hosts the backtracking search for noncommutative SL(2, F_p)
representations of a presentation, and the representation file format:

    field p=<int>                 # 0 for the rationals
    ext <name>^k = <polynomial>   # optional extension modulus
    dim <n>
    mat <generator> = [[a, b], [c, d]]   # one line per generator

Entries are integers, fractions a/b (characteristic 0), or polynomials
in the extension generator such as ``w+1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    LimitExceeded,
    NotUnimodular,
    ParseError,
    UnknownGenerator,
)
from .fields import FieldElement, FieldSpec
from .laurent import LaurentPoly
from .polymat import PolyMatrix
from .presentation import AbelianizationMap, Presentation
from .words import GroupRingElement, Word


# ------------------------------------------------- matrices over a field

def mat_identity(spec, n):
    one, zero = spec.one(), spec.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return tuple(
        tuple(sum((a[i][x] * b[x][j] for x in range(1, k)), a[i][0] * b[0][j])
              for j in range(m))
        for i in range(n))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_det(m, spec):
    """Determinant by exact Gaussian elimination (division is fine in a field)."""
    n = len(m)
    if n == 0:
        return spec.one()
    a = [list(row) for row in m]
    result = spec.one()
    for k in range(n):
        pivot = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot is None:
            return spec.zero()
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            result = -result
        result = result * a[k][k]
        inv = a[k][k].inverse()
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f.is_zero():
                continue
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return result


def mat_inverse(m, spec):
    n = len(m)
    a = [list(row) + list(mat_identity(spec, n)[i]) for i, row in enumerate(m)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if not a[r][k].is_zero()), None)
        if pivot is None:
            raise DivisionByZero("matrix is singular")
        a[k], a[pivot] = a[pivot], a[k]
        inv = a[k][k].inverse()
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i == k or a[i][k].is_zero():
                continue
            f = a[i][k]
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(row[n:]) for row in a)


# ----------------------------------------------------------- representation

class Representation:
    """Per-generator SL(n, F) images; unimodularity is checked up front."""

    __slots__ = ("field", "dimension", "images", "_inverses")

    def __init__(self, field: FieldSpec, dimension: int, images):
        self.field = field
        self.dimension = dimension
        canon = []
        for m in images:
            rows = tuple(tuple(field.element(e) for e in row) for row in m)
            if len(rows) != dimension or any(len(r) != dimension for r in rows):
                raise DimensionMismatch(
                    f"image is not {dimension}x{dimension}")
            canon.append(rows)
        self.images = tuple(canon)
        for k, m in enumerate(self.images):
            if not mat_det(m, field).is_one():
                raise NotUnimodular(f"image {k} has determinant != 1")
        self._inverses = tuple(mat_inverse(m, field) for m in self.images)

    def of_word(self, w: Word):
        """rho(w) as a field matrix."""
        out = mat_identity(self.field, self.dimension)
        for g, e in w:
            out = mat_mul(out, self.images[g] if e > 0 else self._inverses[g])
        return out

    def generator_count(self) -> int:
        return len(self.images)

    def traces(self):
        return tuple(sum((m[i][i] for i in range(1, self.dimension)), m[0][0])
                     for m in self.images)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (self.field == other.field and self.dimension == other.dimension
                and self.images == other.images)

    def __hash__(self):
        return hash((self.field, self.dimension, self.images))

    def __repr__(self):
        return f"Representation(dim={self.dimension}, gens={len(self.images)}, {self.field!r})"


def validate(rho: Representation, p: Presentation):
    """None when rho satisfies every relation, else the first failing index."""
    if rho.generator_count() != p.rank:
        raise DimensionMismatch(
            f"{rho.generator_count()} images for {p.rank} generators")
    for m in rho.images:
        if not mat_det(m, rho.field).is_one():
            raise NotUnimodular("image has determinant != 1")
    for k, (lhs, rhs) in enumerate(p.relations):
        if rho.of_word(lhs) != rho.of_word(rhs):
            return k
    return None


# --------------------------------------------------------------- evaluator

class TensorEvaluator:
    """The ring homomorphism Z[F_u] -> M(n, F[t^{+-1}]).

    A word w goes to t^alpha(w) * rho(w); sums of words go to sums.
    """

    __slots__ = ("representation", "abelianization")

    def __init__(self, representation: Representation, ab: AbelianizationMap):
        self.representation = representation
        self.abelianization = ab

    @property
    def dimension(self) -> int:
        return self.representation.dimension

    @property
    def field(self) -> FieldSpec:
        return self.representation.field

    def of_word(self, w: Word):
        """(t-exponent, field matrix) for a single word."""
        return self.abelianization.alpha(w), self.representation.of_word(w)

    def __call__(self, e) -> PolyMatrix:
        if isinstance(e, Word):
            e = GroupRingElement.from_word(e)
        n = self.dimension
        spec = self.field
        grids = [[{} for _ in range(n)] for _ in range(n)]
        for w, coeff in e.terms.items():
            k, mat = self.of_word(w)
            for i in range(n):
                row = mat[i]
                for j in range(n):
                    v = row[j]
                    if v.is_zero():
                        continue
                    cell = grids[i][j]
                    cell[k] = cell.get(k, spec.zero()) + v * coeff
        return PolyMatrix(spec, [
            [LaurentPoly(spec, grids[i][j]) for j in range(n)] for i in range(n)])

    def generator_minus_one(self, j: int) -> PolyMatrix:
        """Phi(x_j - 1), the denominator building block."""
        e = GroupRingElement({Word.gen(j): 1, Word.identity(): -1})
        return self(e)


# ------------------------------------------------ SL(2, F_p) enumeration

def sl2_elements(p: int):
    """All of SL(2, F_p) as (a, b, c, d) tuples in lexicographic order."""
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        out.append((a, b, c, d))
    return out


def _smallest_nonresidue(p: int):
    squares = {(x * x) % p for x in range(1, p)}
    for v in range(2, p):
        if v not in squares:
            return v
    return None


def sl2_class_representatives(p: int):
    """One canonical representative per SL(2, F_p) conjugacy class.

    Traces other than +-2 give a single class with the companion matrix
    of t^2 - tr*t + 1; traces +-2 split into +-identity and two scaled
    unipotent classes distinguished by quadratic residuosity.
    """
    reps = []
    nu = _smallest_nonresidue(p)
    for tr in range(p):
        if tr == 2 % p or tr == (-2) % p:
            continue
        reps.append((0, (-1) % p, 1, tr))
    for s in (1, -1):
        si = s % p
        reps.append((si, 0, 0, si))
        reps.append((si, s % p, 0, si))
        if nu is not None:
            reps.append((si, (s * nu) % p, 0, si))
    seen = set()
    unique = []
    for m in reps:
        if m not in seen:
            seen.add(m)
            unique.append(m)
    return sorted(unique)


def _tuple_inverse(m, p):
    a, b, c, d = m
    return (d, (-b) % p, (-c) % p, a)


def _tuple_mul(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


class _RelationView:
    """A relation preprocessed for the search: letter lists and supports."""

    __slots__ = ("lhs", "rhs", "support", "last")

    def __init__(self, relation):
        lhs, rhs = relation
        self.lhs = tuple(lhs)
        self.rhs = tuple(rhs)
        self.support = {g for g, _ in self.lhs} | {g for g, _ in self.rhs}
        self.last = max(self.support) if self.support else -1

    def side_gens(self, side):
        return {g for g, _ in side}


def _eval_side(letters, images, inverses, p):
    out = (1, 0, 0, 1)
    for g, e in letters:
        m = images[g] if e > 0 else inverses[images[g]]
        out = _tuple_mul(out, m, p)
    return out


def find_representations(p: Presentation, prime: int, dim: int = 2,
                         limit: int | None = None, parabolic: bool = False,
                         trace: int | None = None):
    """Noncommutative SL(2, F_prime) representations of a presentation.

    Backtracking over the generators in order: the first generator only
    ranges over one representative per conjugacy class (global
    conjugation moves any representation into that slice), later
    generators over the whole group, and a partial assignment dies as
    soon as a relation whose support is fully assigned fails.  Results
    come out in lexicographic order of the flattened matrix entries, and
    the whole procedure is deterministic.

    ``parabolic`` restricts every image to trace 2; ``trace`` pins the
    trace of every image to a given value.  With fewer than two
    generators the noncommutativity filter is vacuous and is skipped.
    Raises :class:`LimitExceeded` (carrying the truncated list) when
    more than ``limit`` representations exist.
    """
    if dim != 2:
        raise DimensionMismatch("the search is implemented for dimension 2 only")
    q = prime
    field = FieldSpec(q)
    pool = sl2_elements(q)
    first_pool = sl2_class_representatives(q)
    wanted = set()
    if parabolic:
        wanted.add(2 % q)
    if trace is not None:
        wanted.add(trace % q)
    if wanted:
        if len(wanted) > 1:
            pool = []
        else:
            t0 = wanted.pop()
            pool = [m for m in pool if (m[0] + m[3]) % q == t0]
            first_pool = [m for m in first_pool if (m[0] + m[3]) % q == t0]
    inverses = {m: _tuple_inverse(m, q) for m in pool}
    for m in first_pool:
        inverses.setdefault(m, _tuple_inverse(m, q))

    u = p.rank
    views = [_RelationView(r) for r in p.relations]
    by_depth = {k: [v for v in views if v.last == k] for k in range(u)}

    # memoized candidate filters, keyed per relation by the images of the
    # already-assigned generators it mentions
    memo = {}

    def candidates(k, images):
        base = first_pool if k == 0 else pool
        rels = by_depth.get(k, [])
        if not rels:
            return base
        cands = _filter_first(rels[0], k, images, base)
        for v in rels[1:]:
            if not cands:
                break
            cands = [m for m in cands
                     if _check(v, images, m, k)]
        return cands

    def _filter_first(v, k, images, base):
        lhs_has = k in v.side_gens(v.lhs)
        rhs_has = k in v.side_gens(v.rhs)
        key_gens = tuple(sorted(v.support - {k}))
        key = (id(v), tuple(images[g] for g in key_gens))
        hit = memo.get(key)
        if hit is not None:
            table_or_list = hit
        elif lhs_has != rhs_has:
            # hash-join: bucket the candidate-bearing side's value
            var_side = v.lhs if lhs_has else v.rhs
            table = {}
            local = dict(images)
            for m in base:
                local[k] = m
                val = _eval_side(var_side, local, inverses, q)
                table.setdefault(val, []).append(m)
            memo[key] = table_or_list = table
        else:
            local = dict(images)
            picked = []
            for m in base:
                local[k] = m
                if (_eval_side(v.lhs, local, inverses, q)
                        == _eval_side(v.rhs, local, inverses, q)):
                    picked.append(m)
            memo[key] = table_or_list = picked
        if isinstance(table_or_list, dict):
            fixed_side = v.rhs if k in v.side_gens(v.lhs) else v.lhs
            val = _eval_side(fixed_side, images, inverses, q)
            return table_or_list.get(val, [])
        return table_or_list

    def _check(v, images, m, k):
        local = dict(images)
        local[k] = m
        return (_eval_side(v.lhs, local, inverses, q)
                == _eval_side(v.rhs, local, inverses, q))

    results = []
    images = {}

    def noncommutative(assigned):
        if u < 2:
            return True
        for i in range(u):
            for j in range(i + 1, u):
                a, b = assigned[i], assigned[j]
                if _tuple_mul(a, b, q) != _tuple_mul(b, a, q):
                    return True
        return False

    def dfs(k):
        if k == u:
            if noncommutative(images):
                results.append(tuple(images[i] for i in range(u)))
                if limit is not None and len(results) > limit:
                    raise _SearchOverflow
            return
        for m in candidates(k, images):
            images[k] = m
            dfs(k + 1)
        images.pop(k, None)

    try:
        dfs(0)
    except _SearchOverflow:
        found = [_to_representation(field, r) for r in results[:limit]]
        raise LimitExceeded(limit, found) from None
    return [_to_representation(field, r) for r in results]


class _SearchOverflow(Exception):
    """Internal signal: the result cap was crossed mid-search."""


def _to_representation(field, flat):
    return Representation(field, 2, [
        ((m[0], m[1]), (m[2], m[3])) for m in flat])


# ------------------------------------------------------------ file format

_MAT_LINE = re.compile(r"\s*mat\s+(\S+)\s*=\s*(.*)$")


def parse_representation(text: str, generators) -> Representation:
    """Parse the representation file grammar against a generator list."""
    characteristic = None
    ext = None  # (name, degree, rhs coefficient strings, line)
    dim = None
    raw_mats = {}
    order = list(generators)
    gen_set = set(order)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        cut = raw.find("#")
        line = raw if cut < 0 else raw[:cut]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip()) + 1
        head = stripped.split(None, 1)[0]
        if head == "field":
            if characteristic is not None:
                raise ParseError("duplicate field line", line_no, indent)
            m = re.match(r"field\s+p\s*=\s*(-?\d+)\s*$", stripped)
            if not m:
                raise ParseError("expected 'field p=<int>'", line_no, indent)
            characteristic = int(m.group(1))
            if characteristic < 0:
                raise ParseError("characteristic cannot be negative", line_no, indent)
        elif head == "ext":
            if characteristic is None:
                raise ParseError("ext before field line", line_no, indent)
            if ext is not None:
                raise ParseError("duplicate ext line", line_no, indent)
            m = re.match(r"ext\s+([A-Za-z][A-Za-z0-9_]*)\s*\^\s*(\d+)\s*=\s*(.+)$",
                         stripped)
            if not m:
                raise ParseError("expected 'ext <name>^k = <polynomial>'",
                                 line_no, indent)
            ext = (m.group(1), int(m.group(2)), m.group(3).strip(), line_no, indent)
        elif head == "dim":
            if dim is not None:
                raise ParseError("duplicate dim line", line_no, indent)
            m = re.match(r"dim\s+(\d+)\s*$", stripped)
            if not m or int(m.group(1)) < 1:
                raise ParseError("expected 'dim <positive int>'", line_no, indent)
            dim = int(m.group(1))
        elif head == "mat":
            m = _MAT_LINE.match(line)
            if not m:
                raise ParseError("expected 'mat <generator> = [[...], ...]'",
                                 line_no, indent)
            name = m.group(1)
            if name not in gen_set:
                raise UnknownGenerator(f"unknown generator {name!r}", line_no, indent)
            if name in raw_mats:
                raise ParseError(f"duplicate matrix for {name!r}", line_no, indent)
            raw_mats[name] = (m.group(2).strip(), line_no, indent)
        else:
            raise ParseError(f"expected field/ext/dim/mat, got {head!r}",
                             line_no, indent)

    last = text.count("\n") + 1
    if characteristic is None:
        raise ParseError("missing field line", last, 1)
    if dim is None:
        raise ParseError("missing dim line", last, 1)

    if ext is not None:
        name, degree, rhs, line_no, col = ext
        if degree < 2:
            raise ParseError("extension degree must be >= 2", line_no, col)
        rhs_coeffs = _parse_entry_poly(rhs, name, degree, characteristic,
                                       line_no, col)
        modulus = [-c for c in rhs_coeffs] + [1]
        spec = FieldSpec(characteristic, modulus, generator=name)
    else:
        spec = FieldSpec(characteristic)

    mats = []
    for name in order:
        if name not in raw_mats:
            raise ParseError(f"missing matrix for generator {name!r}", last, 1)
        body, line_no, col = raw_mats[name]
        rows = _parse_matrix_body(body, spec, dim, line_no, col)
        mats.append(rows)
    return Representation(spec, dim, mats)


def _parse_matrix_body(body, spec, dim, line_no, col):
    rows, pos = _parse_nested(body, line_no, col)
    if pos != len(body.rstrip()):
        raise ParseError("trailing characters after matrix", line_no, col)
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise ParseError(f"matrix is not {dim}x{dim}", line_no, col)
    out = []
    for r in rows:
        out.append([_parse_entry(e, spec, line_no, col) for e in r])
    return out


def _parse_nested(body, line_no, col):
    n = len(body)

    def skip_ws(i):
        while i < n and body[i].isspace():
            i += 1
        return i

    def fail(msg):
        raise ParseError(msg, line_no, col)

    i = skip_ws(0)
    if i >= n or body[i] != "[":
        fail("matrix must start with '['")
    i = skip_ws(i + 1)
    rows = []
    while True:
        if i >= n:
            fail("unterminated matrix")
        if body[i] == "]" and not rows:
            return rows, i + 1
        if body[i] != "[":
            fail("expected '[' opening a matrix row")
        i += 1
        row = []
        while True:
            j = i
            while j < n and body[j] not in ",]":
                j += 1
            if j >= n:
                fail("unterminated matrix row")
            token = body[i:j].strip()
            if not token:
                fail("empty matrix entry")
            row.append(token)
            i = j + 1
            if body[j] == ",":
                continue
            break
        rows.append(row)
        i = skip_ws(i)
        if i >= n:
            fail("unterminated matrix")
        if body[i] == ",":
            i = skip_ws(i + 1)
            continue
        if body[i] == "]":
            return rows, i + 1
        fail("expected ',' or ']' between matrix rows")


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:"
    r"(?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<var1>[A-Za-z][A-Za-z0-9_]*)"
    r"(?:\^(?P<exp1>\d+))?)?"
    r"|(?P<var2>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp2>\d+))?"
    r")\s*")


def _parse_terms(text, line_no, col):
    """Yield (sign, coeff-string or None, var or None, exponent)."""
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad entry syntax near {text[pos:][:10]!r}",
                             line_no, col)
        sign = m.group("sign")
        if sign is None and not first:
            raise ParseError(f"missing '+' or '-' in {text!r}", line_no, col)
        var = m.group("var1") or m.group("var2")
        exp = m.group("exp1") or m.group("exp2")
        yield (-1 if sign == "-" else 1, m.group("coeff"),
               var, int(exp) if exp else (1 if var else 0))
        pos = m.end()
        first = False


def _coeff_value(coeff_str, characteristic):
    if coeff_str is None:
        return 1
    if "/" in coeff_str:
        if characteristic:
            raise ValueError("fractions need characteristic 0")
        num, den = coeff_str.split("/")
        return Fraction(int(num), int(den))
    return int(coeff_str)


def _parse_entry_poly(text, gen_name, degree, characteristic, line_no, col):
    """Entry as ascending base-field coefficients of a poly in gen_name."""
    coeffs = [Fraction(0) if characteristic == 0 else 0] * degree
    for sign, coeff_str, var, exp in _parse_terms(text, line_no, col):
        try:
            c = _coeff_value(coeff_str, characteristic)
        except ValueError as e:
            raise ParseError(str(e), line_no, col) from None
        if var is not None and var != gen_name:
            raise ParseError(f"unknown symbol {var!r}", line_no, col)
        if exp >= degree:
            raise ParseError(
                f"power {var}^{exp} too large for degree-{degree} extension",
                line_no, col)
        coeffs[exp] += sign * c
    if characteristic:
        coeffs = [int(c) % characteristic for c in coeffs]
    return coeffs


def _parse_entry(text, spec, line_no, col) -> FieldElement:
    coeffs = _parse_entry_poly(text, spec.generator, max(spec.degree, 1),
                               spec.characteristic, line_no, col)
    return spec.element(coeffs)


def render_representation(rho: Representation, generators) -> str:
    """Inverse of :func:`parse_representation` on canonical elements."""
    spec = rho.field
    lines = [f"field p={spec.characteristic}"]
    if spec.modulus is not None:
        k = spec.degree
        rhs = spec.element([-c for c in spec.modulus[:-1]])
        lines.append(f"ext {spec.generator}^{k} = {rhs.render()}")
    lines.append(f"dim {rho.dimension}")
    for name, m in zip(generators, rho.images):
        body = ", ".join(
            "[" + ", ".join(e.render() for e in row) + "]" for row in m)
        lines.append(f"mat {name} = [{body}]")
    return "\n".join(lines) + "\n"
