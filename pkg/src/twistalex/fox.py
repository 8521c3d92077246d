"""Free differential calculus and assembly of the Alexander matrix.

The derivative of a word with respect to a generator is computed in one
left-to-right pass that accumulates prefix words: a letter x_j
contributes +prefix, a letter x_j^-1 contributes -(prefix * x_j^-1).
That realizes the defining rules  d(x_j)/d(x_j) = 1,
d(x_j^-1)/d(x_j) = -x_j^-1  and the product rule
d(uv) = d(u) + u d(v)  without recursion.
"""

from __future__ import annotations

from .errors import IndexOutOfRange, NotDeficiencyOne
from .polymat import PolyMatrix
from .presentation import Presentation
from .words import GroupRingElement, Word, _raw


def fox_derivative(w: Word, j: int, rank: int | None = None) -> GroupRingElement:
    """d(w)/d(x_j) as an element of the free-group ring."""
    if j < 0 or (rank is not None and j >= rank):
        raise IndexOutOfRange(f"generator index {j} out of range")
    terms = {}
    prefix = ()
    # every prefix of a reduced word is reduced, so plain appends suffice
    for g, e in w:
        if e > 0:
            if g == j:
                pw = _raw(prefix)
                terms[pw] = terms.get(pw, 0) + 1
            prefix = prefix + ((g, e),)
        else:
            prefix = prefix + ((g, e),)
            if g == j:
                pw = _raw(prefix)
                terms[pw] = terms.get(pw, 0) - 1
    return GroupRingElement(terms)


def relation_derivative(relation, j: int, rank: int | None = None) -> GroupRingElement:
    """d(lhs)/d(x_j) - d(rhs)/d(x_j) for a relation lhs = rhs."""
    lhs, rhs = relation
    return fox_derivative(lhs, j, rank) - fox_derivative(rhs, j, rank)


def alexander_matrix(p: Presentation, phi) -> PolyMatrix:
    """The ((u-1)n x un) matrix of evaluated relation derivatives.

    ``phi`` is a :class:`~twistalex.rep.TensorEvaluator`; block (i, j)
    is its value on d(r_i)/d(x_j), blocks in relation-major,
    generator-minor order.
    """
    if not p.is_deficiency_one():
        raise NotDeficiencyOne(
            f"{len(p.relations)} relations on {p.rank} generators")
    u = p.rank
    n = phi.dimension
    spec = phi.field
    rows = []
    for rel in p.relations:
        blocks = [phi(relation_derivative(rel, j, u)) for j in range(u)]
        for r in range(n):
            rows.append([blocks[j][r, c] for j in range(u) for c in range(n)])
    return PolyMatrix(spec, rows) if rows else PolyMatrix.zero(spec, 0, u * n)
