"""Builtin knot presentations and representations.

Each entry stores the canonical presentation/representation file texts;
the parsed objects are derived from those texts, so emitting an entry
and re-parsing it reproduces the catalog exactly.

* ``figure-eight``: the genus-one fibered knot with two meridional
  generators and a noncommutative SL(2, Q(w)) representation,
  w^2 + w + 1 = 0.  Its torsion is the monic t^2 - 4t + 1.
* ``kinoshita-terasaka``: the classical knot with trivial Alexander
  polynomial, four generators, and an SL(2, F_5) representation whose
  torsion has leading coefficient 4 — certifying it is not fibered.
* ``seven-generator``: a knot with monic classical Alexander polynomial
  t^4 - t^3 + t^2 - t + 1 whose SL(2, F_5) torsion 3t^2 + 3 is
  nevertheless non-monic, so the classical test is inconclusive while
  the twisted one certifies non-fiberedness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .presentation import Presentation, parse_presentation
from .rep import parse_representation

_FIGURE_EIGHT_PRES = """\
# figure-eight knot: relation (z x = y z) with z = x^-1 y x y^-1 x^-1
gens x y
rel x^-1 y x y^-1 = y x^-1 y x y^-1 x^-1
"""

_FIGURE_EIGHT_REP = """\
# parabolic SL(2) representation over Q(w), w^2 + w + 1 = 0
field p=0
ext w^2 = -w - 1
dim 2
mat x = [[1, 1], [0, 1]]
mat y = [[1, 0], [-w, 1]]
"""

_KT_PRES = """\
# Kinoshita-Terasaka knot: four generators, three relations
gens x1 x2 x3 x4
rel x1 x2 x1^-1 = x4 x2 x4 x2^-1 x4^-1
rel x4 x2 x4^-1 = x2^-1 x3 x1 x3^-1 x2 x1 x2^-1 x3 x1^-1 x3^-1 x2
rel x1 x3 x1^-1 = x4 x3 x4 x3^-1 x4^-1
"""

_KT_REP = """\
# noncommutative SL(2, F_5) representation
field p=5
dim 2
mat x1 = [[0, 1], [4, 1]]
mat x2 = [[0, 4], [1, 1]]
mat x3 = [[0, 1], [4, 1]]
mat x4 = [[4, 4], [3, 2]]
"""

_SEVEN_PRES = """\
# seven-generator presentation of a non-fibered knot whose classical
# Alexander polynomial t^4 - t^3 + t^2 - t + 1 is monic
gens x1 x2 x3 x4 x5 x6 x7
rel x2 x1 = x3 x2 x1 x2 x1^-1 x2^-1
rel x6 x5 x6^-1 = x4 x3 x1^-1 x3 x1^-1 x3 x1 x3^-1 x1 x3^-1 x1 x3^-1 x4^-1
rel x6 x7 x6^-1 = x4 x3 x1^-1 x3 x1^-1 x3 x1 x3^-1 x1 x3^-1 x4^-1
rel x5 x6 x5^-1 = x7 x2 x7^-1
rel x2 x6 x2^-1 = x3 x2 x1 x2 x1^-1 x2^-1 x3^-1 x7 x3 x2 x1 x2^-1 x1^-1 x2^-1 x3^-1
rel x5 x4 x5^-1 x7 = x7 x3 x2 x1 x2 x1^-1 x2^-1 x3^-1
"""

_SEVEN_REP = """\
# noncommutative SL(2, F_5) representation
field p=5
dim 2
mat x1 = [[1, 1], [0, 1]]
mat x2 = [[1, 0], [4, 1]]
mat x3 = [[1, 0], [4, 1]]
mat x4 = [[2, 1], [4, 0]]
mat x5 = [[2, 4], [1, 0]]
mat x6 = [[3, 1], [1, 4]]
mat x7 = [[1, 4], [0, 1]]
"""

_ENTRIES = {
    "figure-eight": (_FIGURE_EIGHT_PRES, (_FIGURE_EIGHT_REP,)),
    "kinoshita-terasaka": (_KT_PRES, (_KT_REP,)),
    "seven-generator": (_SEVEN_PRES, (_SEVEN_REP,)),
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    presentation: Presentation
    representations: tuple
    presentation_text: str
    representation_texts: tuple


def names():
    return tuple(_ENTRIES)


@lru_cache(maxsize=None)
def entry(name: str) -> CatalogEntry:
    if name not in _ENTRIES:
        raise KeyError(
            f"no builtin example {name!r}; available: {', '.join(_ENTRIES)}")
    pres_text, rep_texts = _ENTRIES[name]
    pres = parse_presentation(pres_text)
    reps = tuple(parse_representation(t, pres.generators) for t in rep_texts)
    return CatalogEntry(name, pres, reps, pres_text, rep_texts)
