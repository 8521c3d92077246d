"""Freely reduced words and the integral group ring of a free group.

A word is a tuple of (generator index, exponent) letters with exponent
+1 or -1; free reduction happens at construction, so every ``Word`` in
circulation is reduced and the empty word is the identity.  Group-ring
elements are finite integer combinations of words, stored as a map with
no zero coefficients.
"""

from __future__ import annotations

from .errors import BadGeneratorIndex, IndexOutOfRange


class Word:
    """A freely reduced word in a finitely generated free group."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = free_reduce(letters)

    @classmethod
    def identity(cls) -> "Word":
        return _raw(())

    @classmethod
    def gen(cls, index: int, exponent: int = 1) -> "Word":
        """The word x_index^exponent (any nonzero integer exponent)."""
        if index < 0:
            raise BadGeneratorIndex(f"negative generator index {index}")
        if exponent == 0:
            return _raw(())
        e = 1 if exponent > 0 else -1
        return _raw(((index, e),) * abs(exponent))

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        # only the junction can cancel, both sides being reduced already
        a = list(self.letters)
        b = list(other.letters)
        i = len(a) - 1
        j = 0
        while i >= 0 and j < len(b) and a[i][0] == b[j][0] and a[i][1] == -b[j][1]:
            i -= 1
            j += 1
        return _raw(tuple(a[: i + 1]) + tuple(b[j:]))

    def inverse(self) -> "Word":
        return _raw(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Word.identity()
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, images) -> "Word":
        """Apply the endomorphism sending x_i to images[i]."""
        out = Word.identity()
        for g, e in self.letters:
            if g >= len(images):
                raise IndexOutOfRange(f"no image for generator {g}")
            w = images[g]
            out = out * (w if e > 0 else w.inverse())
        return out

    def exponent_sum(self, index: int) -> int:
        return sum(e for g, e in self.letters if g == index)

    def max_index(self) -> int:
        """Largest generator index used, or -1 for the identity."""
        return max((g for g, _ in self.letters), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def render(self, names) -> str:
        if not self.letters:
            return "1"
        parts = []
        for g, e in self.letters:
            parts.append(names[g] if e > 0 else f"{names[g]}^-1")
        return " ".join(parts)

    def __repr__(self):
        if not self.letters:
            return "Word()"
        body = " ".join(f"x{g}" if e > 0 else f"x{g}^-1" for g, e in self.letters)
        return f"Word({body})"


def _raw(letters) -> Word:
    w = Word.__new__(Word)
    w.letters = letters
    return w


def free_reduce(letters) -> tuple:
    stack = []
    for g, e in letters:
        if e not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {e}")
        if g < 0:
            raise BadGeneratorIndex(f"negative generator index {g}")
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


class GroupRingElement:
    """A finite integer combination of words, i.e. an element of Z[F]."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        canon = {}
        if terms:
            for w, c in terms.items():
                c = int(c)
                if c:
                    canon[w] = c
        self.terms = canon

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word.identity(): 1})

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        if isinstance(other, Word):
            other = GroupRingElement.from_word(other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return GroupRingElement(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            return GroupRingElement.from_word(other) * self
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self, names) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda w: (len(w.letters), w.letters))
        out = []
        for i, w in enumerate(keys):
            c = self.terms[w]
            body = w.render(names)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(out)

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        return f"GroupRingElement({len(self.terms)} terms)"
