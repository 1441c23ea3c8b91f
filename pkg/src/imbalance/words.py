"""Binary words, prefix codes, exact Kraft sums and path-length sequences.

A word is a finite 0/1 string, i.e. a node of the infinite binary tree rooted
at the empty word.  Words are held as ``str`` subclasses, which makes Python's
built-in string ordering coincide with the lexicographic order used here:
``'0' < '1'`` and a proper prefix sorts before its extensions.
"""

from __future__ import annotations

import enum
import functools
import re
from fractions import Fraction
from typing import Iterable, Sequence

EMPTY_SYMBOL = "ε"


class CodeError(ValueError):
    """Malformed word, code or path-length sequence."""


class Word(str):
    """A finite word over {0, 1}.

    ``Word('')`` is the root.  ``str(Word(''))`` renders as ``'ε'``.
    """

    __slots__ = ()

    def __new__(cls, bits: str = "") -> "Word":
        if isinstance(bits, Word):
            return bits
        if bits == EMPTY_SYMBOL:
            bits = ""
        if bits.strip("01"):
            raise CodeError(f"not a binary word: {bits!r}")
        return super().__new__(cls, bits)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(int(b) for b in str.__str__(self))

    def child(self, bit: int) -> "Word":
        return Word(str.__str__(self) + ("1" if bit else "0"))

    def parent(self) -> "Word":
        if not self:
            raise CodeError("the empty word has no parent")
        return Word(str.__str__(self)[:-1])

    def __str__(self) -> str:
        return str.__str__(self) or EMPTY_SYMBOL

    def __repr__(self) -> str:
        return f"Word({str.__str__(self)!r})"


class Prefix(enum.Enum):
    EQUAL = "equal"
    V_PREFIX_OF_W = "v-prefix-of-w"
    W_PREFIX_OF_V = "w-prefix-of-v"
    INCOMPARABLE = "incomparable"


class Lex(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def prefix_compare(v: str, w: str) -> Prefix:
    """Relation between ``v`` and ``w`` in the prefix order."""
    v, w = Word(v), Word(w)
    if v == w:
        return Prefix.EQUAL
    if w.startswith(v):
        return Prefix.V_PREFIX_OF_W
    if v.startswith(w):
        return Prefix.W_PREFIX_OF_V
    return Prefix.INCOMPARABLE


def is_proper_prefix(v: str, w: str) -> bool:
    return len(v) < len(w) and w.startswith(v)


def lex_compare(v: str, w: str) -> Lex:
    v, w = Word(v), Word(w)
    if v == w:
        return Lex.EQUAL
    return Lex.LESS if v < w else Lex.GREATER


@functools.total_ordering
class Dyadic:
    """Exact non-negative rational ``numerator / 2**exponent``.

    Always normalized: the numerator is odd, or the value is zero and
    stored as ``0 / 2**0``.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if numerator < 0 or exponent < 0:
            raise ValueError("Dyadic needs a non-negative numerator and exponent")
        if numerator == 0:
            exponent = 0
        else:
            # strip common factors of two
            shift = min((numerator & -numerator).bit_length() - 1, exponent)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def weight(cls, length: int) -> "Dyadic":
        """``2**-length``: the Kraft weight of a word of that length."""
        return cls(1, length)

    def scaled(self, exponent: int) -> int:
        """Numerator of this value over ``2**exponent`` (must be exact)."""
        if exponent < self.exponent:
            raise ValueError(f"{self} is not a multiple of 2**-{exponent}")
        return self.numerator << (exponent - self.exponent)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        e = max(self.exponent, other.exponent)
        return Dyadic(self.scaled(e) + other.scaled(e), e)

    def _key(self, other: "Dyadic") -> tuple[int, int]:
        e = max(self.exponent, other.exponent)
        return self.scaled(e), other.scaled(e)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other)
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b = self._key(other)
        return a < b

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def __reduce__(self):
        return (Dyadic, (self.numerator, self.exponent))

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.numerator}, {self.exponent})"


class Code:
    """A finite prefix-free set of words, kept in lexicographic order.

    Construction validates the antichain property and fails on any
    violation; nothing is repaired.
    """

    __slots__ = ("words",)

    def __init__(self, words: Iterable[str]):
        ws = sorted(Word(w) for w in words)
        for v, w in zip(ws, ws[1:]):
            # in lex order every word lying between v and an extension of v
            # also extends v, so checking neighbours is enough
            if w.startswith(v):
                if v == w:
                    raise CodeError(f"duplicate codeword {v}")
                raise CodeError(f"not prefix-free: {v} is a prefix of {w}")
        object.__setattr__(self, "words", tuple(ws))

    def __setattr__(self, name, value):
        raise AttributeError("Code is immutable")

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]

    def __contains__(self, w) -> bool:
        return w in self.words

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.words == other.words

    def __hash__(self) -> int:
        return hash(self.words)

    def __repr__(self) -> str:
        return "Code({" + ",".join(str(w) for w in self.words) + "})"

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.words)

    def is_lex_monotone(self) -> bool:
        ls = self.lengths()
        return all(a <= b for a, b in zip(ls, ls[1:]))


def kraft_sum(code: Code | Iterable[str]) -> Dyadic:
    if not isinstance(code, Code):
        code = Code(code)
    total = Dyadic()
    for w in code:
        total = total + Dyadic.weight(len(w))
    return total


def is_maximal(code: Code | Iterable[str]) -> bool:
    """Kraft's criterion: a prefix code is maximal iff its Kraft sum is 1."""
    return kraft_sum(code) == Dyadic(1)


def _kraft_of_lengths(lengths: Sequence[int]) -> Dyadic:
    if not lengths:
        return Dyadic()
    top = max(lengths)
    return Dyadic(sum(1 << (top - ell) for ell in lengths), top)


class PathLengthSequence:
    """Non-decreasing codeword lengths of a maximal prefix code.

    Names the unique lex monotone maximal code with that length multiset.
    """

    __slots__ = ("lengths",)

    def __init__(self, lengths: Iterable[int]):
        ls = tuple(int(x) for x in lengths)
        if not ls:
            raise CodeError("a path-length sequence has at least one entry")
        if any(b < a for a, b in zip(ls, ls[1:])):
            raise CodeError(f"lengths not non-decreasing: {ls}")
        if ls[0] < 0:
            raise CodeError(f"negative length in {ls}")
        k = _kraft_of_lengths(ls)
        if k != Dyadic(1):
            raise CodeError(f"Kraft sum {k} ≠ 1")
        object.__setattr__(self, "lengths", ls)

    @classmethod
    def from_multiset(cls, lengths: Iterable[int]) -> "PathLengthSequence":
        return cls(sorted(lengths))

    def __setattr__(self, name, value):
        raise AttributeError("PathLengthSequence is immutable")

    @property
    def size(self) -> int:
        return len(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, PathLengthSequence):
            return self.lengths == other.lengths
        return NotImplemented

    def __lt__(self, other: "PathLengthSequence") -> bool:
        return self.lengths < other.lengths

    def __hash__(self) -> int:
        return hash(self.lengths)

    def __reduce__(self):
        return (PathLengthSequence, (self.lengths,))

    def __str__(self) -> str:
        return ",".join(map(str, self.lengths))

    def __repr__(self) -> str:
        return f"PathLengthSequence({self})"


_SEPARATORS = re.compile(r"[\s,]+")


def parse_sequence(text: str) -> PathLengthSequence:
    """Parse ``"2,2,2,3,4,5,5"`` (commas and/or whitespace, any order)."""
    tokens = [tok for tok in _SEPARATORS.split(text.strip()) if tok]
    if not tokens:
        raise CodeError("empty path-length sequence")
    lengths = []
    for tok in tokens:
        if not tok.isdigit():
            raise CodeError(f"invalid length token {tok!r}")
        lengths.append(int(tok))
    return PathLengthSequence.from_multiset(lengths)


@functools.lru_cache(maxsize=None)
def canonical_code(seq: PathLengthSequence) -> Code:
    """The lex monotone maximal code with the given lengths.

    Binary-counter construction: the counter holds the next free node at the
    current depth; each codeword takes it and the counter is incremented.
    """
    if not isinstance(seq, PathLengthSequence):
        seq = PathLengthSequence(seq)
    words = []
    counter = 0
    depth = seq[0]
    for ell in seq:
        counter <<= ell - depth
        depth = ell
        words.append(Word(format(counter, f"0{ell}b") if ell else ""))
        counter += 1
    if counter != 1 << depth:
        raise AssertionError("binary counter did not wrap: Kraft sum is not 1")
    return Code(words)


def sequence_of(code: Code | Iterable[str]) -> PathLengthSequence:
    if not isinstance(code, Code):
        code = Code(code)
    if not is_maximal(code):
        raise CodeError(f"code is not maximal (Kraft sum {kraft_sum(code)})")
    return PathLengthSequence(sorted(code.lengths()))
