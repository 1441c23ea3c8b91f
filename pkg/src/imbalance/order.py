"""The imbalance order on path-length sequences of a common size.

``A ⊴ B`` (A is more balanced than or equal to B) when every partial Kraft
sum of the lex-enumerated code of A is at most the matching one of B.  The
same relation is also decided by comparing lex indices of prefix-comparable
codeword pairs; both tests are implemented and kept independent.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .words import Code, CodeError, Dyadic, PathLengthSequence, canonical_code, is_maximal, kraft_sum


class OrderRelation(str, enum.Enum):
    EQUAL = "equal"
    FIRST_MORE_BALANCED = "first_more_balanced"
    SECOND_MORE_BALANCED = "second_more_balanced"
    INCOMPARABLE = "incomparable"

    def __str__(self) -> str:
        return self.value


def _check_sizes(a, b) -> None:
    if len(a) != len(b):
        raise CodeError(f"size mismatch: {len(a)} vs {len(b)}")


def _as_seq(x) -> PathLengthSequence:
    return x if isinstance(x, PathLengthSequence) else PathLengthSequence(x)


def kraft_profile(seq: PathLengthSequence) -> tuple[Dyadic, ...]:
    """Partial Kraft sums ``K(a_1..a_m)`` for m = 1..t."""
    seq = _as_seq(seq)
    out = []
    total = Dyadic()
    for ell in seq:
        total = total + Dyadic.weight(ell)
        out.append(total)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def scaled_profile(seq: PathLengthSequence) -> tuple[int, ...]:
    """Partial Kraft sums as integers over the common denominator ``2**(t-1)``.

    Every length of a maximal code of size t is at most t - 1, so the
    scaling is exact.
    """
    top = max(len(seq) - 1, 0)
    out = []
    acc = 0
    for ell in seq:
        acc += 1 << (top - ell)
        out.append(acc)
    return tuple(out)


def le_majorization(a: PathLengthSequence, b: PathLengthSequence) -> bool:
    """``a ⊴ b`` by comparing partial Kraft sums."""
    a, b = _as_seq(a), _as_seq(b)
    _check_sizes(a, b)
    return all(x <= y for x, y in zip(scaled_profile(a), scaled_profile(b)))


def comparable_pairs(a: Code, b: Code):
    """Yield 1-based index pairs ``(i, j)`` with ``a_i``, ``b_j`` prefix-comparable.

    Linear merge over the two lex-sorted codes; pairs come out in lex order.
    """
    i = j = 0
    aw, bw = a.words, b.words
    while i < len(aw) and j < len(bw):
        x, y = aw[i], bw[j]
        if x == y:
            yield i + 1, j + 1
            i += 1
            j += 1
        elif y.startswith(x):
            yield i + 1, j + 1
            j += 1
        elif x.startswith(y):
            yield i + 1, j + 1
            i += 1
        elif x < y:
            i += 1
        else:
            j += 1


def code_le_indices(a: Code, b: Code) -> bool:
    _check_sizes(a, b)
    return all(i >= j for i, j in comparable_pairs(a, b))


def code_le_majorization(a: Code, b: Code) -> bool:
    """Majorization on arbitrary (not necessarily lex monotone) codes."""
    _check_sizes(a, b)
    ka = kb = Dyadic()
    for x, y in zip(a, b):
        ka = ka + Dyadic.weight(len(x))
        kb = kb + Dyadic.weight(len(y))
        if kb < ka:
            return False
    return True


def le_indices(a: PathLengthSequence, b: PathLengthSequence) -> bool:
    """``a ⊴ b`` iff every prefix-comparable pair ``(a_i, b_j)`` has ``i >= j``."""
    a, b = _as_seq(a), _as_seq(b)
    _check_sizes(a, b)
    return code_le_indices(canonical_code(a), canonical_code(b))


def compare(a: PathLengthSequence, b: PathLengthSequence) -> OrderRelation:
    a, b = _as_seq(a), _as_seq(b)
    below = le_majorization(a, b)
    above = le_majorization(b, a)
    if below and above:
        return OrderRelation.EQUAL
    if below:
        return OrderRelation.FIRST_MORE_BALANCED
    if above:
        return OrderRelation.SECOND_MORE_BALANCED
    return OrderRelation.INCOMPARABLE


@dataclass(frozen=True)
class Block:
    """One pair of matching comparability blocks; indices are 1-based."""

    index: int
    a_indices: range
    b_indices: range
    a_words: tuple
    b_words: tuple

    @property
    def dominating(self) -> str:
        sa, sb = len(self.a_words) == 1, len(self.b_words) == 1
        if sa and not sb:
            return "A"
        if sb and not sa:
            return "B"
        return "none"

    @property
    def kraft(self) -> Dyadic:
        return kraft_sum(self.a_words)

    def to_record(self) -> dict:
        return {
            "index": self.index,
            "a_words": [str(w) for w in self.a_words],
            "b_words": [str(w) for w in self.b_words],
            "dominating": self.dominating,
            "block_kraft": str(self.kraft),
        }


@dataclass(frozen=True)
class BlockDecomposition:
    a: Code
    b: Code
    blocks: tuple

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def a_blocks(self) -> tuple:
        return tuple(blk.a_indices for blk in self.blocks)

    @property
    def b_blocks(self) -> tuple:
        return tuple(blk.b_indices for blk in self.blocks)

    def to_records(self) -> list:
        return [blk.to_record() for blk in self.blocks]


def interval_decomposition(a: Code, b: Code) -> BlockDecomposition:
    """Split two maximal codes into matching lex intervals of comparable words.

    Two words of one code share a block exactly when some word of the other
    code is comparable with both; since comparable pairs come out of the
    merge in lex order, a block closes as soon as a pair shares no index
    with its predecessor.
    """
    if not isinstance(a, Code):
        a = Code(a)
    if not isinstance(b, Code):
        b = Code(b)
    _check_sizes(a, b)
    for name, c in (("first", a), ("second", b)):
        if not is_maximal(c):
            raise CodeError(f"{name} code is not maximal")

    groups: list[tuple[list, list]] = []
    last = None
    for i, j in comparable_pairs(a, b):
        if last is not None and (i == last[0] or j == last[1]):
            ga, gb = groups[-1]
            if ga[-1] != i:
                ga.append(i)
            if gb[-1] != j:
                gb.append(j)
        else:
            groups.append(([i], [j]))
        last = (i, j)

    blocks = []
    for idx, (ga, gb) in enumerate(groups, start=1):
        ra = range(ga[0], ga[-1] + 1)
        rb = range(gb[0], gb[-1] + 1)
        blocks.append(
            Block(
                index=idx,
                a_indices=ra,
                b_indices=rb,
                a_words=tuple(a[k - 1] for k in ra),
                b_words=tuple(b[k - 1] for k in rb),
            )
        )
    if sum(len(blk.a_indices) for blk in blocks) != len(a) or sum(len(blk.b_indices) for blk in blocks) != len(b):
        raise AssertionError("comparability blocks do not cover both codes")
    return BlockDecomposition(a, b, tuple(blocks))


def dominating_blocks(dec: BlockDecomposition) -> list[tuple[str, int]]:
    return [(blk.dominating, blk.index) for blk in dec.blocks if blk.dominating != "none"]
