"""Meets in the imbalance lattice by repeated balancing, plus brute-force oracles.

A balancing step takes two distinct codes B, C, picks a codeword ``c_m`` of C
and a twin pair ``w0, w1`` of C, and replaces them by ``c_m0, c_m1, w``.  The
choice of ``c_m`` and ``w`` is driven by where B and C first diverge, so that
the new code D keeps exactly the common lower bounds of B and C.  Iterating
until the pair becomes comparable yields the meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .order import OrderRelation, compare, le_majorization
from .words import Code, CodeError, PathLengthSequence, Word, canonical_code, is_proper_prefix, sequence_of


class InvariantError(RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""

    def __init__(self, message: str, state: dict | None = None):
        super().__init__(message)
        self.state = state or {}


class LatticeError(RuntimeError):
    """A pair lacks a unique greatest lower (or least upper) bound."""


@dataclass(frozen=True)
class BalancingCertificate:
    role_b: PathLengthSequence
    role_c: PathLengthSequence
    swapped: bool
    k: int
    m: int
    n: int
    b_k: Word
    c_m: Word
    w: Word
    result: PathLengthSequence

    def to_record(self) -> dict:
        return {
            "role_b": str(self.role_b),
            "role_c": str(self.role_c),
            "swapped": self.swapped,
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "b_k": str(self.b_k),
            "c_m": str(self.c_m),
            "w": str(self.w),
            "result": str(self.result),
        }

    def __str__(self) -> str:
        return (
            f"swapped={str(self.swapped).lower()} k={self.k} m={self.m} n={self.n} "
            f"b_k={self.b_k} c_m={self.c_m} w={self.w} -> {self.result}"
        )


@dataclass(frozen=True)
class MeetTrace:
    first: PathLengthSequence
    second: PathLengthSequence
    meet: PathLengthSequence
    steps: tuple = field(default=())

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def to_record(self) -> dict:
        return {
            "inputs": [str(self.first), str(self.second)],
            "steps": [s.to_record() for s in self.steps],
            "meet": str(self.meet),
            "step_count": self.step_count,
        }


def _first_prefix_of_other(x: Code, y: Code) -> int | None:
    """0-based index of the lex-first word of ``x`` that is a proper prefix of a word in ``y``."""
    j = 0
    for i, v in enumerate(x):
        # skip y-words lex-below v; they cannot extend v
        while j < len(y) and y[j] < v:
            j += 1
        if j < len(y) and is_proper_prefix(v, y[j]):
            return i
    return None


def _is_prefix_of_some(v: str, y: Code) -> bool:
    return any(is_proper_prefix(v, u) for u in y)


def balancing_step(b: PathLengthSequence, c: PathLengthSequence) -> BalancingCertificate:
    b, c = _as_seq(b), _as_seq(c)
    if len(b) != len(c):
        raise CodeError(f"size mismatch: {len(b)} vs {len(c)}")
    if b == c:
        raise CodeError("balancing needs two distinct codes")

    bw, cw = canonical_code(b), canonical_code(c)
    # first word of C properly extended in B, first word of B properly extended in C
    gamma = _first_prefix_of_other(cw, bw)
    beta = _first_prefix_of_other(bw, cw)
    state = {"first": str(b), "second": str(c)}
    if gamma is None or beta is None:
        raise InvariantError("distinct maximal codes must both dominate somewhere", state)
    if cw[gamma] == bw[beta]:
        raise InvariantError("role candidates coincide", state)
    swapped = bw[beta] < cw[gamma]
    if swapped:
        b, c, bw, cw = c, b, cw, bw
        gamma, beta = beta, gamma
    state.update(swapped=swapped)

    k = beta
    b_k = bw[k]
    m = None
    for idx, v in enumerate(cw):
        if v >= b_k:
            break
        if _is_prefix_of_some(v, bw):
            m = idx
    if m is None:
        raise InvariantError("no dominating word of C precedes b_k", state | {"k": k + 1})
    c_m = cw[m]

    run = [idx for idx, v in enumerate(cw) if is_proper_prefix(b_k, v)]
    n = None
    for p, q in zip(run, run[1:]):
        if len(cw[p]) == len(cw[q]):
            n = p
            break
    state.update(k=k + 1, m=m + 1, b_k=str(b_k), c_m=str(c_m))
    if n is None:
        raise InvariantError("no equal-length pair below b_k", state)
    w = cw[n].parent()
    state.update(n=n + 1, w=str(w))
    if cw[n] != w.child(0) or n + 1 >= len(cw) or cw[n + 1] != w.child(1):
        raise InvariantError("c_n, c_n+1 are not twins", state)
    if not (m < k and m < n):
        raise InvariantError("index order m < k, m < n violated", state)

    removed = {c_m, cw[n], cw[n + 1]}
    d_words = [v for v in cw if v not in removed] + [w, c_m.child(0), c_m.child(1)]
    try:
        result = sequence_of(Code(d_words))
    except CodeError as exc:
        raise InvariantError(f"balanced code is invalid: {exc}", state) from exc

    cert = BalancingCertificate(
        role_b=b, role_c=c, swapped=swapped, k=k + 1, m=m + 1, n=n + 1,
        b_k=b_k, c_m=c_m, w=w, result=result,
    )
    if compare(result, c) is not OrderRelation.FIRST_MORE_BALANCED:
        raise InvariantError("balancing did not strictly descend", cert.to_record())
    return cert


def meet(b: PathLengthSequence, c: PathLengthSequence) -> MeetTrace:
    """Greatest lower bound of ``b`` and ``c`` by iterated balancing."""
    b, c = _as_seq(b), _as_seq(c)
    if len(b) != len(c):
        raise CodeError(f"size mismatch: {len(b)} vs {len(c)}")
    first, second = b, c
    steps = []
    seen = set()
    while True:
        rel = compare(b, c)
        if rel in (OrderRelation.EQUAL, OrderRelation.FIRST_MORE_BALANCED):
            return MeetTrace(first, second, b, tuple(steps))
        if rel is OrderRelation.SECOND_MORE_BALANCED:
            return MeetTrace(first, second, c, tuple(steps))
        cert = balancing_step(b, c)
        # strict descent makes a repeated pair impossible
        key = (cert.role_b, cert.result)
        if key in seen:
            raise InvariantError("meet iteration revisited a pair", cert.to_record())
        seen.add(key)
        steps.append(cert)
        b, c = cert.role_b, cert.result


def _bounds(b, c, universe, below: bool) -> list:
    if below:
        return [x for x in universe if le_majorization(x, b) and le_majorization(x, c)]
    return [x for x in universe if le_majorization(b, x) and le_majorization(c, x)]


def _extreme(bounds: list, greatest: bool, what: str):
    if not bounds:
        raise LatticeError(f"no common {what} bound")
    best = bounds[0]
    for x in bounds[1:]:
        if (le_majorization(best, x) if greatest else le_majorization(x, best)):
            best = x
    for x in bounds:
        ok = le_majorization(x, best) if greatest else le_majorization(best, x)
        if not ok:
            raise LatticeError(f"common {what} bounds have no unique extreme element")
    return best


def glb_bruteforce(b, c, universe: Sequence[PathLengthSequence]) -> PathLengthSequence:
    b, c = _as_seq(b), _as_seq(c)
    return _extreme(_bounds(b, c, universe, below=True), greatest=True, what="lower")


def lub_bruteforce(b, c, universe: Sequence[PathLengthSequence]) -> PathLengthSequence:
    b, c = _as_seq(b), _as_seq(c)
    return _extreme(_bounds(b, c, universe, below=False), greatest=False, what="upper")


def join(b, c, universe: Sequence[PathLengthSequence], cross_check: bool = True) -> PathLengthSequence:
    """Least upper bound over an explicit universe of same-size sequences.

    With ``cross_check`` the result is confirmed by folding ``meet`` over all
    common upper bounds, which must land on the same element.
    """
    b, c = _as_seq(b), _as_seq(c)
    if len(b) != len(c):
        raise CodeError(f"size mismatch: {len(b)} vs {len(c)}")
    ups = _bounds(b, c, universe, below=False)
    lub = _extreme(ups, greatest=False, what="upper")
    if cross_check:
        folded = ups[0]
        for x in ups[1:]:
            folded = meet(folded, x).meet
        if folded != lub:
            raise LatticeError(f"folded meet {folded} disagrees with least upper bound {lub}")
    return lub


def _as_seq(x) -> PathLengthSequence:
    return x if isinstance(x, PathLengthSequence) else PathLengthSequence(x)
