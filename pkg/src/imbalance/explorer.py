"""Enumerate all path-length sequences of one size and study their imbalance poset."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .balancing import balancing_step
from .order import scaled_profile
from .words import CodeError, PathLengthSequence

DEFAULT_MAX_SIZE = 16


class SizeCapError(ValueError):
    pass


def enumerate_sequences(t: int) -> list[PathLengthSequence]:
    """All path-length sequences of size ``t``, in lex order of the length vectors.

    Depth-first over non-decreasing lengths.  The Kraft budget is tracked as an
    integer count of ``2**-(t-1)`` units; a branch is cut when the next weight
    overshoots the budget or when even ``remaining`` copies of it fall short.
    """
    if t < 1:
        raise CodeError("size must be at least 1")
    if t == 1:
        return [PathLengthSequence((0,))]
    top = t - 1
    out = []
    prefix: list[int] = []

    def extend(min_len: int, budget: int, remaining: int) -> None:
        if remaining == 0:
            if budget == 0:
                out.append(PathLengthSequence(prefix))
            return
        for ell in range(min_len, top + 1):
            unit = 1 << (top - ell)
            if unit > budget:
                continue
            if unit * remaining < budget:
                break
            prefix.append(ell)
            extend(ell, budget - unit, remaining - 1)
            prefix.pop()

    extend(1, 1 << top, t)
    return out


def count_sequences(t: int) -> int:
    return len(enumerate_sequences(t))


@dataclass(frozen=True)
class PosetGraph:
    size: int
    elements: tuple
    relation: np.ndarray = field(repr=False)
    covers: tuple
    bottom: int
    top: int
    backend: str = "python"

    @property
    def count(self) -> int:
        return len(self.elements)

    def index(self, seq: PathLengthSequence) -> int:
        return self._index[seq]

    @property
    def _index(self) -> dict:
        cache = self.__dict__.get("_index_cache")
        if cache is None:
            cache = {s: i for i, s in enumerate(self.elements)}
            object.__setattr__(self, "_index_cache", cache)
        return cache

    def le(self, i: int, j: int) -> bool:
        return bool(self.relation[i, j])

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "count": self.count,
            "elements": [list(s.lengths) for s in self.elements],
            "covers": [list(c) for c in self.covers],
            "bottom": self.bottom,
            "top": self.top,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _profile_matrix(elements, t: int):
    rows = [scaled_profile(s) for s in elements]
    if t - 1 <= kernels.INT64_PROFILE_BITS:
        return np.array(rows, dtype=np.int64)
    return np.array(rows, dtype=object)


def build_poset(t: int, max_size: int = DEFAULT_MAX_SIZE, backend: str | None = None) -> PosetGraph:
    if t > max_size:
        raise SizeCapError(f"size {t} exceeds the cap {max_size}; pass --max-size to override")
    name = backend or kernels.DEFAULT_BACKEND
    elements = tuple(enumerate_sequences(t))
    profiles = _profile_matrix(elements, t)
    if profiles.dtype == object:
        name = "python"
    impl = kernels.get(name)
    rel = impl.relation_matrix(profiles)
    cov = impl.transitive_reduction(rel)
    covers = tuple((int(i), int(j)) for i, j in zip(*np.nonzero(cov)))

    n = len(elements)
    bottoms = [i for i in range(n) if rel[i, :].all()]
    tops = [j for j in range(n) if rel[:, j].all()]
    if len(bottoms) != 1 or len(tops) != 1:
        raise AssertionError(f"expected unique extremes, got bottoms={bottoms} tops={tops}")
    return PosetGraph(
        size=t, elements=elements, relation=rel, covers=covers,
        bottom=bottoms[0], top=tops[0], backend=name,
    )


@dataclass
class LatticeReport:
    size: int
    count: int
    is_lattice: bool
    missing_meets: list = field(default_factory=list)
    missing_joins: list = field(default_factory=list)
    criterion_failures: list = field(default_factory=list)
    incomparable_pairs: int = 0
    meet_table: np.ndarray | None = field(default=None, repr=False)
    join_table: np.ndarray | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "count": self.count,
            "lattice": self.is_lattice,
            "missing_meets": [[str(a), str(b)] for a, b in self.missing_meets],
            "missing_joins": [[str(a), str(b)] for a, b in self.missing_joins],
            "criterion_failures": [[str(a), str(b)] for a, b in self.criterion_failures],
            "incomparable_pairs": self.incomparable_pairs,
        }


def check_lattice(p: PosetGraph, witnesses: bool = True, backend: str | None = None) -> LatticeReport:
    """Brute-force glb/lub for every pair, plus the balancing step as a witness.

    For each incomparable pair (b, c) the balancing step must produce d, strictly
    below one of them, such that b, c, d have the same common lower bounds as
    b, c alone.
    """
    impl = kernels.get(backend)
    rel = p.relation
    mt = impl.bound_table(rel, True)
    jt = impl.bound_table(rel, False)
    n = p.count
    els = p.elements
    report = LatticeReport(size=p.size, count=n, is_lattice=True, meet_table=mt, join_table=jt)
    for i in range(n):
        for j in range(i + 1, n):
            if mt[i, j] < 0:
                report.missing_meets.append((els[i], els[j]))
            if jt[i, j] < 0:
                report.missing_joins.append((els[i], els[j]))
            if rel[i, j] or rel[j, i]:
                continue
            report.incomparable_pairs += 1
            if not witnesses:
                continue
            cert = balancing_step(els[i], els[j])
            d = p.index(cert.result)
            c = p.index(cert.role_c)
            common = rel[:, i] & rel[:, j]
            if not (rel[d, c] and d != c) or not np.array_equal(common, common & rel[:, d]):
                report.criterion_failures.append((els[i], els[j]))
    report.is_lattice = not (report.missing_meets or report.missing_joins or report.criterion_failures)
    return report


@dataclass
class ModularityReport:
    size: int
    modular: bool
    witness: tuple | None = None

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "modular": self.modular,
            "witness": None if self.witness is None else {k: str(v) for k, v in zip("xyz", self.witness)},
        }


def check_modularity(p: PosetGraph, lattice: LatticeReport | None = None, backend: str | None = None) -> ModularityReport:
    """Search all triples for a failure of ``x <= z  =>  x ∨ (y ∧ z) = (x ∨ y) ∧ z``."""
    impl = kernels.get(backend)
    if lattice is None:
        lattice = check_lattice(p, witnesses=False, backend=backend)
    if lattice.missing_meets or lattice.missing_joins:
        raise ValueError("modularity is only defined once every pair has a meet and a join")
    hit = impl.modular_violation(p.relation, lattice.meet_table, lattice.join_table)
    if hit is None:
        return ModularityReport(p.size, True)
    x, y, z = hit
    return ModularityReport(p.size, False, (p.elements[x], p.elements[y], p.elements[z]))


def _quote(s) -> str:
    return '"' + str(s) + '"'


def export_dot(p: PosetGraph) -> str:
    """Hasse diagram as a DOT digraph, edges pointing from more to less balanced."""
    lines = [f"digraph imbalance_{p.size} {{", "  rankdir=BT;", "  node [shape=box];"]
    for s in p.elements:
        lines.append(f"  {_quote(s)};")
    lines.append(f"  {{ rank=min; {_quote(p.elements[p.bottom])}; }}")
    for i, j in p.covers:
        lines.append(f"  {_quote(p.elements[i])} -> {_quote(p.elements[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
