"""Splitting certificates and the factor-multiset invariant.

verify_spine_split packages the combinatorial splitting rule: if a spine is
the union of two subcomplexes A and B such that A, B, and A n B all collapse
to a point, the certified conclusion "splits-into-closed-balls" is attached
to the triple of collapse certificates. The manifold-level reading of that
conclusion is a citation carried by the token, not a computation.

Factor multisets count indecomposable factors with values in N u {omega};
two infinite-sum descriptions are distinguishable exactly when some label
occurs a different number of times.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Optional

from .collapse import CollapseCertificate, SearchBudget, is_collapsible
from .complexes import SimplicialComplex, intersection, union

OMEGA = math.inf

CONCLUSION = "splits-into-closed-balls"


class SplitError(ValueError):
    """verify_spine_split failure; the message names the culprit."""


@dataclass(frozen=True)
class SplitCertificate:
    spine: str
    parts: tuple[str, str]
    evidence: tuple[CollapseCertificate, CollapseCertificate, CollapseCertificate]
    conclusion: str = CONCLUSION


def verify_spine_split(spine: SimplicialComplex, A: SimplicialComplex,
                       B: SimplicialComplex,
                       budget: SearchBudget | None = None) -> SplitCertificate:
    """Check A u B = spine and that A, B, A n B are all collapsible."""
    if union(A, B).simplices != spine.simplices:
        raise SplitError(
            f"{A.name} union {B.name} is not {spine.name}")
    C = intersection(A, B, name=f"{A.name}&{B.name}")
    certs = []
    for part in (A, B, C):
        verdict = is_collapsible(part, budget)
        if verdict.kind != "yes":
            raise SplitError(
                f"{part.name} is not collapsible (verdict: {verdict.kind})")
        certs.append(verdict.certificate)
    return SplitCertificate(spine.name, (A.name, B.name),
                            (certs[0], certs[1], certs[2]))


# ------------------------------------------------------- factor multisets

def _check_count(label: str, n) -> None:
    if n == OMEGA:
        return
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0:
        raise ValueError(f"count for {label!r} must be a positive integer "
                         f"or OMEGA, got {n!r}")


@dataclass(frozen=True)
class FactorMultiset:
    """Map label -> count in N u {omega}; missing labels count 0."""
    counts: tuple[tuple[str, float], ...]

    @classmethod
    def from_map(cls, counts: Mapping[str, float]) -> "FactorMultiset":
        for label, n in counts.items():
            _check_count(label, n)
        return cls(tuple(sorted(counts.items())))

    def count(self, label: str) -> float:
        return dict(self.counts).get(label, 0)

    def labels(self) -> list[str]:
        return [label for label, _ in self.counts]

    def __str__(self) -> str:
        if not self.counts:
            return "(empty)"
        return ", ".join(
            f"{label}:{'w' if n == OMEGA else int(n)}"
            for label, n in self.counts)


@dataclass(frozen=True)
class SumDescription:
    """Finite description of an infinite (or finite) summand sequence.

    Either an eventually periodic sequence -- a finite prefix plus a
    repeating cycle -- or a bare label -> count map. An empty cycle with
    finite counts describes a finite sum, flagged by is_finite.
    """
    prefix: tuple[str, ...] = ()
    cycle: tuple[str, ...] = ()
    mapped: Optional[tuple[tuple[str, float], ...]] = None

    @classmethod
    def from_sequence(cls, prefix, cycle=()) -> "SumDescription":
        return cls(prefix=tuple(prefix), cycle=tuple(cycle))

    @classmethod
    def from_counts(cls, counts: Mapping[str, float]) -> "SumDescription":
        for label, n in counts.items():
            _check_count(label, n)
        return cls(mapped=tuple(sorted(counts.items())))

    @property
    def is_finite(self) -> bool:
        if self.mapped is not None:
            return all(n != OMEGA for _, n in self.mapped)
        return not self.cycle


def multiset_of(s: SumDescription) -> FactorMultiset:
    """Label counts of the described sequence; cycle labels count omega."""
    if s.mapped is not None:
        return FactorMultiset(s.mapped)
    counts: dict[str, float] = {}
    for label in s.prefix:
        counts[label] = counts.get(label, 0) + 1
    for label in set(s.cycle):
        counts[label] = OMEGA
    return FactorMultiset.from_map(counts)


def distinguishable(m1: FactorMultiset, m2: FactorMultiset) -> bool:
    """True iff some label's count differs (missing labels count 0).

    A True verdict certifies the corresponding sums are genuinely
    different; False only means this invariant does not separate them.
    """
    return dict(m1.counts) != dict(m2.counts)


def family_demo(k: int) -> int:
    """Build the 2^k subset descriptions over labels J1..Jk and verify they
    are pairwise distinguishable. Returns 2^k."""
    if not isinstance(k, int) or k < 0 or k > 20:
        raise ValueError(f"k must be an integer in [0, 20], got {k!r}")
    labels = [f"J{i}" for i in range(1, k + 1)]
    family = []
    for bits in itertools.product((False, True), repeat=k):
        chosen = [lab for lab, keep in zip(labels, bits) if keep]
        family.append(multiset_of(
            SumDescription.from_sequence((), tuple(chosen))))
    if k <= 10:
        for m1, m2 in itertools.combinations(family, 2):
            if not distinguishable(m1, m2):
                raise AssertionError(f"indistinguishable pair {m1} / {m2}")
    else:
        # all-pairs is quadratic in 2^k; distinctness of the canonical maps
        # is the same statement
        keys = {m.counts for m in family}
        if len(keys) != len(family):
            raise AssertionError("subset descriptions collided")
    return len(family)
