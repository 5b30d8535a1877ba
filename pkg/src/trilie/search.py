"""Enumerate candidate involutions and complex structures and classify each one.

Candidates come in a fixed lexicographic order and each is classified on its
own, so results do not depend on scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import exactnum as xn
from .kaehler import check_complex_product, check_para_kaehler, check_pseudo_kaehler
from .structures import ComplexClass, ProductClass, classify_complex, classify_product
from .threelie import ThreeLieAlgebra

DIAGONAL = "diagonal_signs"
SIGNED_PERMUTATIONS = "signed_permutations"
SIGNED_INVOLUTIONS = "signed_involutions"
EXPLICIT = "explicit_list"

SQUARE_ID = "square_is_identity"
SQUARE_MINUS_ID = "square_is_minus_identity"

CAPS = {DIAGONAL: 20, SIGNED_PERMUTATIONS: 10, SIGNED_INVOLUTIONS: 10}


class SearchLimitError(ValueError):
    """The algebra is too large for the requested family."""


@dataclass(frozen=True)
class CandidateFamily:
    kind: str
    constraint: str
    explicit: tuple = ()

    @classmethod
    def diagonal(cls) -> "CandidateFamily":
        return cls(DIAGONAL, SQUARE_ID)

    @classmethod
    def signed_permutations(cls) -> "CandidateFamily":
        return cls(SIGNED_PERMUTATIONS, SQUARE_MINUS_ID)

    @classmethod
    def signed_involutions(cls) -> "CandidateFamily":
        return cls(SIGNED_INVOLUTIONS, SQUARE_ID)

    @classmethod
    def of(cls, matrices, constraint: str) -> "CandidateFamily":
        return cls(EXPLICIT, constraint, tuple(xn.matrix(m) for m in matrices))


def _check_cap(kind: str, n: int, cap: int | None):
    limit = CAPS.get(kind) if cap is None else cap
    if limit is not None and n > limit:
        raise SearchLimitError(f"dimension {n} exceeds the limit {limit} for {kind}")


def perfect_matchings(items):
    """All partitions of ``items`` into pairs, in lexicographic order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + m


def involution_matchings(items):
    """All partial matchings (involutive permutations), fixed points allowed."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for m in involution_matchings(rest):
        yield m
    for k, partner in enumerate(rest):
        for m in involution_matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + m


def diagonal_candidates(n: int):
    for signs in product((1, -1), repeat=n):
        yield xn.diag(signs)


def signed_permutation_candidates(n: int):
    """J e_a = s e_b, J e_b = -s e_a for each pair of a perfect matching."""
    if n % 2:
        raise ValueError(f"odd dimension {n} has no signed 2-cycle decompositions")
    for pairs in perfect_matchings(range(n)):
        for signs in product((1, -1), repeat=len(pairs)):
            J = xn.zeros(n, n)
            for (a, b), s in zip(pairs, signs):
                J[b, a] = s
                J[a, b] = -s
            yield J


def signed_involution_candidates(n: int):
    """Signed permutation matrices with square the identity."""
    for pairs in involution_matchings(range(n)):
        moved = {i for p in pairs for i in p}
        fixed = [i for i in range(n) if i not in moved]
        for fsigns in product((1, -1), repeat=len(fixed)):
            for psigns in product((1, -1), repeat=len(pairs)):
                E = xn.zeros(n, n)
                for i, s in zip(fixed, fsigns):
                    E[i, i] = s
                for (a, b), s in zip(pairs, psigns):
                    E[b, a] = s
                    E[a, b] = s
                yield E


def candidates(family: CandidateFamily, n: int, cap: int | None = None):
    _check_cap(family.kind, n, cap)
    if family.kind == DIAGONAL:
        gen = diagonal_candidates(n)
    elif family.kind == SIGNED_PERMUTATIONS:
        gen = signed_permutation_candidates(n)
    elif family.kind == SIGNED_INVOLUTIONS:
        gen = signed_involution_candidates(n)
    elif family.kind == EXPLICIT:
        gen = iter(family.explicit)
    else:
        raise ValueError(f"unknown family {family.kind!r}")
    target = xn.identity(n) if family.constraint == SQUARE_ID else -xn.identity(n)
    for M in gen:
        if M.shape != (n, n):
            raise ValueError(f"candidate has shape {M.shape}, expected {(n, n)}")
        if not xn.equal(M @ M, target):
            raise ValueError(f"candidate violates {family.constraint}")
        yield M


def enumerate_products(g: ThreeLieAlgebra, family: CandidateFamily, cap: int | None = None) -> list[tuple[np.ndarray, ProductClass]]:
    """Classify every candidate other than +-Id."""
    if family.constraint != SQUARE_ID:
        raise ValueError("product search needs candidates with square the identity")
    I = xn.identity(g.dim)
    return [
        (E, classify_product(g, E))
        for E in candidates(family, g.dim, cap)
        if not (xn.equal(E, I) or xn.equal(E, -I))
    ]


def enumerate_complex(g: ThreeLieAlgebra, family: CandidateFamily, cap: int | None = None) -> list[tuple[np.ndarray, ComplexClass]]:
    if family.constraint != SQUARE_MINUS_ID:
        raise ValueError("complex search needs candidates with square minus the identity")
    if g.dim % 2:
        raise ValueError(f"odd dimension {g.dim} admits no complex structure")
    return [(J, classify_complex(g, J)) for J in candidates(family, g.dim, cap)]


def product_structures(results):
    return [(E, pc) for E, pc in results if pc.product]


def complex_structures(results):
    return [(J, cc) for J, cc in results if cc.complex]


@dataclass
class PairReport:
    """Index pairs into the product, complex and form lists that pass each compatibility check."""

    complex_products: list = field(default_factory=list)
    para_kaehler: list = field(default_factory=list)
    pseudo_kaehler: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (self.complex_products or self.para_kaehler or self.pseudo_kaehler)


def pair_search(g: ThreeLieAlgebra, products, complexes, omegas=()) -> PairReport:
    """``products`` and ``complexes`` are lists of matrices or (matrix, class) pairs."""

    def mats(items):
        return [it[0] if isinstance(it, tuple) else it for it in items]

    Es, Js = mats(products), mats(complexes)
    rep = PairReport()
    for j, J in enumerate(Js):
        for e, E in enumerate(Es):
            v = check_complex_product(g, J, E)
            if v.ok:
                rep.complex_products.append((j, e))
                rep.verdicts[("complex_product", j, e)] = v
    for k, w in enumerate(omegas):
        for e, E in enumerate(Es):
            v = check_para_kaehler(g, w, E)
            if v.ok:
                rep.para_kaehler.append((k, e))
                rep.verdicts[("para_kaehler", k, e)] = v
        for j, J in enumerate(Js):
            v = check_pseudo_kaehler(g, w, J)
            if v.ok:
                rep.pseudo_kaehler.append((k, j))
                rep.verdicts[("pseudo_kaehler", k, j)] = v
    return rep

