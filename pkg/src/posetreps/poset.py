"""Finite posets with admissible enumeration.

Elements are the integers 1..t and every stored relation is strict
(irreflexive, transitive).  All posets in this package are *admissibly
enumerated*: p_i < p_j implies i < j.  Constructors re-index their input
when needed and report the permutation they applied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import CycleError


class RepType(Enum):
    """Representation type of a poset (unitary or classical sense)."""

    FINITE = "finite"
    TAME = "tame"
    WILD = "wild"


@dataclass(frozen=True)
class Poset:
    """Strict partial order on {1,..,t}, transitively closed, with i < j
    whenever element i precedes element j."""

    t: int
    relations: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.relations:
            if not (1 <= i <= self.t and 1 <= j <= self.t):
                raise ValueError(f"relation ({i},{j}) out of range 1..{self.t}")
            if i >= j:
                raise ValueError(
                    f"enumeration not admissible: {i} precedes {j} but {i} >= {j}"
                )
        rel = self.relations
        for (a, b), (c, d) in itertools.product(rel, rel):
            if b == c and (a, d) not in rel:
                raise ValueError(f"relations not transitively closed at ({a},{d})")

    @property
    def elements(self) -> range:
        return range(1, self.t + 1)

    def precedes(self, i: int, j: int) -> bool:
        return (i, j) in self.relations

    def comparable(self, i: int, j: int) -> bool:
        return (i, j) in self.relations or (j, i) in self.relations

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and not self.comparable(i, j)

    def below(self, i: int) -> list[int]:
        """Elements strictly below i, ascending."""
        return [j for j in self.elements if (j, i) in self.relations]

    def to_json(self) -> dict:
        return {"t": self.t, "relations": sorted([i, j] for i, j in self.relations)}

    @classmethod
    def from_json(cls, data: dict) -> "Poset":
        pairs = [(int(i), int(j)) for i, j in data["relations"]]
        return from_relations(int(data["t"]), pairs).poset

    def __repr__(self) -> str:
        return f"Poset(t={self.t}, relations={sorted(self.relations)})"


class ReindexedPoset(NamedTuple):
    """Result of ingesting raw relations: the poset plus the re-indexing
    permutation (new_index = permutation[old_index - 1], identity when the
    input enumeration was already admissible)."""

    poset: Poset
    permutation: tuple[int, ...]


def chain(t: int) -> Poset:
    """Total order 1 < 2 < ... < t."""
    return Poset(t, frozenset((i, j) for i in range(1, t + 1) for j in range(i + 1, t + 1)))


def antichain(t: int) -> Poset:
    """t pairwise incomparable elements."""
    return Poset(t, frozenset())


def _closure(t: int, pairs: set[tuple[int, int]]) -> set[tuple[int, int]]:
    rel = set(pairs)
    for k in range(1, t + 1):
        for i in range(1, t + 1):
            if (i, k) in rel:
                for j in range(1, t + 1):
                    if (k, j) in rel:
                        rel.add((i, j))
    return rel


def from_relations(t: int, pairs: Sequence[tuple[int, int]]) -> ReindexedPoset:
    """Build a poset from generating relations (i precedes j per pair).

    The transitive closure is applied.  If the input enumeration violates
    i < j on some closed relation, elements are renumbered by a stable
    topological sort and the permutation is returned alongside the poset.

    Raises CycleError if the closure would relate an element to itself.
    """
    if t < 0:
        raise ValueError("element count must be non-negative")
    for i, j in pairs:
        if not (1 <= i <= t and 1 <= j <= t):
            raise ValueError(f"relation ({i},{j}) out of range 1..{t}")
        if i == j:
            raise CycleError(f"element {i} precedes itself")
    rel = _closure(t, set(tuple(p) for p in pairs))
    for i, j in rel:
        if i == j:
            raise CycleError(f"element {i} precedes itself after closure")

    if all(i < j for i, j in rel):
        perm = tuple(range(1, t + 1))
        return ReindexedPoset(Poset(t, frozenset(rel)), perm)

    # Kahn topological sort, smallest original index first.
    order: list[int] = []
    remaining = set(range(1, t + 1))
    while remaining:
        ready = sorted(
            v for v in remaining if not any((u, v) in rel for u in remaining if u != v)
        )
        order.append(ready[0])
        remaining.remove(ready[0])
    perm_map = {old: new + 1 for new, old in enumerate(order)}
    new_rel = frozenset((perm_map[i], perm_map[j]) for i, j in rel)
    perm = tuple(perm_map[old] for old in range(1, t + 1))
    return ReindexedPoset(Poset(t, new_rel), perm)


def is_chain(P: Poset) -> bool:
    """True iff every pair of distinct elements is comparable."""
    return all(
        P.comparable(i, j) for i in P.elements for j in P.elements if i < j
    )


def semichain_blocks(P: Poset) -> Optional[tuple[tuple[int, ...], ...]]:
    """Block structure of a semichain, or None.

    A semichain is an ordered sequence of blocks of one or two incomparable
    elements, every element of a block preceding every element of all later
    blocks.  Connected components of the incomparability graph must have at
    most two vertices and be totally ordered blockwise.
    """
    # Components of the incomparability graph.
    parent = {i: i for i in P.elements}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in P.elements:
        for j in P.elements:
            if i < j and P.incomparable(i, j):
                parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for i in P.elements:
        comps.setdefault(find(i), []).append(i)
    blocks = sorted((sorted(c) for c in comps.values()), key=lambda b: b[0])
    if any(len(b) > 2 for b in blocks):
        return None
    for a, b in itertools.combinations(blocks, 2):
        # blocks sorted by least element; a must lie entirely below b
        if not all(P.precedes(x, y) for x in a for y in b):
            return None
    return tuple(tuple(b) for b in blocks)


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    """Disjoint union; Q's elements are shifted to t+1..t+t'."""
    shifted = ((i + P.t, j + P.t) for i, j in Q.relations)
    return Poset(P.t + Q.t, frozenset(P.relations) | frozenset(shifted))


def contains_full_subposet(P: Poset, Q: Poset) -> bool:
    """True iff Q embeds into P as an induced (full) subposet.

    Backtracking over injections; the image must both preserve and reflect
    the strict order.  Adequate for the intended sizes (t <= 12).
    """
    used = [False] * (P.t + 1)
    image = [0] * (Q.t + 1)

    def extend(q: int) -> bool:
        if q > Q.t:
            return True
        for p in P.elements:
            if used[p]:
                continue
            ok = True
            for q2 in range(1, q):
                p2 = image[q2]
                if Q.precedes(q2, q) != P.precedes(p2, p) or Q.precedes(
                    q, q2
                ) != P.precedes(p, p2):
                    ok = False
                    break
            if ok:
                used[p] = True
                image[q] = p
                if extend(q + 1):
                    return True
                used[p] = False
        return False

    return extend(1)


def first_wild_triple(P: Poset) -> Optional[tuple[int, int, int]]:
    """Lexicographically first (i, j, k), i < k, with p_j incomparable to
    both p_i and p_k; None when the poset is a semichain."""
    for i in P.elements:
        for j in P.elements:
            if j == i or not P.incomparable(i, j):
                continue
            for k in P.elements:
                if k > i and k != j and P.incomparable(j, k):
                    return (i, j, k)
    return None


def classify_unitary(P: Poset) -> tuple[RepType, Optional[tuple[int, int, int]]]:
    """Unitary representation type of the poset.

    Chains are representation-finite, semichains are tame, everything else
    is wild.  For a wild poset the witness triple (i, j, k) is returned:
    i < k and p_j is incomparable to both p_i and p_k.
    """
    if is_chain(P):
        return (RepType.FINITE, None)
    if semichain_blocks(P) is not None:
        return (RepType.TAME, None)
    triple = first_wild_triple(P)
    assert triple is not None  # non-semichain guarantees a triple
    return (RepType.WILD, triple)


def all_posets(t: int) -> Iterator[Poset]:
    """Every strict partial order on t labeled elements, re-enumerated
    admissibly.  Intended for exhaustive checks at small t; the candidate
    count grows as 3^(t choose 2)."""
    pairs = list(itertools.combinations(range(1, t + 1), 2))
    for assign in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for (a, b), c in zip(pairs, assign):
            if c == 1:
                rel.add((a, b))
            elif c == 2:
                rel.add((b, a))
        # keep only relations that are already transitive: those are exactly
        # the strict partial orders on labeled points
        if any(
            b == c and (a, d) not in rel for a, b in rel for c, d in rel
        ):
            continue
        yield from_relations(t, sorted(rel)).poset
