"""Pair families over the totally ordered ground set 0..n-1.

A pair family is a set of unordered vertex pairs.  Two cardinality
identities single out the families this package revolves around: a
pairing covers its support with disjoint pairs (|support| = 2 |pairs|),
while a quasi-pairing covers an odd support with exactly one vertex, the
hub, sitting in two pairs (|support| = 2 |pairs| - 1).

Irreducibility is always judged against the support's induced integer
order: a block partition is irreducible when no nontrivial interval of
the ordered support is a union of blocks.  For a quasi-pairing the
blocks are those of the merged partition, where the two hub pairs fuse
into one 3-vertex block.

Text format (bit-exact): comma-separated tokens "i-j" with i < j, sorted
by (i, j); the empty family serializes to the empty string.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


def _normalize(n: int, pairs: Iterable) -> tuple[tuple[int, int], ...]:
    if n < 0:
        raise ValueError(f"ambient size must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in pairs:
        x, y = pair
        if x == y:
            raise ValueError(f"pair endpoints must differ: {pair!r}")
        if x > y:
            x, y = y, x
        if not 0 <= x or not y < n:
            raise ValueError(f"pair {pair!r} out of range 0..{n - 1}")
        seen.add((x, y))
    return tuple(sorted(seen))


@dataclass(frozen=True, eq=False)
class PairFamily:
    """A set of unordered vertex pairs over the ambient set 0..n-1.

    Pairs are stored deduplicated, each as (x, y) with x < y, sorted.
    """

    n: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", _normalize(self.n, self.pairs))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairFamily):
            return NotImplemented
        return self.n == other.n and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((self.n, self.pairs))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def support(self) -> frozenset[int]:
        """Union of all pairs."""
        return frozenset(v for pair in self.pairs for v in pair)

    def serialize(self) -> str:
        return ",".join(f"{x}-{y}" for x, y in self.pairs)

    @classmethod
    def parse(cls, n: int, text: str) -> "PairFamily":
        text = text.strip()
        if not text:
            return cls(n, ())
        pairs = []
        for token in text.split(","):
            left, sep, right = token.partition("-")
            try:
                x, y = int(left), int(right)
            except ValueError:
                raise ValueError(f"bad pair token {token!r}") from None
            if not sep or x >= y:
                raise ValueError(f"bad pair token {token!r}: want i-j with i < j")
            pairs.append((x, y))
        return cls(n, pairs)


@dataclass(frozen=True, eq=False)
class Pairing(PairFamily):
    """A pair family whose pairs are pairwise disjoint."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.support) != 2 * len(self.pairs):
            raise ValueError("pairs of a pairing must be pairwise disjoint")


@dataclass(frozen=True, eq=False)
class QuasiPairing(PairFamily):
    """A pair family covering an odd support with a single doubled vertex."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.pairs) < 2 or len(self.support) != 2 * len(self.pairs) - 1:
            raise ValueError(
                "a quasi-pairing needs at least 2 pairs with exactly one shared vertex"
            )


@dataclass(frozen=True)
class QuasiAnatomy:
    """The distinguished vertices and merged partition of a quasi-pairing.

    ``hub`` is the unique vertex lying in two pairs, ``low < high`` are
    its partners, ``triple`` is the sorted 3-set {hub, low, high}, and
    ``blocks`` is the merged partition of the support: all hub-free pairs
    plus the triple, as sorted blocks in sorted order.
    """

    hub: int
    low: int
    high: int
    triple: tuple[int, int, int]
    blocks: tuple[tuple[int, ...], ...]


def support(family: PairFamily) -> frozenset[int]:
    return family.support


def classify(family: PairFamily) -> str:
    """One of "pairing", "quasi-pairing", or "neither", by support size."""
    s, p = len(family.support), len(family.pairs)
    if s == 2 * p:
        return "pairing"
    if s == 2 * p - 1:
        return "quasi-pairing"
    return "neither"


def mates(family: PairFamily, x: int) -> frozenset[int]:
    """All vertices paired with x; empty off the support."""
    return frozenset(v for pair in family.pairs if x in pair for v in pair if v != x)


def partner(family: PairFamily, x: int) -> int:
    """The unique vertex paired with x in a pairing."""
    if classify(family) != "pairing":
        raise ValueError("partner lookup needs a pairing")
    found = mates(family, x)
    if not found:
        raise ValueError(f"vertex {x} is not covered by the pairing")
    return next(iter(found))


def anatomy(family: PairFamily) -> QuasiAnatomy:
    """Hub, partners, triple, and merged partition of a quasi-pairing."""
    if classify(family) != "quasi-pairing":
        raise ValueError("anatomy needs a quasi-pairing")
    counts = Counter(v for pair in family.pairs for v in pair)
    hub = next(v for v, c in counts.items() if c == 2)
    low, high = sorted(
        v for pair in family.pairs if hub in pair for v in pair if v != hub
    )
    triple = tuple(sorted((hub, low, high)))
    blocks = sorted([p for p in family.pairs if hub not in p] + [triple])
    return QuasiAnatomy(hub, low, high, triple, tuple(blocks))


def components(family: PairFamily) -> list[tuple[int, ...]]:
    """Connected components of the graph whose edges are the pairs.

    For a pairing these are exactly its pairs; for a quasi-pairing, the
    hub's component is the triple and the rest are pairs.
    """
    parent: dict[int, int] = {v: v for v in family.support}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y in family.pairs:
        parent[find(x)] = find(y)
    groups: dict[int, list[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def mirrored(family: PairFamily) -> PairFamily:
    """The family under the order-reversing relabeling x -> n-1-x."""
    flipped = [(family.n - 1 - y, family.n - 1 - x) for x, y in family.pairs]
    return type(family)(family.n, flipped)


def nontrivial_intervals(vertices: Iterable[int]) -> list[tuple[int, ...]]:
    """Contiguous runs of the induced order, of size >= 2 and below full size."""
    ordered = sorted(set(vertices))
    out = []
    for length in range(2, len(ordered)):
        for start in range(len(ordered) - length + 1):
            out.append(tuple(ordered[start : start + length]))
    return out


def is_irreducible_partition(vertices: Iterable[int], blocks: Iterable[Iterable[int]]) -> bool:
    """True when no nontrivial interval of the ordered set is a union of blocks."""
    ground = sorted(set(vertices))
    parts = [tuple(sorted(b)) for b in blocks]
    flat = [v for b in parts for v in b]
    if any(not b for b in parts) or len(flat) != len(set(flat)) or set(flat) != set(ground):
        raise ValueError("blocks must partition the ground set")
    block_of = {v: i for i, b in enumerate(parts) for v in b}
    sizes = [len(b) for b in parts]
    for interval in nontrivial_intervals(ground):
        if sum(sizes[i] for i in {block_of[v] for v in interval}) == len(interval):
            return False
    return True


def is_irreducible_pairing(family: PairFamily) -> bool:
    """Irreducibility of a pairing: its components against its ordered support."""
    if classify(family) != "pairing":
        raise ValueError("irreducibility of a pairing needs a pairing")
    return is_irreducible_partition(family.support, components(family))


def is_irreducible_quasi(family: PairFamily) -> bool:
    """Irreducibility of a quasi-pairing: its merged partition against the support."""
    return is_irreducible_partition(family.support, anatomy(family).blocks)
