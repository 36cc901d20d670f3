"""
Combinatorial objects used throughout the package: words, multisets,
juggling sequences, rotations, block decompositions and the exhaustive
enumerators that produce the object universes.

A word is a plain tuple of nonnegative ints. All symbols are 0-based:
permutations live on {0, ..., n-1} and strings over a ground set of size
h use the letters {0, ..., h-1}.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple[int, ...]


class ParameterError(ValueError):
    """An argument is outside the domain an operation accepts."""


class DomainError(ValueError):
    """The operation is undefined for this object (e.g. balls of an invalid siteswap)."""


def as_word(symbols: Iterable[int]) -> Word:
    word = tuple(int(x) for x in symbols)
    if not word:
        raise ParameterError("a word needs at least one symbol")
    if any(x < 0 for x in word):
        raise ParameterError(f"symbols must be nonnegative: {word}")
    return word


@dataclass(frozen=True)
class MultisetSpec:
    """Multiplicities of each symbol; ``n`` is the total size."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "MultisetSpec":
        items = tuple(sorted((int(k), int(v)) for k, v in counts.items()))
        if not items:
            raise ParameterError("multiset must be nonempty")
        for sym, mult in items:
            if sym < 0 or mult < 1:
                raise ParameterError(f"bad multiset entry {sym}: {mult}")
        return cls(items)

    @classmethod
    def from_symbols(cls, symbols: Iterable[int]) -> "MultisetSpec":
        return cls.from_counts(Counter(symbols))

    @classmethod
    def distinct(cls, n: int) -> "MultisetSpec":
        return cls.from_counts({i: 1 for i in range(n)})

    @property
    def n(self) -> int:
        return sum(m for _, m in self.counts)

    def sorted_word(self) -> Word:
        return tuple(sym for sym, m in self.counts for _ in range(m))

    def permutation_count(self) -> int:
        total = math.factorial(self.n)
        for _, m in self.counts:
            total //= math.factorial(m)
        return total


@dataclass(frozen=True)
class BlockDecomposition:
    source: Word
    d: int
    blocks: tuple[Word, ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    def weights(self) -> tuple[int, ...]:
        return tuple(sum(block) for block in self.blocks)


@dataclass(frozen=True)
class JugglingSequence:
    """A siteswap ``t_0 ... t_{n-1}``; heights may exceed the period."""

    heights: Word

    @classmethod
    def parse(cls, text: str) -> "JugglingSequence":
        parts = text.replace(",", " ").split()
        # "015" style strings are read digit by digit
        if len(parts) == 1 and len(parts[0]) > 1:
            parts = list(parts[0])
        return cls(as_word(int(p) for p in parts))

    @property
    def period(self) -> int:
        return len(self.heights)

    @property
    def valid(self) -> bool:
        return validate_juggling(self.heights)

    @property
    def balls(self) -> int:
        return ball_count(self.heights)

    @property
    def permutation(self) -> Word:
        return permutation_sequence(self.heights)


def rotate(x: Sequence[int], s: int) -> Word:
    """Return ``x_s ... x_{n-1} x_0 ... x_{s-1}``."""
    n = len(x)
    if not 0 <= s <= n:
        raise ParameterError(f"rotation {s} outside [0, {n}]")
    x = tuple(x)
    return x[s:] + x[:s]


def block_decompose(x: Sequence[int], d: int) -> BlockDecomposition:
    x = tuple(x)
    n = len(x)
    if d < 1 or n % d:
        raise ParameterError(f"block size {d} does not divide length {n}")
    return BlockDecomposition(x, d, tuple(x[i:i + d] for i in range(0, n, d)))


def block_rotation_exponent(n: int, s: int, i: int) -> int:
    """
    Least j >= 0 such that rotating by s, j times, makes block i come first.

    Blocks have size d = gcd(n, s). Writing s = k*d and n = m*d, k and m are
    coprime, so j = i * k^{-1} mod m always exists.
    """
    if not 1 <= s <= n - 1:
        raise ParameterError(f"need 1 <= s <= n-1, got n={n}, s={s}")
    d = math.gcd(n, s)
    m, k = n // d, s // d
    if not 0 <= i < m:
        raise ParameterError(f"block index {i} outside [0, {m})")
    if m == 1:
        return 0
    return (i * pow(k, -1, m)) % m


def validate_juggling(t: Sequence[int]) -> bool:
    n = len(t)
    return len({(i + h) % n for i, h in enumerate(t)}) == n


def permutation_sequence(t: Sequence[int]) -> Word:
    n = len(t)
    return tuple((h + i) % n for i, h in enumerate(t))


def ball_count(t: Sequence[int]) -> int:
    if not validate_juggling(t):
        raise DomainError(f"{tuple(t)} is not a juggling sequence")
    total = sum(t)
    # valid sequences always have sum divisible by n
    assert total % len(t) == 0
    return total // len(t)


def reduce_digit(t: Sequence[int], i: int) -> Word:
    t = tuple(t)
    n = len(t)
    if not 0 <= i < n:
        raise ParameterError(f"index {i} outside [0, {n})")
    if t[i] < n:
        raise ParameterError(f"digit t_{i} = {t[i]} is below the period {n}")
    return t[:i] + (t[i] - n,) + t[i + 1:]


def canonical_juggling(t: Sequence[int]) -> Word:
    """Reduce every digit below the period by repeated :func:`reduce_digit`."""
    t = tuple(t)
    for i in range(len(t)):
        while t[i] >= len(t):
            t = reduce_digit(t, i)
    return t


def least_rotation(x: Sequence) -> tuple:
    x = tuple(x)
    return min(x[i:] + x[:i] for i in range(len(x))) if x else x


def block_weight_class(vertex: Sequence[int], n: int) -> tuple[int, ...]:
    """
    Cyclic block-weight signature of an s-prefix when n - s = gcd(n, s).

    The vertex is the first m-1 blocks of some juggling sequence; the
    missing last block has weight fixed mod n because the full digit sum
    is divisible by n. Edges of the transition digraph preserve this
    signature, so vertices with different signatures are disconnected.
    """
    s = len(vertex)
    d = n - s
    if d < 1 or s % d:
        raise ParameterError(f"need n - s to divide s, got n={n}, s={s}")
    weights = [w % n for w in block_decompose(vertex, d).weights()] if s else []
    weights.append(-sum(weights) % n)
    return least_rotation(weights)


def block_content_class(x: Sequence[int], d: int) -> tuple:
    """Cyclic order of block contents (each block as a sorted tuple)."""
    blocks = block_decompose(x, d).blocks
    return least_rotation(tuple(sorted(b)) for b in blocks)


def enumerate_multiset_permutations(spec: MultisetSpec) -> Iterator[Word]:
    """Distinct permutations of the multiset in lexicographic order."""
    a = list(spec.sorted_word())
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _bounded_vectors(length: int, budget: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _bounded_vectors(length - 1, budget - first):
            yield (first,) + rest


def enumerate_juggling_sequences(n: int, b_max: int) -> Iterator[Word]:
    """
    Every juggling sequence of period n using at most ``b_max`` balls,
    in lexicographic order.

    Each sequence is a base sequence with digits in [0, n) (one per
    permutation) plus n added to some digits; each addition is one ball.
    """
    if n < 1 or b_max < 0:
        raise ParameterError(f"need n >= 1 and b_max >= 0, got {n}, {b_max}")
    found = []
    for perm in itertools.permutations(range(n)):
        base = tuple((p - i) % n for i, p in enumerate(perm))
        b0 = sum(base) // n
        if b0 > b_max:
            continue
        for inc in _bounded_vectors(n, b_max - b0):
            found.append(tuple(t + n * c for t, c in zip(base, inc)))
    found.sort()
    yield from found


def enumerate_surjective_strings(n: int, h: int) -> Iterator[Word]:
    """Length-n words over {0..h-1} using every letter, lexicographically."""
    if not 1 <= h <= n:
        raise ParameterError(f"need 1 <= h <= n, got n={n}, h={h}")
    word = [0] * n
    used = [0] * h

    def extend(pos: int, missing: int) -> Iterator[Word]:
        if pos == n:
            yield tuple(word)
            return
        for letter in range(h):
            now_missing = missing - (used[letter] == 0)
            if now_missing > n - pos - 1:
                continue
            word[pos] = letter
            used[letter] += 1
            yield from extend(pos + 1, now_missing)
            used[letter] -= 1

    yield from extend(0, h)


def enumerate_k_permutations(n: int, k: int) -> Iterator[Word]:
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    # itertools emits these in lexicographic order for sorted input
    yield from itertools.permutations(range(n), k)
