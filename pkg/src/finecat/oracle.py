"""Brute-force ground truth for the colored-hill triangles.

Dyck paths are words over {U, D}; a hill is a U step leaving height 0 that is
immediately followed by D. Counting functions enumerate uncolored paths once per
semilength and weight them by hill count; colorings are only materialized by
:func:`enumerate_colored`, which is the exhaustive cross-check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Optional

from .core import binomial
from .validators import (
    ensure_within_bound,
    validate_index,
    validate_nonnegative,
    validate_positive,
)

logger = logging.getLogger(__name__)

# Hard bounds for exhaustive enumeration
MAX_SEMILENGTH = 14
MAX_BALLOT_LENGTH = 24
MAX_TERNARY_LENGTH = 15
MAX_BIJECTION_N = 8

UP = "U"
DOWN = "D"
EMPTY = "ε"

_TRANSCRIBE = str.maketrans({UP: "1", DOWN: "0"})
_UNTRANSCRIBE = str.maketrans({"1": UP, "0": DOWN})


@dataclass(frozen=True)
class DyckPath:
    """A balanced word over {U, D} that never dips below height 0."""

    steps: str

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @classmethod
    def parse(cls, text: str) -> DyckPath:
        """Build a path from text, rejecting anything that is not a Dyck word.

        Raises:
            ValueError: If the word uses other letters, dips below 0 or is unbalanced
        """
        steps = "" if text == EMPTY else text.strip().upper()
        height = 0
        for position, step in enumerate(steps, 1):
            if step not in (UP, DOWN):
                raise ValueError(f"Invalid step {step!r} at position {position}")
            height += 1 if step == UP else -1
            if height < 0:
                raise ValueError(f"Path dips below ground at position {position}: {steps}")
        if height:
            raise ValueError(f"Path is not balanced: {steps}")
        return cls(steps)

    def __str__(self) -> str:
        return self.steps or EMPTY


@dataclass(frozen=True)
class ColoredDyckPath:
    """A Dyck path together with one color per hill, hills taken left to right."""

    path: DyckPath
    colors: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(self.colors))
        hills = hill_count(self.path)
        if len(self.colors) != hills:
            raise ValueError(
                f"{self.path} has {hills} hills but {len(self.colors)} colors were given"
            )
        if any(color < 1 for color in self.colors):
            raise ValueError(f"Hill colors must be positive, got {self.colors}")

    def __str__(self) -> str:
        return render_colored(self)


@dataclass(frozen=True)
class BallotWord:
    """Binary word in which no prefix has more zeros than ones."""

    word: str

    def __post_init__(self) -> None:
        balance = 0
        for position, letter in enumerate(self.word, 1):
            if letter not in "01":
                raise ValueError(f"Invalid letter {letter!r} at position {position}")
            balance += 1 if letter == "1" else -1
            if balance < 0:
                raise ValueError(
                    f"Prefix of length {position} has more zeros than ones: {self.word}"
                )

    @classmethod
    def parse(cls, text: str) -> BallotWord:
        return cls("" if text == EMPTY else text.strip())

    @property
    def n(self) -> int:
        return self.word.count("1") + 1

    @property
    def k(self) -> int:
        return self.word.count("0") + 1

    def __str__(self) -> str:
        return self.word or EMPTY


def _dyck_words(semilength: int) -> Iterator[str]:
    """All Dyck words of the given semilength, lexicographic with U < D."""
    stack = [("", semilength, semilength)]
    while stack:
        prefix, ups, downs = stack.pop()
        if not ups and not downs:
            yield prefix
            continue
        # pushed D first so the U branch is explored first
        if downs > ups:
            stack.append((prefix + DOWN, ups, downs - 1))
        if ups:
            stack.append((prefix + UP, ups - 1, downs))


def _hills(steps: str) -> int:
    height = 0
    hills = 0
    last = len(steps) - 1
    for i, step in enumerate(steps):
        if step == UP:
            if height == 0 and i < last and steps[i + 1] == DOWN:
                hills += 1
            height += 1
        else:
            height -= 1
    return hills


def enumerate_dyck(semilength: int) -> Iterator[DyckPath]:
    """Every Dyck path of the given semilength in lexicographic order (U < D).

    Raises:
        ResourceBoundError: If semilength exceeds MAX_SEMILENGTH
    """
    validate_nonnegative(semilength, "semilength")
    ensure_within_bound(semilength, MAX_SEMILENGTH, "Dyck semilength")
    return (DyckPath(steps) for steps in _dyck_words(semilength))


def hill_count(path: DyckPath) -> int:
    """Number of ground-level UD factors."""
    return _hills(path.steps)


def primitive_factors(path: DyckPath) -> list[str]:
    """Split a path at its returns to ground level."""
    factors = []
    height = 0
    start = 0
    for i, step in enumerate(path.steps):
        height += 1 if step == UP else -1
        if height == 0:
            factors.append(path.steps[start : i + 1])
            start = i + 1
    return factors


def render_colored(colored: ColoredDyckPath) -> str:
    """Space-separated primitive factors, each hill suffixed by its color."""
    pieces = []
    colors = iter(colored.colors)
    for factor in primitive_factors(colored.path):
        pieces.append(f"{factor}{next(colors)}" if factor == UP + DOWN else factor)
    return " ".join(pieces) or EMPTY


@lru_cache(maxsize=None)
def hill_distribution(semilength: int) -> tuple[int, ...]:
    """counts[h] = number of Dyck paths of this semilength with exactly h hills."""
    validate_nonnegative(semilength, "semilength")
    ensure_within_bound(semilength, MAX_SEMILENGTH, "Dyck semilength")
    counts = [0] * (semilength + 1)
    for steps in _dyck_words(semilength):
        counts[_hills(steps)] += 1
    logger.debug(f"Enumerated {sum(counts)} Dyck paths of semilength {semilength}")
    return tuple(counts)


def count_colored(n: int, k: int, m: int) -> int:
    """Paths of semilength n-1 with hills in m colors, exactly k-1 of them in color m."""
    validate_index(n, k)
    validate_positive(m, "m")
    distribution = hill_distribution(n - 1)
    return sum(
        paths * binomial(hills, k - 1) * (m - 1) ** (hills - k + 1)
        for hills, paths in enumerate(distribution)
        if hills >= k - 1
    )


def count_total(n: int, m: int) -> int:
    """Paths of semilength n-1 with hills in m colors."""
    validate_positive(n, "n")
    validate_positive(m, "m")
    return sum(paths * m**hills for hills, paths in enumerate(hill_distribution(n - 1)))


def count_hill_free(n: int) -> int:
    """Paths of semilength n-1 without hills."""
    return count_colored(n, 1, 1)


def enumerate_colored(
    semilength: int, m: int, top: Optional[int] = None
) -> Iterator[ColoredDyckPath]:
    """Every hill coloring in colors 1..m, optionally with exactly ``top`` hills in color m."""
    validate_positive(m, "m")
    paths = enumerate_dyck(semilength)
    if top is not None:
        validate_nonnegative(top, "top")

    def generate() -> Iterator[ColoredDyckPath]:
        for path in paths:
            hills = hill_count(path)
            if top is None:
                for colors in product(range(1, m + 1), repeat=hills):
                    yield ColoredDyckPath(path, colors)
                continue
            if top > hills:
                continue
            for chosen in combinations(range(hills), top):
                for rest in product(range(1, m), repeat=hills - top):
                    others = iter(rest)
                    colors = tuple(m if i in chosen else next(others) for i in range(hills))
                    yield ColoredDyckPath(path, colors)

    return generate()


def _ballot_words(ones: int, zeros: int) -> Iterator[str]:
    stack = [("", ones, zeros, 0)]
    while stack:
        prefix, ones_left, zeros_left, balance = stack.pop()
        if not ones_left and not zeros_left:
            yield prefix
            continue
        # LIFO: push "1" first so words come out in lexicographic order
        if ones_left:
            stack.append((prefix + "1", ones_left - 1, zeros_left, balance + 1))
        if zeros_left and balance:
            stack.append((prefix + "0", ones_left, zeros_left - 1, balance - 1))


def enumerate_ballot(n: int, k: int) -> Iterator[BallotWord]:
    """Ballot words with n-1 ones and k-1 zeros, lexicographic order.

    Raises:
        ResourceBoundError: If n + k - 2 exceeds MAX_BALLOT_LENGTH
    """
    validate_index(n, k)
    ensure_within_bound(n + k - 2, MAX_BALLOT_LENGTH, "Ballot word length")
    return (BallotWord(word) for word in _ballot_words(n - 1, k - 1))


def count_ballot(n: int, k: int) -> int:
    return sum(1 for _ in enumerate_ballot(n, k))


def dyck_to_ballot(colored: ColoredDyckPath) -> BallotWord:
    """Color-2 hills become a single 1; everything else is transcribed U -> 1, D -> 0.

    Raises:
        ValueError: If a hill has a color other than 1 or 2
    """
    if any(color not in (1, 2) for color in colored.colors):
        raise ValueError(f"Hill colors must be 1 or 2, got {colored.colors}")
    pieces = []
    colors = iter(colored.colors)
    for factor in primitive_factors(colored.path):
        if factor == UP + DOWN and next(colors) == 2:
            pieces.append("1")
        else:
            pieces.append(factor.translate(_TRANSCRIBE))
    return BallotWord("".join(pieces))


def ballot_to_dyck(word: BallotWord) -> ColoredDyckPath:
    """Inverse of :func:`dyck_to_ballot`.

    Scanning right to left, a one with no pending zero to its right is surplus and
    becomes a color-2 hill; the balanced stretches between surplus ones are
    transcribed back into Dyck factors whose hills keep color 1.
    """
    if not isinstance(word, BallotWord):
        word = BallotWord(word)
    letters = word.word
    surplus = [False] * len(letters)
    pending = 0
    for i in range(len(letters) - 1, -1, -1):
        if letters[i] == "0":
            pending += 1
        elif pending:
            pending -= 1
        else:
            surplus[i] = True

    steps: list[str] = []
    colors: list[int] = []
    segment: list[str] = []

    def flush() -> None:
        transcribed = "".join(segment).translate(_UNTRANSCRIBE)
        steps.append(transcribed)
        colors.extend([1] * _hills(transcribed))
        segment.clear()

    for letter, is_surplus in zip(letters, surplus):
        if is_surplus:
            flush()
            steps.append(UP + DOWN)
            colors.append(2)
        else:
            segment.append(letter)
    flush()
    return ColoredDyckPath(DyckPath("".join(steps)), tuple(colors))


def bijection_pairs(n: int, k: int) -> Iterator[tuple[ColoredDyckPath, BallotWord]]:
    """Colored paths of semilength n-1 with n-k color-2 hills, each with its ballot word.

    Raises:
        ResourceBoundError: If n exceeds MAX_BIJECTION_N
    """
    validate_index(n, k)
    ensure_within_bound(n, MAX_BIJECTION_N, "Bijection n")
    return ((path, dyck_to_ballot(path)) for path in enumerate_colored(n - 1, 2, top=n - k))


@dataclass
class RoundtripResult:
    """Outcome of checking both compositions of the bijection exhaustively."""

    n: int
    k: Optional[int]
    pairs: int = 0
    words: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.pairs == self.words


def check_bijection(n: int, k: Optional[int] = None) -> RoundtripResult:
    """Verify ballot_to_dyck . dyck_to_ballot and its converse are identities."""
    validate_positive(n, "n")
    ensure_within_bound(n, MAX_BIJECTION_N, "Bijection n")
    columns = [k] if k is not None else list(range(1, n + 1))
    result = RoundtripResult(n, k)
    for column in columns:
        for path, word in bijection_pairs(n, column):
            result.pairs += 1
            if ballot_to_dyck(word) != path:
                result.failures.append(f"{render_colored(path)} -> {word} does not return")
        for word in enumerate_ballot(n, column):
            result.words += 1
            if dyck_to_ballot(ballot_to_dyck(word)) != word:
                result.failures.append(f"{word} does not return")
    logger.debug(
        f"Bijection n={n} k={k}: {result.pairs} paths, {result.words} words, "
        f"{len(result.failures)} failures"
    )
    return result


def validate_ternary_g4(word: str) -> bool:
    """Every maximal {0,1}-block is nonempty and has one more 1 than 0s.

    A nonempty block on each side of every 2 rules out a 2 at either end and two
    adjacent 2s.
    """
    if not word or set(word) - set("012"):
        return False
    return all(block and block.count("1") == block.count("0") + 1 for block in word.split("2"))


def _block_words(length: int) -> list[str]:
    """Binary words of odd length with one more 1 than 0s."""
    zeros = (length - 1) // 2
    words = []
    for positions in combinations(range(length), zeros):
        letters = ["1"] * length
        for position in positions:
            letters[position] = "0"
        words.append("".join(letters))
    return words


def _odd_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write total as a sum of ``parts`` odd positive integers."""
    spare = (total - parts) // 2
    # stars and bars over the spare pairs
    for bars in combinations(range(spare + parts - 1), parts - 1):
        previous = -1
        sizes = []
        for bar in bars + (spare + parts - 1,):
            sizes.append(2 * (bar - previous - 1) + 1)
            previous = bar
        yield tuple(sizes)


def enumerate_ternary_g4(
    n: int, twos: Optional[int] = None, exhaustive: bool = False
) -> Iterator[str]:
    """Valid ternary words of length 2n-1, optionally with exactly ``twos`` letters 2.

    With ``exhaustive`` every word in {0,1,2}^(2n-1) is tested; otherwise the valid
    words are assembled block by block.

    Raises:
        ResourceBoundError: If 2n - 1 exceeds MAX_TERNARY_LENGTH
    """
    validate_positive(n, "n")
    length = 2 * n - 1
    ensure_within_bound(length, MAX_TERNARY_LENGTH, "Ternary word length")
    if twos is not None:
        validate_nonnegative(twos, "twos")

    if exhaustive:
        words = ("".join(letters) for letters in product("012", repeat=length))
        return (
            word
            for word in words
            if validate_ternary_g4(word) and (twos is None or word.count("2") == twos)
        )

    counts = range(n) if twos is None else ([twos] if twos < n else [])

    def generate() -> Iterator[str]:
        for count in counts:
            for sizes in _odd_compositions(length - count, count + 1):
                for blocks in product(*(_block_words(size) for size in sizes)):
                    yield "2".join(blocks)

    return generate()


def count_ternary_g4(n: int, k: int) -> int:
    """Valid ternary words of length 2n-1 with exactly k-1 letters 2."""
    validate_index(n, k)
    return sum(1 for _ in enumerate_ternary_g4(n, k - 1))


def count_ternary_f4(n: int) -> int:
    """Valid ternary words of length 2n-1 with any number of 2s."""
    return sum(1 for _ in enumerate_ternary_g4(n))


COUNT_KINDS = ("colored", "total", "ballot", "ternary", "hillfree")


def count_kind(kind: str, n: int, k: Optional[int] = None, m: Optional[int] = None) -> int:
    """Run one of the exhaustive counts by name.

    ``ternary`` without k counts words with any number of 2s.

    Raises:
        ValueError: If the kind is unknown or a parameter it needs is missing
        ResourceBoundError: If the enumeration would pass its bound
    """
    def need(value: Optional[int], name: str) -> int:
        if value is None:
            raise ValueError(f"{name} is required for {kind} counts")
        return value

    if kind == "colored":
        return count_colored(n, need(k, "k"), need(m, "m"))
    if kind == "total":
        return count_total(n, need(m, "m"))
    if kind == "ballot":
        return count_ballot(n, need(k, "k"))
    if kind == "ternary":
        return count_ternary_g4(n, k) if k is not None else count_ternary_f4(n)
    if kind == "hillfree":
        return count_hill_free(n)
    raise ValueError(f"Unsupported kind: {kind}. Available: {', '.join(COUNT_KINDS)}")
