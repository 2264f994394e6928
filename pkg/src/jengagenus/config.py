"""Block-tower configurations and their box descriptions.

A configuration is an ordered stack of levels, bottom first. Each level holds up
to n parallel blocks in n slots; consecutive levels run along perpendicular
axes (level 1 along X). The text form ("box description", .jenga files) is one
line per level over the alphabet {#, .} plus an "n <int>" header.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadCharacter,
    BadLineLength,
    EmptyLevel,
    MalformedHeader,
    NoLevels,
    ParameterError,
)

__all__ = [
    "Orientation",
    "GameParams",
    "Level",
    "Configuration",
    "NkDecomposition",
    "parse_box_description",
    "serialize_box_description",
    "make_initial",
    "solve_nk_decomposition",
    "make_nk_configuration",
    "block_count",
    "levels_count",
]


class Orientation(Enum):
    """Axis a level's blocks run along."""

    X = "x"
    Y = "y"

    @staticmethod
    def of_level(index: int) -> "Orientation":
        # Levels are 1-based from the bottom; odd levels run along X.
        return Orientation.X if index % 2 == 1 else Orientation.Y


@dataclass(frozen=True)
class GameParams:
    """Game parameters: n blocks per full level, k initial levels.

    n is also the block length in width units, so a full level is an n x n
    square in plan view.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ParameterError(f"n must be >= 2, got {self.n}")
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")


@dataclass(frozen=True)
class Level:
    """Occupancy of one level, slot 1 first."""

    occupancy: tuple[bool, ...]

    @classmethod
    def from_slots(cls, slots, n: int) -> "Level":
        """Build a level of width n occupied at the given 1-based slots."""
        chosen = set(slots)
        bad = [s for s in chosen if not 1 <= s <= n]
        if bad:
            raise ParameterError(f"slots out of range 1..{n}: {sorted(bad)}")
        return cls(tuple(j + 1 in chosen for j in range(n)))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Level":
        return cls(tuple(bool(mask >> j & 1) for j in range(n)))

    @property
    def mask(self) -> int:
        m = 0
        for j, occ in enumerate(self.occupancy):
            if occ:
                m |= 1 << j
        return m

    @property
    def count(self) -> int:
        return sum(self.occupancy)

    def slots(self) -> tuple[int, ...]:
        """Occupied slot indices, 1-based, ascending."""
        return tuple(j + 1 for j, occ in enumerate(self.occupancy) if occ)

    @property
    def is_full(self) -> bool:
        return all(self.occupancy)


@dataclass(frozen=True)
class Configuration:
    """A tower: levels bottom to top, each of width n, none empty."""

    n: int
    levels: tuple[Level, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if not self.levels:
            raise NoLevels("a configuration needs at least one level")
        for i, lv in enumerate(self.levels, start=1):
            if len(lv.occupancy) != self.n:
                raise BadLineLength(f"level {i} has {len(lv.occupancy)} slots, expected {self.n}")
            if lv.count == 0:
                raise EmptyLevel(f"level {i} is empty")

    @classmethod
    def from_masks(cls, n: int, masks) -> "Configuration":
        return cls(n, tuple(Level.from_mask(m, n) for m in masks))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(lv.mask for lv in self.levels)

    def level_orientation(self, index: int) -> Orientation:
        """Orientation of the 1-based level index."""
        return Orientation.of_level(index)


@dataclass(frozen=True)
class NkDecomposition:
    """Odd-n tower shape parameters: x levels, l blocks in the bottom level."""

    x: int
    l: int


def block_count(c: Configuration) -> int:
    """Total number of blocks in the tower."""
    return sum(lv.count for lv in c.levels)


def levels_count(c: Configuration) -> int:
    return len(c.levels)


# ---- box description (text/file) form ----

_GLYPHS = {"#": True, ".": False}


def parse_box_description(text: str) -> Configuration:
    """Parse a box description; inverse of serialize_box_description.

    Line 1 is "n <int>"; every following line is one level, bottom first,
    exactly n characters over {#, .}. A single trailing newline is allowed.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # the canonical form is newline-terminated
    if not lines:
        raise MalformedHeader("empty input")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != "n":
        raise MalformedHeader(f"expected 'n <int>' header, got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise MalformedHeader(f"non-integer width {head[1]!r}") from None
    if n < 1:
        raise MalformedHeader(f"width must be positive, got {n}")
    body = lines[1:]
    if not body:
        raise NoLevels("no level lines after the header")
    levels = []
    for i, line in enumerate(body, start=1):
        if len(line) != n:
            raise BadLineLength(f"level {i}: line length {len(line)} != n = {n}")
        try:
            occ = tuple(_GLYPHS[ch] for ch in line)
        except KeyError:
            bad = next(ch for ch in line if ch not in _GLYPHS)
            raise BadCharacter(f"level {i}: invalid character {bad!r}") from None
        if not any(occ):
            raise EmptyLevel(f"level {i} is empty")
        levels.append(Level(occ))
    return Configuration(n, tuple(levels))


def serialize_box_description(c: Configuration) -> str:
    """Canonical text form: header, then one newline-terminated line per level."""
    out = [f"n {c.n}"]
    for lv in c.levels:
        out.append("".join("#" if occ else "." for occ in lv.occupancy))
    return "\n".join(out) + "\n"


# ---- canonical generators ----


def make_initial(p: GameParams) -> Configuration:
    """The starting tower: k full levels of n blocks."""
    full = Level((True,) * p.n)
    return Configuration(p.n, (full,) * p.k)


def solve_nk_decomposition(p: GameParams) -> NkDecomposition:
    """Solve nk = n + (n-1)/2 + (n+1)/2 * (x-3) + l for odd n.

    Equivalently nk + 2 = (n+1)/2 * x + l with 1 <= l <= (n+1)/2, which pins
    (x, l) uniquely by division.
    """
    if p.n % 2 == 0:
        raise ParameterError(f"decomposition is defined for odd n, got n={p.n}")
    if p.n < 3 or p.k < 3:
        raise ParameterError(f"need n >= 3 and k >= 3, got ({p.n}, {p.k})")
    m = (p.n + 1) // 2
    x, r = divmod(p.n * p.k + 1, m)
    l = r + 1
    assert p.n * p.k == p.n + (p.n - 1) // 2 + m * (x - 3) + l
    assert x >= 4, "towers this flat cannot occur for k >= 3"
    return NkDecomposition(x=x, l=l)


def _odd_bottom_slots(n: int, l: int) -> list[int]:
    # Both end slots must carry blocks once l >= 2: a crossing block whose end
    # hangs over nothing picks up extra corner vertices and changes the census.
    if l == 1:
        return [(n + 1) // 2]
    return [1, n] + [3 + 2 * i for i in range(l - 2)]


def _even_gap_slots(n: int) -> list[int]:
    # n/2 blocks: odd slots up to n-3, then the last slot, so a crossing block
    # is supported under both of its end cells.
    if n == 2:
        return [2]
    return list(range(1, n - 2, 2)) + [n]


def make_nk_configuration(p: GameParams) -> Configuration:
    """The canonical maximum-genus tower for (n, k).

    Odd n: x levels; bottom has l blocks (middle slot when l = 1, otherwise
    both end slots plus left odd slots); then x-3 levels occupying every odd
    slot; a full level; and (n-1)/2 contiguous blocks on top. Even n: 2k-1
    levels; 2k-3 gapped levels of n/2 blocks, a full level, and n/2 contiguous
    blocks on top. Block count is n*k in both branches.
    """
    if p.k < 3:
        raise ParameterError(f"need k >= 3, got k={p.k}")
    n = p.n
    levels: list[Level] = []
    if n % 2 == 1:
        dec = solve_nk_decomposition(p)
        levels.append(Level.from_slots(_odd_bottom_slots(n, dec.l), n))
        odd_all = list(range(1, n + 1, 2))
        for _ in range(dec.x - 3):
            levels.append(Level.from_slots(odd_all, n))
        levels.append(Level((True,) * n))
        top = (n - 1) // 2
        levels.append(Level.from_slots(range(2, 2 + top), n))
    else:
        gap = Level.from_slots(_even_gap_slots(n), n)
        levels.extend([gap] * (2 * p.k - 3))
        levels.append(Level((True,) * n))
        top = n // 2
        levels.append(Level.from_slots(range(2, 2 + top), n))
    c = Configuration(n, tuple(levels))
    assert block_count(c) == n * p.k
    return c
