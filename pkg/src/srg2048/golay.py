"""The extended binary Golay code.

The code is the 12-dimensional linear subspace of GF(2)^24 whose 4096 words
have weights 0, 8, 12, 16, 24 with multiplicities 1, 759, 2576, 759, 1.
That weight census characterizes the code up to coordinate permutation, so
`build_code` accepts any 12 generator rows and validates the census instead
of trusting the caller; every matrix that passes yields an isomorphic
coset graph.

The built-in default generator matrix is the systematic form [I | B] with
the classical 12x12 bordered circulant B.
"""

from __future__ import annotations

import numpy as np

from .errors import CodeConstructionError, DomainError
from .gf2 import VEC_LIMIT, Vec24, parse_vec

# Systematic [I | B] generator rows, written in the package's string form.
DEFAULT_GENERATOR_ROWS: tuple[str, ...] = (
    "100000000000110111000101",
    "010000000000101110001011",
    "001000000000011100010111",
    "000100000000111000101101",
    "000010000000110001011011",
    "000001000000100010110111",
    "000000100000000101101111",
    "000000010000001011011101",
    "000000001000010110111001",
    "000000000100101101110001",
    "000000000010011011100011",
    "000000000001111111111110",
)

EXPECTED_WEIGHT_DISTRIBUTION: dict[int, int] = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

CODE_DIMENSION = 12
CODE_SIZE = 1 << CODE_DIMENSION


class GolayCode:
    """Immutable container for the enumerated code.

    Attributes:
        generators: the 12 generator rows as integer encodings.
        codewords:  all 4096 words, ascending, dtype uint32.
        weight8:    the 759 words of weight 8, ascending, dtype uint32.
    Membership is answered from a direct-addressed bit table (2 MiB), one
    bit per point of GF(2)^24, so lookups cost a constant regardless of
    how many millions of queries the adjacency machinery issues.
    """

    def __init__(self, generators: tuple[int, ...], codewords: np.ndarray):
        self.generators = generators
        self.codewords = codewords
        self.weight8 = codewords[np.bitwise_count(codewords) == 8]
        self._weight8_list: list[int] = self.weight8.tolist()
        member_bits = np.zeros(VEC_LIMIT >> 3, dtype=np.uint8)
        np.bitwise_or.at(
            member_bits,
            codewords >> 3,
            (np.uint8(1) << (codewords & 7).astype(np.uint8)),
        )
        self._member_bits = member_bits
        # lazily filled caches (see coset_graph)
        self._weight6_table: np.ndarray | None = None

    def contains(self, x: Vec24) -> bool:
        """True iff x is one of the 4096 codewords."""
        if not 0 <= x < VEC_LIMIT:
            raise DomainError(f"vector encoding out of range [0, 2^24): {x}")
        return bool((self._member_bits[x >> 3] >> (x & 7)) & 1)

    def __contains__(self, x: Vec24) -> bool:
        return self.contains(x)

    def contains_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership over an array of encodings."""
        xs = np.asarray(xs, dtype=np.uint32)
        return ((self._member_bits[xs >> 3] >> (xs & 7).astype(np.uint8)) & 1).astype(bool)

    def weight_distribution(self) -> dict[int, int]:
        """Exact weight census over all 4096 words."""
        values, counts = np.unique(np.bitwise_count(self.codewords), return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}


def build_code(generators: tuple[int, ...] | None = None) -> GolayCode:
    """Enumerate the span of 12 generator rows and validate the census.

    Raises CodeConstructionError if the rows are dependent (span smaller
    than 4096) or if the weight census differs from the extended Golay
    distribution, naming the first offending weight class.
    """
    if generators is None:
        generators = tuple(parse_vec(row) for row in DEFAULT_GENERATOR_ROWS)
    generators = tuple(int(g) for g in generators)
    if len(generators) != CODE_DIMENSION:
        raise CodeConstructionError(
            f"expected {CODE_DIMENSION} generator rows, got {len(generators)}"
        )
    for i, g in enumerate(generators):
        if not 0 <= g < VEC_LIMIT:
            raise CodeConstructionError(f"generator row {i + 1} out of range: {g}")

    span = np.zeros(1, dtype=np.uint32)
    for g in generators:
        span = np.concatenate([span, span ^ np.uint32(g)])
    codewords = np.unique(span)
    if len(codewords) != CODE_SIZE:
        raise CodeConstructionError(
            f"generator rows are not linearly independent: span has "
            f"{len(codewords)} distinct words, expected {CODE_SIZE}"
        )

    census: dict[int, int] = {}
    values, counts = np.unique(np.bitwise_count(codewords), return_counts=True)
    for v, c in zip(values, counts):
        census[int(v)] = int(c)
    for w in sorted(set(census) | set(EXPECTED_WEIGHT_DISTRIBUTION)):
        got = census.get(w, 0)
        expected = EXPECTED_WEIGHT_DISTRIBUTION.get(w, 0)
        if got != expected:
            raise CodeConstructionError(
                f"weight distribution mismatch at weight {w}: "
                f"got {got} words, expected {expected}"
            )
    return GolayCode(generators, codewords)


def read_generator_file(path: str) -> tuple[int, ...]:
    """Read 12 generator rows (one 24-character line each) from a text file."""
    rows: list[int] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(parse_vec(line))
    if len(rows) != CODE_DIMENSION:
        raise CodeConstructionError(
            f"{path}: expected {CODE_DIMENSION} generator rows, got {len(rows)}"
        )
    return tuple(rows)


def min_nonzero_weight(code: GolayCode) -> int:
    """Smallest weight among nonzero codewords (8 for a valid build)."""
    nonzero = code.codewords[code.codewords != 0]
    return int(np.bitwise_count(nonzero).min())
