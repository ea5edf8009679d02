"""Extended binary [24,12,8] Golay code: generator assembly and octad enumeration.

Codewords are stored as 24-bit integer masks; bit j (LSB-first) holds
coordinate j+1, so coordinate 1 is bit 0. The canonical ordering of
codewords is lexicographic on the bit string read coordinate 1 first
(coordinate 1 most significant).
"""

from collections import Counter
from dataclasses import dataclass

N_COORDS = 24
N_WORDS = 4096
N_OCTADS = 759

CIRCULANT_FIRST_ROW = (0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1)

# The two specific octads used downstream to filter the line system.
C1_COORDS = (2, 3, 14, 15, 16, 19, 22, 23)
C2_COORDS = (2, 3, 9, 11, 12, 13, 21, 24)


class GeneratorAssemblyError(RuntimeError):
    """No assembly convention for the generator matrix passed validation."""


class CodeValidationError(ValueError):
    """Generated code violates a structural requirement."""


def mask_from_coords(coords):
    """Bitmask with the given 1-based coordinates set."""
    m = 0
    for c in coords:
        if not 1 <= c <= N_COORDS:
            raise ValueError(f"coordinate {c} out of range")
        m |= 1 << (c - 1)
    return m


def coords_from_mask(mask):
    """Sorted 1-based coordinates of the set bits."""
    return tuple(c for c in range(1, N_COORDS + 1) if mask >> (c - 1) & 1)


def weight(mask):
    return mask.bit_count()


def lex_key(mask):
    """Sort key putting coordinate 1 as the most significant bit."""
    key = 0
    for c in range(N_COORDS):
        key = (key << 1) | (mask >> c & 1)
    return key


@dataclass(frozen=True)
class GolayCode:
    """The full code: generator rows, all 4096 words, and the 759 octads."""

    generator: tuple            # 12 row masks
    words: tuple                # 4096 masks in canonical order
    octads: tuple               # 759 weight-8 masks in canonical order

    @property
    def word_set(self):
        return frozenset(self.words)


def _circulant(first_row, direction):
    n = len(first_row)
    rows = []
    for i in range(n):
        if direction == "right":
            rows.append(tuple(first_row[(j - i) % n] for j in range(n)))
        else:
            rows.append(tuple(first_row[(j + i) % n] for j in range(n)))
    return rows


def _assemble(direction):
    """Bordered-circulant generator [I12 | B] as 12 row masks.

    B is the 12x12 block with B[0] = (0, 1,...,1), first column below the
    corner all ones, and the 11x11 circulant in the lower right.
    """
    circ = _circulant(CIRCULANT_FIRST_ROW, direction)
    b_rows = [(0,) + (1,) * 11] + [(1,) + circ[i] for i in range(11)]
    rows = []
    for i in range(12):
        bits = [1 if j == i else 0 for j in range(12)] + list(b_rows[i])
        mask = 0
        for j, b in enumerate(bits):
            mask |= b << j
        rows.append(mask)
    return tuple(rows)


def gf2_rank(row_masks):
    """Rank over GF(2) of a list of bitmask rows."""
    basis = []
    for row in row_masks:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def _span(generator):
    words = []
    for comb in range(1 << len(generator)):
        w = 0
        g = comb
        i = 0
        while g:
            if g & 1:
                w ^= generator[i]
            g >>= 1
            i += 1
        words.append(w)
    return words


def generate_code(generator):
    """Enumerate the row span of a rank-12 generator and extract octads."""
    if len(generator) != 12:
        raise CodeValidationError("generator must have 12 rows")
    if gf2_rank(generator) != 12:
        raise CodeValidationError("generator rank over GF(2) is below 12")
    words = sorted(set(_span(generator)), key=lex_key)
    if len(words) != N_WORDS:
        raise CodeValidationError(f"span has {len(words)} words, expected {N_WORDS}")
    octads = tuple(w for w in words if weight(w) == 8)
    return GolayCode(generator=tuple(generator), words=tuple(words), octads=octads)


def weight_distribution(code):
    return dict(sorted(Counter(weight(w) for w in code.words).items()))


def validation_gates(code):
    """Structural gates that pin down the intended code.

    Returns {gate_name: bool}. All must hold for the correctly assembled
    generator: rank 12, self-duality, minimum weight 8, octad count 759,
    and membership of the two filter octads.
    """
    dist = weight_distribution(code)
    nonzero_weights = [w for w in dist if w > 0]
    rows = code.generator
    self_dual = all(
        weight(rows[i] & rows[j]) % 2 == 0
        for i in range(12)
        for j in range(i, 12)
    )
    return {
        "rank_12": gf2_rank(rows) == 12,
        "word_count_4096": len(code.words) == N_WORDS,
        "min_weight_8": min(nonzero_weights) == 8,
        "octad_count_759": len(code.octads) == N_OCTADS,
        "self_dual_generator": self_dual,
        "weight_distribution": dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1},
        "c1_in_code": mask_from_coords(C1_COORDS) in code.word_set,
        "c2_in_code": mask_from_coords(C2_COORDS) in code.word_set,
    }


def build_generator():
    """Assemble the generator, resolving the circulant shift direction.

    Tries the right-shift circulant first, then left-shift; whichever
    passes every validation gate wins.
    """
    failures = {}
    for direction in ("right", "left"):
        generator = _assemble(direction)
        try:
            code = generate_code(generator)
        except CodeValidationError as exc:
            failures[direction] = str(exc)
            continue
        gates = validation_gates(code)
        if all(gates.values()):
            return generator
        failures[direction] = [k for k, v in gates.items() if not v]
    raise GeneratorAssemblyError(f"no assembly convention passed the gates: {failures}")


def standard_code():
    """Build and fully validate the code."""
    return generate_code(build_generator())


def octads_through(code, coordinate):
    """All octads containing the given 1-based coordinate, canonical order."""
    if not 1 <= coordinate <= N_COORDS:
        raise ValueError(f"coordinate {coordinate} out of range")
    bit = 1 << (coordinate - 1)
    return [d for d in code.octads if d & bit]
