"""Lift octads to scaled line vectors and carve out the 72- and 54-line systems.

All geometry is done in scaled integers: a unit vector of the system is
(scaled coords)/sqrt(80), so squared norms are 80 and the common angle
1/5 shows up as pairwise inner products of exactly +/-16.
"""

from dataclasses import dataclass

from . import exactlin
from .certificate import CertificateBuilder
from .golay import (
    C1_COORDS,
    C2_COORDS,
    N_COORDS,
    coords_from_mask,
    mask_from_coords,
    weight,
)

SCALED_NORM = 80
SCALED_ANGLE = 16

# Entries of the separating vector, by 1-based coordinate.
M_ENTRIES = {4: 2, 5: -1, 6: -1, 7: 2, 8: -1, 10: -1, 17: 2, 18: -1, 20: -1, 22: -3, 23: 3}


class ConstructionError(RuntimeError):
    """A construction-stage count, rank, or identity check failed."""


@dataclass(frozen=True)
class LineVector:
    """Scaled representative 4d - 4*e1 - e_all of the line lifted from octad d."""

    coords: tuple               # 24 integers
    source: int                 # octad bitmask

    def dot(self, other):
        other = other.coords if isinstance(other, LineVector) else other
        return sum(a * b for a, b in zip(self.coords, other))


@dataclass(frozen=True)
class FilterSet:
    """The two octads and the integer vector that cut 72 lines down to 54."""

    c1: int
    c2: int
    m: tuple
    aux: dict                   # the three auxiliary integer vectors

    @classmethod
    def standard(cls):
        m = tuple(M_ENTRIES.get(c, 0) for c in range(1, N_COORDS + 1))
        e = lambda c: tuple(1 if i == c - 1 else 0 for i in range(N_COORDS))
        four_e1_plus_all = tuple(4 + 1 if i == 0 else 1 for i in range(N_COORDS))
        sub = lambda u, v: tuple(a - b for a, b in zip(u, v))
        return cls(
            c1=mask_from_coords(C1_COORDS),
            c2=mask_from_coords(C2_COORDS),
            m=m,
            aux={
                "4e1+eS": four_e1_plus_all,
                "e1-e2": sub(e(1), e(2)),
                "e1-e3": sub(e(1), e(3)),
            },
        )


@dataclass(frozen=True)
class LineSystem:
    vectors: tuple              # LineVector, canonical octad order
    ambient_dim: int            # rank of the span
    scaled_angle: int = SCALED_ANGLE
    denominator: int = SCALED_NORM

    def __len__(self):
        return len(self.vectors)

    def matrix(self):
        return [list(v.coords) for v in self.vectors]

    def gram(self):
        rows = self.matrix()
        return exactlin.mat_mul(rows, exactlin.transpose(rows))


def lift(d):
    """Scaled lift of a codeword mask: 4d - 4*e1 - e_all, as integers."""
    coords = [4 * (d >> j & 1) - 1 for j in range(N_COORDS)]
    coords[0] -= 4
    return LineVector(coords=tuple(coords), source=d)


def scaled_inner(u, v):
    """Exact integer dot product of two scaled line vectors."""
    return u.dot(v)


def _system_from(vectors, expected_count, expected_rank):
    if len(vectors) != expected_count:
        raise ConstructionError(
            f"expected {expected_count} lines, got {len(vectors)}"
        )
    r = exactlin.rank([list(v.coords) for v in vectors])
    if r != expected_rank:
        raise ConstructionError(f"expected span of rank {expected_rank}, got {r}")
    return LineSystem(vectors=tuple(vectors), ambient_dim=r)


def asche_system(code, filters=None):
    """The 72-line system: octads through coordinate 1 passing the four filters.

    Each filter condition is evaluated both as a bit/intersection test and
    as the literal inner-product-zero condition on the lifted vector; the
    two must agree. The orthogonality of every member to 4*e1 + e_all is
    an identity for octads through coordinate 1 and is asserted, never
    filtered on.
    """
    filters = filters or FilterSet.standard()
    picked = []
    for d in code.octads:
        if not d & 1:
            continue
        v = lift(d)
        bit_tests = (
            not d & 0b010,
            not d & 0b100,
            weight(d & filters.c1) == 2,
            weight(d & filters.c2) == 2,
        )
        c1_bits = [filters.c1 >> j & 1 for j in range(N_COORDS)]
        c2_bits = [filters.c2 >> j & 1 for j in range(N_COORDS)]
        dot_tests = (
            v.dot(filters.aux["e1-e2"]) == 0,
            v.dot(filters.aux["e1-e3"]) == 0,
            v.dot(c1_bits) == 0,
            v.dot(c2_bits) == 0,
        )
        if bit_tests != dot_tests:
            raise ConstructionError(
                f"filter reformulation mismatch on octad {coords_from_mask(d)}"
            )
        if v.dot(filters.aux["4e1+eS"]) != 0:
            raise ConstructionError(
                f"octad through coordinate 1 violates the 4e1+eS identity: "
                f"{coords_from_mask(d)}"
            )
        if all(bit_tests):
            picked.append(v)
    return _system_from(picked, 72, 19)


def final_system(code, filters=None):
    """The 54-line subsystem: members of the 72-system orthogonal to m."""
    filters = filters or FilterSet.standard()
    full = asche_system(code, filters)
    kept = [v for v in full.vectors if v.dot(filters.m) == 0]
    system = _system_from(kept, 54, 18)
    _check_equiangular(system)
    return system


def _check_equiangular(system):
    vecs = system.vectors
    for i in range(len(vecs)):
        if vecs[i].dot(vecs[i]) != SCALED_NORM:
            raise ConstructionError(f"member {i} has scaled norm != {SCALED_NORM}")
        for j in range(i + 1, len(vecs)):
            if abs(vecs[i].dot(vecs[j])) != SCALED_ANGLE:
                raise ConstructionError(
                    f"members {i},{j} have scaled inner product "
                    f"{vecs[i].dot(vecs[j])}, not +/-{SCALED_ANGLE}"
                )


def removed_vectors(full, final):
    """Members of the 72-system that are not in the 54-system."""
    final_sources = {v.source for v in final.vectors}
    return [v for v in full.vectors if v.source not in final_sources]


def verify_remark(full, final, m):
    """Certify the structure of the 18 removed lines.

    They split 9/9 by the sign of the m-pairing (scaled values +/-24,
    i.e. 6/sqrt(5) on unit vectors), each 9-set is a clique at cosine
    +1/5, and every member of one clique has exactly two partners at
    +1/5 in the other.
    """
    b = CertificateBuilder(
        "remark.cliques",
        {"full": [v.source for v in full.vectors], "final": [v.source for v in final.vectors]},
    )
    removed = removed_vectors(full, final)
    b.check("removed_count_18", len(removed) == 18, len(removed))

    pairings = [v.dot(m) for v in removed]
    b.check(
        "m_pairings_pm24",
        all(p in (24, -24) for p in pairings),
        sorted(set(pairings)),
    )
    kept_ok = all(v.dot(m) == 0 for v in final.vectors)
    b.check("final_orthogonal_to_m", kept_ok)

    side_u = [v for v, p in zip(removed, pairings) if p > 0]
    side_v = [v for v, p in zip(removed, pairings) if p < 0]
    b.check("split_9_9", (len(side_u), len(side_v)) == (9, 9), (len(side_u), len(side_v)))
    b.note("clique_u_octads", [coords_from_mask(v.source) for v in side_u])
    b.note("clique_v_octads", [coords_from_mask(v.source) for v in side_v])

    for name, clique in (("u", side_u), ("v", side_v)):
        bad = [
            (i, j)
            for i in range(len(clique))
            for j in range(i + 1, len(clique))
            if clique[i].dot(clique[j]) != SCALED_ANGLE
        ]
        b.check(f"intra_{name}_all_plus", not bad, bad[:3])

    cross = [[u.dot(v) for v in side_v] for u in side_u]
    row_counts = [row.count(SCALED_ANGLE) for row in cross]
    col_counts = [col.count(SCALED_ANGLE) for col in zip(*cross)]
    b.check("each_u_two_plus_partners", all(c == 2 for c in row_counts), row_counts)
    b.check("each_v_two_plus_partners", all(c == 2 for c in col_counts), col_counts)
    return b.build()
