"""Seidel matrices: exact spectra, permutation automorphisms, switching classes.

A Seidel matrix is symmetric with zero diagonal and +/-1 off-diagonal.
Internally each one also carries the adjacency bitmasks of the graph
with edge set {ij : S_ij = -1}, which drives both the automorphism
search and the switching-class canonical form.
"""

import math
from dataclasses import dataclass
from itertools import permutations

from . import exactlin
from .certificate import CertificateBuilder


class NotEquiangularError(ValueError):
    """Input line system is not at the expected scaled angle."""


class IrrationalPartError(ValueError):
    """Non-integer spectral part has degree > 2; not representable here."""


@dataclass(frozen=True)
class SeidelMatrix:
    n: int
    rows: tuple                  # tuple of tuples of ints

    def __post_init__(self):
        for i in range(self.n):
            if self.rows[i][i] != 0:
                raise ValueError("nonzero diagonal")
            for j in range(i + 1, self.n):
                if self.rows[i][j] != self.rows[j][i] or abs(self.rows[i][j]) != 1:
                    raise ValueError("not a symmetric +/-1 off-diagonal matrix")

    @classmethod
    def from_rows(cls, rows):
        return cls(n=len(rows), rows=tuple(tuple(r) for r in rows))

    def as_lists(self):
        return [list(r) for r in self.rows]

    def principal_submatrix(self, keep):
        keep = list(keep)
        return SeidelMatrix.from_rows(
            [[self.rows[i][j] for j in keep] for i in keep]
        )

    def minus_graph_masks(self):
        """Adjacency bitmasks of the graph on edges {ij : S_ij = -1}."""
        masks = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if i != j and self.rows[i][j] == -1:
                    m |= 1 << j
            masks.append(m)
        return masks


@dataclass(frozen=True)
class SpectrumClaim:
    """Integer eigenvalues with multiplicities, plus at most one monic
    integer quadratic x^2 + b*x + c contributing two irrational eigenvalues."""

    integer_eigs: tuple          # ((value, multiplicity), ...) sorted by value
    quadratic: tuple = None      # (b, c) or None

    @classmethod
    def make(cls, eigs, quadratic=None):
        items = tuple(sorted((int(v), int(m)) for v, m in dict(eigs).items()))
        return cls(integer_eigs=items, quadratic=tuple(quadratic) if quadratic else None)

    @property
    def total_multiplicity(self):
        return sum(m for _, m in self.integer_eigs) + (2 if self.quadratic else 0)

    def eig_sum(self):
        s = sum(v * m for v, m in self.integer_eigs)
        if self.quadratic:
            s -= self.quadratic[0]
        return s

    def eig_square_sum(self):
        s = sum(v * v * m for v, m in self.integer_eigs)
        if self.quadratic:
            b, c = self.quadratic
            s += b * b - 2 * c
        return s

    def to_poly(self):
        p = exactlin.poly_from_roots(
            [v for v, m in self.integer_eigs for _ in range(m)]
        )
        if self.quadratic:
            b, c = self.quadratic
            p = exactlin.poly_mul(p, [c, b, 1])
        return p

    def as_dict(self):
        return {
            "integer_eigs": [[v, m] for v, m in self.integer_eigs],
            "quadratic": list(self.quadratic) if self.quadratic else None,
        }


@dataclass(frozen=True)
class AutGroupResult:
    order: int
    generators: tuple            # tuples: images of 0..n-1


def seidel_from(system):
    """Seidel matrix of an equiangular system at scaled angle 16, norm 80."""
    vecs = system.vectors
    n = len(vecs)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(0)
                continue
            ip = vecs[i].dot(vecs[j])
            if ip not in (16, -16):
                raise NotEquiangularError(
                    f"scaled inner product {ip} between members {i},{j}"
                )
            row.append(ip // 16)
        rows.append(row)
    return SeidelMatrix.from_rows(rows)


def compute_spectrum(s, candidates=None):
    """Exact spectrum of a Seidel matrix as integer roots plus at most one
    integer quadratic.

    Integer eigenvalues are certified by exact nullities. With no
    candidate hint the whole Gershgorin window [-(n-1), n-1] is swept;
    a candidate list (e.g. from a floating-point screen) restricts the
    sweep, and any shortfall falls back to the full window before the
    quadratic cofactor is attempted.
    """
    n = s.n
    m = s.as_lists()
    window = range(-(n - 1), n) if n > 0 else range(0, 1)
    if candidates is not None:
        candidates = sorted(set(int(c) for c in candidates))
    eigs = {}

    def sweep(values):
        for lam in values:
            if lam in eigs:
                continue
            mult = exactlin.nullity_at(m, lam)
            if mult:
                eigs[lam] = mult
            if sum(eigs.values()) == n:
                break

    sweep(candidates if candidates is not None else window)
    deficit = n - sum(eigs.values())
    if deficit and candidates is not None:
        sweep(window)
        deficit = n - sum(eigs.values())

    if deficit == 0:
        return SpectrumClaim.make(eigs)
    if deficit != 2:
        raise IrrationalPartError(
            f"non-integer spectral part has degree {deficit}"
        )
    # the quadratic cofactor is forced by the trace identities:
    # sum of all eigenvalues = 0, sum of squares = n(n-1)
    int_sum = sum(v * k for v, k in eigs.items())
    int_sq = sum(v * v * k for v, k in eigs.items())
    b = int_sum                       # roots of the quadratic sum to -b
    rest_sq = n * (n - 1) - int_sq
    if (b * b - rest_sq) % 2:
        raise IrrationalPartError("quadratic cofactor is not integral")
    c = (b * b - rest_sq) // 2
    disc = b * b - 4 * c
    if disc >= 0 and math.isqrt(disc) ** 2 == disc:
        raise IrrationalPartError(
            "residual quadratic has integer roots the nullity sweep missed"
        )
    claim = SpectrumClaim.make(eigs, quadratic=(b, c))
    cert = certify_spectrum(s, claim)
    if not cert.passed:
        raise IrrationalPartError(
            f"quadratic cofactor failed exact certification: {cert.details}"
        )
    return claim


def certify_spectrum(s, claim):
    """Exact check that char_poly(s) equals the claimed factorization,
    with an independent nullity cross-check for every integer eigenvalue."""
    b = CertificateBuilder(
        "spectrum", {"matrix": s.rows, "claim": claim.as_dict()}
    )
    b.note("claim", claim.as_dict())
    if not b.check("multiplicities_sum_to_n", claim.total_multiplicity == s.n,
                   claim.total_multiplicity):
        return b.build()
    if claim.quadratic:
        bq, cq = claim.quadratic
        disc = bq * bq - 4 * cq
        b.check(
            "quadratic_irreducible",
            disc < 0 or math.isqrt(disc) ** 2 != disc,
            disc,
        )
    cp = exactlin.char_poly(s.as_lists())
    claimed = claim.to_poly()
    mismatch = next(
        (i for i in range(max(len(cp), len(claimed)))
         if (cp[i] if i < len(cp) else 0) != (claimed[i] if i < len(claimed) else 0)),
        None,
    )
    b.check("char_poly_matches", mismatch is None,
            None if mismatch is None else {"coefficient_index": mismatch})
    m = s.as_lists()
    for value, mult in claim.integer_eigs:
        got = exactlin.nullity_at(m, value)
        b.check(f"nullity_at_{value}", got == mult, {"claimed": mult, "exact": got})
    b.check("trace_identity", claim.eig_sum() == 0, claim.eig_sum())
    b.check("trace_square_identity",
            claim.eig_square_sum() == s.n * (s.n - 1), claim.eig_square_sum())
    return b.build()


# ---------------------------------------------------------------------------
# graph machinery: equitable refinement, automorphisms, canonical labeling
# ---------------------------------------------------------------------------

def _refine(n, adj, cells):
    """Equitable refinement of an ordered partition, deterministic order."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter_cell in list(cells):
            splitter = 0
            for v in splitter_cell:
                splitter |= 1 << v
            new_cells = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) > 1:
                    changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            cells = new_cells
            if changed:
                break
    return cells


def _adjacency_bits(adj, perm):
    """Upper-triangle adjacency bits of the relabeled graph, as an int."""
    n = len(perm)
    pos = {v: i for i, v in enumerate(perm)}
    bits = 0
    k = 0
    for i in range(n):
        vi = perm[i]
        for j in range(i + 1, n):
            if adj[vi] >> perm[j] & 1:
                bits |= 1 << k
            k += 1
    return bits


def canonical_graph_form(n, adj):
    """Canonical upper-triangle bitstring of a graph up to isomorphism.

    Individualization-refinement search taking the minimum adjacency
    encoding over all discrete leaves.
    """
    best = None

    def rec(cells):
        nonlocal best
        cells = _refine(n, adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [c[0] for c in cells]
            bits = _adjacency_bits(adj, perm)
            if best is None or bits < best:
                best = bits
            return
        cell = cells[target]
        for v in sorted(cell):
            branched = (
                cells[:target]
                + [[v], [w for w in cell if w != v]]
                + cells[target + 1:]
            )
            rec(branched)

    rec([list(range(n))])
    return (n, best if best is not None else 0)


def enumerate_isomorphisms(n, adj_src, adj_dst, limit=None):
    """All edge-preserving bijections from one graph onto another, via
    backtracking with forward-checked candidate domains seeded by
    equitable refinement of both graphs.

    The refinement process is determined by cell order and invariant
    counts only, so corresponding cells of the two refinements must match
    under any isomorphism; mismatched cell size sequences mean there is
    none.
    """
    full = (1 << n) - 1
    src_cells = _refine(n, adj_src, [list(range(n))])
    dst_cells = _refine(n, adj_dst, [list(range(n))])
    if [len(c) for c in src_cells] != [len(c) for c in dst_cells]:
        return []
    color_mask = {}
    for src_cell, dst_cell in zip(src_cells, dst_cells):
        mask = 0
        for v in dst_cell:
            mask |= 1 << v
        for v in src_cell:
            color_mask[v] = mask
    order = [v for cell in src_cells for v in cell]
    found = []

    def rec(depth, images, domains, used):
        if limit is not None and len(found) >= limit:
            return
        if depth == n:
            found.append(tuple(images[v] for v in range(n)))
            return
        # most-constrained unmapped vertex, ties by fixed order
        v = min(
            (u for u in order if images[u] is None),
            key=lambda u: (domains[u].bit_count(), order.index(u)),
        )
        dom = domains[v] & ~used
        while dom:
            w = (dom & -dom).bit_length() - 1
            dom &= dom - 1
            images[v] = w
            new_domains = dict(domains)
            ok = True
            for u in order:
                if images[u] is not None or u == v:
                    continue
                if adj_src[v] >> u & 1:
                    nd = new_domains[u] & adj_dst[w]
                else:
                    nd = new_domains[u] & ~adj_dst[w] & full & ~(1 << w)
                if not nd & ~(used | (1 << w)):
                    ok = False
                    break
                new_domains[u] = nd
            if ok:
                rec(depth + 1, images, new_domains, used | (1 << w))
            images[v] = None
            if limit is not None and len(found) >= limit:
                return
        return

    rec(0, {v: None for v in range(n)}, dict(color_mask), 0)
    return found


def enumerate_automorphisms(n, adj, limit=None):
    """All adjacency-preserving permutations of a graph."""
    return enumerate_isomorphisms(n, adj, adj, limit=limit)


def find_isomorphism(n, adj_src, adj_dst):
    """One isomorphism between two graphs, or None."""
    found = enumerate_isomorphisms(n, adj_src, adj_dst, limit=1)
    return found[0] if found else None


def _compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def _closure(n, gens):
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = _compose(h, g)
                if p not in group:
                    group.add(p)
                    nxt.append(p)
        frontier = nxt
    return group


def minimal_generators(n, elements):
    """Greedy generating subset of a permutation group given all elements."""
    gens = []
    group = {tuple(range(n))}
    for p in sorted(elements):
        if p not in group:
            gens.append(p)
            group = _closure(n, gens)
    return gens


def automorphism_order(s):
    """Permutation automorphism group {P : P^T S P = S} of a Seidel matrix."""
    adj = s.minus_graph_masks()
    autos = enumerate_automorphisms(s.n, adj)
    gens = minimal_generators(s.n, autos)
    for g in gens:
        if not _preserves(s, g):
            raise AssertionError("automorphism engine returned a non-automorphism")
    if len(_closure(s.n, gens)) != len(autos):
        raise AssertionError("generator closure disagrees with enumeration")
    return AutGroupResult(order=len(autos), generators=tuple(gens))


def _preserves(s, perm):
    n = s.n
    return all(
        s.rows[perm[i]][perm[j]] == s.rows[i][j]
        for i in range(n)
        for j in range(i + 1, n)
    )


def _descendant(s, v):
    """Switch row v to all +1, drop v, return the {-1}-graph on the rest
    as (vertex list, adjacency bitmasks over positions)."""
    rest = [j for j in range(s.n) if j != v]
    adj = []
    for a_pos, a in enumerate(rest):
        mask = 0
        for b_pos, b in enumerate(rest):
            if a != b and s.rows[a][b] * s.rows[v][a] * s.rows[v][b] == -1:
                mask |= 1 << b_pos
        adj.append(mask)
    return rest, adj


@dataclass(frozen=True)
class SignedAutGroupResult:
    """Signed permutation matrices M with M^T S M = S.

    Each element is a tuple of (target, sign) pairs: column i of M has its
    nonzero entry sign at row target.
    """

    order: int
    generators: tuple


def _signed_compose(a, b):
    """Apply b, then a."""
    return tuple((a[tb][0], sb * a[tb][1]) for tb, sb in b)


def _signed_preserves(s, m):
    n = s.n
    return all(
        s.rows[m[i][0]][m[j][0]] * m[i][1] * m[j][1] == s.rows[i][j]
        for i in range(n)
        for j in range(i + 1, n)
    )


def _signed_closure(n, gens):
    identity = tuple((i, 1) for i in range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = _signed_compose(h, g)
                if p not in group:
                    group.add(p)
                    nxt.append(p)
        frontier = nxt
    return group


def _extend_to_signed(s, perm):
    """Extend a switching automorphism (a permutation for which some +/-1
    diagonal makes it preserve S) to a signed permutation matrix."""
    n = s.n
    signs = [1] * n
    anchor = perm[0]
    for i in range(1, n):
        signs[i] = s.rows[i][0] * s.rows[perm[i]][anchor]
    m = tuple((perm[i], signs[i]) for i in range(n))
    if not _signed_preserves(s, m):
        raise AssertionError("claimed switching automorphism does not extend")
    return m


def signed_automorphism_group(s):
    """The group of signed permutation matrices preserving S.

    Built from three kinds of verified generators: the negated identity,
    plain permutation automorphisms, and one switching automorphism into
    each vertex whose descendant graph is isomorphic to vertex 0's (an
    isomorphism of descendants extends uniquely up to global sign). The
    closure is enumerated and its order cross-checked against the
    descendant counting identity |group| = 2 * |Aut(descendant_0)| *
    #matching vertices.
    """
    n = s.n
    if n == 0:
        return SignedAutGroupResult(order=1, generators=())
    perm_group = automorphism_order(s)
    gens = [tuple((i, -1) for i in range(n))]
    gens += [tuple((g[i], 1) for i in range(n)) for g in perm_group.generators]
    rest0 = [j for j in range(n) if j != 0]
    _, adj0 = _descendant(s, 0)
    descendant_autos = enumerate_automorphisms(n - 1, adj0)
    aut0 = len(descendant_autos)
    # the stabilizer of vertex 0 in the switching group is exactly the
    # extension of Aut(descendant_0)
    for g in minimal_generators(n - 1, descendant_autos):
        perm = [0] * n
        for pos, v in enumerate(rest0):
            perm[v] = rest0[g[pos]]
        gens.append(_extend_to_signed(s, tuple(perm)))
    matching = 1
    for w in range(1, n):
        rest, adjw = _descendant(s, w)
        iso = find_isomorphism(n - 1, adj0, adjw)
        if iso is None:
            continue
        matching += 1
        # positions back to vertex labels; vertex 0 maps to w
        perm = [0] * n
        perm[0] = w
        for pos, v in enumerate(rest0):
            perm[v] = rest[iso[pos]]
        gens.append(_extend_to_signed(s, tuple(perm)))
    for g in gens:
        if not _signed_preserves(s, g):
            raise AssertionError("signed generator fails to preserve S")
    group = _signed_closure(n, gens)
    expected = 2 * aut0 * matching
    if len(group) != expected:
        raise AssertionError(
            f"signed closure has order {len(group)}, descendant count gives {expected}"
        )
    minimal = []
    span = {tuple((i, 1) for i in range(n))}
    for g in sorted(group):
        if g not in span:
            minimal.append(g)
            span = _signed_closure(n, minimal)
            if len(span) == len(group):
                break
    return SignedAutGroupResult(order=len(group), generators=tuple(minimal))


def brute_force_automorphism_count(s):
    """Reference count by enumerating all n! permutations; small n only."""
    return sum(1 for p in permutations(range(s.n)) if _preserves(s, p))


def switching_canonical_form(s):
    """Canonical invariant of the switching class of a Seidel matrix.

    For each distinguished vertex v, switch so that row v becomes all +1,
    drop v, and canonically label the graph {ij : switched S_ij = -1} on
    the rest; the form is the lexicographic minimum over v. Two Seidel
    matrices are switching-plus-permutation equivalent iff their forms
    are equal.
    """
    n = s.n
    if n == 0:
        return "0:"
    if n == 1:
        return "1:"
    best = None
    for v in range(n):
        rest = [j for j in range(n) if j != v]
        adj = []
        for a_pos, a in enumerate(rest):
            mask = 0
            for b_pos, b in enumerate(rest):
                if a == b:
                    continue
                if s.rows[a][b] * s.rows[v][a] * s.rows[v][b] == -1:
                    mask |= 1 << b_pos
            adj.append(mask)
        form = canonical_graph_form(n - 1, adj)
        if best is None or form < best:
            best = form
    return f"{n}:{best[1]:x}"


def switch(s, signs):
    """Conjugate by the +/-1 diagonal given by signs."""
    return SeidelMatrix.from_rows(
        [[signs[i] * signs[j] * s.rows[i][j] if i != j else 0 for j in range(s.n)]
         for i in range(s.n)]
    )


def permute(s, perm):
    """Relabel: entry (i, j) of the result is S[perm[i]][perm[j]]."""
    return SeidelMatrix.from_rows(
        [[s.rows[perm[i]][perm[j]] for j in range(s.n)] for i in range(s.n)]
    )
