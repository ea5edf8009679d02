"""Exhaustive searches: non-extendibility and the integral-spectrum sub-scan.

Both searches are range-partitioned for parallel execution; chunk results
are merged in a fixed order so the report never depends on worker count.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from multiprocessing import Pool

import numpy as np

from . import exactlin, seidel
from .construct import SCALED_ANGLE, SCALED_NORM

INTEGRALITY_TOL = 1e-6
AMBIGUITY_TOL = 1e-4


@dataclass
class ExtendibilityReport:
    extendible: bool
    witness: tuple               # Fractions, span coordinates in R^24; or None
    patterns_examined: int
    basis_indices: tuple
    witnesses: list = field(default_factory=list)


@dataclass
class SubScanResult:
    hits: list                   # (order, removed indices, SpectrumClaim)
    equivalence_classes: dict    # canonical form -> list of hit positions
    subsets_examined: dict       # order -> count
    screened_ambiguous: int = 0


def greedy_basis(rows, target_rank):
    """First linearly independent subset of the rows, in given order."""
    chosen = []
    for i, row in enumerate(rows):
        if exactlin.rank([rows[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == target_rank:
                return chosen
    raise ValueError(f"rows span rank {len(chosen)} < {target_rank}")


def _gray_flip_bit(k):
    """Bit flipped when stepping from Gray code of k-1 to Gray code of k."""
    return (k & -k).bit_length() - 1


def _gray_signs(index, r):
    g = index ^ (index >> 1)
    return [SCALED_ANGLE if g >> j & 1 else -SCALED_ANGLE for j in range(r)]


def _extend_scan_range(args):
    """Scan sign-pattern indices [lo, hi) over the basis.

    adjugate is det * Gram(B)^-1, inner is V * B^T * adjugate, so for a
    pattern eps the candidate's scaled norm is eps^T adjugate eps / det
    and its scaled inner products with all members are inner @ eps / det.
    """
    lo, hi, r, det, adjugate, inner, allow_slack = args
    eps = _gray_signs(lo, r)
    z = [sum(adjugate[i][j] * eps[j] for j in range(r)) for i in range(r)]
    norm_target = SCALED_NORM * det
    hits = []
    k = lo
    while k < hi:
        norm_num = sum(e * zi for e, zi in zip(eps, z))
        if norm_num == norm_target or (allow_slack and 0 < norm_num <= norm_target):
            prods = [sum(row[j] * eps[j] for j in range(r)) for row in inner]
            target = SCALED_ANGLE * det
            if all(p == target or p == -target for p in prods):
                hits.append((k, tuple(eps)))
        k += 1
        if k < hi:
            b = _gray_flip_bit(k)
            delta = -2 * eps[b]
            eps[b] += delta
            for i in range(r):
                z[i] += delta * adjugate[i][b]
    return hits


def check_extendibility(system, ambient_dim=None, jobs=1, progress=None):
    """Exhaustively decide whether one more line at the common angle fits.

    Any valid new line w must satisfy <w, b> in {+16, -16} for each member
    b of an independent basis B, so sweeping all 2^rank sign patterns and
    solving the exact Gram system for each is a complete search. With
    ambient_dim equal to the span rank (the default) the candidate's
    scaled norm must be exactly 80; with ambient_dim above the rank a
    norm deficit can be absorbed by an orthogonal component, so any
    pattern with norm at most 80 extends.
    """
    rows = system.matrix()
    r = system.ambient_dim
    ambient_dim = r if ambient_dim is None else ambient_dim
    if ambient_dim < r:
        raise ValueError("ambient dimension below the span rank")
    allow_slack = ambient_dim > r
    basis = greedy_basis(rows, r)
    bmat = [rows[i] for i in basis]
    gram = exactlin.mat_mul(bmat, exactlin.transpose(bmat))
    det = exactlin.bareiss_det(gram)
    if det <= 0:
        raise AssertionError("basis Gram matrix not positive definite")
    adjugate = []
    for j in range(r):
        e = [det if i == j else 0 for i in range(r)]
        col = exactlin.solve_rational(gram, e)
        adjugate.append([int(x) for x in col])
    adjugate = exactlin.transpose(adjugate)   # symmetric anyway
    # inner[i] @ eps = det * <v_i, candidate>
    lift_mat = exactlin.mat_mul(exactlin.transpose(bmat), adjugate)  # 24 x r
    inner = exactlin.mat_mul(rows, lift_mat)                         # members x r

    total = 1 << r
    bounds = [total * i // max(jobs, 1) for i in range(max(jobs, 1) + 1)]
    tasks = [
        (bounds[i], bounds[i + 1], r, det, adjugate, inner, allow_slack)
        for i in range(len(bounds) - 1)
        if bounds[i] < bounds[i + 1]
    ]
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            chunk_hits = pool.map(_extend_scan_range, tasks)
    else:
        chunk_hits = [_extend_scan_range(t) for t in tasks]
    if progress:
        progress(total)

    witnesses = []
    for hits in chunk_hits:
        for k, eps in hits:
            w = [Fraction(sum(lift_mat[i][j] * eps[j] for j in range(r)), det)
                 for i in range(24)]
            _verify_witness(rows, w, allow_slack)
            witnesses.append(tuple(w))
    return ExtendibilityReport(
        extendible=bool(witnesses),
        witness=witnesses[0] if witnesses else None,
        patterns_examined=total,
        basis_indices=tuple(basis),
        witnesses=witnesses,
    )


def _verify_witness(rows, w, allow_slack):
    norm = sum(x * x for x in w)
    if not (norm == SCALED_NORM or (allow_slack and 0 < norm <= SCALED_NORM)):
        raise AssertionError("witness failed the norm re-check")
    for i, row in enumerate(rows):
        ip = sum(a * b for a, b in zip(row, w))
        if abs(ip) != SCALED_ANGLE:
            raise AssertionError(f"witness not at the common angle with member {i}")
        # parallel would force |ip| = 80; +/-16 already rules it out


def unrank_combination(rank_index, n, k):
    """Lexicographic unranking of a k-subset of range(n)."""
    out = []
    x = 0
    for slot in range(k, 0, -1):
        while math.comb(n - x - 1, slot - 1) <= rank_index:
            rank_index -= math.comb(n - x - 1, slot - 1)
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def _combinations_from(start, n, k):
    """Lexicographic k-subsets of range(n) starting at the given subset."""
    cur = list(start)
    while True:
        yield tuple(cur)
        i = k - 1
        while i >= 0 and cur[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        cur[i] += 1
        for j in range(i + 1, k):
            cur[j] = cur[j - 1] + 1


def _screen_range(args):
    """Float-screen removed-index subsets with lexicographic ranks [lo, hi).

    Returns (survivors, ambiguous_count). A subset survives when every
    eigenvalue of the corresponding principal submatrix is within the
    integrality tolerance of an integer; near-threshold cases are also
    passed on (conservatively) and counted as ambiguous.
    """
    s_float, n, k, lo, hi = args
    survivors = []
    ambiguous = 0
    idx = np.arange(n)
    count = 0
    gen = _combinations_from(unrank_combination(lo, n, k), n, k)
    for removed in gen:
        if count >= hi - lo:
            break
        count += 1
        keep = np.delete(idx, removed)
        sub = s_float[np.ix_(keep, keep)]
        ev = np.linalg.eigvalsh(sub)
        dev = np.abs(ev - np.round(ev))
        worst = float(dev.max())
        if worst < INTEGRALITY_TOL:
            survivors.append((removed, sorted(set(int(x) for x in np.round(ev)))))
        elif worst < AMBIGUITY_TOL:
            survivors.append((removed, sorted(set(int(x) for x in np.round(ev)))))
            ambiguous += 1
    return survivors, ambiguous


def subseidel_scan(s, orders=(50, 51, 52, 53), jobs=1, progress=None):
    """Find all principal submatrices of the given orders with fully
    integral spectrum, grouped into switching-equivalence classes.

    Every float-screen survivor is certified exactly: integer eigenvalue
    multiplicities are exact nullities and must sum to the order.
    """
    n = s.n
    s_float = np.array(s.as_lists(), dtype=float)
    hits = []
    subsets_examined = {}
    ambiguous_total = 0
    for order in sorted(orders, reverse=True):
        k = n - order
        total = math.comb(n, k)
        subsets_examined[order] = total
        bounds = [total * i // max(jobs, 1) for i in range(max(jobs, 1) + 1)]
        tasks = [
            (s_float, n, k, bounds[i], bounds[i + 1])
            for i in range(len(bounds) - 1)
            if bounds[i] < bounds[i + 1]
        ]
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                results = pool.map(_screen_range, tasks)
        else:
            results = [_screen_range(t) for t in tasks]
        survivors = []
        for chunk, amb in results:
            survivors.extend(chunk)
            ambiguous_total += amb
        survivors.sort()
        for removed, candidates in survivors:
            keep = [i for i in range(n) if i not in removed]
            sub = s.principal_submatrix(keep)
            try:
                claim = seidel.compute_spectrum(sub, candidates=candidates)
            except seidel.IrrationalPartError:
                continue
            if claim.quadratic is None:
                hits.append((order, removed, claim))
        if progress:
            progress(order, total)

    classes = {}
    for pos, (order, removed, _claim) in enumerate(hits):
        keep = [i for i in range(n) if i not in removed]
        form = seidel.switching_canonical_form(s.principal_submatrix(keep))
        classes.setdefault(form, []).append(pos)
    return SubScanResult(
        hits=hits,
        equivalence_classes=classes,
        subsets_examined=subsets_examined,
        screened_ambiguous=ambiguous_total,
    )
