import random

import pytest

from equilines import construct, exactlin, seidel


def random_seidel(rng, n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = rng.choice([1, -1])
    return seidel.SeidelMatrix.from_rows(rows)


def clique_seidel(n):
    return seidel.SeidelMatrix.from_rows(
        [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    )


def cycle_seidel(n):
    rows = [[1] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 0
        rows[i][(i + 1) % n] = rows[(i + 1) % n][i] = -1
    return seidel.SeidelMatrix.from_rows(rows)


def test_seidel_matrix_rejects_bad_entries():
    with pytest.raises(ValueError):
        seidel.SeidelMatrix.from_rows([[1, 1], [1, 0]])
    with pytest.raises(ValueError):
        seidel.SeidelMatrix.from_rows([[0, 2], [2, 0]])
    with pytest.raises(ValueError):
        seidel.SeidelMatrix.from_rows([[0, 1], [-1, 0]])


def test_seidel_from_two_vectors(final54):
    pair = None
    vecs = final54.vectors
    for j in range(1, 54):
        if vecs[0].dot(vecs[j]) == 16:
            pair = construct.LineSystem(vectors=(vecs[0], vecs[j]), ambient_dim=2)
            break
    s = seidel.seidel_from(pair)
    assert s.rows == ((0, 1), (1, 0))


def test_seidel_from_rejects_non_equiangular():
    a = construct.LineVector(coords=tuple([80] + [0] * 23), source=0)
    b = construct.LineVector(coords=tuple([0, 80] + [0] * 22), source=1)
    bad = construct.LineSystem(vectors=(a, b), ambient_dim=2)
    with pytest.raises(seidel.NotEquiangularError):
        seidel.seidel_from(bad)


def test_s54_trace_identities(s54):
    assert exactlin.trace(s54.as_lists()) == 0
    sq = exactlin.mat_mul(s54.as_lists(), s54.as_lists())
    assert exactlin.trace(sq) == 54 * 53


def test_compute_spectrum_order_one():
    s = seidel.SeidelMatrix.from_rows([[0]])
    claim = seidel.compute_spectrum(s)
    assert claim.integer_eigs == ((0, 1),) and claim.quadratic is None


def test_compute_spectrum_triangle():
    claim = seidel.compute_spectrum(clique_seidel(3))
    assert claim.integer_eigs == ((-1, 2), (2, 1))


def test_certify_spectrum_triangle():
    cert = seidel.certify_spectrum(
        clique_seidel(3), seidel.SpectrumClaim.make({2: 1, -1: 2})
    )
    assert cert.passed


def test_certify_spectrum_rejects_perturbed_claim():
    cert = seidel.certify_spectrum(
        clique_seidel(3), seidel.SpectrumClaim.make({2: 2, -1: 1})
    )
    assert not cert.passed


def test_s54_spectrum(s54):
    claim = seidel.compute_spectrum(s54)
    assert claim.integer_eigs == ((-5, 36), (7, 6), (11, 8), (13, 2))
    assert claim.quadratic == (-24, 107)
    cert = seidel.certify_spectrum(s54, claim)
    assert cert.passed


def test_s54_perturbed_multiplicity_fails(s54):
    bad = seidel.SpectrumClaim.make(
        {-5: 35, 7: 7, 11: 8, 13: 2}, quadratic=(-24, 107)
    )
    cert = seidel.certify_spectrum(s54, bad)
    assert not cert.passed
    failing = cert.details["first_failure"]["check"]
    assert "nullity_at_-5" in cert.details["checks"] or failing


def test_compute_spectrum_irrational_part_raises():
    rng = random.Random(21)
    raised = 0
    for _ in range(50):
        s = random_seidel(rng, 6)
        try:
            seidel.compute_spectrum(s)
        except seidel.IrrationalPartError:
            raised += 1
    assert raised > 0


def test_compute_spectrum_agrees_with_certify_random():
    rng = random.Random(33)
    for _ in range(60):
        s = random_seidel(rng, rng.randint(1, 6))
        try:
            claim = seidel.compute_spectrum(s)
        except seidel.IrrationalPartError:
            continue
        assert claim.total_multiplicity == s.n
        assert seidel.certify_spectrum(s, claim).passed


def test_automorphisms_four_clique():
    result = seidel.automorphism_order(clique_seidel(4))
    assert result.order == 24


def test_automorphisms_pentagon():
    s = cycle_seidel(5)
    result = seidel.automorphism_order(s)
    assert result.order == 10
    assert seidel.brute_force_automorphism_count(s) == 10


def test_automorphisms_match_brute_force_random():
    rng = random.Random(55)
    for _ in range(110):
        n = rng.randint(2, 7)
        s = random_seidel(rng, n)
        got = seidel.automorphism_order(s)
        assert got.order == seidel.brute_force_automorphism_count(s)
        assert all(seidel.permute(s, g).rows == s.rows for g in got.generators)


def test_generators_generate_whole_group():
    s = cycle_seidel(6)
    result = seidel.automorphism_order(s)
    closure = seidel._closure(s.n, list(result.generators))
    assert len(closure) == result.order


def test_switching_canonical_form_small_classes():
    # order 3: 0 edges and 2 edges are switching-equivalent; 1 edge is not
    def from_edges(n, edges):
        rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
        for a, b in edges:
            rows[a][b] = rows[b][a] = -1
        return seidel.SeidelMatrix.from_rows(rows)

    empty = from_edges(3, [])
    two = from_edges(3, [(0, 1), (1, 2)])
    one = from_edges(3, [(0, 1)])
    assert seidel.switching_canonical_form(empty) == seidel.switching_canonical_form(two)
    assert seidel.switching_canonical_form(empty) != seidel.switching_canonical_form(one)


def test_switching_canonical_form_invariance_random():
    rng = random.Random(77)
    for _ in range(250):
        n = rng.randint(2, 7)
        s = random_seidel(rng, n)
        form = seidel.switching_canonical_form(s)
        for _ in range(4):
            signs = [rng.choice([1, -1]) for _ in range(n)]
            perm = list(range(n))
            rng.shuffle(perm)
            t = seidel.permute(seidel.switch(s, signs), perm)
            assert seidel.switching_canonical_form(t) == form


def test_switching_canonical_form_separates_classes():
    # two-graphs on 4 vertices fall into distinct classes by odd-triple count
    def odd_triples(s):
        n = s.n
        return sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            for k in range(j + 1, n)
            if s.rows[i][j] * s.rows[j][k] * s.rows[i][k] == -1
        )

    rng = random.Random(99)
    seen = {}
    for _ in range(200):
        s = random_seidel(rng, 4)
        form = seidel.switching_canonical_form(s)
        seen.setdefault(form, set()).add(odd_triples(s))
    for forms in seen.values():
        assert len(forms) == 1


def test_signed_automorphism_group_consistency():
    rng = random.Random(101)
    for _ in range(20):
        n = rng.randint(2, 6)
        s = random_seidel(rng, n)
        result = seidel.signed_automorphism_group(s)
        perm_order = seidel.automorphism_order(s).order
        # {+/-P : P a permutation automorphism} is a subgroup
        assert result.order % (2 * perm_order) == 0
        assert all(seidel._signed_preserves(s, g) for g in result.generators)
        # brute force over all signed matrices for tiny n
        if n <= 4:
            from itertools import permutations, product

            count = 0
            for p in permutations(range(n)):
                for signs in product([1, -1], repeat=n):
                    m = tuple((p[i], signs[i]) for i in range(n))
                    if seidel._signed_preserves(s, m):
                        count += 1
            assert count == result.order
