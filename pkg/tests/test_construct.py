import pytest

from equilines import construct, exactlin, golay


def test_lift_zero_codeword():
    v = construct.lift(0)
    assert v.coords[0] == -5
    assert all(x == -1 for x in v.coords[1:])


def test_lift_c1():
    c1 = golay.mask_from_coords(golay.C1_COORDS)
    v = construct.lift(c1)
    assert v.coords[0] == -5
    for c in range(2, 25):
        expected = 3 if c in golay.C1_COORDS else -1
        assert v.coords[c - 1] == expected


def test_lift_norm_through_coordinate_1(code):
    for d in golay.octads_through(code, 1)[:40]:
        v = construct.lift(d)
        assert v.dot(v) == 80
        threes = sum(1 for x in v.coords if x == 3)
        assert threes == 7
        assert set(v.coords) == {-1, 3}
        assert v.coords[0] == -1


def test_scaled_inner_matches_intersection_rule(asche):
    # <u, v> = 16|d ∩ d'| - 48 for octads through coordinate 1
    vecs = asche.vectors
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            inter = golay.weight(vecs[i].source & vecs[j].source)
            assert vecs[i].dot(vecs[j]) == 16 * inter - 48


def test_asche_counts(asche):
    assert len(asche) == 72
    assert asche.ambient_dim == 19


def test_asche_orthogonal_to_4e1_plus_all(asche):
    aux = construct.FilterSet.standard().aux["4e1+eS"]
    assert all(v.dot(aux) == 0 for v in asche.vectors)


def test_final_counts(final54):
    assert len(final54) == 54
    assert final54.ambient_dim == 18


def test_final_rank_via_exact_stack(final54):
    assert exactlin.rank(final54.matrix()) == 18


def test_final_equiangular(final54):
    vecs = final54.vectors
    for i in range(54):
        assert vecs[i].dot(vecs[i]) == 80
        for j in range(i + 1, 54):
            assert vecs[i].dot(vecs[j]) in (16, -16)


def test_final_is_m_kernel_of_asche(asche, final54):
    m = construct.FilterSet.standard().m
    expected = {v.source for v in asche.vectors if v.dot(m) == 0}
    assert {v.source for v in final54.vectors} == expected


def test_removed_count(asche, final54):
    assert len(construct.removed_vectors(asche, final54)) == 18


def test_gram_is_80I_plus_16S(final54):
    from equilines import seidel

    s = seidel.seidel_from(final54)
    gram = final54.gram()
    for i in range(54):
        for j in range(54):
            expected = 80 if i == j else 16 * s.rows[i][j]
            assert gram[i][j] == expected


def test_ordering_deterministic(code, final54):
    again = construct.final_system(code)
    assert [v.source for v in again.vectors] == [v.source for v in final54.vectors]


def test_filter_vector_entries():
    m = construct.FilterSet.standard().m
    nonzero = {c: m[c - 1] for c in range(1, 25) if m[c - 1] != 0}
    assert nonzero == {4: 2, 5: -1, 6: -1, 7: 2, 8: -1, 10: -1,
                       17: 2, 18: -1, 20: -1, 22: -3, 23: 3}


def test_filter_octads_avoid_coordinate_1():
    f = construct.FilterSet.standard()
    assert not f.c1 & 1 and not f.c2 & 1
    assert golay.weight(f.c1) == 8 and golay.weight(f.c2) == 8


def test_verify_remark_passes(asche, final54):
    cert = construct.verify_remark(asche, final54, construct.FilterSet.standard().m)
    assert cert.passed
    assert len(cert.details["clique_u_octads"]) == 9
    assert len(cert.details["clique_v_octads"]) == 9


def test_verify_remark_fails_with_wrong_m(asche, final54):
    wrong_m = tuple(-x for x in construct.FilterSet.standard().m[:-1]) + (1,)
    cert = construct.verify_remark(asche, final54, wrong_m)
    assert not cert.passed
    assert "first_failure" in cert.details


def test_construction_error_on_wrong_filters(code):
    # swapping c1 for an octad containing coordinate 1 breaks the counts
    bad = construct.FilterSet.standard()
    octad_with_1 = golay.octads_through(code, 1)[0]
    broken = construct.FilterSet(c1=octad_with_1, c2=bad.c2, m=bad.m, aux=bad.aux)
    with pytest.raises(construct.ConstructionError):
        construct.asche_system(code, broken)
