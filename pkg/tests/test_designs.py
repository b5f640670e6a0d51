from itertools import combinations

import pytest

from domlab.designs import (
    SUPPORTED_ORDERS,
    Design,
    LatinSquare,
    OrthogonalArray,
    affine_plane_from_mols,
    are_orthogonal,
    design_from_text,
    design_to_text,
    field,
    latin_from_text,
    latin_to_text,
    mols_family,
    mols_to_oa,
    oa_from_text,
    oa_to_mols,
    oa_to_text,
    projective_from_affine,
    validate_bibd,
    validate_oa,
)
from domlab.errors import UnsupportedOrderError


class TestField:
    def test_gf2(self):
        f = field(2)
        assert f.add == ((0, 1), (1, 0))
        assert f.mul == ((0, 0), (0, 1))

    def test_gf3(self):
        f = field(3)
        assert f.add[2][2] == 1 and f.mul[2][2] == 1

    def test_gf4(self):
        f = field(4)
        assert f.add[1][1] == 0  # characteristic 2
        # x * x = x + 1 with x encoded as 2, x+1 as 3
        assert f.mul[2][2] == 3

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_axioms_pass_construction(self, q):
        field(q)  # exhaustive axiom check runs inside

    @pytest.mark.parametrize("q", [1, 6, 10, 12])
    def test_unsupported(self, q):
        with pytest.raises(UnsupportedOrderError):
            field(q)


class TestMols:
    def test_q2(self):
        (sq,) = mols_family(2)
        assert sq.cells == ((0, 1), (1, 0))

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_pairwise_orthogonal(self, q):
        fam = mols_family(q)
        assert len(fam) == q - 1
        for a, b in combinations(fam, 2):
            assert are_orthogonal(a, b)

    def test_self_not_orthogonal(self):
        sq = mols_family(3)[0]
        assert not are_orthogonal(sq, sq)

    def test_any_two_order2_squares_not_orthogonal(self):
        s1 = LatinSquare(2, ((0, 1), (1, 0)))
        s2 = LatinSquare(2, ((1, 0), (0, 1)))
        for a in (s1, s2):
            for b in (s1, s2):
                assert not are_orthogonal(a, b)

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            are_orthogonal(mols_family(2)[0], mols_family(3)[0])

    def test_non_latin_rejected(self):
        with pytest.raises(ValueError):
            LatinSquare(2, ((0, 0), (1, 1)))


class TestOrthogonalArray:
    def test_oa32_from_single_square(self):
        oa = mols_to_oa(mols_family(2))
        assert (oa.s, oa.q) == (3, 2)
        assert set(oa.rows) == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}
        assert validate_oa(oa)

    def test_flipped_symbol_invalid(self):
        oa = mols_to_oa(mols_family(2))
        rows = [list(r) for r in oa.rows]
        rows[0][2] ^= 1
        assert not validate_oa(OrthogonalArray(3, 2, tuple(tuple(r) for r in rows)))

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_roundtrip_and_validation(self, q):
        fam = mols_family(q)
        oa = mols_to_oa(fam)
        assert validate_oa(oa)
        back = oa_to_mols(oa)
        assert [sq.cells for sq in back] == [sq.cells for sq in fam]
        assert mols_to_oa(back) == oa

    @pytest.mark.parametrize("q", SUPPORTED_ORDERS)
    def test_extremal_rows_coincide_once(self, q):
        oa = mols_to_oa(mols_family(q))
        assert oa.s == q + 1
        for r1, r2 in combinations(oa.rows, 2):
            assert sum(1 for a, b in zip(r1, r2) if a == b) == 1

    def test_oa_text_roundtrip(self):
        oa = mols_to_oa(mols_family(3))
        assert oa_from_text(oa_to_text(oa)) == oa


class TestPlanes:
    def test_fano_from_q2(self):
        aff = affine_plane_from_mols(mols_family(2))
        assert aff.v == 4 and len(aff.blocks) == 6 and aff.k == 2
        assert validate_bibd(aff)
        fano = projective_from_affine(aff)
        assert (fano.v, fano.k, fano.lam) == (7, 3, 1)
        assert len(fano.blocks) == 7
        assert validate_bibd(fano)
        for x, y in combinations(range(7), 2):
            assert sum(1 for b in fano.blocks if x in b and y in b) == 1

    def test_q3_planes(self):
        aff = affine_plane_from_mols(mols_family(3))
        assert (aff.v, len(aff.blocks), aff.k, aff.lam) == (9, 12, 3, 1)
        assert validate_bibd(aff)
        proj = projective_from_affine(aff)
        assert (proj.v, proj.k, proj.lam) == (13, 4, 1)
        assert validate_bibd(proj)

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_parameter_sweep(self, q):
        aff = affine_plane_from_mols(mols_family(q))
        assert aff.v == q * q and len(aff.blocks) == q * q + q
        # each point on exactly q+1 blocks
        for p in range(aff.v):
            assert sum(1 for b in aff.blocks if p in b) == q + 1
        assert validate_bibd(aff)
        proj = projective_from_affine(aff)
        assert proj.v == q * q + q + 1 and len(proj.blocks) == q * q + q + 1
        assert validate_bibd(proj)

    def test_deleted_line_fails(self):
        fano = projective_from_affine(affine_plane_from_mols(mols_family(2)))
        broken = Design(fano.v, fano.blocks[:-1], fano.k, fano.lam)
        assert not validate_bibd(broken)

    def test_design_text_roundtrip(self):
        fano = projective_from_affine(affine_plane_from_mols(mols_family(2)))
        assert design_from_text(design_to_text(fano)) == fano

    def test_latin_text_roundtrip(self):
        sq = mols_family(4)[2]
        assert latin_from_text(latin_to_text(sq)) == sq
