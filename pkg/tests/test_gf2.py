"""Tests for the Z/2 linear algebra."""

import itertools

import pytest
from phasefan.gf2 import (
    AffineSubspace,
    BitVector,
    LinearSubspace,
    NecklaceError,
    NecklaceOrdering,
    SizeMismatchError,
    affine_hull,
    canonicalize,
    compress,
    even_cover_check,
    expand,
    necklace_check,
    odd_points,
)


def bits(value: str) -> int:
    return BitVector.from_string(value).bits


def space(base: str, *generators: str) -> AffineSubspace:
    return AffineSubspace.from_generators(
        BitVector.from_string(base), [BitVector.from_string(g) for g in generators], len(base)
    )


def point_set(affine: AffineSubspace) -> set[int]:
    return set(affine.points())


SMALL_SPACES = [
    space('0000'),
    space('1010'),
    space('0000', '1000'),
    space('0100', '1000'),
    space('0010', '1100', '0110'),
    space('0001', '1111'),
    space('1000', '0101', '0011'),
    space('0000', '1000', '0100', '0010', '0001'),
]


class TestBitVector:
    """Tests for BitVector."""

    def test_string_round_trip(self):
        """Test that the first character is the first coordinate."""
        vector = BitVector.from_string('010010')
        assert vector.bits == (1 << 1) | (1 << 4)
        assert vector.to_string() == '010010'
        assert list(vector) == [0, 1, 0, 0, 1, 0]

    def test_addition(self):
        """Test that addition is the symmetric difference."""
        total = BitVector.from_string('1100') + BitVector.from_string('0110')
        assert str(total) == '1010'
        assert total.weight() == 2

    def test_size_mismatch(self):
        """Test that vectors over different ground sets cannot be added."""
        with pytest.raises(SizeMismatchError):
            BitVector.from_string('11') ^ BitVector.from_string('110')

    def test_bits_outside_ground(self):
        """Test that only the low positions may be set."""
        with pytest.raises(ValueError):
            BitVector(0b100, 2)

    def test_not_binary(self):
        """Test that only 0 and 1 are accepted."""
        with pytest.raises(ValueError):
            BitVector.from_string('0120')

    def test_compress_expand(self):
        """Test that expand undoes compress on the kept positions."""
        keep = [0, 2, 3]
        assert compress(0b1101, keep) == 0b111
        assert expand(compress(0b1101, keep), keep) == 0b1101


class TestLinearSubspace:
    """Tests for LinearSubspace."""

    def test_reduced_row_echelon(self):
        """Test that dependent generators collapse and pivots are cleared."""
        tangent = LinearSubspace.span([bits('1100'), bits('0110'), bits('1010')], 4)
        assert tangent.dim == 2
        for row in tangent.basis:
            pivot = row & -row
            assert sum(1 for other in tangent.basis if other & pivot) == 1

    def test_intersection_by_enumeration(self):
        """Test that the intersection agrees with the set intersection of vectors."""
        for a, b in itertools.product(SMALL_SPACES, repeat=2):
            expected = set(a.tangent.vectors()) & set(b.tangent.vectors())
            assert set(a.tangent.intersect(b.tangent).vectors()) == expected

    def test_complement_representatives(self):
        """Test that there is one representative per coset."""
        tangent = LinearSubspace.span([bits('1100'), bits('0011')], 4)
        representatives = list(tangent.complement_representatives())
        assert len(representatives) == 4
        assert len({tangent.reduce(r) for r in representatives}) == 4

    def test_quotient(self):
        """Test that the quotient of a plane by one of its lines is a line."""
        plane = LinearSubspace.span([bits('1000'), bits('0100')], 4)
        line = LinearSubspace.span([bits('1100')], 4)
        assert plane.quotient(line).dim == 1


class TestCanonicalize:
    """Tests for canonicalize."""

    def test_already_canonical(self):
        """Test a basepoint with zero pivot coordinates."""
        result = canonicalize(BitVector.from_string('0000'), [BitVector.from_string('1000'), BitVector.from_string('0100')])
        assert str(result.basepoint) == '0000'
        assert {str(row) for row in result.basis} == {'1000', '0100'}

    def test_basepoint_reduces(self):
        """Test that a basepoint inside the span reduces to zero."""
        result = canonicalize(BitVector.from_string('1100'), [BitVector.from_string('1000'), BitVector.from_string('0100')])
        assert result == space('0000', '1000', '0100')

    def test_dependent_generators(self):
        """Test that the dimension is the rank of the generators."""
        result = space('000001', '110000', '010010', '100010')
        assert result.dim == 2
        assert len(point_set(result)) == 4

    def test_idempotent(self):
        """Test that canonicalizing a canonical space changes nothing."""
        for affine in SMALL_SPACES:
            assert canonicalize(affine.basepoint, affine.basis) == affine

    def test_equal_point_sets_equal_values(self):
        """Test that equality of values is equality of point sets."""
        for a, b in itertools.product(SMALL_SPACES, repeat=2):
            for shift in range(16):
                moved = b.translate(shift)
                assert (a == moved) == (point_set(a) == point_set(moved))

    def test_size_mismatch(self):
        """Test that generators must share the ground size."""
        with pytest.raises(SizeMismatchError):
            canonicalize(BitVector.from_string('00'), [BitVector.from_string('100')])


class TestAffineSubspace:
    """Tests for AffineSubspace."""

    def test_size(self):
        """Test that a space of dimension d has 2^d points."""
        for affine in SMALL_SPACES:
            assert len(point_set(affine)) == len(affine) == 2**affine.dim

    def test_membership(self):
        """Test membership against point enumeration."""
        for affine in SMALL_SPACES:
            points = point_set(affine)
            for vector in range(16):
                assert affine.contains(vector) == (vector in points)

    @pytest.mark.parametrize(
        'affine, vector, expected',
        [
            (space('00', '10'), '10', True),
            (space('01', '10'), '00', False),
            (space('000000', '100000', '010100', '001011'), '000000', True),
        ],
    )
    def test_member_examples(self, affine, vector, expected):
        """Test the membership examples."""
        assert (BitVector.from_string(vector) in affine) is expected

    def test_intersection_by_enumeration(self):
        """Test that the intersection agrees with the set intersection of points."""
        for a, b in itertools.product(SMALL_SPACES, repeat=2):
            for shift in (0, 0b0001, 0b0110):
                moved = b.translate(shift)
                expected = point_set(a) & point_set(moved)
                result = a.intersect(moved)
                if not expected:
                    assert result is None
                else:
                    assert point_set(result) == expected

    def test_parallel_disjoint(self):
        """Test that distinct parallel lines do not meet."""
        assert space('00', '10').intersect(space('01', '10')) is None

    def test_intersect_self(self):
        """Test that a space meets itself in itself."""
        affine = space('0010', '1100', '0110')
        assert affine.intersect(affine) == affine

    def test_project_nothing(self):
        """Test that dropping no coordinate is the identity."""
        affine = space('0010', '1100', '0110')
        assert affine.project(0) == affine

    def test_project_collapses(self):
        """Test that dropping the only direction leaves a point."""
        result = space('00', '10').project(bits('10'))
        assert result.dim == 0 and result.ground_size == 1

    def test_project_by_enumeration(self):
        """Test the image of a plane under dropping the third coordinate."""
        result = space('0000', '1100', '0010').project(bits('0010'))
        assert result == space('000', '110')
        assert point_set(result) == {compress(p, [0, 1, 3]) for p in point_set(space('0000', '1100', '0010'))}

    def test_affine_hull(self):
        """Test that the hull of the points of a space is the space."""
        for affine in SMALL_SPACES:
            assert affine_hull(affine.points(), 4) == affine


class TestEvenCover:
    """Tests for the even covering predicate."""

    def test_doubled(self):
        """Test that a space taken twice is an even covering."""
        affine = space('0010', '1100')
        assert even_cover_check([affine, affine])

    def test_single(self):
        """Test that one nonempty space is not an even covering."""
        assert not even_cover_check([space('0010', '1100')])

    def test_point_covered_three_times(self):
        """Test three concurrent lines plus a disjoint one."""
        lines = [space('000', '100'), space('000', '010'), space('000', '001'), space('110', '001')]
        assert not even_cover_check(lines)
        assert 0 in odd_points(lines)


TRIANGLES = [
    space('000', '100'),
    space('100', '010'),
    space('110', '110'),
    space('001', '100'),
    space('101', '010'),
    space('111', '110'),
]


class TestNecklaceCheck:
    """Tests for necklace_check."""

    def test_two_equal_lines(self):
        """Test that two equal lines form a necklace."""
        assert necklace_check([space('00', '10'), space('00', '10')]) == NecklaceOrdering((0, 1))

    def test_two_different_lines(self):
        """Test that two different lines do not form a necklace."""
        assert necklace_check([space('00', '10'), space('00', '01')]) is None

    def test_two_triangles(self):
        """Test that two disjoint triangles are an even covering but not a necklace."""
        assert even_cover_check(TRIANGLES)
        assert necklace_check(TRIANGLES) is None
        assert necklace_check(TRIANGLES[:3]) == NecklaceOrdering((0, 1, 2))

    def test_four_lines(self):
        """Test the four lines of a phase structure on four points in the plane."""
        lines = [
            affine_hull([bits('0010'), bits('0101')], 4),
            affine_hull([bits('0000'), bits('0100')], 4),
            affine_hull([bits('0000'), bits('0010')], 4),
            affine_hull([bits('0100'), bits('0101')], 4),
        ]
        ordering = necklace_check(lines)
        assert ordering == NecklaceOrdering.from_cycle([1, 2, 0, 3])
        assert even_cover_check(lines)

    def test_necklace_is_even_cover(self):
        """Test that every necklace found is an even covering."""
        for subset in itertools.combinations(TRIANGLES, 3):
            if necklace_check(list(subset)) is not None:
                assert even_cover_check(list(subset))

    def test_no_common_tangent(self):
        """Test that planes without a common codimension-one direction are rejected."""
        planes = [space('0000', '1000', '0100'), space('0000', '0010', '0001'), space('0000', '1010', '0101')]
        with pytest.raises(NecklaceError):
            necklace_check(planes)

    def test_mixed_dimensions(self):
        """Test that spaces of different dimensions are rejected."""
        with pytest.raises(NecklaceError):
            necklace_check([space('000', '100'), space('000', '010'), space('000')])


class TestNecklaceOrdering:
    """Tests for NecklaceOrdering."""

    def test_rotation_and_reversal(self):
        """Test that rotations and reversals share a representative."""
        base = NecklaceOrdering.from_cycle([2, 3, 1, 4])
        assert base.items == (1, 3, 2, 4)
        assert NecklaceOrdering.from_cycle([4, 2, 3, 1]) == base
        assert NecklaceOrdering.from_cycle([4, 1, 3, 2]) == base

    def test_neighbours(self):
        """Test the neighbours of an item."""
        assert NecklaceOrdering.from_cycle([2, 3, 1, 4]).neighbours(1) == {3, 4}

    def test_repeated(self):
        """Test that repeated items are rejected."""
        with pytest.raises(ValueError):
            NecklaceOrdering.from_cycle([1, 2, 1])
