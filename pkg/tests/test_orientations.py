"""Tests for the enumeration of orientations."""

import pytest
from phasefan.matroid import Matroid
from phasefan.orientations import (
    MAX_ORIENTATION_GROUND,
    OrientationSearch,
    SizeCapError,
    count_orientations,
    find_extension,
    iter_orientations,
)
from phasefan.search import search_phase_structures


class TestCountOrientations:
    """Tests for count_orientations."""

    @pytest.mark.parametrize(
        'name, count',
        [('u11', 1), ('u12', 2), ('u23', 4), ('u34', 8), ('u24', 24), ('n', 4), ('k4', 32)],
    )
    def test_counts(self, catalog, name, count):
        """Test the number of orientations of the fixtures."""
        assert count_orientations(catalog.matroid(name)) == count

    def test_fano(self, fano):
        """Test that the Fano plane is not orientable."""
        assert count_orientations(fano) == 0

    def test_coloop(self, catalog):
        """Test that a single coloop has one orientation, matching its one phase structure."""
        matroid = catalog.matroid('u11')
        # {0, +, -} is a single covector set; its two topes are not two orientations
        assert count_orientations(matroid) == 1
        assert len(search_phase_structures(matroid)) == 1

    def test_loop(self):
        """Test that a loop has a single orientation."""
        assert count_orientations(Matroid(['a'], [0, 0])) == 1

    @pytest.mark.parametrize('name, mode', [('u24', 'affine'), ('u24', 'projective'), ('k4', 'affine')])
    def test_agrees_with_phase_search(self, catalog, name, mode):
        """Test that orientations and phase structures are equinumerous."""
        matroid = catalog.matroid(name)
        assert count_orientations(matroid) == len(search_phase_structures(matroid, mode))

    def test_each_orientation_has_its_structure(self, u24):
        """Test that distinct orientations give distinct structures."""
        structures = {oriented.to_phase() for oriented in iter_orientations(u24)}
        assert structures == set(search_phase_structures(u24))

    def test_orientations_valid(self, k4):
        """Test that every orientation found satisfies the axioms over the right matroid."""
        for oriented in iter_orientations(k4):
            assert oriented.underlying_matroid() == k4
            assert oriented.check_axioms().ok

    def test_size_cap(self):
        """Test that large ground sets are refused."""
        size = MAX_ORIENTATION_GROUND + 1
        matroid = Matroid([str(k) for k in range(size)], [min(m.bit_count(), 2) for m in range(1 << size)], validate=False)
        with pytest.raises(SizeCapError):
            count_orientations(matroid)

    def test_pruning(self, u24):
        """Test that the elimination checks reject most sign choices."""
        search = OrientationSearch(u24)
        candidates = list(search.signed_circuit_sets())
        assert 24 <= len(candidates) < 4**4
        assert search.nodes <= 4 + 4**2 + 4**3 + 4**4


class TestFindExtension:
    """Tests for find_extension."""

    def test_u34(self, u34, u34_oriented):
        """Test that an orientation is found from its deletion and contraction."""
        found = find_extension(
            u34, '4', u34_oriented.minor(delete=['4']), u34_oriented.minor(contract=['4'])
        )
        assert found in (u34_oriented, u34_oriented.reorient(['4']))

    def test_k4(self, k4, k4_oriented):
        """Test the extension of a triangle with a pendant edge by the remaining edge."""
        found = find_extension(
            k4, 'e34', k4_oriented.minor(delete=['e34']), k4_oriented.minor(contract=['e34'])
        )
        assert found is not None
        assert found.minor(delete=['e34']) == k4_oriented.minor(delete=['e34'])
        assert found.minor(contract=['e34']) == k4_oriented.minor(contract=['e34'])

    def test_none(self, u24, u34_oriented):
        """Test that nothing is found when the deletion has the wrong matroid."""
        found = find_extension(
            u24, '4', u34_oriented.minor(delete=['4']), u34_oriented.minor(contract=['4'])
        )
        assert found is None
