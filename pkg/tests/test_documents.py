"""Tests for the document models."""

import json

import pytest
from phasefan.documents import (
    DocumentError,
    MatroidDescriptor,
    OrientedDocument,
    PhaseDocument,
    SpaceDocument,
    canonical_json,
)
from phasefan.oriented import InvalidOrientedMatroidError
from pydantic import ValidationError


@pytest.fixture
def u34_document(catalog):
    return catalog.document('u34_phase').model_dump(mode='json')


class TestMatroidDescriptor:
    """Tests for MatroidDescriptor."""

    def test_from_matroid(self, k4):
        """Test that describing a matroid by its bases gives the matroid back."""
        descriptor = MatroidDescriptor.from_matroid(k4)
        assert descriptor.by == 'bases'
        assert len(descriptor.data) == 16
        assert descriptor.to_matroid() == k4

    def test_integer_labels(self):
        """Test that integer labels are read as strings."""
        descriptor = MatroidDescriptor(elements=[1, 2], by='circuits', data=[[1, 2]])
        assert descriptor.elements == ['1', '2']
        assert descriptor.to_matroid().rank() == 1

    def test_repeated_labels(self):
        """Test that repeated labels are rejected."""
        with pytest.raises(ValidationError, match='Repeated'):
            MatroidDescriptor(elements=['a', 'a'], by='bases', data=[['a']])

    def test_unknown_kind(self):
        """Test that only the known sources are accepted."""
        with pytest.raises(ValidationError, match='unknown matroid source'):
            MatroidDescriptor(elements=['a'], by='polytope', data=[])

    def test_bad_data(self):
        """Test that data the source cannot read are reported at /data."""
        descriptor = MatroidDescriptor(elements=['a', 'b'], by='matrix', data=[[1, 0], [1]])
        with pytest.raises(DocumentError) as info:
            descriptor.to_matroid()
        assert info.value.pointer == '/data'
        assert 'Ragged' in str(info.value)


class TestSpaceDocument:
    """Tests for SpaceDocument."""

    def test_canonical(self):
        """Test that generators are reduced and the basepoint moved into the complement."""
        space = SpaceDocument(basepoint='110', basis=['100', '110']).to_space(3)
        assert space.dim == 2
        assert SpaceDocument.from_space(space) == SpaceDocument.from_space(
            SpaceDocument(basepoint='000', basis=['010', '100']).to_space(3)
        )

    def test_not_binary(self):
        """Test that vectors must be 0/1 strings."""
        with pytest.raises(ValidationError):
            SpaceDocument(basepoint='012')
        with pytest.raises(ValidationError, match='0/1'):
            SpaceDocument(basepoint='01', basis=['2'])

    @pytest.mark.parametrize(
        'basepoint, basis, pointer',
        [('01', [], '/basepoint'), ('010', ['11'], '/basis/0'), ('010', ['110', '1'], '/basis/1')],
    )
    def test_length(self, basepoint, basis, pointer):
        """Test that wrong lengths are reported with a pointer to the vector."""
        with pytest.raises(DocumentError) as info:
            SpaceDocument(basepoint=basepoint, basis=basis).to_space(3)
        assert info.value.pointer == pointer


class TestPhaseDocument:
    """Tests for PhaseDocument."""

    @pytest.mark.parametrize('name', ['u34_phase', 'u24_phase', 'k4_phase'])
    def test_round_trip(self, catalog, name):
        """Test that a structure survives being written and read."""
        structure = catalog.phase(name)
        document = PhaseDocument.model_validate_json(canonical_json(PhaseDocument.from_structure(structure)))
        assert document.mode == structure.mode
        assert document.to_structure() == structure

    def test_facet_order(self, catalog):
        """Test that the facets are listed in the fan's order."""
        structure = catalog.phase('u34_phase')
        document = PhaseDocument.from_structure(structure)
        assert [facet.chain for facet in document.facets] == [
            structure.fan.describe(facet) for facet in structure.fan.facets()
        ]
        assert len(document.facets) == 12

    def test_default_mode(self, u34_document):
        """Test that the mode defaults to affine."""
        del u34_document['mode']
        assert PhaseDocument.model_validate(u34_document).mode == 'affine'

    def test_bad_mode(self, u34_document):
        """Test that only the two modes are accepted."""
        u34_document['mode'] = 'tropical'
        with pytest.raises(ValidationError):
            PhaseDocument.model_validate(u34_document)

    def test_not_a_flat(self, u34_document):
        """Test that a chain through a non-flat is reported at its chain."""
        u34_document['facets'][3]['chain'] = [['1'], ['1', '2', '3']]
        with pytest.raises(DocumentError) as info:
            PhaseDocument.model_validate(u34_document).to_structure()
        assert info.value.pointer == '/facets/3/chain'

    def test_not_maximal(self, u34_document):
        """Test that a chain must be a facet."""
        u34_document['facets'][0]['chain'] = [['1']]
        with pytest.raises(DocumentError, match='maximal') as info:
            PhaseDocument.model_validate(u34_document).to_structure()
        assert info.value.pointer == '/facets/0/chain'

    def test_repeated_facet(self, u34_document):
        """Test that a facet can only be given once."""
        u34_document['facets'][1]['chain'] = u34_document['facets'][0]['chain']
        with pytest.raises(DocumentError, match='twice') as info:
            PhaseDocument.model_validate(u34_document).to_structure()
        assert info.value.pointer == '/facets/1/chain'

    def test_missing_facet(self, u34_document):
        """Test that every facet needs a space."""
        u34_document['facets'].pop()
        with pytest.raises(DocumentError) as info:
            PhaseDocument.model_validate(u34_document).to_structure()
        assert info.value.pointer == '/facets'

    def test_wrong_length(self, u34_document):
        """Test that a short vector is reported inside its facet."""
        u34_document['facets'][2]['space']['basepoint'] = '01'
        with pytest.raises(DocumentError) as info:
            PhaseDocument.model_validate(u34_document).to_structure()
        assert info.value.pointer == '/facets/2/space/basepoint'
        assert str(info.value).startswith('/facets/2/space/basepoint: expected 4 coordinates')

    def test_unverified(self, u34_document):
        """Test that reading a document does not check the structure."""
        u34_document['facets'][0]['space'] = {'basepoint': '0000', 'basis': []}
        structure = PhaseDocument.model_validate(u34_document).to_structure()
        assert not structure.verify().ok


class TestOrientedDocument:
    """Tests for OrientedDocument."""

    @pytest.mark.parametrize('by', ['topes', 'signed_circuits', 'covectors'])
    def test_round_trip(self, k4_oriented, by):
        """Test that each description gives the oriented matroid back."""
        document = OrientedDocument.from_oriented(k4_oriented, by=by)
        assert document.by == by
        assert document.to_oriented() == k4_oriented

    def test_topes_sorted(self, u34_oriented):
        """Test that the topes are listed sorted."""
        document = OrientedDocument.from_oriented(u34_oriented)
        assert document.data == sorted(document.data)
        assert len(document.data) == 14

    def test_matrix(self, catalog, u34_oriented):
        """Test that a matrix document gives its oriented matroid."""
        assert catalog.entry('u34').oriented.to_oriented() == u34_oriented

    def test_bad_sign(self):
        """Test that an unknown sign is reported at its entry."""
        document = OrientedDocument(elements=['1', '2'], by='topes', data=['++', '+x'])
        with pytest.raises(DocumentError) as info:
            document.to_oriented()
        assert info.value.pointer == '/data/1'

    def test_bad_length(self):
        """Test that sign strings must have one entry per element."""
        document = OrientedDocument(elements=['1', '2'], by='signed_circuits', data=['+++'])
        with pytest.raises(DocumentError, match='2 entries') as info:
            document.to_oriented()
        assert info.value.pointer == '/data/0'

    def test_bad_matrix(self):
        """Test that an unreadable matrix is reported at /data."""
        document = OrientedDocument(elements=['1', '2'], by='matrix', data=[[1, 0.5]])
        with pytest.raises(DocumentError) as info:
            document.to_oriented()
        assert info.value.pointer == '/data'

    def test_not_oriented(self):
        """Test that covectors violating the axioms are refused."""
        document = OrientedDocument(elements=['1', '2'], by='covectors', data=['00', '+0', '0+'])
        with pytest.raises(InvalidOrientedMatroidError):
            document.to_oriented()

    def test_unknown_kind(self):
        """Test that the kind of data is checked."""
        with pytest.raises(ValidationError):
            OrientedDocument(elements=['1'], by='chirotope', data=['+'])


class TestCanonicalJson:
    """Tests for canonical_json."""

    def test_layout(self, catalog):
        """Test that the output is indented JSON ending with a newline."""
        text = canonical_json(catalog.document('u12'))
        assert text.endswith('}\n')
        assert text.startswith('{\n  "elements"')
        assert json.loads(text) == {'elements': ['1', '2'], 'by': 'circuits', 'data': [['1', '2']]}

    def test_stable(self, catalog):
        """Test that the same structure always gives the same text."""
        first = canonical_json(PhaseDocument.from_structure(catalog.phase('n_phase')))
        second = canonical_json(PhaseDocument.from_structure(catalog.phase('n_phase')))
        assert first == second
