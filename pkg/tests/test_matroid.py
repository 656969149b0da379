"""Tests for matroids, their lattices of flats and minors."""

import itertools

import networkx as nx
import pytest
import sympy
from phasefan.matroid import ChainOfFlats, Matroid, MatroidAxiomError, direct_sum, subset_mask
from phasefan.sources import build_matroid
from phasefan.utils import LabelError

t = sympy.Symbol('t')


def uniform(rank: int, size: int) -> Matroid:
    labels = [str(k + 1) for k in range(size)]
    return Matroid(labels, [min(mask.bit_count(), rank) for mask in range(1 << size)])


class TestMatroid:
    """Tests for the Matroid class."""

    def test_repr(self):
        """Test that the string representation shows rank and ground set."""
        assert repr(uniform(2, 3)) == "Matroid(rank=2, ground=['1', '2', '3'])"

    def test_rank(self, u34):
        """Test ranks of subsets given as labels or masks."""
        assert u34.rank() == 3
        assert u34.rank(['1', '2']) == 2
        assert u34.rank('4') == 1
        assert u34.rank(0b1111) == 3

    def test_independent(self, u34, k4):
        """Test independence of label sets."""
        assert u34.is_independent(['1', '2', '4'])
        assert not u34.is_independent(['1', '2', '3', '4'])
        assert not k4.is_independent(['e12', 'e13', 'e23'])
        assert k4.is_independent(['e12', 'e13', 'e14'])

    def test_unknown_label(self, u34):
        """Test that unknown labels are rejected."""
        with pytest.raises(LabelError):
            u34.rank(['1', '9'])

    def test_repeated_labels(self):
        """Test that a ground set cannot repeat a label."""
        with pytest.raises(LabelError):
            Matroid(['a', 'a'], [0, 1, 1, 1])

    def test_table_length(self):
        """Test that the rank table must cover every subset."""
        with pytest.raises(ValueError):
            Matroid(['a', 'b'], [0, 1, 1])

    @pytest.mark.parametrize(
        'ranks, axiom',
        [
            ([1, 1, 1, 1], 'rank of the empty set is 0'),
            ([0, 2, 1, 2], 'unit increase'),
            ([0, 0, 0, 1], 'submodularity'),
        ],
    )
    def test_axioms(self, ranks, axiom):
        """Test that each rank axiom violation is reported by name."""
        size = (len(ranks) - 1).bit_length()
        with pytest.raises(MatroidAxiomError) as error:
            Matroid([str(k) for k in range(size)], ranks)
        assert error.value.axiom == axiom

    def test_closure_and_flats(self, u34):
        """Test closures in the uniform matroid of rank three on four elements."""
        assert u34.closure(['1', '2']) == 0b0011
        assert u34.closure(['1', '2', '3']) == u34.full
        assert u34.is_flat(['1', '3'])
        assert not u34.is_flat(['1', '2', '3'])

    @pytest.mark.parametrize('name, count', [('u24', 6), ('u34', 12), ('k4', 15), ('fano', 16)])
    def test_flat_counts(self, catalog, name, count):
        """Test the number of flats of the fixtures."""
        assert len(catalog.matroid(name).flats()) == count

    def test_loops_and_coloops(self):
        """Test loop and coloop detection."""
        matroid = Matroid(['a', 'b', 'c'], [0, 1, 0, 1, 1, 2, 1, 2])
        assert matroid.loops == 0b010
        assert matroid.coloops == 0b101
        assert matroid.is_loop('b')
        assert matroid.is_coloop('a')

    def test_parallel_classes(self, catalog):
        """Test that the parallel classes of N pair the elements."""
        assert catalog.matroid('n').parallel_classes() == [0b0011, 0b1100]

    def test_bases(self, u24):
        """Test that every pair is a basis of U(2, 4)."""
        assert len(u24.bases()) == 6

    def test_circuits_k4(self, k4):
        """Test that the circuits of K4 are the edge sets of its cycles."""
        graph = nx.complete_graph([1, 2, 3, 4])
        cycles = {
            frozenset(f'e{min(u, v)}{max(u, v)}' for u, v in zip(cycle, cycle[1:] + cycle[:1]))
            for cycle in nx.simple_cycles(graph.to_directed())
            if len(cycle) > 2
        }
        assert {frozenset(k4.labels(circuit)) for circuit in k4.circuits()} == cycles
        assert len(cycles) == 7

    def test_circuits_sorted(self, u35):
        """Test that circuits come sorted by size."""
        circuits = u35.circuits()
        assert len(circuits) == 5
        assert all(circuit.bit_count() == 4 for circuit in circuits)
        assert circuits == sorted(circuits, key=lambda c: (c.bit_count(), [k for k in range(5) if c >> k & 1]))

    def test_equality(self, catalog):
        """Test that two descriptions of the same matroid are equal."""
        pairs = [list(pair) for pair in itertools.combinations('1234', 2)]
        by_bases = build_matroid({'elements': ['1', '2', '3', '4'], 'by': 'bases', 'data': pairs})
        assert by_bases == catalog.matroid('u24')
        assert hash(by_bases) == hash(catalog.matroid('u24'))


class TestLattice:
    """Tests for the lattice of flats."""

    def test_by_rank(self, u34):
        """Test the number of flats in each rank."""
        lattice = u34.lattice()
        assert [len(group) for group in lattice.by_rank] == [1, 4, 6, 1]
        assert lattice.bottom == 0
        assert lattice.top == u34.full

    def test_covers(self, u34):
        """Test that a point is covered by three lines."""
        assert set(u34.lattice().covers(0b0001)) == {0b0011, 0b0101, 0b1001}
        assert u34.lattice().covers(u34.full) == ()

    def test_interval(self, k4):
        """Test the flats strictly between an edge and the whole graph."""
        lattice = k4.lattice()
        flats = {k4.labels(flat) for flat in lattice.interval(k4.mask('e12'), k4.full)}
        assert flats == {('e12', 'e13', 'e23'), ('e12', 'e14', 'e24'), ('e12', 'e34')}

    def test_partitions_interval(self, u34):
        """Test that the lines through a point partition the rest of the ground set."""
        lattice = u34.lattice()
        assert lattice.partitions_interval(0b0001, u34.full)
        assert lattice.partitions_interval(0, 0b0011)

    def test_mobius(self, u24):
        """Test the Moebius values of U(2, 4)."""
        values = u24.lattice().mobius()
        assert values[0] == 1
        assert all(values[1 << k] == -1 for k in range(4))
        assert values[u24.full] == 3


class TestCharacteristicPolynomial:
    """Tests for characteristic polynomials and tope counts."""

    @pytest.mark.parametrize(
        'name, expected',
        [
            ('u24', t**2 - 4 * t + 3),
            ('u34', t**3 - 4 * t**2 + 6 * t - 3),
            ('k4', (t - 1) * (t - 2) * (t - 3)),
            ('fano', (t - 1) * (t - 2) * (t - 4)),
        ],
    )
    def test_polynomial(self, catalog, name, expected):
        """Test the polynomials of the fixtures."""
        assert catalog.matroid(name).characteristic_polynomial() == sympy.Poly(expected, t, domain='ZZ')

    def test_value_at_minus_one(self, u34):
        """Test the value at -1 of U(3, 4)."""
        assert u34.characteristic_polynomial().eval(-1) == -14

    @pytest.mark.parametrize('name, count', [('u24', 8), ('u34', 14), ('k4', 24), ('u35', 22)])
    def test_tope_count(self, catalog, name, count):
        """Test the number of regions of the fixtures."""
        assert catalog.matroid(name).tope_count() == count

    def test_loops_give_zero(self, caplog):
        """Test that a matroid with a loop has the zero polynomial and logs it."""
        matroid = Matroid(['a', 'b'], [0, 0, 1, 1])
        assert matroid.characteristic_polynomial().is_zero
        assert 'loops' in caplog.text


class TestMinors:
    """Tests for deletion, contraction and direct sums."""

    def test_delete(self, u34):
        """Test that deleting an element of U(3, 4) leaves the boolean matroid."""
        minor = u34.delete('4')
        assert minor.ground == ('1', '2', '3')
        assert minor == uniform(3, 3)

    def test_contract(self, u34):
        """Test that contracting an element of U(3, 4) leaves U(2, 3)."""
        assert u34.contract('4') == uniform(2, 3)

    def test_overlap(self, u34):
        """Test that an element cannot be both deleted and contracted."""
        with pytest.raises(ValueError):
            u34.minor(delete=['1'], contract=['1', '2'])

    def test_minors_commute(self, k4):
        """Test that deletions and contractions of different elements commute."""
        for a, b in itertools.permutations(k4.ground, 2):
            assert k4.delete(a).contract(b) == k4.contract(b).delete(a) == k4.minor(delete=a, contract=b)

    def test_contract_loop_parallel(self, catalog):
        """Test that contracting an element of N turns its parallel partner into a loop."""
        minor = catalog.matroid('n').contract('1')
        assert minor.labels(minor.loops) == ('2',)

    def test_direct_sum(self):
        """Test that ranks add over a direct sum."""
        total = direct_sum([uniform(1, 2), uniform(2, 3).relabel(['a', 'b', 'c'])])
        assert total.ground == ('1', '2', 'a', 'b', 'c')
        assert total.rank() == 3
        assert total.rank(['1', '2', 'a']) == 2

    def test_direct_sum_shared_labels(self):
        """Test that summands must have disjoint labels."""
        with pytest.raises(LabelError):
            direct_sum([uniform(1, 2), uniform(1, 2)])

    def test_reorder(self, u34):
        """Test that reordering keeps ranks of labelled subsets."""
        reordered = u34.reorder(['4', '3', '2', '1'])
        assert reordered.ground == ('4', '3', '2', '1')
        assert all(reordered.rank(subset) == u34.rank(subset) for subset in itertools.combinations('1234', 2))

    def test_chain_minor_sum_maximal(self, u34):
        """Test that a maximal chain of U(3, 4) gives three rank-one summands."""
        chain = ChainOfFlats((u34.mask('1'), u34.mask(['1', '2'])))
        total = u34.chain_minor_sum(chain)
        assert total.rank() == 3
        assert total.tope_count() == 2**3

    def test_chain_minor_sum_point(self, u34):
        """Test the sum of a point and its contraction in U(3, 4)."""
        total = u34.chain_minor_sum(ChainOfFlats((u34.mask('1'),)))
        assert total.ground == u34.ground
        assert [total.labels(c) for c in total.circuits()] == [('2', '3', '4')]
        assert total.tope_count() == 12

    def test_chain_minor_sum_not_flat(self, u34):
        """Test that the chain must consist of flats."""
        with pytest.raises(ValueError):
            u34.chain_minor_sum(ChainOfFlats((u34.mask(['1', '2', '3']),)))

    def test_quotient(self, u24, u34):
        """Test that U(2, 4) is a quotient of U(3, 4) and not the other way round."""
        assert u24.is_quotient(u34)
        assert not u34.is_quotient(u24)

    def test_quotient_ground(self, u24, k4):
        """Test that quotients need a common ground set."""
        with pytest.raises(LabelError):
            u24.is_quotient(k4)


class TestChainOfFlats:
    """Tests for ChainOfFlats."""

    def test_strict(self):
        """Test that a chain must be strictly increasing."""
        with pytest.raises(ValueError):
            ChainOfFlats((0b011, 0b101))

    def test_order(self):
        """Test that chains sort by the positions of their flats."""
        assert ChainOfFlats((0b001,)) < ChainOfFlats((0b010,)) < ChainOfFlats((0b100,))
        assert ChainOfFlats((0b001,)) < ChainOfFlats((0b001, 0b011))

    def test_with_without(self):
        """Test adding and removing a flat."""
        chain = ChainOfFlats((0b0001, 0b0111))
        assert chain.with_flat(0b0011).flats == (0b0001, 0b0011, 0b0111)
        assert chain.without(0b0001).flats == (0b0111,)
        assert chain.with_flat(0b0011).contains(chain)

    def test_subset_mask(self):
        """Test the mask of a list of positions."""
        assert subset_mask([0, 2, 2]) == 0b101
