"""Tests for load vector assembly and the benchmark source layouts."""

import numpy as np
import pytest

from src.domain.entities import DiracForcing, PointSource, RadialForcing
from src.domain.exceptions import ForcingBalanceException, ForcingDomainException
from src.domain.services import (
    assemble_rhs,
    balance,
    make_tc1_boxes,
    make_tc2_sources,
    make_tc3_sources,
)


class TestBalance:
    """Tests for mass balancing of raw loads."""

    def test_rescales_negative_entries(self):
        """Test that sinks are scaled to match the sources."""
        rhs = balance(np.array([2.0, -1.0, -3.0, 0.0]))
        assert rhs.balance_factor == pytest.approx(0.5)
        assert rhs.values.tolist() == pytest.approx([2.0, -0.5, -1.5, 0.0])
        assert rhs.positive_total == pytest.approx(rhs.negative_total)

    def test_requires_sources_and_sinks(self):
        """Test that one-signed loads cannot be balanced."""
        with pytest.raises(ForcingBalanceException):
            balance(np.array([1.0, 2.0, 0.0]))


class TestDistributedForcing:
    """Tests for box and radial densities."""

    def test_tc1_is_balanced(self, tc1_rhs):
        """Test zero total mass and the box mass on a grid aligned with the boxes."""
        assert abs(tc1_rhs.values.sum()) <= 1e-14
        assert tc1_rhs.positive_total == pytest.approx(0.125, rel=1e-12)
        assert tc1_rhs.balance_factor == pytest.approx(1.0, rel=1e-12)

    def test_tc1_source_and_sink_sides(self, tc1_rhs, square_pair):
        """Test that positive loads sit left of x = 1/2 and negative loads right of it."""
        x = square_pair.fine.nodes[:, 0]
        assert np.all(x[tc1_rhs.values > 0.0] < 0.5)
        assert np.all(x[tc1_rhs.values < 0.0] > 0.5)

    def test_radial_is_balanced(self, radial_rhs):
        """Test zero total mass and a balance factor close to one."""
        assert abs(radial_rhs.values.sum()) <= 1e-13
        assert 0.8 < radial_rhs.balance_factor < 1.25

    def test_radial_c2_default(self):
        """Test that c2 defaults to -c1/5."""
        assert RadialForcing(c1=2.0).resolved_c2 == pytest.approx(-0.4)


class TestPointForcing:
    """Tests for Dirac sources snapped to fine nodes."""

    def test_tc3_snaps_to_nearest_nodes(self, square_pair):
        """Test that the three TC3 masses land on the nearest fine grid nodes."""
        rhs = assemble_rhs(make_tc3_sources(), square_pair)
        nodes = square_pair.fine.nodes
        loaded = np.flatnonzero(rhs.values)
        assert len(loaded) == 3
        source = loaded[rhs.values[loaded] > 0.0]
        assert nodes[source[0]].tolist() == pytest.approx([0.5, 0.125])
        assert rhs.values[loaded].sum() == pytest.approx(0.0, abs=1e-15)

    def test_source_outside_mesh(self, square_pair):
        """Test that a point source outside the domain is rejected."""
        spec = DiracForcing(
            sources=[PointSource(x=2.0, y=2.0, weight=1.0), PointSource(x=0.5, y=0.5, weight=-1.0)]
        )
        with pytest.raises(ForcingDomainException):
            assemble_rhs(spec, square_pair)

    def test_tc2_layout_is_reproducible(self):
        """Test that the seed fixes the random sources."""
        first, second = make_tc2_sources(7), make_tc2_sources(7)
        assert first == second
        assert first != make_tc2_sources(8)
        assert first.seed == 7
        assert len(first.sources) == 51
        assert first.sources[-1].weight == -50.0
        inner = first.sources[:-1]
        assert all(0.1 <= s.x <= 0.9 and 0.1 <= s.y <= 0.9 for s in inner)

    def test_tc2_rhs_is_balanced(self, square_pair):
        """Test that the snapped TC2 loads sum to zero."""
        rhs = assemble_rhs(make_tc2_sources(3), square_pair)
        assert abs(rhs.values.sum()) <= 1e-12
        assert rhs.positive_total == pytest.approx(50.0)

    def test_tc1_box_layout(self):
        """Test the TC1 box coordinates."""
        source, sink = make_tc1_boxes().boxes
        assert (source.x_min, source.x_max) == (0.125, 0.375)
        assert (source.y_min, source.y_max) == (0.25, 0.75)
        assert sink.value == -1.0
