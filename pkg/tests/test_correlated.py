"""Tests for `pyndisc.correlated`."""

import numpy as np
import pytest

from pyndisc import ConstructionError, DomainError
from pyndisc.correlated import (
    CorrelatedQuadruple, buildCorrelatedQuadruple, coverageUnion,
    feasibleZetas, mirrorOffset, oneWayLatencyCorrelated,
    simulateMutualAssistance, verifyMutualExclusive)
from pyndisc.schedule import (
    BeaconSchedule, DriftingWindows, ReceptionSchedule)

template = ReceptionSchedule(period=8, windows=[(0, 2)])


@pytest.fixture
def quad():
    return buildCorrelatedQuadruple(template, zeta=4)


def penalties(quad):
    out = []
    for phi in range(quad.period):
        oneWay, twoWay = simulateMutualAssistance(quad, phi)
        assert twoWay >= oneWay
        out.append(twoWay - oneWay)
    return out


def test_mirror_offset():
    assert mirrorOffset(10, 4, 100) == 16
    assert mirrorOffset(10, 30, 25) == 15
    assert mirrorOffset(10, 10, 100) == 10
    rng = np.random.default_rng(2026)
    for _ in range(10000):
        period = int(rng.integers(1, 10000))
        zeta = int(rng.integers(-period, 2 * period))
        phi = int(rng.integers(period))
        mirror = mirrorOffset(zeta, phi, period)
        assert 0 <= mirror < period
        assert mirrorOffset(zeta, mirror, period) == phi
    with pytest.raises(DomainError):
        mirrorOffset(1, 1, 0)


def test_construction(quad):
    assert quad.beacons.gaps == (4,)
    assert quad.beaconsPerDevice == 2
    assert quad.positions()[0].tolist() == [0, 4]


def test_constructed_plan_is_mutually_exclusive(quad):
    report = verifyMutualExclusive(quad)
    assert report.ok
    assert report.disjoint
    assert report.omegaF.tolist() == [0, 1, 4, 5]
    assert report.omegaE.tolist() == [2, 3, 6, 7]
    assert report.beaconsPerDevice == 2


def test_construction_failure_reports_residual():
    with pytest.raises(ConstructionError) as info:
        buildCorrelatedQuadruple(template, zeta=1)
    assert info.value.residual == [4, 5]


def test_feasible_zetas():
    assert feasibleZetas(template) == [0, 2, 4, 6]


def test_single_beacon_plan_leaves_a_gap():
    quad = CorrelatedQuadruple(template, 4, BeaconSchedule([1], [8]))
    report = verifyMutualExclusive(quad)
    assert not report.ok
    assert report.beaconsPerDevice == 1
    assert report.uncovered.tolist() == [2, 3, 4, 5]
    with pytest.raises(DomainError):
        oneWayLatencyCorrelated(quad)
    with pytest.raises(DomainError):
        simulateMutualAssistance(quad, 2)


def test_direct_plan_covers_twice():
    quad = CorrelatedQuadruple(template, 4, BeaconSchedule([1], [2]))
    report = verifyMutualExclusive(quad)
    assert report.ok
    assert not report.disjoint
    assert report.beaconsPerDevice == 4
    assert oneWayLatencyCorrelated(quad) <= 9


def test_one_way_latency(quad):
    assert oneWayLatencyCorrelated(quad) == 9


def test_quadruple_validation():
    with pytest.raises(DomainError):
        CorrelatedQuadruple(template, 8, BeaconSchedule([1], [4]))
    with pytest.raises(DomainError):
        CorrelatedQuadruple(template, 4, BeaconSchedule([1], [3]))
    with pytest.raises(DomainError):
        CorrelatedQuadruple(template, 4,
                            BeaconSchedule([1], [4], periodic=False))
    drift = ReceptionSchedule(generator=DriftingWindows('1/4'), gamma='1/4')
    with pytest.raises(DomainError):
        CorrelatedQuadruple(drift, 0, BeaconSchedule([1], [4]))


def test_construction_domain():
    with pytest.raises(DomainError):
        buildCorrelatedQuadruple(
            ReceptionSchedule(period=8, windows=[(0, 3)]), zeta=0)
    with pytest.raises(DomainError):
        buildCorrelatedQuadruple(template, zeta=-1)


def test_mutual_assistance(quad):
    oneWay, twoWay = simulateMutualAssistance(quad, 0)
    assert oneWay == 1.5
    assert twoWay == 4.5
    oneWay, twoWay = simulateMutualAssistance(quad, 4)
    assert twoWay == oneWay
    assert penalties(quad) == [3, 3, 0, 0, 0, 0, 3, 3]
    with pytest.raises(DomainError):
        simulateMutualAssistance(quad, 8)


@pytest.mark.parametrize('predicate', ['point', 'overlap', 'containment'])
@pytest.mark.parametrize('omega', [1, 2, 3])
@pytest.mark.parametrize('period, windows', [
    (4, [(0, 1)]),
    (8, [(0, 2)]),
    (10, [(0, 1)]),
    (12, [(0, 3), (6, 3)]),
])
def test_assistance_penalty_stays_within_a_period(period, windows, omega,
                                                  predicate):
    reception = ReceptionSchedule(period=period, windows=windows)
    for zeta in feasibleZetas(reception, predicate, omega):
        quad = buildCorrelatedQuadruple(reception, zeta, predicate, omega)
        assert max(penalties(quad)) <= period


def test_mutual_assistance_with_two_windows():
    reception = ReceptionSchedule(period=8, windows=[(0, 1), (4, 1)])
    quad = buildCorrelatedQuadruple(reception, zeta=4)
    assert quad.beacons.gaps == (2, 6)
    assert verifyMutualExclusive(quad).ok
    assert penalties(quad) == [3, 1, 1, 3, 3, 1, 1, 3]


def test_second_window_shortens_the_assistance_penalty():
    single = buildCorrelatedQuadruple(
        ReceptionSchedule(period=16, windows=[(0, 4)]), zeta=8)
    double = buildCorrelatedQuadruple(
        ReceptionSchedule(period=16, windows=[(0, 2), (8, 2)]), zeta=8)
    assert single.beacons.gaps == (8,)
    assert double.beacons.gaps == (4, 12)
    assert max(penalties(single)) == 7
    assert max(penalties(double)) == 3


def test_coverage_union(quad):
    frame = coverageUnion(quad)
    assert list(frame.columns) == ['tick', 'covered_by']
    assert frame['covered_by'].tolist() == ['F', 'F', 'E', 'E',
                                            'F', 'F', 'E', 'E']
    direct = CorrelatedQuadruple(template, 4, BeaconSchedule([1], [2]))
    assert set(coverageUnion(direct)['covered_by']) == {'both'}
    single = CorrelatedQuadruple(template, 4, BeaconSchedule([1], [8]))
    labels = coverageUnion(single)['covered_by'].to_numpy()
    assert np.flatnonzero(labels == 'none').tolist() == [2, 3, 4, 5]
