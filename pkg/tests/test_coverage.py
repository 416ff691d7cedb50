"""Tests for `pyndisc.coverage`."""

from fractions import Fraction

import numpy as np
import pytest

from pyndisc import DomainError
from pyndisc.bounds import boundUnidirectional
from pyndisc.coverage import (
    NotDeterministic, Predicate, acceptInterval, acceptMask,
    aperiodicCoverageCheck, asPredicate, checkDeterministic, checkDisjoint,
    coverageFrame, coverageMap, minBeacons, tickRanges, worstCaseLatency)
from pyndisc.schedule import (
    AlternatingWindows, BeaconSchedule, DriftingWindows, ProtocolSpec,
    ReceptionSchedule)

tiling = BeaconSchedule(durations=[0], gaps=[2])
window = ReceptionSchedule(period=10, windows=[(0, 2)])


def test_tiling_is_deterministic_and_disjoint():
    covMap = coverageMap(tiling, window)
    assert covMap.count == 5
    assert covMap.totalCovered == 10
    assert checkDeterministic(covMap)[0]
    assert checkDisjoint(covMap)
    assert [tickRanges(s) for s in covMap.perBeaconSets()] == [
        [(0, 2)], [(8, 10)], [(6, 8)], [(4, 6)], [(2, 4)]]


def test_too_few_beacons_leave_a_gap():
    ok, uncovered = checkDeterministic(coverageMap(tiling, window, count=3))
    assert not ok
    assert tickRanges(uncovered) == [(2, 6)]


def test_finite_schedule_uses_every_beacon():
    beacons = BeaconSchedule([0, 0, 0], [2, 2, 2], periodic=False)
    covMap = coverageMap(beacons, window)
    assert covMap.count == 3
    assert tickRanges(covMap.uncovered()) == [(2, 6)]
    with pytest.raises(DomainError):
        coverageMap(beacons, window, count=4)


def test_extra_beacon_breaks_disjointness():
    covMap = coverageMap(tiling, window, count=6)
    assert checkDeterministic(covMap)[0]
    assert not checkDisjoint(covMap)
    assert covMap.cells.tolist() == [2, 2] + [1] * 8


@pytest.mark.parametrize('gamma, expected', [
    ('3/10', 4), ('1/5', 5), (1, 1), (Fraction(1, 3), 3), (0.25, 4)])
def test_min_beacons(gamma, expected):
    assert minBeacons(gamma) == expected


@pytest.mark.parametrize('gamma', [0, '-1/2', '3/2'])
def test_min_beacons_domain(gamma):
    with pytest.raises(DomainError):
        minBeacons(gamma)


@pytest.mark.parametrize('predicate, half, expected', [
    (Predicate.POINT, False, (10, 15)),
    (Predicate.CONTAINMENT, False, (10, 13)),
    (Predicate.OVERLAP, False, (8, 15)),
    (Predicate.CONTAINMENT, True, (10, 12)),
    (Predicate.OVERLAP, True, (7, 15)),
])
def test_accept_interval(predicate, half, expected):
    assert acceptInterval(10, 5, 3, predicate, half) == expected


def test_zero_width_beacons_use_point_mode():
    for predicate in Predicate:
        assert acceptInterval(10, 5, 0, predicate) == (10, 15)


def test_accept_mask_wraps_around_the_period():
    mask = acceptMask(window, 2, Predicate.OVERLAP)
    assert np.flatnonzero(mask).tolist() == [0, 1, 9]
    mask = acceptMask(window, 2, Predicate.CONTAINMENT)
    assert np.flatnonzero(mask).tolist() == [0]


def test_predicate_parsing():
    assert asPredicate() is Predicate.POINT
    assert asPredicate('overlap') is Predicate.OVERLAP
    with pytest.raises(DomainError):
        asPredicate('bogus')


def test_worst_case_latency_of_unit_beacons():
    sender = BeaconSchedule([1], [20])
    listener = ReceptionSchedule(period=100, windows=[(0, 20)])
    worst = worstCaseLatency(sender, listener)
    assert worst == 101
    bound = boundUnidirectional(1, '1/20', '1/5').latency
    assert bound == 100
    assert worst <= bound + 1


@pytest.mark.parametrize('gap, period', [(5, 25), (4, 20), (20, 100)])
def test_window_as_long_as_the_gap(gap, period):
    sender = BeaconSchedule([1], [gap])
    listener = ReceptionSchedule(period=period, windows=[(0, gap)])
    assert worstCaseLatency(sender, listener) == period + 1


@pytest.mark.parametrize('omega', [1, 2])
@pytest.mark.parametrize('k', range(2, 11))
def test_equal_gap_single_window_meets_the_bound(k, omega):
    gamma = Fraction(1, k)
    sender = BeaconSchedule([omega], [5])
    listener = ReceptionSchedule(period=5 * k, windows=[(0, 5)])
    count = minBeacons(gamma)
    assert count == k
    covMap = coverageMap(sender, listener, count=count)
    assert checkDeterministic(covMap)[0]
    assert checkDisjoint(covMap)
    bound = boundUnidirectional(omega, Fraction(omega, 5), gamma).latency
    assert bound == 5 * k
    assert abs(worstCaseLatency(sender, listener) - bound) <= omega + 1


def test_always_listening_peer_waits_one_gap():
    sender = BeaconSchedule([3], [17])
    listener = ReceptionSchedule(period=10, windows=[(0, 10)])
    assert worstCaseLatency(sender, listener) == 20


def test_latency_sweep_accepts_protocol_specs():
    spec = ProtocolSpec(BeaconSchedule([1], [20]),
                        ReceptionSchedule(period=100, windows=[(0, 20)]))
    assert worstCaseLatency(spec, spec, predicate='containment') == 101


def test_uncovered_phase_is_reported():
    sender = BeaconSchedule([0, 0, 0], [2, 2, 6])
    result = worstCaseLatency(sender, window)
    assert isinstance(result, NotDeterministic)
    assert not result
    assert result.senderPhase == 2
    assert result.latency == float('inf')


def test_latency_sweep_domain():
    with pytest.raises(DomainError):
        worstCaseLatency(BeaconSchedule([0], [2], periodic=False), window)
    with pytest.raises(DomainError):
        worstCaseLatency(tiling, window, resolution=0)
    drift = ReceptionSchedule(generator=DriftingWindows('1/4'), gamma='1/4')
    with pytest.raises(DomainError):
        worstCaseLatency(tiling, drift)


def test_drifting_listener():
    beacons = BeaconSchedule([1], [1])
    listener = ReceptionSchedule(generator=DriftingWindows('1/4'),
                                 gamma='1/4')
    ok, report = aperiodicCoverageCheck(beacons, listener, 1000, count=4)
    assert ok
    assert report.uncovered.size == 0
    assert report.windows == 254
    assert abs(float(report.gammaHat) - 0.25) < 0.01
    ok, report = aperiodicCoverageCheck(beacons, listener, 1000, count=3)
    assert not ok
    assert report.uncovered.size > 0


def test_alternating_listener_needs_more_than_four_point_beacons():
    beacons = BeaconSchedule([0], [1])
    listener = ReceptionSchedule(generator=AlternatingWindows('1/4'),
                                 gamma='1/4')
    ok, report = aperiodicCoverageCheck(beacons, listener, 2000)
    assert report.count == 4
    assert not ok
    assert 1 in report.uncovered


def test_periodic_listener_seen_as_generator():
    ok, report = aperiodicCoverageCheck(tiling, window, 1000)
    assert ok
    assert report.gammaHat == Fraction(1, 5)
    assert report.windows == 100
    assert checkDeterministic(coverageMap(tiling, window))[0] == ok


def test_aperiodic_check_needs_enough_windows():
    listener = ReceptionSchedule(generator=DriftingWindows('1/4'),
                                 gamma='1/4')
    with pytest.raises(DomainError):
        aperiodicCoverageCheck(BeaconSchedule([1], [1]), listener, 100)
    with pytest.raises(DomainError):
        coverageMap(BeaconSchedule([1], [1]), listener, count=4)
    with pytest.raises(DomainError):
        coverageMap(BeaconSchedule([1], [1]), listener, count=4, horizon=3)


def test_tick_ranges():
    assert tickRanges([2, 3, 4, 5, 9]) == [(2, 6), (9, 10)]
    assert tickRanges([]) == []
    assert tickRanges(np.array([7])) == [(7, 8)]


def test_coverage_frame():
    frame = coverageFrame(coverageMap(tiling, window, count=3))
    assert list(frame.columns) == ['tick', 'multiplicity']
    assert frame['multiplicity'].tolist() == [1, 1, 0, 0, 0, 0, 1, 1, 1, 1]
