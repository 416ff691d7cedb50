"""
``coverage.py`` module.

Contains the coverage maps over initial offsets, the determinism and
disjointness checks, the minimum number of beacons and the exhaustive
worst-case latency sweep used as oracle for the closed-form bounds.
"""

# -- Required modules
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np
import pandas as pd

import pyndisc
from pyndisc import DomainError
from pyndisc.schedule import lcm, receptionDutyCycle, toRational

logger = logging.getLogger(__name__)


class Predicate(str, Enum):
    """When a beacon starting at tick ``t`` counts as received.

    ``point``: ``t`` lies inside a window. ``containment``: ``[t, t + omega)``
    lies inside a window. ``overlap``: ``[t, t + omega)`` intersects a window.
    Zero-width beacons are judged in point mode.
    """

    POINT = 'point'
    CONTAINMENT = 'containment'
    OVERLAP = 'overlap'


def asPredicate(predicate=None):
    """Return ``predicate`` as a ``Predicate``, the package default if None."""
    if predicate is None:
        predicate = pyndisc.defaultPredicate
    try:
        return Predicate(predicate)
    except ValueError as exc:
        raise DomainError(f'unknown reception predicate {predicate!r}') \
            from exc


def acceptInterval(offset, duration, omega, predicate, half=False):
    """
    Beacon starts accepted by one window, as a half-open interval.

    Parameters
    ----------
    offset, duration : int
        Window.
    omega : int
        Beacon duration.
    predicate : Predicate
    half : bool, optional
        If True the beacon starts half a tick after the returned integer
        ticks (offset cells evaluated at their midpoints). The default is
        False.

    Returns
    -------
    (int, int)
        ``[lo, hi)``; empty when ``hi <= lo``.
    """
    lo, hi = offset, offset + duration
    if omega > 0 and predicate is Predicate.CONTAINMENT:
        hi -= omega if half else omega - 1
    elif omega > 0 and predicate is Predicate.OVERLAP:
        lo -= omega if half else omega - 1
    return lo, hi


def acceptMask(reception, omega, predicate, half=False):
    """Boolean mask over ``[0, T_C)`` of beacon starts a periodic listener
    receives."""
    period = reception.period
    mask = np.zeros(period, dtype=bool)
    for offset, duration in reception.windows:
        lo, hi = acceptInterval(offset, duration, omega, predicate, half)
        if hi - lo >= period:
            mask[:] = True
        elif hi > lo:
            mask[np.arange(lo, hi) % period] = True
    return mask


def _acceptLine(reception, omega, predicate, length):
    """Boolean mask over ``[0, length)`` of beacon starts received by any
    window starting before ``length``."""
    line = np.zeros(length, dtype=bool)
    starts, durations = reception.windowsUntil(length)
    for start, duration in zip(starts, durations):
        lo, hi = acceptInterval(start, duration, omega, predicate)
        line[max(lo, 0):max(min(hi, length), 0)] = True
    return line


@dataclass(frozen=True, eq=False)
class CoverageMap:
    """``CoverageMap`` class.

    Attributes
    ----------
    domain : int
        Number of offsets (ticks) in the domain ``[0, domain)``.
    cells : numpy.ndarray
        Number of beacons covering each offset.
    totalCovered : int
        Number of offsets covered at least once.
    perBeacon : list of numpy.ndarray
        Boolean mask of the offsets covered by each beacon.
    periodic : bool
        True when the domain is the listener period.
    """

    domain: int
    cells: np.ndarray
    totalCovered: int
    perBeacon: list
    periodic: bool = True

    @property
    def count(self):
        return len(self.perBeacon)

    def perBeaconSets(self):
        """Covered offsets of each beacon as sorted integer arrays."""
        return [np.flatnonzero(mask) for mask in self.perBeacon]

    def uncovered(self):
        return np.flatnonzero(self.cells == 0)


def coverageMap(beacons, reception, count=None, predicate=None, horizon=None):
    """
    Build the coverage map of ``count`` beacons over a listener.

    Beacon ``k`` starts ``s_k = sum(gaps[:k])`` ticks after the first one, so
    it covers the covered set of the first beacon translated by ``-s_k``.

    Parameters
    ----------
    beacons : BeaconSchedule
    reception : ReceptionSchedule
    count : int, optional
        Number of beacons M. The default is every beacon of a finite schedule
        and ``ceil(1/gamma)`` for a periodic one.
    predicate : str or Predicate, optional
        Reception predicate. The default is ``pyndisc.defaultPredicate``.
    horizon : int, optional
        Length of the time axis examined for an aperiodic listener; contact
        ticks run over ``[0, horizon - slack)`` where the slack is the span of
        the beacon sequence.

    Returns
    -------
    CoverageMap

    Examples
    --------
    >>> from pyndisc.schedule import BeaconSchedule, ReceptionSchedule
    >>> b = BeaconSchedule(durations=[0], gaps=[2])
    >>> c = ReceptionSchedule(period=10, windows=[(0, 2)])
    >>> m = coverageMap(b, c, count=5)
    >>> m.totalCovered, m.cells.max()
    (10, 1)
    >>> [tickRanges(s) for s in m.perBeaconSets()[:2]]
    [[(0, 2)], [(8, 10)]]
    """
    predicate = asPredicate(predicate)
    if count is None:
        if beacons.periodic:
            count = minBeacons(receptionDutyCycle(reception))
        else:
            count = beacons.count
    if count < 0:
        raise DomainError('beacon count must be non-negative')
    shifts = beacons.startTimes(count)
    omegas = beacons.durationsOf(count)

    if reception.kind == 'periodic':
        domain = reception.period
        masks = {}
        perBeacon = []
        for shift, omega in zip(shifts, omegas):
            if omega not in masks:
                masks[omega] = acceptMask(reception, omega, predicate)
            perBeacon.append(np.roll(masks[omega], -int(shift)))
    else:
        if horizon is None:
            raise DomainError('an aperiodic listener needs a horizon')
        slack = int(shifts[-1] + omegas.max()) if count else 0
        domain = horizon - slack
        if domain <= 0:
            raise DomainError(f'horizon {horizon} shorter than the beacon '
                              f'sequence span {slack}')
        lines = {}
        perBeacon = []
        for shift, omega in zip(shifts, omegas):
            if omega not in lines:
                lines[omega] = _acceptLine(reception, omega, predicate,
                                           horizon)
            perBeacon.append(lines[omega][shift:shift + domain])

    cells = np.zeros(domain, dtype=np.int64)
    for mask in perBeacon:
        cells += mask
    logger.debug('coverage map: %d beacons over %d offsets', count, domain)
    return CoverageMap(domain=domain, cells=cells,
                       totalCovered=int(np.count_nonzero(cells)),
                       perBeacon=perBeacon,
                       periodic=reception.kind == 'periodic')


def checkDeterministic(covMap):
    """Return ``(True, [])`` if every offset is covered, else ``(False,
    uncovered offsets)``."""
    uncovered = covMap.uncovered()
    return uncovered.size == 0, uncovered


def checkDisjoint(covMap):
    """True iff no offset is covered by more than one beacon."""
    return bool(np.all(covMap.cells <= 1))


def minBeacons(gamma):
    """
    Return the minimum number of beacons ``M = ceil(1/gamma)``.

    Examples
    --------
    >>> minBeacons('3/10')
    4
    """
    gamma = toRational(gamma)
    if not 0 < gamma <= 1:
        raise DomainError('gamma must lie in (0, 1]')
    return math.ceil(1 / gamma)


@dataclass(frozen=True)
class NotDeterministic:
    """Outcome of a latency sweep that found an undiscovered phase."""

    senderPhase: int
    contact: int
    latency: float = math.inf

    def __bool__(self):
        return False


def _parties(sender, listener):
    beacons = getattr(sender, 'beacons', sender)
    reception = getattr(listener, 'reception', listener)
    return beacons, reception


def worstCaseLatency(sender, listener, predicate=None, resolution=1,
                     horizon=None):
    """
    Worst-case one-way discovery latency by exhaustive sweep.

    The sender's beacon sequence is placed at every phase of its period and
    contact happens at every tick of the listener period (every tick of
    ``[0, horizon // 2)`` for an aperiodic listener). The latency of a
    (phase, contact) pair runs from the contact tick to the end of the first
    received beacon starting after it; beacons are looked for up to
    ``lcm(P_B, T_C) + T_C`` ticks after contact.

    Parameters
    ----------
    sender, listener : ProtocolSpec or BeaconSchedule / ReceptionSchedule
    predicate : str or Predicate, optional
    resolution : int, optional
        Step, in ticks, of both phase and contact sweeps. The default is 1.
    horizon : int, optional
        Required for an aperiodic listener.

    Returns
    -------
    int or NotDeterministic
        Maximum latency in ticks.

    Examples
    --------
    >>> from pyndisc.schedule import BeaconSchedule, ReceptionSchedule
    >>> worstCaseLatency(BeaconSchedule([1], [20]),
    ...                  ReceptionSchedule(period=100, windows=[(0, 20)]))
    101
    """
    beacons, reception = _parties(sender, listener)
    predicate = asPredicate(predicate)
    if not beacons.periodic:
        raise DomainError('the sender must be periodic')
    if resolution < 1:
        raise DomainError('resolution must be a positive number of ticks')
    senderPeriod = beacons.period
    omegas = np.asarray(beacons.durations, dtype=np.int64)

    if reception.kind == 'periodic':
        period = reception.period
        cap = lcm(senderPeriod, period) + period
        table = np.vstack([acceptMask(reception, w, predicate)
                           for w in omegas])
        contacts = np.arange(0, period, resolution)

        def received(idx, starts):
            return table[idx, starts % period]
    else:
        if horizon is None:
            raise DomainError('an aperiodic listener needs a horizon')
        cap = horizon // 2
        length = horizon + int(omegas.max())
        table = np.vstack([_acceptLine(reception, w, predicate, length)
                           for w in omegas])
        contacts = np.arange(0, horizon - cap, resolution)

        def received(idx, starts):
            ok = starts < length
            out = np.zeros(starts.shape, dtype=bool)
            out[ok] = table[idx[ok], starts[ok]]
            return out

    lastContact = int(contacts[-1])
    reps = (lastContact + cap) // senderPeriod + 2
    relative = beacons.startTimes(reps * beacons.count)
    idx = np.arange(relative.size) % beacons.count
    logger.debug('latency sweep: %d phases x %d contacts, cap %d',
                 -(-senderPeriod // resolution), contacts.size, cap)

    worst = 0
    for phase in range(0, senderPeriod, resolution):
        starts = relative + phase
        hit = received(idx, starts)
        recvStarts = starts[hit]
        recvEnds = recvStarts + omegas[idx[hit]]
        pos = np.searchsorted(recvStarts, contacts, side='right')
        missing = pos >= recvStarts.size
        safe = np.minimum(pos, max(recvStarts.size - 1, 0))
        if recvStarts.size:
            missing |= recvStarts[safe] - contacts > cap
        if missing.any():
            contact = int(contacts[np.argmax(missing)])
            logger.warning('no discovery at sender phase %d, contact %d',
                           phase, contact)
            return NotDeterministic(senderPhase=phase, contact=contact)
        worst = max(worst, int((recvEnds[safe] - contacts).max()))
    logger.info('worst-case latency %d ticks', worst)
    return worst


@dataclass(frozen=True, eq=False)
class AperiodicReport:
    """Outcome of ``aperiodicCoverageCheck``."""

    uncovered: np.ndarray
    gammaHat: Fraction
    gamma: Fraction
    windows: int
    checkedTicks: int
    count: int


def aperiodicCoverageCheck(beacons, reception, horizon, count=None,
                           predicate=None, minWindows=100):
    """
    Check that every contact tick of an aperiodic listener is covered.

    Parameters
    ----------
    beacons : BeaconSchedule
    reception : ReceptionSchedule
        Listener, typically generator-defined.
    horizon : int
        Length of the examined time axis; must contain ``minWindows``
        windows.
    count : int, optional
        Number of beacons M. The default is ``ceil(1/gamma)`` of the declared
        gamma.
    predicate : str or Predicate, optional
    minWindows : int, optional
        The default is 100.

    Returns
    -------
    (bool, AperiodicReport)
        The report carries the running duty-cycle estimate ``gammaHat``.
    """
    listener = reception.asGenerator()
    starts, _ = listener.windowsUntil(horizon)
    if starts.size < minWindows:
        raise DomainError(f'horizon {horizon} holds {starts.size} windows, '
                          f'at least {minWindows} needed')
    if count is None:
        count = minBeacons(listener.gamma)
    covMap = coverageMap(beacons, listener, count, predicate, horizon=horizon)
    ok, uncovered = checkDeterministic(covMap)
    gammaHat = Fraction(int(np.count_nonzero(listener.onTicks(horizon))),
                        horizon)
    logger.info('aperiodic check over %d ticks: %s (gamma estimate %s)',
                covMap.domain, 'covered' if ok else 'gaps', gammaHat)
    return ok, AperiodicReport(uncovered=uncovered, gammaHat=gammaHat,
                               gamma=listener.gamma, windows=int(starts.size),
                               checkedTicks=covMap.domain, count=count)


def tickRanges(ticks):
    """
    Compress a set of ticks into sorted half-open ranges.

    Examples
    --------
    >>> tickRanges([2, 3, 4, 5, 9])
    [(2, 6), (9, 10)]
    """
    ticks = np.unique(np.asarray(ticks, dtype=np.int64))
    if ticks.size == 0:
        return []
    breaks = np.flatnonzero(np.diff(ticks) != 1) + 1
    return [(int(run[0]), int(run[-1]) + 1)
            for run in np.split(ticks, breaks)]


def coverageFrame(covMap):
    """Coverage map as a ``DataFrame`` with columns tick and multiplicity."""
    return pd.DataFrame({'tick': np.arange(covMap.domain),
                         'multiplicity': covMap.cells})


# %%
"""
2-Clause BSD License.

Copyright 2026, pyNDisc developers.

Redistribution and use in source and binary forms, with or without
modification, are permitted provided that the following conditions are met:

1. Redistributions of source code must retain the above copyright notice, this
list of conditions and the following disclaimer.

2. Redistributions in binary form must reproduce the above copyright notice,
this list of conditions and the following disclaimer in the documentation
and/or other materials provided with the distribution.

THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS" AND
ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""
