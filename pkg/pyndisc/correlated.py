"""
``correlated.py`` module.

Contains the construction and verification of correlated schedule
quadruples, where both devices place their beacons at a fixed distance
``zeta`` from their own reception windows so that every offset is covered
by exactly one direction, plus the mutual-assistance two-way simulation.

Offsets between the two devices are swept over cells ``[x, x + 1)`` of the
period evaluated at their midpoints ``x + 1/2``; with integer schedules no
beacon then starts exactly on a window edge and the mirror of a cell is
again a cell.
"""

# -- Required modules
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from pyndisc import ConstructionError, DomainError
from pyndisc.coverage import Predicate, acceptMask, asPredicate
from pyndisc.schedule import BeaconSchedule

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def mirrorOffset(zeta, phi, period):
    """
    Offset of E as seen by F when F is at offset ``phi`` from E.

    Returns ``(2 * zeta - phi) mod period``; applying it twice gives ``phi``
    back.

    Examples
    --------
    >>> mirrorOffset(10, 4, 100), mirrorOffset(10, 30, 25)
    (16, 15)
    """
    if period <= 0:
        raise DomainError('period must be positive')
    return (2 * zeta - phi) % period


def mirrorCell(zeta, cell, period):
    """Mirror of the offset cell ``[cell, cell + 1)``."""
    return mirrorOffset(zeta, cell + 1, period)


@dataclass(frozen=True)
class CorrelatedQuadruple:
    """``CorrelatedQuadruple`` class.

    Both devices share the same reception template, ``zeta`` and beacon
    plan. Beacon ``j`` of a device starts ``zeta + a_j`` ticks after the
    start of its first window, ``a_j`` being the plan positions.

    Attributes
    ----------
    reception : ReceptionSchedule
        Periodic template.
    zeta : int
        Distance from the first window to the first correlated beacon.
    beacons : BeaconSchedule
        Beacon plan; its period divides the template period.
    predicate : Predicate
    """

    reception: object
    zeta: int
    beacons: BeaconSchedule
    predicate: str = None

    def __post_init__(self):
        object.__setattr__(self, 'predicate', asPredicate(self.predicate))
        if self.reception.kind != 'periodic':
            raise DomainError('correlated quadruples need a periodic template')
        if not self.reception.windows:
            raise DomainError('the template has no window')
        if not 0 <= self.zeta < self.period:
            raise DomainError('zeta must lie in [0, T_C)')
        if not self.beacons.periodic or self.period % self.beacons.period:
            raise DomainError('the beacon plan period must divide T_C')

    @property
    def period(self):
        return self.reception.period

    @property
    def center(self):
        """Mirror center: ``zeta`` measured from the start of the period."""
        return min(self.reception.windows)[0] + self.zeta

    @property
    def beaconsPerDevice(self):
        return self.period // self.beacons.period * self.beacons.count

    def positions(self):
        """Plan positions ``a_j`` and durations within one period."""
        count = self.beaconsPerDevice
        starts = self.beacons.offset + self.beacons.startTimes(count)
        return starts % self.period, self.beacons.durationsOf(count)

    def coverageF(self):
        """Cells at which a beacon of F lands in a window of E."""
        covered = np.zeros(self.period, dtype=bool)
        masks = {}
        for a, omega in zip(*self.positions()):
            if omega not in masks:
                masks[omega] = acceptMask(self.reception, omega,
                                          self.predicate, half=True)
            covered |= np.roll(masks[omega], -int(a))
        return covered

    def coverageE(self):
        """Cells at which a beacon of E lands in a window of F."""
        cells = np.arange(self.period)
        return self.coverageF()[mirrorCell(self.center, cells, self.period)]


def _piece(mask, a):
    return np.roll(mask, -a)


def _collapse(positions, period, omega):
    """Smallest periodic ``BeaconSchedule`` placing beacons at
    ``positions``."""
    positions = sorted(positions)
    gaps = [b - a for a, b in zip(positions, positions[1:])]
    gaps.append(period - positions[-1] + positions[0])
    for size in range(1, len(gaps) + 1):
        if len(gaps) % size == 0 and gaps == gaps[:size] * (len(gaps) // size):
            gaps = gaps[:size]
            break
    return BeaconSchedule(durations=[omega] * len(gaps), gaps=gaps,
                          offset=positions[0])


def buildCorrelatedQuadruple(reception, zeta, predicate=None, omega=1):
    """
    Greedy construction of a correlated beacon plan.

    The first beacon sits at distance ``zeta`` from the first window. Further
    positions are tried in increasing order and kept when both the offsets
    they cover and the mirror image of those offsets are still uncovered,
    until the period is covered or ``ceil(M/2)`` beacons are placed, with
    ``M = T_C / sum(d)``.

    Parameters
    ----------
    reception : ReceptionSchedule
        Periodic template whose period is a multiple of its listening time.
    zeta : int
    predicate : str or Predicate, optional
    omega : int, optional
        Beacon duration. The default is 1.

    Returns
    -------
    CorrelatedQuadruple

    Raises
    ------
    ConstructionError
        If the plan leaves offsets uncovered; ``residual`` lists them.

    Examples
    --------
    >>> from pyndisc.schedule import ReceptionSchedule
    >>> quad = buildCorrelatedQuadruple(
    ...     ReceptionSchedule(period=8, windows=[(0, 2)]), zeta=4)
    >>> quad.beacons.gaps, quad.beaconsPerDevice
    ((4,), 2)
    """
    predicate = asPredicate(predicate)
    if reception.kind != 'periodic':
        raise DomainError('correlated quadruples need a periodic template')
    period, active = reception.period, reception.activeTicks
    if active <= 0 or period % active:
        raise DomainError(f'T_C={period} is not a multiple of the listening '
                          f'time {active}')
    if not 0 <= zeta < period:
        raise DomainError('zeta must lie in [0, T_C)')
    budget = -(-(period // active) // 2)
    center = min(reception.windows)[0] + zeta
    mirror = mirrorCell(center, np.arange(period), period)
    mask = acceptMask(reception, omega, predicate, half=True)

    piece = _piece(mask, 0)
    covered = piece | piece[mirror]
    chosen = [0]
    for a in range(1, period):
        if len(chosen) >= budget or covered.all():
            break
        piece = _piece(mask, a)
        image = piece[mirror]
        if (piece & image).any() or (covered & (piece | image)).any():
            continue
        chosen.append(a)
        covered |= piece | image

    if not covered.all():
        residual = np.flatnonzero(~covered)
        logger.info('zeta=%d: construction leaves %d offsets uncovered', zeta,
                    residual.size)
        raise ConstructionError(f'no correlated plan for zeta={zeta}',
                                residual)
    logger.debug('zeta=%d: plan positions %s', zeta, chosen)
    return CorrelatedQuadruple(reception=reception, zeta=zeta,
                               beacons=_collapse(chosen, period, omega),
                               predicate=predicate)


def feasibleZetas(reception, predicate=None, omega=1):
    """Every ``zeta`` for which ``buildCorrelatedQuadruple`` succeeds."""
    zetas = []
    for zeta in range(reception.period):
        try:
            buildCorrelatedQuadruple(reception, zeta, predicate, omega)
        except ConstructionError:
            continue
        zetas.append(zeta)
    return zetas


@dataclass(frozen=True, eq=False)
class MutualExclusiveReport:
    """Verdict of ``verifyMutualExclusive``."""

    ok: bool
    uncovered: np.ndarray
    beaconsPerDevice: int
    disjoint: bool
    omegaF: np.ndarray
    omegaE: np.ndarray


def verifyMutualExclusive(quad):
    """
    Check that every offset is covered by at least one direction.

    Returns
    -------
    MutualExclusiveReport
        ``omegaF`` and ``omegaE`` are the covered cells of each direction.
    """
    omegaF = quad.coverageF()
    omegaE = quad.coverageE()
    uncovered = np.flatnonzero(~(omegaF | omegaE))
    report = MutualExclusiveReport(
        ok=uncovered.size == 0, uncovered=uncovered,
        beaconsPerDevice=quad.beaconsPerDevice,
        disjoint=not (omegaF & omegaE).any(),
        omegaF=np.flatnonzero(omegaF), omegaE=np.flatnonzero(omegaE))
    logger.info('mutual exclusive verification: ok=%s disjoint=%s',
                report.ok, report.disjoint)
    return report


def _receptions(quad, cell):
    """Received beacons over one period for the offset cell ``cell``.

    Returns two lists of ``(start, omega)`` with starts in ``[0, T_C)`` on
    the time axis of E: beacons of F received by E, and beacons of E
    received by F.
    """
    period = quad.period
    positions, omegas = quad.positions()
    phi = cell + HALF
    fToE, eToF = [], []
    masks = {}
    for a, omega in zip(positions.tolist(), omegas.tolist()):
        if omega not in masks:
            masks[omega] = acceptMask(quad.reception, omega, quad.predicate,
                                      half=True)
        if masks[omega][(cell + a) % period]:
            fToE.append(((phi + a) % period, omega))
        if masks[omega][(2 * quad.center - 1 - cell + a) % period]:
            eToF.append(((quad.center + a) % period, omega))
    return fToE, eToF


def _firstEnd(receptions, contact, period):
    """End of the earliest beacon starting after ``contact``."""
    best = None
    for start, omega in receptions:
        lap = (contact - start) // period + 1
        end = start + lap * period + omega
        if best is None or end < best:
            best = end
    return best


def oneWayLatencyCorrelated(quad):
    """
    Worst-case one-way latency of a verified quadruple by exhaustive sweep.

    Every offset cell is combined with every contact tick of the period; the
    latency is the time to the end of the first beacon received in either
    direction.

    Returns
    -------
    Fraction
    """
    if not verifyMutualExclusive(quad).ok:
        raise DomainError('the quadruple does not cover every offset')
    period = quad.period
    worst = Fraction(0)
    for cell in range(period):
        fToE, eToF = _receptions(quad, cell)
        for contact in range(period):
            end = _firstEnd(fToE + eToF, contact, period)
            worst = max(worst, end - contact)
    return worst


def _replyHeard(quad, shift, after, omega):
    """Earliest instant ``>= after`` at which the device whose windows are
    shifted by ``shift`` hears a beacon of duration ``omega`` sent to it.

    The beacon is heard at the later of ``after`` and the start of the
    window that accepts it. Returns None if no window accepts it.
    """
    period = quad.period
    containment = quad.predicate is Predicate.CONTAINMENT and omega > 0
    best = None
    for offset, duration in quad.reception.windows:
        last = duration - omega if containment else duration
        if last < 0:
            continue
        start = Fraction(offset) + shift
        start += (after - start) // period * period
        if after < start + last or (containment and after == start + last):
            candidate = after
        else:
            candidate = start + period
        if best is None or candidate < best:
            best = candidate
    return best


def simulateMutualAssistance(quad, phi):
    """
    One-way and two-way discovery times with mutual assistance.

    Contact happens at time 0 on the axis of E, with F at the offset cell
    ``phi``. The device that discovers first answers with one extra beacon
    inside the next listening window its peer announced; two-way discovery
    completes when the peer hears that beacon or at the end of the first
    direct reception in the other direction, whichever comes first. The
    penalty ``two_way - one_way`` never exceeds ``T_C``.

    Parameters
    ----------
    quad : CorrelatedQuadruple
    phi : int
        Offset cell in ``[0, T_C)``.

    Returns
    -------
    (Fraction, Fraction)
        One-way and two-way discovery times.
    """
    period = quad.period
    if not 0 <= phi < period:
        raise DomainError('phi must lie in [0, T_C)')
    fToE, eToF = _receptions(quad, phi)
    endE = _firstEnd(fToE, 0, period)
    endF = _firstEnd(eToF, 0, period)
    if endE is None and endF is None:
        raise DomainError(f'offset cell {phi} is covered by no direction')
    omega = int(quad.beacons.durations[0])
    if endF is None or (endE is not None and endE <= endF):
        oneWay, reverse = endE, endF
        shift = phi + HALF - quad.center
    else:
        oneWay, reverse = endF, endE
        shift = Fraction(0)
    heard = _replyHeard(quad, shift, oneWay, omega)
    twoWay = min(t for t in (heard, reverse) if t is not None)
    return oneWay, twoWay


def coverageUnion(quad):
    """Cells labelled by the direction covering them: F, E, both or none."""
    omegaF, omegaE = quad.coverageF(), quad.coverageE()
    labels = np.select([omegaF & omegaE, omegaF, omegaE],
                       ['both', 'F', 'E'], default='none')
    return pd.DataFrame({'tick': np.arange(quad.period),
                         'covered_by': labels})


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
