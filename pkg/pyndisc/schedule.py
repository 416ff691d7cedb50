"""
``schedule.py`` module.

Contains the time model and the schedule data types of a neighbor-discovery
(ND) protocol, the duty-cycle calculations with and without radio overheads,
and the low-power-listening duality transform.

All times are integer tick counts (one tick is ``pyndisc.tickUs``
microseconds unless a spec file says otherwise) and every duty cycle is an
exact ``fractions.Fraction``.
"""

# -- Required modules
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from pyndisc import DomainError

logger = logging.getLogger(__name__)

Tick = int


def lcm(a, b):
    """Least common multiple of two positive tick counts."""
    return a * b // gcd(a, b)


def toRational(value):
    """
    Convert a number or a ``'p/q'`` string into an exact ``Fraction``.

    Floats are converted through their shortest decimal representation, so
    ``toRational(0.05) == Fraction(1, 20)``.

    Parameters
    ----------
    value : int, float, str or Fraction
        Value to convert.

    Returns
    -------
    Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f'{value!r} is not a rational number') from exc


@dataclass(frozen=True)
class BeaconSchedule:
    """``BeaconSchedule`` class.

    Transmission pattern of a device: beacon ``i`` lasts ``durations[i]``
    ticks and the next beacon starts ``gaps[i]`` ticks after it (gaps are
    measured start-to-start).

    Attributes
    ----------
    durations : tuple of int
        Beacon durations (omega_i).
    gaps : tuple of int
        Start-to-start distance to the following beacon (lambda_i).
    periodic : bool, optional
        If True the pattern repeats indefinitely with period ``sum(gaps)``,
        otherwise the schedule consists of ``len(durations)`` beacons. The
        default is True.
    offset : int, optional
        Start of the first beacon on the device's own time axis. The default
        is 0.

    Examples
    --------
    >>> b = BeaconSchedule(durations=[36], gaps=[1800])
    >>> b.count, b.period
    (1, 1800)
    >>> b.startTimes(3)
    array([   0, 1800, 3600])
    """

    durations: tuple
    gaps: tuple
    periodic: bool = True
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'durations',
                           tuple(int(w) for w in self.durations))
        object.__setattr__(self, 'gaps', tuple(int(g) for g in self.gaps))

    @property
    def count(self):
        """Number of beacons per repetition (m_B)."""
        return len(self.durations)

    @property
    def period(self):
        """Length of one repetition of the pattern."""
        return sum(self.gaps)

    def duration(self, k):
        """Duration of the ``k``-th beacon (0-based) of the sequence."""
        return self.durations[k % self.count]

    def startTimes(self, count):
        """
        Start times of the first ``count`` beacons relative to the first one.

        Parameters
        ----------
        count : int
            Number of beacons. Periodic schedules wrap around their gap list;
            finite schedules cannot exceed ``self.count``.

        Returns
        -------
        numpy.ndarray
            Integer start times, the first one being 0.
        """
        if count < 0:
            raise DomainError('beacon count must be non-negative')
        if not self.periodic and count > self.count:
            raise DomainError(f'finite schedule has only {self.count} '
                              f'beacons, {count} requested')
        if count == 0:
            return np.zeros(0, dtype=np.int64)
        reps = -(-count // self.count)
        steps = np.tile(np.asarray(self.gaps, dtype=np.int64), reps)
        return np.concatenate(([0], np.cumsum(steps[:count - 1])))

    def durationsOf(self, count):
        """Durations of the first ``count`` beacons as an array."""
        idx = np.arange(count) % self.count
        return np.asarray(self.durations, dtype=np.int64)[idx]

    def positions(self):
        """Absolute start of each beacon of one repetition."""
        return self.offset + self.startTimes(self.count)


@dataclass(frozen=True)
class AlternatingWindows:
    """Aperiodic preset whose windows alternate between two sizes.

    Window ``k`` starts at ``k * 2 * q * unit`` and lasts ``p * unit`` ticks
    for even ``k`` and ``3 * p * unit`` ticks for odd ``k``, so the mean
    duty cycle is ``gamma = p/q``. With ``gamma = 1/4`` this gives windows of
    1 and 3 ticks every 8 ticks.
    """

    gamma: Fraction
    unit: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'gamma', toRational(self.gamma))
        if not 0 < self.gamma <= Fraction(2, 3):
            raise DomainError('alternating windows need 0 < gamma <= 2/3')

    def __call__(self, k):
        p, q = self.gamma.numerator, self.gamma.denominator
        size = p if k % 2 == 0 else 3 * p
        return k * 2 * q * self.unit, size * self.unit


@dataclass(frozen=True)
class DriftingWindows:
    """Aperiodic preset whose windows drift earlier over time.

    Window ``k`` lasts ``p * unit`` ticks and starts at
    ``k * q * unit - isqrt(k)``: at every perfect-square index the pattern
    moves one tick earlier, so it never repeats while its duty cycle tends
    to ``gamma = p/q``.
    """

    gamma: Fraction
    unit: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'gamma', toRational(self.gamma))
        if not 0 < self.gamma < 1:
            raise DomainError('drifting windows need 0 < gamma < 1')

    def __call__(self, k):
        p, q = self.gamma.numerator, self.gamma.denominator
        return k * q * self.unit - isqrt(k), p * self.unit


@dataclass(frozen=True)
class PeriodicWindows:
    """Generator view of a periodic reception schedule."""

    period: int
    windows: tuple

    def __call__(self, k):
        rep, idx = divmod(k, len(self.windows))
        offset, duration = self.windows[idx]
        return rep * self.period + offset, duration


generatorPresets = {'alternating': AlternatingWindows,
                    'drift': DriftingWindows}


@dataclass(frozen=True)
class ReceptionSchedule:
    """``ReceptionSchedule`` class.

    Listening pattern of a device. A periodic schedule repeats ``windows``
    (pairs of offset and duration inside ``[0, period)``) every ``period``
    ticks; an aperiodic one is described by a ``generator`` mapping the
    window index ``k`` to ``(start_k, duration_k)`` plus its declared
    asymptotic duty cycle ``gamma``.

    Attributes
    ----------
    period : int or None
        Period T_C of a periodic schedule.
    windows : tuple of (int, int)
        Windows ``(offset, duration)`` of a periodic schedule.
    generator : callable or None
        Window generator of an aperiodic schedule.
    gamma : Fraction or None
        Declared duty cycle of an aperiodic schedule.

    Examples
    --------
    >>> c = ReceptionSchedule(period=100, windows=[(0, 20)])
    >>> c.kind, c.count, c.activeTicks
    ('periodic', 1, 20)
    >>> a = ReceptionSchedule(generator=AlternatingWindows('1/4'),
    ...                       gamma='1/4')
    >>> [a.generator(k) for k in range(3)]
    [(0, 1), (8, 3), (16, 1)]
    """

    period: int = None
    windows: tuple = ()
    generator: object = None
    gamma: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, 'windows', tuple(
            (int(o), int(d)) for o, d in self.windows))
        if self.gamma is not None:
            object.__setattr__(self, 'gamma', toRational(self.gamma))
        if self.generator is None and self.period is None:
            raise DomainError('a reception schedule needs a period or a '
                              'window generator')

    @property
    def kind(self):
        return 'periodic' if self.generator is None else 'aperiodic'

    @property
    def count(self):
        """Number of windows per period (n_C)."""
        return len(self.windows)

    @property
    def activeTicks(self):
        """Total listening time per period."""
        return sum(d for _, d in self.windows)

    @property
    def durations(self):
        return [d for _, d in self.windows]

    def asGenerator(self):
        """Return the same windows as an aperiodic schedule."""
        if self.kind == 'aperiodic':
            return self
        if not self.windows:
            raise DomainError('a schedule without windows has no generator')
        windows = tuple(sorted(self.windows))
        return ReceptionSchedule(
            generator=PeriodicWindows(self.period, windows),
            gamma=Fraction(self.activeTicks, self.period))

    def windowsUntil(self, horizon):
        """
        Windows starting before ``horizon``.

        Returns
        -------
        starts, durations : numpy.ndarray
        """
        if self.kind == 'periodic':
            gen = PeriodicWindows(self.period, tuple(sorted(self.windows)))
        else:
            gen = self.generator
        starts, durations = [], []
        k = 0
        while True:
            start, duration = gen(k)
            if start >= horizon:
                break
            starts.append(start)
            durations.append(duration)
            k += 1
        return (np.asarray(starts, dtype=np.int64),
                np.asarray(durations, dtype=np.int64))

    def onTicks(self, length):
        """Boolean array, True at every tick of ``[0, length)`` listened to."""
        on = np.zeros(length, dtype=bool)
        starts, durations = self.windowsUntil(length)
        for start, duration in zip(starts, durations):
            on[max(start, 0):min(start + duration, length)] = True
        return on


@dataclass(frozen=True)
class RadioOverheads:
    """Effective extra active time of the radio, in ticks.

    ``tx`` is spent per transmission and ``rx`` per reception window.
    ``txRx`` and ``rxTx`` (mode switches) are stored only.
    """

    tx: int = 0
    rx: int = 0
    txRx: int = 0
    rxTx: int = 0


@dataclass(frozen=True)
class ProtocolSpec:
    """``ProtocolSpec`` class.

    Beacon and reception schedules of one device plus its radio overheads.

    Attributes
    ----------
    beacons : BeaconSchedule
    reception : ReceptionSchedule
    overheads : RadioOverheads, optional
    name : str, optional
    tickUs : int, optional
        Length of one tick in microseconds. The default is 1.
    """

    beacons: BeaconSchedule
    reception: ReceptionSchedule
    overheads: RadioOverheads = field(default_factory=RadioOverheads)
    name: str = ''
    tickUs: int = 1


@dataclass(frozen=True)
class DutyCycleReport:
    """Transmit (beta), reception (gamma) and combined (eta) duty cycles."""

    beta: Fraction
    gamma: Fraction
    eta: Fraction
    alpha: Fraction


def transmitDutyCycle(beacons, overheads=RadioOverheads()):
    """
    Return the transmit duty-cycle beta of a repetitive beacon sequence.

    ``beta = sum((omega_i + d_oTx) / lambda_i)``.

    Parameters
    ----------
    beacons : BeaconSchedule
        Periodic beacon schedule.
    overheads : RadioOverheads, optional
        Radio overheads; only ``tx`` is used. The default is no overhead.

    Returns
    -------
    Fraction

    Examples
    --------
    >>> transmitDutyCycle(BeaconSchedule([1000], [100000]),
    ...                   RadioOverheads(tx=500))
    Fraction(3, 200)
    """
    if not beacons.periodic:
        raise DomainError('the duty cycle of a finite beacon sequence is '
                          'undefined')
    if any(g <= 0 for g in beacons.gaps):
        raise DomainError('every gap must be positive')
    return sum((Fraction(w + overheads.tx, g)
                for w, g in zip(beacons.durations, beacons.gaps)),
               Fraction(0))


def receptionDutyCycle(reception, overheads=RadioOverheads()):
    """
    Return the reception duty-cycle gamma.

    ``gamma = sum(d_i + d_oRx) / T_C`` for periodic schedules. Aperiodic
    schedules return their declared gamma, which is only meaningful without
    a per-window overhead.

    Parameters
    ----------
    reception : ReceptionSchedule
    overheads : RadioOverheads, optional
        Radio overheads; only ``rx`` is used.

    Returns
    -------
    Fraction
    """
    if reception.kind == 'aperiodic':
        if overheads.rx:
            raise DomainError('per-window overhead of an aperiodic schedule '
                              'is ill-defined')
        if reception.gamma is None:
            raise DomainError('aperiodic schedule declares no gamma')
        return reception.gamma
    if reception.period is None or reception.period <= 0:
        raise DomainError('reception period must be positive')
    return Fraction(reception.activeTicks + reception.count * overheads.rx,
                    reception.period)


def combinedDutyCycle(beta, gamma, alpha=1):
    """
    Return the combined duty-cycle ``eta = alpha * beta + gamma``.

    Parameters
    ----------
    beta, gamma : rational
        Transmit and reception duty cycles, both in [0, 1].
    alpha : rational, optional
        Weight of transmission relative to reception. The default is 1.

    Returns
    -------
    Fraction
    """
    beta, gamma, alpha = map(toRational, (beta, gamma, alpha))
    if not (0 <= beta <= 1 and 0 <= gamma <= 1):
        raise DomainError('beta and gamma must lie in [0, 1]')
    if alpha <= 0:
        raise DomainError('alpha must be positive')
    return alpha * beta + gamma


def dutyCycles(spec, alpha=1):
    """Return the overhead-aware ``DutyCycleReport`` of a ``ProtocolSpec``."""
    alpha = toRational(alpha)
    beta = transmitDutyCycle(spec.beacons, spec.overheads)
    gamma = receptionDutyCycle(spec.reception, spec.overheads)
    return DutyCycleReport(beta=beta, gamma=gamma,
                           eta=combinedDutyCycle(beta, gamma, alpha),
                           alpha=alpha)


def lplDualize(spec):
    """
    Interchange beacons and reception windows (low power listening).

    Every beacon becomes a reception window of the same duration at the same
    position and every window becomes a beacon; the tx/rx overheads swap.
    Applying the transform twice returns the original spec.

    Parameters
    ----------
    spec : ProtocolSpec
        Spec whose beacon and reception schedules are both periodic.

    Returns
    -------
    ProtocolSpec

    Examples
    --------
    >>> s = ProtocolSpec(BeaconSchedule([1], [20]),
    ...                  ReceptionSchedule(period=100, windows=[(0, 20)]))
    >>> d = lplDualize(s)
    >>> d.beacons.durations, d.beacons.gaps, d.reception.windows
    ((20,), (100,), ((0, 1),))
    """
    if spec.reception.kind != 'periodic':
        raise DomainError('the dual of an aperiodic reception schedule is '
                          'not a periodic beacon schedule')
    if not spec.beacons.periodic:
        raise DomainError('only periodic beacon schedules can be dualized')
    if not spec.reception.windows:
        raise DomainError('a schedule without windows has no dual')

    windows = sorted(spec.reception.windows)
    offsets = [o for o, _ in windows]
    gaps = [b - a for a, b in zip(offsets, offsets[1:])]
    gaps.append(spec.reception.period - offsets[-1] + offsets[0])
    beacons = BeaconSchedule(durations=[d for _, d in windows], gaps=gaps,
                             periodic=True, offset=offsets[0])

    period = spec.beacons.period
    dualWindows = []
    for k, (pos, w) in enumerate(zip(spec.beacons.positions(),
                                     spec.beacons.durations)):
        if pos + w > period:
            raise DomainError(f'beacon {k} wraps around the beacon period')
        dualWindows.append((int(pos), w))
    reception = ReceptionSchedule(period=period, windows=dualWindows)

    ovh = spec.overheads
    overheads = RadioOverheads(tx=ovh.rx, rx=ovh.tx, txRx=ovh.rxTx,
                               rxTx=ovh.txRx)
    if spec.name.endswith(':dual'):
        name = spec.name[:-len(':dual')]
    else:
        name = spec.name + ':dual'
    logger.debug('dualized %r: %d beacons <-> %d windows', spec.name,
                 spec.beacons.count, spec.reception.count)
    return replace(spec, beacons=beacons, reception=reception,
                   overheads=overheads, name=name)


def validateSchedule(spec, probe=64):
    """
    List the violated invariants of a ``ProtocolSpec``.

    Parameters
    ----------
    spec : ProtocolSpec
    probe : int, optional
        Number of generator windows inspected for aperiodic schedules. The
        default is 64.

    Returns
    -------
    list of str
        Empty if the spec is well formed.
    """
    violations = []
    b = spec.beacons
    if b.count < 1:
        violations.append('no beacons')
    if len(b.durations) != len(b.gaps):
        violations.append('durations and gaps differ in length')
    for i, (w, g) in enumerate(zip(b.durations, b.gaps)):
        if w < 0:
            violations.append(f'beacon {i} has negative duration')
        if g < w:
            violations.append(f'gap {i} shorter than beacon {i}')
    if b.offset < 0:
        violations.append('beacon offset negative')
    elif b.periodic and b.count and b.offset >= max(b.period, 1):
        violations.append('beacon offset outside beacon period')
    if b.periodic and b.count and b.period <= 0:
        violations.append('beacon period not positive')
    if not violations and b.periodic:
        # one repetition lies inside [0, period), as the dual windows do
        ends = b.positions() + b.durationsOf(b.count)
        for k in np.flatnonzero(ends > b.period):
            violations.append(f'beacon {k} wraps around the beacon period')

    c = spec.reception
    if c.kind == 'periodic':
        if c.period is None or c.period <= 0:
            violations.append('period not positive')
        else:
            for i, (o, d) in enumerate(c.windows):
                if o < 0:
                    violations.append(f'window {i} has negative offset')
                if d < 0:
                    violations.append(f'window {i} has negative duration')
                if o + d > c.period:
                    violations.append(f'window {i} exceeds period')
            order = sorted(range(c.count), key=lambda i: c.windows[i])
            for i, j in zip(order, order[1:]):
                if sum(c.windows[i]) > c.windows[j][0]:
                    violations.append(
                        f'windows {min(i, j)} and {max(i, j)} overlap')
    else:
        if c.gamma is None or not 0 < c.gamma <= 1:
            violations.append('declared gamma outside (0, 1]')
        previousEnd = None
        for k in range(probe):
            start, duration = c.generator(k)
            if duration < 0:
                violations.append(f'generator window {k} has negative '
                                  'duration')
            if previousEnd is not None and start < previousEnd:
                violations.append(f'generator windows {k - 1} and {k} '
                                  'overlap')
            previousEnd = start + duration

    for name in ('tx', 'rx', 'txRx', 'rxTx'):
        if getattr(spec.overheads, name) < 0:
            violations.append(f'overhead {name} negative')
    if spec.tickUs <= 0:
        violations.append('tick length not positive')
    return violations


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
