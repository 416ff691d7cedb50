"""
``collisions.py`` module.

Contains the Monte Carlo simulation of S devices sharing one channel with
random phases. It measures how often the beacons of a focus pair are
destroyed by third-party transmissions, how often discovery fails, and the
distribution of discovery latencies, for comparison with the analytic
collision model of ``bounds.py``.

Every trial draws from its own random stream derived from the pair
(seed, trial index), so results do not depend on the number of workers.
"""

# -- Required modules
import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool

import numpy as np
import pandas as pd

import pyndisc
from pyndisc import DomainError
from pyndisc.coverage import acceptMask, asPredicate
from pyndisc.schedule import ProtocolSpec, lcm, transmitDutyCycle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimConfig:
    """``SimConfig`` class.

    Attributes
    ----------
    specs : ProtocolSpec or tuple of ProtocolSpec
        One spec per device, or a single spec used by every device.
    S : int
        Number of devices, at least 2.
    trials : int
    horizon : int
        Simulated time after contact, in ticks; at least one hyperperiod of
        the focus pair.
    seed : int
        64-bit master seed.
    focus : (int, int), optional
        Indices of the listener E and the sender F. The default is (0, 1).
    predicate : str, optional
        Reception predicate. The default is ``pyndisc.defaultPredicate``.
    latencyTarget : int, optional
        A trial fails if discovery takes longer. The default is the horizon.
    workers : int, optional
        Number of worker processes. The default is 1.
    quantiles : tuple of float, optional
        The default is ``pyndisc.defaultQuantiles``.
    """

    specs: tuple
    S: int
    trials: int
    horizon: int
    seed: int = 0
    focus: tuple = (0, 1)
    predicate: str = None
    latencyTarget: int = None
    workers: int = 1
    quantiles: tuple = None

    def __post_init__(self):
        if self.S < 2:
            raise DomainError('the simulation needs at least two devices')
        specs = self.specs
        if isinstance(specs, ProtocolSpec):
            specs = (specs,) * self.S
        specs = tuple(specs)
        if len(specs) != self.S:
            raise DomainError(f'{len(specs)} specs given for S={self.S}')
        object.__setattr__(self, 'specs', specs)
        object.__setattr__(self, 'predicate', asPredicate(self.predicate))
        if self.quantiles is None:
            object.__setattr__(self, 'quantiles', pyndisc.defaultQuantiles)
        if self.trials < 1:
            raise DomainError('at least one trial is needed')
        e, f = self.focus
        if e == f or not (0 <= e < self.S and 0 <= f < self.S):
            raise DomainError(f'invalid focus pair {self.focus}')
        for spec in specs:
            if spec.reception.kind != 'periodic' or not spec.beacons.periodic:
                raise DomainError('simulated devices must be periodic')
        hyper = lcm(specs[f].beacons.period, specs[e].reception.period)
        if self.horizon < hyper:
            raise DomainError(f'horizon {self.horizon} shorter than the '
                              f'focus hyperperiod {hyper}')


@dataclass(frozen=True)
class DiscoveryEvent:
    """End tick of the discovering beacon and its 1-based ordinal."""

    time: int
    beacon: int


@dataclass(frozen=True, eq=False)
class SimResult:
    """``SimResult`` class.

    Attributes
    ----------
    empiricalCollisionRate : float
        Fraction of focus-pair beacons destroyed by third-party overlap.
    empiricalFailureRate : float
        Fraction of trials without discovery within the latency target.
    latencyQuantiles : list of (float, float)
    discoveredWithinHorizon : float
    analyticPc : float
        ``1 - exp(-2 * sum(beta))`` over the third-party devices.
    latencies : numpy.ndarray
        Per-trial latency, ``inf`` for failed trials.
    phases : numpy.ndarray
        Per-trial phase of every device.
    destroyed : numpy.ndarray
        Per-trial number of destroyed focus-pair beacons.
    focusBeacons : numpy.ndarray
        Per-trial number of focus-pair beacons.
    lostReceptions : numpy.ndarray
        Per-trial number of destroyed beacons E would have received before
        discovery.
    """

    empiricalCollisionRate: float
    empiricalFailureRate: float
    latencyQuantiles: list
    discoveredWithinHorizon: float
    analyticPc: float
    latencies: np.ndarray
    phases: np.ndarray
    destroyed: np.ndarray
    focusBeacons: np.ndarray
    lostReceptions: np.ndarray
    seed: int = 0

    def perTrialFrame(self):
        """One row per trial: phases, discovered flag, latency, collisions."""
        frame = pd.DataFrame({'trial': np.arange(self.latencies.size)})
        for s in range(self.phases.shape[1]):
            frame[f'phase_{s}'] = self.phases[:, s]
        frame['discovered'] = np.isfinite(self.latencies)
        frame['latency'] = self.latencies
        frame['destroyed'] = self.destroyed
        frame['lost_receptions'] = self.lostReceptions
        return frame


@dataclass(frozen=True, eq=False)
class _Device:
    """Beacons of one device relative to its phase."""

    starts: np.ndarray
    omegas: np.ndarray
    phaseRange: int

    @property
    def widths(self):
        """Channel occupancy; a zero-width beacon still occupies one tick."""
        return np.maximum(self.omegas, 1)


@dataclass(frozen=True, eq=False)
class _Network:
    devices: list
    listen: dict
    listenPeriod: int
    listener: int
    sender: int
    horizon: int
    seed: int


def _device(spec, horizon, reach):
    """Beacons of ``spec`` from ``reach`` ticks before its phase until the
    horizon after the end of its phase range."""
    beacons = spec.beacons
    period = beacons.period
    phaseRange = lcm(period, spec.reception.period)
    before = -(-reach // period)
    reps = before + -(-(horizon + phaseRange) // period) + 1
    count = reps * beacons.count
    starts = beacons.offset + beacons.startTimes(count) - before * period
    return _Device(starts=starts, omegas=beacons.durationsOf(count),
                   phaseRange=phaseRange)


def _network(config):
    e, f = config.focus
    reach = max(max(s.beacons.durations) for s in config.specs) + 1
    devices = [_device(spec, config.horizon, reach) for spec in config.specs]
    listener = config.specs[e].reception
    listen = {w: acceptMask(listener, w, config.predicate)
              for w in set(config.specs[f].beacons.durations)}
    return _Network(devices=devices, listen=listen,
                    listenPeriod=listener.period, listener=e, sender=f,
                    horizon=config.horizon, seed=config.seed)


def _overlaps(starts, ends, otherStarts, otherEnds):
    """True for every interval of the first set overlapping one of the
    second."""
    if otherStarts.size == 0:
        return np.zeros(starts.size, dtype=bool)
    order = np.argsort(otherStarts, kind='stable')
    sortedStarts = otherStarts[order]
    reach = np.maximum.accumulate(otherEnds[order])
    pos = np.searchsorted(sortedStarts, ends, side='left')
    hit = pos > 0
    hit[hit] = reach[pos[hit] - 1] > starts[hit]
    return hit


def _runTrial(net, trial):
    rng = np.random.default_rng(np.random.SeedSequence(net.seed,
                                                       spawn_key=(trial,)))
    phases = np.array([rng.integers(d.phaseRange) for d in net.devices],
                      dtype=np.int64)

    def onChannel(s, afterContact=False):
        dev = net.devices[s]
        starts = dev.starts + phases[s]
        ends = starts + dev.widths
        keep = (ends > 0) & (starts < net.horizon)
        if afterContact:
            keep &= starts >= 0
        return starts[keep], ends[keep], dev.omegas[keep]

    third = [onChannel(s) for s in range(len(net.devices))
             if s not in (net.listener, net.sender)]
    if third:
        thirdStarts = np.concatenate([t[0] for t in third])
        thirdEnds = np.concatenate([t[1] for t in third])
    else:
        thirdStarts = thirdEnds = np.zeros(0, dtype=np.int64)

    destroyedCount, focusCount = 0, 0
    for s in (net.listener, net.sender):
        starts, ends, _ = onChannel(s, afterContact=True)
        destroyedCount += int(_overlaps(starts, ends, thirdStarts,
                                        thirdEnds).sum())
        focusCount += starts.size

    starts, ends, omegas = onChannel(net.sender, afterContact=True)
    onAxis = (starts - phases[net.listener]) % net.listenPeriod
    received = np.zeros(starts.size, dtype=bool)
    for w, mask in net.listen.items():
        pick = omegas == w
        received[pick] = mask[onAxis[pick]]
    destroyed = _overlaps(starts, ends, thirdStarts, thirdEnds)
    good = np.flatnonzero(received & ~destroyed)
    if good.size:
        first = good[0]
        latency = float(starts[first] + omegas[first])
        lost = int((received & destroyed)[:first].sum())
    else:
        latency = math.inf
        lost = int((received & destroyed).sum())
    return phases, latency, destroyedCount, focusCount, lost


def _runChunk(args):
    net, trials = args
    return [_runTrial(net, t) for t in trials]


def simulateNetwork(config):
    """
    Monte Carlo simulation of discovery on a shared channel.

    Each trial draws independent uniform phases for all devices. A beacon of
    the focus pair is destroyed iff its transmission overlaps one of a third
    device (zero-width beacons occupy one tick); E discovers F with the first
    undestroyed beacon of F starting at or after contact (time 0) that lands
    in a window of E.

    Parameters
    ----------
    config : SimConfig

    Returns
    -------
    SimResult
    """
    net = _network(config)
    trials = range(config.trials)
    if config.workers > 1:
        size = -(-config.trials // config.workers)
        chunks = [(net, trials[i:i + size])
                  for i in range(0, config.trials, size)]
        with Pool(processes=config.workers) as pool:
            rows = [row for chunk in pool.map(_runChunk, chunks)
                    for row in chunk]
    else:
        rows = _runChunk((net, trials))
    logger.debug('simulated %d trials with %d workers', config.trials,
                 config.workers)

    phases = np.vstack([r[0] for r in rows])
    latencies = np.array([r[1] for r in rows], dtype=float)
    destroyed = np.array([r[2] for r in rows], dtype=np.int64)
    focus = np.array([r[3] for r in rows], dtype=np.int64)
    lost = np.array([r[4] for r in rows], dtype=np.int64)

    target = config.horizon if config.latencyTarget is None \
        else config.latencyTarget
    interferers = [s for i, s in enumerate(config.specs)
                   if i not in config.focus]
    betaSum = sum(float(transmitDutyCycle(s.beacons)) for s in interferers)
    result = SimResult(
        empiricalCollisionRate=float(destroyed.sum() / max(focus.sum(), 1)),
        empiricalFailureRate=float(np.mean(latencies > target)),
        latencyQuantiles=[],
        discoveredWithinHorizon=float(np.mean(np.isfinite(latencies))),
        analyticPc=-math.expm1(-2 * betaSum),
        latencies=latencies, phases=phases, destroyed=destroyed,
        focusBeacons=focus, lostReceptions=lost, seed=config.seed)
    result.latencyQuantiles.extend(
        (q, latencyQuantile(result, q)) for q in config.quantiles)
    logger.info('collision rate %.6g (analytic %.6g), failure rate %.6g',
                result.empiricalCollisionRate, result.analyticPc,
                result.empiricalFailureRate)
    return result


def latencyQuantile(result, quantile):
    """
    Nearest-rank latency quantile; failed trials count as ``inf``.

    Parameters
    ----------
    result : SimResult
    quantile : float
        In (0, 1].

    Returns
    -------
    int or float
    """
    if not 0 < quantile <= 1:
        raise DomainError('the quantile must lie in (0, 1]')
    ordered = np.sort(result.latencies)
    if ordered.size == 0:
        raise DomainError('the result holds no trial')
    value = ordered[math.ceil(quantile * ordered.size) - 1]
    return int(value) if np.isfinite(value) else math.inf


def simulatePairwise(specE, specF, phase=None, horizon=None, rng=None,
                     predicate=None):
    """
    Discovery of F by E on a collision-free channel.

    The windows of E repeat from time 0 and F sends its first beacon at
    ``phase``. Beacons starting at or after time 0 are candidates.

    Parameters
    ----------
    specE, specF : ProtocolSpec
        Listener and sender.
    phase : int, optional
        Phase of F. If None it is drawn uniformly over the hyperperiod with
        ``rng``.
    horizon : int, optional
        The default is ``lcm(P_F, T_E) + T_E``.
    rng : numpy.random.Generator, optional
    predicate : str, optional

    Returns
    -------
    DiscoveryEvent or None
        None if no beacon of F is received before the horizon.

    Examples
    --------
    >>> from pyndisc.schedule import (BeaconSchedule, ReceptionSchedule,
    ...                               ProtocolSpec)
    >>> c = ReceptionSchedule(period=10, windows=[(0, 2)])
    >>> tiling = ProtocolSpec(BeaconSchedule([0], [2]), c)
    >>> simulatePairwise(tiling, tiling, phase=0)
    DiscoveryEvent(time=0, beacon=1)
    """
    predicate = asPredicate(predicate)
    listener, beacons = specE.reception, specF.beacons
    if listener.kind != 'periodic' or not beacons.periodic:
        raise DomainError('pairwise simulation needs periodic schedules')
    hyper = lcm(beacons.period, listener.period)
    if horizon is None:
        horizon = hyper + listener.period
    if horizon < listener.period:
        raise DomainError(f'horizon {horizon} shorter than the listener '
                          f'period {listener.period}')
    if phase is None:
        rng = np.random.default_rng() if rng is None else rng
        phase = int(rng.integers(hyper))
    phase %= beacons.period

    count = (horizon // beacons.period + 2) * beacons.count
    starts = phase + beacons.startTimes(count) - beacons.period
    durations = beacons.durationsOf(count)
    inside = (starts >= 0) & (starts < horizon)
    starts, durations = starts[inside], durations[inside]
    masks = {w: acceptMask(listener, w, predicate)
             for w in set(durations.tolist())}
    for k, (start, w) in enumerate(zip(starts.tolist(), durations.tolist())):
        if masks[w][start % listener.period]:
            return DiscoveryEvent(time=start + w, beacon=k + 1)
    return None


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
