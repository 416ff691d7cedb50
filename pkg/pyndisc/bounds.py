"""
``bounds.py`` module.

Contains the closed-form worst-case latency bounds of neighbor discovery,
the collision failure-rate model and its inversions, and the optimizer of
the redundancy factor Q for collision-prone networks.

Times and duty cycles are exact ``Fraction`` values; probabilities are
floats.
"""

# -- Required modules
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd
from scipy.optimize import bisect

import pyndisc
from pyndisc import DomainError, InfeasibleError
from pyndisc.schedule import toRational

logger = logging.getLogger(__name__)


def _windowSum(windows):
    if not len(windows):
        raise DomainError('the window list is empty')
    total = sum(int(d) for d in windows)
    if total <= 0:
        raise DomainError('the windows must have a positive total duration')
    return total


def _unitInterval(name, value, openLeft=True):
    value = toRational(value)
    if (value <= 0 if openLeft else value < 0) or value > 1:
        raise DomainError(f'{name} must lie in {"(" if openLeft else "["}'
                          '0, 1]')
    return value


@dataclass(frozen=True)
class BoundReport:
    """``BoundReport`` class.

    Attributes
    ----------
    latency : Fraction
        Worst-case latency in ticks.
    formula : str
        Identifier of the evaluated bound.
    inputs : dict
        Echo of the inputs.
    extras : dict
        Intermediate quantities (beacon counts, branches).
    """

    latency: Fraction
    formula: str
    inputs: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)

    def seconds(self, tickUs=None):
        """Latency in seconds for ticks of ``tickUs`` microseconds."""
        if tickUs is None:
            tickUs = pyndisc.tickUs
        return float(self.latency) * tickUs * 1e-6

    def toRow(self, tickUs=None):
        row = {'formula': self.formula}
        row.update({k: str(v) for k, v in self.inputs.items()})
        row['L_ticks'] = float(self.latency)
        row['L_seconds'] = self.seconds(tickUs)
        return row


def boundUnidirectional(omega, beta, gamma):
    """
    Worst-case latency ``L = omega / (beta * gamma)`` of one-way discovery.

    Parameters
    ----------
    omega : int
        Beacon duration in ticks.
    beta, gamma : rational
        Transmit and reception duty cycles in (0, 1].

    Returns
    -------
    BoundReport

    Examples
    --------
    >>> boundUnidirectional(36, '1/50', '1/50').latency
    Fraction(90000, 1)
    """
    beta = _unitInterval('beta', beta)
    gamma = _unitInterval('gamma', gamma)
    latency = Fraction(omega) / (beta * gamma)
    return BoundReport(latency, 'unidirectional',
                       {'omega': omega, 'beta': beta, 'gamma': gamma})


def boundUnidirectionalOverheads(omega, beta, gamma, overheads, windows):
    """
    Overhead-aware one-way latency bound.

    ``L = 1/gamma * (1 + n_C * d_oRx / sum(d)) * (omega + d_oTx) / beta``,
    with beta and gamma the overhead-aware duty cycles. A single window gives
    the lowest value for fixed gamma and overheads.

    Parameters
    ----------
    omega : int
    beta, gamma : rational
    overheads : RadioOverheads
    windows : list of int
        Window durations d_i.

    Returns
    -------
    BoundReport
    """
    total = _windowSum(windows)
    beta = _unitInterval('beta', beta)
    gamma = _unitInterval('gamma', gamma)
    factor = 1 + Fraction(len(windows) * overheads.rx, total)
    latency = factor * (omega + overheads.tx) / (gamma * beta)
    return BoundReport(latency, 'unidirectional-overheads',
                       {'omega': omega, 'beta': beta, 'gamma': gamma,
                        'tx': overheads.tx, 'rx': overheads.rx,
                        'windows': list(windows)},
                       {'windowFactor': factor})


def boundMutualExclusive(omega, alpha, eta):
    """
    Latency bound of mutual exclusive one-way discovery.

    Both branches ``k**2 * omega * alpha / (eta * k - 1/2)`` for
    ``k = ceil(1/eta)`` and ``k = floor(1/eta)`` are evaluated exactly;
    branches with a non-positive denominator are skipped.

    Returns
    -------
    BoundReport
        ``extras['branch']`` is ``'ceil'``, ``'floor'`` or ``'both'``.

    Examples
    --------
    >>> boundMutualExclusive(1, 1, '3/10').latency
    Fraction(45, 2)
    """
    alpha = toRational(alpha)
    eta = _unitInterval('eta', eta)
    if alpha <= 0:
        raise DomainError('alpha must be positive')
    half = Fraction(1, 2)
    values = {}
    inverse = 1 / eta
    for branch, k in (('ceil', math.ceil(inverse)),
                      ('floor', math.floor(inverse))):
        denominator = eta * k - half
        if denominator > 0:
            values[branch] = Fraction(k * k) * omega * alpha / denominator
    if not values:
        raise DomainError(f'no branch has a positive denominator at eta={eta}')
    latency = min(values.values())
    winners = [b for b, v in values.items() if v == latency]
    branch = 'both' if len(winners) == 2 else winners[0]
    return BoundReport(latency, 'mutual-exclusive',
                       {'omega': omega, 'alpha': alpha, 'eta': eta},
                       {'branch': branch, **values})


def boundHalfCoverage(period, windows, omega, beta):
    """
    One-way latency of a correlated plan covering half of the period.

    ``L = ceil(T_C / (2 * sum(d))) * omega / beta``. The report also carries
    the beacon count ``ceil(T_C / sum(d))`` needed for direct coverage.

    Examples
    --------
    >>> r = boundHalfCoverage(100, [20], 1, '1/20')
    >>> r.latency, r.extras['halfCount'], r.extras['fullCount']
    (Fraction(60, 1), 3, 5)
    """
    total = _windowSum(windows)
    beta = _unitInterval('beta', beta)
    halfCount = math.ceil(Fraction(period, 2 * total))
    fullCount = math.ceil(Fraction(period, total))
    return BoundReport(halfCount * Fraction(omega) / beta, 'half-coverage',
                       {'period': period, 'windows': list(windows),
                        'omega': omega, 'beta': beta},
                       {'halfCount': halfCount, 'fullCount': fullCount})


def latencyWithRedundancy(Q, period, windows, omega, beta):
    """Latency ``ceil(Q * T_C / sum(d)) * omega / beta`` when every offset
    is covered Q times."""
    if Q < 1:
        raise DomainError('the redundancy Q must be at least 1')
    total = _windowSum(windows)
    beta = _unitInterval('beta', beta)
    count = math.ceil(Fraction(Q * period, total))
    return BoundReport(count * Fraction(omega) / beta, 'redundancy',
                       {'Q': Q, 'period': period, 'windows': list(windows),
                        'omega': omega, 'beta': beta},
                       {'count': count})


@dataclass(frozen=True)
class RedundancyParams:
    """``RedundancyParams`` class.

    Attributes
    ----------
    Q : int
        Number of times every offset is covered.
    q : float
        Fraction of the offsets covered Q+1 times.
    S : int
        Number of devices.
    Pf : float, optional
        Target failure rate.
    Pc : float, optional
        Per-beacon collision probability.
    """

    Q: int
    q: float = 0.0
    S: int = 2
    Pf: float = None
    Pc: float = None

    def __post_init__(self):
        if self.Q < 0:
            raise DomainError('Q must be non-negative')
        if not 0 <= self.q <= 1:
            raise DomainError('q must lie in [0, 1]')
        if self.S < 2:
            raise DomainError('S must be at least 2')
        if self.Pf is not None and not 0 < self.Pf < 1:
            raise DomainError('the failure rate must lie in (0, 1)')


def collisionProbability(beta, S):
    """Probability ``1 - exp(-2 (S - 2) beta)`` that a beacon collides."""
    return -math.expm1(-2 * (S - 2) * float(beta))


def failureRate(beta, params):
    """
    Discovery failure rate under independent collisions.

    ``P_f = (1 - q) P_c**Q + q P_c**(Q + 1)`` with
    ``P_c = 1 - exp(-2 (S - 2) beta)``.

    Parameters
    ----------
    beta : float
        Transmit duty cycle of every device, in [0, 1].
    params : RedundancyParams

    Returns
    -------
    float
    """
    if not 0 <= float(beta) <= 1:
        raise DomainError('beta must lie in [0, 1]')
    pc = collisionProbability(beta, params.S)
    return (1 - params.q) * pc ** params.Q + params.q * pc ** (params.Q + 1)


def _checkTarget(Pf, Q, S):
    if not 0 < Pf < 1:
        raise DomainError('the failure rate must lie in (0, 1)')
    if S == 2:
        raise DomainError('with two devices no beacon collides, beta is '
                          'unconstrained')
    if S < 2:
        raise DomainError('S must be at least 2')


def betaForFailureRate(Pf, Q, S, betaCap=None):
    """
    Largest beta meeting a failure-rate target, for q = 0.

    ``P_c = P_f**(1/Q)`` and ``beta = -ln(1 - P_c) / (2 (S - 2))``.

    Parameters
    ----------
    Pf : float
        Target failure rate.
    Q : int
        Redundancy, at least 1.
    S : int
        Number of devices, at least 3.
    betaCap : float, optional
        Largest beta accepted. The default is ``pyndisc.betaCap``.

    Returns
    -------
    (float, float)
        beta and the collision probability P_c.

    Examples
    --------
    >>> beta, pc = betaForFailureRate(0.0005, 3, 3)
    >>> round(pc, 4), round(beta, 4)
    (0.0794, 0.0413)
    """
    _checkTarget(Pf, Q, S)
    if Q < 1:
        raise DomainError('the closed-form inversion needs Q >= 1')
    if betaCap is None:
        betaCap = pyndisc.betaCap
    pc = Pf ** (1 / Q)
    beta = -math.log1p(-pc) / (2 * (S - 2))
    if beta > betaCap:
        raise DomainError(f'beta={beta:.6g} exceeds the cap {betaCap}')
    return beta, pc


def betaForFailureRateNumeric(Pf, Q, q, S, betaCap=None, xtol=1e-12):
    """Bisection counterpart of ``betaForFailureRate`` valid for q > 0."""
    _checkTarget(Pf, Q, S)
    if betaCap is None:
        betaCap = pyndisc.betaCap
    params = RedundancyParams(Q=Q, q=q, S=S)

    def residual(beta):
        return failureRate(beta, params) - Pf

    if residual(betaCap) < 0:
        raise DomainError(f'the target {Pf} is not reached below beta='
                          f'{betaCap}')
    beta = bisect(residual, 0.0, betaCap, xtol=xtol)
    return beta, collisionProbability(beta, S)


@dataclass(frozen=True, eq=False)
class RedundancyPlan:
    """Optimal redundancy and the per-Q table it was selected from."""

    Q: int
    beta: float
    gamma: float
    latency: float
    table: pd.DataFrame


def optimizeRedundancy(omega, alpha, eta, Pf, S, Qmax=6):
    """
    Choose the redundancy Q that minimizes latency under a failure target.

    For every ``Q`` in ``1..Qmax`` the largest admissible beta comes from
    ``betaForFailureRate``; Q is feasible iff ``alpha * beta < eta``, then
    ``gamma = eta - alpha * beta`` and ``L = ceil(Q / gamma) * omega / beta``.
    The feasible Q with the smallest L wins, ties going to the smaller Q.

    Parameters
    ----------
    omega : int
    alpha, eta : rational
        Transmit weight and combined duty cycle budget.
    Pf : float
    S : int
        At least 3.
    Qmax : int, optional
        The default is 6.

    Returns
    -------
    RedundancyPlan
        ``table`` has one row per Q with columns Q, beta, Pc, gamma, count,
        latency, feasible, reason and Pf (the failure rate recomputed from
        beta).

    Raises
    ------
    InfeasibleError
        If no Q is feasible; ``reasons`` maps each Q to its rejection.
    """
    if S < 3:
        raise DomainError('the optimizer needs at least three devices')
    if Qmax < 1:
        raise DomainError('Qmax must be at least 1')
    alpha = float(toRational(alpha))
    eta = float(toRational(eta))
    if not 0 < eta < 1:
        raise DomainError('eta must lie in (0, 1)')

    rows, reasons = [], {}
    for Q in range(1, Qmax + 1):
        row = {'Q': Q, 'beta': math.nan, 'Pc': math.nan, 'gamma': math.nan,
               'count': math.nan, 'latency': math.inf, 'feasible': False,
               'reason': '', 'Pf': math.nan}
        try:
            beta, pc = betaForFailureRate(Pf, Q, S)
        except DomainError as exc:
            row['reason'] = reasons[Q] = str(exc)
            rows.append(row)
            continue
        row.update(beta=beta, Pc=pc,
                   Pf=failureRate(beta, RedundancyParams(Q=Q, S=S)))
        if alpha * beta >= eta:
            row['reason'] = reasons[Q] = (f'alpha*beta={alpha * beta:.6g} '
                                          f'>= eta={eta:.6g}')
        else:
            gamma = eta - alpha * beta
            count = math.ceil(Q / gamma)
            row.update(gamma=gamma, count=count, feasible=True,
                       latency=count * omega / beta)
        logger.debug('Q=%d: %s', Q, row)
        rows.append(row)

    table = pd.DataFrame(rows)
    feasible = table[table['feasible']]
    if feasible.empty:
        logger.warning('no feasible redundancy for Pf=%g, S=%d', Pf, S)
        raise InfeasibleError('no feasible redundancy Q', reasons)
    best = feasible.loc[feasible['latency'].idxmin()]
    logger.info('optimal redundancy Q=%d, L=%.6g ticks', best['Q'],
                best['latency'])
    return RedundancyPlan(Q=int(best['Q']), beta=float(best['beta']),
                          gamma=float(best['gamma']),
                          latency=float(best['latency']), table=table)


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
