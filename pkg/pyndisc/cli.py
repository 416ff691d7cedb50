"""
``cli.py`` module.

Console script for pyNDisc. Every verb parses its inputs into a ``Command``,
which ``run`` maps onto the package functions and turns into a ``Report``:
a machine block (CSV, JSON for ``lpl-dual``) and a human block, both
preceded by a provenance header.

Exit codes: 0 success, 2 verification failure, 1 usage, IO, parse or domain
errors.
"""

# -- Required modules
import hashlib
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click
import numpy as np
import pandas as pd

import pyndisc
from pyndisc import (ConstructionError, DomainError, InfeasibleError,
                     ParseError, bounds, collisions, correlated, coverage,
                     data, schedule)

logger = logging.getLogger(__name__)

verbs = ('bounds', 'coverage', 'verify', 'simulate', 'optimize-q',
         'correlated', 'lpl-dual')
formulas = ('unidirectional', 'overheads', 'mutual-exclusive',
            'half-coverage', 'redundancy', 'failure-rate',
            'beta-for-failure-rate')
actions = ('build', 'verify', 'latency', 'assist', 'mirror', 'zetas',
           'union')


@dataclass(frozen=True)
class Command:
    """``Command`` class.

    Attributes
    ----------
    verb : str
        One of ``verbs``.
    inputs : tuple of str
        Spec files.
    out : str or None
        File receiving the machine block.
    flags : dict
        Verb options, already typed by click.
    """

    verb: str
    inputs: tuple = ()
    out: str = None
    flags: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Report:
    """Machine and human blocks of a verb with their provenance."""

    machine: str = ''
    human: str = ''
    provenance: dict = field(default_factory=dict)
    machineFormat: str = 'csv'

    def header(self):
        return ''.join(f'# {k}: {v}\n' for k, v in self.provenance.items())

    def machineText(self):
        if self.machineFormat == 'csv':
            return self.header() + self.machine
        return self.machine

    def humanText(self):
        return self.header() + self.human


@dataclass
class _Outcome:
    code: int = 0
    frame: pd.DataFrame = None
    header: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    json: str = None


def _digest(paths):
    sha = hashlib.sha256()
    for path in paths:
        sha.update(Path(path).read_bytes())
    return sha.hexdigest()


def _flag(command, name, required=True):
    value = command.flags.get(name)
    if value is None and required:
        raise DomainError(f'--{name.replace("_", "-")} is required by '
                          f'{command.verb}')
    return value


def _windowList(text):
    if text is None:
        return None
    return [int(v) for v in str(text).split(',') if v.strip()]


def _tickUs(command, spec=None):
    tickUs = command.flags.get('tick_us')
    if tickUs is None:
        tickUs = spec.tickUs if spec is not None else pyndisc.tickUs
    return tickUs


def _seconds(ticks, tickUs):
    return float(ticks) * tickUs * 1e-6


# -- Verb handlers

def _bounds(command):
    spec = data.parseSpec(command.inputs[0]) if command.inputs else None
    tickUs = _tickUs(command, spec)
    formula = command.flags['formula']
    known = {}
    if spec is not None:
        duty = schedule.dutyCycles(spec, command.flags.get('alpha') or 1)
        known = {'omega': spec.beacons.durations[0], 'beta': duty.beta,
                 'gamma': duty.gamma, 'eta': duty.eta, 'alpha': duty.alpha,
                 'tx': spec.overheads.tx, 'rx': spec.overheads.rx}
        if spec.reception.kind == 'periodic':
            known.update(period=spec.reception.period,
                         windows=spec.reception.durations)

    def get(name, default=None):
        value = command.flags.get(name)
        if value is None:
            value = known.get(name, default)
        if value is None:
            raise DomainError(f'--{name} is required by formula {formula}')
        return value

    out = _Outcome()
    if formula in ('failure-rate', 'beta-for-failure-rate'):
        Q, q, S = get('Q'), get('q', 0.0), get('S')
        if formula == 'failure-rate':
            beta = float(schedule.toRational(get('beta')))
            params = bounds.RedundancyParams(Q=Q, q=q, S=S)
            pf = bounds.failureRate(beta, params)
            pc = bounds.collisionProbability(beta, S)
        else:
            pf = get('pf')
            if q:
                beta, pc = bounds.betaForFailureRateNumeric(pf, Q, q, S)
            else:
                beta, pc = bounds.betaForFailureRate(pf, Q, S)
        out.frame = pd.DataFrame([{'formula': formula, 'Q': Q, 'q': q,
                                   'S': S, 'beta': beta, 'Pc': pc,
                                   'Pf': pf}])
        out.lines.append(f'{formula}: beta={beta:.6g} Pc={pc:.6g} '
                         f'Pf={pf:.6g}')
        return out

    if formula == 'unidirectional':
        report = bounds.boundUnidirectional(get('omega'), get('beta'),
                                            get('gamma'))
    elif formula == 'overheads':
        ovh = schedule.RadioOverheads(tx=get('tx', 0), rx=get('rx', 0))
        report = bounds.boundUnidirectionalOverheads(
            get('omega'), get('beta'), get('gamma'), ovh, get('windows'))
    elif formula == 'mutual-exclusive':
        report = bounds.boundMutualExclusive(get('omega'), get('alpha', 1),
                                             get('eta'))
    elif formula == 'half-coverage':
        report = bounds.boundHalfCoverage(get('period'), get('windows'),
                                          get('omega'), get('beta'))
    else:
        report = bounds.latencyWithRedundancy(get('Q'), get('period'),
                                              get('windows'), get('omega'),
                                              get('beta'))
    out.frame = pd.DataFrame([report.toRow(tickUs)])
    out.header['tick_us'] = tickUs
    extras = ''.join(f', {k}={v}' for k, v in report.extras.items())
    out.lines.append(f'{report.formula}: L = {float(report.latency):.6g} '
                     f'ticks ({report.seconds(tickUs):.6g} s){extras}')
    return out


def _coverage(command):
    spec = data.parseSpec(command.inputs[0])
    count = command.flags.get('count')
    covMap = coverage.coverageMap(spec.beacons, spec.reception, count,
                                  command.flags.get('predicate'),
                                  command.flags.get('horizon'))
    out = _Outcome(frame=coverage.coverageFrame(covMap))
    out.header.update(M=covMap.count, Lambda=covMap.totalCovered,
                      domain=covMap.domain)
    if spec.reception.kind == 'periodic':
        out.header['gamma'] = schedule.receptionDutyCycle(spec.reception)
    out.lines.append(f'{covMap.count} beacons cover {covMap.totalCovered} '
                     f'of {covMap.domain} offsets')
    return out


def _verify(command):
    spec = data.parseSpec(command.inputs[0])
    listener = data.parseSpec(command.inputs[1]) if len(command.inputs) > 1 \
        else spec
    predicate = command.flags.get('predicate')
    horizon = command.flags.get('horizon')
    beacons, reception = spec.beacons, listener.reception
    out = _Outcome()

    if reception.kind == 'aperiodic':
        if horizon is None:
            raise DomainError('--horizon is required by an aperiodic listener')
        ok, rep = coverage.aperiodicCoverageCheck(
            beacons, reception, horizon, command.flags.get('count'),
            predicate)
        out.frame = pd.DataFrame({'uncovered': rep.uncovered})
        out.header.update(M=rep.count, gamma=rep.gamma,
                          gamma_estimate=rep.gammaHat, windows=rep.windows)
        verdict = 'deterministic' if ok else 'not deterministic'
        out.lines.append(f'{verdict}, M={rep.count}, {rep.checkedTicks} '
                         f'contact ticks checked, gamma estimate '
                         f'{float(rep.gammaHat):.6g} (declared {rep.gamma})')
        if not ok:
            out.lines.append(f'uncovered ticks '
                             f'{coverage.tickRanges(rep.uncovered)}')
        out.code = 0 if ok else 2
        return out

    gamma = schedule.receptionDutyCycle(reception)
    count = command.flags.get('count')
    if count is None:
        count = coverage.minBeacons(gamma) if beacons.periodic \
            else beacons.count
    covMap = coverage.coverageMap(beacons, reception, count, predicate)
    ok, uncovered = coverage.checkDeterministic(covMap)
    disjoint = coverage.checkDisjoint(covMap)
    out.frame = coverage.coverageFrame(covMap)
    out.header.update(M=count, Lambda=covMap.totalCovered, gamma=gamma)
    if ok:
        out.lines.append(f'deterministic, '
                         f'{"disjoint" if disjoint else "overlapping"}, '
                         f'M={count}')
    else:
        out.lines.append(f'not deterministic, M={count}, uncovered ticks '
                         f'{coverage.tickRanges(uncovered)}')
        out.code = 2

    if beacons.periodic and listener is spec:
        duty = schedule.dutyCycles(spec)
        out.header.update(beta=duty.beta, eta=duty.eta)
        out.lines.append(f'beta={duty.beta} gamma={duty.gamma} '
                         f'eta={duty.eta}')
    if command.flags.get('latency') and beacons.periodic:
        tickUs = _tickUs(command, spec)
        worst = coverage.worstCaseLatency(
            spec, listener, predicate,
            resolution=command.flags.get('resolution') or 1, horizon=horizon)
        if not worst:
            out.lines.append(f'no discovery at sender phase '
                             f'{worst.senderPhase}, contact {worst.contact}')
            out.code = 2
        else:
            out.header['worst_case_latency'] = worst
            line = (f'worst-case latency {worst} ticks '
                    f'({_seconds(worst, tickUs):.6g} s)')
            beta = schedule.transmitDutyCycle(beacons)
            if beta > 0:
                bound = bounds.boundUnidirectional(beacons.durations[0],
                                                   beta, gamma)
                line += f', bound {float(bound.latency):.6g} ticks'
            out.lines.append(line)
    return out


def _simulate(command):
    specs = [data.parseSpec(p) for p in command.inputs]
    seed = command.flags.get('seed') or 0
    predicate = command.flags.get('predicate')
    horizon = command.flags.get('horizon')
    out = _Outcome()
    if command.flags.get('pairwise'):
        specE, specF = specs[0], specs[-1]
        event = collisions.simulatePairwise(
            specE, specF, phase=command.flags.get('phase'), horizon=horizon,
            rng=np.random.default_rng(seed), predicate=predicate)
        out.frame = pd.DataFrame([{
            'discovered': event is not None,
            'time': event.time if event else np.inf,
            'beacon': event.beacon if event else 0}])
        out.lines.append('no discovery' if event is None else
                         f'discovery by beacon {event.beacon} at tick '
                         f'{event.time}')
        return out

    S = command.flags.get('S') or max(len(specs), 2)
    if len(specs) == 1:
        specs = specs[0]
    if horizon is None:
        first = specs if isinstance(specs, schedule.ProtocolSpec) \
            else specs[0]
        period = first.reception.period
        horizon = schedule.lcm(first.beacons.period, period) + period
    quantiles = command.flags.get('quantiles')
    config = collisions.SimConfig(
        specs=specs, S=S, trials=command.flags.get('trials') or 1000,
        horizon=horizon, seed=seed, predicate=predicate,
        latencyTarget=command.flags.get('target'),
        workers=command.flags.get('workers') or 1,
        quantiles=tuple(quantiles) if quantiles else None)
    result = collisions.simulateNetwork(config)
    out.frame = result.perTrialFrame()
    out.header.update(S=S, trials=config.trials, horizon=horizon,
                      collision_rate=f'{result.empiricalCollisionRate:.6g}',
                      analytic_Pc=f'{result.analyticPc:.6g}',
                      failure_rate=f'{result.empiricalFailureRate:.6g}')
    out.lines.append(f'collision rate {result.empiricalCollisionRate:.6g} '
                     f'(analytic {result.analyticPc:.6g})')
    out.lines.append(f'failure rate {result.empiricalFailureRate:.6g}, '
                     f'discovered within horizon '
                     f'{result.discoveredWithinHorizon:.6g}')
    for q, value in result.latencyQuantiles:
        out.lines.append(f'latency quantile {q:g}: {value} ticks')
    return out


def _optimize(command):
    out = _Outcome()
    omega = _flag(command, 'omega')
    try:
        plan = bounds.optimizeRedundancy(
            omega, command.flags.get('alpha') or 1, _flag(command, 'eta'),
            _flag(command, 'pf'), _flag(command, 'S'),
            command.flags.get('qmax') or 6)
    except InfeasibleError as exc:
        out.frame = pd.DataFrame({'Q': list(exc.reasons),
                                  'reason': list(exc.reasons.values())})
        out.lines.append(f'infeasible: {exc}')
        out.lines.extend(f'Q={q}: {r}' for q, r in exc.reasons.items())
        out.code = 2
        return out
    tickUs = _tickUs(command)
    out.frame = plan.table
    out.header.update(Q=plan.Q, tick_us=tickUs)
    out.lines.append(f'Q*={plan.Q} beta={plan.beta:.6g} '
                     f'gamma={plan.gamma:.6g} L={plan.latency:.6g} ticks '
                     f'({_seconds(plan.latency, tickUs):.6g} s)')
    return out


def _correlated(command):
    action = command.flags['action']
    out = _Outcome()
    zeta = command.flags.get('zeta')
    if action == 'mirror':
        phi, period = _flag(command, 'phi'), _flag(command, 'period')
        mirrored = correlated.mirrorOffset(_flag(command, 'zeta'), phi,
                                           period)
        out.frame = pd.DataFrame([{'zeta': zeta, 'phi': phi,
                                   'period': period, 'mirror': mirrored}])
        out.lines.append(f'mirror of {phi} about {zeta} mod {period}: '
                         f'{mirrored}')
        return out

    spec = data.parseSpec(command.inputs[0])
    template = spec.reception
    predicate = command.flags.get('predicate')
    omega = command.flags.get('omega') or 1
    if action == 'zetas':
        zetas = correlated.feasibleZetas(template, predicate, omega)
        out.frame = pd.DataFrame({'zeta': zetas})
        out.lines.append(f'feasible zeta: {zetas}')
        return out

    if zeta is None:
        raise DomainError('--zeta is required by correlated ' + action)
    try:
        quad = correlated.buildCorrelatedQuadruple(template, zeta, predicate,
                                                   omega)
    except ConstructionError as exc:
        out.frame = pd.DataFrame({'uncovered': exc.residual})
        out.lines.append(f'{exc}; uncovered ticks '
                         f'{coverage.tickRanges(exc.residual)}')
        out.code = 2
        return out
    positions, _ = quad.positions()
    out.header.update(zeta=zeta, beacons_per_device=quad.beaconsPerDevice,
                      gaps=' '.join(map(str, quad.beacons.gaps)))

    if action == 'build':
        out.frame = pd.DataFrame({'position': positions})
        out.lines.append(f'{quad.beaconsPerDevice} beacons per device at '
                         f'{positions.tolist()}')
    elif action in ('verify', 'union'):
        report = correlated.verifyMutualExclusive(quad)
        out.frame = correlated.coverageUnion(quad)
        out.lines.append(f'{"verified" if report.ok else "not verified"}, '
                         f'{"disjoint" if report.disjoint else "overlapping"}'
                         f', {report.beaconsPerDevice} beacons per device')
        if not report.ok:
            out.lines.append(f'uncovered ticks '
                             f'{coverage.tickRanges(report.uncovered)}')
            out.code = 2
    elif action == 'latency':
        worst = correlated.oneWayLatencyCorrelated(quad)
        beta = schedule.transmitDutyCycle(quad.beacons)
        bound = bounds.boundHalfCoverage(template.period, template.durations,
                                         omega, beta)
        out.frame = pd.DataFrame([{'latency': float(worst),
                                   'bound': float(bound.latency)}])
        out.lines.append(f'one-way latency {float(worst):g} ticks, '
                         f'half-coverage bound {float(bound.latency):g}')
    else:
        phis = [command.flags['phi']] if command.flags.get('phi') is not None \
            else range(template.period)
        rows = []
        for phi in phis:
            oneWay, twoWay = correlated.simulateMutualAssistance(quad, phi)
            rows.append({'phi': phi, 'one_way': float(oneWay),
                         'two_way': float(twoWay),
                         'penalty': float(twoWay - oneWay)})
        out.frame = pd.DataFrame(rows)
        out.lines.append(f'max penalty {out.frame["penalty"].max():g} '
                         f'ticks, T_C={template.period}')
    return out


def _lplDual(command):
    spec = data.parseSpec(command.inputs[0])
    dual = schedule.lplDualize(spec)
    before, after = schedule.dutyCycles(spec), schedule.dutyCycles(dual)
    out = _Outcome(json=data.dumpSpec(dual))
    out.lines.append(f'beta {before.beta} -> {after.beta}, '
                     f'gamma {before.gamma} -> {after.gamma}')
    return out


_handlers = {'bounds': _bounds, 'coverage': _coverage, 'verify': _verify,
             'simulate': _simulate, 'optimize-q': _optimize,
             'correlated': _correlated, 'lpl-dual': _lplDual}


def run(command):
    """
    Execute a command.

    Parameters
    ----------
    command : Command

    Returns
    -------
    (int, Report)
        Exit code and report.
    """
    if command.verb not in _handlers:
        raise DomainError(f'unknown verb {command.verb!r}')
    provenance = {'pyndisc': pyndisc.__version__, 'verb': command.verb}
    if 'seed' in command.flags:
        provenance['seed'] = command.flags.get('seed') or 0
    try:
        if command.inputs:
            provenance['inputs'] = _digest(command.inputs)
        outcome = _handlers[command.verb](command)
    except (ParseError, DomainError, OSError) as exc:
        logger.debug('%s failed', command.verb, exc_info=True)
        return 1, Report(human=f'error: {exc}\n', provenance=provenance)
    human = ''.join(f'{line}\n' for line in outcome.lines)
    if outcome.json is not None:
        return outcome.code, Report(machine=outcome.json, human=human,
                                    provenance=provenance,
                                    machineFormat='json')
    machine = data.tableText(outcome.frame, outcome.header)
    return outcome.code, Report(machine=machine, human=human,
                                provenance=provenance)


# -- Command line

def _common(func):
    func = click.option('--tick-us', 'tick_us', type=int,
                        help='Tick length in microseconds.')(func)
    func = click.option('--out', type=click.Path(dir_okay=False),
                        help='Write the machine block to this file.')(func)
    func = click.option('--csv', 'csv', is_flag=True,
                        help='Print the machine block instead of text.')(func)
    func = click.option('-v', '--verbose', count=True,
                        help='Log to stderr (twice for debug).')(func)
    return func


_predicateOption = click.option(
    '--predicate', type=click.Choice([p.value for p in coverage.Predicate]),
    help='Reception predicate.')


def _finish(verb, inputs, flags):
    verbose = flags.pop('verbose', 0)
    if verbose:
        logging.basicConfig(stream=sys.stderr,
                            level=logging.DEBUG if verbose > 1
                            else logging.INFO)
    out = flags.pop('out', None)
    printCsv = flags.pop('csv', False)
    code, report = run(Command(verb=verb, inputs=tuple(inputs), out=out,
                               flags=flags))
    if out and code != 1:
        Path(out).write_text(report.machineText())
    if printCsv and code != 1:
        click.echo(report.machineText(), nl=False)
    else:
        click.echo(report.humanText(), nl=False, err=code == 1)
    return code


class _Rational(click.ParamType):
    name = 'rational'

    def convert(self, value, param, ctx):
        try:
            return schedule.toRational(value)
        except DomainError:
            self.fail(f'{value!r} is not a rational number', param, ctx)


RATIONAL = _Rational()


@click.group()
@click.version_option(pyndisc.__version__)
def cli():
    """Neighbor-discovery schedule toolkit."""


@cli.command('bounds')
@click.argument('spec', required=False, type=click.Path(exists=True))
@click.option('--formula', type=click.Choice(formulas),
              default='unidirectional', show_default=True)
@click.option('--omega', type=int, help='Beacon duration in ticks.')
@click.option('--beta', type=RATIONAL)
@click.option('--gamma', type=RATIONAL)
@click.option('--eta', type=RATIONAL)
@click.option('--alpha', type=RATIONAL)
@click.option('--period', type=int)
@click.option('--windows', type=_windowList,
              help='Comma-separated window durations.')
@click.option('--tx', type=int)
@click.option('--rx', type=int)
@click.option('-Q', '--redundancy', 'Q', type=int)
@click.option('-q', '--fraction', 'q', type=float)
@click.option('-S', '--devices', 'S', type=int)
@click.option('--pf', type=float, help='Target failure rate.')
@_common
def boundsCommand(spec, **flags):
    """Evaluate a closed-form bound."""
    return _finish('bounds', [spec] if spec else [], flags)


@cli.command('coverage')
@click.argument('spec', type=click.Path(exists=True))
@click.option('--count', type=int, help='Number of beacons M.')
@click.option('--horizon', type=int)
@_predicateOption
@_common
def coverageCommand(spec, **flags):
    """Coverage map of a spec as CSV."""
    return _finish('coverage', [spec], flags)


@cli.command('verify')
@click.argument('spec', type=click.Path(exists=True))
@click.argument('listener', required=False, type=click.Path(exists=True))
@click.option('--count', type=int)
@click.option('--horizon', type=int)
@click.option('--latency', is_flag=True,
              help='Also sweep the worst-case latency.')
@click.option('--resolution', type=int, help='Sweep step in ticks.')
@_predicateOption
@_common
def verifyCommand(spec, listener, **flags):
    """Check deterministic and disjoint coverage."""
    return _finish('verify', [spec] + ([listener] if listener else []),
                   flags)


@cli.command('simulate')
@click.argument('specs', nargs=-1, required=True,
                type=click.Path(exists=True))
@click.option('-S', '--devices', 'S', type=int)
@click.option('--trials', type=int)
@click.option('--horizon', type=int)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--workers', type=int)
@click.option('--target', type=int, help='Latency target in ticks.')
@click.option('--quantiles', type=float, multiple=True)
@click.option('--pairwise', is_flag=True)
@click.option('--phase', type=int)
@_predicateOption
@_common
def simulateCommand(specs, **flags):
    """Monte Carlo collision and latency simulation."""
    return _finish('simulate', list(specs), flags)


@cli.command('optimize-q')
@click.option('--omega', type=int, required=True)
@click.option('--alpha', type=RATIONAL)
@click.option('--eta', type=RATIONAL, required=True)
@click.option('--pf', type=float, required=True)
@click.option('-S', '--devices', 'S', type=int, required=True)
@click.option('--qmax', type=int)
@_common
def optimizeCommand(**flags):
    """Choose the redundancy Q under a failure-rate target."""
    return _finish('optimize-q', [], flags)


@cli.command('correlated')
@click.argument('spec', required=False, type=click.Path(exists=True))
@click.option('--action', type=click.Choice(actions), default='verify',
              show_default=True)
@click.option('--zeta', type=int)
@click.option('--phi', type=int)
@click.option('--period', type=int)
@click.option('--omega', type=int)
@_predicateOption
@_common
def correlatedCommand(spec, **flags):
    """Correlated mutual exclusive schedules."""
    if spec is None and flags['action'] != 'mirror':
        raise click.UsageError('a template spec is required')
    return _finish('correlated', [spec] if spec else [], flags)


@cli.command('lpl-dual')
@click.argument('spec', type=click.Path(exists=True))
@_common
def lplDualCommand(spec, **flags):
    """Swap beacons and reception windows."""
    return _finish('lpl-dual', [spec], flags)


def main(argv=None):
    """Console script for pyndisc; returns the exit code."""
    try:
        code = cli.main(args=argv, prog_name='pyndisc', standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == '__main__':
    sys.exit(main())  # pragma: no cover


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
