"""Tests for the `pyndisc` command line."""

import hashlib
import json
from pathlib import Path
from unittest import mock

import pytest

import pyndisc
from pyndisc import coverage, data
from pyndisc.cli import Command, main, run
from tests.conftest import specDocument


@pytest.fixture
def driftFile(writeSpec):
    """Point-like beacons every tick against drifting windows."""
    document = specDocument([1], [1], 1, [], name='drift')
    document['reception'] = {'generator': 'drift', 'gamma': '1/4'}
    return writeSpec(document, 'drift.json')


def invoke(capsys, *args):
    code = main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_tiling(capsys, tilingFile):
    code, out, _ = invoke(capsys, 'verify', tilingFile)
    assert code == 0
    assert 'deterministic, disjoint, M=5' in out
    assert '# verb: verify' in out
    digest = hashlib.sha256(Path(tilingFile).read_bytes()).hexdigest()
    assert f'# inputs: {digest}' in out


def test_verify_reports_uncovered_ticks(capsys, finiteFile, tilingFile):
    code, out, _ = invoke(capsys, 'verify', finiteFile)
    assert code == 2
    assert 'not deterministic, M=3, uncovered ticks [(2, 6)]' in out
    code, out, _ = invoke(capsys, 'verify', tilingFile, '--count', 6)
    assert code == 0
    assert 'deterministic, overlapping, M=6' in out


def test_verify_with_latency(capsys, unitFile):
    code, out, _ = invoke(capsys, 'verify', unitFile, '--latency')
    assert code == 0
    assert 'deterministic, disjoint, M=5' in out
    assert 'worst-case latency 101 ticks' in out
    assert 'bound 100 ticks' in out


def test_verify_aperiodic_listener(capsys, driftFile):
    code, out, _ = invoke(capsys, 'verify', driftFile, '--horizon', 1000,
                          '--count', 4)
    assert code == 0
    assert out.splitlines()[-1].startswith('deterministic, M=4')
    code, out, _ = invoke(capsys, 'verify', driftFile, '--horizon', 1000,
                          '--count', 3)
    assert code == 2
    code, _, err = invoke(capsys, 'verify', driftFile)
    assert code == 1
    assert '--horizon' in err


def test_coverage_csv(capsys, tilingFile):
    code, out, _ = invoke(capsys, 'coverage', tilingFile, '--csv')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f'# pyndisc: {pyndisc.__version__}'
    assert '# M: 5' in lines
    assert '# gamma: 1/5' in lines
    table = [line for line in lines if not line.startswith('#')]
    assert table[0] == 'tick,multiplicity'
    assert len(table) == 11


def test_out_file(capsys, tmp_path, tilingFile):
    path = tmp_path / 'map.csv'
    code, out, _ = invoke(capsys, 'coverage', tilingFile, '--count', 3,
                          '--out', path)
    assert code == 0
    assert '3 beacons cover 6 of 10 offsets' in out
    assert path.read_text().splitlines()[-1] == '9,1'


def test_bounds_from_flags(capsys):
    code, out, _ = invoke(capsys, 'bounds', '--omega', 36, '--beta', '1/50',
                          '--gamma', '1/50')
    assert code == 0
    assert 'unidirectional: L = 90000 ticks (0.09 s)' in out
    code, out, _ = invoke(capsys, 'bounds', '--omega', 36, '--beta', '1/50',
                          '--gamma', '1/50', '--csv')
    assert out.splitlines()[-2:] == [
        'formula,omega,beta,gamma,L_ticks,L_seconds',
        'unidirectional,36,1/50,1/50,90000,0.09']


def test_bounds_formulas(capsys, unitFile):
    code, out, _ = invoke(capsys, 'bounds', '--formula', 'mutual-exclusive',
                          '--omega', 1, '--eta', '3/10')
    assert code == 0
    assert 'L = 22.5 ticks' in out
    assert 'branch=floor' in out
    code, out, _ = invoke(capsys, 'bounds', unitFile, '--formula',
                          'half-coverage')
    assert 'half-coverage: L = 60 ticks' in out
    code, out, _ = invoke(capsys, 'bounds', '--formula',
                          'beta-for-failure-rate', '--pf', 0.0005, '-Q', 3,
                          '-S', 3)
    assert code == 0
    assert 'Pc=0.07937' in out


def test_bounds_missing_input(capsys):
    code, out, err = invoke(capsys, 'bounds', '--omega', 36, '--gamma',
                            '1/50')
    assert code == 1
    assert out == ''
    assert 'error: --beta is required' in err


def test_optimize(capsys):
    code, out, _ = invoke(capsys, 'optimize-q', '--omega', 36, '--eta', 0.05,
                          '--pf', 0.0005, '-S', 3)
    assert code == 0
    assert 'Q*=2' in out
    code, out, _ = invoke(capsys, 'optimize-q', '--omega', 36, '--eta',
                          0.0001, '--pf', 0.0005, '-S', 3)
    assert code == 2
    assert 'infeasible' in out


def test_correlated_actions(capsys, templateFile):
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--action',
                          'build', '--zeta', 4)
    assert code == 0
    assert '2 beacons per device at [0, 4]' in out
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--zeta', 4)
    assert 'verified, disjoint, 2 beacons per device' in out
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--action',
                          'zetas')
    assert 'feasible zeta: [0, 2, 4, 6]' in out
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--action',
                          'latency', '--zeta', 4)
    assert 'one-way latency 9 ticks, half-coverage bound 8' in out
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--action',
                          'assist', '--zeta', 4)
    assert 'max penalty 3 ticks, T_C=8' in out


def test_correlated_failures(capsys, templateFile):
    code, out, _ = invoke(capsys, 'correlated', templateFile, '--action',
                          'build', '--zeta', 1)
    assert code == 2
    assert 'uncovered ticks [(4, 6)]' in out
    code, _, err = invoke(capsys, 'correlated', '--action', 'build')
    assert code == 1
    assert 'template spec is required' in err


def test_mirror_needs_no_spec(capsys):
    code, out, _ = invoke(capsys, 'correlated', '--action', 'mirror',
                          '--zeta', 10, '--phi', 4, '--period', 100)
    assert code == 0
    assert 'mirror of 4 about 10 mod 100: 16' in out


def test_lpl_dual(capsys, tmp_path, unitFile):
    code, out, _ = invoke(capsys, 'lpl-dual', unitFile, '--csv')
    assert code == 0
    document = json.loads(out)
    assert document['name'] == 'unit:dual'
    assert document['beacons']['durations'] == [20]
    assert document['reception'] == {'period': 20, 'windows': [
        {'offset': 0, 'duration': 1}]}
    path = tmp_path / 'dual.json'
    code, out, _ = invoke(capsys, 'lpl-dual', unitFile, '--out', path)
    assert 'beta 1/20 -> 1/5, gamma 1/5 -> 1/20' in out
    assert data.parseSpec(path).name == 'unit:dual'


def test_simulate_is_reproducible(capsys, tmp_path, networkFile):
    outputs = []
    for name in ('a.csv', 'b.csv'):
        path = tmp_path / name
        code, out, _ = invoke(capsys, 'simulate', networkFile, '-S', 3,
                              '--trials', 200, '--seed', 11, '--out', path)
        assert code == 0
        assert 'collision rate' in out
        outputs.append(path.read_text())
    assert outputs[0] == outputs[1]
    assert '# seed: 11' in outputs[0]


def test_simulate_pairwise(capsys, tilingFile):
    code, out, _ = invoke(capsys, 'simulate', tilingFile, '--pairwise',
                          '--phase', 0)
    assert code == 0
    assert 'discovery by beacon 1 at tick 0' in out


def test_usage_and_parse_errors(capsys, tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"beacons": ')
    code, _, err = invoke(capsys, 'verify', broken)
    assert code == 1
    assert err.startswith('# pyndisc')
    assert 'error:' in err
    code, _, _ = invoke(capsys, 'verify', tmp_path / 'missing.json')
    assert code == 1
    code, _, _ = invoke(capsys, 'teleport')
    assert code == 1


def test_run_rejects_unknown_verbs():
    with pytest.raises(pyndisc.DomainError):
        run(Command(verb='teleport'))


def test_run_returns_a_report(tilingFile):
    code, report = run(Command(verb='verify', inputs=(tilingFile,)))
    assert code == 0
    assert report.provenance['verb'] == 'verify'
    assert report.machineText().startswith(report.header())
    assert 'tick,multiplicity' in report.machine


@pytest.mark.parametrize('args, target', [
    (['coverage', '{tiling}'], 'pyndisc.coverage.coverageMap'),
    (['coverage', '{tiling}'], 'pyndisc.coverage.coverageFrame'),
    (['verify', '{tiling}'], 'pyndisc.coverage.checkDeterministic'),
    (['verify', '{tiling}'], 'pyndisc.coverage.checkDisjoint'),
    (['verify', '{tiling}'], 'pyndisc.coverage.minBeacons'),
    (['verify', '{unit}', '--latency'], 'pyndisc.coverage.worstCaseLatency'),
    (['verify', '{drift}', '--horizon', '1000'],
     'pyndisc.coverage.aperiodicCoverageCheck'),
    (['verify', '{unit}'], 'pyndisc.schedule.dutyCycles'),
    (['verify', '{unit}'], 'pyndisc.data.validateSchedule'),
    (['verify', '{unit}'], 'pyndisc.data.tableText'),
    (['bounds', '{unit}'], 'pyndisc.schedule.transmitDutyCycle'),
    (['bounds', '{unit}'], 'pyndisc.schedule.receptionDutyCycle'),
    (['bounds', '{unit}'], 'pyndisc.schedule.combinedDutyCycle'),
    (['bounds', '{unit}'], 'pyndisc.bounds.boundUnidirectional'),
    (['bounds', '{unit}', '--formula', 'overheads'],
     'pyndisc.bounds.boundUnidirectionalOverheads'),
    (['bounds', '{unit}', '--formula', 'mutual-exclusive'],
     'pyndisc.bounds.boundMutualExclusive'),
    (['bounds', '{unit}', '--formula', 'half-coverage'],
     'pyndisc.bounds.boundHalfCoverage'),
    (['bounds', '{unit}', '--formula', 'redundancy', '-Q', '2'],
     'pyndisc.bounds.latencyWithRedundancy'),
    (['bounds', '--formula', 'failure-rate', '--beta', '0.04', '-Q', '3',
      '-S', '3'], 'pyndisc.bounds.failureRate'),
    (['bounds', '--formula', 'failure-rate', '--beta', '0.04', '-Q', '3',
      '-S', '3'], 'pyndisc.bounds.collisionProbability'),
    (['bounds', '--formula', 'beta-for-failure-rate', '--pf', '0.0005',
      '-Q', '3', '-S', '3'], 'pyndisc.bounds.betaForFailureRate'),
    (['bounds', '--formula', 'beta-for-failure-rate', '--pf', '0.0005',
      '-Q', '3', '-q', '0.5', '-S', '3'],
     'pyndisc.bounds.betaForFailureRateNumeric'),
    (['optimize-q', '--omega', '36', '--eta', '0.05', '--pf', '0.0005',
      '-S', '3'], 'pyndisc.bounds.optimizeRedundancy'),
    (['simulate', '{network}', '-S', '3', '--trials', '20'],
     'pyndisc.collisions.simulateNetwork'),
    (['simulate', '{network}', '-S', '3', '--trials', '20'],
     'pyndisc.collisions.latencyQuantile'),
    (['simulate', '{tiling}', '--pairwise'],
     'pyndisc.collisions.simulatePairwise'),
    (['correlated', '{template}', '--action', 'build', '--zeta', '4'],
     'pyndisc.correlated.buildCorrelatedQuadruple'),
    (['correlated', '{template}', '--zeta', '4'],
     'pyndisc.correlated.verifyMutualExclusive'),
    (['correlated', '{template}', '--action', 'union', '--zeta', '4'],
     'pyndisc.correlated.coverageUnion'),
    (['correlated', '{template}', '--action', 'latency', '--zeta', '4'],
     'pyndisc.correlated.oneWayLatencyCorrelated'),
    (['correlated', '{template}', '--action', 'assist', '--zeta', '4',
      '--phi', '2'], 'pyndisc.correlated.simulateMutualAssistance'),
    (['correlated', '{template}', '--action', 'zetas'],
     'pyndisc.correlated.feasibleZetas'),
    (['correlated', '--action', 'mirror', '--zeta', '1', '--phi', '2',
      '--period', '8'], 'pyndisc.correlated.mirrorOffset'),
    (['lpl-dual', '{unit}'], 'pyndisc.schedule.lplDualize'),
    (['lpl-dual', '{unit}'], 'pyndisc.data.dumpSpec'),
])
def test_verbs_reach_the_library(capsys, tilingFile, unitFile, templateFile,
                                 networkFile, driftFile, args, target):
    files = {'tiling': tilingFile, 'unit': unitFile,
             'template': templateFile, 'network': networkFile,
             'drift': driftFile}
    argv = [a.format(**files) for a in args]
    module, name = target.rsplit('.', 1)
    original = getattr(__import__(module, fromlist=[name]), name)
    with mock.patch(target, wraps=original) as spy:
        code = main(argv)
    capsys.readouterr()
    assert code in (0, 2)
    assert spy.called


def test_checks_match_the_library(tilingFile):
    spec = data.parseSpec(tilingFile)
    ok, _ = coverage.checkDeterministic(
        coverage.coverageMap(spec.beacons, spec.reception))
    code, _ = run(Command(verb='verify', inputs=(tilingFile,)))
    assert ok and code == 0
