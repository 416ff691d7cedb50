"""Shared fixtures: schedule spec documents used across the test modules."""

import json

import pytest


def specDocument(durations, gaps, period, windows, periodic=True, name='',
                 **overheads):
    return {'name': name, 'tick_us': 1,
            'beacons': {'durations': durations, 'gaps': gaps,
                        'periodic': periodic},
            'reception': {'period': period,
                          'windows': [{'offset': o, 'duration': d}
                                      for o, d in windows]},
            'overheads': {'tx': overheads.get('tx', 0),
                          'rx': overheads.get('rx', 0),
                          'tx_rx': 0, 'rx_tx': 0}}


@pytest.fixture
def writeSpec(tmp_path):
    """Write a spec document to a JSON file and return its path."""
    def write(document, name='spec.json'):
        path = tmp_path / name
        path.write_text(json.dumps(document, indent=2))
        return str(path)
    return write


@pytest.fixture
def tilingFile(writeSpec):
    """Point beacons every 2 ticks, one window (0, 2) in T_C = 10."""
    return writeSpec(specDocument([0], [2], 10, [(0, 2)], name='tiling'),
                     'tiling.json')


@pytest.fixture
def finiteFile(writeSpec):
    """Three point beacons, leaving [2, 6) uncovered."""
    return writeSpec(specDocument([0, 0, 0], [2, 2, 2], 10, [(0, 2)],
                                  periodic=False, name='three'),
                     'three.json')


@pytest.fixture
def unitFile(writeSpec):
    """Beacons of 1 tick every 20 ticks, one window (0, 20) in T_C = 100."""
    return writeSpec(specDocument([1], [20], 100, [(0, 20)], name='unit'),
                     'unit.json')


@pytest.fixture
def templateFile(writeSpec):
    """Correlated template: window (0, 2) in T_C = 8."""
    return writeSpec(specDocument([1], [4], 8, [(0, 2)], name='template'),
                     'template.json')


@pytest.fixture
def networkFile(writeSpec):
    """Beacons of 20 ticks every 1000 ticks (beta = 0.02), always listening."""
    return writeSpec(specDocument([20], [1000], 1000, [(0, 1000)],
                                  name='network'), 'network.json')
