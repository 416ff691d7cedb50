"""
``data.py`` module.

Contains the loading and emission of schedule spec documents (JSON) and the
writers of the CSV tables produced by the package.
"""

# -- Required modules
import io
import json
import logging
from pathlib import Path

import pyndisc
from pyndisc import DomainError, ParseError
from pyndisc.schedule import (
    BeaconSchedule, ProtocolSpec, RadioOverheads, ReceptionSchedule,
    generatorPresets, validateSchedule)

logger = logging.getLogger(__name__)

_overheadKeys = {'tx': 'tx', 'rx': 'rx', 'tx_rx': 'txRx', 'rx_tx': 'rxTx'}


def _require(node, key, where):
    if not isinstance(node, dict):
        raise ParseError(f'{where} must be an object', field=where)
    if key not in node:
        raise ParseError(f'missing field {where}.{key}',
                         field=f'{where}.{key}')
    return node[key]


def _integer(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f'{where} must be an integer number of ticks',
                         field=where)
    return value


def _integers(values, where):
    if not isinstance(values, list):
        raise ParseError(f'{where} must be a list', field=where)
    return [_integer(v, f'{where}[{i}]') for i, v in enumerate(values)]


def _beacons(node):
    where = 'beacons'
    durations = _integers(_require(node, 'durations', where),
                          'beacons.durations')
    gaps = _integers(_require(node, 'gaps', where), 'beacons.gaps')
    periodic = node.get('periodic', True)
    if not isinstance(periodic, bool):
        raise ParseError('beacons.periodic must be true or false',
                         field='beacons.periodic')
    offset = _integer(node.get('offset', 0), 'beacons.offset')
    return BeaconSchedule(durations=durations, gaps=gaps, periodic=periodic,
                          offset=offset)


def _reception(node):
    where = 'reception'
    if not isinstance(node, dict):
        raise ParseError('reception must be an object', field=where)
    if 'generator' in node:
        name = node['generator']
        if name not in generatorPresets:
            raise ParseError(f'unknown generator preset {name!r}',
                             field='reception.generator')
        gamma = _require(node, 'gamma', where)
        if not isinstance(gamma, str):
            raise ParseError('reception.gamma must be a rational string',
                             field='reception.gamma')
        unit = _integer(node.get('unit', 1), 'reception.unit')
        try:
            generator = generatorPresets[name](gamma, unit)
        except DomainError as exc:
            raise ParseError(str(exc), field='reception.gamma') from exc
        return ReceptionSchedule(generator=generator, gamma=gamma)

    period = _integer(_require(node, 'period', where), 'reception.period')
    windows = _require(node, 'windows', where)
    if not isinstance(windows, list):
        raise ParseError('reception.windows must be a list',
                         field='reception.windows')
    pairs = []
    for i, window in enumerate(windows):
        at = f'reception.windows[{i}]'
        pairs.append((_integer(_require(window, 'offset', at),
                               f'{at}.offset'),
                      _integer(_require(window, 'duration', at),
                               f'{at}.duration')))
    return ReceptionSchedule(period=period, windows=pairs)


def loadSpec(document):
    """
    Build a ``ProtocolSpec`` from a decoded spec document.

    Parameters
    ----------
    document : dict

    Returns
    -------
    ProtocolSpec

    Raises
    ------
    ParseError
        If a field is missing or mistyped, or if the spec violates an
        invariant; the diagnostics of ``validateSchedule`` are carried in
        ``violations``.
    """
    if not isinstance(document, dict):
        raise ParseError('a spec document must be a JSON object')
    overheads = document.get('overheads', {})
    if not isinstance(overheads, dict):
        raise ParseError('overheads must be an object', field='overheads')
    unknown = set(overheads) - set(_overheadKeys)
    if unknown:
        raise ParseError(f'unknown overhead {sorted(unknown)[0]!r}',
                         field='overheads')
    name = document.get('name', '')
    if not isinstance(name, str):
        raise ParseError('name must be a string', field='name')
    spec = ProtocolSpec(
        beacons=_beacons(_require(document, 'beacons', 'spec')),
        reception=_reception(_require(document, 'reception', 'spec')),
        overheads=RadioOverheads(**{
            attr: _integer(overheads.get(key, 0), f'overheads.{key}')
            for key, attr in _overheadKeys.items()}),
        name=name,
        tickUs=_integer(document.get('tick_us', pyndisc.tickUs), 'tick_us'))
    violations = validateSchedule(spec)
    if violations:
        raise ParseError('; '.join(violations), violations=violations)
    return spec


def parseSpec(path):
    """
    Read a JSON spec file.

    Examples
    --------
    >>> spec = parseSpec('tiling.json')
    >>> spec.beacons.gaps, spec.reception.windows
    ((2,), ((0, 2),))
    """
    text = Path(path).read_text()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f'{path}: {exc.msg}', line=exc.lineno) from exc
    logger.debug('parsing spec %s', path)
    return loadSpec(document)


def emitSpec(spec):
    """Spec document (dict) of a ``ProtocolSpec``; inverse of ``loadSpec``."""
    b, c = spec.beacons, spec.reception
    beacons = {'durations': list(b.durations), 'gaps': list(b.gaps),
               'periodic': b.periodic}
    if b.offset:
        beacons['offset'] = b.offset
    if c.kind == 'periodic':
        reception = {'period': c.period,
                     'windows': [{'offset': o, 'duration': d}
                                 for o, d in c.windows]}
    else:
        names = {cls: name for name, cls in generatorPresets.items()}
        if type(c.generator) not in names:
            raise DomainError('only preset generators can be written to a '
                              'spec document')
        reception = {'generator': names[type(c.generator)],
                     'gamma': str(c.gamma)}
        if c.generator.unit != 1:
            reception['unit'] = c.generator.unit
    return {'name': spec.name, 'tick_us': spec.tickUs, 'beacons': beacons,
            'reception': reception,
            'overheads': {key: getattr(spec.overheads, attr)
                          for key, attr in _overheadKeys.items()}}


def dumpSpec(spec, path=None):
    """JSON text of a spec, also written to ``path`` if given."""
    text = json.dumps(emitSpec(spec), indent=2) + '\n'
    if path is not None:
        Path(path).write_text(text)
    return text


def tableText(frame, header=None):
    """
    CSV text of a table preceded by ``# key: value`` comment lines.

    Parameters
    ----------
    frame : pandas.DataFrame
    header : dict, optional
        Comment lines, in insertion order.

    Returns
    -------
    str
    """
    buffer = io.StringIO()
    for key, value in (header or {}).items():
        buffer.write(f'# {key}: {value}\n')
    frame.to_csv(buffer, index=False, float_format=pyndisc.csvFloatFormat)
    return buffer.getvalue()


def writeTable(frame, path, header=None):
    """Write ``tableText(frame, header)`` to ``path``."""
    Path(path).write_text(tableText(frame, header))


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
