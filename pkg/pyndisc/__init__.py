#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Top-level package for pyNDisc package."""

import logging

__all__ = ['schedule', 'coverage', 'bounds', 'collisions', 'correlated',
           'data', 'cli']
__author__ = """pyNDisc developers"""
__email__ = 'pyndisc@users.noreply.github.com'
__version__ = '0.1.0'

# Global variables
tickUs = 1  # default base unit of one tick, in microseconds
betaCap = 1.0  # largest transmit duty-cycle accepted from the inversions
defaultPredicate = 'point'
defaultQuantiles = (0.5, 0.9, 0.99, 1.0)
csvFloatFormat = '%.12g'

logging.getLogger(__name__).addHandler(logging.NullHandler())


class PyNDiscError(Exception):
    """Base class of every error raised by the package."""


class DomainError(PyNDiscError, ValueError):
    """An input lies outside the domain of the requested operation."""


class InfeasibleError(PyNDiscError):
    """No candidate satisfies the constraints.

    Attributes
    ----------
    reasons : dict
        Maps every rejected candidate to the reason of its rejection.
    """

    def __init__(self, message, reasons=None):
        super().__init__(message)
        self.reasons = dict(reasons or {})


class ConstructionError(PyNDiscError):
    """A schedule could not be constructed.

    Attributes
    ----------
    residual : list of int
        Offsets left uncovered by the best attempt.
    """

    def __init__(self, message, residual=()):
        super().__init__(message)
        self.residual = list(residual)


class ParseError(PyNDiscError, ValueError):
    """A schedule spec document is malformed or violates an invariant.

    Attributes
    ----------
    field : str or None
        Offending field, if known.
    line : int or None
        Line of the document, if known.
    violations : list of str
        Diagnostics of ``schedule.validateSchedule``, verbatim.
    """

    def __init__(self, message, field=None, line=None, violations=()):
        super().__init__(message)
        self.field = field
        self.line = line
        self.violations = list(violations)
