#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Core library for alphaMIN.

This is a library of graph routines for the MIN greedy independent-set
algorithm, exact independence numbers, closed-form lower bounds on the
independence number, and a harness that checks each inequality used to derive
those bounds against exact optima.

"""

try:
    from importlib import metadata
except ImportError:
    import importlib_metadata as metadata

from alphaMIN import errors  # noqa F401
from alphaMIN import graphs  # noqa F401
from alphaMIN import methods  # noqa F401
from alphaMIN import campaigns  # noqa F401

__version__ = metadata.version('alphaMIN')
