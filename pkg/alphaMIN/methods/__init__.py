#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Algorithms: MIN, exact independence numbers, bounds, and chain checks."""

from alphaMIN.methods import bounds  # noqa F401
from alphaMIN.methods import chain  # noqa F401
from alphaMIN.methods import exact  # noqa F401
from alphaMIN.methods import min_greedy  # noqa F401
