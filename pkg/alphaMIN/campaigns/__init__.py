#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Experiment campaigns and the command-line front end."""

from alphaMIN.campaigns import campaign  # noqa F401
from alphaMIN.campaigns import cli  # noqa F401
