#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Graph substrate for alphaMIN: representation, file formats, generators."""

from alphaMIN.graphs import core  # noqa F401
from alphaMIN.graphs import generators  # noqa F401
from alphaMIN.graphs import io  # noqa F401
from alphaMIN.graphs.core import Graph  # noqa F401
from alphaMIN.graphs.core import build_graph  # noqa F401
