#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Full license can be found in LICENSE
# ----------------------------------------------------------------------------
"""Read and write graphs in DIMACS edge format and plain edge-list format.

Note
----
DIMACS documents number vertices from 1; edge lists and all in-memory graphs
number them from 0.  The conversion happens only in this module.

"""

import dataclasses
import os

import pysat

from alphaMIN.errors import MalformedLineError
from alphaMIN.errors import MissingHeaderError
from alphaMIN.errors import SelfLoopError
from alphaMIN.errors import VertexOutOfRangeError
from alphaMIN.graphs.core import build_graph

formats = ['dimacs', 'edgelist']

# Largest vertex count a document may declare or imply
MAX_VERTICES = 10 ** 7


@dataclasses.dataclass(frozen=True)
class GraphDocument(object):
    """Graph plus the text that travelled with it.

    Parameters
    ----------
    graph : Graph
        Parsed graph
    comments : tuple of str
        Comment lines, without the comment marker
    source_format : str
        One of 'dimacs' or 'edgelist'
    warnings : tuple of str
        Non-fatal inconsistencies found while parsing (default=())

    """

    graph: object
    comments: tuple = ()
    source_format: str = 'dimacs'
    warnings: tuple = ()


def _as_text(text):
    """Decode a byte stream, replacing undecodable bytes."""
    if isinstance(text, (bytes, bytearray)):
        return bytes(text).decode('utf-8', errors='replace')
    return text


def _parse_int(token, lineno, line):
    """Convert a token to int, raising `MalformedLineError` on failure."""
    try:
        return int(token)
    except ValueError:
        raise MalformedLineError(lineno, line)


def _checked_count(count, lineno, line):
    """Return a declared vertex count if it lies in [0, `MAX_VERTICES`]."""
    if count < 0 or count > MAX_VERTICES:
        raise MalformedLineError(lineno, line)
    return count


def _checked_graph(n, edges, lines):
    """Build a graph, attaching the source line to any vertex error.

    Parameters
    ----------
    n : int
        Number of vertices
    edges : list of tuple
        0-based vertex pairs
    lines : list of int
        Source line number of each pair

    Returns
    -------
    graph : Graph
        Parsed graph
    warns : list of str
        A note on collapsed duplicate edges, if there were any

    """
    limit = min(n, MAX_VERTICES)
    for (u, v), lineno in zip(edges, lines):
        for vert in (u, v):
            if vert < 0 or vert >= limit:
                raise VertexOutOfRangeError(vert, limit, lineno=lineno)
        if u == v:
            raise SelfLoopError(u, lineno=lineno)

    graph = build_graph(n, edges)

    warns = list()
    if len(edges) > graph.m:
        warns.append('collapsed {:d} duplicate edge(s)'.format(
            len(edges) - graph.m))
        pysat.logger.warning(warns[-1])

    return graph, warns


def parse_dimacs(text):
    """Parse a DIMACS edge-format document.

    Parameters
    ----------
    text : bytes or str
        Document with `c` comment lines, one `p edge N M` header, and
        `e u v` edge lines using 1-based vertex ids

    Returns
    -------
    GraphDocument
        Document whose `warnings` record collapsed duplicate edges and a
        header edge count that differs from the number of distinct edges

    Raises
    ------
    MissingHeaderError
        If an edge line precedes the header or no header is present
    MalformedLineError
        If a line cannot be parsed or the header declares more than
        `MAX_VERTICES` vertices
    VertexOutOfRangeError
        If an endpoint lies outside 1 to N
    SelfLoopError
        If an edge joins a vertex to itself

    """
    comments = list()
    edges = list()
    lines = list()
    header = None

    for lineno, raw in enumerate(_as_text(text).splitlines(), start=1):
        line = raw.strip()
        if len(line) == 0:
            continue

        tokens = line.split()
        if tokens[0] == 'c':
            comments.append(line[1:].strip())
        elif tokens[0] == 'p':
            if (header is not None or len(tokens) != 4
                    or tokens[1] not in ('edge', 'col')):
                raise MalformedLineError(lineno, raw)
            header = (_checked_count(_parse_int(tokens[2], lineno, raw),
                                     lineno, raw),
                      _parse_int(tokens[3], lineno, raw))
            if header[1] < 0:
                raise MalformedLineError(lineno, raw)
        elif tokens[0] == 'e':
            if header is None:
                raise MissingHeaderError(
                    'edge on line {:d} precedes the `p edge` header'.format(
                        lineno))
            if len(tokens) != 3:
                raise MalformedLineError(lineno, raw)
            edges.append((_parse_int(tokens[1], lineno, raw) - 1,
                          _parse_int(tokens[2], lineno, raw) - 1))
            lines.append(lineno)
        else:
            raise MalformedLineError(lineno, raw)

    if header is None:
        raise MissingHeaderError('no `p edge N M` header found')

    graph, warns = _checked_graph(header[0], edges, lines)

    if graph.m != header[1]:
        warns.append(' '.join(('header declares {:d} edges,'.format(header[1]),
                               'found {:d} distinct edges'.format(graph.m))))
        pysat.logger.warning(warns[-1])

    return GraphDocument(graph, tuple(comments), 'dimacs', tuple(warns))


def serialize_dimacs(doc):
    """Write a document in DIMACS edge format.

    Parameters
    ----------
    doc : GraphDocument
        Document to serialize

    Returns
    -------
    bytes
        Comment lines, the `p edge n m` header, and 1-based edges ordered by
        (u, v)

    """
    graph = doc.graph
    out = [' '.join(('c', comment)).rstrip() + '\n'
           for comment in doc.comments]
    out.append('p edge {:d} {:d}\n'.format(graph.n, graph.m))
    out.extend(['e {:d} {:d}\n'.format(u + 1, v + 1)
                for u, v in graph.edges()])

    return ''.join(out).encode('utf-8')


def parse_edgelist(text):
    """Parse a 0-based edge list.

    Parameters
    ----------
    text : bytes or str
        Document of `u v` lines; `#` starts a comment, and an optional first
        data line `n N` fixes the vertex count

    Returns
    -------
    GraphDocument
        Document whose `warnings` record collapsed duplicate edges

    Raises
    ------
    MalformedLineError
        If a line is not a pair of integers, or is a misplaced `n N` line or
        one declaring more than `MAX_VERTICES` vertices
    VertexOutOfRangeError
        If an endpoint is negative, not below the declared count, or not
        below `MAX_VERTICES`
    SelfLoopError
        If an edge joins a vertex to itself

    Note
    ----
    Without an `n N` line, the vertex count is one more than the largest
    vertex id, or zero if there are no edges.

    """
    comments = list()
    edges = list()
    lines = list()
    n_override = None

    for lineno, raw in enumerate(_as_text(text).splitlines(), start=1):
        data, hsh, comment = raw.partition('#')
        if hsh:
            comments.append(comment.strip())

        tokens = data.split()
        if len(tokens) == 0:
            continue

        if tokens[0] == 'n':
            if len(tokens) != 2 or len(edges) > 0 or n_override is not None:
                raise MalformedLineError(lineno, raw)
            n_override = _checked_count(_parse_int(tokens[1], lineno, raw),
                                        lineno, raw)
            continue

        if len(tokens) != 2:
            raise MalformedLineError(lineno, raw)

        edges.append((_parse_int(tokens[0], lineno, raw),
                      _parse_int(tokens[1], lineno, raw)))
        lines.append(lineno)

    if n_override is None:
        n_verts = 1 + max([max(pair) for pair in edges]) if edges else 0
    else:
        n_verts = n_override

    graph, warns = _checked_graph(n_verts, edges, lines)

    return GraphDocument(graph, tuple(comments), 'edgelist', tuple(warns))


def serialize_edgelist(doc):
    """Write a document as a 0-based edge list.

    Parameters
    ----------
    doc : GraphDocument
        Document to serialize

    Returns
    -------
    bytes
        `# comment` lines, an `n N` line, and one `u v` line per edge

    """
    graph = doc.graph
    out = [' '.join(('#', comment)).rstrip() + '\n'
           for comment in doc.comments]
    out.append('n {:d}\n'.format(graph.n))
    out.extend(['{:d} {:d}\n'.format(u, v) for u, v in graph.edges()])

    return ''.join(out).encode('utf-8')


parsers = {'dimacs': parse_dimacs, 'edgelist': parse_edgelist}
serializers = {'dimacs': serialize_dimacs, 'edgelist': serialize_edgelist}


def guess_format(path):
    """Guess a file format from its extension.

    Parameters
    ----------
    path : str
        File name

    Returns
    -------
    str
        'edgelist' for .txt, .el, and .edges files, 'dimacs' otherwise

    """
    ext = os.path.splitext(path)[1].lower()
    return 'edgelist' if ext in ('.txt', '.el', '.edges') else 'dimacs'


def read_graph(path, fmt=None):
    """Load a graph document from disk.

    Parameters
    ----------
    path : str
        File to read
    fmt : str or NoneType
        One of `formats`, or None to guess from the extension (default=None)

    Returns
    -------
    GraphDocument

    """
    if fmt is None:
        fmt = guess_format(path)
    if fmt not in parsers:
        raise ValueError('unknown graph format: {:}'.format(fmt))

    with open(path, 'rb') as fin:
        return parsers[fmt](fin.read())


def write_graph(doc, path, fmt='dimacs'):
    """Write a graph document to disk.

    Parameters
    ----------
    doc : GraphDocument
        Document to write
    path : str
        Output file
    fmt : str
        One of `formats` (default='dimacs')

    """
    if fmt not in serializers:
        raise ValueError('unknown graph format: {:}'.format(fmt))

    with open(path, 'wb') as fout:
        fout.write(serializers[fmt](doc))

    return
