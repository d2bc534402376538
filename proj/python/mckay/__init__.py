"""McKay graphs of finite subgroups of SU(2) and SU(2) x SU(2).

Thin wrapper over the C++ extension: groups are built from spec strings
("2I", "D4", "prod(2T,2I)", "diag(C6)", "gens:file.json"), and the heavy
lifting (character tables, graph classification, verification suites)
happens in C++.  Functions returning structured data parse the extension's
JSON output into plain dicts.
"""

import json as _json

from ._mckay import (
    check_dimension_multiset as _check_dimension_multiset,
    classify,
    graph_dot,
    graph_json,
    group_json,
    survey as _survey,
    verify as _verify,
)

__all__ = [
    "build",
    "graph",
    "graph_dot",
    "graph_json",
    "group_json",
    "classify",
    "verify",
    "survey",
    "check_dimension_multiset",
]


def build(spec):
    """Group description (order, ambient, elements, generators) as a dict."""
    return _json.loads(group_json(spec))


def graph(spec, seed=0, tol=1e-6):
    """McKay graph (dim_w, vertices, edges) as a dict."""
    return _json.loads(graph_json(spec, seed, tol))


def verify(spec, suite="all", seed=0, tol=1e-6):
    """Run a verification suite; returns (passed, report_dict)."""
    passed, report = _verify(spec, suite, seed, tol)
    return passed, _json.loads(report)


def survey(max_order, seed=0, tol=1e-6):
    """Run every suite over the corpus; returns (passed, report_dict)."""
    passed, report = _survey(max_order, seed, tol)
    return passed, _json.loads(report)


def check_dimension_multiset(dims):
    """Apply the dimension rules to a multiset; returns (passed, report_dict)."""
    passed, report = _check_dimension_multiset(list(dims))
    return passed, _json.loads(report)
