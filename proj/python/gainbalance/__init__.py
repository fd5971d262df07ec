"""Balance tests for gain graphs, backed by the C++ library."""

import json

from . import _core
from ._core import BudgetExceeded, Graph, circle_test, smith_invariants

__all__ = [
    "BudgetExceeded",
    "Graph",
    "abelian_report",
    "bad_witness",
    "balance",
    "circle_test",
    "classify",
    "has_minor",
    "oracle",
    "run_cli",
    "smith_invariants",
]


def _graph(g):
    if isinstance(g, Graph):
        return g
    return Graph.load(g)


def classify(graph, group_class="contains-z3", test="circle"):
    return json.loads(_core.classify(_graph(graph), group_class, test))


def has_minor(graph, target, max_states=2_000_000):
    found = _core.has_minor(_graph(graph), _graph(target), max_states)
    return None if found is None else json.loads(found)


def balance(graph, gains):
    return json.loads(_core.balance(_graph(graph), gains))


def abelian_report(graph, basis, queries=()):
    return json.loads(_core.abelian_report(_graph(graph), basis, list(queries)))


def oracle(graph, group, max_assignments=20_000_000):
    return json.loads(_core.oracle(_graph(graph), group, max_assignments))


def bad_witness(family, modulus=None):
    return json.loads(_core.bad_witness(family, modulus))


def run_cli(*args):
    """Run a command line; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
