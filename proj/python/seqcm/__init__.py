"""Relative local cohomology of bigraded monomial quotients.

Thin wrapper over the compiled extension: every operation returns the same
JSON report the command-line tool emits, parsed into dictionaries.
"""

import json

try:
    from . import _seqcm as _core
except ImportError:  # in-tree builds put the extension module on sys.path
    import _seqcm as _core

DeclinedError = _core.DeclinedError
InputError = _core.InputError
InternalError = _core.InternalError
__version__ = _core.__version__

__all__ = [
    "DeclinedError",
    "InputError",
    "InternalError",
    "canonical_text",
    "classify",
    "examples",
    "filtration",
    "invariants",
    "profile",
    "render",
    "search",
]


def profile(source, wrt="Q", characteristic=0, threads=0, fast=False, box_pad=0):
    """Nonvanishing table of H^i_T(S/I) with grade, cd and witness degrees."""
    return json.loads(
        _core.profile(source, wrt, characteristic, threads, fast, box_pad)
    )


def filtration(source, wrt="Q"):
    """Dimension filtration of a squarefree quotient with respect to a block."""
    return json.loads(_core.filtration(source, wrt))


def classify(source, wrt="Q", characteristic=0, threads=0, fast=False, box_pad=0):
    """CM, sequentially CM and approximately CM verdicts, relative and classical."""
    return json.loads(
        _core.classify(source, wrt, characteristic, threads, fast, box_pad)
    )


def invariants(source, characteristic=0, threads=0, fast=False, box_pad=0):
    """Per-layer invariant identities for CM quotients; declines in-band."""
    return json.loads(
        _core.invariants(source, characteristic, threads, fast, box_pad)
    )


def search(max_x=2, max_y=2, budget=1000, characteristic=0, seed=None):
    """Scan small rings for cohomology-interval counterexample candidates."""
    if seed is None:
        return json.loads(_core.search(max_x, max_y, budget, characteristic))
    return json.loads(_core.search(max_x, max_y, budget, characteristic, seed))


def examples():
    """The built-in example ideals."""
    return json.loads(_core.examples())


def render(report):
    """Plain-text rendering of a parsed report."""
    return _core.render(json.dumps(report))


def canonical_text(source):
    """Canonical document text of a builtin name, document text, or file path."""
    return _core.canonical_text(source)
