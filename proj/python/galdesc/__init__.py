"""Exact Galois-descent calculator.

Thin wrapper over the compiled engine: every command takes and returns
plain dicts mirroring the CLI's JSON file formats. All arithmetic is
exact; rationals appear as strings like "3/4", extension-field elements
as coordinate arrays in the power basis.
"""

import json as _json

try:
    from . import _galdesc
except ImportError:  # build-tree layout: the module sits next to the package
    import _galdesc

CocycleViolation = _galdesc.CocycleViolation
EngineError = _galdesc.EngineError
NotArtin = _galdesc.NotArtin
ParseError = _galdesc.ParseError

__version__ = _galdesc.__version__
__all__ = [
    "verify",
    "descend",
    "artin",
    "exactseq",
    "selftest",
    "CocycleViolation",
    "EngineError",
    "NotArtin",
    "ParseError",
    "__version__",
]


def verify(problem):
    """Validate a descent setting (and datum, if present). Returns a report dict."""
    return _json.loads(_galdesc.verify(_json.dumps(problem)))


def descend(problem):
    """Run descent on a datum; the report's "artifact" holds the result."""
    return _json.loads(_galdesc.descend(_json.dumps(problem)))


def artin(problem):
    """Invert a finite-group representation to a downstairs object."""
    return _json.loads(_galdesc.artin(_json.dumps(problem)))


def exactseq(pair):
    """Exact-sequence diagnostics: "s3", "d4", or a group-file dict."""
    arg = pair if isinstance(pair, str) else _json.dumps(pair)
    return _json.loads(_galdesc.exactseq(arg))


def selftest(seed=0, cases=10):
    """Deterministic property suite over the shipped settings."""
    return _json.loads(_galdesc.selftest(seed, cases))
