"""Exact-rational hom-Lie superalgebras.

Algebras load from the line-oriented text format; every report method on the
compiled core returns a JSON string with stable key order, and the wrappers
here hand back plain dicts. Rationals stay strings like "3/4" so nothing is
rounded.
"""

import json
from pathlib import Path

from ._core import Algebra, HomsuperError, load, parse

__all__ = [
    "Algebra",
    "HomsuperError",
    "load",
    "parse",
    "fixture",
    "fixture_names",
    "verify",
    "analyze",
    "killing",
    "forms",
    "ideals",
    "decompose",
    "derivations",
    "criterion",
]

_FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"


def fixture_names():
    """Names of the bundled example algebras."""
    return sorted(p.stem for p in _FIXTURE_DIR.glob("*.halg"))


def fixture(name):
    """Load a bundled example algebra by name."""
    path = _FIXTURE_DIR / f"{name}.halg"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}; known: {', '.join(fixture_names())}")
    return load(str(path))


def verify(algebra):
    return json.loads(algebra.verify_json())


def analyze(algebra):
    return json.loads(algebra.analyze_json())


def killing(algebra):
    return json.loads(algebra.killing_json())


def forms(algebra):
    return json.loads(algebra.forms_json())


def ideals(algebra, seeds=(), side="two_sided", graded=False, alpha_invariant=False):
    """Ideal closures of the seeds (basis names or "p/q,..." coordinates)."""
    return json.loads(algebra.ideals_json(list(seeds), side, graded, alpha_invariant))


def decompose(algebra):
    return json.loads(algebra.decompose_json())


def derivations(algebra, k, parity=None):
    return json.loads(algebra.derivations_json(k, parity))


def criterion(algebra):
    return json.loads(algebra.criterion_json())
