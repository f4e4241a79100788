"""Built-in corpus of algebra specs: Borel algebras over F_2/F_3/F_5, a few
non-Borel pattern algebras, and diagonal (semisimple) algebras.

Specs are shipped as JSON files; b3_f5 has unit group order 8000 and sits
behind the default order cap, so it is not part of DEFAULT_CORPUS.
"""

import json
from importlib import resources

from .algebra import Algebra, algebra_from_spec
from .errors import SpecError

DEFAULT_CORPUS = (
    "b2_f2", "b2_f3", "b2_f5",
    "b3_f2", "b3_f3", "b4_f2",
    "pattern3_f3", "pattern3_f2", "pattern4_f2",
    "diag2_f2", "diag2_f3", "diag1_f5",
)

GATED_CORPUS = ("b3_f5",)

ALL_CORPUS = DEFAULT_CORPUS + GATED_CORPUS


def corpus_spec(name: str) -> dict:
    if name not in ALL_CORPUS:
        raise SpecError(f"unknown corpus spec '{name}'")
    path = resources.files("brw").joinpath(f"corpus_specs/{name}.json")
    return json.loads(path.read_text("utf-8"))


_cache = {}


def corpus_algebra(name: str) -> Algebra:
    if name not in _cache:
        _cache[name] = algebra_from_spec(corpus_spec(name))
    return _cache[name]


def load_spec(path_or_name: str) -> tuple[str, dict]:
    """Resolve a CLI spec argument: a corpus name or a JSON file path."""
    if path_or_name in ALL_CORPUS:
        return path_or_name, corpus_spec(path_or_name)
    try:
        with open(path_or_name, "r", encoding="utf-8") as f:
            spec = json.load(f)
    except OSError as exc:
        raise SpecError(f"cannot read spec '{path_or_name}': {exc}")
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec '{path_or_name}' is not valid JSON: {exc}")
    name = path_or_name.rsplit("/", 1)[-1]
    if name.endswith(".json"):
        name = name[:-5]
    return name, spec
