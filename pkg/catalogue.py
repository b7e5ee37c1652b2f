"""Bundled substitutions and the named periodic points of the examples table."""

import functools
import json
import os
from typing import Final

import utils
from datatypes import CatalogueEntry
from periodic import PeriodicPoint, enumerate_seeds, make_periodic_point
from substitution import Substitution, parse_substitution

# column order of the examples table
TABLE_POINTS: Final[tuple[str, ...]] = ("alpha", "beta", "gamma", "delta", "tau", "chi", "xi")

DEFAULT_CATALOGUE: Final[dict[str, CatalogueEntry]] = {
    "alpha": {"substitution": "thue_morse", "seed": "a|a", "description": "Thue-Morse, period 2"},
    "beta": {"substitution": "psi2", "seed": "b|a", "description": "two's complement, period 1"},
    "gamma": {"substitution": "fibonacci", "seed": "b|a", "description": "Fibonacci complement, period 2"},
    "delta": {"substitution": "fibonacci", "seed": "a|a", "description": "Fibonacci, other seed, period 2"},
    "tau": {"substitution": "tribonacci", "seed": "c|a", "description": "Tribonacci, period 3"},
    "chi": {"substitution": "mu_intro", "seed": "c|a", "description": "non-uniform digits, period 1"},
    "xi": {"substitution": "rho_nonprimitive", "seed": "b|a", "description": "non-primitive, linear growth, period 1"},
}


def load_catalogue() -> dict[str, CatalogueEntry]:
    """
    Load the named periodic points from systems/catalogue.json.
    If the file doesn't exist or can't be read, use the built-in catalogue.
    """
    json_path = utils.get_catalogue_file_path()
    if os.path.exists(json_path):
        try:
            with open(json_path, "r", encoding="utf-8") as f:
                return json.load(f)
        except (json.JSONDecodeError, OSError):
            print(f"Warning: Could not read catalogue from {json_path}")
    return dict(DEFAULT_CATALOGUE)


def _read_substitution(path: str) -> Substitution:
    with open(path, "r", encoding="utf-8") as f:
        return parse_substitution(f.read())


@functools.lru_cache(maxsize=32)
def _load_bundled(path: str) -> Substitution:
    return _read_substitution(path)


def load_substitution(name_or_path: str) -> Substitution:
    """Load a substitution config, either a bundled name such as "fibonacci" or a file path.

    Bundled configs are cached; a file path is read again on every call.
    """
    if os.path.isfile(name_or_path):
        return _read_substitution(name_or_path)
    path = utils.get_substitution_file_path(name_or_path)
    if not os.path.isfile(path):
        raise ValueError(f"unknown system {name_or_path!r}: neither a bundled substitution nor a file")
    return _load_bundled(path)


def resolve_system(system: str, seed: str | None = None) -> PeriodicPoint:
    """Resolve a catalogue name, bundled substitution name or config path to a periodic point.

    Args:
        system: e.g. "gamma", "fibonacci" or "my/substitution.txt"
        seed: Seed text "L|R"; defaults to the catalogue seed, or to the only seed of the substitution

    Returns:
        PeriodicPoint: the validated periodic point
    """
    catalogue = load_catalogue()
    if system in catalogue:
        entry = catalogue[system]
        return make_periodic_point(load_substitution(entry["substitution"]), seed or entry["seed"])
    s = load_substitution(system)
    if seed is None:
        seeds = enumerate_seeds(s)
        if len(seeds) != 1:
            choices = ", ".join(str(found) for found, _ in seeds)
            raise ValueError(f"system {system!r} needs --seed, one of: {choices}")
        seed = str(seeds[0][0])
    return make_periodic_point(s, seed)


def table_points() -> list[tuple[str, PeriodicPoint]]:
    return [(name, resolve_system(name)) for name in TABLE_POINTS]
