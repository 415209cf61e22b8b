"""Shared fixtures: memoized presets, profiles and doubles."""

import pytest

from fhalg import Matrix, build_double, fh_profile, get_preset

PRESET_NAMES = [
    "group:C2", "group:C3", "group:C5", "group:S3", "group:D4", "group:Q8",
    "dual-group:S3", "sweedler4", "taft:3:13",
    "truncpoly:2", "truncpoly:3", "truncpoly:4", "truncpoly:5",
]
HOPF_PRESETS = [n for n in PRESET_NAMES if not n.startswith("truncpoly")]

_presets: dict = {}
_profiles: dict = {}
_doubles: dict = {}


def preset(name):
    if name not in _presets:
        _presets[name] = get_preset(name)
    return _presets[name]


def profile(name):
    if name not in _profiles:
        _profiles[name] = fh_profile(preset(name))
    return _profiles[name]


def double(name):
    if name not in _doubles:
        _doubles[name] = build_double(preset(name))
    return _doubles[name]


def embedding_from_elements(H, elements):
    """Embedding matrix whose columns are the given elements of H."""
    return Matrix.from_columns(H.field, [e.coords for e in elements])


@pytest.fixture(scope="session")
def sweedler():
    return preset("sweedler4")
