import pytest

from planarqec import build_color_code_666, build_surface_code

_cache = {}


def _get(kind, d):
    key = (kind, d)
    if key not in _cache:
        builder = build_surface_code if kind == "surface" else build_color_code_666
        _cache[key] = builder(d)
    return _cache[key]


@pytest.fixture
def surface(request):
    d = getattr(request, "param", 5)
    return _get("surface", d)


@pytest.fixture
def color(request):
    d = getattr(request, "param", 5)
    return _get("color666", d)


def surface_code(d):
    return _get("surface", d)


def color_code(d):
    return _get("color666", d)
