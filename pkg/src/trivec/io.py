"""JSON reading/writing shared by the CLI and the fixture loader."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .errors import ValidationError


def read_json(path) -> object:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if 0 < exc.lineno <= len(text.splitlines()) else ""
        raise ValidationError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}") from None


def dumps(obj) -> str:
    # float repr is the shortest string that round-trips exactly
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=False)


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("trivec") / "fixtures" / f"{name}.json"))


def load_fixture(name: str):
    from .state import ThreeQubitState

    return ThreeQubitState.from_json(read_json(fixture_path(name)))
