"""Config file and command line overrides for parameter sets."""

from __future__ import annotations

from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from .sets import ServerParamSet


def load_config(path: str | Path) -> dict[str, float | str]:
    """Read a TOML file into a flat override mapping.

    Keys at the root apply directly; a [server_param] table is accepted
    too and wins over a root key of the same name.
    """
    with open(path, "rb") as handle:
        data = tomllib.load(handle)
    overrides: dict[str, float | str] = {}
    for key, value in data.items():
        if key == "server_param" and isinstance(value, dict):
            continue
        if isinstance(value, (int, float, str)) and not isinstance(value, bool):
            overrides[key] = value
    table = data.get("server_param", {})
    if isinstance(table, dict):
        for key, value in table.items():
            if isinstance(value, (int, float, str)) and not isinstance(value, bool):
                overrides[key] = value
    return overrides


def parse_override(text: str) -> tuple[str, float | str]:
    """Split one --server-param key=value argument."""
    key, sep, raw = text.partition("=")
    if not sep or not key:
        raise ValueError(f"expected key=value, got {text!r}")
    try:
        value: float | str = float(raw)
    except ValueError:
        value = raw
    return key, value


def apply_overrides(base: ServerParamSet,
                    config_path: str | Path | None = None,
                    cli_pairs: list[str] | None = None) -> ServerParamSet:
    """Config file first, then CLI pairs (CLI wins)."""
    result = base
    if config_path is not None:
        result = result.merge(load_config(config_path))
    if cli_pairs:
        merged: dict[str, float | str] = {}
        for pair in cli_pairs:
            key, value = parse_override(pair)
            merged[key] = value
        result = result.merge(merged)
    return result
