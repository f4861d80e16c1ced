"""Pipeline configuration: a key=value text file, every key overridable
by a same-named command-line flag."""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path


class ConfigError(ValueError):
    pass


DEFAULT_GENERAL_ROOTS = ("change", "act", "move")


@dataclass(frozen=True)
class PipelineConfig:
    output_dir: str
    corpus: str = ""
    taxonomy: str = ""
    verb_hierarchy: str = ""
    light_verbs: str | None = None
    k: int = 5
    tau: float = 0.05
    lambda_: float = 0.5
    tau_a: float = 0.3
    tau_e: float = 0.2
    min_pred_freq: int = 5
    general_roots: tuple[str, ...] = DEFAULT_GENERAL_ROOTS
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        for name in ("tau", "lambda_", "tau_a", "tau_e"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{external_key(name)} must be in [0,1], got {value}")
        if self.k < 0:
            raise ConfigError(f"k must be >= 0, got {self.k}")
        if self.min_pred_freq < 1:
            raise ConfigError(f"min_pred_freq must be >= 1, got {self.min_pred_freq}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


# Config-file/CLI key for each dataclass field ("lambda" is a Python keyword).
_FIELD_TO_KEY = {"lambda_": "lambda"}
_KEY_TO_FIELD = {v: k for k, v in _FIELD_TO_KEY.items()}

_PATH_FIELDS = ("corpus", "taxonomy", "verb_hierarchy", "light_verbs", "output_dir")


def external_key(field_name: str) -> str:
    return _FIELD_TO_KEY.get(field_name, field_name)


def config_keys() -> tuple[str, ...]:
    return tuple(external_key(f.name) for f in fields(PipelineConfig))


def parse_config_file(path: str | Path) -> dict[str, str]:
    """key=value lines; '#' starts a comment; blank lines ignored."""
    raw: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigError(f"line {lineno}: expected key=value, got {stripped!r}")
            key, value = stripped.split("=", 1)
            raw[key.strip()] = value.strip()
    return raw


def make_config(
    raw: dict[str, str], base_dir: str | Path = ".", require_inputs: bool = True
) -> PipelineConfig:
    """Coerce raw string settings into a validated PipelineConfig.

    Relative paths resolve against base_dir (the config file's directory).
    The three input paths are only mandatory for commands that build.
    """
    base = Path(base_dir)
    known = set(config_keys())
    for key in raw:
        if key not in known:
            raise ConfigError(f"unknown config key {key!r}")
    kwargs: dict[str, object] = {}
    for f in fields(PipelineConfig):
        key = external_key(f.name)
        if key not in raw or raw[key] == "":
            continue
        value = raw[key]
        if f.name in ("k", "min_pred_freq", "seed", "workers"):
            try:
                kwargs[f.name] = int(value)
            except ValueError:
                raise ConfigError(f"{key} must be an integer, got {value!r}") from None
        elif f.name in ("tau", "lambda_", "tau_a", "tau_e"):
            try:
                kwargs[f.name] = float(value)
            except ValueError:
                raise ConfigError(f"{key} must be a number, got {value!r}") from None
        elif f.name == "general_roots":
            kwargs[f.name] = tuple(
                v.strip() for v in value.split(",") if v.strip()
            )
        elif f.name in _PATH_FIELDS:
            kwargs[f.name] = str((base / value).resolve()) if value else value
        else:
            kwargs[f.name] = value
    required = ("corpus", "taxonomy", "verb_hierarchy", "output_dir") if require_inputs else ("output_dir",)
    for key in required:
        if key not in kwargs:
            raise ConfigError(f"missing required config key {key!r}")
    return PipelineConfig(**kwargs)


def config_report(cfg: PipelineConfig) -> dict[str, object]:
    """The full effective configuration, echoed into every run report."""
    out: dict[str, object] = {}
    for f in fields(PipelineConfig):
        value = getattr(cfg, f.name)
        if isinstance(value, tuple):
            value = list(value)
        out[external_key(f.name)] = value
    return out
