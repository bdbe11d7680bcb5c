"""
Key-value config files for cevian arrangements.

    # opening example, no interior concurrency
    feet_a = 1/2
    feet_b = 1/2
    feet_c = 1/3

Values are comma-separated "num/den" fractions; JSON-ish brackets and
quotes (feet_A = ["1/3","1/2"]) are tolerated. A missing key means no
cevians from that vertex.
"""
from pathlib import Path
from typing import Dict, List, Union

from .arrangement import CevianConfig
from .rational_geom import parse_rational
from utils import logger, ConfigValidationError, OutputError, CONFIG_KEYS, CONFIG_KEY_ALIASES


def _split_fractions(raw_value: str, key: str, line_number: int) -> List[str]:
    value = raw_value.strip()
    if value.startswith("[") and value.endswith("]"):
        value = value[1:-1]
    elif "[" in value or "]" in value:
        raise ConfigValidationError(
            f"Unbalanced brackets for {key} on line {line_number}", entry=f"line {line_number}")

    items = [item.strip() for item in value.split(",")]
    if items == [""]:
        return []
    if any(item == "" for item in items):
        raise ConfigValidationError(
            f"Empty fraction in {key} on line {line_number}", entry=f"line {line_number}")
    return items


def parse_config_text(text: str) -> CevianConfig:
    feet: Dict[str, list] = {}

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigValidationError(
                f"Line {line_number} is not a 'key = fractions' entry: {raw_line.strip()!r}",
                entry=f"line {line_number}")

        key, _, raw_value = line.partition("=")
        key = key.strip()
        key = CONFIG_KEY_ALIASES.get(key, key)
        if key not in CONFIG_KEYS:
            raise ConfigValidationError(
                f"Unknown key {key!r} on line {line_number}; expected one of {sorted(CONFIG_KEYS)}",
                entry=f"line {line_number}")
        if key in feet:
            raise ConfigValidationError(
                f"Key {key!r} repeated on line {line_number}", entry=f"line {line_number}")

        feet[key] = [parse_rational(item) for item in _split_fractions(raw_value, key, line_number)]
        logger.debug(f"Config {key}: {len(feet[key])} feet")

    return CevianConfig.from_feet(
        feet.get("feet_a", []),
        feet.get("feet_b", []),
        feet.get("feet_c", []),
    )


def load_config_file(path: Union[str, Path]) -> CevianConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ConfigValidationError(f"Config file {path} is not valid UTF-8: {e}", entry=str(path))
    except OSError as e:
        raise OutputError(f"Could not read config file {path}: {e}", path=str(path), cause=e)

    logger.info(f"Loaded cevian config from {path}")
    return parse_config_text(text)
