# Builtin Imports
import os
import json
from dataclasses import dataclass, replace

# Third-party imports
from dotenv import load_dotenv




# Load environment variables
load_dotenv()

# Constants setting
CONFIG_PATH = os.path.join(os.path.dirname(__file__), "../config/formata_settings.json")


@dataclass(frozen=True)
class Settings:

    """Runtime bounds and seeds shared by every module."""

    max_order: int
    exhaustive_order: int
    oracle_order: int
    complement_attempts: int
    random_seed: int
    dixon_prime_limit: int
    log_level: str


# --- Auxiliar Functions ---
def load_config_file(path: str = CONFIG_PATH) -> dict:

    """Loads 'formata_settings.json' with the default bounds."""

    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)["formata"]

def env_int(name: str, default: int) -> int:

    """Reads an integer override from the environment, keeping the default when unset."""

    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    return int(raw)


# --- Main Function ---
def load_settings(path: str = CONFIG_PATH) -> Settings:

    """
    Builds the settings from the JSON defaults and the environment.

    Args:
        path (str): Optional. JSON file with the "formata" block.

    Returns:
        Settings: Frozen settings; FORMATA_MAX_ORDER, FORMATA_SEED and
        FORMATA_LOG_LEVEL override the file values.
    """

    raw = load_config_file(path)

    return Settings(
        max_order=env_int("FORMATA_MAX_ORDER", int(raw["max_order"])),
        exhaustive_order=int(raw["exhaustive_order"]),
        oracle_order=int(raw["oracle_order"]),
        complement_attempts=int(raw["complement_attempts"]),
        random_seed=env_int("FORMATA_SEED", int(raw["random_seed"])),
        dixon_prime_limit=int(raw["dixon_prime_limit"]),
        log_level=os.getenv("FORMATA_LOG_LEVEL", raw["log_level"]).upper(),
    )


_SETTINGS = None

def get_settings() -> Settings:
    global _SETTINGS
    if _SETTINGS is None:
        _SETTINGS = load_settings()
    return _SETTINGS

def reload_settings(**overrides) -> Settings:

    """Re-reads file and environment; keyword overrides win over both."""

    global _SETTINGS
    _SETTINGS = replace(load_settings(), **overrides)
    return _SETTINGS
