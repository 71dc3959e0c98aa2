import logging
import os
from typing import Any, Dict, List, Optional, Tuple

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _env_int(name: str, default: int, problems: List[str]) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        problems.append(f"{name}={raw!r} is not an integer, using {default}")
        return default


class ConfigManager:
    def __init__(self, env_file: Optional[str] = None):
        # nearest .env at or above the working directory unless a file is given
        load_dotenv(env_file or find_dotenv(usecwd=True))
        self._env_problems: List[str] = []
        self.config = self.get_default_config()

    def get_default_config(self) -> Dict[str, Any]:
        """Get default configuration, with environment overrides"""
        problems = self._env_problems
        return {
            "alphabet": os.getenv("DYCK_ALPHABET", "xD"),

            "verification": {
                "safety_limit": _env_int("DYCK_SAFETY_LIMIT", 12, problems),
                "default_max_n": _env_int("DYCK_DEFAULT_MAX_N", 8, problems),
            },

            "family_search": {
                "max_vertices": _env_int("DYCK_FAMILY_MAX_VERTICES", 5, problems),
                "max_cycles": _env_int("DYCK_FAMILY_MAX_CYCLES", 6, problems),
            },

            "logging": {
                "level": os.getenv("DYCK_LOG_LEVEL", "WARNING").upper(),
                "file": os.getenv("DYCK_LOG_FILE", ""),
            },
        }

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value"""
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def get_alphabet(self) -> str:
        return self.get("alphabet", "xD")

    def get_safety_limit(self) -> int:
        """Upper bound on semilengths the verification commands will enumerate"""
        return self.get("verification.safety_limit", 12)

    def get_default_max_n(self) -> int:
        return self.get("verification.default_max_n", 8)

    def get_family_limits(self) -> Tuple[int, int]:
        """(max_vertices, max_cycles) for the cycle-system search"""
        return self.get("family_search.max_vertices", 5), self.get("family_search.max_cycles", 6)

    def get_log_level(self) -> str:
        return self.get("logging.level", "WARNING")

    def get_log_file(self) -> str:
        return self.get("logging.file", "")

    def get_config_summary(self) -> str:
        """Get a summary of the current configuration"""
        max_vertices, max_cycles = self.get_family_limits()
        summary = "Configuration:\n"
        summary += f"  alphabet: {self.get_alphabet()}\n"
        summary += f"  safety limit: {self.get_safety_limit()}\n"
        summary += f"  default max-n: {self.get_default_max_n()}\n"
        summary += f"  family search: {max_vertices} vertices, {max_cycles} cycles\n"
        summary += f"  log level: {self.get_log_level()}\n"
        summary += f"  log file: {self.get_log_file() or '(none)'}"
        return summary

    def validate_config(self) -> List[str]:
        """Validate configuration and return list of issues"""
        issues = list(self._env_problems)

        alphabet = self.get_alphabet()
        if len(alphabet) != 2 or alphabet[0] == alphabet[1]:
            issues.append(f"Alphabet {alphabet!r} must be two distinct characters")
        elif not all(ch.isascii() and ch.isprintable() and not ch.isspace() for ch in alphabet):
            issues.append(f"Alphabet {alphabet!r} must use printable ASCII characters")

        limit = self.get_safety_limit()
        if limit < 1:
            issues.append(f"Safety limit {limit} must be at least 1")

        default_max_n = self.get_default_max_n()
        if not 0 <= default_max_n <= max(limit, 0):
            issues.append(f"Default max-n {default_max_n} must lie in 0..{limit}")

        max_vertices, max_cycles = self.get_family_limits()
        if max_vertices < 1 or max_cycles < 1:
            issues.append("Family search limits must be at least 1")

        if self.get_log_level() not in LOG_LEVELS:
            issues.append(f"Log level {self.get_log_level()!r} is not one of {', '.join(LOG_LEVELS)}")

        return issues
