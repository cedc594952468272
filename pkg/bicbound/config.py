"""
Configuration management for bicbound.

Resolution settings (quadrature rule sizes, output grid, verification
steps) come from a named profile, optionally overridden by a JSON file
and then by command-line flags.
"""

import copy
import json
import logging
from typing import Any, Dict, List, Optional

from .boundary import DEFAULT_DELTA_K
from .quadrature import CircleRule, DiskRule, QuadratureRules

logger = logging.getLogger(__name__)


# Resolution profiles; "default" is the base every other profile overrides
RESOLUTION_PROFILES: Dict[str, Dict[str, Any]] = {
    "default": {
        "circle": {"n": 256},
        "disk": {"nr": 64, "nt": 256, "collision_eps": 1e-8},
        "grid": {"nr": 10, "ntheta": 16, "rmax": 0.9},
        "verify": {"h": None, "tolerance_scale": 1.0},
        "boundary": {"r_max": 0.999},
        "delta": {"K": DEFAULT_DELTA_K},
    },
    "fast": {
        "circle": {"n": 64},
        "disk": {"nr": 24, "nt": 64},
        "grid": {"nr": 5, "ntheta": 8},
    },
    "fine": {
        "circle": {"n": 1024},
        "disk": {"nr": 128, "nt": 512},
        "grid": {"nr": 19, "ntheta": 32},
    },
}


class Config:
    """
    Configuration for bicbound runs.

    Example:
        from bicbound.config import Config

        config = Config(profile="fast")
        config.set("disk.nr", 32)
        rules = config.quadrature_rules()

        config = Config.from_file("bicbound.json", profile="fine")
        config.get("grid.rmax")          # 0.9
    """

    def __init__(
        self,
        data: Optional[Dict[str, Any]] = None,
        profile: str = "default"
    ):
        """
        Initialize config.

        Args:
            data: Overrides applied on top of the profile
            profile: Resolution profile name ("default", "fast", "fine")
        """
        overrides = RESOLUTION_PROFILES.get(profile.lower())
        if overrides is None:
            raise ValueError(
                f"Unknown profile: {profile}. "
                f"Available: {list(RESOLUTION_PROFILES.keys())}"
            )
        self.profile = profile.lower()
        self._data: Dict[str, Any] = copy.deepcopy(RESOLUTION_PROFILES["default"])
        self._deep_merge(self._data, copy.deepcopy(overrides))

        if data:
            self._deep_merge(self._data, data)

    @classmethod
    def from_file(cls, path: str, profile: str = "default") -> "Config":
        """
        Load overrides from a JSON file.

        A missing or unreadable file falls back to the plain profile.
        """
        try:
            with open(path, "r") as f:
                data = json.load(f)
            return cls(data=data, profile=profile)
        except FileNotFoundError:
            logger.warning("Config file not found: %s", path)
            return cls(profile=profile)
        except json.JSONDecodeError as e:
            logger.warning("Config parse error in %s: %s", path, e)
            return cls(profile=profile)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a value using dot notation.

        Args:
            key: Config key (e.g., "disk.nr")
            default: Default value if not found
        """
        value = self._data
        for part in key.split("."):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        parts = key.split(".")
        target = self._data

        for part in parts[:-1]:
            if part not in target or not isinstance(target[part], dict):
                target[part] = {}
            target = target[part]

        target[parts[-1]] = value

    # --- typed views ---

    def circle_rule(self) -> CircleRule:
        return CircleRule(int(self.get("circle.n")))

    def disk_rule(self) -> DiskRule:
        return DiskRule(
            int(self.get("disk.nr")),
            int(self.get("disk.nt")),
            collision_eps=float(self.get("disk.collision_eps")),
        )

    def quadrature_rules(self) -> QuadratureRules:
        return QuadratureRules(self.circle_rule(), self.disk_rule(), float(self.get("boundary.r_max")))

    @property
    def tolerance_scale(self) -> float:
        return float(self.get("verify.tolerance_scale", 1.0))

    @property
    def delta_k(self) -> int:
        """Truncation of Dirac data whose problem entry gives no K."""
        value = self.get("delta.K", DEFAULT_DELTA_K)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ValueError(f"delta.K must be a non-negative integer, got {value!r}")
        return value

    @staticmethod
    def _deep_merge(base: Dict, override: Dict) -> Dict:
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                Config._deep_merge(base[key], value)
            else:
                base[key] = value
        return base

    @staticmethod
    def available_profiles() -> List[str]:
        return list(RESOLUTION_PROFILES.keys())

    def __repr__(self) -> str:
        return f"<Config profile={self.profile} circle={self.get('circle.n')} disk={self.get('disk.nr')}x{self.get('disk.nt')}>"
