"""Default size caps and their environment override.

INVOLQ_ORDER_CAP, when set to a positive integer, overrides both default
caps (near-field order and enumerated group order). Nothing in the package
is randomized; caps only bound the cost of exhaustive scans.
"""

import os

DEFAULT_NEARFIELD_ORDER_CAP = 4096
DEFAULT_GROUP_ORDER_CAP = 10**6

_ENV_VAR = "INVOLQ_ORDER_CAP"


def _env_cap() -> int | None:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be positive, got {value}")
    return value


def nearfield_order_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return _env_cap() or DEFAULT_NEARFIELD_ORDER_CAP


def group_order_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return _env_cap() or DEFAULT_GROUP_ORDER_CAP
