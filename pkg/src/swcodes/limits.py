"""Global enumeration limits.

Every operation that materialises or walks a combinatorial family first
estimates its size and refuses (rather than silently truncating) when the
estimate exceeds the cap.  The default cap can be overridden per call or
globally through the SWCODES_MAX_ENUM environment variable.
"""

from __future__ import annotations

import os

DEFAULT_ENUMERATION_CAP = 10_000_000
MATERIALISE_CAP = 1_000_000  # codes kept in memory as explicit word lists

ENV_VAR = "SWCODES_MAX_ENUM"


class EnumerationCapError(Exception):
    """Raised when a family is too large to enumerate under the active cap."""

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what}: {required} items exceeds enumeration cap {cap}")
        self.what = what
        self.required = required
        self.cap = cap


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_ENUMERATION_CAP


def check_cap(what: str, required: int, cap: int | None = None) -> int:
    limit = resolve_cap(cap)
    if required > limit:
        raise EnumerationCapError(what, required, limit)
    return required
