"""Resource caps for the exhaustive searches.

ULRICH_CAP, when set, overrides every default.  Units differ per engine:

* semigroup brute force: free exponents per candidate reduction (default 40);
* cycle brute force: search nodes, in thousands (default 2000).
"""

import os

SEMIGROUP_CAP = 40
CYCLE_CAP = 2000


def resolve_cap(cap: int | None, default: int) -> int:
    if cap is not None:
        value = cap
    else:
        env = os.environ.get("ULRICH_CAP")
        if env is None or not env.strip():
            return default
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"ULRICH_CAP must be an integer, got {env!r}") from None
    if value < 1:
        raise ValueError(f"cap must be positive, got {value}")
    return value
