"""Guard rail for exhaustive sweeps over the preference space [n]^n."""

import os

CAP_ENV_VAR = "PARKFUN_BRUTE_CAP"

# All of [8]^8; keeps un-forced sweeps under a minute on ordinary hardware.
DEFAULT_CAP = 8 ** 8


class SearchCapExceeded(RuntimeError):
    """A brute-force sweep was refused because it would be too large."""

    def __init__(self, size: int, cap: int):
        super().__init__(
            f"search space of {size} simulations exceeds the cap of {cap}; "
            f"force the run or raise {CAP_ENV_VAR}"
        )
        self.size = size
        self.cap = cap


def brute_cap() -> int:
    """Maximum number of simulations a sweep may run without being forced.

    ``PARKFUN_BRUTE_CAP`` overrides the default; it counts total simulations,
    not the number of cars.
    """
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap <= 0:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def ensure_within_cap(size: int, force: bool = False) -> None:
    """Raise SearchCapExceeded if a sweep of `size` simulations is over the cap."""
    if force:
        return
    cap = brute_cap()
    if size > cap:
        raise SearchCapExceeded(size, cap)
