import os
from pathlib import Path

from zetaint import cached_zero_table

CACHE = Path(os.environ.get("ZETAINT_CACHE_DIR", Path.home() / ".cache" / "zetaint"))


def zeros_to(height):
    return cached_zero_table(float(height), CACHE)
