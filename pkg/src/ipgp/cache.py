"""On-disk cache of computed polynomials keyed by (n, k, tool version)."""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .graph import GPParams
from .poly import IntPoly

DEFAULT_DIR = ".ipgp-cache"
ENV_VAR = "IPGP_CACHE_DIR"


def resolve_cache_dir(flag: str | None) -> Path:
    return Path(os.environ.get(ENV_VAR) or flag or DEFAULT_DIR)


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass(frozen=True)
class PolyCache:
    directory: Path
    version: str = __version__

    def path_for(self, n: int, k: int) -> Path:
        return Path(self.directory) / f"gp_n{n}_k{k}.json"

    def get(self, n: int, k: int) -> IntPoly | None:
        path = self.path_for(n, k)
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if (entry.get("n"), entry.get("k"), entry.get("tool_version")) != (n, k, self.version):
            return None
        return IntPoly.from_json(entry)

    def put(self, n: int, k: int, poly: IntPoly) -> None:
        entry = {
            "n": n,
            "k": k,
            "coeffs": poly.to_json()["coeffs"],
            "tool_version": self.version,
            "created_at": datetime.now(timezone.utc).isoformat(),
        }
        atomic_write_text(self.path_for(n, k), json.dumps(entry))

    def __call__(self, n: int, k: int) -> IntPoly:
        """Cached polynomial, computing and storing it on a miss."""
        from .transfer import independence_polynomial

        hit = self.get(n, k)
        if hit is not None:
            return hit
        poly = independence_polynomial(GPParams(n, k))
        try:
            self.put(n, k, poly)
        except OSError:
            pass  # a read-only cache directory only costs recomputation
        return poly
