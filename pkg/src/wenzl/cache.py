"""Checksummed disk cache of verified projectors.

Values are stored as the canonical JSON next to a manifest of sha256
digests.  Loading re-checks the digest and then re-runs the quick defining
checks (generator annihilation and identity coefficient for projectors; the
scalar table, closure value, and integrality for decomposition totals), so a
corrupted or tampered file surfaces as CacheIntegrityError rather than as
wrong math.  Trust, but verify.
"""

from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .padic import p_support
from .rings import QQ, p_valuation
from .serialize import morphism_from_json, morphism_to_json
from .tl import TLMorphism, bottom_killed_upto, markov_trace, top_killed_upto

ENV_CACHE_DIR = "WENZL_CACHE_DIR"


class CacheIntegrityError(RuntimeError):
    """A cache entry failed its checksum or its load-time checks."""


def default_cache_dir() -> Optional[Path]:
    path = os.environ.get(ENV_CACHE_DIR)
    return Path(path) if path else None


class DiskCache:
    def __init__(self, directory: Path | str):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.manifest_path = self.directory / "manifest.json"
        if self.manifest_path.exists():
            self.manifest = json.loads(self.manifest_path.read_text())
        else:
            self.manifest = {}

    def _write_manifest(self) -> None:
        self.manifest_path.write_text(json.dumps(self.manifest, indent=0, sort_keys=True))

    @staticmethod
    def _digest(payload: str) -> str:
        return hashlib.sha256(payload.encode()).hexdigest()

    def _filename(self, kind: str, ring_name: str, p: int, n: int) -> str:
        ring_tag = ring_name.replace(":", "_")
        return f"{kind}_{ring_tag}_p{p}_n{n}.json"

    def store_morphism(
        self, kind: str, p: int, n: int, value: TLMorphism
    ) -> Path:
        payload = morphism_to_json(value)
        name = self._filename(kind, value.ring.name, p, n)
        (self.directory / name).write_text(payload)
        self.manifest[name] = self._digest(payload)
        self._write_manifest()
        return self.directory / name

    def load_morphism(
        self, kind: str, ring_name: str, p: int, n: int
    ) -> Optional[TLMorphism]:
        """Load and re-verify; None when absent, CacheIntegrityError when bad."""
        name = self._filename(kind, ring_name, p, n)
        path = self.directory / name
        if not path.exists():
            return None
        payload = path.read_text()
        want = self.manifest.get(name)
        if want is None or self._digest(payload) != want:
            raise CacheIntegrityError(f"checksum mismatch for {name}")
        value = morphism_from_json(payload)
        self._quick_checks(kind, ring_name, p, n, value, name)
        return value

    def _quick_checks(
        self, kind: str, ring_name: str, p: int, n: int, value: TLMorphism, name: str
    ) -> None:
        if value.bottom != n or value.top != n or value.ring.name != ring_name:
            raise CacheIntegrityError(f"wrong shape in {name}")
        if kind == "jw":
            ok = (
                value.identity_coefficient() == value.ring.one
                and top_killed_upto(value, n)
                and bottom_killed_upto(value, n)
            )
            if not ok:
                raise CacheIntegrityError(f"defining checks failed for {name}")
        elif kind == "pjw":
            if ring_name == QQ.name:
                data = p_support(n, p)
                expected = Fraction(sum((-1) ** i * (i + 1) for i in data.shifted))
                ok = (
                    value.identity_coefficient() == Fraction(1)
                    and markov_trace(value) == expected
                    and all(p_valuation(c, p) >= 0 for c in value.terms.values())
                )
                if not ok:
                    raise CacheIntegrityError(f"defining checks failed for {name}")
        else:
            raise CacheIntegrityError(f"unknown cache kind {kind!r}")
