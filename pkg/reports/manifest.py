"""Run manifests: the command, its configuration, and a checksum per artifact."""

import hashlib
import json
import logging
import time
from pathlib import Path
from typing import Any

from config.settings import get_version
from reports.schemas import ArtifactEntry, RunManifest

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


def sha256_file(path: Path) -> str:
    digest = hashlib.sha256()
    with path.open("rb") as handle:
        for block in iter(lambda: handle.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


class ManifestRecorder:
    """Collects artifacts written during one command and writes the manifest."""

    def __init__(self, command: str, config: dict[str, Any], out_dir: Path):
        self.command = command
        self.config = config
        self.out_dir = out_dir
        self.artifacts: list[Path] = []
        self._started = time.perf_counter()

    def add(self, path: Path) -> Path:
        self.artifacts.append(path)
        return path

    def build(self) -> RunManifest:
        entries = [
            ArtifactEntry(
                path=path.relative_to(self.out_dir).as_posix(),
                sha256=sha256_file(path),
                bytes=path.stat().st_size,
            )
            for path in sorted(self.artifacts)
        ]
        return RunManifest(
            command=self.command,
            version=get_version(),
            config=self.config,
            artifacts=entries,
            wall_time_seconds=round(time.perf_counter() - self._started, 3),
        )

    def write(self) -> Path:
        manifest = self.build()
        path = self.out_dir / MANIFEST_NAME
        path.write_text(
            json.dumps(manifest.model_dump(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        logger.info(f"[reports] manifest lists {len(manifest.artifacts)} artifact(s) in {path}")
        return path
