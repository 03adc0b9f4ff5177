"""Storage service for benchmark result files."""

import asyncio
import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

import aiofiles

from ..models import CSV_HEADER, SWEEP_HEADER, QuantileRow, RunRecord

logger = logging.getLogger(__name__)


@dataclass
class StorageConfig:
    """Configuration for storage service."""

    output_dir: Path = Path(".")


class StorageService:
    """Writes and reads CSV result files."""

    def __init__(self, config: Optional[StorageConfig] = None):
        """Initialize storage service.

        Args:
            config: Optional storage configuration
        """
        self.config = config or StorageConfig()
        self._file_locks: Dict[Path, asyncio.Lock] = {}

    def resolve(self, path: Path) -> Path:
        """Relative paths are placed under the configured output directory."""
        path = Path(path)
        if path.is_absolute():
            return path
        return self.config.output_dir / path

    def _get_file_lock(self, path: Path) -> asyncio.Lock:
        if path not in self._file_locks:
            self._file_locks[path] = asyncio.Lock()
        return self._file_locks[path]

    @staticmethod
    def _render(header: Sequence[str], rows: Iterable[List[str]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    async def _write(self, path: Path, text: str) -> Path:
        target = self.resolve(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        async with self._get_file_lock(target):
            async with aiofiles.open(target, "w", encoding="utf-8", newline="") as f:
                await f.write(text)
        logger.info(f"Wrote {target}")
        return target

    async def write_records(self, path: Path, records: Sequence[RunRecord]) -> Path:
        """Write per-episode records, ordered as given.

        Args:
            path: Destination file
            records: Records to write

        Returns:
            The resolved path written
        """
        return await self._write(path, self.render_records(records))

    async def write_sweep(self, path: Path, rows: Sequence[QuantileRow]) -> Path:
        """Write noise-sweep summary rows."""
        return await self._write(
            path, self._render(SWEEP_HEADER, (r.to_row() for r in rows))
        )

    async def read_records(self, path: Path) -> List[RunRecord]:
        """Read a per-episode CSV file back into records."""
        target = self.resolve(path)
        async with self._get_file_lock(target):
            async with aiofiles.open(target, "r", encoding="utf-8", newline="") as f:
                text = await f.read()
        reader = csv.DictReader(io.StringIO(text))
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"{target} does not have the expected result header")
        return [RunRecord.from_row(row) for row in reader]

    def render_records(self, records: Sequence[RunRecord]) -> str:
        """CSV text for records, header included."""
        return self._render(CSV_HEADER, (r.to_row() for r in records))
