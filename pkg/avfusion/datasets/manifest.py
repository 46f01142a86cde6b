# File: avfusion/datasets/manifest.py
# 🗂️ Dataset Manifest (UTF-8 CSV)

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import structlog
from marshmallow import ValidationError

from ..errors import ManifestError

log = structlog.get_logger(__name__)

COLUMNS = ('clip_id', 'audio_path', 'video_source', 'label', 'split')
EMBEDDING_SUFFIXES = ('.emb', '.csv')


@dataclass(frozen=True)
class ManifestEntry:
    clip_id: str
    audio_path: str
    video_source: str
    label: str
    split: str

    @property
    def video_reference(self) -> Optional[Tuple[str, str]]:
        """(embedding file, clip id) when the video source points at precomputed embeddings.

        A `#clip_id` suffix selects another record; otherwise the entry's own id is used.
        """
        path, _, ref = self.video_source.partition('#')
        if Path(path).suffix.lower() not in EMBEDDING_SUFFIXES:
            return None
        return path, ref or self.clip_id


@dataclass
class DatasetManifest:
    entries: List[ManifestEntry]
    root: Path = Path('.')

    @property
    def classes(self):
        return sorted({entry.label for entry in self.entries})

    def label_index(self, label):
        return self.classes.index(label)

    def split(self, name):
        return [entry for entry in self.entries if entry.split == name]

    def resolve(self, path):
        path = Path(path)
        return path if path.is_absolute() else self.root / path

    def validate_for_training(self):
        for name in ('train', 'test'):
            if not self.split(name):
                raise ManifestError(f'manifest has no {name} clips')
        if len(self.classes) < 2:
            raise ManifestError('training needs at least two classes', classes=self.classes)


def load_manifest(path) -> DatasetManifest:
    """Parse and validate a manifest; relative paths resolve against its directory."""
    from ..serializers import ManifestEntrySchema

    path = Path(path)
    if not path.is_file():
        raise ManifestError('manifest not found', path=str(path))

    schema = ManifestEntrySchema()
    entries = []
    seen = set()
    with open(path, newline='', encoding='utf-8-sig') as f:
        reader = csv.DictReader(f)
        if tuple(name.strip() for name in reader.fieldnames or ()) != COLUMNS:
            raise ManifestError('manifest header must be ' + ','.join(COLUMNS),
                                header=reader.fieldnames)
        for line_no, row in enumerate(reader, start=2):
            if not any((value or '').strip() for value in row.values()):
                continue
            try:
                entry = schema.load({k.strip(): (v or '') for k, v in row.items() if k})
            except ValidationError as e:
                raise ManifestError(f'invalid manifest row {line_no}', errors=e.messages)
            if entry.clip_id in seen:
                raise ManifestError('duplicate clip id', clip_id=entry.clip_id, line=line_no)
            seen.add(entry.clip_id)
            entries.append(entry)

    if not entries:
        raise ManifestError('manifest has no entries', path=str(path))
    manifest = DatasetManifest(entries=entries, root=path.parent)
    log.debug('manifest_loaded', path=str(path), clips=len(entries),
              classes=len(manifest.classes))
    return manifest


def write_manifest(entries, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(COLUMNS)
        for entry in entries:
            writer.writerow([entry.clip_id, entry.audio_path, entry.video_source,
                             entry.label, entry.split])
