# File: avfusion/datasets/__init__.py
# 🗂️ Dataset Package

from .manifest import DatasetManifest, ManifestEntry, load_manifest, write_manifest
from .synth import synthesize

__all__ = ['DatasetManifest', 'ManifestEntry', 'load_manifest', 'synthesize', 'write_manifest']
