# File: avfusion/embeddings/__init__.py
# 🧬 Embedding Package

from .storage import (
    EmbeddingHeader, import_embeddings_csv, load_embedding_index, read_embedding_header,
    read_embeddings, write_embeddings,
)
from .toy_extractor import (
    patch_vector, projection_matrix, segment_assignment, toy_audio_extract, toy_video_extract,
)
from .types import (
    AUDIO_DIM, VIDEO_DIM, VIDEO_SEGMENTS, AudioEmbedding, Modality, ToyExtractorSpec,
    VideoEmbedding,
)

__all__ = [
    'AUDIO_DIM', 'AudioEmbedding', 'EmbeddingHeader', 'Modality', 'ToyExtractorSpec',
    'VIDEO_DIM', 'VIDEO_SEGMENTS', 'VideoEmbedding', 'import_embeddings_csv',
    'load_embedding_index', 'patch_vector', 'projection_matrix', 'read_embedding_header',
    'read_embeddings', 'segment_assignment', 'toy_audio_extract', 'toy_video_extract',
    'write_embeddings',
]
