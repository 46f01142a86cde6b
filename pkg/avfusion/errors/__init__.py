"""
Error hierarchy for the pipeline.
Every failure carries the process exit code the CLI reports for it.
"""


class AVFusionError(Exception):
    """Base class for all pipeline errors."""

    exit_code = 2

    def __init__(self, message='', **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        if not self.context:
            return self.message
        details = ', '.join(f'{k}={v}' for k, v in sorted(self.context.items()))
        return f'{self.message} ({details})' if self.message else details


class ValidationFailure(AVFusionError):
    """Input or configuration rejected before any work starts."""

    exit_code = 1


class RuntimeFailure(AVFusionError):
    """Failure while processing otherwise valid input."""

    exit_code = 2


# Parameters and configuration

class InvalidParameter(ValidationFailure):
    pass


class ConfigError(ValidationFailure):
    pass


class ManifestError(ValidationFailure):
    pass


class MissingModality(ValidationFailure):
    """A clip lacks its audio or video embedding."""

    def __init__(self, clip_id, modality):
        super().__init__(f'clip {clip_id!r} has no {modality} embedding',
                         clip_id=clip_id, modality=modality)
        self.clip_id = clip_id
        self.modality = modality


class MissingInput(ValidationFailure):
    """A clip's rendered image or video frames are missing."""

    def __init__(self, clip_id, path):
        super().__init__(f'missing input for clip {clip_id!r}', path=str(path))
        self.clip_id = clip_id
        self.path = path


class MissingReport(ValidationFailure):
    pass


# Audio signal processing

class MalformedAudio(RuntimeFailure):
    pass


class EmptySignal(RuntimeFailure):
    pass


class DegenerateFilterbank(InvalidParameter):
    pass


class InsufficientFrames(RuntimeFailure):
    pass


# Images

class EmptyTrack(RuntimeFailure):
    pass


class MalformedImage(RuntimeFailure):
    pass


class DimensionMismatch(RuntimeFailure):
    pass


# Embeddings

class EmptyInput(RuntimeFailure):
    pass


class MalformedEmbeddingFile(RuntimeFailure):
    pass


class BadMagic(MalformedEmbeddingFile):
    pass


class VersionMismatch(MalformedEmbeddingFile):
    pass


class ShapeMismatch(MalformedEmbeddingFile):
    """A record's shape disagrees with the file header or the modality contract."""


class DuplicateClipId(MalformedEmbeddingFile):
    pass


# Neural engine

class ShapeError(RuntimeFailure):
    pass


class EmptyBatch(RuntimeFailure):
    pass


class EmptyDataset(RuntimeFailure):
    pass


class MalformedModel(RuntimeFailure):
    pass


class IncompatibleArchitecture(RuntimeFailure):
    pass
