# File: avfusion/config.py
# ⚙️ Environment-based Configuration

import os

from dotenv import load_dotenv

load_dotenv()


def _env_dims(name, default):
    value = os.environ.get(name)
    if not value:
        return default
    return tuple(int(part) for part in value.split(',') if part.strip())


class Config:
    """Base configuration class."""

    # Runtime
    DEBUG = False
    TESTING = False
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'
    LOG_FORMAT = os.environ.get('LOG_FORMAT') or 'console'
    JOBS = int(os.environ.get('AVFUSION_JOBS') or min(4, os.cpu_count() or 1))
    SEED = int(os.environ.get('AVFUSION_SEED') or 0)
    OUTPUT_DIR = os.environ.get('AVFUSION_OUTPUT_DIR') or 'runs'

    # Audio front end
    SAMPLE_RATE_HZ = int(os.environ.get('SAMPLE_RATE_HZ') or 22050)
    WINDOW_LEN = int(os.environ.get('WINDOW_LEN') or 2048)
    HOP_LEN = int(os.environ.get('HOP_LEN') or 512)
    WINDOW = os.environ.get('WINDOW') or 'hann'
    N_MELS = int(os.environ.get('N_MELS') or 40)
    N_COEFFS = int(os.environ.get('N_COEFFS') or 20)
    ROLLOFF_FRACTION = float(os.environ.get('ROLLOFF_FRACTION') or 0.85)
    TUNING_A4_HZ = float(os.environ.get('TUNING_A4_HZ') or 440.0)

    # Audio images and embeddings
    REPRESENTATION = os.environ.get('REPRESENTATION') or 'chromagram'
    COLORMAP = os.environ.get('COLORMAP') or 'viridis'
    EXTRACTOR_SEED = int(os.environ.get('EXTRACTOR_SEED') or 7)
    HFLIP_PROB = float(os.environ.get('HFLIP_PROB') or 0.0)
    VFLIP_PROB = float(os.environ.get('VFLIP_PROB') or 0.0)

    # Classifiers
    HIDDEN_DIMS = _env_dims('HIDDEN_DIMS', (512,))
    REDUCTION = os.environ.get('REDUCTION') or 'mean_segments'
    FUSION_INIT = os.environ.get('FUSION_INIT') or 'transfer'

    AUDIO_LR = float(os.environ.get('AUDIO_LR') or 3e-4)
    AUDIO_BATCH_SIZE = int(os.environ.get('AUDIO_BATCH_SIZE') or 16)
    AUDIO_EPOCHS = int(os.environ.get('AUDIO_EPOCHS') or 60)
    AUDIO_L1_LAMBDA = float(os.environ.get('AUDIO_L1_LAMBDA') or 0.0)

    VIDEO_LR = float(os.environ.get('VIDEO_LR') or 3e-4)
    VIDEO_BATCH_SIZE = int(os.environ.get('VIDEO_BATCH_SIZE') or 16)
    VIDEO_EPOCHS = int(os.environ.get('VIDEO_EPOCHS') or 60)
    VIDEO_L1_LAMBDA = float(os.environ.get('VIDEO_L1_LAMBDA') or 0.0)

    # L1 regularisation belongs to the fusion objective
    FUSION_LR = float(os.environ.get('FUSION_LR') or 1e-4)
    FUSION_BATCH_SIZE = int(os.environ.get('FUSION_BATCH_SIZE') or 128)
    FUSION_EPOCHS = int(os.environ.get('FUSION_EPOCHS') or 150)
    FUSION_L1_LAMBDA = float(os.environ.get('FUSION_L1_LAMBDA') or 1e-5)

    APP_NAME = 'AVFusionHub'
    APP_VERSION = '1.0.0'

    @classmethod
    def as_dict(cls):
        """Return all upper-case settings as a plain dictionary."""
        return {key: getattr(cls, key) for key in dir(cls) if key.isupper()}


class DevelopmentConfig(Config):
    """Development configuration."""

    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration."""

    TESTING = True
    LOG_LEVEL = 'WARNING'
    JOBS = 1


class ProductionConfig(Config):
    """Production configuration."""

    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'
    LOG_FORMAT = 'json'


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig,
}


def get_config(config_name=None):
    """Resolve a configuration class by name (or AVFUSION_CONFIG)."""
    config_name = config_name or os.getenv('AVFUSION_CONFIG', 'default')
    try:
        return config[config_name.lower()]
    except KeyError:
        from .errors import ConfigError
        raise ConfigError(f'unknown configuration {config_name!r}', choices=sorted(config))
