# File: tests/test_config.py
# 🧪 Configuration Testing

import pytest

from avfusion.config import Config, DevelopmentConfig, ProductionConfig, TestingConfig, get_config
from avfusion.errors import ConfigError
from avfusion.neural.types import TrainConfig


class TestConfig:
    """Test configuration classes."""

    def test_base_config(self):
        """Test base configuration."""
        config = Config()

        assert config.SAMPLE_RATE_HZ == 22050
        assert config.WINDOW_LEN == 2048
        assert config.HOP_LEN == 512
        assert config.N_MELS == 40
        assert config.N_COEFFS == 20
        assert config.HIDDEN_DIMS == (512,)
        assert config.REDUCTION == 'mean_segments'
        assert config.FUSION_INIT == 'transfer'

    def test_phase_defaults(self):
        """Unimodal phases share Adam settings; L1 applies to fusion only."""
        assert Config.AUDIO_LR == Config.VIDEO_LR == 3e-4
        assert Config.FUSION_BATCH_SIZE == 128
        assert Config.FUSION_EPOCHS == 150
        assert Config.AUDIO_L1_LAMBDA == 0.0
        assert Config.FUSION_L1_LAMBDA == 1e-5

    def test_development_config(self):
        """Test development configuration."""
        config = DevelopmentConfig()

        assert config.DEBUG is True

    def test_testing_config(self):
        """Test testing configuration."""
        config = TestingConfig()

        assert config.TESTING is True
        assert config.JOBS == 1
        assert config.LOG_LEVEL == 'WARNING'

    def test_production_config(self):
        """Test production configuration."""
        config = ProductionConfig()

        assert config.DEBUG is False
        assert config.LOG_FORMAT == 'json'

    def test_config_inheritance(self):
        """Test configuration inheritance."""
        assert issubclass(DevelopmentConfig, Config)
        assert TestingConfig.SEED == Config.SEED

    def test_as_dict_has_only_settings(self):
        """as_dict exposes upper-case settings only."""
        settings = TestingConfig.as_dict()

        assert settings['TESTING'] is True
        assert all(key.isupper() for key in settings)


class TestConfigLookup:
    """Test profile resolution."""

    def test_by_name(self):
        """Names are case-insensitive."""
        assert get_config('Testing') is TestingConfig
        assert get_config('production') is ProductionConfig

    def test_from_environment(self, monkeypatch):
        """AVFUSION_CONFIG picks the profile when no name is given."""
        monkeypatch.setenv('AVFUSION_CONFIG', 'testing')

        assert get_config() is TestingConfig

    def test_unknown_profile(self):
        """Unknown names are a configuration error."""
        with pytest.raises(ConfigError):
            get_config('staging')

    def test_phase_seeds(self):
        """Audio, video and fusion seeds are SEED, SEED + 1 and SEED + 2."""
        seeds = [TrainConfig.for_phase(TestingConfig, p).seed for p in ('audio', 'video', 'fusion')]

        assert seeds == [TestingConfig.SEED, TestingConfig.SEED + 1, TestingConfig.SEED + 2]
