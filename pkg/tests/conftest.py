import pytest
from hypothesis import HealthCheck, settings

from mbasis import create_app
from mbasis.cli import main
from mbasis.config import Config

settings.register_profile(
    'mbasis',
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile('mbasis')


class SandboxConfig(Config):
    MAX_DEGREE = 8
    JOBS = 1
    LOG_LEVEL = 'WARNING'
    CACHE_URL = 'sqlite:///:memory:'


@pytest.fixture
def config_class(tmp_path):
    return type('TmpConfig', (SandboxConfig,), {'CACHE_URL': f'sqlite:///{tmp_path / "cache.db"}'})


@pytest.fixture
def app(config_class):
    app = create_app(config_class)
    with app.app_context():
        yield app


@pytest.fixture
def run_cli(capsys, config_class):
    def run(argv, config=None):
        code = main([str(a) for a in argv], config_class=config or config_class)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
