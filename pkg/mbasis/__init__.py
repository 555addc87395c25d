"""mbasis: exact orthogonal bases of spherical harmonics and spherical monogenics."""

import logging

from flask import Flask

from .config import Config
from .extensions import db

__version__ = '0.1.0'


def create_app(config_class=Config) -> Flask:
    app = Flask(__name__)
    app.config.from_object(config_class)
    app.config['SQLALCHEMY_DATABASE_URI'] = app.config['CACHE_URL']

    level = getattr(logging, str(app.config['LOG_LEVEL']).upper(), None)
    app.logger.setLevel(level if isinstance(level, int) else logging.WARNING)

    db.init_app(app)
    # registers the cache table on db.metadata
    from . import models  # noqa: F401

    app.logger.debug('mbasis %s configured (max degree %d)', __version__, app.config['MAX_DEGREE'])
    return app
