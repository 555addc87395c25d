import logging

from mbasis import create_app
from mbasis.config import Config
from mbasis.extensions import db


def bootstrap(config_class=Config):
    app = create_app(config_class)
    app.logger.setLevel(logging.INFO)

    with app.app_context():
        db.create_all()
        app.logger.info('cache database ready: %s', db.engine.url)
    return app


if __name__ == '__main__':
    bootstrap()
