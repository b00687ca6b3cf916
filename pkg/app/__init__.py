# app/__init__.py
import os
from flask import Flask
from config import config
from app.utils.logger import setup_logger


def create_app(config_name=None, **overrides):
    """Application factory pattern"""

    if config_name is None:
        config_name = os.getenv('YV_ENV', 'development')

    app = Flask(__name__)
    app.config.from_object(config[config_name])
    app.config['ENV_NAME'] = config_name
    app.config.update(overrides)

    # Setup logging
    setup_logger(app)

    # Register CLI commands
    from app.cli.commands import register_commands
    register_commands(app)

    return app
