# app/utils/logger.py
import logging
import os
import sys
import uuid
from logging.handlers import RotatingFileHandler
from flask import has_app_context, g


def setup_logger(app):
    """
    Configure application logging

    Args:
        app: Flask application instance

    Usage:
        - Set LOG_LEVEL=INFO in .env for normal runs (essential info only)
        - Set LOG_LEVEL=DEBUG in .env for per-index timings
        - Set LOG_TO_FILE=true to write LOG_DIR/yv.log instead of stderr
    """

    # Check if OUR handler already exists
    for handler in app.logger.handlers:
        if getattr(handler, '_yv_handler', False):
            return app.logger

    log_level_str = app.config.get('LOG_LEVEL', 'INFO')
    log_level = getattr(logging, log_level_str.upper(), logging.INFO)

    app.logger.setLevel(log_level)

    # Disable propagation to prevent duplicate logs
    app.logger.propagate = False

    # Remove any default Flask handlers
    app.logger.handlers.clear()

    formatter = EnhancedFormatter(
        '[%(asctime)s] %(levelname)-8s [%(run_id)s] [%(module)s.%(funcName)s:%(lineno)d] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if app.config.get('LOG_TO_FILE'):
        log_dir = app.config.get('LOG_DIR', 'logs')
        os.makedirs(log_dir, exist_ok=True)
        destination = os.path.join(log_dir, 'yv.log')
        handler = RotatingFileHandler(
            destination,
            maxBytes=50 * 1024 * 1024,  # 50MB
            backupCount=10
        )
    else:
        destination = 'stderr'
        handler = logging.StreamHandler(sys.stderr)
    handler._yv_handler = True
    handler.setLevel(log_level)
    handler.setFormatter(formatter)
    app.logger.addHandler(handler)

    # Startup message
    app.logger.info("=" * 100)
    app.logger.info(f"🚀 yv-census started [PID: {os.getpid()}]")
    app.logger.info(f"   Environment: {app.config.get('ENV_NAME', 'development')}")
    app.logger.info(f"   Log Level: {log_level_str} ({'Verbose' if log_level == logging.DEBUG else 'Essential'} Mode)")
    app.logger.info(f"   Log Destination: {destination}")
    app.logger.info("=" * 100)

    return app.logger


class EnhancedFormatter(logging.Formatter):
    """Custom formatter that tags every record with the current command run"""

    def format(self, record):
        if has_app_context():
            if not hasattr(g, 'run_id'):
                g.run_id = str(uuid.uuid4())[:8]
            record.run_id = g.run_id
        else:
            record.run_id = '--------'

        return super().format(record)


# Utility functions for structured logging

def log_run_start(logger, command, indices):
    """Log the start of a CLI command over a range of indices"""
    logger.info("🔍 " + "=" * 96)
    logger.info(f"🔍 Starting {command}")
    if indices:
        logger.info(f"   Indices: {indices[0]}..{indices[-1]} ({len(indices)} total)")
    logger.info("🔍 " + "=" * 96)


def log_check_result(logger, n, check, passed, detail=None):
    """Log a single theorem check in a structured format"""
    emoji = "✅" if passed else "❌"
    level = logging.DEBUG if passed else logging.ERROR
    message = f"{emoji} n={n} | {check}: {'PASS' if passed else 'FAIL'}"
    if detail:
        message += f" | {detail}"
    logger.log(level, message)


def log_performance(logger, operation, duration_ms, success=True):
    """Log performance metrics for operations"""
    emoji = "⚡" if success else "🐌"
    status = "SUCCESS" if success else "FAILED"
    logger.info(f"{emoji} Performance | {operation}: {duration_ms:.2f}ms | {status}")
