# app/utils/__init__.py
"""
Utility modules for yv-census
"""

from app.utils.logger import setup_logger

__all__ = ['setup_logger']
