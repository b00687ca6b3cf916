import os
from fractions import Fraction
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _dyadic(name, default_exponent):
    """Read 2^-k knobs as the exponent k, e.g. REFINE_WIDTH_EXP=20"""
    return Fraction(1, 2 ** int(os.getenv(name, default_exponent)))


class Config:
    """Base configuration"""

    DEBUG = False
    TESTING = False

    # Polynomial cache (JSON document, rewritten atomically)
    YV_CACHE = os.getenv('YV_CACHE', 'yv_cache.json')

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_DIR = os.getenv('LOG_DIR', 'logs')
    LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'False').lower() == 'true'

    # Default index range for verify / census
    DEFAULT_UP_TO = int(os.getenv('DEFAULT_UP_TO', 25))

    # Output
    OUTPUT_FORMAT = os.getenv('OUTPUT_FORMAT', 'text')
    PLOT_DIGITS = int(os.getenv('PLOT_DIGITS', 12))

    # Exact refinement knobs (powers of two)
    REFINE_WIDTH = _dyadic('REFINE_WIDTH_EXP', 20)
    RESIDUE_WIDTH = _dyadic('RESIDUE_WIDTH_EXP', 60)
    RESIDUE_OFFSET = _dyadic('RESIDUE_OFFSET_EXP', 30)
    RESIDUE_TOLERANCE = _dyadic('RESIDUE_TOLERANCE_EXP', 10)
    GRID_STEP = _dyadic('GRID_STEP_EXP', 10)


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'DEBUG')


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    LOG_LEVEL = 'WARNING'
    LOG_TO_FILE = False
    DEFAULT_UP_TO = 8


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'True').lower() == 'true'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}
