"""
Django settings for the quot_dt project.

The project hosts no HTTP surface: the ``localization`` app is driven through
its management commands, and settings only carry the engine defaults below.
Every QUOTDT_* value can be overridden from the environment or a .env file.
"""
import os
from dotenv import load_dotenv
from pathlib import Path

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'quot-dt-local-only')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'localization.apps.LocalizationConfig',
]

# Nothing is persisted.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'UNICODE_JSON': True,
}

# Engine defaults

QUOTDT_THREADS = int(os.getenv('QUOTDT_THREADS', '1'))
QUOTDT_SEED = int(os.getenv('QUOTDT_SEED', '0'))
QUOTDT_TRIALS = int(os.getenv('QUOTDT_TRIALS', '3'))
QUOTDT_PARAM_BOUND = int(os.getenv('QUOTDT_PARAM_BOUND', str(10 ** 6)))
QUOTDT_MAX_RESAMPLES = int(os.getenv('QUOTDT_MAX_RESAMPLES', '32'))
# 'functions' or 'tangents', see localization/conventions.py
QUOTDT_CHART_CONVENTION = os.getenv('QUOTDT_CHART_CONVENTION', 'functions')
# 'lines' or 'quotients'
QUOTDT_BUNDLE_CONVENTION = os.getenv('QUOTDT_BUNDLE_CONVENTION', 'lines')
QUOTDT_LOG_LEVEL = os.getenv('QUOTDT_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'localization': {
            'handlers': ['console'],
            'level': QUOTDT_LOG_LEVEL,
            'propagate': False,
        },
    },
}
