"""
Django settings for the condtab project.

The project has no database and no HTTP surface: Django provides the
settings layer, the management commands and the test runner. Prover limits
and the oracle budget are read from here (see tableaux.engine.Limits).
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / '.env')

SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-condtab-local-only')

DEBUG = os.getenv('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'formulas',
    'tableaux',
    'semantics',
    'cli',
]

# Proofs, models and verdicts are exchanged as JSON; nothing is stored.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Prover

PROVER_MAX_NODES = int(os.getenv('PROVER_MAX_NODES', '10000'))
PROVER_MAX_INDICES = int(os.getenv('PROVER_MAX_INDICES', '64'))
PROVER_MAX_DEPTH = int(os.getenv('PROVER_MAX_DEPTH', '2000'))
PROVER_DEFAULT_LOGIC = os.getenv('PROVER_DEFAULT_LOGIC', 'ck')

# Number of candidate models brute_force_valid may enumerate.
ORACLE_MAX_MODELS = int(os.getenv('ORACLE_MAX_MODELS', '200000'))

# Node budget of each corpus entry.
CORPUS_NODE_BUDGET = int(os.getenv('CORPUS_NODE_BUDGET', '500'))

PROVER_LOG_LEVEL = os.getenv('PROVER_LOG_LEVEL', 'WARNING')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
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
        app: {
            'handlers': ['console'],
            'level': PROVER_LOG_LEVEL,
            'propagate': False,
        }
        for app in ('formulas', 'tableaux', 'semantics', 'cli')
    },
}


# Celery Configuration
# Queries run inline unless a broker is configured.
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'memory://')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', 'cache+memory://')
CELERY_TASK_ALWAYS_EAGER = os.getenv('CELERY_TASK_ALWAYS_EAGER', 'True').lower() == 'true'
CELERY_ACCEPT_CONTENT = ['application/json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_TRACK_STARTED = True
CELERY_TASK_TIME_LIMIT = 30 * 60  # 30 minutes max per query
