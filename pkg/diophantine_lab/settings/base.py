"""
Django settings for diophantine_lab project.

Base settings shared across all environments.
This file contains the settings common to development, testing and
production runs of the laboratory commands.

For environment-specific settings, see:
- dev.py: Development settings
- prod.py: Production (long campaign) settings

Math-affecting parameters live in DIOPHANTINE_LAB below and are never
read from the environment.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Loaded before LOG_LEVEL and SECRET_KEY are read; process variables win.
load_dotenv(BASE_DIR / '.env')

# Management commands only; no request handling, so the key is never used for signing.
SECRET_KEY = os.getenv(
    'SECRET_KEY',
    'django-insecure-diophantine-lab-local-key'
)

DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 'yes', 'on')

ALLOWED_HOSTS = []

# Application definition
THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    # Shared serializers, command plumbing and errors
    'core',
    # Exact rationals, quadratic fields and predicates
    'kernel',
    # Law-of-cosines lemma and task verification
    'trigon',
    # Concyclic rational-distance constructions
    'circles',
    # Bounded n-gon search
    'ngons',
    # Closed-form bounds and claim checks
    'bounds',
]

INSTALLED_APPS = THIRD_PARTY_APPS + LOCAL_APPS

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [BASE_DIR / 'templates'],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [],
        },
    },
]

# No persistence layer: every result is a file written by a command.
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework is used for its serializers, renderer and parser only.
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'UNAUTHENTICATED_USER': None,
    'COMPACT_JSON': False,
}

# Laboratory parameters
DIOPHANTINE_LAB = {
    # Square-free decomposition trial-divides up to this prime bound, then
    # hands the remaining cofactor to sympy.
    'TRIAL_DIVISION_BOUND': 10_000,
    # brute_force_oracle refuses frames larger than this.
    'ORACLE_MAX_DIST': 12,
    'SEARCH_DEFAULTS': {
        'k': 3,
        'max_dist': 20,
        'mode': 'sets',
    },
    'SWEEP_DEFAULTS': {
        'a_max': 40,
        'b_max': 40,
        'k_max': 15,
        'm_max': 15,
        'b_max_tasks': 60,
        'm_max_tasks': 30,
        'crossings': 1000,
        'seed': 20240601,
        'grid_max': 20,
        'lemma2_limit': 20,
    },
    'BOUNDS_DEFAULTS': {
        'k_max': 3,
        'max_dist': 30,
        'mode': 'all',
    },
    'REPORT_DIR': BASE_DIR / 'reports',
    'WORKERS': 1,
    'JSON_INDENT': 2,
}

# Logging configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {process:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'logs' / 'lab.log',
            'formatter': 'verbose',
        },
        'console': {
            'level': os.getenv('LOG_LEVEL', 'WARNING'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'level': 'WARNING',
            'propagate': False,
        },
        **{
            app: {
                'handlers': ['file', 'console'],
                'level': 'INFO',
                'propagate': False,
            }
            for app in LOCAL_APPS
        },
    },
}

# Create logs directory
logs_dir = BASE_DIR / 'logs'
if not logs_dir.exists():
    logs_dir.mkdir(parents=True, exist_ok=True)
