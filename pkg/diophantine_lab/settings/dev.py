"""
Development settings for diophantine_lab project.

This file contains settings specific to local work on the laboratory.
It imports base settings and overrides them for development.

Features enabled in development:
- Debug mode
- Verbose logging for the local apps

The .env file (LOG_LEVEL, SECRET_KEY) is loaded by base.py.
"""

from .base import *

DEBUG = True

# Development-specific logging
for app in LOCAL_APPS:
    LOGGING['loggers'][app]['level'] = 'DEBUG'
