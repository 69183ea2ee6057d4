"""
Settings package for diophantine_lab project.

This package contains environment-specific Django settings:
- base.py: Common settings and the DIOPHANTINE_LAB parameters
- dev.py: Development-specific settings
- prod.py: Settings for long search campaigns

Usage:
- Development: DJANGO_SETTINGS_MODULE=diophantine_lab.settings.dev
- Production: DJANGO_SETTINGS_MODULE=diophantine_lab.settings.prod

The default environment is development.
"""

import os

# Default to development settings if not specified
ENVIRONMENT = os.getenv('DJANGO_ENVIRONMENT', 'development')

if ENVIRONMENT == 'production':
    from .prod import *
else:
    from .dev import *
