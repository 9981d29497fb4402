"""
Django settings for permutahedra_project project.

The project has no database and no web surface: Django provides the
management-command CLI, the settings layer and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

env = environ.Env(
    DJANGO_DEBUG=(bool, False),
    PERMUTAHEDRA_MAX_ELL=(int, 4),
    EGF_DEFAULT_DX=(int, 10),
    EGF_DEFAULT_DS=(int, 6),
    EGF_DEFAULT_DY=(int, 10),
    ORACLE_MAX_N=(int, 7),
    ORACLE_FLAG_MAX_N=(int, 6),
    MINKOWSKI_MAX_N=(int, 16),
    PERMUTAHEDRA_LOG_LEVEL=(str, 'WARNING'),
)

# Optional .env next to manage.py
if (BASE_DIR / '.env').exists():
    environ.Env.read_env(BASE_DIR / '.env')

# Using 'or' ensures default is used when DJANGO_SECRET_KEY is set to empty string
SECRET_KEY = env.str('DJANGO_SECRET_KEY', default='') or 'django-insecure-permutahedra-local-key'

DEBUG = env('DJANGO_DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'exactmath',
    'faces',
    'counting',
    'egf',
    'minkowski',
    'oracle',
    'cli',
]

# No models, no database.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework settings (serializers only, no views)
REST_FRAMEWORK = {
    'COERCE_DECIMAL_TO_STRING': True,
    'UNAUTHENTICATED_USER': None,
}


# Permutahedra specific settings

# Largest flag length accepted by the CLI; exponent maps grow combinatorially.
PERMUTAHEDRA_MAX_ELL = env('PERMUTAHEDRA_MAX_ELL')

# Default truncation caps of the exponential generating function.
EGF_DEFAULT_DX = env('EGF_DEFAULT_DX')
EGF_DEFAULT_DS = env('EGF_DEFAULT_DS')
EGF_DEFAULT_DY = env('EGF_DEFAULT_DY')

# Size guards for the brute-force oracle; the CLI never goes past the oracle's own limits.
ORACLE_MAX_N = env('ORACLE_MAX_N')
ORACLE_FLAG_MAX_N = env('ORACLE_FLAG_MAX_N')

# Subset collections are stored as bitmasks over [n]; capped at 16 by the library.
MINKOWSKI_MAX_N = env('MINKOWSKI_MAX_N')


# Logging: stdout is reserved for JSON payloads, everything else goes to stderr.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['stderr'],
        'level': env('PERMUTAHEDRA_LOG_LEVEL'),
    },
}
