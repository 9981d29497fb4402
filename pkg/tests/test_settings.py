"""
Tests for Django settings configuration.

These tests verify that the permutahedra settings read their caps and guards
from environment variables.
"""

import os
import unittest
from importlib import reload
from unittest import mock

import permutahedra_project.settings as settings_module

ENV_NAMES = [
    'DJANGO_SECRET_KEY',
    'PERMUTAHEDRA_MAX_ELL',
    'EGF_DEFAULT_DX',
    'EGF_DEFAULT_DS',
    'EGF_DEFAULT_DY',
    'ORACLE_MAX_N',
    'ORACLE_FLAG_MAX_N',
    'MINKOWSKI_MAX_N',
    'PERMUTAHEDRA_LOG_LEVEL',
]


class SettingsTestCase(unittest.TestCase):
    """Reloads the settings module under a patched environment."""

    def load(self, **env):
        clean = {key: value for key, value in os.environ.items() if key not in ENV_NAMES}
        clean.update(env)
        with mock.patch.dict(os.environ, clean, clear=True):
            return reload(settings_module)

    def tearDown(self):
        reload(settings_module)


class SecretKeyTest(SettingsTestCase):
    """Tests for SECRET_KEY configuration."""

    def test_secret_key_uses_default_when_env_not_set(self):
        """Test that SECRET_KEY uses default when DJANGO_SECRET_KEY is not set."""
        self.assertTrue(self.load().SECRET_KEY)

    def test_secret_key_uses_default_when_env_is_empty_string(self):
        """Test that SECRET_KEY uses default when DJANGO_SECRET_KEY is empty string."""
        self.assertTrue(self.load(DJANGO_SECRET_KEY='').SECRET_KEY)

    def test_secret_key_uses_custom_value_when_env_is_set(self):
        """Test that SECRET_KEY uses custom value when DJANGO_SECRET_KEY is set."""
        self.assertEqual(self.load(DJANGO_SECRET_KEY='my-key').SECRET_KEY, 'my-key')


class CapsTest(SettingsTestCase):
    """Tests for the series caps and size guards."""

    def test_defaults(self):
        """Test the documented defaults."""
        module = self.load()
        self.assertEqual(module.PERMUTAHEDRA_MAX_ELL, 4)
        self.assertEqual((module.EGF_DEFAULT_DX, module.EGF_DEFAULT_DS, module.EGF_DEFAULT_DY), (10, 6, 10))
        self.assertEqual(module.ORACLE_MAX_N, 7)
        self.assertEqual(module.ORACLE_FLAG_MAX_N, 6)
        self.assertEqual(module.MINKOWSKI_MAX_N, 16)

    def test_overrides_are_cast_to_int(self):
        """Test that environment overrides arrive as integers."""
        module = self.load(ORACLE_MAX_N='5', EGF_DEFAULT_DY='12', PERMUTAHEDRA_MAX_ELL='2')
        self.assertEqual(module.ORACLE_MAX_N, 5)
        self.assertEqual(module.EGF_DEFAULT_DY, 12)
        self.assertEqual(module.PERMUTAHEDRA_MAX_ELL, 2)


class LoggingTest(SettingsTestCase):
    """Tests for the logging configuration."""

    def test_level_from_env(self):
        """Test that PERMUTAHEDRA_LOG_LEVEL sets the root level."""
        self.assertEqual(self.load(PERMUTAHEDRA_LOG_LEVEL='DEBUG').LOGGING['root']['level'], 'DEBUG')

    def test_logs_go_to_stderr(self):
        """Test that stdout stays free for JSON payloads."""
        handler = self.load().LOGGING['handlers']['stderr']
        self.assertEqual(handler['stream'], 'ext://sys.stderr')

    def test_no_database(self):
        """Test that the project runs without a database."""
        self.assertEqual(self.load().DATABASES, {})
