from django.apps import AppConfig


class EgfConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'egf'
