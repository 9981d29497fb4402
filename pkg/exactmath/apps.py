from django.apps import AppConfig


class ExactmathConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exactmath'
