from django.apps import AppConfig


class ApolonioConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.apolonio'
    verbose_name = 'Problema de Apolonio'
