from django.apps import AppConfig


class NucleoConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.nucleo'
    verbose_name = 'Núcleo geométrico'

    def ready(self):
        # Registra los valores por defecto GEX_* en settings.
        from . import conf  # noqa: F401
