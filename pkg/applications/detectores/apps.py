from django.apps import AppConfig


class DetectoresConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.detectores'
    verbose_name = 'Detectores de propiedades'
