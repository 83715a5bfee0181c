from django.apps import AppConfig


class LenguajeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.lenguaje'
    verbose_name = 'Lenguaje de construcción'
