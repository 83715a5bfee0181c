from django.apps import AppConfig


class MuestreoConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.muestreo'
    verbose_name = 'Muestreo de triángulos'
