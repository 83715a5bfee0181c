from django.apps import AppConfig


class TriangulosConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.triangulos'
    verbose_name = 'Triángulos y centros'
