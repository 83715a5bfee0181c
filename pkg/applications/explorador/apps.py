from django.apps import AppConfig


class ExploradorConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.explorador'
    verbose_name = 'Explorador geométrico'
