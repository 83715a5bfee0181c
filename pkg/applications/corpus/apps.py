from django.apps import AppConfig


class CorpusConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'applications.corpus'
    verbose_name = 'Corpus de propiedades'
