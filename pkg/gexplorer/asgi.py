"""ASGI de gexplorer: expone `application`."""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'gexplorer.settings')

application = get_asgi_application()
