from django.contrib import admin
from django.urls import path, include
from django.views.generic import RedirectView

urlpatterns = [
    path('admin/', admin.site.urls),
    path('', RedirectView.as_view(pattern_name='explorador_app:exploracion_list', permanent=False)),
    path('explorador/', include('applications.explorador.urls')),
    path('select2/', include('django_select2.urls')),
]
