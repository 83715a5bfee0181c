# applications/explorador/urls.py
from django.urls import path
from . import views

app_name = 'explorador_app'

urlpatterns = [
    path('exploraciones/', views.ExploracionListView.as_view(), name='exploracion_list'),
    path('catalogo/', views.EntradaCatalogoListView.as_view(), name='entrada_list'),

    # Exportaciones de una exploración
    path('exploraciones/<int:pk>/json/', views.catalogo_json, name='catalogo_json'),
    path('exploraciones/<int:pk>/excel/', views.exportar_catalogo_excel, name='exportar_catalogo_excel'),

    # Figura de una entrada
    path('catalogo/<int:pk>/figura.svg', views.figura_entrada, name='figura_entrada'),
]
