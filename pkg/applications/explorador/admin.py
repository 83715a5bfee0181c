# applications/explorador/admin.py

from django.contrib import admin
from .models import Exploracion, EntradaCatalogo

class EntradaCatalogoInline(admin.TabularInline):
    """Entradas del catálogo dentro de su exploración (sólo lectura)."""
    model = EntradaCatalogo
    extra = 0
    fields = ('orden', 'get_pasos_texto', 'tipo', 'afirmacion', 'residuo_confirmacion', 'trivial')
    readonly_fields = fields
    can_delete = False

@admin.register(Exploracion)
class ExploracionAdmin(admin.ModelAdmin):
    list_display = (
        'id',
        'nombre',
        'configuracion',
        'restricciones',
        'profundidad',
        'semilla',
        'secuencias',
        'get_no_triviales',
        'fecha',
    )
    list_filter = ('configuracion', 'profundidad')
    search_fields = ('nombre', 'restricciones')
    inlines = [EntradaCatalogoInline]

    def get_no_triviales(self, obj):
        return obj.get_no_triviales()
    get_no_triviales.short_description = 'Relaciones no triviales'

@admin.register(EntradaCatalogo)
class EntradaCatalogoAdmin(admin.ModelAdmin):
    list_display = ('exploracion', 'orden', 'get_pasos_texto', 'tipo', 'afirmacion', 'trivial')
    list_filter = ('tipo', 'trivial', 'exploracion__configuracion')
    search_fields = ('afirmacion',)
    ordering = ('exploracion', 'orden')
