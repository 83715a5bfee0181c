# applications/explorador/views.py
from django.http import HttpResponse, JsonResponse
from django.shortcuts import get_object_or_404
from django.views.generic import ListView
import openpyxl

from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import sample
from applications.nucleo.excepciones import GeometriaError

from .filters import EntradaCatalogoFilter
from .models import Exploracion, EntradaCatalogo
from .render import render


class ExploracionListView(ListView):
    model = Exploracion
    template_name = "explorador/exploracion_list.html"
    context_object_name = 'exploraciones'


class EntradaCatalogoListView(ListView):
    model = EntradaCatalogo
    template_name = "explorador/entrada_list.html"
    context_object_name = 'entradas'
    paginate_by = 100

    def get_queryset(self):
        queryset = super().get_queryset().select_related('exploracion')
        # por defecto sólo las no triviales
        if 'trivial' not in self.request.GET:
            queryset = queryset.filter(trivial=False)
        self.filterset = EntradaCatalogoFilter(self.request.GET, queryset=queryset)
        return self.filterset.qs

    def get_context_data(self, **kwargs):
        context = super().get_context_data(**kwargs)
        context["filterset"] = self.filterset
        return context


def catalogo_json(request, pk):
    exploracion = get_object_or_404(Exploracion, pk=pk)
    return JsonResponse(exploracion.a_dict(), json_dumps_params={'indent': 2, 'ensure_ascii': False})


def exportar_catalogo_excel(request, pk):
    exploracion = get_object_or_404(Exploracion, pk=pk)
    workbook = openpyxl.Workbook()
    sheet = workbook.active
    sheet.title = 'Catálogo'
    headers = [
        'Orden', 'Pasos', 'Tipo', 'Afirmación', 'Muestras', 'Residuo rápido',
        'Residuo confirmación', 'Residuo de control', 'Residuo sin restricciones', 'Trivial',
    ]
    sheet.append(headers)
    for entrada in exploracion.entradas.all():
        sheet.append([
            entrada.orden,
            entrada.get_pasos_texto(),
            entrada.tipo,
            entrada.afirmacion,
            entrada.muestras,
            entrada.residuo_rapido,
            entrada.residuo_confirmacion,
            entrada.residuo_control,
            entrada.residuo_sin_restricciones,
            'Sí' if entrada.trivial else 'No',
        ])
    response = HttpResponse(content_type='application/vnd.openxmlformats-officedocument.spreadsheetml.sheet')
    response['Content-Disposition'] = f'attachment; filename="catalogo_{exploracion.pk}.xlsx"'
    workbook.save(response)
    return response


def figura_entrada(request, pk):
    """
    SVG de una entrada. El triángulo sale de `?lados=a,b,c` o, si no se
    indica, de la primera muestra sorteada con la semilla de la exploración.
    """
    entrada = get_object_or_404(EntradaCatalogo.objects.select_related('exploracion'), pk=pk)
    try:
        script = parse(entrada.fuente())
        lados = request.GET.get('lados')
        if lados:
            lados, semilla = [float(x) for x in lados.split(',')], entrada.exploracion.semilla
            if len(lados) != 3:
                raise ValueError('se esperan tres lados')
        else:
            muestra = sample(script, 1, seed=entrada.exploracion.semilla)[0]
            lados, semilla = muestra.forma, muestra.semilla
        svg = render(script, lados, semilla=semilla)
    except (GeometriaError, ValueError) as e:
        return JsonResponse({'status': 'error', 'message': str(e)}, status=400)
    return HttpResponse(svg, content_type='image/svg+xml')
