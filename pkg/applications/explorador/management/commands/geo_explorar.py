# applications/explorador/management/commands/geo_explorar.py

from django.core.management.base import BaseCommand, CommandError

from applications.explorador.configuraciones import CONFIGURACIONES, configuracion
from applications.explorador.menu import Menu
from applications.explorador.motor import run
from applications.nucleo.conf import settings
from applications.nucleo.excepciones import GeometriaError

from ._comun import ERROR_ENTRADA


class Command(BaseCommand):
    help = 'Explora secuencias de construcción sobre una configuración inicial y escribe el catálogo.'

    def add_arguments(self, parser):
        parser.add_argument('--start', required=True, choices=list(CONFIGURACIONES), help='Configuración inicial.')
        parser.add_argument('--depth', type=int, choices=[0, 1, 2], default=1, help='Cantidad máxima de pasos.')
        parser.add_argument('--constraints', default='', help='Restricciones de forma separadas por ";".')
        parser.add_argument('--types', default='', help='Tipos de ceviana/centro para two-cevians y cevian-center (ej. gergonne,nagel).')
        parser.add_argument('--menu', help='Menú de construcciones (JSON).')
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--samples', type=int, help='Muestras de detección.')
        parser.add_argument('--confirm', type=int, help='Muestras de confirmación.')
        parser.add_argument('--threads', type=int, help='Hilos de análisis (por defecto GEX_THREADS).')
        parser.add_argument('--out', help='Archivo JSON del catálogo (por defecto, la salida estándar).')
        parser.add_argument('--guardar', action='store_true', help='Guardar el catálogo en la base de datos.')
        parser.add_argument('--nombre', default='', help='Nombre de la exploración guardada.')

    def handle(self, *args, **options):
        for opcion in ('samples', 'confirm'):
            if options[opcion] is not None and options[opcion] < 1:
                raise CommandError(f'--{opcion} debe ser positivo', returncode=ERROR_ENTRADA)
        try:
            tipos = [t.strip() for t in options['types'].split(',') if t.strip()] or None
            inicio = configuracion(options['start'], options['constraints'], tipos)
            menu = Menu.desde_archivo(options['menu']) if options['menu'] else Menu.por_defecto()
            catalogo = run(
                inicio, options['depth'], menu=menu, semilla=options['seed'],
                muestras=options['samples'], confirmacion=options['confirm'],
                hilos=options['threads'] or settings.GEX_THREADS,
            )
            catalogo.validar()
        except (GeometriaError, ValueError, OSError) as e:
            raise CommandError(str(e), returncode=ERROR_ENTRADA) from e

        resumen = (
            f'{catalogo.secuencias} secuencias analizadas ({len(catalogo.omisiones)} omitidas), '
            f'{len(catalogo.no_triviales)} relaciones, {len(catalogo.triviales)} triviales filtradas'
        )
        if options['out']:
            catalogo.escribir(options['out'])
            self.stdout.write(resumen)
            self.stdout.write(self.style.SUCCESS(f'Catálogo escrito en {options["out"]}'))
        else:
            self.stdout.write(catalogo.a_json(), ending='')
            self.stderr.write(resumen)
        if options['guardar']:
            exploracion = catalogo.guardar(nombre=options['nombre'])
            self.stdout.write(self.style.SUCCESS(f'Exploración #{exploracion.pk} guardada'))
