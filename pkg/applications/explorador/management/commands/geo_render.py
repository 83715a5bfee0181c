# applications/explorador/management/commands/geo_render.py

from django.core.management.base import BaseCommand, CommandError

from applications.explorador.render import render
from applications.nucleo.excepciones import GeometriaError

from ._comun import ERROR_ENTRADA, agregar_triangulo, leer_script, triangulo_de


class Command(BaseCommand):
    help = 'Dibuja la figura de un script .geo como SVG.'

    def add_arguments(self, parser):
        parser.add_argument('script', help='Archivo .geo')
        agregar_triangulo(parser)
        parser.add_argument('-o', '--out', help='Archivo SVG de salida (por defecto, la salida estándar).')

    def handle(self, *args, **options):
        script = leer_script(options['script'])
        lados, semilla = triangulo_de(script, options)
        try:
            svg = render(script, lados, semilla=semilla)
        except GeometriaError as e:
            raise CommandError(f'{options["script"]}:{e}', returncode=ERROR_ENTRADA) from e
        if options['out']:
            with open(options['out'], 'w', encoding='utf-8', newline='\n') as f:
                f.write(svg)
            self.stdout.write(self.style.SUCCESS(f'Figura escrita en {options["out"]}'))
        else:
            self.stdout.write(svg, ending='')
