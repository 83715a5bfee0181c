# applications/explorador/management/commands/geo_eval.py

from django.core.management.base import BaseCommand, CommandError

from applications.lenguaje.evaluador import evaluate
from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.precision import FAST
from applications.triangulos.triangulo import Triangulo

from ._comun import (
    ERROR_ASERCION, ERROR_ENTRADA, agregar_triangulo, formatear_valor, leer_script, triangulo_de,
)


class Command(BaseCommand):
    help = 'Evalúa un script .geo sobre un triángulo y verifica sus afirmaciones.'

    def add_arguments(self, parser):
        parser.add_argument('script', help='Archivo .geo')
        agregar_triangulo(parser)

    def handle(self, *args, **options):
        script = leer_script(options['script'])
        lados, semilla = triangulo_de(script, options)
        try:
            T = Triangulo.from_sides(*(FAST.num(x) for x in lados))
            env = evaluate(script, T, semilla=semilla)
        except GeometriaError as e:
            raise CommandError(f'{options["script"]}:{e}', returncode=ERROR_ENTRADA) from e

        self.stdout.write(f'triangle {script.vertices}: a={T.a:.15g} b={T.b:.15g} c={T.c:.15g}')
        for nombre, valor in env.valores.items():
            self.stdout.write(f'{nombre} = {formatear_valor(valor)}')
        for resultado in env.resultados:
            estado = 'PASS' if resultado.cumple else 'FAIL'
            detalle = resultado.error or ('' if resultado.residuo is None else f'residuo {float(resultado.residuo):.3e}')
            self.stdout.write(f'{estado} {resultado.texto} {detalle}'.rstrip())

        fallidas = env.fallidas()
        if fallidas:
            raise CommandError(f'{len(fallidas)} afirmación(es) no se cumplen', returncode=ERROR_ASERCION)
