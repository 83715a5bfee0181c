# applications/explorador/management/commands/_comun.py

"""Opciones y conversiones compartidas por los comandos geo_*."""

from django.core.management.base import CommandError

from applications.lenguaje.errores import GeoScriptError
from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import sample
from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.primitivas import Circulo, Punto, Recta

ERROR_ASERCION = 1
ERROR_ENTRADA = 2


def agregar_triangulo(parser):
    grupo = parser.add_mutually_exclusive_group()
    grupo.add_argument('--triangle', help='Lados a,b,c del triángulo (por ejemplo 3,4,5).')
    grupo.add_argument('--seed', type=int, default=0, help='Semilla para sortear un triángulo que cumpla las restricciones.')


def leer_script(ruta):
    try:
        with open(ruta, encoding='utf-8') as f:
            fuente = f.read()
    except OSError as e:
        raise CommandError(f'{ruta}: {e.strerror}', returncode=ERROR_ENTRADA) from e
    try:
        return parse(fuente)
    except GeoScriptError as e:
        raise CommandError(f'{ruta}:{e}', returncode=ERROR_ENTRADA) from e


def lados_de(texto):
    try:
        lados = tuple(float(x) for x in texto.split(','))
    except ValueError as e:
        raise CommandError(f'--triangle inválido: {texto}', returncode=ERROR_ENTRADA) from e
    if len(lados) != 3:
        raise CommandError(f'--triangle necesita tres lados: {texto}', returncode=ERROR_ENTRADA)
    return lados


def triangulo_de(script, opciones):
    """(lados, semilla) del triángulo pedido por --triangle o sorteado con --seed."""
    if opciones.get('triangle'):
        return lados_de(opciones['triangle']), opciones.get('seed') or 0
    try:
        muestra = sample(script, 1, seed=opciones.get('seed') or 0)[0]
    except GeometriaError as e:
        raise CommandError(str(e), returncode=ERROR_ENTRADA) from e
    return muestra.forma, muestra.semilla


def _g(x):
    return f'{float(x):.15g}'


def formatear_valor(valor):
    if isinstance(valor, Punto):
        return f'({_g(valor.x)}, {_g(valor.y)})'
    if isinstance(valor, Recta):
        return f'{_g(valor.a)}·x + {_g(valor.b)}·y + {_g(valor.c)} = 0'
    if isinstance(valor, Circulo):
        return f'centro {formatear_valor(valor.centro)} radio {_g(valor.radio)}'
    if isinstance(valor, (list, tuple)):
        return '[' + ', '.join(formatear_valor(v) for v in valor) + ']'
    return _g(valor)
