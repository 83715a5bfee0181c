# applications/explorador/configuraciones.py

"""
Configuraciones iniciales de la exploración.

Cada una es un triángulo ABC con un elemento Gergonne ya construido, escrito
en el lenguaje de construcción. Las restricciones de forma se agregan al
encabezado al construir el script.
"""

from dataclasses import dataclass

from applications.lenguaje.parser import parse
from applications.triangulos.centros import CEVIANAS, TIPOS_CENTRO


@dataclass(frozen=True)
class ConfiguracionInicial:
    id: str
    descripcion: str
    sentencias: tuple
    restricciones: str = ''

    def fuente(self, restricciones=None):
        restricciones = self.restricciones if restricciones is None else restricciones
        lineas = ['triangle ABC;']
        lineas.extend(f'constrain {r.strip()};' for r in restricciones.split(';') if r.strip())
        lineas.extend(self.sentencias)
        return '\n'.join(lineas) + '\n'

    def script(self, restricciones=None):
        return parse(self.fuente(restricciones))


def _gergonne_point():
    return ConfiguracionInicial(
        'gergonne-point', 'Triángulo con su punto de Gergonne',
        ('D = gergonne(A, B, C);',),
    )


def _gergonne_cevian():
    return ConfiguracionInicial(
        'gergonne-cevian', 'Triángulo con la ceviana de Gergonne desde A',
        ('D = gergonne(A, B, C);', 'E = cevian(A, B, C, gergonne);'),
    )


def _two_cevians(tipos=('gergonne', 'nagel')):
    primera, segunda = tipos
    return ConfiguracionInicial(
        'two-cevians', f'Triángulo con las cevianas {primera} y {segunda} desde A',
        (f'D = cevian(A, B, C, {primera});', f'E = cevian(A, B, C, {segunda});'),
    )


def _cevian_center(tipos=('gergonne', 'gergonne')):
    ceviana, centro = tipos
    return ConfiguracionInicial(
        'cevian-center', f'Ceviana {ceviana} desde A y el {centro} del subtriángulo ABD',
        (f'D = cevian(A, B, C, {ceviana});', f'E = {centro}(A, B, D);'),
    )


def _pararadius():
    return ConfiguracionInicial(
        'pararadius', 'Paralela a BC por el punto de Gergonne hasta AB',
        ('D = gergonne(A, B, C);', 'm1 = parallel(D, BC);', 'E = intersect(m1, AB);'),
    )


def _parachord():
    return ConfiguracionInicial(
        'parachord', 'Cuerda paralela a BC por el punto de Gergonne',
        ('D = gergonne(A, B, C);', 'm1 = parallel(D, BC);', 'E = intersect(m1, AB);',
         'F = intersect(m1, AC);'),
    )


def _perpendicular_feet():
    return ConfiguracionInicial(
        'perpendicular-feet', 'Pies de las perpendiculares desde el punto de Gergonne',
        ('D = gergonne(A, B, C);', 'E = foot(D, BC);', 'F = foot(D, CA);', 'G = foot(D, AB);'),
    )


CONFIGURACIONES = {
    'gergonne-point': _gergonne_point,
    'gergonne-cevian': _gergonne_cevian,
    'two-cevians': _two_cevians,
    'cevian-center': _cevian_center,
    'pararadius': _pararadius,
    'parachord': _parachord,
    'perpendicular-feet': _perpendicular_feet,
}
CON_TIPOS = ('two-cevians', 'cevian-center')


def configuracion(id, restricciones='', tipos=None):  # noqa: A002
    """
    Configuración por id. `tipos` sólo aplica a two-cevians (dos tipos de
    ceviana) y cevian-center (tipo de ceviana y centro del subtriángulo).
    """
    if id not in CONFIGURACIONES:
        raise ValueError(f'configuración desconocida: {id} (opciones: {", ".join(CONFIGURACIONES)})')
    if tipos and id in CON_TIPOS:
        tipos = tuple(tipos)
        segundo = TIPOS_CENTRO if id == 'cevian-center' else CEVIANAS
        if len(tipos) != 2 or tipos[0] not in CEVIANAS or tipos[1] not in segundo:
            raise ValueError(f'tipos inválidos para {id}: {tipos}')
        if 'gergonne' not in tipos:
            raise ValueError(f'{id} necesita un elemento Gergonne')
        inicial = CONFIGURACIONES[id](tipos)
    else:
        inicial = CONFIGURACIONES[id]()
    return ConfiguracionInicial(inicial.id, inicial.descripcion, inicial.sentencias, restricciones or '')
