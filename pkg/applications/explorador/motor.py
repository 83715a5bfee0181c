# applications/explorador/motor.py

"""
Corrida del explorador: enumerar secuencias, analizar cada una y fusionar los
hallazgos en un Catalogo.

Todas las secuencias se analizan sobre las mismas muestras de triángulos,
sorteadas una sola vez a partir de la semilla de la corrida. Las secuencias
son tareas independientes; el resultado se fusiona en orden de enumeración.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from applications.detectores.analisis import analizar
from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import sample
from applications.nucleo.conf import settings
from applications.nucleo.excepciones import GeometriaError

from .catalogo import Catalogo
from .configuraciones import configuracion
from .enumeracion import enumerate as enumerar
from .enumeracion import fuente_de
from .menu import Menu

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Omision:
    pasos: tuple
    motivo: str


@dataclass(frozen=True)
class Resultado:
    pasos: tuple
    hallazgos: tuple = ()
    omision: Omision = None


class Corrida:
    """Estado de solo lectura compartido por las tareas de una corrida."""

    def __init__(self, fuente, muestras, confirmacion, lineas_base, tope):
        self.fuente = fuente
        self.muestras = muestras
        self.confirmacion = confirmacion
        self.lineas_base = lineas_base
        self.tope = tope

    def analizar(self, pasos):
        textos = tuple(p.texto() for p in pasos)
        try:
            script = parse(fuente_de(self.fuente, pasos))
            analisis = analizar(
                script, self.muestras, self.confirmacion,
                foco={p.nombre for p in pasos} if pasos else None,
                tope=self.tope, lineas_base=self.lineas_base,
            )
        except GeometriaError as e:
            logger.info('secuencia omitida [%s]: %s', ' '.join(textos), e)
            return Resultado(textos, omision=Omision(textos, f'{type(e).__name__}: {e}'))
        except Exception as e:
            # error inesperado: se registra con su tipo y la corrida sigue
            logger.warning('secuencia omitida por %s [%s]: %s', type(e).__name__, ' '.join(textos), e)
            return Resultado(textos, omision=Omision(textos, f'{type(e).__name__}: {e}'))
        return Resultado(textos, tuple(analisis.hallazgos))


def run(inicio, profundidad, menu=None, semilla=0, muestras=None, confirmacion=None,
        hilos=None, restricciones=None, tope=None, lineas_base=None):
    """
    Catálogo de una configuración inicial (id o ConfiguracionInicial) hasta
    `profundidad` pasos. Infeasible del muestreador se propaga; cualquier otro
    error de una secuencia queda registrado como omisión.
    """
    if isinstance(inicio, str):
        inicio = configuracion(inicio, restricciones or '')
    elif restricciones is not None:
        inicio = replace(inicio, restricciones=restricciones)
    if isinstance(menu, (str, Path)):
        menu = Menu.desde_archivo(menu)
    menu = Menu.por_defecto() if menu is None else menu
    n = settings.GEX_DETECT_SAMPLES if muestras is None else muestras
    m = settings.GEX_CONFIRM_SAMPLES if confirmacion is None else confirmacion
    hilos = settings.GEX_THREADS if hilos is None else hilos
    if n < 1 or m < 1:
        raise ValueError(f'cantidades de muestras inválidas: {n} de detección, {m} de confirmación')
    if n < settings.GEX_DETECT_SAMPLES:
        logger.warning('%d muestras de detección, menos que las %d por defecto', n, settings.GEX_DETECT_SAMPLES)

    script = inicio.script()
    triangulos = sample(script, n + m, seed=semilla)
    corrida = Corrida(inicio.fuente(), triangulos[:n], triangulos[n:], lineas_base, tope)

    catalogo = Catalogo(
        configuracion=inicio.id, restricciones=inicio.restricciones, profundidad=profundidad,
        semilla=semilla, menu=menu.nombre, fuente=corrida.fuente, muestras=n, muestras_confirmacion=m,
    )
    secuencias = enumerar(script, profundidad, menu)
    if hilos > 1:
        with ThreadPoolExecutor(max_workers=hilos) as pool:
            resultados = pool.map(corrida.analizar, secuencias)
            for resultado in resultados:
                catalogo.fusionar(resultado)
    else:
        for resultado in map(corrida.analizar, secuencias):
            catalogo.fusionar(resultado)

    logger.info(
        '%s (profundidad %d): %d secuencias, %d omitidas, %d relaciones, %d triviales',
        inicio.id, profundidad, catalogo.secuencias, len(catalogo.omisiones),
        len(catalogo.no_triviales), len(catalogo.triviales),
    )
    return catalogo
