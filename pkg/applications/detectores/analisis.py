# applications/detectores/analisis.py

"""Análisis completo de un script: evaluar, detectar, confirmar y filtrar."""

import logging
from dataclasses import dataclass, field

from applications.lenguaje.evaluador import evaluate
from applications.nucleo.conf import settings
from applications.nucleo.precision import CONFIRM, FAST

from .incidencias import detect_incidence
from .rasgos import rasgos_de
from .relaciones import mine_relations
from .trivialidad import lineas_de_base, marcar_triviales

logger = logging.getLogger(__name__)


@dataclass
class Analisis:
    script: object
    hallazgos: list = field(default_factory=list)
    muestras: int = 0

    @property
    def no_triviales(self):
        return [h for h in self.hallazgos if not h.trivial]

    @property
    def triviales(self):
        return [h for h in self.hallazgos if h.trivial]


def evaluar_muestras(script, muestras, precision):
    """Un Entorno por muestra. Los errores de evaluación se propagan."""
    return [evaluate(script, m.realizar(precision), semilla=m.semilla) for m in muestras]


def analizar(script, muestras, confirmacion, foco=None, tope=None, lineas_base=None):
    """
    Hallazgos de un script sobre `muestras` (detección, precisión rápida) y
    `confirmacion` (precisión extendida), con la evidencia de control completa.
    """
    if not muestras or not confirmacion:
        raise ValueError('se necesita al menos una muestra de detección y una de confirmación')
    lineas_base = settings.GEX_BASELINE_SAMPLES if lineas_base is None else lineas_base
    rapidos = rasgos_de(evaluar_muestras(script, muestras, FAST), foco=foco, tope=tope)
    confirmados = rasgos_de(evaluar_muestras(script, confirmacion, CONFIRM), referencia=rapidos[0])

    hallazgos = detect_incidence(rapidos, confirmados) + mine_relations(rapidos, confirmados)
    generalizada, sin_restricciones = lineas_de_base(script, muestras, rapidos[0], cantidad=lineas_base)
    marcar_triviales(hallazgos, script, generalizada, sin_restricciones, alias=rapidos[0].alias)

    analisis = Analisis(script, hallazgos, len(muestras) + len(confirmacion))
    logger.debug(
        'análisis: %d hallazgos, %d no triviales', len(analisis.hallazgos), len(analisis.no_triviales),
    )
    return analisis
