# applications/corpus/ejecucion.py

"""
Verificación numérica del corpus.

Cada entrada se evalúa sobre `n` triángulos que cumplen sus restricciones, en
las dos precisiones. Una entrada pasa si todas sus afirmaciones se cumplen en
todas las muestras; cualquier error del motor queda como fila fallida del
informe.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from applications.lenguaje.evaluador import evaluate
from applications.muestreo.muestreo import sample
from applications.nucleo.conf import settings
from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.precision import CONFIRM, FAST

logger = logging.getLogger(__name__)

MUESTRAS = 20


@dataclass(frozen=True)
class FilaCorpus:
    id: str
    estado: str
    tipo: str
    opcional: bool = False
    procedencia: str = ''
    muestras: int = 0
    residuo_rapido: object = None
    residuo_confirmacion: object = None
    cumple: bool = False
    error: str = ''
    # primera afirmación que falló, con su texto
    fallida: str = ''


@dataclass(frozen=True)
class InformeCorpus:
    filas: tuple
    muestras: int
    semilla: int

    @property
    def fallidas(self):
        return [f for f in self.filas if not f.cumple]

    @property
    def fallidas_requeridas(self):
        return [f for f in self.fallidas if not f.opcional]

    @property
    def ok(self):
        return not self.fallidas_requeridas

    def fila(self, id):
        for f in self.filas:
            if f.id == id:
                return f
        raise KeyError(id)


def _maximo(actual, residuo):
    if residuo is None:
        return actual
    return residuo if actual is None or residuo > actual else actual


def verificar(entrada, n=MUESTRAS, semilla=0):
    """Fila del informe para una entrada."""
    base = dict(id=entrada.id, estado=entrada.estado, tipo=entrada.tipo,
                opcional=entrada.opcional, procedencia=entrada.procedencia)
    try:
        muestras = sample(entrada.script, n, seed=semilla)
    except GeometriaError as e:
        logger.info('%s: sin muestras (%s)', entrada.id, e)
        return FilaCorpus(**base, error=f'{type(e).__name__}: {e}')

    residuos = {FAST.nombre: None, CONFIRM.nombre: None}
    fallida, error = '', ''
    for muestra in muestras:
        for precision in (FAST, CONFIRM):
            try:
                env = evaluate(entrada.script, muestra.realizar(precision), semilla=muestra.semilla)
            except GeometriaError as e:
                error = error or f'{type(e).__name__}: {e}'
                continue
            for resultado in env.resultados:
                residuos[precision.nombre] = _maximo(residuos[precision.nombre], resultado.residuo)
                if not resultado.cumple and not fallida:
                    fallida = resultado.texto
                    error = error or resultado.error

    cumple = not fallida and not error
    if not cumple:
        logger.info('%s: falla (%s)', entrada.id, error or fallida)
    return FilaCorpus(
        **base, muestras=len(muestras),
        residuo_rapido=residuos[FAST.nombre], residuo_confirmacion=residuos[CONFIRM.nombre],
        cumple=cumple, error=error, fallida=fallida,
    )


def run_corpus(entradas, n_samples=MUESTRAS, seed=0, hilos=None):
    """Informe del corpus; las filas siguen el orden de `entradas`."""
    hilos = settings.GEX_THREADS if hilos is None else hilos

    def tarea(entrada):
        return verificar(entrada, n_samples, seed)

    if hilos > 1:
        with ThreadPoolExecutor(max_workers=hilos) as pool:
            filas = tuple(pool.map(tarea, entradas))
    else:
        filas = tuple(map(tarea, entradas))

    informe = InformeCorpus(filas, n_samples, seed)
    logger.info(
        'corpus: %d entradas, %d fallidas (%d requeridas)',
        len(filas), len(informe.fallidas), len(informe.fallidas_requeridas),
    )
    return informe
