# applications/muestreo/muestreo.py

"""
Muestreador de triángulos.

Las formas se parametrizan por (a, b) con perímetro 3, es decir c = 3 − a − b.
Sin restricciones se sortea uniforme en la región válida; con una o dos
ecuaciones se parte de puntos al azar y se proyecta con Newton amortiguado
(norma mínima para una ecuación, sistema 2×2 para dos). La solución se pule en
la precisión de confirmación y cada muestra lleva además una semejanza al azar,
así una forma única produce realizaciones distintas.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from applications.lenguaje.nodos import Script
from applications.nucleo.conf import settings
from applications.nucleo.excepciones import DegenerateInput, Infeasible, OverConstrained
from applications.nucleo.precision import CONFIRM, FAST
from applications.triangulos.triangulo import Triangulo

from .restricciones import ConjuntoRestricciones

logger = logging.getLogger(__name__)

PERIMETRO = 3
# Residuo máximo admitido en una muestra emitida
RESIDUO_MAXIMO = 1e-12

_NEWTON = {
    # paso de diferencias, residuo objetivo, iteraciones
    FAST.nombre: (1e-7, 1e-14, 60),
    CONFIRM.nombre: (1e-20, 1e-30, 20),
}


@dataclass(frozen=True)
class MuestraTriangulo:
    lados: tuple         # (a, b, c) con perímetro 3, en precisión de confirmación
    residuos: tuple
    semejanza: tuple     # (theta, k, tx, ty)
    semilla: int

    @property
    def forma(self):
        return tuple(float(x) for x in self.lados)

    def realizar(self, precision=FAST):
        a, b, c = (precision.num(x) for x in self.lados)
        return Triangulo.from_sides(a, b, c).transformado(*self.semejanza)


def como_restricciones(restricciones, vertices='ABC'):
    if isinstance(restricciones, ConjuntoRestricciones):
        return restricciones
    if isinstance(restricciones, Script):
        return ConjuntoRestricciones.desde_script(restricciones)
    return ConjuntoRestricciones.desde_texto(restricciones or '', vertices)


def _margen_valido(a, b, margen):
    c = PERIMETRO - a - b
    return PERIMETRO - 2 * max(a, b, c) > margen and min(a, b, c) > 0


def _residuos(restricciones, a, b, prec):
    return restricciones.residuos(a, b, PERIMETRO - a - b, prec)


def _norma(valores):
    return max(abs(x) for x in valores)


def _jacobiano(restricciones, a, b, prec, h):
    base = _residuos(restricciones, a, b, prec)
    da = _residuos(restricciones, a + h, b, prec)
    db = _residuos(restricciones, a, b + h, prec)
    return base, [((fa - f) / h, (fb - f) / h) for f, fa, fb in zip(base, da, db)]


def _paso(base, jac):
    """Paso de Newton: norma mínima con una ecuación, sistema 2×2 con dos."""
    if len(base) == 1:
        (f,), ((ga, gb),) = base, jac
        g2 = ga * ga + gb * gb
        if g2 == 0:
            raise DegenerateInput('gradiente nulo')
        return -f * ga / g2, -f * gb / g2
    (f1, f2), ((j11, j12), (j21, j22)) = base, jac
    det = j11 * j22 - j12 * j21
    if det == 0:
        raise DegenerateInput('jacobiano singular')
    return (-f1 * j22 + f2 * j12) / det, (f1 * j21 - f2 * j11) / det


def newton(restricciones, a, b, prec=FAST):
    """Proyecta (a, b) sobre las restricciones. Devuelve (a, b) o None si no converge."""
    h, objetivo, iteraciones = _NEWTON[prec.nombre]
    h = prec.num(h)
    a, b = prec.num(a), prec.num(b)
    try:
        for _ in range(iteraciones):
            base, jac = _jacobiano(restricciones, a, b, prec, h)
            actual = _norma(base)
            if actual <= objetivo:
                return a, b
            da, db = _paso(base, jac)
            t = 1
            # Amortiguación: se reduce el paso hasta que baje el residuo.
            for _ in range(30):
                na, nb = a + t * da, b + t * db
                try:
                    if min(na, nb, PERIMETRO - na - nb) > 0 \
                            and _norma(_residuos(restricciones, na, nb, prec)) < actual:
                        break
                except DegenerateInput:
                    pass
                t /= 2
            else:
                return None
            a, b = na, nb
        if _norma(_residuos(restricciones, a, b, prec)) <= objetivo:
            return a, b
    except (DegenerateInput, ZeroDivisionError, OverflowError):
        return None
    return None


def _semejanza(semilla):
    rng = np.random.default_rng(semilla)
    return (
        float(rng.uniform(0, 2 * math.pi)),
        float(rng.uniform(0.5, 2.0)),
        float(rng.uniform(-1, 1)),
        float(rng.uniform(-1, 1)),
    )


def _resolver(restricciones, a, b, margen):
    """Forma en precisión de confirmación que cumple las restricciones, o None."""
    if restricciones:
        rapido = newton(restricciones, a, b, FAST)
        if rapido is None or not _margen_valido(*rapido, margen):
            return None
        a, b = rapido
    if not restricciones:
        return CONFIRM.num(a), CONFIRM.num(b)
    pulido = newton(restricciones, a, b, CONFIRM)
    if pulido is None or not _margen_valido(*pulido, margen):
        return None
    return pulido


def sample(restricciones, n, seed=0, margen=None, distancia_minima=None, max_inicios=None):
    """
    `n` muestras de triángulos que cumplen `restricciones` (un
    ConjuntoRestricciones, un Script o texto de restricciones).
    """
    restricciones = como_restricciones(restricciones)
    margen = settings.GEX_SAMPLER_MARGIN if margen is None else margen
    distancia_minima = settings.GEX_SAMPLER_MIN_DISTANCE if distancia_minima is None else distancia_minima
    max_inicios = settings.GEX_SAMPLER_MAX_STARTS if max_inicios is None else max_inicios
    if len(restricciones) > 2:
        raise OverConstrained(
            f'{len(restricciones)} ecuaciones: una forma de triángulo tiene sólo 2 grados de libertad'
        )
    forma_unica = len(restricciones) == 2

    rng = np.random.default_rng(seed)
    formas, inicios = [], 0
    while len(formas) < (1 if forma_unica else n):
        if inicios >= max_inicios:
            raise Infeasible(
                f'{len(formas)} de {n} muestras tras {inicios} inicios para: {restricciones.texto or "sin restricciones"}'
            )
        inicios += 1
        a, b = (float(x) for x in rng.uniform(0, PERIMETRO / 2, 2))
        if not restricciones and not _margen_valido(a, b, margen):
            continue
        forma = _resolver(restricciones, a, b, margen)
        if forma is None:
            logger.debug('inicio %d descartado (%.6f, %.6f)', inicios, a, b)
            continue
        if any(max(abs(float(forma[0] - f[0])), abs(float(forma[1] - f[1])),
                   abs(float(forma[0] + forma[1] - f[0] - f[1]))) < distancia_minima for f in formas):
            logger.debug('inicio %d descartado: forma repetida', inicios)
            continue
        formas.append(forma)

    if forma_unica:
        formas = formas * n
    muestras = []
    for a, b in formas:
        semilla = int(rng.integers(2 ** 31))
        c = PERIMETRO - a - b
        residuos = tuple(restricciones.residuos(a, b, c, CONFIRM))
        if any(abs(r) > RESIDUO_MAXIMO for r in residuos):
            raise Infeasible(f'residuo {max(abs(float(r)) for r in residuos):.3e} en la forma pulida')
        muestras.append(MuestraTriangulo((a, b, c), residuos, _semejanza(semilla), semilla))
    logger.debug('%d muestras en %d inicios (%s)', len(muestras), inicios, restricciones.texto or '-')
    return muestras


def perturb(T, magnitude, seed=0):
    """
    Triángulo a distancia de forma `magnitude` de T: la forma (perímetro 3) se
    mueve en una dirección unitaria al azar ortogonal a (1, 1, 1) y se devuelve
    al perímetro original.
    """
    prec = T.precision
    perimetro = T.a + T.b + T.c
    forma = [x * PERIMETRO / perimetro for x in (T.a, T.b, T.c)]
    rng = np.random.default_rng(seed)
    direccion = rng.normal(size=3)
    direccion -= direccion.mean()
    direccion /= np.linalg.norm(direccion)
    nueva = [x + prec.num(float(magnitude)) * prec.num(float(d)) for x, d in zip(forma, direccion)]
    if PERIMETRO - 2 * max(nueva) <= 0 or min(nueva) <= 0:
        raise DegenerateInput(f'la perturbación {magnitude} sale de la región de triángulos válidos')
    return Triangulo.from_sides(*(x * perimetro / PERIMETRO for x in nueva))
