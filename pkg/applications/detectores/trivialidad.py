# applications/detectores/trivialidad.py

"""
Filtro de trivialidad.

Una relación es trivial si repite un hecho definicional del script o si se
sigue sosteniendo en la línea de base: el mismo script con cada elemento
Gergonne reemplazado por uno genérico (punto de Gergonne → punto interior,
ceviana de Gergonne o punto de contacto → punto genérico del lado). Si el
script ya tiene el punto de Gergonne, la ceviana de Gergonne pasa a ser la
ceviana por el punto interior y los puntos de contacto quedan como están.
Las restricciones de forma se conservan.

La segunda línea de base (triángulo perturbado, restricciones descartadas) sólo
se registra en la evidencia.
"""

import logging
from dataclasses import replace

from applications.lenguaje.errores import GeoScriptError
from applications.lenguaje.evaluador import evaluate
from applications.lenguaje.formato import format as format_script
from applications.lenguaje.hechos import hechos as hechos_de
from applications.lenguaje.nodos import (
    Afirmacion, Asignacion, Binaria, Igualdad, Llamada, Negacion, Nombre, Segmento,
)
from applications.lenguaje.parser import parse
from applications.muestreo.muestreo import perturb
from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.precision import FAST

from .hallazgos import COLLINEAR, ON_CIRCLE, PARALLEL, PERPENDICULAR, TANGENCY
from .rasgos import rasgos_de

logger = logging.getLogger(__name__)

# Distancia de forma de la segunda línea de base
MAGNITUD_PERTURBACION = 1e-2


class _Generalizador:

    def __init__(self):
        # recta con nombre → par de puntos que la define
        self.segmentos = {}
        # vértices del triángulo → nombre de su punto de Gergonne (ya generalizado)
        self.puntos = {}
        self.cambios = 0

    def _par(self, expr):
        if isinstance(expr, Segmento):
            return expr.p, expr.q
        if isinstance(expr, Llamada) and expr.funcion == 'line' \
                and all(isinstance(a, Nombre) for a in expr.args):
            return tuple(a.nombre for a in expr.args)
        if isinstance(expr, Nombre):
            return self.segmentos.get(expr.nombre)
        return None

    def _between(self, par, pos):
        self.cambios += 1
        p, q = par
        return Llamada('between', (Nombre(p, pos), Nombre(q, pos)), pos)

    def _traza(self, vertice, punto, par, pos):
        """Pie de la ceviana por el punto generalizado: la incidencia D ∈ AE se conserva."""
        self.cambios += 1
        p, q = par
        return Llamada('intersect', (
            Llamada('line', (Nombre(vertice, pos), Nombre(punto, pos)), pos),
            Llamada('line', (Nombre(p, pos), Nombre(q, pos)), pos),
        ), pos)

    def _con_gergonne(self, par):
        return any(set(par) < vertices for vertices in self.puntos)

    def expr(self, expr):
        if isinstance(expr, Llamada):
            args = tuple(self.expr(a) for a in expr.args)
            if expr.funcion == 'gergonne':
                self.cambios += 1
                return Llamada('interior', args, expr.pos)
            if expr.funcion == 'cevian' and isinstance(args[3], Nombre) and args[3].nombre == 'gergonne' \
                    and all(isinstance(a, Nombre) for a in args[:3]):
                v, p, q = (a.nombre for a in args[:3])
                punto = self.puntos.get(frozenset((v, p, q)))
                if punto is not None:
                    return self._traza(v, punto, (p, q), expr.pos)
                return self._between((p, q), expr.pos)
            if expr.funcion == 'touch' and len(args) == 1:
                par = self._par(args[0])
                # Con un punto de Gergonne presente el contacto queda fijo y es el punto el que se generaliza
                if par is not None and not self._con_gergonne(par):
                    return self._between(par, expr.pos)
            return replace(expr, args=args)
        if isinstance(expr, Binaria):
            return replace(expr, izq=self.expr(expr.izq), der=self.expr(expr.der))
        if isinstance(expr, Igualdad):
            return replace(expr, izq=self.expr(expr.izq), der=self.expr(expr.der))
        if isinstance(expr, Negacion):
            return replace(expr, operando=self.expr(expr.operando))
        return expr

    def sentencia(self, sentencia):
        if isinstance(sentencia, Asignacion):
            par = self._par(sentencia.expr)
            if par is not None:
                self.segmentos[sentencia.nombre] = par
            expr = sentencia.expr
            if isinstance(expr, Llamada) and expr.funcion == 'gergonne' \
                    and all(isinstance(a, Nombre) for a in expr.args):
                self.puntos[frozenset(a.nombre for a in expr.args)] = sentencia.nombre
            return replace(sentencia, expr=self.expr(expr))
        if isinstance(sentencia, Afirmacion):
            return replace(sentencia, afirmacion=self.expr(sentencia.afirmacion))
        return sentencia


def linea_de_base(script):
    """
    El script con los elementos Gergonne generalizados, tipado de nuevo por el
    parser. None si el script no tiene ningún elemento Gergonne.
    """
    generalizador = _Generalizador()
    sentencias = tuple(generalizador.sentencia(s) for s in script.sentencias)
    if not generalizador.cambios:
        return None
    return parse(format_script(replace(script, sentencias=sentencias)))


def _evaluar(script, triangulo, semilla, comprobar_restricciones=True):
    try:
        return evaluate(script, triangulo, semilla=semilla, comprobar_restricciones=comprobar_restricciones)
    except (GeoScriptError, GeometriaError) as e:
        logger.debug('línea de base omitida: %s', e)
        return None


def lineas_de_base(script, muestras, referencia, cantidad=None):
    """
    Rasgos de las dos líneas de base sobre las primeras `cantidad` muestras,
    medidos como `referencia`. Devuelve (generalizada, sin_restricciones).
    """
    muestras = list(muestras)[:cantidad] if cantidad is not None else list(muestras)
    generalizada, sin_restricciones = [], []
    base = linea_de_base(script)
    for muestra in muestras:
        triangulo = muestra.realizar(FAST)
        if base is not None:
            # Semilla distinta: los puntos genéricos no deben caer donde caía el elemento original
            env = _evaluar(base, triangulo, muestra.semilla + 1)
            if env is not None:
                generalizada.append(env)
        try:
            perturbado = perturb(triangulo, MAGNITUD_PERTURBACION, seed=muestra.semilla)
        except GeometriaError as e:
            logger.debug('perturbación omitida: %s', e)
            continue
        env = _evaluar(script, perturbado, muestra.semilla, comprobar_restricciones=False)
        if env is not None:
            sin_restricciones.append(env)
    return (
        rasgos_de(generalizada, referencia=referencia),
        rasgos_de(sin_restricciones, referencia=referencia),
    )


def es_definicional(relacion, hechos, alias=None):
    """La relación repite un hecho que el script afirma por construcción."""
    alias = alias or {}
    ops = relacion.operandos
    if relacion.tipo == COLLINEAR:
        return hechos.colineales(*ops)
    if relacion.tipo == ON_CIRCLE:
        return hechos.sobre(ops[0], ops[1])
    if relacion.tipo == PARALLEL:
        return hechos.paralelas_def(alias.get(ops[0], {ops[0]}), alias.get(ops[1], {ops[1]}))
    if relacion.tipo == PERPENDICULAR:
        return hechos.perpendiculares_def(alias.get(ops[0], {ops[0]}), alias.get(ops[1], {ops[1]}))
    if relacion.tipo == TANGENCY:
        return hechos.tangentes_def(ops[0], alias.get(ops[1], {ops[1]}))
    return False


def _residuo_maximo(relacion, lineas):
    residuos = [relacion.residuo(r) for r in lineas]
    if not residuos or any(r is None for r in residuos):
        return None
    return max(residuos)


def triviality_filter(relacion, script, lineas_base, hechos=None, alias=None):
    """
    True si la relación es trivial. `lineas_base` son los rasgos (o Entornos)
    de la línea de base generalizada.
    """
    hechos = hechos_de(script) if hechos is None else hechos
    lineas_base = rasgos_de(lineas_base)
    if alias is None and lineas_base:
        alias = lineas_base[0].alias
    if es_definicional(relacion, hechos, alias):
        return True
    return bool(lineas_base) and all(relacion.cumple(r) for r in lineas_base)


def marcar_triviales(hallazgos, script, generalizada, sin_restricciones, alias=None):
    """Completa la evidencia de control de cada hallazgo y lo marca trivial si corresponde."""
    hechos = hechos_de(script)
    for hallazgo in hallazgos:
        relacion, evidencia = hallazgo.relacion, hallazgo.evidencia
        control = _residuo_maximo(relacion, generalizada)
        libre = _residuo_maximo(relacion, sin_restricciones)
        evidencia.residuo_control = None if control is None else float(control)
        evidencia.residuo_sin_restricciones = None if libre is None else float(libre)
        evidencia.trivial = triviality_filter(relacion, script, generalizada, hechos, alias)
    return hallazgos
