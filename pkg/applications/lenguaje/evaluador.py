# applications/lenguaje/evaluador.py

"""
Evaluación de un Script sobre un triángulo concreto.

El triángulo trae su precisión (FAST o CONFIRM) y todo se construye en esa
precisión. Una afirmación falsa queda registrada en `Entorno.resultados` y la
evaluación sigue; un error del núcleo en una asignación corta la evaluación
con un EvalError que lleva la posición de la sentencia.
"""

import logging
import zlib
from dataclasses import dataclass

import numpy as np

from applications.muestreo.restricciones import ConjuntoRestricciones
from applications.nucleo.excepciones import ConstraintViolation, DegenerateInput, GeometriaError
from applications.nucleo.primitivas import Circulo, Punto, Recta, line_through

from . import funciones as fn
from .errores import EvalError
from .formato import format_expr
from .nodos import (
    Afirmacion, Asignacion, Binaria, Igualdad, Llamada, Negacion, Nombre, Numero, Segmento,
    terminos,
)

logger = logging.getLogger(__name__)


@dataclass
class ResultadoAfirmacion:
    afirmacion: Afirmacion
    texto: str
    residuo: object = None
    cumple: bool = False
    error: str = ''


class Entorno:
    """Nombres ligados a objetos geométricos para una realización del triángulo."""

    def __init__(self, script, triangulo, semilla=0):
        self.script = script
        self.triangulo = triangulo
        self.semilla = int(semilla)
        self.precision = triangulo.precision
        self.tol = triangulo.tolerancia()
        self.valores = {}
        self.resultados = []

    def __getitem__(self, nombre):
        return self.valores[nombre]

    def __contains__(self, nombre):
        return nombre in self.valores

    def generico(self, clave, n):
        """
        `n` parámetros en [0.2, 0.8] para un punto genérico. Dependen sólo de
        la semilla y de la clave, así coinciden entre precisiones.
        """
        rng = np.random.default_rng([self.semilla, zlib.crc32(clave.encode('utf-8'))])
        return [self.precision.num(float(x)) for x in rng.uniform(0.2, 0.8, n)]

    def nombres(self, tipo):
        """Nombres definidos de un tipo, en orden de definición."""
        return [n for n in self.valores if self.script.tipos.get(n) == tipo]

    def puntos(self):
        return self.nombres(fn.P)

    def rectas(self):
        return self.nombres(fn.L)

    def circulos(self):
        return self.nombres(fn.C)

    @property
    def todas_cumplen(self):
        return all(r.cumple for r in self.resultados)

    def fallidas(self):
        return [r for r in self.resultados if not r.cumple]


def _tipo_de_valor(valor):
    if isinstance(valor, Punto):
        return fn.P
    if isinstance(valor, Recta):
        return fn.L
    if isinstance(valor, Circulo):
        return fn.C
    if isinstance(valor, str):
        return fn.KIND
    if isinstance(valor, fn.Selector):
        return fn.SEL
    return fn.S


def _exigir_finito(valor, prec):
    if isinstance(valor, (Punto, Recta, Circulo)):
        numeros = valor.coordenadas()
    elif isinstance(valor, (list, str, fn.Selector)):
        numeros = ()
    else:
        numeros = (valor,)
    if not all(prec.es_finito(x) for x in numeros):
        raise DegenerateInput('la construcción produjo un valor no finito')
    return valor


class _Evaluador:

    def __init__(self, env):
        self.env = env
        self.prec = env.precision

    def valor(self, expr):
        env, prec = self.env, self.prec
        if isinstance(expr, Numero):
            return prec.num(expr.texto)
        if isinstance(expr, Nombre):
            return self.nombre(expr.nombre)
        if isinstance(expr, Segmento):
            return line_through(env[expr.p], env[expr.q], env.tol)
        if isinstance(expr, Negacion):
            return -self.valor(expr.operando)
        if isinstance(expr, Binaria):
            return _exigir_finito(self.binaria(expr), prec)
        if isinstance(expr, Llamada):
            return _exigir_finito(self.llamada(expr), prec)
        raise TypeError(f'nodo desconocido: {expr!r}')

    def nombre(self, nombre):
        env = self.env
        if nombre in env:
            return env[nombre]
        if nombre in fn.RESERVADOS:
            return getattr(env.triangulo, nombre)
        if nombre in fn.PALABRAS_KIND:
            return nombre
        if nombre in fn.SELECTORES_SIMPLES:
            return fn.Selector(nombre)
        raise DegenerateInput(f'{nombre} no está definido')

    def binaria(self, expr):
        x, y = self.valor(expr.izq), self.valor(expr.der)
        if expr.op == '+':
            return x + y
        if expr.op == '-':
            return x - y
        if expr.op == '*':
            return x * y
        if expr.op == '/':
            if y == 0:
                raise DegenerateInput('división por cero')
            return x / y
        return self.prec.potencia(x, y)

    def llamada(self, expr):
        env = self.env
        if expr.funcion == 'select':
            candidatos = self.valor(expr.args[0])
            selectores = [self.valor(a) for a in expr.args[1:]]
            return fn.seleccionar(env, candidatos, *selectores)
        valores = [self.valor(a) for a in expr.args]
        _, variante = fn.tipo_de_llamada(expr.funcion, [_tipo_de_valor(v) for v in valores], expr.pos)
        if variante.generica:
            return variante.impl(env, format_expr(expr), *valores)
        return variante.impl(env, *valores)

    def afirmacion(self, sentencia):
        env, claim = self.env, sentencia.afirmacion
        resultado = ResultadoAfirmacion(sentencia, format_expr(claim))
        try:
            if isinstance(claim, Igualdad):
                resultado.residuo = self.residuo_igualdad(claim)
            else:
                valores = [self.valor(a) for a in claim.args]
                resultado.residuo = fn.residuo_predicado(claim.funcion, valores, env.tol)
            resultado.cumple = bool(resultado.residuo <= env.tol.eps(self.prec))
        except (GeometriaError, ZeroDivisionError, OverflowError) as e:
            resultado.error = str(e)
        return resultado

    def residuo_igualdad(self, igualdad):
        izq, der = self.valor(igualdad.izq), self.valor(igualdad.der)
        escala = sum(abs(self.valor(t)) for t in terminos(igualdad.izq) + terminos(igualdad.der))
        if escala == 0:
            return abs(izq - der)
        return abs(izq - der) / escala


def _comprobar_restricciones(script, T):
    restricciones = ConjuntoRestricciones.desde_script(script)
    if not restricciones:
        return
    eps = T.tolerancia().eps_detect
    if not restricciones.cumple(T.a, T.b, T.c, eps, T.precision):
        raise ConstraintViolation(
            f'el triángulo ({float(T.a):.6g}, {float(T.b):.6g}, {float(T.c):.6g}) '
            f'no cumple: {restricciones.texto}'
        )


def evaluate(script, triangulo, semilla=0, comprobar_restricciones=True):
    """
    Evalúa las sentencias en orden. Devuelve el Entorno con las ligaduras y
    los resultados de las afirmaciones.
    """
    if comprobar_restricciones:
        _comprobar_restricciones(script, triangulo)
    env = Entorno(script, triangulo, semilla)
    for nombre, punto in zip(script.vertices, triangulo.vertices()):
        env.valores[nombre] = punto
    evaluador = _Evaluador(env)
    for sentencia in script.sentencias:
        linea, columna = sentencia.pos or (None, None)
        if isinstance(sentencia, Afirmacion):
            env.resultados.append(evaluador.afirmacion(sentencia))
            continue
        if not isinstance(sentencia, Asignacion):
            raise TypeError(f'sentencia desconocida: {sentencia!r}')
        try:
            env.valores[sentencia.nombre] = evaluador.valor(sentencia.expr)
        except (GeometriaError, ZeroDivisionError, OverflowError) as e:
            raise EvalError(f'{sentencia.nombre}: {e}', linea, columna, causa=e) from e
    logger.debug('script evaluado: %d objetos, %d afirmaciones', len(env.valores), len(env.resultados))
    return env
