# applications/nucleo/predicados.py

"""
Predicados de incidencia.

Cada predicado tiene su residuo relativo (`residuo_*`, adimensional) y se
cumple cuando ese residuo no supera el eps de la precisión de los datos:
eps_detect en FAST, eps_confirm en CONFIRM. La doble verificación
(rápida y luego en alta precisión) la hacen el evaluador y los detectores
construyendo la misma figura en ambas precisiones.
"""

from .precision import Tolerancia, precision_of
from .primitivas import Recta, dist


def _escala(tol):
    return (tol or Tolerancia()).escala


def residuo_collinear(p, q, r, tol=None):
    return abs((q - p).cross(r - p)) / _escala(tol) ** 2


def residuo_concurrent(l1, l2, l3, tol=None):
    det = (
        l1.a * (l2.b * l3.c - l3.b * l2.c)
        - l1.b * (l2.a * l3.c - l3.a * l2.c)
        + l1.c * (l2.a * l3.b - l3.a * l2.b)
    )
    return abs(det) / _escala(tol)


def residuo_parallel(l1, l2, tol=None):
    return abs(l1.a * l2.b - l2.a * l1.b)


def residuo_perpendicular(l1, l2, tol=None):
    return abs(l1.a * l2.a + l1.b * l2.b)


def residuo_on(p, objeto, tol=None):
    if isinstance(objeto, Recta):
        return abs(objeto.evaluar(p)) / _escala(tol)
    return abs(dist(p, objeto.centro) - objeto.radio) / _escala(tol)


def residuo_tangent(circulo, objeto, tol=None):
    if isinstance(objeto, Recta):
        return abs(abs(objeto.evaluar(circulo.centro)) - circulo.radio) / _escala(tol)
    d = dist(circulo.centro, objeto.centro)
    externo = abs(d - (circulo.radio + objeto.radio))
    interno = abs(d - abs(circulo.radio - objeto.radio))
    return min(externo, interno) / _escala(tol)


def residuo_same(p, q, tol=None):
    return dist(p, q) / _escala(tol)


def residuo_congruent(c1, c2, tol=None):
    return abs(c1.radio - c2.radio) / _escala(tol)


def _cumple(residuo, tol, *objetos):
    tol = tol or Tolerancia()
    return residuo <= tol.eps(precision_of(*objetos))


def collinear(p, q, r, tol=None):
    return _cumple(residuo_collinear(p, q, r, tol), tol, p, q, r)


def concurrent(l1, l2, l3, tol=None):
    return _cumple(residuo_concurrent(l1, l2, l3, tol), tol, l1, l2, l3)


def is_parallel(l1, l2, tol=None):
    return _cumple(residuo_parallel(l1, l2), tol, l1, l2)


def is_perpendicular(l1, l2, tol=None):
    return _cumple(residuo_perpendicular(l1, l2), tol, l1, l2)


def on(p, objeto, tol=None):
    return _cumple(residuo_on(p, objeto, tol), tol, p, objeto)


def tangent(circulo, objeto, tol=None):
    return _cumple(residuo_tangent(circulo, objeto, tol), tol, circulo, objeto)


RESIDUOS = {
    'colline': residuo_collinear,
    'concur': residuo_concurrent,
    'isparallel': residuo_parallel,
    'perp': residuo_perpendicular,
    'on': residuo_on,
    'tangent': residuo_tangent,
    'same': residuo_same,
    'congruent': residuo_congruent,
}
