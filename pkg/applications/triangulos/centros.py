# applications/triangulos/centros.py

"""
Centros del triángulo, cevianas, trazas y círculos notables.

Los centros salen de una tabla fija de pesos baricéntricos (índices de la
Encyclopedia of Triangle Centers). El punto de Feuerbach se construye
geométricamente como el contacto entre el incírculo y el círculo de los
nueve puntos.
"""

from dataclasses import dataclass

from applications.apolonio.solver import dentro_del_angulo, interna_a, select, solve
from applications.nucleo.excepciones import DegenerateInput
from applications.nucleo.primitivas import Circulo, Punto, dist, intersect_ll, line_through

from .triangulo import VERTICES


def _pesos_circuncentro(a, b, c, s):
    return (a * a * (b * b + c * c - a * a), b * b * (c * c + a * a - b * b),
            c * c * (a * a + b * b - c * c))


def _pesos_ortocentro(a, b, c, s):
    sa = (b * b + c * c - a * a) / 2
    sb = (c * c + a * a - b * b) / 2
    sc = (a * a + b * b - c * c) / 2
    return sb * sc, sc * sa, sa * sb


def _pesos_nueve_puntos(a, b, c, s):
    def peso(x, y, z):
        return x * x * (y * y + z * z) - (y * y - z * z) ** 2
    return peso(a, b, c), peso(b, c, a), peso(c, a, b)


# nombre: (índice ETC, pesos(a, b, c, s))
PESOS = {
    'incenter': ('X1', lambda a, b, c, s: (a, b, c)),
    'centroid': ('X2', lambda a, b, c, s: (1, 1, 1)),
    'circumcenter': ('X3', _pesos_circuncentro),
    'orthocenter': ('X4', _pesos_ortocentro),
    'ninepointcenter': ('X5', _pesos_nueve_puntos),
    'symmedian': ('X6', lambda a, b, c, s: (a * a, b * b, c * c)),
    # 1/(s−a) : 1/(s−b) : 1/(s−c), multiplicado por (s−a)(s−b)(s−c)
    'gergonne': ('X7', lambda a, b, c, s: ((s - b) * (s - c), (s - c) * (s - a), (s - a) * (s - b))),
    'nagel': ('X8', lambda a, b, c, s: (s - a, s - b, s - c)),
    'mittenpunkt': ('X9', lambda a, b, c, s: (a * (s - a), b * (s - b), c * (s - c))),
    'spieker': ('X10', lambda a, b, c, s: (b + c, c + a, a + b)),
    'insimilicenter': ('X55', lambda a, b, c, s: (a * a * (s - a), b * b * (s - b), c * c * (s - c))),
}

TIPOS_CENTRO = tuple(PESOS) + ('feuerbach',)
INDICES_ETC = {nombre: indice for nombre, (indice, _) in PESOS.items()}
INDICES_ETC['feuerbach'] = 'X11'

# Tipos de ceviana con nombre propio y el centro por el que pasan
CEVIANAS = {
    'gergonne': 'gergonne',
    'nagel': 'nagel',
    'median': 'centroid',
    'bisector': 'incenter',
    'symmedian': 'symmedian',
}


@dataclass(frozen=True)
class Ceviana:
    vertice: Punto
    traza: Punto


@dataclass(frozen=True)
class Mixtilineal:
    circulo: Circulo
    contacto_circunferencia: Punto
    contactos_lados: tuple


def baricentricas(tipo, T):
    if tipo not in PESOS:
        raise ValueError(f'centro sin pesos baricéntricos: {tipo}')
    return PESOS[tipo][1](T.a, T.b, T.c, T.s)


def center(tipo, T):
    if tipo == 'feuerbach':
        return _feuerbach(T)
    return T.desde_baricentricas(*baricentricas(tipo, T))


def excenter(T, vertice='A'):
    """Exincentro opuesto a `vertice`: (−a : b : c) con los rótulos rotados."""
    r = T.rotado(vertice)
    return r.desde_baricentricas(-r.a, r.b, r.c)


def _feuerbach(T):
    nueve = ninepoint_circle(T)
    incentro = center('incenter', T)
    delta = incentro - nueve.centro
    d = delta.norma()
    if d <= T.tolerancia().absoluta(T.precision):
        raise DegenerateInput('triángulo equilátero: el punto de Feuerbach no está definido')
    return nueve.centro + delta.por(nueve.radio / d)


def touch_point(T, lado):
    """Contacto del incírculo con el lado ('BC', 'CA' o 'AB')."""
    vertice = {'BC': 'A', 'CA': 'B', 'AB': 'C'}[lado]
    r = T.rotado(vertice)
    # Sobre BC (rótulos rotados): a distancia s−b de B.
    return r.B + (r.C - r.B).por((r.s - r.b) / r.a)


def cevian_por_pesos(T, vertice, pesos):
    """Ceviana desde `vertice` por el punto de baricéntricas `pesos` (en rótulos de T)."""
    i = VERTICES.index(vertice)
    # Pesos reordenados según la rotación de rótulos
    u, v, w = pesos[i], pesos[(i + 1) % 3], pesos[(i + 2) % 3]
    r = T.rotado(vertice)
    if abs(v + w) <= T.tolerancia().eps(T.precision) * (abs(u) + abs(v) + abs(w)):
        raise DegenerateInput('la ceviana es paralela al lado opuesto')
    traza = Punto((v * r.B.x + w * r.C.x) / (v + w), (v * r.B.y + w * r.C.y) / (v + w))
    return Ceviana(r.A, traza)


def cevian(T, vertice, tipo):
    """
    Ceviana desde `vertice` del tipo dado: gergonne, nagel, median, bisector,
    symmedian o el nombre de cualquier centro (ceviana por ese centro).
    """
    centro = CEVIANAS.get(tipo, tipo)
    if centro == 'feuerbach':
        return cevian_por_punto(T, vertice, _feuerbach(T))
    return cevian_por_pesos(T, vertice, baricentricas(centro, T))


def cevian_por_punto(T, vertice, punto):
    r = T.rotado(vertice)
    tol = T.tolerancia()
    traza = intersect_ll(line_through(r.A, punto, tol), line_through(r.B, r.C, tol), tol)
    return Ceviana(r.A, traza)


def incircle(T):
    return Circulo(center('incenter', T), T.K / T.s)


def circumcircle(T):
    return Circulo(center('circumcenter', T), T.a * T.b * T.c / (4 * T.K))


def ninepoint_circle(T):
    return Circulo(center('ninepointcenter', T), T.a * T.b * T.c / (8 * T.K))


def excircle(T, vertice='A'):
    r = T.rotado(vertice)
    return Circulo(excenter(T, vertice), r.K / (r.s - r.a))


def mixtilinear_incircle(T, vertice='A'):
    """
    Círculo tangente a los dos lados que concurren en `vertice` y tangente
    interiormente al circuncírculo; se elige entre las soluciones LLC la de
    centro dentro del ángulo del vértice y tangencia interna.
    """
    r = T.rotado(vertice)
    tol = T.tolerancia()
    lado_b, lado_c = line_through(r.A, r.C, tol), line_through(r.A, r.B, tol)
    circunferencia = circumcircle(T)
    soluciones = solve((lado_c, lado_b, circunferencia), tol)
    dentro = dentro_del_angulo(r.A, r.B, r.C)
    interna = interna_a(circunferencia)
    # La tangencia interna también la cumple el círculo que envuelve al circuncírculo.
    elegida = select(
        soluciones,
        lambda sol: dentro(sol) and interna(sol) and sol.radio < circunferencia.radio,
    )
    contacto_c, contacto_b, contacto_circ = elegida.contactos
    return Mixtilineal(elegida.circulo, contacto_circ, (contacto_c, contacto_b))


def distancia_centros(tipo1, tipo2, T):
    return dist(center(tipo1, T), center(tipo2, T))
