# applications/detectores/rasgos.py

"""
Extracción de rasgos de una figura evaluada.

Un rasgo escalar se nombra con el texto que lo calcula en el lenguaje
(`dist(A, D)`, `area(A, B, D)`, `angle(B, D, C)`, `radius(w1)`, `s`, `K`), así
el nombre es una función determinista de los nombres de la construcción.

Los rasgos se agrupan por dimensión y cada grupo se recorta a GEX_FEATURE_CAP
con esta prioridad: primero los del triángulo de partida, después los que
involucran a los objetos en foco (el último paso de construcción) y al final
el resto.
"""

from dataclasses import dataclass, field
from itertools import combinations

from applications.lenguaje.nodos import Llamada, Nombre, Segmento
from applications.nucleo.conf import settings
from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.primitivas import angle, dist, line_through, signed_area

LONGITUD, AREA, ANGULO = 'longitud', 'area', 'angulo'
DIMENSIONES = (LONGITUD, AREA, ANGULO)


@dataclass
class ConjuntoRasgos:
    precision: object
    tol: object
    puntos: dict = field(default_factory=dict)
    rectas: dict = field(default_factory=dict)
    # texto de recta → claves de hechos que la nombran (nombre, pares de puntos)
    alias: dict = field(default_factory=dict)
    circulos: dict = field(default_factory=dict)
    escalares: dict = field(default_factory=dict)
    dimensiones: dict = field(default_factory=dict)
    # nombre de rasgo → (medida, argumentos)
    definiciones: dict = field(default_factory=dict)

    def objeto(self, texto):
        if texto in self.rectas:
            return self.rectas[texto]
        return self.circulos[texto]

    def de_dimension(self, dimension):
        return [n for n in self.escalares if self.dimensiones[n] == dimension]


def _texto_recta(p, q):
    return f'line({p}, {q})'


def _misma_recta(r1, r2, tol, prec):
    eps, holgura = tol.eps(prec), tol.absoluta(prec)
    for signo in (1, -1):
        if abs(r1.a - signo * r2.a) + abs(r1.b - signo * r2.b) <= eps \
                and abs(r1.c - signo * r2.c) <= holgura:
            return True
    return False


def _medir(env, rasgos, medida, args):
    T = env.triangulo
    if medida == 's':
        return T.s
    if medida == 'K':
        return T.K
    if medida == 'radius':
        return rasgos.circulos[args[0]].radio
    puntos = [rasgos.puntos[p] for p in args]
    if medida == 'dist':
        return dist(*puntos)
    if medida == 'area':
        return abs(signed_area(*puntos))
    return angle(*puntos, tol=rasgos.tol)


def _nombre_rasgo(medida, args):
    return medida if medida in ('s', 'K') else f'{medida}({", ".join(args)})'


def _dimension(medida):
    if medida in ('area', 'K'):
        return AREA
    if medida == 'angle':
        return ANGULO
    return LONGITUD


def _objetos(env, rasgos, referencia):
    prec = env.precision
    for nombre in env.puntos():
        rasgos.puntos[nombre] = env[nombre]
    for nombre in env.circulos():
        rasgos.circulos[nombre] = env[nombre]
    holgura = env.tol.absoluta(prec)
    for nombre in env.circulos():
        texto = f'center({nombre})'
        centro = env[nombre].centro
        if referencia is not None:
            if texto in referencia.puntos:
                rasgos.puntos[texto] = centro
        elif all(dist(centro, p) > holgura for p in rasgos.puntos.values()):
            rasgos.puntos[texto] = centro

    if referencia is not None:
        for texto in referencia.rectas:
            try:
                rasgos.rectas[texto] = env[texto] if texto in env else _recta_por_texto(env, rasgos, texto)
            except (GeometriaError, KeyError):
                continue
        rasgos.alias = dict(referencia.alias)
        return

    for nombre in env.rectas():
        rasgos.rectas[nombre] = env[nombre]
        rasgos.alias[nombre] = {nombre}
        expr = _expresion(env, nombre)
        if expr is not None:
            rasgos.alias[nombre].add(expr)
    for p, q in combinations(list(rasgos.puntos), 2):
        try:
            recta = line_through(rasgos.puntos[p], rasgos.puntos[q], env.tol)
        except GeometriaError:
            continue
        par = frozenset((p, q))
        existente = next(
            (t for t, r in rasgos.rectas.items() if _misma_recta(r, recta, env.tol, prec)), None,
        )
        if existente is not None:
            rasgos.alias[existente].add(par)
            continue
        texto = _texto_recta(p, q)
        rasgos.rectas[texto] = recta
        rasgos.alias[texto] = {par}


def _expresion(env, nombre):
    """Par de puntos que define una recta nombrada como line(P, Q) o PQ."""
    for sentencia in env.script.asignaciones:
        if sentencia.nombre != nombre:
            continue
        expr = sentencia.expr
        if isinstance(expr, Segmento):
            return frozenset((expr.p, expr.q))
        if isinstance(expr, Llamada) and expr.funcion == 'line' \
                and all(isinstance(a, Nombre) for a in expr.args):
            return frozenset(a.nombre for a in expr.args)
    return None


def _recta_por_texto(env, rasgos, texto):
    p, q = texto[len('line('):-1].split(', ')
    return line_through(rasgos.puntos[p], rasgos.puntos[q], env.tol)


def _candidatos(rasgos, env, foco):
    """(medida, args) de todos los rasgos posibles, en orden de definición."""
    puntos = list(rasgos.puntos)
    vertices = set(env.script.vertices)
    yield 's', ()
    yield 'K', ()
    for par in combinations(puntos, 2):
        yield 'dist', par
    for nombre in rasgos.circulos:
        yield 'radius', (nombre,)
    for terna in combinations(puntos, 3):
        # el triángulo de partida ya está como K
        if set(terna) != vertices:
            yield 'area', terna
    for v in puntos:
        for x, y in combinations([p for p in puntos if p != v], 2):
            if v in foco or (v in vertices and (x in foco or y in foco)):
                yield 'angle', (x, v, y)


def _involucra(args, nombres):
    return any(a in nombres or a.removeprefix('center(').removesuffix(')') in nombres for a in args)


def extract(env, referencia=None, foco=None, tope=None):
    """
    Rasgos de una figura evaluada. Con `referencia` (los rasgos de otra muestra
    del mismo script) se miden exactamente los mismos rasgos y rectas.
    """
    rasgos = ConjuntoRasgos(env.precision, env.tol)
    _objetos(env, rasgos, referencia)

    if referencia is not None:
        for nombre, (medida, args) in referencia.definiciones.items():
            try:
                rasgos.escalares[nombre] = _medir(env, rasgos, medida, args)
            except (GeometriaError, KeyError, ZeroDivisionError):
                continue
            rasgos.dimensiones[nombre] = referencia.dimensiones[nombre]
            rasgos.definiciones[nombre] = (medida, args)
        return rasgos

    tope = settings.GEX_FEATURE_CAP if tope is None else tope
    vertices = set(env.script.vertices)
    foco = set(foco) if foco is not None else {n for n in env.valores if n not in vertices}
    holgura = env.tol.absoluta(env.precision)
    # (prioridad, orden) por dimensión
    grupos = {d: [] for d in DIMENSIONES}
    for orden, (medida, args) in enumerate(_candidatos(rasgos, env, foco)):
        try:
            valor = _medir(env, rasgos, medida, args)
        except (GeometriaError, KeyError, ZeroDivisionError):
            continue
        dimension = _dimension(medida)
        minimo = holgura ** 2 if dimension == AREA else (holgura if dimension == LONGITUD else env.tol.eps(env.precision))
        if not abs(valor) > minimo:
            continue
        if all(a in vertices for a in args):
            prioridad = 0
        elif _involucra(args, foco):
            prioridad = 1
        else:
            prioridad = 2
        grupos[dimension].append((prioridad, orden, medida, args, valor))

    for dimension, candidatos in grupos.items():
        elegidos = sorted(candidatos)[:tope]
        for _, _, medida, args, valor in sorted(elegidos, key=lambda c: c[1]):
            nombre = _nombre_rasgo(medida, args)
            rasgos.escalares[nombre] = valor
            rasgos.dimensiones[nombre] = dimension
            rasgos.definiciones[nombre] = (medida, args)
    return rasgos


def rasgos_de(figuras, referencia=None, foco=None, tope=None):
    """Rasgos de una lista de Entornos (o ConjuntoRasgos ya extraídos), todos medidos como el primero."""
    resultado = []
    for figura in figuras:
        if not isinstance(figura, ConjuntoRasgos):
            figura = extract(figura, referencia=referencia, foco=foco, tope=tope)
        if referencia is None:
            referencia = figura
        resultado.append(figura)
    return resultado
