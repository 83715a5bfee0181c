# applications/lenguaje/funciones.py

"""
Tabla de funciones del lenguaje: firmas por tipo y su implementación.

Tipos: P (punto), L (recta), C (círculo), S (escalar), MP / MC (listas de
puntos / círculos, sólo consumibles por `select`), KIND (palabra clave de
centro, ceviana o medida) y SEL (selector). Una función puede tener varias
variantes que se distinguen por la cantidad y el tipo de sus argumentos.

Cada implementación recibe primero el entorno de evaluación (triángulo
principal, tolerancia, semilla) y después los valores de los argumentos.
"""

from dataclasses import dataclass, field

from applications.apolonio.solver import (
    dentro_del_angulo, dentro_del_triangulo, externa_a, interna_a, solve,
)
from applications.nucleo.excepciones import AmbiguousSelection, DegenerateInput
from applications.nucleo.predicados import RESIDUOS, residuo_tangent
from applications.nucleo.primitivas import (
    Circulo, Punto, angle, dist, foot, intersect_cc, intersect_lc, intersect_ll, line_through,
    measure, midpoint, parallel_through, perpendicular_through, reflect, signed_area,
    touch_circles, touch_line,
)
from applications.triangulos import centros
from applications.triangulos.triangulo import Triangulo

from .errores import ArityError, KindError, UnknownFunction

P, L, C, S, MP, MC, KIND, SEL = 'P', 'L', 'C', 'S', 'MP', 'MC', 'KIND', 'SEL'

RESERVADOS = frozenset({'a', 'b', 'c', 's', 'K'})

TIPOS_CEVIANA = tuple(centros.CEVIANAS)
TIPOS_MEDIDA = ('dist', 'signed_area', 'angle', 'radius')
PALABRAS_KIND = frozenset(centros.TIPOS_CENTRO) | frozenset(TIPOS_CEVIANA) | frozenset(TIPOS_MEDIDA)

# Electores que se escriben sin paréntesis
SELECTORES_SIMPLES = frozenset({'smallest', 'largest'})


@dataclass(frozen=True)
class Variante:
    args: tuple
    resultado: str
    impl: object
    # Las funciones genéricas reciben además la clave textual de la llamada.
    generica: bool = False


FUNCIONES = {}


def _registrar(nombres, args, resultado, generica=False):
    if isinstance(nombres, str):
        nombres = (nombres,)

    def decorador(fn):
        for nombre in nombres:
            FUNCIONES.setdefault(nombre, []).append(Variante(tuple(args), resultado, fn, generica))
        return fn
    return decorador


def _triangulo(*puntos):
    return Triangulo(*puntos)


# --- Centros y puntos -------------------------------------------------------------

def _centro_de(tipo):
    def impl(env, p, q, r):
        return centros.center(tipo, _triangulo(p, q, r))
    return impl


for _tipo in centros.TIPOS_CENTRO:
    _registrar(_tipo, (P, P, P), P)(_centro_de(_tipo))


@_registrar('excenter', (P, P, P), P)
def _excenter(env, v, p, q):
    return centros.excenter(_triangulo(v, p, q), 'A')


@_registrar('interior', (P, P, P), P, generica=True)
def _interior(env, clave, p, q, r):
    u, v, w = env.generico(clave, 3)
    total = u + v + w
    return Punto((u * p.x + v * q.x + w * r.x) / total, (u * p.y + v * q.y + w * r.y) / total)


@_registrar('between', (P, P), P, generica=True)
def _between(env, clave, p, q):
    (t,) = env.generico(clave, 1)
    return p + (q - p).por(t)


@_registrar('midpoint', (P, P), P)
def _midpoint(env, p, q):
    return midpoint(p, q)


@_registrar('foot', (P, L), P)
def _foot(env, p, recta):
    return foot(p, recta)


@_registrar('reflect', (P, L), P)
def _reflect(env, p, recta):
    return reflect(p, recta)


@_registrar('intersect', (L, L), P)
def _intersect_ll(env, l1, l2):
    return intersect_ll(l1, l2, env.tol)


@_registrar('intersect', (L, C), MP)
def _intersect_lc(env, recta, circulo):
    return intersect_lc(recta, circulo, env.tol)


@_registrar('intersect', (C, L), MP)
def _intersect_cl(env, circulo, recta):
    return intersect_lc(recta, circulo, env.tol)


@_registrar('intersect', (C, C), MP)
def _intersect_cc(env, c1, c2):
    return intersect_cc(c1, c2, env.tol)


def _exigir_tangencia(env, circulo, objeto):
    if residuo_tangent(circulo, objeto, env.tol) > env.tol.eps(env.precision):
        raise DegenerateInput('los objetos de touch no son tangentes')


@_registrar('touch', (L,), P)
def _touch_incirculo(env, recta):
    incirculo = centros.incircle(env.triangulo)
    _exigir_tangencia(env, incirculo, recta)
    return touch_line(incirculo, recta)


@_registrar('touch', (C, L), P)
def _touch_cl(env, circulo, recta):
    _exigir_tangencia(env, circulo, recta)
    return touch_line(circulo, recta)


@_registrar('touch', (C, C), P)
def _touch_cc(env, c1, c2):
    _exigir_tangencia(env, c1, c2)
    return touch_circles(c1, c2, env.tol)


@_registrar('center', (C,), P)
def _center(env, circulo):
    return circulo.centro


@_registrar('cevian', (P, P, P, KIND), P)
def _cevian(env, v, p, q, tipo):
    if tipo not in centros.CEVIANAS and tipo not in centros.TIPOS_CENTRO:
        raise DegenerateInput(f'tipo de ceviana desconocido: {tipo}')
    return centros.cevian(_triangulo(v, p, q), 'A', tipo).traza


# --- Rectas ---------------------------------------------------------------------

@_registrar('line', (P, P), L)
def _line(env, p, q):
    return line_through(p, q, env.tol)


@_registrar('parallel', (P, L), L)
def _parallel(env, p, recta):
    return parallel_through(p, recta)


@_registrar('perpendicular', (P, L), L)
def _perpendicular(env, p, recta):
    return perpendicular_through(p, recta)


# --- Círculos -------------------------------------------------------------------

@_registrar('incircle', (P, P, P), C)
def _incircle(env, p, q, r):
    return centros.incircle(_triangulo(p, q, r))


@_registrar(('circumcircle', 'circle3'), (P, P, P), C)
def _circumcircle(env, p, q, r):
    return centros.circumcircle(_triangulo(p, q, r))


@_registrar('ninepointcircle', (P, P, P), C)
def _ninepointcircle(env, p, q, r):
    return centros.ninepoint_circle(_triangulo(p, q, r))


@_registrar('excircle', (P, P, P), C)
def _excircle(env, v, p, q):
    return centros.excircle(_triangulo(v, p, q), 'A')


@_registrar('mixtilinear', (P, P, P), C)
def _mixtilinear(env, v, p, q):
    return centros.mixtilinear_incircle(_triangulo(v, p, q), 'A').circulo


@_registrar('circle', (P, P), C)
def _circle(env, centro, punto):
    return Circulo(centro, dist(centro, punto))


def _apollonius(env, x, y, z):
    return [sol.circulo for sol in solve((x, y, z), env.tol)]


for _x in (P, L, C):
    for _y in (P, L, C):
        for _z in (P, L, C):
            _registrar('apollonius', (_x, _y, _z), MC)(_apollonius)


# --- Selectores -----------------------------------------------------------------

@dataclass(frozen=True)
class Selector:
    """Filtro o elector de `select`. Los electores van al final y eligen uno."""
    nombre: str
    args: tuple = field(default=())

    @property
    def es_elector(self):
        return self.nombre in ('near', 'far', 'smallest', 'largest', 'index')


def _centro_o_punto(objeto):
    return objeto.centro if isinstance(objeto, Circulo) else objeto


def _filtrar(env, selector, candidatos):
    nombre, args = selector.nombre, selector.args
    if nombre == 'inside':
        predicado = dentro_del_triangulo(*args)
    elif nombre == 'inangle':
        predicado = dentro_del_angulo(*args)
    elif nombre in ('internal', 'external'):
        if not all(isinstance(x, Circulo) for x in candidatos):
            raise DegenerateInput(f'{nombre} sólo filtra círculos')
        predicado = (interna_a if nombre == 'internal' else externa_a)(args[0])
    elif nombre == 'other':
        (excluido,) = args
        holgura = env.tol.absoluta(env.precision)
        predicado = lambda x: dist(_centro_o_punto(x), excluido) > holgura  # noqa: E731
    else:
        raise DegenerateInput(f'selector desconocido: {nombre}')
    return [x for x in candidatos if predicado(x)]


def _elegir(env, selector, candidatos):
    if not candidatos:
        raise AmbiguousSelection('no quedan candidatos para elegir', 0)
    nombre = selector.nombre
    if nombre in ('near', 'far'):
        (ref,) = selector.args
        clave = lambda x: dist(_centro_o_punto(x), ref)  # noqa: E731
        return min(candidatos, key=clave) if nombre == 'near' else max(candidatos, key=clave)
    if nombre in ('smallest', 'largest'):
        if not all(isinstance(x, Circulo) for x in candidatos):
            raise DegenerateInput(f'{nombre} sólo elige entre círculos')
        radio = lambda x: x.radio  # noqa: E731
        return min(candidatos, key=radio) if nombre == 'smallest' else max(candidatos, key=radio)
    (n,) = selector.args
    i = int(n)
    if not 0 <= i < len(candidatos):
        raise AmbiguousSelection(f'index({i}) fuera de rango ({len(candidatos)} candidatos)', len(candidatos))
    return candidatos[i]


def seleccionar(env, candidatos, *selectores):
    candidatos = list(candidatos)
    total = len(candidatos)
    for selector in selectores:
        if selector.es_elector:
            return _elegir(env, selector, candidatos)
        candidatos = _filtrar(env, selector, candidatos)
    if len(candidatos) != 1:
        raise AmbiguousSelection(
            f'el selector dejó {len(candidatos)} de {total} candidatos', len(candidatos),
        )
    return candidatos[0]


FIRMAS_SELECTOR = {
    'inside': (P, P, P),
    'inangle': (P, P, P),
    'internal': (C,),
    'external': (C,),
    'other': (P,),
    'near': (P,),
    'far': (P,),
    'index': (S,),
    'smallest': (),
    'largest': (),
}

for _nombre, _firma in FIRMAS_SELECTOR.items():
    _registrar(_nombre, _firma, SEL)(
        lambda env, *args, _n=_nombre: Selector(_n, tuple(args))
    )


# --- Escalares ------------------------------------------------------------------

@_registrar('dist', (P, P), S)
def _dist(env, p, q):
    return dist(p, q)


@_registrar('area', (P, P, P), S)
def _area(env, p, q, r):
    return abs(signed_area(p, q, r))


@_registrar('area', (P, P, P, P), S)
def _area4(env, p, q, r, t):
    # Polígono PQRT (fórmula del cordón)
    return abs(signed_area(p, q, r) + signed_area(p, r, t))


@_registrar('sarea', (P, P, P), S)
def _sarea(env, p, q, r):
    return signed_area(p, q, r)


@_registrar('angle', (P, P, P), S)
def _angle(env, p, q, r):
    return angle(p, q, r, env.tol)


@_registrar('angle', (P,), S)
def _angle_vertice(env, v):
    T = env.triangulo
    vertices = T.vertices()
    if v not in vertices:
        raise DegenerateInput('angle(V) requiere un vértice del triángulo principal')
    otros = [p for p in vertices if p != v]
    return angle(otros[0], v, otros[1], env.tol)


@_registrar('radius', (C,), S)
def _radius(env, circulo):
    return circulo.radio


@_registrar('inradius', (P, P, P), S)
def _inradius(env, p, q, r):
    return centros.incircle(_triangulo(p, q, r)).radio


@_registrar('circumradius', (P, P, P), S)
def _circumradius(env, p, q, r):
    return centros.circumcircle(_triangulo(p, q, r)).radio


for _args in ((KIND, P, P), (KIND, P, P, P), (KIND, C)):
    @_registrar('measure', _args, S)
    def _measure(env, tipo, *args):
        if tipo not in TIPOS_MEDIDA:
            raise DegenerateInput(f'medida desconocida: {tipo}')
        return measure(tipo, *args, tol=env.tol)


@_registrar('sqrt', (S,), S)
def _sqrt(env, x):
    return env.precision.raiz(x)


@_registrar('abs', (S,), S)
def _abs(env, x):
    return abs(x)


@_registrar('deg', (S,), S)
def _deg(env, x):
    return x * env.precision.pi / 180


# --- Predicados de assert -------------------------------------------------------

PREDICADOS = {
    'colline': ((P, P, P),),
    'concur': ((L, L, L),),
    'isparallel': ((L, L),),
    'perp': ((L, L),),
    'on': ((P, L), (P, C)),
    'tangent': ((C, L), (C, C)),
    'same': ((P, P),),
    'congruent': ((C, C),),
}


def residuo_predicado(nombre, valores, tol):
    return RESIDUOS[nombre](*valores, tol)


# --- Tipado ---------------------------------------------------------------------

def es_funcion(nombre):
    return nombre in FUNCIONES


def tipo_de_llamada(nombre, tipos, pos=None):
    """Variante que corresponde a los tipos de los argumentos y su resultado."""
    linea, columna = pos or (None, None)
    if nombre == 'select':
        if not tipos or tipos[0] not in (MP, MC):
            raise KindError('select necesita una lista de candidatos como primer argumento', linea, columna)
        if any(t != SEL for t in tipos[1:]):
            raise KindError('los argumentos de select después del primero deben ser selectores', linea, columna)
        return (P if tipos[0] == MP else C), None
    if nombre not in FUNCIONES:
        raise UnknownFunction(f'función desconocida: {nombre}', linea, columna)
    variantes = FUNCIONES[nombre]
    por_aridad = [v for v in variantes if len(v.args) == len(tipos)]
    if not por_aridad:
        aridades = sorted({len(v.args) for v in variantes})
        raise ArityError(
            f'{nombre} espera {" o ".join(map(str, aridades))} argumentos, recibió {len(tipos)}',
            linea, columna,
        )
    for variante in por_aridad:
        if tuple(tipos) == variante.args:
            return variante.resultado, variante
    raise KindError(f'{nombre}({", ".join(tipos)}) no es una combinación válida', linea, columna)


def tipo_de_predicado(nombre, tipos, pos=None):
    linea, columna = pos or (None, None)
    firmas = PREDICADOS[nombre]
    if not any(len(f) == len(tipos) for f in firmas):
        raise ArityError(f'{nombre} espera {len(firmas[0])} argumentos', linea, columna)
    if tuple(tipos) not in firmas:
        raise KindError(f'{nombre}({", ".join(tipos)}) no es una combinación válida', linea, columna)
