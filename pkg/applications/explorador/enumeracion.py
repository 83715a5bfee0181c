# applications/explorador/enumeracion.py

"""
Enumeración de secuencias de construcción.

Una secuencia es una tupla de Pasos; cada paso aplica una función del menú a
objetos ya definidos y liga el resultado a un nombre nuevo. La enumeración es
un generador determinista: mismo menú y misma configuración, mismo orden.

Se cocientan las simetrías de argumentos declaradas en el menú y se descarta
un paso cuya expresión ya aparece en el script o en la secuencia.
"""

import re
from dataclasses import dataclass, field
from itertools import combinations, count, product
from string import ascii_uppercase

from applications.lenguaje import funciones as fn
from applications.lenguaje.formato import format_expr
from applications.lenguaje.nodos import Llamada, Nombre, Segmento

from .configuraciones import ConfiguracionInicial
from .menu import Menu

# K está reservado para el área
LETRAS = [x for x in ascii_uppercase if x != 'K']

_SEGMENTO = re.compile(r'\b([A-Z])([A-Z])\b')


def clave(expresion):
    """Texto de una expresión con cada segmento escrito en orden: `foot(D, CA)` y `foot(D, AC)` coinciden."""
    return _SEGMENTO.sub(lambda m: ''.join(sorted(m.groups())), expresion)


@dataclass(frozen=True)
class Paso:
    nombre: str
    funcion: str
    args: tuple
    selector: str = ''
    tipo: str = fn.P

    def expresion(self):
        llamada = f'{self.funcion}({", ".join(self.args)})'
        return f'select({llamada}, {self.selector})' if self.selector else llamada

    def texto(self):
        return f'{self.nombre} = {self.expresion()};'

    def __str__(self):
        return self.texto()


def _incidentes(expr):
    """Puntos con nombre que una recta contiene por definición."""
    if isinstance(expr, Segmento):
        return frozenset((expr.p, expr.q))
    if isinstance(expr, Llamada) and isinstance(expr.args[0], Nombre):
        if expr.funcion == 'line':
            return frozenset(a.nombre for a in expr.args if isinstance(a, Nombre))
        if expr.funcion in ('parallel', 'perpendicular'):
            return frozenset((expr.args[0].nombre,))
    return frozenset()


@dataclass(frozen=True)
class Estado:
    vertices: str
    puntos: tuple = ()
    # recta con nombre → puntos incidentes por definición
    rectas: tuple = ()
    circulos: tuple = ()
    claves: frozenset = frozenset()
    nombres: frozenset = field(default=frozenset())

    @classmethod
    def desde_script(cls, script):
        puntos, rectas, circulos, claves = list(script.vertices), [], [], set()
        for sentencia in script.asignaciones:
            tipo = script.tipos.get(sentencia.nombre)
            claves.add(clave(format_expr(sentencia.expr)))
            if tipo == fn.P:
                puntos.append(sentencia.nombre)
            elif tipo == fn.L:
                rectas.append((sentencia.nombre, _incidentes(sentencia.expr)))
            elif tipo == fn.C:
                circulos.append(sentencia.nombre)
        nombres = set(puntos) | {r for r, _ in rectas} | set(circulos) | set(script.tipos)
        return cls(script.vertices, tuple(puntos), tuple(rectas), tuple(circulos),
                   frozenset(claves), frozenset(nombres))

    def nombre_libre(self, tipo):
        if tipo == fn.P:
            return next(x for x in LETRAS if x not in self.nombres)
        prefijo = 'm' if tipo == fn.L else 'w'
        n = 1
        while f'{prefijo}{n}' in self.nombres:
            n += 1
        return f'{prefijo}{n}'

    def con(self, paso):
        puntos, rectas, circulos = self.puntos, self.rectas, self.circulos
        if paso.tipo == fn.P:
            puntos += (paso.nombre,)
        elif paso.tipo == fn.L:
            incidentes = frozenset(paso.args[:1]) if paso.funcion in ('parallel', 'perpendicular') else frozenset()
            rectas += ((paso.nombre, incidentes),)
        else:
            circulos += (paso.nombre,)
        return Estado(self.vertices, puntos, rectas, circulos,
                      self.claves | {clave(paso.expresion())}, self.nombres | {paso.nombre})

    # --- candidatos por tipo -------------------------------------------------------------

    def segmentos(self, solo_lados=False):
        puntos = self.vertices if solo_lados else self.puntos
        return [(p + q, frozenset((p, q))) for p, q in combinations(puntos, 2)]

    def candidatos(self, tipo, entrada):
        """(texto, puntos incidentes) de cada objeto que puede ocupar un argumento."""
        if tipo == fn.P:
            return [(p, frozenset((p,))) for p in self.puntos]
        if tipo == fn.C:
            return [(w, frozenset()) for w in self.circulos]
        if entrada.rectas == 'lados':
            return self.segmentos(solo_lados=True)
        return self.segmentos() + list(self.rectas)


def _grupos(entrada):
    """Posiciones de argumentos intercambiables entre sí."""
    posiciones = range(len(entrada.args))
    if entrada.simetria == 'ninguna':
        return []
    if entrada.simetria == 'cola':
        posiciones = posiciones[1:]
    grupos = {}
    for i in posiciones:
        grupos.setdefault(entrada.args[i], []).append(i)
    return [g for g in grupos.values() if len(g) > 1]


def _incidencia(entrada, elegidos):
    puntos = [inc for (_, inc), t in zip(elegidos, entrada.args) if t == fn.P]
    rectas = [inc for (_, inc), t in zip(elegidos, entrada.args) if t == fn.L]
    if any(p <= r for p in puntos for r in rectas if r):
        return True
    return any(r1 & r2 for r1, r2 in combinations(rectas, 2))


def enlaces(estado, entrada):
    """Tuplas de textos de argumentos, una por clase de simetría, en orden de primera aparición."""
    listas = [estado.candidatos(t, entrada) for t in entrada.args]
    indice = [{texto: i for i, (texto, _) in zip(count(), lista)} for lista in listas]
    grupos = _grupos(entrada)
    vistos = set()
    for elegidos in product(*listas):
        textos = [texto for texto, _ in elegidos]
        if len(set(textos)) != len(textos):
            continue
        if entrada.excluir_incidentes and _incidencia(entrada, elegidos):
            continue
        canonico = list(textos)
        for grupo in grupos:
            ordenados = sorted((textos[i] for i in grupo), key=lambda t, i0=grupo[0]: indice[i0][t])
            for i, texto in zip(grupo, ordenados):
                canonico[i] = texto
        canonico = tuple(canonico)
        if canonico in vistos:
            continue
        vistos.add(canonico)
        yield canonico


def pasos(estado, menu):
    """Todos los pasos aplicables en un estado."""
    for entrada in menu.entradas:
        tipo = entrada.resultado
        for args in enlaces(estado, entrada):
            for selector in entrada.selectores or ('',):
                paso = Paso(estado.nombre_libre(tipo), entrada.funcion, args, selector, tipo)
                if clave(paso.expresion()) in estado.claves:
                    continue
                yield paso


def _extender(estado, secuencia, restante, menu):
    for paso in pasos(estado, menu):
        nueva = secuencia + (paso,)
        yield nueva
        if restante > 1:
            yield from _extender(estado.con(paso), nueva, restante - 1, menu)


def enumerate(inicio, profundidad, menu=None):  # noqa: A001
    """
    Secuencias de 0 a `profundidad` pasos sobre `inicio` (una
    ConfiguracionInicial o un Script). La primera es siempre la vacía.
    """
    if profundidad < 0:
        raise ValueError(f'profundidad inválida: {profundidad}')
    menu = Menu.por_defecto() if menu is None else menu
    script = inicio.script() if isinstance(inicio, ConfiguracionInicial) else inicio
    yield ()
    if profundidad:
        yield from _extender(Estado.desde_script(script), (), profundidad, menu)


def fuente_de(script_fuente, secuencia):
    """Texto del script inicial más los pasos de la secuencia."""
    return script_fuente.rstrip('\n') + '\n' + ''.join(p.texto() + '\n' for p in secuencia)
