# applications/lenguaje/hechos.py

"""
Hechos definicionales: lo que un script afirma por construcción.

Un punto construido como `foot(D, BC)` está sobre BC y DF ⟂ BC sin que haga
falta medir nada. Los detectores usan estos hechos para descartar relaciones
que sólo repiten la definición de la figura.

Claves: un punto es su nombre; una recta por dos puntos con nombre es el
frozenset de ambos; cualquier otra recta o círculo es su nombre si está
asignado o el texto canónico de su expresión.
"""

from dataclasses import dataclass, field
from itertools import combinations

from applications.triangulos.centros import CEVIANAS, TIPOS_CENTRO

from .formato import format_expr
from .funciones import TIPOS_CEVIANA
from .nodos import Asignacion, Llamada, Nombre, Segmento

# Funciones simétricas en sus argumentos: la clave ignora el orden.
_SIMETRICAS = frozenset(TIPOS_CENTRO) | {'incircle', 'circumcircle', 'circle3', 'ninepointcircle',
                                         'midpoint', 'between', 'interior'}
_ALIAS_FUNCION = {'circle3': 'circumcircle'}


@dataclass
class Hechos:
    sobre_recta: dict = field(default_factory=dict)
    sobre_circulo: dict = field(default_factory=dict)
    perpendiculares: set = field(default_factory=set)
    paralelas: set = field(default_factory=set)
    tangencias: set = field(default_factory=set)

    def _agregar(self, tabla, clave, *puntos):
        tabla.setdefault(clave, set()).update(puntos)

    def en_recta(self, clave, *puntos):
        self._agregar(self.sobre_recta, clave, *puntos)

    def en_circulo(self, clave, *puntos):
        self._agregar(self.sobre_circulo, clave, *puntos)

    def puntos_de_recta(self, clave):
        puntos = set(self.sobre_recta.get(clave, ()))
        if isinstance(clave, frozenset):
            puntos |= clave
        return puntos

    def equivalentes(self, clave):
        """La clave de una recta más todos los pares de puntos definicionalmente sobre ella."""
        puntos = self.puntos_de_recta(clave)
        return {clave} | {frozenset(par) for par in combinations(sorted(puntos), 2)}

    # --- consultas ------------------------------------------------------------

    def colineales(self, *puntos):
        buscados = set(puntos)
        claves = set(self.sobre_recta) | {frozenset(par) for par in combinations(sorted(buscados), 2)}
        return any(buscados <= self.puntos_de_recta(clave) for clave in claves)

    def sobre(self, punto, circulo):
        return punto in self.sobre_circulo.get(circulo, ())

    def _par_definicional(self, pares, alias1, alias2):
        for k1, k2 in (tuple(par) for par in pares if len(par) == 2):
            e1, e2 = self.equivalentes(k1), self.equivalentes(k2)
            if (e1 & alias1 and e2 & alias2) or (e1 & alias2 and e2 & alias1):
                return True
        return False

    def perpendiculares_def(self, alias1, alias2):
        return self._par_definicional(self.perpendiculares, set(alias1), set(alias2))

    def paralelas_def(self, alias1, alias2):
        return self._par_definicional(self.paralelas, set(alias1), set(alias2))

    def tangentes_def(self, circulo, alias):
        alias = set(alias)
        for par in self.tangencias:
            if circulo in par:
                (otro,) = par - {circulo} or {circulo}
                if ({otro} | self.equivalentes(otro)) & alias:
                    return True
        return False


class _Analizador:

    def __init__(self, script):
        self.script = script
        self.hechos = Hechos()
        # clave de definición → nombre asignado
        self.por_definicion = {}
        self.definiciones = {}
        self.claves = {}

    def clave(self, expr):
        if isinstance(expr, Nombre):
            return self.claves.get(expr.nombre, expr.nombre)
        if isinstance(expr, Segmento):
            return frozenset((expr.p, expr.q))
        if isinstance(expr, Llamada) and expr.funcion == 'line' \
                and all(isinstance(a, Nombre) for a in expr.args):
            return frozenset(self.clave(a) for a in expr.args)
        firma = self._firma(expr)
        if firma in self.por_definicion:
            return self.por_definicion[firma]
        return format_expr(expr)

    def _firma(self, expr):
        if isinstance(expr, Llamada):
            funcion = _ALIAS_FUNCION.get(expr.funcion, expr.funcion)
            args = tuple(self.clave(a) for a in expr.args)
            if funcion in _SIMETRICAS:
                return (funcion, frozenset(args))
            return (funcion, args)
        return format_expr(expr)

    def analizar(self):
        for sentencia in self.script.sentencias:
            if isinstance(sentencia, Asignacion):
                self.asignacion(sentencia.nombre, sentencia.expr)
        return self.hechos

    def asignacion(self, nombre, expr):
        tipo = self.script.tipos.get(nombre)
        if isinstance(expr, Segmento) or (isinstance(expr, Llamada) and expr.funcion == 'line'):
            self.claves[nombre] = self.clave(expr)
        elif isinstance(expr, Nombre):
            self.claves[nombre] = self.clave(expr)
        self.por_definicion.setdefault(self._firma(expr), self.claves.get(nombre, nombre))
        self.definiciones[nombre] = expr
        if not isinstance(expr, Llamada):
            return
        if tipo == 'P':
            self.punto(nombre, expr)
        elif tipo == 'L':
            self.recta(nombre, expr)
        elif tipo == 'C':
            self.circulo(nombre, expr)

    def _clave_nombre(self, arg):
        return arg.nombre if isinstance(arg, Nombre) else None

    def punto(self, X, expr):
        h, f, args = self.hechos, expr.funcion, expr.args
        if f in ('midpoint', 'between'):
            p, q = (self._clave_nombre(a) for a in args)
            if p and q:
                h.en_recta(frozenset((p, q)), X)
        elif f == 'foot':
            recta = self.clave(args[1])
            h.en_recta(recta, X)
            y = self._clave_nombre(args[0])
            if y and y != X:
                h.perpendiculares.add(frozenset((frozenset((y, X)), recta)))
        elif f == 'reflect':
            y = self._clave_nombre(args[0])
            if y:
                h.perpendiculares.add(frozenset((frozenset((y, X)), self.clave(args[1]))))
        elif f == 'intersect':
            self._en_objetos(X, args)
        elif f == 'touch':
            if len(args) == 1:
                h.en_recta(self.clave(args[0]), X)
                h.en_circulo(self._firma_incirculo(), X)
            else:
                self._en_objetos(X, args)
        elif f == 'cevian':
            v, p, q = (self._clave_nombre(a) for a in args[:3])
            if p and q:
                h.en_recta(frozenset((p, q)), X)
            tipo = args[3].nombre if isinstance(args[3], Nombre) else None
            if v and tipo in TIPOS_CEVIANA + tuple(TIPOS_CENTRO):
                centro = CEVIANAS.get(tipo, tipo)
                firma = (centro, frozenset(filter(None, (v, p, q))))
                nombre_centro = self.por_definicion.get(firma)
                if nombre_centro:
                    h.en_recta(frozenset((v, X)), nombre_centro)
        elif f == 'select':
            fuente = args[0]
            if isinstance(fuente, Llamada) and fuente.funcion == 'intersect':
                self._en_objetos(X, fuente.args)

    def _en_objetos(self, X, args):
        for arg in args:
            tipo = self._tipo_de(arg)
            if tipo == 'L':
                self.hechos.en_recta(self.clave(arg), X)
            elif tipo == 'C':
                self.hechos.en_circulo(self.clave(arg), X)

    def _tipo_de(self, arg):
        if isinstance(arg, Segmento):
            return 'L'
        if isinstance(arg, Nombre):
            return self.script.tipos.get(arg.nombre)
        if isinstance(arg, Llamada):
            if arg.funcion in ('line', 'parallel', 'perpendicular'):
                return 'L'
            if arg.funcion in ('incircle', 'circumcircle', 'circle3', 'ninepointcircle',
                               'excircle', 'mixtilinear', 'circle'):
                return 'C'
            if arg.funcion == 'select' and isinstance(arg.args[0], Llamada) \
                    and arg.args[0].funcion == 'apollonius':
                return 'C'
        return None

    def _firma_incirculo(self):
        firma = ('incircle', frozenset(self.script.vertices))
        return self.por_definicion.get(firma, 'incircle(' + ', '.join(self.script.vertices) + ')')

    def recta(self, m, expr):
        h, f, args = self.hechos, expr.funcion, expr.args
        if f in ('parallel', 'perpendicular'):
            clave = self.claves.get(m, m)
            y = self._clave_nombre(args[0])
            if y:
                h.en_recta(clave, y)
            tabla = h.paralelas if f == 'parallel' else h.perpendiculares
            tabla.add(frozenset((clave, self.clave(args[1]))))

    def circulo(self, w, expr):
        h, f, args = self.hechos, expr.funcion, expr.args
        nombres = [self._clave_nombre(a) for a in args]
        if f in ('incircle', 'excircle') and all(nombres):
            for p, q in combinations(nombres, 2):
                h.tangencias.add(frozenset((w, frozenset((p, q)))))
        elif f in ('circumcircle', 'circle3') and all(nombres):
            h.en_circulo(w, *nombres)
        elif f == 'circle' and nombres[1]:
            h.en_circulo(w, nombres[1])
        elif f == 'mixtilinear' and all(nombres):
            v, p, q = nombres
            h.tangencias.add(frozenset((w, frozenset((v, p)))))
            h.tangencias.add(frozenset((w, frozenset((v, q)))))
            circunferencia = self.por_definicion.get(('circumcircle', frozenset(nombres)))
            if circunferencia:
                h.tangencias.add(frozenset((w, circunferencia)))
        elif f == 'select' and isinstance(args[0], Llamada) and args[0].funcion == 'apollonius':
            for arg in args[0].args:
                tipo = self._tipo_de(arg)
                if tipo in ('L', 'C'):
                    h.tangencias.add(frozenset((w, self.clave(arg))))
                elif isinstance(arg, Nombre):
                    h.en_circulo(w, arg.nombre)


def hechos(script):
    """Hechos definicionales de un script ya tipado por el parser."""
    return _Analizador(script).analizar()
