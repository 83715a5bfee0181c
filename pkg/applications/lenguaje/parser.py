# applications/lenguaje/parser.py

"""
Parser descendente recursivo (LL(1)) de los scripts .geo.

El tipado se resuelve durante el análisis: cada nombre se conoce antes de
usarse y cada llamada se valida contra la tabla de funciones. Por eso los
errores de aridad, de tipo y de uso antes de definición aparecen al parsear y
no al evaluar. La gramática completa está en GRAMATICA.md.
"""

from . import funciones as fn
from .errores import GeoSyntaxError, KindError, UseBeforeDef
from .lexer import tokenizar
from .nodos import (
    Afirmacion, Asignacion, Binaria, Igualdad, Llamada, Negacion, Nombre, Numero,
    RestriccionRazon, Script, Segmento,
)


class _Parser:

    def __init__(self, texto):
        self.tokens = tokenizar(texto)
        self.i = 0
        self.vertices = ()
        self.tipos = {}
        self.en_restriccion = False

    # --- utilidades ---------------------------------------------------------

    @property
    def actual(self):
        return self.tokens[self.i]

    def siguiente(self, k=1):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def error(self, mensaje, token=None, clase=GeoSyntaxError):
        token = token or self.actual
        return clase(mensaje, token.linea, token.columna)

    def avanzar(self):
        token = self.actual
        self.i += 1
        return token

    def es(self, texto, tipo=None):
        token = self.actual
        return token.texto == texto and (tipo is None or token.tipo == tipo)

    def esperar(self, texto):
        if not self.es(texto) or self.actual.tipo == 'FIN':
            encontrado = self.actual.texto or 'fin de archivo'
            raise self.error(f'se esperaba {texto!r} y se encontró {encontrado!r}')
        return self.avanzar()

    def fin_de_sentencia(self):
        # El ';' es opcional sólo al final del archivo.
        if self.actual.tipo == 'FIN':
            return
        self.esperar(';')

    # --- script -------------------------------------------------------------

    def script(self):
        self.esperar('triangle')
        token = self.actual
        if token.tipo != 'IDENT' or len(token.texto) != 3 or not token.texto.isupper() \
                or len(set(token.texto)) != 3 or 'K' in token.texto:
            raise self.error('el triángulo se declara con tres mayúsculas distintas, p. ej. ABC')
        self.avanzar()
        self.vertices = tuple(token.texto)
        for v in self.vertices:
            self.tipos[v] = fn.P
        self.fin_de_sentencia()

        restricciones = []
        while self.es('constrain', 'CLAVE'):
            restricciones.append(self.restriccion())
        sentencias = []
        while self.actual.tipo != 'FIN':
            sentencias.append(self.sentencia())
        return Script(token.texto, tuple(restricciones), tuple(sentencias), dict(self.tipos))

    def restriccion(self):
        inicio = self.avanzar()
        if self.es('ratio', 'CLAVE'):
            self.avanzar()
            self.esperar('(')
            for i, lado in enumerate('abc'):
                if i:
                    self.esperar(',')
                if not self.es(lado):
                    raise self.error('ratio se escribe ratio(a, b, c)')
                self.avanzar()
            self.esperar(')')
            self.esperar('=')
            p = self.numero()
            self.esperar(':')
            q = self.numero()
            self.esperar(':')
            r = self.numero()
            nodo = RestriccionRazon(p, q, r, inicio.pos)
        else:
            self.en_restriccion = True
            izq, tipo_izq = self.expr()
            igual = self.esperar('=')
            der, tipo_der = self.expr()
            self.en_restriccion = False
            if tipo_izq != fn.S or tipo_der != fn.S:
                raise self.error('las restricciones igualan escalares', igual, KindError)
            nodo = Igualdad(izq, der, inicio.pos)
        self.fin_de_sentencia()
        return nodo

    def numero(self):
        if self.actual.tipo != 'NUM':
            raise self.error('se esperaba un número')
        return self.avanzar().texto

    def sentencia(self):
        inicio = self.actual
        if self.es('assert', 'CLAVE'):
            self.avanzar()
            nodo = Afirmacion(self.afirmacion(), inicio.pos)
        elif inicio.tipo == 'IDENT' and self.siguiente().texto == '=':
            nodo = self.asignacion()
        else:
            raise self.error(f'sentencia inválida desde {inicio.texto!r}')
        self.fin_de_sentencia()
        return nodo

    def asignacion(self):
        token = self.avanzar()
        nombre = token.texto
        if nombre in self.tipos:
            raise self.error(f'{nombre} ya está definido', token)
        if nombre in fn.RESERVADOS or fn.es_funcion(nombre) or nombre in fn.PREDICADOS \
                or nombre in fn.PALABRAS_KIND or nombre == 'select':
            raise self.error(f'{nombre} es un nombre reservado', token)
        self.esperar('=')
        expr, tipo = self.expr()
        if tipo in (fn.MP, fn.MC):
            raise self.error('construcción multivaluada sin select', token, KindError)
        if tipo in (fn.KIND, fn.SEL):
            raise self.error(f'no se puede asignar un valor de tipo {tipo}', token, KindError)
        self.tipos[nombre] = tipo
        return Asignacion(nombre, expr, token.pos)

    def afirmacion(self):
        token = self.actual
        if token.tipo == 'IDENT' and token.texto in fn.PREDICADOS and self.siguiente().texto == '(':
            self.avanzar()
            args, tipos = self.argumentos()
            fn.tipo_de_predicado(token.texto, tipos, token.pos)
            return Llamada(token.texto, tuple(args), token.pos)
        izq, tipo_izq = self.expr()
        igual = self.esperar('=')
        der, tipo_der = self.expr()
        if tipo_izq != fn.S or tipo_der != fn.S:
            raise self.error('la igualdad de assert compara escalares', igual, KindError)
        return Igualdad(izq, der, token.pos)

    # --- expresiones --------------------------------------------------------

    def expr(self):
        izq, tipo = self.termino()
        while self.actual.texto in ('+', '-') and self.actual.tipo == 'SIMBOLO':
            op = self.avanzar()
            der, tipo_der = self.termino()
            self._exigir_escalares(op, tipo, tipo_der)
            izq = Binaria(op.texto, izq, der, op.pos)
        return izq, tipo

    def termino(self):
        izq, tipo = self.unario()
        while self.actual.texto in ('*', '/') and self.actual.tipo == 'SIMBOLO':
            op = self.avanzar()
            der, tipo_der = self.unario()
            self._exigir_escalares(op, tipo, tipo_der)
            izq = Binaria(op.texto, izq, der, op.pos)
        return izq, tipo

    def unario(self):
        if self.es('-', 'SIMBOLO'):
            op = self.avanzar()
            operando, tipo = self.unario()
            self._exigir_escalares(op, tipo)
            return Negacion(operando, op.pos), fn.S
        return self.potencia()

    def potencia(self):
        base, tipo = self.atomo()
        if self.es('^', 'SIMBOLO'):
            op = self.avanzar()
            exponente, tipo_exp = self.unario()
            self._exigir_escalares(op, tipo, tipo_exp)
            return Binaria('^', base, exponente, op.pos), fn.S
        return base, tipo

    def _exigir_escalares(self, op, *tipos):
        if any(t != fn.S for t in tipos):
            raise self.error(f'el operador {op.texto!r} sólo se aplica a escalares', op, KindError)

    def atomo(self):
        token = self.actual
        if token.tipo == 'NUM':
            self.avanzar()
            return Numero(token.texto, token.pos), fn.S
        if self.es('(', 'SIMBOLO'):
            self.avanzar()
            expr, tipo = self.expr()
            self.esperar(')')
            return expr, tipo
        if token.tipo != 'IDENT':
            raise self.error(f'expresión inválida en {token.texto or "fin de archivo"!r}')
        self.avanzar()
        if self.es('(', 'SIMBOLO'):
            return self.llamada(token)
        return self.nombre(token)

    def argumentos(self):
        self.esperar('(')
        args, tipos = [], []
        if not self.es(')', 'SIMBOLO'):
            while True:
                arg, tipo = self.expr()
                args.append(arg)
                tipos.append(tipo)
                if not self.es(',', 'SIMBOLO'):
                    break
                self.avanzar()
        self.esperar(')')
        return args, tipos

    def llamada(self, token):
        nombre = token.texto
        if nombre in fn.PREDICADOS:
            raise self.error(f'{nombre} es un predicado y sólo va en assert', token, KindError)
        args, tipos = self.argumentos()
        resultado, _ = fn.tipo_de_llamada(nombre, tipos, token.pos)
        if self.en_restriccion:
            self._validar_restriccion(token, args, resultado)
        if nombre == 'angle' and len(args) == 1:
            (arg,) = args
            if not isinstance(arg, Nombre) or arg.nombre not in self.vertices:
                raise self.error('angle(V) requiere un vértice del triángulo', token, KindError)
        return Llamada(nombre, tuple(args), token.pos), resultado

    def _validar_restriccion(self, token, args, resultado):
        if token.texto not in ('angle', 'deg', 'sqrt', 'abs') or resultado != fn.S:
            raise self.error(f'{token.texto} no está permitido en una restricción', token, KindError)

    def nombre(self, token):
        nombre = token.texto
        if self.en_restriccion:
            if nombre in fn.RESERVADOS:
                return Nombre(nombre, token.pos), fn.S
            if nombre in self.vertices:
                return Nombre(nombre, token.pos), fn.P
            raise self.error(f'{nombre} no está permitido en una restricción', token, KindError)
        if nombre in self.tipos:
            return Nombre(nombre, token.pos), self.tipos[nombre]
        if nombre in fn.RESERVADOS:
            return Nombre(nombre, token.pos), fn.S
        if nombre in fn.PALABRAS_KIND:
            return Nombre(nombre, token.pos), fn.KIND
        if nombre in fn.SELECTORES_SIMPLES:
            return Nombre(nombre, token.pos), fn.SEL
        if len(nombre) == 2 and all(self.tipos.get(letra) == fn.P for letra in nombre) \
                and nombre[0] != nombre[1]:
            return Segmento(nombre[0], nombre[1], token.pos), fn.L
        raise self.error(f'{nombre} se usa antes de definirse', token, UseBeforeDef)


def parse(texto):
    """Texto .geo → Script tipado."""
    return _Parser(texto).script()
