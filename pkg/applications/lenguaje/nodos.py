# applications/lenguaje/nodos.py

"""
Árbol sintáctico de los scripts .geo.

Todos los nodos son dataclasses inmutables. La posición en el fuente
(`pos`, un par línea/columna) no participa de la igualdad: dos scripts son
estructuralmente iguales aunque difiera su formato.
"""

from dataclasses import dataclass, field


def _pos():
    return field(default=None, compare=False, repr=False)


# --- Expresiones ------------------------------------------------------------

@dataclass(frozen=True)
class Numero:
    texto: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Nombre:
    nombre: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Segmento:
    """Referencia a recta por dos puntos definidos, escrita `BC`."""
    p: str
    q: str
    pos: tuple = _pos()


@dataclass(frozen=True)
class Llamada:
    funcion: str
    args: tuple = ()
    pos: tuple = _pos()


@dataclass(frozen=True)
class Binaria:
    op: str
    izq: object
    der: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Negacion:
    operando: object
    pos: tuple = _pos()


# --- Sentencias ---------------------------------------------------------------

@dataclass(frozen=True)
class Igualdad:
    izq: object
    der: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class RestriccionRazon:
    """`ratio(a,b,c) = p:q:r`, equivalente a q·a = p·b y r·b = q·c."""
    p: str
    q: str
    r: str
    pos: tuple = _pos()

    def ecuaciones(self):
        a, b, c = Nombre('a', self.pos), Nombre('b', self.pos), Nombre('c', self.pos)
        p, q, r = Numero(self.p), Numero(self.q), Numero(self.r)
        return (
            Igualdad(Binaria('*', q, a), Binaria('*', p, b), self.pos),
            Igualdad(Binaria('*', r, b), Binaria('*', q, c), self.pos),
        )


@dataclass(frozen=True)
class Asignacion:
    nombre: str
    expr: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Afirmacion:
    """`assert ...`: un predicado (Llamada) o una Igualdad escalar."""
    afirmacion: object
    pos: tuple = _pos()


@dataclass(frozen=True)
class Script:
    vertices: str
    restricciones: tuple = ()
    sentencias: tuple = ()
    # Tipo de cada nombre definido; lo completa el parser.
    tipos: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def asignaciones(self):
        return tuple(s for s in self.sentencias if isinstance(s, Asignacion))

    @property
    def afirmaciones(self):
        return tuple(s for s in self.sentencias if isinstance(s, Afirmacion))

    def ecuaciones(self):
        """Restricciones de forma como lista plana de igualdades."""
        ecuaciones = []
        for r in self.restricciones:
            if isinstance(r, RestriccionRazon):
                ecuaciones.extend(r.ecuaciones())
            else:
                ecuaciones.append(r)
        return tuple(ecuaciones)


def recorrer(nodo):
    """Todos los sub-nodos de una expresión, en preorden."""
    yield nodo
    if isinstance(nodo, Llamada):
        for arg in nodo.args:
            yield from recorrer(arg)
    elif isinstance(nodo, (Binaria, Igualdad)):
        yield from recorrer(nodo.izq)
        yield from recorrer(nodo.der)
    elif isinstance(nodo, Negacion):
        yield from recorrer(nodo.operando)


def terminos(expr):
    """Sumandos de primer nivel de una expresión (aplana + y - y la negación)."""
    if isinstance(expr, Binaria) and expr.op in ('+', '-'):
        return terminos(expr.izq) + terminos(expr.der)
    if isinstance(expr, Negacion):
        return terminos(expr.operando)
    return [expr]
