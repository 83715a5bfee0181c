# applications/muestreo/restricciones.py

"""
Restricciones de forma sobre los lados (a, b, c).

Se escriben en el sublenguaje `constrain` de los scripts: igualdades entre
expresiones en a, b, c, s, K, angle(V), deg, sqrt y abs, o `ratio(a,b,c)=p:q:r`.
`angle(V) = deg(θ)` se pasa a forma polinomial con la ley de cosenos; el resto
de las relaciones angulares se evalúan con acos.

El residuo de una igualdad es relativo: (izq − der) dividido por la suma de
los valores absolutos de sus sumandos de primer nivel.
"""

from dataclasses import dataclass

from applications.lenguaje.formato import texto_restriccion
from applications.lenguaje.nodos import (
    Binaria, Igualdad, Llamada, Negacion, Nombre, Numero, terminos,
)
from applications.lenguaje.parser import parse
from applications.nucleo.excepciones import DegenerateInput
from applications.nucleo.precision import FAST


def _angulo_fijo(igualdad):
    """(vértice, expresión en grados) si la igualdad es `angle(V) = deg(x)`."""
    for lado, otro in ((igualdad.izq, igualdad.der), (igualdad.der, igualdad.izq)):
        if isinstance(lado, Llamada) and lado.funcion == 'angle' and len(lado.args) == 1 \
                and isinstance(otro, Llamada) and otro.funcion == 'deg':
            return lado.args[0].nombre, otro.args[0]
    return None


class _Lados:
    """Valores de a, b, c y derivados para una terna de lados."""

    def __init__(self, a, b, c, vertices, prec):
        self.prec = prec
        self.valores = {'a': a, 'b': b, 'c': c, 's': (a + b + c) / 2}
        s = self.valores['s']
        self.valores['K'] = prec.raiz(s * (s - a) * (s - b) * (s - c))
        self.vertices = vertices

    def opuestos(self, vertice):
        """(lado opuesto, adyacentes) para el vértice."""
        i = self.vertices.index(vertice)
        lados = [self.valores[x] for x in 'abc']
        return lados[i], lados[(i + 1) % 3], lados[(i + 2) % 3]

    def coseno(self, vertice):
        x, y, z = self.opuestos(vertice)
        return (y * y + z * z - x * x) / (2 * y * z)

    def valor(self, expr):
        prec = self.prec
        if isinstance(expr, Numero):
            return prec.num(expr.texto)
        if isinstance(expr, Nombre):
            return self.valores[expr.nombre]
        if isinstance(expr, Negacion):
            return -self.valor(expr.operando)
        if isinstance(expr, Binaria):
            x, y = self.valor(expr.izq), self.valor(expr.der)
            if expr.op == '+':
                return x + y
            if expr.op == '-':
                return x - y
            if expr.op == '*':
                return x * y
            if expr.op == '/':
                if y == 0:
                    raise DegenerateInput('división por cero en una restricción')
                return x / y
            return prec.potencia(x, y)
        if isinstance(expr, Llamada):
            if expr.funcion == 'angle':
                return prec.acos(self.coseno(expr.args[0].nombre))
            (arg,) = expr.args
            x = self.valor(arg)
            if expr.funcion == 'deg':
                return x * prec.pi / 180
            if expr.funcion == 'sqrt':
                return prec.raiz(x)
            if expr.funcion == 'abs':
                return abs(x)
        raise DegenerateInput(f'expresión no admitida en una restricción: {expr!r}')


@dataclass(frozen=True)
class Ecuacion:
    igualdad: Igualdad
    vertices: str = 'ABC'

    def residuo(self, a, b, c, prec=FAST):
        """Residuo relativo con signo."""
        lados = _Lados(a, b, c, self.vertices, prec)
        fijo = _angulo_fijo(self.igualdad)
        if fijo is not None:
            vertice, grados = fijo
            x, y, z = lados.opuestos(vertice)
            coseno = prec.cos(lados.valor(grados) * prec.pi / 180)
            izq, der = y * y + z * z - x * x, 2 * y * z * coseno
            escala = y * y + z * z + x * x
            return (izq - der) / escala
        izq, der = lados.valor(self.igualdad.izq), lados.valor(self.igualdad.der)
        escala = sum(abs(lados.valor(t)) for t in terminos(self.igualdad.izq) + terminos(self.igualdad.der))
        if escala == 0:
            return izq - der
        return (izq - der) / escala


@dataclass(frozen=True)
class ConjuntoRestricciones:
    ecuaciones: tuple = ()
    texto: str = ''
    vertices: str = 'ABC'

    @classmethod
    def desde_script(cls, script):
        texto = '; '.join(texto_restriccion(r) for r in script.restricciones)
        ecuaciones = tuple(Ecuacion(e, script.vertices) for e in script.ecuaciones())
        return cls(ecuaciones, texto, script.vertices)

    @classmethod
    def desde_texto(cls, texto, vertices='ABC'):
        """Restricciones separadas por ';', p. ej. 'ratio(a,b,c)=7:9:10' o '2*a = b + c'."""
        partes = [p.strip() for p in (texto or '').split(';') if p.strip()]
        fuente = f'triangle {vertices};\n' + ''.join(f'constrain {p};\n' for p in partes)
        return cls.desde_script(parse(fuente))

    def __len__(self):
        return len(self.ecuaciones)

    def __bool__(self):
        return bool(self.ecuaciones)

    def residuos(self, a, b, c, prec=FAST):
        return [e.residuo(a, b, c, prec) for e in self.ecuaciones]

    def cumple(self, a, b, c, eps, prec=FAST):
        try:
            return all(abs(r) <= eps for r in self.residuos(a, b, c, prec))
        except DegenerateInput:
            return False
