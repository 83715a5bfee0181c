# applications/triangulos/triangulo.py

"""
Triángulo de referencia y sus medidas derivadas.

Convención de rótulos: a = |BC|, b = |CA|, c = |AB|, s = (a+b+c)/2 y K el
área. El triángulo se valida al construirse: desigualdad triangular estricta
con margen mayor que eps·escala y área positiva.
"""

from dataclasses import dataclass
from functools import cached_property

from applications.nucleo.excepciones import DegenerateInput
from applications.nucleo.precision import Tolerancia, precision_of
from applications.nucleo.primitivas import Punto, dist, escala_de, signed_area

VERTICES = ('A', 'B', 'C')

# Rotación cíclica de rótulos: el vértice pedido pasa a ocupar el lugar de A.
_ROTACIONES = {'A': (0, 1, 2), 'B': (1, 2, 0), 'C': (2, 0, 1)}


@dataclass(frozen=True)
class Triangulo:
    A: Punto
    B: Punto
    C: Punto

    def __post_init__(self):
        tol = self.tolerancia()
        holgura = tol.absoluta(self.precision)
        margen = min(self.a + self.b - self.c, self.b + self.c - self.a, self.c + self.a - self.b)
        if margen <= holgura:
            raise DegenerateInput('el triángulo no cumple la desigualdad triangular con margen')
        if not self.K > 0:
            raise DegenerateInput('triángulo de área nula')

    @classmethod
    def from_sides(cls, a, b, c):
        """Ubica A=(0,0), B=(c,0) y C del lado antihorario (ley de cosenos)."""
        prec = precision_of(a, b, c)
        if min(a + b - c, b + c - a, c + a - b) <= 0:
            raise DegenerateInput(f'lados inválidos: {float(a)}, {float(b)}, {float(c)}')
        cero = prec.num(0)
        x = (b ** 2 + c ** 2 - a ** 2) / (2 * c)
        y = prec.raiz(b ** 2 - x ** 2)
        return cls(Punto(cero, cero), Punto(prec.num(c), cero), Punto(x, y))

    @cached_property
    def precision(self):
        return precision_of(self.A, self.B, self.C)

    @cached_property
    def a(self):
        return dist(self.B, self.C)

    @cached_property
    def b(self):
        return dist(self.C, self.A)

    @cached_property
    def c(self):
        return dist(self.A, self.B)

    @cached_property
    def s(self):
        return (self.a + self.b + self.c) / 2

    @cached_property
    def K(self):
        return abs(signed_area(self.A, self.B, self.C))

    @cached_property
    def escala(self):
        return escala_de(self.A, self.B, self.C)

    def tolerancia(self, base=None):
        base = base or Tolerancia()
        return base.con_escala(escala_de(self.A, self.B, self.C))

    def vertices(self):
        return (self.A, self.B, self.C)

    def vertice(self, nombre):
        return self.vertices()[VERTICES.index(nombre)]

    def lado(self, nombre):
        return {'a': self.a, 'b': self.b, 'c': self.c}[nombre]

    def rotado(self, vertice):
        """Mismo triángulo con los rótulos rotados para que `vertice` sea A."""
        i, j, k = _ROTACIONES[vertice]
        v = self.vertices()
        return Triangulo(v[i], v[j], v[k])

    def desde_baricentricas(self, u, v, w):
        total = u + v + w
        if abs(total) <= self.tolerancia().eps(self.precision) * (abs(u) + abs(v) + abs(w)):
            raise DegenerateInput('coordenadas baricéntricas de suma nula')
        return Punto(
            (u * self.A.x + v * self.B.x + w * self.C.x) / total,
            (u * self.A.y + v * self.B.y + w * self.C.y) / total,
        )

    def transformado(self, theta, k, tx, ty):
        """Imagen por una semejanza: rotación theta, escala k y traslación."""
        prec = self.precision
        cos, sin = prec.cos(prec.num(theta)), prec.sin(prec.num(theta))
        k, tx, ty = prec.num(k), prec.num(tx), prec.num(ty)

        def mover(p):
            return Punto(k * (cos * p.x - sin * p.y) + tx, k * (sin * p.x + cos * p.y) + ty)

        return Triangulo(mover(self.A), mover(self.B), mover(self.C))
