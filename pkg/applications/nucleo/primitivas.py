# applications/nucleo/primitivas.py

"""
Primitivas planas: Punto, Recta, Circulo y las construcciones básicas.

Cada función trabaja en la precisión de sus argumentos (ver precision.py)
y recibe opcionalmente una Tolerancia; sin ella se usa la tolerancia por
defecto con escala 1.
"""

from dataclasses import dataclass

from .excepciones import CoincidentCircles, DegenerateInput, ParallelLines
from .precision import Tolerancia, precision_of


def _tolerancia(tol):
    return tol if tol is not None else Tolerancia()


@dataclass(frozen=True)
class Punto:
    x: object
    y: object

    def __post_init__(self):
        prec = precision_of(self.x, self.y)
        if not (prec.es_finito(self.x) and prec.es_finito(self.y)):
            raise DegenerateInput('coordenadas no finitas')

    def coordenadas(self):
        return (self.x, self.y)

    def __add__(self, otro):
        return Punto(self.x + otro.x, self.y + otro.y)

    def __sub__(self, otro):
        return Punto(self.x - otro.x, self.y - otro.y)

    def por(self, k):
        return Punto(self.x * k, self.y * k)

    def dot(self, otro):
        return self.x * otro.x + self.y * otro.y

    def cross(self, otro):
        return self.x * otro.y - self.y * otro.x

    def norma(self):
        return precision_of(self).hypot(self.x, self.y)

    def clave(self):
        """Clave de orden (x, y) para resultados múltiples."""
        return (self.x, self.y)


@dataclass(frozen=True)
class Recta:
    """Recta ax + by + c = 0 con a² + b² = 1."""
    a: object
    b: object
    c: object

    @classmethod
    def normalizada(cls, a, b, c):
        prec = precision_of(a, b, c)
        n = prec.hypot(a, b)
        if n == 0 or not prec.es_finito(n):
            raise DegenerateInput('recta sin dirección')
        a, b, c = a / n, b / n, c / n
        # El mayor de (a, b) y (-a, -b) en orden lexicográfico es el positivo.
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def coordenadas(self):
        return (self.a, self.b, self.c)

    def evaluar(self, p):
        """Distancia con signo de p a la recta."""
        return self.a * p.x + self.b * p.y + self.c

    def normal(self):
        return Punto(self.a, self.b)

    def direccion(self):
        return Punto(-self.b, self.a)

    def punto(self):
        """Pie del origen sobre la recta."""
        return Punto(-self.a * self.c, -self.b * self.c)


@dataclass(frozen=True)
class Circulo:
    centro: Punto
    radio: object

    def __post_init__(self):
        prec = precision_of(self.radio)
        if not prec.es_finito(self.radio) or not self.radio > 0:
            raise DegenerateInput('el radio debe ser positivo')

    def coordenadas(self):
        return (self.centro.x, self.centro.y, self.radio)


# --- Medidas ---------------------------------------------------------------

def dist(p, q):
    return (q - p).norma()


def signed_area(p, q, r):
    """Área con signo, positiva si p, q, r giran en sentido antihorario."""
    return (q - p).cross(r - p) / 2


def angle(p, q, r, tol=None):
    """Ángulo en el vértice q, en radianes dentro de (0, π)."""
    tol = _tolerancia(tol)
    u, v = p - q, r - q
    prec = precision_of(u, v)
    nu, nv = u.norma(), v.norma()
    if nu <= tol.absoluta(prec) or nv <= tol.absoluta(prec):
        raise DegenerateInput('ángulo con lado nulo')
    return prec.atan2(abs(u.cross(v)), u.dot(v))


def measure(kind, *args, tol=None):
    if kind == 'dist':
        return dist(*args)
    if kind == 'signed_area':
        return signed_area(*args)
    if kind == 'angle':
        return angle(*args, tol=tol)
    if kind == 'radius':
        (circulo,) = args
        return circulo.radio
    raise ValueError(f'medida desconocida: {kind}')


# --- Construcciones ---------------------------------------------------------

def line_through(p, q, tol=None):
    tol = _tolerancia(tol)
    prec = precision_of(p, q)
    if dist(p, q) <= tol.absoluta(prec):
        raise DegenerateInput('recta por dos puntos coincidentes')
    a = p.y - q.y
    b = q.x - p.x
    c = -(a * p.x + b * p.y)
    return Recta.normalizada(a, b, c)


def intersect_ll(l1, l2, tol=None):
    tol = _tolerancia(tol)
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= tol.eps(precision_of(l1, l2)):
        raise ParallelLines('rectas paralelas')
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l1.c * l2.a - l2.c * l1.a) / det
    return Punto(x, y)


def foot(p, recta):
    return p - recta.normal().por(recta.evaluar(p))


def reflect(p, recta):
    return p - recta.normal().por(2 * recta.evaluar(p))


def midpoint(p, q):
    return Punto((p.x + q.x) / 2, (p.y + q.y) / 2)


def parallel_through(p, recta):
    return Recta.normalizada(recta.a, recta.b, -(recta.a * p.x + recta.b * p.y))


def perpendicular_through(p, recta):
    a, b = -recta.b, recta.a
    return Recta.normalizada(a, b, -(a * p.x + b * p.y))


def _ordenar(puntos):
    return sorted(puntos, key=Punto.clave)


def intersect_lc(recta, circulo, tol=None):
    """0, 1 o 2 puntos, ordenados por (x, y)."""
    tol = _tolerancia(tol)
    prec = precision_of(recta, circulo)
    d = recta.evaluar(circulo.centro)
    pie = circulo.centro - recta.normal().por(d)
    holgura = tol.absoluta(prec)
    if abs(abs(d) - circulo.radio) <= holgura:
        return [pie]
    if abs(d) > circulo.radio:
        return []
    h = prec.raiz(circulo.radio ** 2 - d ** 2)
    u = recta.direccion()
    return _ordenar([pie - u.por(h), pie + u.por(h)])


def intersect_cc(c1, c2, tol=None):
    tol = _tolerancia(tol)
    prec = precision_of(c1, c2)
    holgura = tol.absoluta(prec)
    delta = c2.centro - c1.centro
    d = delta.norma()
    r1, r2 = c1.radio, c2.radio
    if d <= holgura:
        if abs(r1 - r2) <= holgura:
            raise CoincidentCircles('círculos coincidentes')
        return []
    u = delta.por(1 / d)
    if abs(d - (r1 + r2)) <= holgura:
        return [c1.centro + u.por(r1)]
    if abs(d - abs(r1 - r2)) <= holgura:
        signo = 1 if r1 > r2 else -1
        return [c1.centro + u.por(signo * r1)]
    if d > r1 + r2 or d < abs(r1 - r2):
        return []
    a = (d ** 2 + r1 ** 2 - r2 ** 2) / (2 * d)
    h = prec.raiz(r1 ** 2 - a ** 2)
    base = c1.centro + u.por(a)
    n = Punto(-u.y, u.x)
    return _ordenar([base - n.por(h), base + n.por(h)])


def circle_through(p, q, r, tol=None):
    """Círculo por tres puntos no alineados."""
    tol = _tolerancia(tol)
    prec = precision_of(p, q, r)
    u, v = q - p, r - p
    den = 2 * u.cross(v)
    if abs(den) <= tol.absoluta(prec) * tol.escala:
        raise DegenerateInput('puntos alineados')
    uu, vv = u.dot(u), v.dot(v)
    cx = (v.y * uu - u.y * vv) / den
    cy = (u.x * vv - v.x * uu) / den
    centro = Punto(p.x + cx, p.y + cy)
    return Circulo(centro, dist(centro, p))


def touch_line(circulo, recta):
    """Punto de contacto de un círculo con una recta tangente."""
    return foot(circulo.centro, recta)


def touch_circles(c1, c2, tol=None):
    """
    Punto de contacto de dos círculos tangentes, tomado sobre c2: el de
    los dos candidatos O2 ± R2·u que mejor dista r1 del centro de c1.
    """
    tol = _tolerancia(tol)
    prec = precision_of(c1, c2)
    delta = c1.centro - c2.centro
    d = delta.norma()
    if d <= tol.absoluta(prec):
        raise DegenerateInput('círculos concéntricos')
    u = delta.por(1 / d)
    candidatos = [c2.centro + u.por(c2.radio), c2.centro - u.por(c2.radio)]
    return min(candidatos, key=lambda t: abs(dist(t, c1.centro) - c1.radio))


def escala_de(*puntos):
    """Diámetro (máxima distancia entre pares) de un conjunto de puntos."""
    mayor = 0
    for i, p in enumerate(puntos):
        for q in puntos[i + 1:]:
            mayor = max(mayor, dist(p, q))
    return mayor
