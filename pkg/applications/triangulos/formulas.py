# applications/triangulos/formulas.py

"""
Fórmulas cerradas de la configuración de Gergonne.

Todo se expresa sobre los lados (LadosTriangulo), no sobre coordenadas, y se
contrasta en los tests contra la medición directa sobre la figura construida.
Las variantes por vértice o lado se obtienen rotando los rótulos con
`LadosTriangulo.rotar`, nunca con copias cíclicas de cada fórmula.

Notación: Q = a²+b²+c²−2ab−2bc−2ca (siempre negativo), K el área (Herón).
"""

from dataclasses import dataclass
from functools import cached_property

from applications.nucleo.excepciones import DegenerateInput
from applications.nucleo.precision import precision_of

_LADOS = ('a', 'b', 'c')


@dataclass(frozen=True)
class LadosTriangulo:
    a: object
    b: object
    c: object

    def __post_init__(self):
        if min(self.a + self.b - self.c, self.b + self.c - self.a, self.c + self.a - self.b) <= 0:
            raise DegenerateInput('los lados no cumplen la desigualdad triangular')

    @classmethod
    def de_triangulo(cls, triangulo):
        return cls(triangulo.a, triangulo.b, triangulo.c)

    @cached_property
    def precision(self):
        return precision_of(self.a, self.b, self.c)

    @cached_property
    def s(self):
        return (self.a + self.b + self.c) / 2

    @cached_property
    def Q(self):
        a, b, c = self.a, self.b, self.c
        return a * a + b * b + c * c - 2 * a * b - 2 * b * c - 2 * c * a

    @cached_property
    def K(self):
        s = self.s
        return self.precision.raiz(s * (s - self.a) * (s - self.b) * (s - self.c))

    def rotar(self, vertice):
        """Rótulos rotados cíclicamente para que `vertice` ocupe el lugar de A."""
        if vertice in _LADOS:
            vertice = vertice.upper()
        if vertice == 'A':
            return self
        if vertice == 'B':
            return LadosTriangulo(self.b, self.c, self.a)
        if vertice == 'C':
            return LadosTriangulo(self.c, self.a, self.b)
        raise ValueError(f'vértice desconocido: {vertice}')

    def terna(self, p, q):
        """
        Longitudes (p, q, r) para los nombres de lado p y q; r es el restante.
        """
        if p == q or p not in _LADOS or q not in _LADOS:
            raise ValueError(f'par de lados inválido: {p}, {q}')
        (r,) = set(_LADOS) - {p, q}
        return getattr(self, p), getattr(self, q), getattr(self, r)


# --- Punto de Gergonne -------------------------------------------------------

def _radicando_radio(t):
    a, b, c = t.a, t.b, t.c
    return a * (b + c - a) ** 3 * (a * (a + b + c) - 2 * (b - c) ** 2)


def spoke_distance(t, vertice='A'):
    """Distancia del vértice al punto de Gergonne."""
    r = t.rotar(vertice)
    return r.precision.raiz(_radicando_radio(r)) / abs(r.Q)


def tripolar_ratio(t, v1, v2):
    """Cociente de distancias de dos vértices al punto de Gergonne."""
    return t.precision.raiz(_radicando_radio(t.rotar(v1)) / _radicando_radio(t.rotar(v2)))


def barycentric_area_ratio(t):
    """[BDC]/[CDA] con D el punto de Gergonne."""
    return (t.c + t.a - t.b) / (t.b + t.c - t.a)


def gergonne_subarea(t, vertice='A'):
    """Área del triángulo formado por el lado opuesto a `vertice` y el punto de Gergonne."""
    r = t.rotar(vertice)
    return (r.a + r.b - r.c) * (r.a - r.b + r.c) / (-r.Q) * r.K


# --- Ceviana de Gergonne ------------------------------------------------------

def trace_lengths(t, vertice='A'):
    """(BE, CE) para la traza E de la ceviana desde `vertice` (rótulos rotados)."""
    r = t.rotar(vertice)
    return r.s - r.b, r.s - r.c


def cevian_division(t, vertice='A'):
    """AD/DE: cómo corta el punto de Gergonne a la ceviana."""
    r = t.rotar(vertice)
    return r.a * (r.s - r.a) / ((r.s - r.b) * (r.s - r.c))


def cevian_length(t, vertice='A'):
    r = t.rotar(vertice)
    return r.precision.raiz((r.s - r.a) * (r.a * r.s - (r.b - r.c) ** 2) / r.a)


# --- Pararradios y paracuerdas ---------------------------------------------------

def pararadius(t, paralelo='a', hasta='b'):
    """
    Segmento desde el punto de Gergonne, paralelo al lado `paralelo`, hasta el
    lado `hasta`. Con los valores por defecto: E = parallel[D,BC] ∩ CA, DE.
    """
    p, q, r = t.terna(paralelo, hasta)
    return -p * (p + q - r) * (q + r - p) / t.Q


def parallel_ratio(t, paralelo='a', hasta='b'):
    """AE/DE para el pararradio anterior (A es el vértice opuesto a `paralelo`)."""
    p, q, r = t.terna(paralelo, hasta)
    return q / ((p + q + r) / 2 - r)


def pararadius_split(t, paralelo='a', hasta='b'):
    """
    (AE, CE): cómo el pararradio divide al lado `hasta`; A opuesto a
    `paralelo`, C el vértice común de ambos lados.
    """
    p, q, r = t.terna(paralelo, hasta)
    ae = 2 * p * q * (p - q - r) / t.Q
    ce = q * (q * q + r * r - p * p - 2 * q * r) / t.Q
    return ae, ce


def parachord(t, lado='a'):
    """Cuerda por el punto de Gergonne paralela al lado dado."""
    r = t.rotar(lado)
    return 2 * r.a ** 2 * (r.a - r.b - r.c) / r.Q


def three_pararadii(t):
    """
    Los tres miembros de 1/AZ+1/PX = 1/BX+1/PY = 1/CY+1/PZ con
    X = parallel[P,AB]∩BC, Y = parallel[P,BC]∩CA, Z = parallel[P,CA]∩AB.
    """
    px = pararadius(t, 'c', 'a')
    py = pararadius(t, 'a', 'b')
    pz = pararadius(t, 'b', 'c')
    az = pararadius_split(t, 'b', 'c')[1]
    bx = pararadius_split(t, 'c', 'a')[1]
    cy = pararadius_split(t, 'a', 'b')[1]
    return 1 / az + 1 / px, 1 / bx + 1 / py, 1 / cy + 1 / pz


# --- Perpendiculares desde el punto de Gergonne -----------------------------------

def apothem(t, lado='a'):
    """Distancia del punto de Gergonne al lado."""
    r = t.rotar(lado)
    return 8 * (r.s - r.b) * (r.s - r.c) * r.K / (r.a * -r.Q)


def trilinear_ratio(t, lado1='a', lado2='b'):
    """Cociente de las apotemas a lado1 y lado2: b(c+a−b)/(a(b+c−a)) para (a, b)."""
    p, q, r = t.terna(lado1, lado2)
    return q * (r + p - q) / (p * (q + r - p))


def gergonne_chord_residual(t, m, n, p, q):
    """
    Cuerda por el punto de Gergonne con extremos en AB (que lo parte en m
    desde A y n hacia B) y en AC (p desde A y q hacia C). Devuelve
    (s−a)/(s−b)·n/m + (s−a)/(s−c)·q/p − 1, nulo para toda cuerda válida.
    """
    s = t.s
    return (s - t.a) / (s - t.b) * n / m + (s - t.a) / (s - t.c) * q / p - 1

