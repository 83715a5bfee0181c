# applications/apolonio/solver.py

"""
Problema de Apolonio para las familias PPP, PPL, PPC, LLL, LLP, LLC y CLP.

Cada familia se reduce a buscar el centro sobre una recta conocida (bisectriz,
mediatriz o eje radical) donde la condición restante es una cuadrática en el
parámetro de la recta. Las ramas (bisectriz interna o externa, tangencia
interna o externa) se recorren con combinaciones de signos, y cada raíz real
da un candidato. Todo candidato se verifica contra sus ecuaciones; si el
residuo no alcanza, se pule con Newton y si aun así no alcanza se informa
SolverFailure.
"""

import logging
from dataclasses import dataclass

from applications.nucleo.excepciones import (
    AmbiguousSelection, DegenerateInput, ParallelLines, SolverFailure, UnsupportedProblem,
)
from applications.nucleo.precision import Tolerancia, precision_of
from applications.nucleo.primitivas import (
    Circulo, Punto, Recta, circle_through, dist, intersect_ll, midpoint, touch_circles,
    touch_line,
)

logger = logging.getLogger(__name__)

_MAX_ITER_NEWTON = 30

# Nombre canónico de cada familia a partir de las letras ordenadas P < L < C.
_FAMILIAS = {'PPP': 'PPP', 'PPL': 'PPL', 'PPC': 'PPC', 'LLL': 'LLL',
             'PLL': 'LLP', 'LLC': 'LLC', 'PLC': 'CLP'}


@dataclass(frozen=True)
class ProblemaTangencia:
    """
    Tres restricciones (Punto, Recta o Circulo). `pistas` es opcional y, por
    restricción, vale 'internal' o 'external' para círculos, o +1/-1 (lado del
    centro) para rectas.
    """
    restricciones: tuple
    pistas: tuple = (None, None, None)

    def __post_init__(self):
        if len(self.restricciones) != 3:
            raise DegenerateInput('un problema de tangencia lleva exactamente tres restricciones')
        for i, r in enumerate(self.restricciones):
            for otra in self.restricciones[i + 1:]:
                if r == otra:
                    raise DegenerateInput('restricción repetida')

    @property
    def familia(self):
        letras = sorted(_letra(r) for r in self.restricciones)
        orden = {'P': 0, 'L': 1, 'C': 2}
        clave = ''.join(sorted(letras, key=orden.get))
        return _FAMILIAS.get(clave, clave)


@dataclass(frozen=True)
class SolucionTangencia:
    circulo: Circulo
    contactos: tuple      # un punto por cada Recta/Circulo, en el orden del problema
    pasa_por: tuple       # los Puntos del problema

    @property
    def centro(self):
        return self.circulo.centro

    @property
    def radio(self):
        return self.circulo.radio


def _letra(restriccion):
    if isinstance(restriccion, Punto):
        return 'P'
    if isinstance(restriccion, Recta):
        return 'L'
    if isinstance(restriccion, Circulo):
        return 'C'
    raise DegenerateInput(f'restricción no geométrica: {restriccion!r}')


# --- Álgebra auxiliar ------------------------------------------------------------

def _raices(A, B, C, prec, eps):
    """Raíces reales de A t² + B t + C = 0; discriminantes casi nulos dan una raíz doble."""
    escala = max(abs(A), abs(B), abs(C))
    if escala == 0:
        return []
    if abs(A) <= eps * escala:
        if abs(B) <= eps * escala:
            return []
        return [-C / B]
    disc = B * B - 4 * A * C
    holgura = eps * (B * B + abs(4 * A * C))
    if abs(disc) <= holgura:
        return [-B / (2 * A)]
    if disc < 0:
        return []
    raiz = prec.raiz(disc)
    q = -(B + raiz) / 2 if B >= 0 else -(B - raiz) / 2
    return [q / A, C / q]


def _recta_parametrica(recta):
    return recta.punto(), recta.direccion()


def _combinar(l1, l2, signo, eps):
    """Recta L1 − signo·L2 = 0 (bisectriz, o paralela media si L1 ∥ L2)."""
    a = l1.a - signo * l2.a
    b = l1.b - signo * l2.b
    if abs(a) + abs(b) <= eps:
        raise DegenerateInput('combinación sin dirección')
    c = l1.c - signo * l2.c
    return Recta.normalizada(a, b, c)


def _bisectrices(l1, l2, eps):
    bisectrices = []
    for signo in (1, -1):
        try:
            bisectrices.append(_combinar(l1, l2, signo, eps))
        except DegenerateInput:
            # Normal nula: las rectas son paralelas y esta combinación no existe.
            continue
    return bisectrices


# --- Familias ---------------------------------------------------------------------

def _ppp(p1, p2, p3, tol):
    try:
        circulo = circle_through(p1, p2, p3, tol)
    except DegenerateInput:
        return []
    return [(circulo.centro, circulo.radio)]


def _mediatriz(p1, p2):
    u = p2 - p1
    h = u.norma() / 2
    n = Punto(-u.y, u.x).por(1 / (2 * h))
    return midpoint(p1, p2), n, h


def _ppl(p1, p2, recta, prec, eps):
    m, n, h = _mediatriz(p1, p2)
    alfa, beta = recta.evaluar(m), recta.normal().dot(n)
    candidatos = []
    for t in _raices(beta * beta - 1, 2 * alfa * beta, alfa * alfa - h * h, prec, eps):
        centro = m + n.por(t)
        candidatos.append((centro, prec.raiz(h * h + t * t)))
    return candidatos


def _ppc(p1, p2, circulo, prec, eps):
    m, n, h = _mediatriz(p1, p2)
    w = m - circulo.centro
    R = circulo.radio
    p = w.dot(w) - R * R - h * h
    q = 2 * n.dot(w)
    candidatos = []
    for t in _raices(q * q - 4 * R * R, 2 * p * q, p * p - 4 * R * R * h * h, prec, eps):
        centro = m + n.por(t)
        candidatos.append((centro, prec.raiz(h * h + t * t)))
    return candidatos


def _lll(l1, l2, l3, tol, eps):
    candidatos = []
    for b12 in _bisectrices(l1, l2, eps):
        for b13 in _bisectrices(l1, l3, eps):
            try:
                centro = intersect_ll(b12, b13, tol)
            except ParallelLines:
                continue
            candidatos.append((centro, abs(l1.evaluar(centro))))
    return candidatos


def _sobre_recta_con_distancia(soporte, recta, punto, prec, eps):
    """Centros X sobre `soporte` con |X − punto| = |recta(X)|."""
    p0, d = _recta_parametrica(soporte)
    alfa, beta = recta.evaluar(p0), recta.normal().dot(d)
    w = p0 - punto
    A = 1 - beta * beta
    B = 2 * (w.dot(d) - alfa * beta)
    C = w.dot(w) - alfa * alfa
    return [(p0 + d.por(t), abs(alfa + beta * t)) for t in _raices(A, B, C, prec, eps)]


def _llp(l1, l2, punto, prec, eps):
    candidatos = []
    for bisectriz in _bisectrices(l1, l2, eps):
        candidatos.extend(_sobre_recta_con_distancia(bisectriz, l1, punto, prec, eps))
    return candidatos


def _llc(l1, l2, circulo, prec, eps):
    R = circulo.radio
    candidatos = []
    for bisectriz in _bisectrices(l1, l2, eps):
        p0, d = _recta_parametrica(bisectriz)
        alfa, beta = l1.evaluar(p0), l1.normal().dot(d)
        w = p0 - circulo.centro
        for kappa in (1, -1):
            # |X − O|² = R² + 2κR·ℓ + ℓ², con ℓ = L1(X) = α + βt
            A = 1 - beta * beta
            B = 2 * (w.dot(d) - kappa * R * beta - alfa * beta)
            C = w.dot(w) - R * R - 2 * kappa * R * alfa - alfa * alfa
            for t in _raices(A, B, C, prec, eps):
                candidatos.append((p0 + d.por(t), abs(alfa + beta * t)))
    return candidatos


def _clp(circulo, recta, punto, prec, eps):
    O, R = circulo.centro, circulo.radio
    candidatos = []
    for kappa in (1, -1):
        # |X−O|² − |X−P|² = R² + 2κR·L(X): recta en la que debe estar el centro.
        a = 2 * (punto.x - O.x) - 2 * kappa * R * recta.a
        b = 2 * (punto.y - O.y) - 2 * kappa * R * recta.b
        c = O.dot(O) - punto.dot(punto) - R * R - 2 * kappa * R * recta.c
        try:
            soporte = Recta.normalizada(a, b, c)
        except DegenerateInput:
            continue
        candidatos.extend(_sobre_recta_con_distancia(soporte, recta, punto, prec, eps))
    return candidatos


# --- Verificación y pulido --------------------------------------------------------

def _ecuaciones(restricciones, x, y, rho):
    """Residuos (con signo) y jacobiano de las tres condiciones en (x, y, ρ)."""
    X = Punto(x, y)
    F, J = [], []
    for r in restricciones:
        if isinstance(r, Punto):
            d = dist(X, r)
            F.append(d - rho)
            J.append(((x - r.x) / d, (y - r.y) / d, -1))
        elif isinstance(r, Recta):
            v = r.evaluar(X)
            signo = 1 if v >= 0 else -1
            F.append(signo * v - rho)
            J.append((signo * r.a, signo * r.b, -1))
        else:
            d = dist(X, r.centro)
            externo = d - (r.radio + rho)
            diferencia = r.radio - rho
            signo = 1 if diferencia >= 0 else -1
            interno = d - signo * diferencia
            gx, gy = (x - r.centro.x) / d, (y - r.centro.y) / d
            if abs(externo) <= abs(interno):
                F.append(externo)
                J.append((gx, gy, -1))
            else:
                F.append(interno)
                J.append((gx, gy, signo))
    return F, J


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _newton(restricciones, centro, rho, objetivo):
    x, y = centro.x, centro.y
    for _ in range(_MAX_ITER_NEWTON):
        F, J = _ecuaciones(restricciones, x, y, rho)
        if max(abs(f) for f in F) <= objetivo:
            return Punto(x, y), rho
        det = _det3(J)
        if det == 0:
            break
        paso = []
        for col in range(3):
            m = [list(fila) for fila in J]
            for fila in range(3):
                m[fila][col] = -F[fila]
            paso.append(_det3(m) / det)
        x, y, rho = x + paso[0], y + paso[1], rho + paso[2]
        if not rho > 0:
            break
    raise SolverFailure('Newton no alcanzó el residuo exigido')


def _residuo(restricciones, centro, rho):
    F, _ = _ecuaciones(restricciones, centro.x, centro.y, rho)
    return max(abs(f) for f in F)


def _cumple_pistas(problema, circulo):
    for r, pista in zip(problema.restricciones, problema.pistas):
        if pista is None:
            continue
        if isinstance(r, Recta):
            if (r.evaluar(circulo.centro) > 0) != (pista > 0):
                return False
        elif isinstance(r, Circulo):
            if tangencia_interna(circulo, r) != (pista == 'internal'):
                return False
    return True


def _contactos(restricciones, circulo, tol):
    contactos = []
    for r in restricciones:
        if isinstance(r, Recta):
            contactos.append(touch_line(circulo, r))
        elif isinstance(r, Circulo):
            contactos.append(touch_circles(circulo, r, tol))
    return tuple(contactos)


def _sin_duplicados(soluciones, holgura):
    unicas = []
    for sol in soluciones:
        if any(
            abs(sol.radio - otra.radio) <= holgura and dist(sol.centro, otra.centro) <= holgura
            for otra in unicas
        ):
            continue
        unicas.append(sol)
    return unicas


def solve(problema, tol=None):
    """
    Todas las soluciones reales, ordenadas por (radio, centro.x, centro.y).
    Acepta un ProblemaTangencia o directamente la terna de restricciones.
    """
    if not isinstance(problema, ProblemaTangencia):
        problema = ProblemaTangencia(tuple(problema))
    tol = tol or Tolerancia()
    restricciones = problema.restricciones
    prec = precision_of(*restricciones)
    eps = tol.eps(prec)
    holgura = tol.absoluta(prec)

    puntos = [r for r in restricciones if isinstance(r, Punto)]
    rectas = [r for r in restricciones if isinstance(r, Recta)]
    circulos = [r for r in restricciones if isinstance(r, Circulo)]
    familia = problema.familia

    if familia == 'PPP':
        candidatos = _ppp(*puntos, tol)
    elif familia == 'PPL':
        candidatos = _ppl(*puntos, *rectas, prec, eps)
    elif familia == 'PPC':
        candidatos = _ppc(*puntos, *circulos, prec, eps)
    elif familia == 'LLL':
        candidatos = _lll(*rectas, tol, eps)
    elif familia == 'LLP':
        candidatos = _llp(*rectas, *puntos, prec, eps)
    elif familia == 'LLC':
        candidatos = _llc(*rectas, *circulos, prec, eps)
    elif familia == 'CLP':
        candidatos = _clp(*circulos, *rectas, *puntos, prec, eps)
    else:
        raise UnsupportedProblem(f'familia {familia} no soportada')

    soluciones = []
    for centro, rho in candidatos:
        if not rho > holgura:
            continue
        if _residuo(restricciones, centro, rho) > holgura:
            logger.debug('Puliendo solución %s con Newton', familia)
            try:
                centro, rho = _newton(restricciones, centro, rho, holgura)
            except SolverFailure:
                logger.warning('Newton no alcanzó el residuo al pulir una solución %s', familia)
                raise
        circulo = Circulo(centro, rho)
        if not _cumple_pistas(problema, circulo):
            continue
        soluciones.append(SolucionTangencia(
            circulo=circulo,
            contactos=_contactos(restricciones, circulo, tol),
            pasa_por=tuple(puntos),
        ))
    soluciones.sort(key=lambda s: (s.radio, s.centro.x, s.centro.y))
    return _sin_duplicados(soluciones, holgura * 1000)


# --- Selección ---------------------------------------------------------------

def select(soluciones, predicado):
    """La única solución que cumple el predicado; cualquier otro caso es ambiguo."""
    elegidas = [s for s in soluciones if predicado(s)]
    if len(elegidas) != 1:
        raise AmbiguousSelection(
            f'el selector dejó {len(elegidas)} soluciones de {len(soluciones)}', len(elegidas)
        )
    return elegidas[0]


def _centro(objeto):
    if isinstance(objeto, SolucionTangencia):
        return objeto.centro
    if isinstance(objeto, Circulo):
        return objeto.centro
    return objeto


def _circulo(objeto):
    return objeto.circulo if isinstance(objeto, SolucionTangencia) else objeto


def dentro_del_triangulo(p, q, r):
    def predicado(objeto):
        x = _centro(objeto)
        s1 = (q - p).cross(x - p)
        s2 = (r - q).cross(x - q)
        s3 = (p - r).cross(x - r)
        return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)
    return predicado


def dentro_del_angulo(vertice, p, q):
    """Centro estrictamente dentro del ángulo pVq."""
    def predicado(objeto):
        x = _centro(objeto) - vertice
        u, v = p - vertice, q - vertice
        orientacion = u.cross(v)
        return u.cross(x) * orientacion > 0 and x.cross(v) * orientacion > 0
    return predicado


def tangencia_interna(circulo, otro):
    d = dist(circulo.centro, otro.centro)
    return abs(d - abs(circulo.radio - otro.radio)) < abs(d - (circulo.radio + otro.radio))


def interna_a(otro):
    return lambda objeto: tangencia_interna(_circulo(objeto), otro)


def externa_a(otro):
    return lambda objeto: not tangencia_interna(_circulo(objeto), otro)
