# applications/detectores/hallazgos.py

"""
Relaciones candidatas y la evidencia numérica que las respalda.

Los operandos de una Relacion son textos del lenguaje de construcción
(`dist(A, D)`, `line(B, C)`, `w1`), de modo que una relación se puede volver a
medir en cualquier figura que tenga los mismos nombres y escribir como
`assert` en un script.
"""

from dataclasses import dataclass, field

from applications.nucleo.excepciones import GeometriaError
from applications.nucleo.predicados import (
    residuo_collinear, residuo_concurrent, residuo_congruent, residuo_on, residuo_parallel,
    residuo_perpendicular, residuo_same, residuo_tangent,
)

COLLINEAR = 'collinear'
CONCURRENT = 'concurrent'
PARALLEL = 'parallel'
PERPENDICULAR = 'perpendicular'
COINCIDENCE = 'point-coincidence'
TANGENCY = 'tangency'
CONGRUENT = 'congruent-circles'
ON_CIRCLE = 'on-circle'
EQUALITY = 'equality'
RATIO = 'rational-ratio'
LINEAR = 'linear-integer'
RECIPROCAL = 'reciprocal'
QUADRATIC = 'quadratic'
ANGLE_EQUALITY = 'angle-equality'
ANGLE_SUPPLEMENTARY = 'angle-supplementary'

INCIDENCIAS = (COLLINEAR, CONCURRENT, PARALLEL, PERPENDICULAR, COINCIDENCE, TANGENCY, CONGRUENT, ON_CIRCLE)
METRICAS = (EQUALITY, RATIO, LINEAR, RECIPROCAL, QUADRATIC, ANGLE_EQUALITY, ANGLE_SUPPLEMENTARY)
TIPOS_RELACION = INCIDENCIAS + METRICAS

PREDICADO_DE = {
    COLLINEAR: 'colline', CONCURRENT: 'concur', PARALLEL: 'isparallel', PERPENDICULAR: 'perp',
    COINCIDENCE: 'same', TANGENCY: 'tangent', CONGRUENT: 'congruent', ON_CIRCLE: 'on',
}


def _termino(coeficiente, texto):
    return texto if coeficiente == 1 else f'{coeficiente} * {texto}'


def _lados(coeficientes, textos):
    """Reparte una combinación Σ cᵢ·tᵢ = 0 en `izq = der` con coeficientes positivos."""
    izq = [_termino(c, t) for c, t in zip(coeficientes, textos) if c > 0]
    der = [_termino(-c, t) for c, t in zip(coeficientes, textos) if c < 0]
    return ' + '.join(izq) or '0', ' + '.join(der) or '0'


def _combinacion(valores, coeficientes):
    terminos = [c * v for c, v in zip(coeficientes, valores)]
    escala = sum(abs(t) for t in terminos)
    total = sum(terminos)
    return abs(total) / escala if escala else abs(total)


@dataclass(frozen=True)
class Relacion:
    tipo: str
    operandos: tuple
    coeficientes: tuple = ()

    def firma(self):
        return (self.tipo, self.operandos, self.coeficientes)

    def afirmacion(self):
        """La relación escrita como afirmación del lenguaje."""
        ops = self.operandos
        if self.tipo in PREDICADO_DE:
            return f'{PREDICADO_DE[self.tipo]}({", ".join(ops)})'
        if self.tipo in (EQUALITY, ANGLE_EQUALITY):
            return f'{ops[0]} = {ops[1]}'
        if self.tipo == ANGLE_SUPPLEMENTARY:
            return f'{ops[0]} + {ops[1]} = deg(180)'
        if self.tipo == RATIO:
            p, q = self.coeficientes
            return f'{_termino(q, ops[0])} = {_termino(p, ops[1])}'
        if self.tipo == LINEAR:
            textos = ops
        elif self.tipo == RECIPROCAL:
            textos = [f'1 / {t}' for t in ops]
        else:
            textos = [f'{t}^2' for t in ops]
        izq, der = _lados(self.coeficientes, textos)
        return f'{izq} = {der}'

    def __str__(self):
        return self.afirmacion()

    def residuo(self, rasgos):
        """Residuo relativo en un ConjuntoRasgos; None si falta un operando."""
        try:
            return self._residuo(rasgos)
        except (KeyError, GeometriaError, ZeroDivisionError):
            return None

    def _residuo(self, rasgos):
        ops, tol = self.operandos, rasgos.tol
        if self.tipo == COLLINEAR:
            return residuo_collinear(*(rasgos.puntos[p] for p in ops), tol)
        if self.tipo == CONCURRENT:
            return residuo_concurrent(*(rasgos.rectas[r] for r in ops), tol)
        if self.tipo == PARALLEL:
            return residuo_parallel(*(rasgos.rectas[r] for r in ops), tol)
        if self.tipo == PERPENDICULAR:
            return residuo_perpendicular(*(rasgos.rectas[r] for r in ops), tol)
        if self.tipo == COINCIDENCE:
            return residuo_same(*(rasgos.puntos[p] for p in ops), tol)
        if self.tipo == TANGENCY:
            return residuo_tangent(rasgos.circulos[ops[0]], rasgos.objeto(ops[1]), tol)
        if self.tipo == CONGRUENT:
            return residuo_congruent(*(rasgos.circulos[w] for w in ops), tol)
        if self.tipo == ON_CIRCLE:
            return residuo_on(rasgos.puntos[ops[0]], rasgos.circulos[ops[1]], tol)

        valores = [rasgos.escalares[f] for f in ops]
        pi = rasgos.precision.pi
        if self.tipo == ANGLE_EQUALITY:
            return abs(valores[0] - valores[1]) / pi
        if self.tipo == ANGLE_SUPPLEMENTARY:
            return abs(valores[0] + valores[1] - pi) / pi
        if self.tipo == EQUALITY:
            return _combinacion(valores, (1, -1))
        if self.tipo == RATIO:
            p, q = self.coeficientes
            return _combinacion(valores, (q, -p))
        if self.tipo == RECIPROCAL:
            valores = [1 / v for v in valores]
        elif self.tipo == QUADRATIC:
            valores = [v * v for v in valores]
        return _combinacion(valores, self.coeficientes)

    def cumple(self, rasgos):
        residuo = self.residuo(rasgos)
        return residuo is not None and residuo <= rasgos.tol.eps(rasgos.precision)


@dataclass
class Evidencia:
    muestras: int = 0
    residuo_rapido: float = 0.0
    residuo_confirmacion: float = 0.0
    # Línea de base genérica (elemento Gergonne reemplazado); None si no se pudo medir
    residuo_control: float = None
    # Forma sin restricciones (triángulo perturbado)
    residuo_sin_restricciones: float = None
    trivial: bool = False


@dataclass
class Hallazgo:
    relacion: Relacion
    evidencia: Evidencia = field(default_factory=Evidencia)

    @property
    def trivial(self):
        return self.evidencia.trivial


def _maximo(residuos):
    return max(residuos, default=0.0)


def confirmar(relaciones, rapidos, confirmacion=()):
    """
    Hallazgos de las relaciones que se sostienen en todas las muestras rápidas
    y en todas las de confirmación.
    """
    hallazgos = []
    for relacion in relaciones:
        residuos = []
        for rasgos in list(rapidos) + list(confirmacion):
            residuo = relacion.residuo(rasgos)
            if residuo is None or residuo > rasgos.tol.eps(rasgos.precision):
                break
            residuos.append(residuo)
        else:
            n = len(rapidos)
            hallazgos.append(Hallazgo(relacion, Evidencia(
                muestras=len(residuos),
                residuo_rapido=float(_maximo(residuos[:n])),
                residuo_confirmacion=float(_maximo(residuos[n:])),
            )))
    return hallazgos
