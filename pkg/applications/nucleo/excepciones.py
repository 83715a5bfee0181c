# applications/nucleo/excepciones.py

"""Errores del motor geométrico. Todos heredan de GeometriaError."""


class GeometriaError(Exception):
    """Raíz de los errores de dominio."""


class DegenerateInput(GeometriaError):
    """Entrada degenerada: puntos coincidentes, triángulo aplastado, valores no finitos."""


class ParallelLines(GeometriaError):
    pass


class CoincidentCircles(GeometriaError):
    pass


class SolverFailure(GeometriaError):
    """Una solución de tangencia no alcanzó el residuo exigido."""


class AmbiguousSelection(GeometriaError):
    """El selector dejó cero o más de un candidato."""

    def __init__(self, mensaje, candidatos=0):
        super().__init__(mensaje)
        self.candidatos = candidatos


class UnsupportedProblem(GeometriaError):
    """Familia de tangencia fuera de las soportadas (por ejemplo CCC)."""


class Infeasible(GeometriaError):
    """El muestreador no encontró triángulos que cumplan las restricciones."""


class OverConstrained(GeometriaError):
    pass


class ConstraintViolation(GeometriaError):
    """El triángulo dado no satisface las restricciones del script."""
