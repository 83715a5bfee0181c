# applications/nucleo/precision.py

"""
Precisiones de trabajo del motor.

- FAST: float nativo con el módulo `math`; es la precisión de detección.
- CONFIRM: contexto propio de `mpmath` (no el global `mp`) con
  GEX_CONFIRM_DPS dígitos; es la precisión con la que se reconfirma todo.

Los objetos geométricos no guardan su precisión: se deduce del tipo de sus
coordenadas con `precision_of`. Un float (o int) es FAST; cualquier otro
número es un mpf del contexto de confirmación.
"""

import math
from dataclasses import dataclass, field, replace

from mpmath.ctx_mp import MPContext

from .conf import settings
from .excepciones import DegenerateInput


class Precision:
    nombre = ''

    def num(self, valor):
        raise NotImplementedError

    def es_finito(self, x):
        raise NotImplementedError

    def raiz(self, x, holgura=0):
        """
        Raíz cuadrada. Un negativo cuyo valor absoluto no supera `holgura`
        se trata como cero (ruido de redondeo); uno mayor es un error.
        """
        if x < 0:
            if -x <= holgura:
                return self.num(0)
            raise DegenerateInput(f'raíz de un valor negativo ({float(x):.3e})')
        return self._sqrt(x)

    def _sqrt(self, x):
        raise NotImplementedError

    def potencia(self, x, y):
        if x < 0 and y != int(y):
            raise DegenerateInput('potencia fraccionaria de un negativo')
        if x == 0 and y < 0:
            raise DegenerateInput('potencia negativa de cero')
        return x ** y

    def acos(self, x):
        # Recorta el ruido fuera de [-1, 1]
        if x > 1:
            x = self.num(1)
        elif x < -1:
            x = self.num(-1)
        return self._acos(x)

    def __repr__(self):
        return f'<Precision {self.nombre}>'


class PrecisionRapida(Precision):
    nombre = 'fast'

    def num(self, valor):
        return float(valor)

    def es_finito(self, x):
        return math.isfinite(x)

    def _sqrt(self, x):
        return math.sqrt(x)

    def _acos(self, x):
        return math.acos(x)

    def atan2(self, y, x):
        return math.atan2(y, x)

    def cos(self, x):
        return math.cos(x)

    def sin(self, x):
        return math.sin(x)

    def hypot(self, x, y):
        return math.hypot(x, y)

    @property
    def pi(self):
        return math.pi

    def eps(self):
        return settings.GEX_EPS_DETECT


class PrecisionConfirmacion(Precision):
    nombre = 'confirm'

    def __init__(self, dps):
        self.ctx = MPContext()
        self.ctx.dps = dps

    def num(self, valor):
        # Los str se leen con todos los dígitos; los float se convierten exactos.
        return self.ctx.mpf(valor)

    def es_finito(self, x):
        return not (self.ctx.isinf(x) or self.ctx.isnan(x))

    def _sqrt(self, x):
        return self.ctx.sqrt(x)

    def _acos(self, x):
        return self.ctx.acos(x)

    def atan2(self, y, x):
        return self.ctx.atan2(y, x)

    def cos(self, x):
        return self.ctx.cos(x)

    def sin(self, x):
        return self.ctx.sin(x)

    def hypot(self, x, y):
        return self.ctx.hypot(x, y)

    @property
    def pi(self):
        return +self.ctx.pi

    def eps(self):
        return settings.GEX_EPS_CONFIRM


FAST = PrecisionRapida()
CONFIRM = PrecisionConfirmacion(settings.GEX_CONFIRM_DPS)

PRECISIONES = {FAST.nombre: FAST, CONFIRM.nombre: CONFIRM}


def _valores_planos(valores):
    for v in valores:
        coords = getattr(v, 'coordenadas', None)
        if coords is not None:
            yield from coords()
        elif isinstance(v, (list, tuple)):
            yield from _valores_planos(v)
        else:
            yield v


def precision_of(*valores):
    """Precisión de un conjunto de números u objetos geométricos."""
    for v in _valores_planos(valores):
        if not isinstance(v, (float, int)):
            return CONFIRM
    return FAST


@dataclass(frozen=True)
class Tolerancia:
    """
    Tolerancias relativas del motor. `escala` es el diámetro de la figura
    (máxima distancia entre vértices) y relativiza todos los residuos.
    """
    eps_detect: float = field(default_factory=lambda: settings.GEX_EPS_DETECT)
    eps_confirm: float = field(default_factory=lambda: settings.GEX_EPS_CONFIRM)
    escala: object = 1.0

    def __post_init__(self):
        if not (0 < self.eps_confirm < self.eps_detect < 1):
            raise ValueError('se requiere 0 < eps_confirm < eps_detect < 1')
        if not self.escala > 0:
            raise ValueError('la escala debe ser positiva')

    def eps(self, precision):
        return self.eps_detect if precision is FAST else self.eps_confirm

    def absoluta(self, precision):
        """Tolerancia en unidades de longitud."""
        return self.eps(precision) * self.escala

    def con_escala(self, escala):
        return replace(self, escala=escala)
