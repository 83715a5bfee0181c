# applications/detectores/relaciones.py

"""
Minería de relaciones métricas entre rasgos de la misma dimensión.

La búsqueda de candidatos se hace sobre la primera muestra rápida; cada
candidato se exige después en todas las muestras rápidas (vectorizado) y por
último en las de confirmación con `confirmar`.

Tipos buscados:
- igualdad y razón racional p/q (|p|, |q| ≤ GEX_MAX_COEFFICIENT)
- combinación lineal entera de 3 términos
- suma de pares: fᵢ + fⱼ = fₖ + fₗ y fᵢ² + fⱼ² = fₖ² + fₗ²
- cuadrática fᵢ² + fⱼ² = fₖ² y recíproca 1/fᵢ + 1/fⱼ = 1/fₖ
- ángulos iguales y suplementarios
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from applications.nucleo.conf import settings

from .hallazgos import (
    ANGLE_EQUALITY, ANGLE_SUPPLEMENTARY, EQUALITY, LINEAR, QUADRATIC, RATIO, RECIPROCAL,
    Relacion, confirmar,
)
from .rasgos import ANGULO, AREA, LONGITUD, rasgos_de

logger = logging.getLogger(__name__)


def _matriz(rapidos, dimension):
    """Nombres presentes en todas las muestras y la matriz muestras × rasgos."""
    nombres = [n for n in rapidos[0].de_dimension(dimension)
               if all(n in r.escalares for r in rapidos)]
    M = np.array([[float(r.escalares[n]) for n in nombres] for r in rapidos], dtype=float)
    return nombres, M.reshape(len(rapidos), len(nombres))


def _residuo_combinacion(V, coeficientes):
    """Residuo relativo de Σ cᵢ·vᵢ = 0 por fila; V es (muestras × términos)."""
    terminos = V * np.asarray(coeficientes, dtype=float)
    escala = np.abs(terminos).sum(axis=1)
    return np.abs(terminos.sum(axis=1)) / np.where(escala > 0, escala, 1.0)


def _normalizar(coeficientes):
    divisor = 0
    for c in coeficientes:
        divisor = gcd(divisor, int(c))
    coeficientes = [int(c) // divisor for c in coeficientes]
    if coeficientes[0] < 0:
        coeficientes = [-c for c in coeficientes]
    return tuple(coeficientes)


class _Minero:

    def __init__(self, rapidos, max_coef):
        self.rapidos = rapidos
        self.max_coef = max_coef
        self.eps = rapidos[0].tol.eps_detect
        self.definiciones = rapidos[0].definiciones
        self.relaciones = {}

    def agregar(self, relacion):
        self.relaciones.setdefault(relacion.firma(), relacion)

    def sostiene(self, V, coeficientes):
        return bool(np.all(_residuo_combinacion(V, coeficientes) <= self.eps))

    # --- ángulos ---------------------------------------------------------------------

    def _comparten_brazo(self, f1, f2):
        (_, (x1, v1, y1)), (_, (x2, v2, y2)) = self.definiciones[f1], self.definiciones[f2]
        return v1 == v2 and bool({x1, y1} & {x2, y2})

    def angulos(self, nombres, M):
        pi = np.pi
        for i, j in combinations(range(len(nombres)), 2):
            if self._comparten_brazo(nombres[i], nombres[j]):
                continue
            ti, tj = M[:, i], M[:, j]
            if np.all(np.abs(ti - tj) / pi <= self.eps):
                self.agregar(Relacion(ANGLE_EQUALITY, (nombres[i], nombres[j])))
            elif np.all(np.abs(ti + tj - pi) / pi <= self.eps):
                self.agregar(Relacion(ANGLE_SUPPLEMENTARY, (nombres[i], nombres[j])))

    # --- dos términos ------------------------------------------------------------------

    def razones(self, nombres, M):
        """Igualdades y razones racionales; devuelve los pares proporcionales e iguales."""
        proporcionales, iguales = set(), set()
        f = M[0]
        for i, j in combinations(range(len(nombres)), 2):
            razon = Fraction(float(f[i] / f[j])).limit_denominator(self.max_coef)
            p, q = razon.numerator, razon.denominator
            if not 0 < p <= self.max_coef:
                continue
            if not self.sostiene(M[:, [i, j]], (q, -p)):
                continue
            proporcionales.add((i, j))
            operandos = (nombres[i], nombres[j])
            if p == q:
                iguales.add((i, j))
                self.agregar(Relacion(EQUALITY, operandos))
            else:
                self.agregar(Relacion(RATIO, operandos, (p, q)))
        return proporcionales, iguales

    # --- tres términos -----------------------------------------------------------------

    def lineales(self, nombres, M, proporcionales):
        n, C = len(nombres), self.max_coef
        if n < 3:
            return
        f = M[0]
        rango = np.arange(1, C + 1)
        c1 = np.repeat(rango, 2 * C)
        c2 = np.tile(np.concatenate([rango, -rango]), C)
        for i, j in combinations(range(n), 2):
            if (i, j) in proporcionales:
                continue
            ks = np.arange(j + 1, n)
            if not len(ks):
                continue
            parcial = c1 * f[i] + c2 * f[j]
            fk = f[ks]
            c3 = np.rint(-parcial[:, None] / fk[None, :])
            escala = np.abs(c1 * f[i])[:, None] + np.abs(c2 * f[j])[:, None] + np.abs(c3 * fk[None, :])
            residuo = np.abs(parcial[:, None] + c3 * fk[None, :]) / escala
            validos = (np.abs(c3) <= C) & (c3 != 0) & (residuo <= self.eps)
            for fila, col in zip(*np.nonzero(validos)):
                k = int(ks[col])
                if (i, k) in proporcionales or (j, k) in proporcionales:
                    continue
                coeficientes = _normalizar((c1[fila], c2[fila], c3[fila, col]))
                if self.sostiene(M[:, [i, j, k]], coeficientes):
                    self.agregar(Relacion(LINEAR, (nombres[i], nombres[j], nombres[k]), coeficientes))

    def tercer_termino(self, nombres, M, tipo, transformar):
        """fᵢ² + fⱼ² = fₖ² (cuadrática) o 1/fᵢ + 1/fⱼ = 1/fₖ (recíproca)."""
        n = len(nombres)
        if n < 3:
            return
        T = transformar(M)
        t = T[0]
        pares = np.array(list(combinations(range(n), 2)))
        sumas = t[pares[:, 0]] + t[pares[:, 1]]
        residuo = np.abs(sumas[:, None] - t[None, :]) / (sumas[:, None] + t[None, :])
        for fila, k in zip(*np.nonzero(residuo <= self.eps)):
            i, j = (int(x) for x in pares[fila])
            if k in (i, j):
                continue
            if self.sostiene(T[:, [i, j, k]], (1, 1, -1)):
                self.agregar(Relacion(tipo, (nombres[i], nombres[j], nombres[k]), (1, 1, -1)))

    # --- cuatro términos ---------------------------------------------------------------

    def sumas_de_pares(self, nombres, M, tipo, transformar, iguales):
        """fᵢ + fⱼ = fₖ + fₗ con pares disjuntos, salvo que resulte de igualdades término a término."""
        n = len(nombres)
        if n < 4:
            return
        T = transformar(M)
        t = T[0]
        pares = np.array(list(combinations(range(n), 2)))
        sumas = t[pares[:, 0]] + t[pares[:, 1]]
        orden = np.argsort(sumas, kind='stable')
        for posicion, p in enumerate(orden):
            for q in orden[posicion + 1:]:
                if sumas[q] - sumas[p] > self.eps * (sumas[q] + sumas[p]):
                    break
                (i, j), (k, l) = sorted([tuple(int(x) for x in pares[p]), tuple(int(x) for x in pares[q])])
                if {i, j} & {k, l}:
                    continue
                if self._por_igualdades(i, j, k, l, iguales):
                    continue
                if self.sostiene(T[:, [i, j, k, l]], (1, 1, -1, -1)):
                    self.agregar(Relacion(tipo, tuple(nombres[x] for x in (i, j, k, l)), (1, 1, -1, -1)))

    @staticmethod
    def _por_igualdades(i, j, k, l, iguales):
        def igual(x, y):
            return (min(x, y), max(x, y)) in iguales
        return (igual(i, k) and igual(j, l)) or (igual(i, l) and igual(j, k))

    # --- por dimensión -----------------------------------------------------------------

    def minar(self):
        for dimension in (LONGITUD, AREA, ANGULO):
            nombres, M = _matriz(self.rapidos, dimension)
            if len(nombres) < 2:
                continue
            if dimension == ANGULO:
                self.angulos(nombres, M)
                continue
            proporcionales, iguales = self.razones(nombres, M)
            self.lineales(nombres, M, proporcionales)
            if dimension == LONGITUD:
                self.tercer_termino(nombres, M, QUADRATIC, np.square)
                self.tercer_termino(nombres, M, RECIPROCAL, np.reciprocal)
                self.sumas_de_pares(nombres, M, LINEAR, lambda x: x, iguales)
                self.sumas_de_pares(nombres, M, QUADRATIC, np.square, iguales)
        return list(self.relaciones.values())


def mine_relations(figuras, confirmacion=(), max_coef=None, foco=None):
    """
    Relaciones métricas que se sostienen en todas las figuras rápidas y en
    todas las de confirmación. Las figuras pueden ser Entornos o ConjuntoRasgos.
    """
    rapidos = rasgos_de(figuras, foco=foco)
    if not rapidos:
        raise ValueError('sin figuras de detección')
    max_coef = settings.GEX_MAX_COEFFICIENT if max_coef is None else max_coef
    confirmacion = rasgos_de(confirmacion, referencia=rapidos[0])
    candidatos = _Minero(rapidos, max_coef).minar()
    hallazgos = confirmar(candidatos, rapidos, confirmacion)
    logger.debug('relaciones: %d candidatas, %d confirmadas', len(candidatos), len(hallazgos))
    return hallazgos
