# applications/detectores/incidencias.py

"""
Detección de incidencias: colinealidad, concurrencia, paralelismo,
perpendicularidad, coincidencia de puntos, tangencias, círculos congruentes y
puntos sobre círculos.

Los candidatos se buscan con numpy sobre la primera muestra rápida; después
cada uno se exige en todas las muestras rápidas y en todas las de confirmación.
"""

import logging
from itertools import combinations

import numpy as np

from .hallazgos import (
    COINCIDENCE, COLLINEAR, CONCURRENT, CONGRUENT, ON_CIRCLE, PARALLEL, PERPENDICULAR, TANGENCY,
    Relacion, confirmar,
)
from .rasgos import rasgos_de

logger = logging.getLogger(__name__)


def _ternas(n):
    if n < 3:
        return np.empty((0, 3), dtype=int)
    return np.array(list(combinations(range(n), 3)), dtype=int)


def _pares(n):
    if n < 2:
        return np.empty((0, 2), dtype=int)
    return np.array(list(combinations(range(n), 2)), dtype=int)


def _candidatos(rasgos):
    tol = rasgos.tol
    eps, escala = tol.eps_detect, float(tol.escala)
    holgura = eps * escala

    nombres_p = list(rasgos.puntos)
    P = np.array([[float(p.x), float(p.y)] for p in rasgos.puntos.values()]).reshape(-1, 2)
    nombres_l = list(rasgos.rectas)
    L = np.array([[float(r.a), float(r.b), float(r.c)] for r in rasgos.rectas.values()]).reshape(-1, 3)
    nombres_c = list(rasgos.circulos)
    C = np.array([[float(w.centro.x), float(w.centro.y), float(w.radio)]
                  for w in rasgos.circulos.values()]).reshape(-1, 3)

    # Puntos coincidentes
    coincidentes = set()
    pares = _pares(len(nombres_p))
    if len(pares):
        d = np.linalg.norm(P[pares[:, 0]] - P[pares[:, 1]], axis=1) / escala
        for i, j in pares[d <= eps]:
            coincidentes.add((i, j))
            yield Relacion(COINCIDENCE, (nombres_p[i], nombres_p[j]))

    # Colinealidad
    ternas = _ternas(len(nombres_p))
    if len(ternas):
        u = P[ternas[:, 1]] - P[ternas[:, 0]]
        v = P[ternas[:, 2]] - P[ternas[:, 0]]
        cruz = np.abs(u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]) / escala ** 2
        for i, j, k in ternas[cruz <= eps]:
            if {(i, j), (i, k), (j, k)} & coincidentes:
                continue
            yield Relacion(COLLINEAR, (nombres_p[i], nombres_p[j], nombres_p[k]))

    # Paralelas y perpendiculares
    pares = _pares(len(nombres_l))
    if len(pares):
        l1, l2 = L[pares[:, 0]], L[pares[:, 1]]
        paralelas = np.abs(l1[:, 0] * l2[:, 1] - l2[:, 0] * l1[:, 1])
        perpendiculares = np.abs(l1[:, 0] * l2[:, 0] + l1[:, 1] * l2[:, 1])
        for i, j in pares[paralelas <= eps]:
            yield Relacion(PARALLEL, (nombres_l[i], nombres_l[j]))
        for i, j in pares[perpendiculares <= eps]:
            yield Relacion(PERPENDICULAR, (nombres_l[i], nombres_l[j]))

    # Concurrencia fuera de los puntos con nombre
    ternas = _ternas(len(nombres_l))
    if len(ternas) and len(nombres_p):
        a, b, c = L[ternas[:, 0]], L[ternas[:, 1]], L[ternas[:, 2]]
        det = np.abs(np.einsum('ij,ij->i', a, np.cross(b, c))) / escala
        no_paralelas = np.min(np.stack([
            np.abs(a[:, 0] * b[:, 1] - b[:, 0] * a[:, 1]),
            np.abs(a[:, 0] * c[:, 1] - c[:, 0] * a[:, 1]),
            np.abs(b[:, 0] * c[:, 1] - c[:, 0] * b[:, 1]),
        ]), axis=0) > eps
        sobre = np.abs(L[:, :2] @ P.T + L[:, 2:3]) <= holgura
        con_punto = (sobre[ternas[:, 0]] & sobre[ternas[:, 1]] & sobre[ternas[:, 2]]).any(axis=1)
        for i, j, k in ternas[(det <= eps) & no_paralelas & ~con_punto]:
            yield Relacion(CONCURRENT, (nombres_l[i], nombres_l[j], nombres_l[k]))

    if not nombres_c:
        return
    # Tangencias con rectas
    if len(nombres_l):
        distancia = np.abs(L[:, :2] @ C[:, :2].T + L[:, 2:3])      # (rectas, círculos)
        tangentes = np.abs(distancia - C[:, 2][None, :]) / escala <= eps
        for i, j in zip(*np.nonzero(tangentes)):
            yield Relacion(TANGENCY, (nombres_c[j], nombres_l[i]))
    # Entre círculos
    pares = _pares(len(nombres_c))
    if len(pares):
        w1, w2 = C[pares[:, 0]], C[pares[:, 1]]
        d = np.linalg.norm(w1[:, :2] - w2[:, :2], axis=1)
        externa = np.abs(d - (w1[:, 2] + w2[:, 2]))
        interna = np.abs(d - np.abs(w1[:, 2] - w2[:, 2]))
        for i, j in pares[(np.minimum(externa, interna) / escala <= eps) & (d / escala > eps)]:
            yield Relacion(TANGENCY, (nombres_c[i], nombres_c[j]))
        for i, j in pares[np.abs(w1[:, 2] - w2[:, 2]) / escala <= eps]:
            yield Relacion(CONGRUENT, (nombres_c[i], nombres_c[j]))
    # Puntos sobre círculos
    if len(nombres_p):
        d = np.linalg.norm(P[:, None, :] - C[None, :, :2], axis=2)    # (puntos, círculos)
        for i, j in zip(*np.nonzero(np.abs(d - C[None, :, 2]) / escala <= eps)):
            yield Relacion(ON_CIRCLE, (nombres_p[i], nombres_c[j]))


def detect_incidence(figuras, confirmacion=(), foco=None):
    """
    Incidencias que se cumplen en todas las figuras rápidas y en todas las de
    confirmación. Las figuras pueden ser Entornos o ConjuntoRasgos.
    ValueError si no hay figuras rápidas.
    """
    rapidos = rasgos_de(figuras, foco=foco)
    if not rapidos:
        raise ValueError('sin figuras de detección')
    confirmacion = rasgos_de(confirmacion, referencia=rapidos[0])
    candidatos = list(dict.fromkeys(_candidatos(rapidos[0])))
    hallazgos = confirmar(candidatos, rapidos, confirmacion)
    logger.debug('incidencias: %d candidatas, %d confirmadas', len(candidatos), len(hallazgos))
    return hallazgos
