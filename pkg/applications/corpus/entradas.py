# applications/corpus/entradas.py

"""
Entradas del corpus de propiedades.

Cada entrada es un script `.geo` (figura, restricciones de forma y
afirmaciones) más su ficha en `manifest.json`: la relación esperada, el estado
(fórmula cerrada, incidencia, relación métrica o propiedad con restricciones)
y una nota de procedencia en texto libre.
"""

import json
from dataclasses import dataclass
from pathlib import Path

import jsonschema

from applications.detectores.hallazgos import INCIDENCIAS, PREDICADO_DE, TIPOS_RELACION
from applications.lenguaje.errores import GeoScriptError
from applications.lenguaje.nodos import Igualdad, Llamada
from applications.lenguaje.parser import parse
from applications.nucleo.conf import settings

ESQUEMA = Path(__file__).resolve().parent / 'schema' / 'manifest.schema.json'
MANIFIESTO = 'manifest.json'

FORMULA = 'formula'
INCIDENCIA = 'incidence'
RELACION = 'relation'
RESTRINGIDA = 'constrained'
ESTADOS = (FORMULA, INCIDENCIA, RELACION, RESTRINGIDA)


@dataclass(frozen=True)
class EntradaCorpus:
    id: str
    archivo: str
    estado: str
    tipo: str
    script: object
    fuente: str = ''
    procedencia: str = ''
    opcional: bool = False

    @property
    def restringida(self):
        return bool(self.script.restricciones)


def _coincide(tipo, afirmacion):
    claim = afirmacion.afirmacion
    if tipo in INCIDENCIAS:
        return isinstance(claim, Llamada) and claim.funcion == PREDICADO_DE[tipo]
    return isinstance(claim, Igualdad)


def validar_entrada(entrada):
    """Comprueba estado, tipo y que alguna afirmación sea de la relación esperada."""
    if entrada.estado not in ESTADOS:
        raise ValueError(f'{entrada.id}: estado desconocido {entrada.estado!r}')
    if entrada.tipo not in TIPOS_RELACION:
        raise ValueError(f'{entrada.id}: tipo de relación desconocido {entrada.tipo!r}')
    afirmaciones = entrada.script.afirmaciones
    if not afirmaciones:
        raise ValueError(f'{entrada.id}: el script no tiene afirmaciones')
    if not any(_coincide(entrada.tipo, a) for a in afirmaciones):
        raise ValueError(f'{entrada.id}: ninguna afirmación corresponde a {entrada.tipo}')
    if entrada.estado == RESTRINGIDA and not entrada.restringida:
        raise ValueError(f'{entrada.id}: marcada {RESTRINGIDA} pero el script no tiene restricciones')


def leer_manifiesto(directorio):
    with open(Path(directorio) / MANIFIESTO, encoding='utf-8') as f:
        datos = json.load(f)
    with open(ESQUEMA, encoding='utf-8') as f:
        esquema = json.load(f)
    try:
        jsonschema.validate(instance=datos, schema=esquema)
    except jsonschema.ValidationError as e:
        raise ValueError(f'manifiesto inválido: {e.message}') from e
    return datos


def cargar(directorio=None, solo=None):
    """
    Entradas del corpus en el orden del manifiesto. `solo` restringe a un
    conjunto de ids. Un script que no parsea es un ValueError con el archivo y
    la posición.
    """
    directorio = Path(directorio or settings.GEX_CORPUS_DIR)
    datos = leer_manifiesto(directorio)
    vistos, entradas = set(), []
    for ficha in datos['entries']:
        if ficha['id'] in vistos:
            raise ValueError(f'id repetido en el manifiesto: {ficha["id"]}')
        vistos.add(ficha['id'])
        if solo and ficha['id'] not in solo:
            continue
        ruta = directorio / ficha['file']
        fuente = ruta.read_text(encoding='utf-8')
        try:
            script = parse(fuente)
        except GeoScriptError as e:
            raise ValueError(f'{ficha["file"]}:{e}') from e
        entrada = EntradaCorpus(
            id=ficha['id'], archivo=ficha['file'], estado=ficha['status'], tipo=ficha['kind'],
            script=script, fuente=fuente, procedencia=ficha.get('provenance', ''),
            opcional=ficha.get('optional', False),
        )
        validar_entrada(entrada)
        entradas.append(entrada)
    if solo:
        faltantes = set(solo) - vistos
        if faltantes:
            raise ValueError(f'ids inexistentes: {", ".join(sorted(faltantes))}')
    return entradas
