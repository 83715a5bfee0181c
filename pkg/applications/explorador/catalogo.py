# applications/explorador/catalogo.py

"""
Catálogo de propiedades encontradas por el explorador.

El formato serializado (JSON) usa claves en inglés porque es el formato
publicado del catálogo; se valida contra `schema/catalogo.schema.json`. Los
residuos se escriben como la representación decimal más corta de su float.
"""

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import jsonschema

ESQUEMA = Path(__file__).resolve().parent / 'schema' / 'catalogo.schema.json'


def _decimal(valor):
    if valor is None:
        return None
    valor = float(valor)
    return repr(valor) if math.isfinite(valor) else None


@dataclass(frozen=True)
class Registro:
    pasos: tuple
    relacion: object
    evidencia: object

    @property
    def trivial(self):
        return self.evidencia.trivial

    def firma(self):
        return (self.pasos, self.relacion.firma())

    def a_dict(self, configuracion, restricciones):
        e = self.evidencia
        return {
            'config': configuracion,
            'constraints': restricciones,
            'steps': list(self.pasos),
            'relation': {
                'kind': self.relacion.tipo,
                'operands': list(self.relacion.operandos),
                'coefficients': list(self.relacion.coeficientes),
                'assertion': self.relacion.afirmacion(),
            },
            'evidence': {
                'samples': e.muestras,
                'max_residual_fast': _decimal(e.residuo_rapido),
                'max_residual_confirm': _decimal(e.residuo_confirmacion),
                'negative_control_residual': _decimal(e.residuo_control),
                'unconstrained_residual': _decimal(e.residuo_sin_restricciones),
            },
            'trivial': bool(self.trivial),
        }


@dataclass
class Catalogo:
    configuracion: str
    restricciones: str = ''
    profundidad: int = 0
    semilla: int = 0
    menu: str = ''
    # script de la configuración inicial con sus restricciones
    fuente: str = ''
    muestras: int = 0
    muestras_confirmacion: int = 0
    registros: list = field(default_factory=list)
    omisiones: list = field(default_factory=list)
    secuencias: int = 0
    indice: dict = field(default_factory=dict, repr=False)

    def agregar(self, registro):
        """Agrega un registro salvo que su firma (pasos, relación) ya esté."""
        firma = registro.firma()
        if firma in self.indice:
            return False
        self.indice[firma] = len(self.registros)
        self.registros.append(registro)
        return True

    def fusionar(self, resultado):
        self.secuencias += 1
        if resultado.omision is not None:
            self.omisiones.append(resultado.omision)
            return
        for hallazgo in resultado.hallazgos:
            self.agregar(Registro(resultado.pasos, hallazgo.relacion, hallazgo.evidencia))

    @property
    def no_triviales(self):
        return [r for r in self.registros if not r.trivial]

    @property
    def triviales(self):
        return [r for r in self.registros if r.trivial]

    def relaciones(self, incluir_triviales=False):
        """Conjunto de firmas de relación, sin importar en qué secuencia aparecieron."""
        return {r.relacion.firma() for r in self.registros if incluir_triviales or not r.trivial}

    def buscar(self, tipo, operandos):
        operandos = set(operandos)
        return [r for r in self.registros if r.relacion.tipo == tipo and set(r.relacion.operandos) == operandos]

    # --- serialización -----------------------------------------------------------------

    def a_dict(self):
        return {
            'config': self.configuracion,
            'constraints': self.restricciones,
            'depth': self.profundidad,
            'seed': self.semilla,
            'menu': self.menu,
            'samples': {'detect': self.muestras, 'confirm': self.muestras_confirmacion},
            'summary': {
                'sequences': self.secuencias,
                'skipped': len(self.omisiones),
                'relations': len(self.no_triviales),
                'trivial': len(self.triviales),
            },
            'entries': [r.a_dict(self.configuracion, self.restricciones) for r in self.registros],
            'skips': [{'steps': list(o.pasos), 'reason': o.motivo} for o in self.omisiones],
        }

    def a_json(self):
        return json.dumps(self.a_dict(), indent=2, ensure_ascii=False) + '\n'

    def validar(self):
        validar_json(self.a_dict())

    def escribir(self, ruta):
        with open(ruta, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.a_json())

    def guardar(self, nombre=''):
        """Persiste el catálogo como una Exploracion con sus entradas."""
        from .models import Exploracion
        return Exploracion.desde_catalogo(self, nombre=nombre)


def validar_json(datos):
    with open(ESQUEMA, encoding='utf-8') as f:
        esquema = json.load(f)
    try:
        jsonschema.validate(instance=datos, schema=esquema)
    except jsonschema.ValidationError as e:
        raise ValueError(f'catálogo inválido: {e.message}') from e
